#include "gmstab/matrix.hpp"

namespace gms {

void QMat::add_block(int i0, int j0, const QMat& b, const mpq_class& s) {
    if (s == 0) return;
    for (int i = 0; i < b.nrows(); ++i)
        for (const auto& [j, v] : b.row(i)) add(i0 + i, j0 + j, v * s);
}

bool QMat::is_integral() const {
    for (const auto& r : rows_)
        for (const auto& [j, v] : r)
            if (v.get_den() != 1) return false;
    return true;
}

QMat QMat::operator*(const QMat& o) const {
    if (ncols_ != o.nrows_) throw std::invalid_argument("QMat multiply: shape mismatch");
    QMat out(nrows_, o.ncols_);
    for (int i = 0; i < nrows_; ++i) {
        std::map<int, mpq_class> acc;
        for (const auto& [k, v] : rows_[i])
            for (const auto& [j, w] : o.rows_[k]) {
                auto it = acc.find(j);
                if (it == acc.end())
                    acc[j] = v * w;
                else
                    it->second += v * w;
            }
        for (auto& [j, v] : acc)
            if (v != 0) out.rows_[i][j] = std::move(v);
    }
    return out;
}

QMat QMat::operator+(const QMat& o) const {
    if (nrows_ != o.nrows_ || ncols_ != o.ncols_) throw std::invalid_argument("QMat add: shape mismatch");
    QMat out = *this;
    for (int i = 0; i < nrows_; ++i)
        for (const auto& [j, v] : o.rows_[i]) out.add(i, j, v);
    return out;
}

QMat QMat::operator-(const QMat& o) const {
    if (nrows_ != o.nrows_ || ncols_ != o.ncols_) throw std::invalid_argument("QMat sub: shape mismatch");
    QMat out = *this;
    for (int i = 0; i < nrows_; ++i)
        for (const auto& [j, v] : o.rows_[i]) out.add(i, j, -v);
    return out;
}

QMat QMat::scaled(const mpq_class& s) const {
    QMat out(nrows_, ncols_);
    if (s == 0) return out;
    for (int i = 0; i < nrows_; ++i)
        for (const auto& [j, v] : rows_[i]) out.rows_[i][j] = v * s;
    return out;
}

QMat QMat::transposed() const {
    QMat out(ncols_, nrows_);
    for (int i = 0; i < nrows_; ++i)
        for (const auto& [j, v] : rows_[i]) out.rows_[j][i] = v;
    return out;
}

bool QMat::operator==(const QMat& o) const {
    return nrows_ == o.nrows_ && ncols_ == o.ncols_ && rows_ == o.rows_;
}

QMat QMat::hconcat(const QMat& o) const {
    if (nrows_ != o.nrows_) throw std::invalid_argument("QMat hconcat: row mismatch");
    QMat out(nrows_, ncols_ + o.ncols_);
    for (int i = 0; i < nrows_; ++i) {
        out.rows_[i] = rows_[i];
        for (const auto& [j, v] : o.rows_[i]) out.rows_[i][ncols_ + j] = v;
    }
    return out;
}

ZMat ZMat::from_dense(const std::vector<std::vector<long>>& d) {
    int nr = static_cast<int>(d.size());
    int nc = nr == 0 ? 0 : static_cast<int>(d[0].size());
    ZMat m(nr, nc);
    for (int i = 0; i < nr; ++i) {
        if (static_cast<int>(d[i].size()) != nc) throw std::invalid_argument("ragged dense matrix");
        for (int j = 0; j < nc; ++j)
            if (d[i][j] != 0) m.rows_[i][j] = d[i][j];
    }
    return m;
}

ZMat ZMat::from_qmat(const QMat& q) {
    ZMat m(q.nrows(), q.ncols());
    for (int i = 0; i < q.nrows(); ++i)
        for (const auto& [j, v] : q.row(i)) {
            if (v.get_den() != 1) throw std::invalid_argument("matrix entry is not an integer");
            m.rows_[i][j] = v.get_num();
        }
    return m;
}

ZMat ZMat::operator*(const ZMat& o) const {
    if (ncols_ != o.nrows_) throw std::invalid_argument("ZMat multiply: shape mismatch");
    ZMat out(nrows_, o.ncols_);
    for (int i = 0; i < nrows_; ++i) {
        std::map<int, mpz_class> acc;
        for (const auto& [k, v] : rows_[i])
            for (const auto& [j, w] : o.rows_[k]) acc[j] += v * w;
        for (auto& [j, v] : acc)
            if (v != 0) out.rows_[i][j] = std::move(v);
    }
    return out;
}

bool ZMat::operator==(const ZMat& o) const {
    return nrows_ == o.nrows_ && ncols_ == o.ncols_ && rows_ == o.rows_;
}

QMat ZMat::to_qmat() const {
    QMat q(nrows_, ncols_);
    for (int i = 0; i < nrows_; ++i)
        for (const auto& [j, v] : rows_[i]) q.set(i, j, mpq_class(v));
    return q;
}

FpMat FpMat::from_qmat(const QMat& q, std::uint64_t p) {
    FpMat m(q.nrows(), q.ncols(), p);
    for (int i = 0; i < q.nrows(); ++i) {
        auto& r = m.rows_[i];
        for (const auto& [j, v] : q.row(i)) {
            std::uint64_t x = m.ops_.reduce(v);
            if (x) r.emplace_back(j, x);
        }
    }
    return m;
}

}  // namespace gms
