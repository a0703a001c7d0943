#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "gmstab/field.hpp"

namespace gms {

// Sparse matrix over Q, row-major.  Only nonzero entries are stored; all
// stored values are nonzero and canonicalized.
class QMat {
public:
    QMat() = default;
    QMat(int nrows, int ncols) : nrows_(nrows), ncols_(ncols), rows_(nrows) {
        if (nrows < 0 || ncols < 0) throw std::invalid_argument("QMat: negative size");
    }

    static QMat identity(int n) {
        QMat m(n, n);
        for (int i = 0; i < n; ++i) m.rows_[i][i] = 1;
        return m;
    }

    int nrows() const { return nrows_; }
    int ncols() const { return ncols_; }

    const std::map<int, mpq_class>& row(int i) const { return rows_[i]; }

    mpq_class get(int i, int j) const {
        check_index(i, j);
        auto it = rows_[i].find(j);
        return it == rows_[i].end() ? mpq_class(0) : it->second;
    }

    void set(int i, int j, const mpq_class& v) {
        check_index(i, j);
        if (v == 0)
            rows_[i].erase(j);
        else
            rows_[i][j] = v;
    }

    void add(int i, int j, const mpq_class& v) {
        check_index(i, j);
        auto it = rows_[i].find(j);
        if (it == rows_[i].end()) {
            if (v != 0) rows_[i][j] = v;
        } else {
            it->second += v;
            if (it->second == 0) rows_[i].erase(it);
        }
    }

    // Adds b as a block with top-left corner (i0, j0), scaled by s.
    void add_block(int i0, int j0, const QMat& b, const mpq_class& s = 1);

    std::size_t nnz() const {
        std::size_t t = 0;
        for (const auto& r : rows_) t += r.size();
        return t;
    }
    bool is_zero() const { return nnz() == 0; }

    bool is_integral() const;

    QMat operator*(const QMat& o) const;
    QMat operator+(const QMat& o) const;
    QMat operator-(const QMat& o) const;
    QMat scaled(const mpq_class& s) const;
    QMat transposed() const;

    bool operator==(const QMat& o) const;

    // Columns of o appended to the right.
    QMat hconcat(const QMat& o) const;

private:
    int nrows_ = 0, ncols_ = 0;
    std::vector<std::map<int, mpq_class>> rows_;

    void check_index(int i, int j) const {
        if (i < 0 || i >= nrows_ || j < 0 || j >= ncols_) throw std::out_of_range("QMat index");
    }
};

// Sparse integer matrix, row-major, exact arbitrary-precision entries.
class ZMat {
public:
    ZMat() = default;
    ZMat(int nrows, int ncols) : nrows_(nrows), ncols_(ncols), rows_(nrows) {
        if (nrows < 0 || ncols < 0) throw std::invalid_argument("ZMat: negative size");
    }

    static ZMat identity(int n) {
        ZMat m(n, n);
        for (int i = 0; i < n; ++i) m.rows_[i][i] = 1;
        return m;
    }

    static ZMat from_dense(const std::vector<std::vector<long>>& d);
    static ZMat from_qmat(const QMat& q);  // throws if q has non-integral entries

    int nrows() const { return nrows_; }
    int ncols() const { return ncols_; }
    const std::map<int, mpz_class>& row(int i) const { return rows_[i]; }

    mpz_class get(int i, int j) const {
        check_index(i, j);
        auto it = rows_[i].find(j);
        return it == rows_[i].end() ? mpz_class(0) : it->second;
    }

    void set(int i, int j, const mpz_class& v) {
        check_index(i, j);
        if (v == 0)
            rows_[i].erase(j);
        else
            rows_[i][j] = v;
    }

    std::size_t nnz() const {
        std::size_t t = 0;
        for (const auto& r : rows_) t += r.size();
        return t;
    }
    bool is_zero() const { return nnz() == 0; }

    ZMat operator*(const ZMat& o) const;
    bool operator==(const ZMat& o) const;
    QMat to_qmat() const;

private:
    int nrows_ = 0, ncols_ = 0;
    std::vector<std::map<int, mpz_class>> rows_;

    void check_index(int i, int j) const {
        if (i < 0 || i >= nrows_ || j < 0 || j >= ncols_) throw std::out_of_range("ZMat index");
    }
};

// Sparse matrix over F_p with sorted rows of (column, residue) pairs.
class FpMat {
public:
    FpMat() = default;
    FpMat(int nrows, int ncols, std::uint64_t p) : nrows_(nrows), ncols_(ncols), ops_{p}, rows_(nrows) {}

    static FpMat from_qmat(const QMat& q, std::uint64_t p);

    int nrows() const { return nrows_; }
    int ncols() const { return ncols_; }
    std::uint64_t modulus() const { return ops_.p; }
    const PrimeOps& ops() const { return ops_; }

    const std::vector<std::pair<int, std::uint64_t>>& row(int i) const { return rows_[i]; }
    std::vector<std::pair<int, std::uint64_t>>& row(int i) { return rows_[i]; }

private:
    int nrows_ = 0, ncols_ = 0;
    PrimeOps ops_{0};
    std::vector<std::vector<std::pair<int, std::uint64_t>>> rows_;
};

}  // namespace gms
