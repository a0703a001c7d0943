#include "gmstab/linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>

namespace gms {

namespace {

// Field abstractions for the shared echelon code.
struct QF {
    using E = mpq_class;
    bool is_zero(const E& a) const { return a == 0; }
    E neg(const E& a) const { return -a; }
    E mul(const E& a, const E& b) const { return a * b; }
    E sub_mul(const E& a, const E& c, const E& b) const { return a - c * b; }  // a - c*b
    E inv(const E& a) const { return 1 / a; }
};

struct PF {
    PrimeOps ops;
    using E = std::uint64_t;
    bool is_zero(E a) const { return a == 0; }
    E neg(E a) const { return ops.neg(a); }
    E mul(E a, E b) const { return ops.mul(a, b); }
    E sub_mul(E a, E c, E b) const { return ops.sub(a, ops.mul(c, b)); }
    E inv(E a) const { return ops.inv(a); }
};

template <class F>
struct Echelon {
    using E = typename F::E;
    using Row = std::vector<std::pair<int, E>>;

    const F& f;
    int ncols;
    std::vector<Row> pivot_rows;
    std::vector<int> pivot_col;         // parallel to pivot_rows
    std::map<int, int> col_to_pivot;    // pivot column -> index in pivot_rows

    Echelon(const F& field, int nc) : f(field), ncols(nc) {}

    // r -= c * p, both sorted by column.
    Row axpy(const Row& r, const E& c, const Row& p) const {
        Row out;
        out.reserve(r.size() + p.size());
        size_t i = 0, j = 0;
        while (i < r.size() || j < p.size()) {
            if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
                out.push_back(r[i++]);
            } else if (i == r.size() || p[j].first < r[i].first) {
                out.emplace_back(p[j].first, f.neg(f.mul(c, p[j].second)));
                ++j;
            } else {
                E v = f.sub_mul(r[i].second, c, p[j].second);
                if (!f.is_zero(v)) out.emplace_back(r[i].first, v);
                ++i;
                ++j;
            }
        }
        return out;
    }

    Row reduce(Row r) const {
        while (!r.empty()) {
            auto it = col_to_pivot.find(r.front().first);
            if (it == col_to_pivot.end()) break;
            r = axpy(r, r.front().second, pivot_rows[it->second]);
        }
        return r;
    }

    // Returns true if the row added a new pivot.
    bool insert(Row r) {
        r = reduce(std::move(r));
        if (r.empty()) return false;
        E lead_inv = f.inv(r.front().second);
        for (auto& [c, v] : r) v = f.mul(v, lead_inv);
        col_to_pivot[r.front().first] = static_cast<int>(pivot_rows.size());
        pivot_col.push_back(r.front().first);
        pivot_rows.push_back(std::move(r));
        return true;
    }

    int rank() const { return static_cast<int>(pivot_rows.size()); }

    // Back-substitution: make every pivot row zero in the other pivot columns.
    void full_reduce() {
        std::vector<int> order(pivot_rows.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
        std::sort(order.begin(), order.end(), [&](int a, int b) { return pivot_col[a] > pivot_col[b]; });
        for (int idx : order) {
            Row& r = pivot_rows[idx];
            bool again = true;
            while (again) {
                again = false;
                for (size_t k = 1; k < r.size(); ++k) {
                    auto it = col_to_pivot.find(r[k].first);
                    if (it != col_to_pivot.end()) {
                        r = axpy(r, r[k].second, pivot_rows[it->second]);
                        again = true;
                        break;
                    }
                }
            }
        }
    }
};

template <class F, class RowSource>
int rank_impl(const F& f, int nrows, int ncols, RowSource get_row) {
    Echelon<F> ech(f, ncols);
    // Shorter rows first keeps fill-in down on the complexes built here.
    std::vector<std::pair<size_t, int>> order;
    order.reserve(nrows);
    for (int i = 0; i < nrows; ++i) order.emplace_back(get_row(i).size(), i);
    std::sort(order.begin(), order.end());
    for (auto& [len, i] : order) {
        if (len == 0) continue;
        ech.insert(get_row(i));
    }
    return ech.rank();
}

std::vector<std::pair<int, mpq_class>> qrow(const QMat& a, int i) {
    std::vector<std::pair<int, mpq_class>> r;
    r.reserve(a.row(i).size());
    for (const auto& [j, v] : a.row(i)) r.emplace_back(j, v);
    return r;
}

template <class F>
QMat kernel_impl(const F& f, int nrows, int ncols,
                 const std::vector<std::vector<std::pair<int, typename F::E>>>& rows,
                 const std::function<mpq_class(const typename F::E&)>& lift) {
    Echelon<F> ech(f, ncols);
    for (const auto& r : rows)
        if (!r.empty()) ech.insert(r);
    ech.full_reduce();
    std::vector<char> is_pivot(ncols, 0);
    for (int c : ech.pivot_col) is_pivot[c] = 1;
    std::vector<int> free_cols;
    for (int c = 0; c < ncols; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    QMat k(ncols, static_cast<int>(free_cols.size()));
    for (size_t t = 0; t < free_cols.size(); ++t) {
        int fc = free_cols[t];
        k.set(fc, static_cast<int>(t), 1);
        for (size_t ri = 0; ri < ech.pivot_rows.size(); ++ri) {
            for (const auto& [c, v] : ech.pivot_rows[ri])
                if (c == fc) k.set(ech.pivot_col[ri], static_cast<int>(t), -lift(v));
        }
    }
    return k;
}

}  // namespace

int rank_over(const QMat& a, const FieldSpec& field) {
    if (field.is_rationals()) {
        QF f;
        return rank_impl(f, a.nrows(), a.ncols(), [&](int i) { return qrow(a, i); });
    }
    FpMat m = FpMat::from_qmat(a, field.p);
    PF f{m.ops()};
    return rank_impl(f, m.nrows(), m.ncols(), [&](int i) { return m.row(i); });
}

int rank_over(const QMat& a, const RingSpec& ring) {
    if (ring.is_integers()) return rank_over(a, FieldSpec::rationals());
    return rank_over(a, ring.field);
}

QMat kernel_basis(const QMat& a, const FieldSpec& field) {
    if (field.is_rationals()) {
        QF f;
        std::vector<std::vector<std::pair<int, mpq_class>>> rows;
        rows.reserve(a.nrows());
        for (int i = 0; i < a.nrows(); ++i) rows.push_back(qrow(a, i));
        return kernel_impl<QF>(f, a.nrows(), a.ncols(), rows,
                               [](const mpq_class& v) { return v; });
    }
    FpMat m = FpMat::from_qmat(a, field.p);
    PF f{m.ops()};
    std::vector<std::vector<std::pair<int, std::uint64_t>>> rows;
    rows.reserve(m.nrows());
    for (int i = 0; i < m.nrows(); ++i) rows.push_back(m.row(i));
    return kernel_impl<PF>(f, m.nrows(), m.ncols(), rows,
                           [](const std::uint64_t& v) { return mpq_class(static_cast<unsigned long>(v)); });
}

int rank_added(const QMat& a, const QMat& b, const FieldSpec& field) {
    return rank_over(b.hconcat(a), field) - rank_over(b, field);
}

namespace {

template <class F>
QMat rref_impl(const F& f, int ncols,
               std::vector<std::vector<std::pair<int, typename F::E>>> rows,
               const std::function<mpq_class(const typename F::E&)>& lift,
               std::vector<int>* pivot_cols) {
    Echelon<F> ech(f, ncols);
    for (auto& r : rows)
        if (!r.empty()) ech.insert(std::move(r));
    ech.full_reduce();
    std::vector<int> order(ech.pivot_rows.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return ech.pivot_col[a] < ech.pivot_col[b]; });
    QMat out(ech.rank(), ncols);
    for (size_t t = 0; t < order.size(); ++t) {
        for (const auto& [c, v] : ech.pivot_rows[order[t]]) out.set(static_cast<int>(t), c, lift(v));
        if (pivot_cols) pivot_cols->push_back(ech.pivot_col[order[t]]);
    }
    return out;
}

}  // namespace

QMat rref(const QMat& a, const FieldSpec& field, std::vector<int>* pivot_cols) {
    if (field.is_rationals()) {
        QF f;
        std::vector<std::vector<std::pair<int, mpq_class>>> rows;
        rows.reserve(a.nrows());
        for (int i = 0; i < a.nrows(); ++i) rows.push_back(qrow(a, i));
        return rref_impl<QF>(f, a.ncols(), std::move(rows),
                             [](const mpq_class& v) { return v; }, pivot_cols);
    }
    FpMat m = FpMat::from_qmat(a, field.p);
    PF f{m.ops()};
    std::vector<std::vector<std::pair<int, std::uint64_t>>> rows;
    rows.reserve(m.nrows());
    for (int i = 0; i < m.nrows(); ++i) rows.push_back(m.row(i));
    return rref_impl<PF>(f, m.ncols(), std::move(rows),
                         [](const std::uint64_t& v) { return mpq_class(static_cast<unsigned long>(v)); },
                         pivot_cols);
}

CokernelMaps cokernel_maps(const QMat& a, const FieldSpec& field) {
    int m = a.nrows();
    // Row basis b of the column space, in reduced form: b[p] has a leading 1
    // in pivot coordinate P[p] and zeros in the other pivot coordinates.
    std::vector<int> piv;
    QMat b = rref(a.transposed(), field, &piv);
    int r = b.nrows();
    std::vector<char> is_piv(m, 0);
    for (int p : piv) is_piv[p] = 1;
    std::vector<int> comp;
    for (int j = 0; j < m; ++j)
        if (!is_piv[j]) comp.push_back(j);
    // v decomposes as sum_p v_{P[p]} b[p] + sum_{j in comp} c_j e_j, so the
    // quotient coordinate c_j reads off as v_j - sum_p b[p][j] v_{P[p]}.
    CokernelMaps out;
    out.proj = QMat(static_cast<int>(comp.size()), m);
    out.section = QMat(m, static_cast<int>(comp.size()));
    for (size_t t = 0; t < comp.size(); ++t) {
        int j = comp[t];
        out.proj.set(static_cast<int>(t), j, 1);
        for (int p = 0; p < r; ++p) {
            mpq_class v = b.get(p, j);
            if (v != 0) out.proj.set(static_cast<int>(t), piv[p], -v);
        }
        out.section.set(j, static_cast<int>(t), 1);
    }
    return out;
}

namespace {

// Sparse working state for the Smith reduction, with transform tracking.
struct SmithWork {
    int m, n;
    std::vector<std::map<int, mpz_class>> w;
    std::vector<std::set<int>> cols;  // cols[j] = rows with nonzero entry in column j
    bool track;
    std::vector<std::map<int, mpz_class>> u;  // row transform, m x m
    std::vector<std::map<int, mpz_class>> v;  // column transform, n x n (stored by rows)

    explicit SmithWork(const ZMat& a, bool with_transforms)
        : m(a.nrows()), n(a.ncols()), w(m), cols(n), track(with_transforms), u(m), v(n) {
        for (int i = 0; i < m; ++i)
            for (const auto& [j, val] : a.row(i)) {
                w[i][j] = val;
                cols[j].insert(i);
            }
        if (track) {
            for (int i = 0; i < m; ++i) u[i][i] = 1;
            for (int j = 0; j < n; ++j) v[j][j] = 1;
        }
    }

    void set_entry(int i, int j, const mpz_class& val) {
        if (val == 0) {
            w[i].erase(j);
            cols[j].erase(i);
        } else {
            w[i][j] = val;
            cols[j].insert(i);
        }
    }

    // Non-inserting read; operator[] on the maps would plant stored zeros and
    // desynchronize the column index.
    mpz_class at(int i, int j) const {
        auto it = w[i].find(j);
        return it == w[i].end() ? mpz_class(0) : it->second;
    }

    // row i += c * row t
    void row_axpy(int i, int t, const mpz_class& c) {
        if (c == 0) return;
        std::vector<std::pair<int, mpz_class>> updates(w[t].begin(), w[t].end());
        for (const auto& [j, val] : updates) {
            mpz_class nv = (w[i].count(j) ? w[i][j] : mpz_class(0)) + c * val;
            set_entry(i, j, nv);
        }
        if (track)
            for (const auto& [j, val] : u[t]) {
                mpz_class nv = (u[i].count(j) ? u[i][j] : mpz_class(0)) + c * val;
                if (nv == 0)
                    u[i].erase(j);
                else
                    u[i][j] = nv;
            }
    }

    // col j += c * col s
    void col_axpy(int j, int s, const mpz_class& c) {
        if (c == 0) return;
        std::vector<int> rows_s(cols[s].begin(), cols[s].end());
        for (int i : rows_s) {
            mpz_class nv = (w[i].count(j) ? w[i][j] : mpz_class(0)) + c * w[i][s];
            set_entry(i, j, nv);
        }
        if (track)
            for (int r = 0; r < n; ++r) {
                auto it = v[r].find(s);
                if (it == v[r].end()) continue;
                mpz_class nv = (v[r].count(j) ? v[r][j] : mpz_class(0)) + c * it->second;
                if (nv == 0)
                    v[r].erase(j);
                else
                    v[r][j] = nv;
            }
    }

    void row_swap(int i, int t) {
        if (i == t) return;
        std::set<int> affected;
        for (const auto& [j, _] : w[i]) affected.insert(j);
        for (const auto& [j, _] : w[t]) affected.insert(j);
        std::swap(w[i], w[t]);
        for (int j : affected) {
            cols[j].erase(i);
            cols[j].erase(t);
            if (w[i].count(j)) cols[j].insert(i);
            if (w[t].count(j)) cols[j].insert(t);
        }
        if (track) std::swap(u[i], u[t]);
    }

    void col_swap(int j, int s) {
        if (j == s) return;
        std::set<int> affected(cols[j].begin(), cols[j].end());
        for (int i : cols[s]) affected.insert(i);
        for (int i : affected) {
            mpz_class a = w[i].count(j) ? w[i][j] : mpz_class(0);
            mpz_class b = w[i].count(s) ? w[i][s] : mpz_class(0);
            set_entry(i, j, b);
            set_entry(i, s, a);
        }
        if (track)
            for (int r = 0; r < n; ++r) {
                mpz_class a = v[r].count(j) ? v[r][j] : mpz_class(0);
                mpz_class b = v[r].count(s) ? v[r][s] : mpz_class(0);
                if (b == 0) v[r].erase(j); else v[r][j] = b;
                if (a == 0) v[r].erase(s); else v[r][s] = a;
            }
    }

    void row_negate(int i) {
        for (auto& [j, val] : w[i]) val = -val;
        if (track)
            for (auto& [j, val] : u[i]) val = -val;
    }
};

// Nearest-integer quotient: a - q*b has absolute value <= |b|/2.  Floor
// division leaves a remainder with the sign of b, so bumping q by one always
// replaces r by r - b, of magnitude |b| - |r|.
mpz_class nearest_quotient(const mpz_class& a, const mpz_class& b) {
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (2 * abs(r) > abs(b)) q += 1;
    return q;
}

}  // namespace

SmithResult smith_normal_form(const ZMat& a, bool with_transforms) {
    SmithWork ws(a, with_transforms);
    int m = ws.m, n = ws.n;
    int steps = std::min(m, n);

    for (int t = 0; t < steps; ++t) {
        // Pivot choice: minimal absolute value in the active region, ties
        // broken by smaller Markowitz fill product.
        int pi = -1, pj = -1;
        mpz_class best;
        long best_fill = 0;
        for (int i = t; i < m; ++i)
            for (const auto& [j, val] : ws.w[i]) {
                if (j < t) continue;
                mpz_class av = abs(val);
                long rl = 0;
                for (const auto& [jj, _] : ws.w[i])
                    if (jj >= t) ++rl;
                long cl = 0;
                for (int ii : ws.cols[j])
                    if (ii >= t) ++cl;
                long fill = (rl - 1) * (cl - 1);
                if (pi < 0 || av < best || (av == best && fill < best_fill)) {
                    pi = i;
                    pj = j;
                    best = av;
                    best_fill = fill;
                }
            }
        if (pi < 0) break;  // active region is zero
        ws.row_swap(t, pi);
        ws.col_swap(t, pj);

        for (;;) {
            // Clear column t below/above the pivot.
            bool dirty = true;
            while (dirty) {
                dirty = false;
                std::vector<int> rows_t(ws.cols[t].begin(), ws.cols[t].end());
                for (int i : rows_t) {
                    if (i <= t) continue;
                    mpz_class cur = ws.at(i, t);
                    if (cur == 0) continue;  // stale index from an earlier swap
                    mpz_class q = nearest_quotient(cur, ws.at(t, t));
                    ws.row_axpy(i, t, -q);
                    if (ws.w[i].count(t)) {  // nonzero remainder: smaller pivot found
                        ws.row_swap(t, i);
                        dirty = true;
                    }
                }
                std::vector<int> cols_t;
                for (const auto& [j, val] : ws.w[t])
                    if (j > t) cols_t.push_back(j);
                for (int j : cols_t) {
                    mpz_class cur = ws.at(t, j);
                    if (cur == 0) continue;
                    mpz_class q = nearest_quotient(cur, ws.at(t, t));
                    ws.col_axpy(j, t, -q);
                    if (ws.w[t].count(j)) {
                        ws.col_swap(t, j);
                        dirty = true;
                    }
                }
            }
            // Divisibility sweep: the pivot must divide the whole active region.
            mpz_class pivot = ws.at(t, t);
            int bad_row = -1;
            for (int i = t + 1; i < m && bad_row < 0; ++i)
                for (const auto& [j, val] : ws.w[i]) {
                    if (j <= t) continue;
                    if (val % pivot != 0) {
                        bad_row = i;
                        break;
                    }
                }
            if (bad_row < 0) break;
            ws.row_axpy(t, bad_row, 1);
        }
        if (ws.at(t, t) < 0) ws.row_negate(t);
    }

    SmithResult res;
    res.d = ZMat(m, n);
    for (int i = 0; i < m; ++i)
        for (const auto& [j, val] : ws.w[i]) res.d.set(i, j, val);
    res.diagonal.resize(steps, 0);
    for (int t = 0; t < steps; ++t) res.diagonal[t] = res.d.get(t, t);
    if (with_transforms) {
        res.u = ZMat(m, m);
        res.v = ZMat(n, n);
        for (int i = 0; i < m; ++i)
            for (const auto& [j, val] : ws.u[i]) res.u.set(i, j, val);
        for (int i = 0; i < n; ++i)
            for (const auto& [j, val] : ws.v[i]) res.v.set(i, j, val);
    }
    return res;
}

std::vector<mpz_class> smith_diagonal(const ZMat& a) {
    return smith_normal_form(a, false).diagonal;
}

mpq_class determinant(const QMat& a) {
    if (a.nrows() != a.ncols()) throw std::invalid_argument("determinant: matrix not square");
    int n = a.nrows();
    std::vector<std::vector<mpq_class>> d(n, std::vector<mpq_class>(n, 0));
    for (int i = 0; i < n; ++i)
        for (const auto& [j, v] : a.row(i)) d[i][j] = v;
    mpq_class det = 1;
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = c; i < n; ++i)
            if (d[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) return 0;
        if (piv != c) {
            std::swap(d[piv], d[c]);
            det = -det;
        }
        det *= d[c][c];
        mpq_class inv = 1 / d[c][c];
        for (int i = c + 1; i < n; ++i) {
            if (d[i][c] == 0) continue;
            mpq_class f = d[i][c] * inv;
            for (int j = c; j < n; ++j) d[i][j] -= f * d[c][j];
        }
    }
    return det;
}

}  // namespace gms
