#pragma once

#include <vector>

#include "gmstab/field.hpp"
#include "gmstab/matrix.hpp"

namespace gms {

// Rank over a field.  For matrices with rational entries interpreted in F_p,
// every denominator must be a unit mod p.
int rank_over(const QMat& a, const FieldSpec& field);

// Rank over the given coefficient ring; over Z this is the rank of the
// induced rational matrix.
int rank_over(const QMat& a, const RingSpec& ring);

// Basis of the right kernel {x : a x = 0} over the field, one column each.
QMat kernel_basis(const QMat& a, const FieldSpec& field);

// rank([a | b]) - rank(b): the dimension a's columns add on top of b's span.
int rank_added(const QMat& a, const QMat& b, const FieldSpec& field);

// Reduced row echelon form over the field.  Pivot columns, in row order, are
// appended to *pivot_cols when given.
QMat rref(const QMat& a, const FieldSpec& field, std::vector<int>* pivot_cols = nullptr);

// Presentation of coker(a) = target / im(a): proj is a surjection with kernel
// exactly im(a), section is a right inverse of proj picking complement
// coordinates, so proj * section = identity.
struct CokernelMaps {
    QMat proj;     // (m - rank) x m
    QMat section;  // m x (m - rank)
};

CokernelMaps cokernel_maps(const QMat& a, const FieldSpec& field);

// Smith normal form: d = u * a * v with u, v unimodular and the diagonal of d
// a nonnegative divisibility chain d1 | d2 | ... .  Pivoting picks a nonzero
// entry of minimal absolute value, breaking ties by the Markowitz product
// (row fill - 1) * (column fill - 1).
struct SmithResult {
    ZMat d, u, v;
    std::vector<mpz_class> diagonal;  // all diagonal entries up to min(nrows, ncols)
};

SmithResult smith_normal_form(const ZMat& a, bool with_transforms = true);

// Diagonal of the Smith form only (no transform bookkeeping).
std::vector<mpz_class> smith_diagonal(const ZMat& a);

// Exact determinant by fraction-free elimination; matrix must be square.
mpq_class determinant(const QMat& a);

}  // namespace gms
