#pragma once

#include <string>
#include <vector>

#include "gmstab/matrix.hpp"
#include "gmstab/perm.hpp"
#include "gmstab/sigma_module.hpp"

namespace gms {

// A consistent sequence of vector spaces V_0, ..., V_{n_max} over a field,
// with insertion maps, last-slot deletion maps, and symmetric group actions:
// a truncated functor on finite sets and partial injections, presented on the
// generating morphisms.
class FISharpModule {
public:
    FISharpModule(FieldSpec field, std::vector<int> dims, std::vector<QMat> iota,
                  std::vector<QMat> deletion, std::vector<std::vector<QMat>> perm_gens);

    const FieldSpec& field() const { return field_; }
    int n_max() const { return static_cast<int>(dims_.size()) - 1; }
    int dim(int n) const { return dims_.at(n); }

    // Insertion V_n -> V_{n+1}, defined for 0 <= n < n_max.
    const QMat& iota(int n) const { return iota_.at(n); }

    // Deletion of the last slot, V_n -> V_{n-1}, defined for 1 <= n <= n_max.
    const QMat& deletion(int n) const { return del_.at(n - 1); }

    // Action matrices of the adjacent transpositions (i, i+1) on V_n.
    const std::vector<QMat>& perm_gens(int n) const { return gens_.at(n); }

    // Action of an arbitrary permutation, by adjacent-transposition words.
    QMat act(int n, const Perm& sigma) const;

    bool is_zero() const;

    // Checks the categorical relations on the generating morphisms, where
    // composable within the truncation: deletion of the freshly inserted slot
    // is the identity, insertion is equivariant for the block inclusion of
    // symmetric groups, deletion is equivariant for permutations fixing the
    // last slot, and the transposition generators satisfy the Coxeter
    // relations.  Throws on any failure.
    void validate() const;

private:
    FieldSpec field_;
    std::vector<int> dims_;
    std::vector<QMat> iota_;               // iota_[n]: V_n -> V_{n+1}
    std::vector<QMat> del_;                // del_[n]: V_{n+1} -> V_n
    std::vector<std::vector<QMat>> gens_;  // gens_[n][i]: (i, i+1) on V_n
};

// The sequence n -> H_q(Z^n x Y) for graded Betti tables z, y with b_0 = 1:
// insertion adds the degree-0 unit class in a new last Z slot, deletion
// projects the last Z slot onto its degree-0 component, permutations act on
// the Kunneth basis with Koszul signs.
FISharpModule make_TZYq(const GradedBettiTable& z, const GradedBettiTable& y, int q,
                        FieldSpec field, int n_max);

// The shifted-cokernel sequence n -> coker(iota_n: T(n) -> T(n+1)), with the
// structure maps induced on the quotients.  Truncation drops by one.
FISharpModule delta(const FISharpModule& t);

// Outcome of checking that the (d+1)-fold shifted cokernel vanishes on the
// range still visible after truncation.
struct DegreeCertificate {
    enum class Status { Verified, Refuted, Inconclusive };

    int claimed_bound = 0;
    Status status = Status::Inconclusive;
    int verified_range = -1;  // max n where the vanishing was actually checked
    int witness_n = -1;       // refuted: smallest n with a nonzero value
    int witness_dim = 0;      // refuted: its dimension

    std::string status_name() const;
};

// Checks whether the sequence has degree <= d, for d >= -1 (the zero sequence
// has degree -1).  Inconclusive when the truncation is too short to apply the
// operator d+1 times.
DegreeCertificate degree_bound(const FISharpModule& t, int d);

}  // namespace gms
