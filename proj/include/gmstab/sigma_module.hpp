#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "gmstab/matrix.hpp"
#include "gmstab/perm.hpp"

namespace gms {

// Betti numbers of a graded vector space, indexed by degree.
struct GradedBettiTable {
    std::vector<int> betti;

    GradedBettiTable() = default;
    explicit GradedBettiTable(std::vector<int> b) : betti(std::move(b)) {}

    int top() const { return static_cast<int>(betti.size()) - 1; }
    int dim(int d) const { return d < 0 || d > top() ? 0 : betti[d]; }
    int total() const {
        int t = 0;
        for (int b : betti) t += b;
        return t;
    }
    bool operator==(const GradedBettiTable& o) const { return betti == o.betti; }
};

// Basis of H_q(X_1 x ... x X_m x Y) via the Kunneth formula, for factors given
// by Betti tables.  Basis elements are tuples of per-factor classes
// (degree, index), listed in lexicographic order, with the Y class last.
// Permutations of equal factors act with the Koszul sign: one factor of -1 for
// every inversion between two odd-degree classes.
class KunnethBasis {
public:
    using Class = std::pair<int, int>;   // (degree, index within that degree)
    using Tuple = std::vector<Class>;    // length m + 1 if Y present, else m

    KunnethBasis(std::vector<GradedBettiTable> factors, std::optional<GradedBettiTable> y, int q);

    int num_factors() const { return static_cast<int>(factors_.size()); }
    bool has_y() const { return y_.has_value(); }
    int q() const { return q_; }
    int dim() const { return static_cast<int>(tuples_.size()); }
    const Tuple& tuple(int i) const { return tuples_[i]; }
    int index_of(const Tuple& t) const;

    // Image of basis element i under the permutation of the factor slots
    // (Y is fixed): returns (image index, sign).
    std::pair<int, int> image_of(const Perm& sigma, int i) const;

    // The action matrix of sigma on the whole basis.
    QMat action_matrix(const Perm& sigma) const;

private:
    std::vector<GradedBettiTable> factors_;
    std::optional<GradedBettiTable> y_;
    int q_;
    std::vector<Tuple> tuples_;
    std::map<Tuple, int> index_;
};

// A finite-dimensional representation of a subgroup G of S_n, stored through
// generator action matrices.  Arbitrary elements are evaluated on demand,
// either by a structural evaluator (signed permutation actions) or by closure
// over the generators.
class SigmaModule {
public:
    SigmaModule() = default;
    SigmaModule(SubgroupSpec group, RingSpec ring, int dim, std::vector<QMat> gen_action);

    const SubgroupSpec& group() const { return group_; }
    const RingSpec& ring() const { return ring_; }
    int dim() const { return dim_; }
    const std::vector<QMat>& gen_actions() const { return gen_action_; }

    // Action matrix of an arbitrary element of G.
    const QMat& act(const Perm& g) const;

    // Installs a direct evaluator (used by the structured constructors).
    void set_evaluator(std::function<QMat(const Perm&)> ev) { evaluator_ = std::move(ev); }

    // Checks that generator matrices are invertible and consistent under the
    // group relations (closure over words in the generators), and that the
    // evaluator, if any, matches the generator matrices.
    void validate() const;

private:
    SubgroupSpec group_;
    RingSpec ring_ = RingSpec::integers();
    int dim_ = 0;
    std::vector<QMat> gen_action_;
    std::function<QMat(const Perm&)> evaluator_;
    mutable std::map<std::vector<int>, QMat> cache_;

    const QMat& closure_lookup(const Perm& g) const;
    void build_closure() const;
};

// Rank-one trivial representation.
SigmaModule trivial_module(SubgroupSpec g, RingSpec ring);

// Rank-one sign representation (restriction of the S_n sign character).
SigmaModule sign_module(SubgroupSpec g, RingSpec ring);

// Coordinate permutation action of S_n on ring^n.
SigmaModule permutation_module(int n, RingSpec ring);

// H_q(Z^n) for a graded space Z with the given Betti table, as an S_n-module
// with the Koszul-signed factor permutation action.
SigmaModule graded_power_module(const GradedBettiTable& z, int n, int q, FieldSpec field);

// H_q(Z_{k_1} x ... x Z_{k_r} x (Z_c)^n x Y) as a module over
// Sigma_lambda x Sigma_n inside S_{r+n}: positions of equal weight in lambda
// may be exchanged, and the n weight-c slots carry the full symmetric group.
// Requires betti tables with b_0 = 1 for every factor that occurs.
SigmaModule fiber_module(const std::vector<long>& lambda, long c, int n,
                         const std::map<long, GradedBettiTable>& betti_per_charge,
                         const GradedBettiTable& y, int q, FieldSpec field);

// The underlying Kunneth basis of fiber_module, with the identical factor
// order (lambda slots, then the n weight-c slots, then Y) and validation.
KunnethBasis fiber_basis(const std::vector<long>& lambda, long c, int n,
                         const std::map<long, GradedBettiTable>& betti_per_charge,
                         const GradedBettiTable& y, int q);

// The Young subgroup Sigma_lambda x Sigma_n of S_{r+n} used by fiber_module.
SubgroupSpec fiber_group(const std::vector<long>& lambda, int n);

// Dimension of the G-invariant subspace, by the averaging projector.
// Errors if the coefficient characteristic divides |G|.
int invariants_dim(const SigmaModule& m);

}  // namespace gms
