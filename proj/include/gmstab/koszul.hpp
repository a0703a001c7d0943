#pragma once

#include <optional>
#include <vector>

#include "gmstab/arnold.hpp"
#include "gmstab/field.hpp"
#include "gmstab/matrix.hpp"
#include "gmstab/perm.hpp"
#include "gmstab/sigma_module.hpp"

namespace gms {

// Basis element of the torus-bundle cochain model: an admissible base
// monomial times an exterior product of odd generators, recorded as the
// sorted 1-based index subset.
struct KoszulBasisElt {
    ArnoldMono mono;
    std::vector<int> subset;

    bool operator<(const KoszulBasisElt& o) const {
        if (subset != o.subset) return subset < o.subset;
        return mono < o.mono;
    }
};

// Cochain model of the total space of the torus bundle weighted by lambda:
// the cohomology ring of the ordered configuration space of r points tensor
// an exterior algebra on t_1..t_r, with dt_j the weighted degree-2 class of
// the j-th circle factor.  The differential raises degree by 1 and squares
// to zero (checked on the built range at construction).
class KoszulModel {
public:
    // m_top < 0 builds every nonzero graded piece.
    explicit KoszulModel(std::vector<long> lambda, int m_top = -1);

    const std::vector<long>& lambda() const { return lambda_; }
    int r() const { return static_cast<int>(lambda_.size()); }
    int m_top() const { return m_top_; }
    int dim(int m) const {
        return m < 0 || m > m_top_ ? 0 : static_cast<int>(basis_[m].size());
    }
    const std::vector<KoszulBasisElt>& basis(int m) const { return basis_.at(m); }

    // Differential piece m -> piece m+1, valid for 0 <= m <= m_top(); the
    // matrix at the cap has zero rows and is only a placeholder there.
    const QMat& differential(int m) const;

    // Substitution action of sigma (0-based, size r) on piece m: base indices
    // move by the inverse, odd generators likewise with the sign of the sort.
    // A pullback, so composition reverses order.
    QMat action(const Perm& sigma, int m) const;

private:
    std::vector<long> lambda_;
    int m_top_ = 0;
    std::vector<std::vector<KoszulBasisElt>> basis_;
    std::vector<std::map<KoszulBasisElt, int>> index_;
    std::vector<QMat> diff_;  // diff_[m]: piece m -> piece m+1
    std::vector<ArnoldClass> euler_;  // per 1-based j, shifted by 1
};

// The symmetry group of the weight tuple: products of symmetric groups on
// equal-weight index classes (0-based, size r).
SubgroupSpec lambda_group(const std::vector<long>& lambda);

// The weight tuple extended by n unit-charge-c points.
std::vector<long> extend_weights(const std::vector<long>& lambda, long c, int n);

// Cohomology betti numbers of the model over a characteristic-0 field; when a
// group is supplied, betti of the invariant subcomplex (computed by averaging,
// hence the characteristic restriction).  Throws on positive characteristic.
GradedBettiTable koszul_cohomology(const std::vector<long>& lambda,
                                   const FieldSpec& field = FieldSpec::rationals(),
                                   const std::optional<SubgroupSpec>& invariants = std::nullopt);

// Same, but only degrees 0..m_max (building one piece beyond the cap).
std::vector<int> koszul_betti_range(const std::vector<long>& lambda, int m_max,
                                    const FieldSpec& field,
                                    const std::optional<SubgroupSpec>& invariants);

}  // namespace gms
