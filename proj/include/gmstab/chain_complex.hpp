#pragma once

#include <string>
#include <vector>

#include "gmstab/linalg.hpp"
#include "gmstab/matrix.hpp"

namespace gms {

// Bounded chain complex of free modules, degrees 0..top().
// boundary(k) maps degree k to degree k-1; boundary(0) and boundary(top+1)
// are implicitly zero.
class ChainComplex {
public:
    ChainComplex() = default;
    ChainComplex(RingSpec ring, std::vector<int> dims, std::vector<QMat> boundaries);

    const RingSpec& ring() const { return ring_; }
    int top() const { return static_cast<int>(dims_.size()) - 1; }
    int dim(int k) const { return k < 0 || k > top() ? 0 : dims_[k]; }
    const std::vector<int>& dims() const { return dims_; }

    // Valid for 1 <= k <= top(); other degrees have no stored matrix.
    const QMat& boundary(int k) const;

    bool has_boundary(int k) const { return k >= 1 && k <= top() && dims_[k] > 0 && dims_[k - 1] > 0; }

    // Checks that consecutive boundaries compose to zero.
    bool boundaries_compose_to_zero() const;

    long long euler_characteristic() const;

private:
    RingSpec ring_ = RingSpec::integers();
    std::vector<int> dims_;
    std::vector<QMat> boundaries_;  // boundaries_[k]: degree k+1 -> degree k... index k = map from k to k-1, stored for k=1..top
};

// Homology of a bounded complex.  Over a field, torsion lists are empty and
// free_rank is the Betti number; over Z, torsion is the list of elementary
// divisors > 1 in divisibility order.
struct HomologyResult {
    RingSpec ring;
    struct Group {
        int free_rank = 0;
        std::vector<mpz_class> torsion;
    };
    std::vector<Group> groups;  // index = degree

    int betti(int k) const {
        return k < 0 || k >= static_cast<int>(groups.size()) ? 0 : groups[k].free_rank;
    }
    const std::vector<mpz_class>& torsion(int k) const;
    std::string to_string() const;
};

// Throws std::invalid_argument if the complex fails the boundary condition.
HomologyResult homology(const ChainComplex& c);

}  // namespace gms
