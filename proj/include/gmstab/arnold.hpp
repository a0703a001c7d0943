#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "gmstab/matrix.hpp"
#include "gmstab/perm.hpp"

namespace gms {

// A monomial a_{i1 j1} ... a_{ik jk} in normal form: i < j in every factor
// and the second indices strictly increasing.  Indices are 1-based.
using ArnoldMono = std::vector<std::pair<int, int>>;

// Integer combination of normal-form monomials in the degree-2 generators
// a_{ij} of the cohomology of the ordered configuration space of r points in
// R^3, subject to a_{ij}^2 = 0 and the three-term straightening relation.
// Every class is kept in normal form; the generators have even degree, so
// products commute and a class is a map from monomials to coefficients.
class ArnoldClass {
public:
    ArnoldClass() = default;
    explicit ArnoldClass(int r) : r_(r) {
        if (r < 0) throw std::invalid_argument("ArnoldClass: negative point count");
    }

    // The class c * a_{ij}; a_{ij} with i > j normalizes to -a_{ji}.
    static ArnoldClass generator(int r, int i, int j, const mpz_class& c = 1);

    // The unit class (empty product).
    static ArnoldClass one(int r);

    int points() const { return r_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<ArnoldMono, mpz_class>& terms() const { return terms_; }
    mpz_class coeff(const ArnoldMono& m) const;

    // Homogeneous cohomological degree 2k; -1 for the zero class; throws on
    // mixed-degree classes.
    int degree() const;

    ArnoldClass operator+(const ArnoldClass& o) const;
    ArnoldClass operator-(const ArnoldClass& o) const;
    ArnoldClass operator*(const ArnoldClass& o) const;
    ArnoldClass scaled(const mpz_class& c) const;
    bool operator==(const ArnoldClass& o) const { return r_ == o.r_ && terms_ == o.terms_; }

    std::string to_string() const;

    // Adds c times the straightened product of the given factors.
    void add_product(const std::vector<std::pair<int, int>>& factors, const mpz_class& c);

private:
    int r_ = 0;
    std::map<ArnoldMono, mpz_class> terms_;

    void add_term(const ArnoldMono& m, const mpz_class& c);
};

// All normal-form monomials with k factors on r points, in lexicographic
// order.  Their count in degree 2k matches the coefficient of t^k in
// prod_{i=1}^{r-1} (1 + i t).
std::vector<ArnoldMono> admissible_monomials(int r, int k);

// Substitution a_{ij} -> a_{sigma^{-1}(i), sigma^{-1}(j)} (a pullback, so
// composition reverses order).  sigma is 0-based of size r.
ArnoldClass perm_action(const Perm& sigma, const ArnoldClass& c);

// Matrix of perm_action on the admissible basis in k factors.
QMat perm_action_matrix(const Perm& sigma, int r, int k);

// Restriction along forgetting the last point: kills a_{ir}, keeps the rest.
// The result lives on r - 1 points.
ArnoldClass stab_pullback(const ArnoldClass& c);

// Dimension of the subspace of k-factor classes fixed by every generator of
// the group (a subgroup of S_r).
int arnold_invariants_dim(const SubgroupSpec& g, int r, int k);

// The degree-2 class sum_{i != j} k_i a_{ij} of the circle factor attached to
// point j under the weight tuple lambda.
struct EulerClass {
    std::vector<long> lambda;
    int j = 0;  // 1-based
    ArnoldClass cls;
};

EulerClass gm_euler_class(const std::vector<long>& lambda, int j);

// Checks that restricting the j-th circle factor along forgetting the last
// point gives the circle factor of the truncated weights for j < r and the
// trivial class for j = r.
struct PullbackVerdicts {
    bool all_hold = true;
    std::vector<bool> per_j;
};

PullbackVerdicts verify_pullback_lemma(const std::vector<long>& lambda);

// Difference between the j-th circle-factor class of the full weight tuple
// and the pullback of the truncated one: the obstruction to lifting the
// forgetful map.  Nonzero whenever some forgotten weight is nonzero.
struct ForgetfulWitness {
    bool found = false;
    int j = 0;
    ArnoldClass witness;
};

ForgetfulWitness verify_forgetful_obstruction(const std::vector<long>& lambda, int r);

}  // namespace gms
