#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "gmstab/chain_complex.hpp"
#include "gmstab/perm.hpp"
#include "gmstab/sigma_module.hpp"

namespace gms {

// One stratum of the configuration space of n points in R^d: tau lists the
// point labels in sort order (primary coordinate first), w[i] in {0..d-1} is
// the comparison depth separating positions i and i+1.  The stratum has
// dimension n*d - sum(w); the complex is graded by p = sum(w).
struct FNCell {
    Perm tau;
    std::vector<int> w;

    bool operator<(const FNCell& o) const {
        if (w != o.w) return w < o.w;
        return tau.image() < o.tau.image();
    }
    bool operator==(const FNCell& o) const { return w == o.w && tau.image() == o.tau.image(); }
};

// A signed face of a stratum, after canonicalizing the face's orbit: the face
// equals g^{-1} applied to the representative cell `cell` at degree p+1.
struct FNFace {
    int cell = 0;  // index into the degree-(p+1) cell list
    int sign = 0;
    Perm g;  // canonicalizing element: g * (face tau) = representative tau
};

// Codimension-one faces of a single stratum, before any group bookkeeping:
// (sign, face cell) pairs.  Exposed for direct convention tests.
std::vector<std::pair<int, FNCell>> fn_cell_faces(const FNCell& c, int d);

// The G-orbit cell structure of the configuration space of n points in R^d,
// independent of any coefficient module: orbit representatives per degree and
// their canonicalized face lists.  Built once and reused across modules.
class FNSkeleton {
public:
    FNSkeleton(int n, int d, SubgroupSpec group);

    int n() const { return n_; }
    int d() const { return d_; }
    const SubgroupSpec& group() const { return group_; }
    int top() const { return n_ <= 1 ? 0 : (n_ - 1) * (d_ - 1); }
    const std::vector<FNCell>& cells(int p) const { return cells_.at(p); }
    const std::vector<std::vector<FNFace>>& faces(int p) const { return faces_.at(p); }

    // Orbit representative lookup: the pair (representative index at the
    // cell's degree, canonicalizing g with g * tau = representative tau).
    std::pair<int, Perm> locate(const FNCell& c) const;

    // Canonicalize a bare ordering under the group.
    std::pair<Perm, Perm> canonical(const Perm& tau) const;  // (rep, g)

private:
    int n_, d_;
    SubgroupSpec group_;
    bool young_ = false;
    std::vector<int> class_of_;                    // label -> young class id
    std::vector<std::vector<int>> class_labels_;   // sorted labels per class
    std::vector<Perm> elements_;                   // fallback transversal
    std::vector<std::vector<FNCell>> cells_;       // per degree
    std::vector<std::map<FNCell, int>> index_;     // per degree
    std::vector<std::vector<std::vector<FNFace>>> faces_;
};

// Configuration-space homology problem: n points in R^d, quotient by G, with
// coefficients twisted by a G-module.
struct ConfigSpec {
    int n = 1;
    int d = 3;
    SubgroupSpec group;
    SigmaModule coeff;
    RingSpec ring = RingSpec::integers();
};

// Assembles the coefficient complex over the skeleton: degree-p chains are
// (orbit cells at p) x (module basis), and the degree-(p+1) -> p matrix entry
// carries sign(g)^d times the module action of the canonicalizing element.
// Throws if consecutive matrices do not compose to zero.
ChainComplex fn_complex_over(const FNSkeleton& sk, const SigmaModule& m, RingSpec ring);

// One-shot build from a spec.
ChainComplex fn_complex(const ConfigSpec& spec);

HomologyResult homology_config(const ConfigSpec& spec);

// Degreewise chain map modeling one stabilisation step: the new point is
// appended with a fresh label, first in the sort order at separation depth 0,
// and coefficients are pushed through coeff_map : M_n -> M_{n+1}.
struct StabChainMap {
    std::vector<QMat> maps;  // per source degree p
    bool commutes = false;
};

// Builder used by the report layer: never throws on commutation failure,
// reports it in the flag instead.
StabChainMap build_stab_chain_map(const FNSkeleton& src, const SigmaModule& m_src,
                                  const ChainComplex& c_src, const FNSkeleton& tgt,
                                  const SigmaModule& m_tgt, const ChainComplex& c_tgt,
                                  const QMat& coeff_map);

// Contract-checking variant: throws std::logic_error when the assembled map
// fails to commute with the differentials.
StabChainMap stab_chain_map(const FNSkeleton& src, const SigmaModule& m_src,
                            const ChainComplex& c_src, const FNSkeleton& tgt,
                            const SigmaModule& m_tgt, const ChainComplex& c_tgt,
                            const QMat& coeff_map);

// Rank of the map induced on degree-p homology by a degreewise chain map
// between complexes over a common field.
int induced_homology_rank(const ChainComplex& src, const ChainComplex& tgt, const QMat& f_p, int p,
                          const FieldSpec& field);

}  // namespace gms
