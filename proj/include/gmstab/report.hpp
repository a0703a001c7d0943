#pragma once

#include <string>
#include <vector>

#include "gmstab/betti_tables.hpp"
#include "gmstab/chain_complex.hpp"
#include "gmstab/fi_sharp.hpp"
#include "gmstab/field.hpp"
#include "gmstab/fox_neuwirth.hpp"

namespace gms {

// Serre page dimensions dims[q][p] = dim H_p(base with H_q(fibre)-coefficients)
// for the bundle with weight tuple lambda, n extra charge-c points, base the
// unordered-orbit configuration space of r+n points in R^3.
struct E2Page {
    std::vector<long> lambda;
    long c = 1;
    int n = 0;
    std::string field_name;
    std::vector<std::vector<int>> dims;

    int q_max() const { return static_cast<int>(dims.size()) - 1; }
    int dim(int p, int q) const {
        if (q < 0 || q > q_max() || p < 0) return 0;
        const auto& row = dims[q];
        return p < static_cast<int>(row.size()) ? row[p] : 0;
    }
};

E2Page e2_page(const std::vector<long>& lambda, long c, int n, const FibreTables& fibres,
               int q_max, const FieldSpec& field);

// One checked page position for the step n -> n+1.  For kind "e2" the fields
// are the two homology dimensions and the rank of the stabilisation-induced
// map (rank -1 when the run was downgraded to rank comparison); for kind
// "total" p holds the cohomological degree, q is unused, and iso records
// plain dimension equality.
struct StabilityCell {
    int p = 0, q = 0;
    int source_dim = 0, target_dim = 0;
    int rank = -1;
    bool iso = false;
};

struct TransitionReport {
    int n = 0;  // source; target is n+1
    std::string verification;  // "induced-map-rank" or "rank-consistent"
    std::vector<StabilityCell> cells;
    bool pass = false;
};

struct StabilityReport {
    std::string kind;  // "e2" or "total"
    std::vector<long> lambda;
    long c = 1;
    std::string field_name;
    std::string range_rule;
    int n_lo = 0, n_hi = 0;
    std::vector<TransitionReport> transitions;
    bool pass = false;
};

// Stabilisation check on the Serre page for the single step n -> n+1: builds
// both twisted complexes for every row q <= n, the combinatorial chain map
// between them, and the induced rank at every (p, q) with 2p <= n - q.
// Verdict iso means rank == source dim == target dim.  If the chain map fails
// to commute the transition is downgraded to dimension comparison and marked
// "rank-consistent".
TransitionReport e2_transition(const std::vector<long>& lambda, long c, int n,
                               const FibreTables& fibres, const FieldSpec& field);

// All steps n_lo -> ... -> n_hi; transitions run on the worker pool.
StabilityReport e2_stability_report(const std::vector<long>& lambda, long c, int n_lo, int n_hi,
                                    const FibreTables& fibres, const FieldSpec& field,
                                    int workers = 1);

// Rank-level stability of the invariant torus-bundle cohomology: for each
// step compares betti of degrees <= n/2.  Always marked "rank-consistent";
// the model does not realize the stabilisation map.
StabilityReport total_stability_report(const std::vector<long>& lambda, long c, int n_lo,
                                       int n_hi, int workers = 1);

// Deterministic serializers (fixed key order, no timestamps).
std::string homology_report_json(const std::string& command, int n, int d,
                                 const std::string& group_name, const std::string& coeff_name,
                                 const RingSpec& ring, const HomologyResult& h);
std::string degree_report_json(const std::vector<int>& z, const std::vector<int>& y, int q,
                               const std::string& field_name, int n_max,
                               const DegreeCertificate& cert);
std::string stability_report_json(const StabilityReport& rep);
std::string e2_pages_csv(const std::vector<E2Page>& pages);

}  // namespace gms
