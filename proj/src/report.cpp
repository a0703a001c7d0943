#include "gmstab/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "gmstab/jobs.hpp"
#include "gmstab/koszul.hpp"
#include "gmstab/linalg.hpp"
#include "gmstab/sigma_module.hpp"

namespace gms {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr const char* kE2RangeRule =
    "iso window on the E2 page: 2p <= n - q per row q; stable range semantics: "
    "degrees <= n/2 (field coefficients); the integral statement would be <= n/2 - 1";
constexpr const char* kTotalRangeRule =
    "betti compared in degrees <= n/2 (field coefficients, rank level only); "
    "the integral statement would be <= n/2 - 1";

void check_weights(const std::vector<long>& lambda, long c) {
    for (long k : lambda) {
        if (k <= 0) throw std::invalid_argument("weights must be positive");
        if (k == c)
            throw std::invalid_argument("standing assumption violated: every weight must differ "
                                        "from the added charge c = " + std::to_string(c));
    }
    if (c < 1) throw std::invalid_argument("charge c must be at least 1");
}

// Coefficient map of the stabilisation step on the fibre homology: insert the
// unit class of the new weight-c factor in the slot just before Y.
QMat fiber_insertion(const std::vector<long>& lambda, long c, int n, const FibreTables& fibres,
                     int q) {
    KunnethBasis src = fiber_basis(lambda, c, n, fibres.charges, fibres.y, q);
    KunnethBasis tgt = fiber_basis(lambda, c, n + 1, fibres.charges, fibres.y, q);
    int slot = static_cast<int>(lambda.size()) + n;
    QMat iota(tgt.dim(), src.dim());
    for (int i = 0; i < src.dim(); ++i) {
        KunnethBasis::Tuple t = src.tuple(i);
        t.insert(t.begin() + slot, {0, 0});
        iota.set(tgt.index_of(t), i, 1);
    }
    return iota;
}

ordered_json lambda_json(const std::vector<long>& lambda) {
    ordered_json a = ordered_json::array();
    for (long k : lambda) a.push_back(k);
    return a;
}

}  // namespace

E2Page e2_page(const std::vector<long>& lambda, long c, int n, const FibreTables& fibres,
               int q_max, const FieldSpec& field) {
    check_weights(lambda, c);
    if (n < 0) throw std::invalid_argument("e2_page: negative point count");
    if (q_max < 0) throw std::invalid_argument("e2_page: negative q_max");
    if (!(fibres.field == field))
        throw std::invalid_argument("e2_page: fibre tables are over " + fibres.field.name() +
                                    ", requested " + field.name());
    int pts = static_cast<int>(lambda.size()) + n;
    FNSkeleton sk(pts, 3, fiber_group(lambda, n));
    RingSpec ring = RingSpec::over(field);

    E2Page page;
    page.lambda = lambda;
    page.c = c;
    page.n = n;
    page.field_name = field.name();
    for (int q = 0; q <= q_max; ++q) {
        SigmaModule m = fiber_module(lambda, c, n, fibres.charges, fibres.y, q, field);
        HomologyResult h = homology(fn_complex_over(sk, m, ring));
        std::vector<int> row(sk.top() + 1, 0);
        for (int p = 0; p <= sk.top(); ++p) row[p] = h.betti(p);
        page.dims.push_back(std::move(row));
    }
    return page;
}

TransitionReport e2_transition(const std::vector<long>& lambda, long c, int n,
                               const FibreTables& fibres, const FieldSpec& field) {
    check_weights(lambda, c);
    if (n < 0) throw std::invalid_argument("e2_transition: negative point count");
    if (!(fibres.field == field))
        throw std::invalid_argument("e2_transition: fibre tables are over " + fibres.field.name() +
                                    ", requested " + field.name());
    int r = static_cast<int>(lambda.size());
    FNSkeleton sk_src(r + n, 3, fiber_group(lambda, n));
    FNSkeleton sk_tgt(r + n + 1, 3, fiber_group(lambda, n + 1));
    RingSpec ring = RingSpec::over(field);

    TransitionReport rep;
    rep.n = n;
    rep.verification = "induced-map-rank";
    rep.pass = true;
    for (int q = 0; q <= n; ++q) {
        SigmaModule m_src = fiber_module(lambda, c, n, fibres.charges, fibres.y, q, field);
        SigmaModule m_tgt = fiber_module(lambda, c, n + 1, fibres.charges, fibres.y, q, field);
        ChainComplex c_src = fn_complex_over(sk_src, m_src, ring);
        ChainComplex c_tgt = fn_complex_over(sk_tgt, m_tgt, ring);
        HomologyResult h_src = homology(c_src);
        HomologyResult h_tgt = homology(c_tgt);
        StabChainMap f =
            build_stab_chain_map(sk_src, m_src, c_src, sk_tgt, m_tgt, c_tgt,
                                 fiber_insertion(lambda, c, n, fibres, q));
        if (!f.commutes) rep.verification = "rank-consistent";
        for (int p = 0; 2 * p <= n - q; ++p) {
            StabilityCell cell;
            cell.p = p;
            cell.q = q;
            cell.source_dim = h_src.betti(p);
            cell.target_dim = h_tgt.betti(p);
            if (f.commutes) {
                cell.rank = induced_homology_rank(c_src, c_tgt, f.maps[p], p, field);
                cell.iso = cell.rank == cell.source_dim && cell.rank == cell.target_dim;
                if (!cell.iso) rep.pass = false;
            } else {
                cell.rank = -1;
                cell.iso = false;
                if (cell.source_dim != cell.target_dim) rep.pass = false;
            }
            rep.cells.push_back(cell);
        }
    }
    return rep;
}

StabilityReport e2_stability_report(const std::vector<long>& lambda, long c, int n_lo, int n_hi,
                                    const FibreTables& fibres, const FieldSpec& field,
                                    int workers) {
    check_weights(lambda, c);
    if (n_lo < 0 || n_hi < n_lo) throw std::invalid_argument("e2_stability_report: bad n range");
    StabilityReport rep;
    rep.kind = "e2";
    rep.lambda = lambda;
    rep.c = c;
    rep.field_name = field.name();
    rep.range_rule = kE2RangeRule;
    rep.n_lo = n_lo;
    rep.n_hi = n_hi;
    int steps = n_hi - n_lo;  // transitions n -> n+1 for n in [n_lo, n_hi-1]
    rep.transitions.resize(steps);
    std::vector<std::function<void()>> tasks;
    for (int i = 0; i < steps; ++i)
        tasks.push_back([&rep, &lambda, c, i, n_lo, &fibres, &field] {
            rep.transitions[i] = e2_transition(lambda, c, n_lo + i, fibres, field);
        });
    run_parallel(workers, tasks);
    rep.pass = true;
    for (const auto& t : rep.transitions)
        if (!t.pass) rep.pass = false;
    return rep;
}

StabilityReport total_stability_report(const std::vector<long>& lambda, long c, int n_lo,
                                       int n_hi, int workers) {
    check_weights(lambda, c);
    if (n_lo < 0 || n_hi < n_lo) throw std::invalid_argument("total_stability_report: bad n range");
    StabilityReport rep;
    rep.kind = "total";
    rep.lambda = lambda;
    rep.c = c;
    rep.field_name = "q";
    rep.range_rule = kTotalRangeRule;
    rep.n_lo = n_lo;
    rep.n_hi = n_hi;

    int count = n_hi - n_lo + 1;
    std::vector<std::vector<int>> betti(count);
    std::vector<std::function<void()>> tasks;
    for (int i = 0; i < count; ++i)
        tasks.push_back([&betti, &lambda, c, i, n_lo] {
            int n = n_lo + i;
            std::vector<long> weights = extend_weights(lambda, c, n);
            betti[i] = koszul_betti_range(weights, n / 2, FieldSpec::rationals(),
                                          lambda_group(weights));
        });
    run_parallel(workers, tasks);

    rep.pass = true;
    for (int i = 0; i + 1 < count; ++i) {
        int n = n_lo + i;
        TransitionReport tr;
        tr.n = n;
        tr.verification = "rank-consistent";
        tr.pass = true;
        for (int m = 0; m <= n / 2; ++m) {
            StabilityCell cell;
            cell.p = m;
            cell.q = 0;
            cell.source_dim = betti[i][m];
            cell.target_dim = betti[i + 1][m];
            cell.rank = -1;
            cell.iso = cell.source_dim == cell.target_dim;
            if (!cell.iso) tr.pass = false;
            tr.cells.push_back(cell);
        }
        if (!tr.pass) rep.pass = false;
        rep.transitions.push_back(std::move(tr));
    }
    return rep;
}

std::string homology_report_json(const std::string& command, int n, int d,
                                 const std::string& group_name, const std::string& coeff_name,
                                 const RingSpec& ring, const HomologyResult& h) {
    ordered_json doc;
    doc["schema"] = 1;
    doc["command"] = command;
    doc["n"] = n;
    doc["d"] = d;
    doc["group"] = group_name;
    doc["coeff"] = coeff_name;
    doc["ring"] = ring.name();
    ordered_json groups = ordered_json::array();
    for (size_t k = 0; k < h.groups.size(); ++k) {
        ordered_json g;
        g["degree"] = k;
        g["free_rank"] = h.groups[k].free_rank;
        ordered_json tors = ordered_json::array();
        for (const mpz_class& t : h.groups[k].torsion) tors.push_back(t.get_str());
        g["torsion"] = tors;
        groups.push_back(std::move(g));
    }
    doc["homology"] = std::move(groups);
    return doc.dump(2) + "\n";
}

std::string degree_report_json(const std::vector<int>& z, const std::vector<int>& y, int q,
                               const std::string& field_name, int n_max,
                               const DegreeCertificate& cert) {
    ordered_json doc;
    doc["schema"] = 1;
    doc["command"] = "fisharp-degree";
    doc["z"] = z;
    doc["y"] = y;
    doc["q"] = q;
    doc["field"] = field_name;
    doc["n_max"] = n_max;
    doc["claimed_bound"] = cert.claimed_bound;
    doc["status"] = cert.status_name();
    doc["verified_range"] = cert.verified_range;
    if (cert.status == DegreeCertificate::Status::Refuted) {
        doc["witness_n"] = cert.witness_n;
        doc["witness_dim"] = cert.witness_dim;
    }
    return doc.dump(2) + "\n";
}

std::string stability_report_json(const StabilityReport& rep) {
    ordered_json doc;
    doc["schema"] = 1;
    doc["command"] = "stability-" + rep.kind;
    doc["lambda"] = lambda_json(rep.lambda);
    doc["c"] = rep.c;
    doc["field"] = rep.field_name;
    doc["n_lo"] = rep.n_lo;
    doc["n_hi"] = rep.n_hi;
    doc["range_rule"] = rep.range_rule;
    doc["pass"] = rep.pass;
    ordered_json transitions = ordered_json::array();
    for (const auto& t : rep.transitions) {
        ordered_json tj;
        tj["n"] = t.n;
        tj["target_n"] = t.n + 1;
        tj["verification"] = t.verification;
        tj["pass"] = t.pass;
        ordered_json cells = ordered_json::array();
        for (const auto& cell : t.cells) {
            ordered_json cj;
            if (rep.kind == "total") {
                cj["degree"] = cell.p;
                cj["source_dim"] = cell.source_dim;
                cj["target_dim"] = cell.target_dim;
                cj["equal"] = cell.iso;
            } else {
                cj["p"] = cell.p;
                cj["q"] = cell.q;
                cj["source_dim"] = cell.source_dim;
                cj["target_dim"] = cell.target_dim;
                cj["rank"] = cell.rank;
                cj["iso"] = cell.iso;
            }
            cells.push_back(std::move(cj));
        }
        tj["cells"] = std::move(cells);
        transitions.push_back(std::move(tj));
    }
    doc["transitions"] = std::move(transitions);
    return doc.dump(2) + "\n";
}

std::string e2_pages_csv(const std::vector<E2Page>& pages) {
    std::ostringstream out;
    out << "lambda,c,field,n,q,p,dim\n";
    for (const E2Page& page : pages) {
        std::string lam;
        for (size_t i = 0; i < page.lambda.size(); ++i) {
            if (i) lam += ' ';
            lam += std::to_string(page.lambda[i]);
        }
        for (int q = 0; q <= page.q_max(); ++q)
            for (size_t p = 0; p < page.dims[q].size(); ++p)
                out << lam << ',' << page.c << ',' << page.field_name << ',' << page.n << ',' << q
                    << ',' << p << ',' << page.dims[q][p] << '\n';
    }
    return out.str();
}

}  // namespace gms
