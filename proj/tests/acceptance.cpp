// Acceptance gate: one line of output per criterion, nonzero exit on any
// failure.  argv[1] is the path of the command line tool.
#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "gmstab/arnold.hpp"
#include "gmstab/betti_tables.hpp"
#include "gmstab/fi_sharp.hpp"
#include "gmstab/fox_neuwirth.hpp"
#include "gmstab/koszul.hpp"
#include "gmstab/report.hpp"

using namespace gms;
using nlohmann::json;

namespace {

const FieldSpec kQ = FieldSpec::rationals();
const FieldSpec kF2 = FieldSpec::prime(2);
const RingSpec kQR = RingSpec::rationals();

int failures = 0;

struct Criterion {
    int number;
    double limit_seconds;
    std::string what;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;

    Criterion(int number, double limit, std::string what)
        : number(number), limit_seconds(limit), what(std::move(what)) {}

    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }

    void expect(bool cond, const std::string& why) {
        if (!cond) fail(why);
    }

    ~Criterion() {
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                          .count();
        if (secs > limit_seconds) {
            ok = false;
            if (detail.empty())
                detail = "exceeded time limit of " + std::to_string(limit_seconds) + " s";
        }
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.1f", secs);
        std::cout << "criterion " << number << ": " << (ok ? "PASS" : "FAIL") << " (" << buf
                  << " s) - " << what;
        if (!ok && !detail.empty()) std::cout << " [" << detail << "]";
        std::cout << std::endl;
        if (!ok) ++failures;
    }
};

std::string run_capture(const std::string& command, int* exit_code) {
    std::string out;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) {
        *exit_code = -1;
        return out;
    }
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    *exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return out;
}

SigmaModule permutation_restricted(const SubgroupSpec& g, const RingSpec& ring) {
    int n = g.n;
    std::vector<QMat> acts;
    for (const Perm& s : g.gens) {
        QMat a(n, n);
        for (int i = 0; i < n; ++i) a.set(s(i), i, 1);
        acts.push_back(std::move(a));
    }
    SigmaModule m(g, ring, n, std::move(acts));
    m.set_evaluator([n](const Perm& p) {
        QMat a(n, n);
        for (int i = 0; i < n; ++i) a.set(p(i), i, 1);
        return a;
    });
    return m;
}

void criterion1(const std::string& cli) {
    Criterion c(1, 1.0, "two point quotient oracle through the command line");
    int code = 0;
    std::string out = run_capture(cli + " homology --n 2 --d 3 --group full --ring Z", &code);
    c.expect(code == 0, "integral run exited with code " + std::to_string(code));
    try {
        json doc = json::parse(out);
        const auto& h = doc.at("homology");
        c.expect(h.size() == 3, "expected degrees 0..2");
        c.expect(h[0].at("free_rank") == 1 && h[0].at("torsion").empty(), "H0 must be Z");
        c.expect(h[1].at("free_rank") == 0 && h[1].at("torsion").size() == 1 &&
                     h[1].at("torsion")[0] == "2",
                 "H1 must be Z/2");
        c.expect(h[2].at("free_rank") == 0 && h[2].at("torsion").empty(), "H2 must vanish");
    } catch (const std::exception& e) {
        c.fail(std::string("bad integral report: ") + e.what());
    }
    out = run_capture(cli + " homology --n 2 --d 3 --group full --ring f2", &code);
    c.expect(code == 0, "mod two run exited with code " + std::to_string(code));
    try {
        json doc = json::parse(out);
        const auto& h = doc.at("homology");
        for (int k = 0; k <= 2; ++k)
            c.expect(h[k].at("free_rank") == 1, "mod two betti must be (1,1,1)");
    } catch (const std::exception& e) {
        c.fail(std::string("bad mod two report: ") + e.what());
    }
}

void criterion2() {
    Criterion c(2, 30.0, "degree two betti of ordered configurations vs the monomial count");
    for (int r = 2; r <= 6; ++r) {
        SubgroupSpec g = SubgroupSpec::trivial(r);
        SigmaModule m = trivial_module(g, kQR);
        FNSkeleton sk(r, 3, g);
        ChainComplex cc = fn_complex_over(sk, m, kQR);
        int rank2 = cc.has_boundary(2) ? rank_over(cc.boundary(2), kQ) : 0;
        int rank3 = cc.has_boundary(3) ? rank_over(cc.boundary(3), kQ) : 0;
        int b2 = cc.dim(2) - rank2 - rank3;
        int monomials = static_cast<int>(admissible_monomials(r, 1).size());
        c.expect(b2 == monomials, "complex and monomial count disagree at r=" + std::to_string(r));
        c.expect(b2 == r * (r - 1) / 2, "closed form fails at r=" + std::to_string(r));
    }
}

void criterion3() {
    Criterion c(3, 120.0, "rational triviality of unordered configurations vs ring invariants");
    for (int n = 2; n <= 6; ++n) {
        HomologyResult h;
        {
            SubgroupSpec g = SubgroupSpec::full(n);
            ConfigSpec spec;
            spec.n = n;
            spec.d = 3;
            spec.group = g;
            spec.coeff = trivial_module(g, kQR);
            spec.ring = kQR;
            h = homology_config(spec);
        }
        c.expect(h.betti(0) == 1, "b0 != 1 at n=" + std::to_string(n));
        for (int k = 1; k <= 2 * (n - 1); ++k)
            c.expect(h.betti(k) == 0, "nonzero betti at n=" + std::to_string(n) +
                                          ", k=" + std::to_string(k));
        for (int k = 0; k < n; ++k) {
            int inv = arnold_invariants_dim(SubgroupSpec::full(n), n, k);
            c.expect(inv == (k == 0 ? 1 : 0),
                     "ring invariants disagree at n=" + std::to_string(n) +
                         ", k=" + std::to_string(k));
        }
    }
}

void criterion4() {
    Criterion c(4, 10.0, "pullback identity for every weight tuple with entries 1..3, r <= 5");
    std::vector<std::vector<long>> tuples{{}};
    for (int r = 1; r <= 5; ++r) {
        std::vector<std::vector<long>> next;
        for (const auto& t : tuples) {
            if (static_cast<int>(t.size()) == r - 1) {
                for (long v = 1; v <= 3; ++v) {
                    std::vector<long> u = t;
                    u.push_back(v);
                    next.push_back(std::move(u));
                }
            }
        }
        for (const auto& t : next) {
            PullbackVerdicts v = verify_pullback_lemma(t);
            c.expect(v.all_hold, "failed for a tuple of length " + std::to_string(r));
        }
        tuples = std::move(next);
    }
}

void criterion5() {
    Criterion c(5, 10.0, "forgetful obstruction witness for positive weights, r < n <= 5");
    for (int n = 2; n <= 5; ++n) {
        std::vector<std::vector<long>> tuples{{}};
        for (int i = 0; i < n; ++i) {
            std::vector<std::vector<long>> next;
            for (const auto& t : tuples)
                for (long v = 1; v <= 3; ++v) {
                    std::vector<long> u = t;
                    u.push_back(v);
                    next.push_back(std::move(u));
                }
            tuples = std::move(next);
        }
        for (const auto& t : tuples)
            for (int r = 1; r < n; ++r) {
                ForgetfulWitness w = verify_forgetful_obstruction(t, r);
                c.expect(w.found && !w.witness.is_zero(),
                         "no witness at n=" + std::to_string(n) + ", r=" + std::to_string(r));
            }
    }
}

void criterion6() {
    Criterion c(6, 60.0, "degree certificates for product coefficient systems");
    std::vector<std::vector<int>> zs{{1, 1}, {1, 0, 1}};
    std::vector<std::vector<int>> ys{{1}, {1, 1}};
    for (const auto& z : zs)
        for (const auto& y : ys)
            for (int q = 0; q <= 3; ++q) {
                FISharpModule t =
                    make_TZYq(GradedBettiTable(z), GradedBettiTable(y), q, kQ, 8);
                DegreeCertificate cert = degree_bound(t, q);
                c.expect(cert.status == DegreeCertificate::Status::Verified,
                         "bound q not verified at q=" + std::to_string(q));
            }
    for (int q = 0; q <= 3; ++q) {
        FISharpModule t = make_TZYq(GradedBettiTable({1, 1}), GradedBettiTable({1}), q, kQ, 8);
        DegreeCertificate cert = degree_bound(t, q - 1);
        c.expect(cert.status == DegreeCertificate::Status::Refuted,
                 "degree is not exactly q at q=" + std::to_string(q));
    }
}

void check_window_report(Criterion& c, const StabilityReport& rep, const std::string& tag) {
    c.expect(rep.pass, tag + ": report did not pass");
    for (const TransitionReport& tr : rep.transitions) {
        c.expect(tr.verification == "induced-map-rank",
                 tag + ": verification downgraded at n=" + std::to_string(tr.n));
        for (const StabilityCell& cell : tr.cells) {
            c.expect(2 * cell.p <= tr.n - cell.q, tag + ": cell outside the window");
            c.expect(cell.rank >= 0, tag + ": missing induced rank");
            c.expect(cell.iso && cell.rank == cell.source_dim && cell.rank == cell.target_dim,
                     tag + ": cell not an isomorphism at n=" + std::to_string(tr.n) + ", p=" +
                         std::to_string(cell.p) + ", q=" + std::to_string(cell.q));
        }
    }
}

void criterion7() {
    Criterion c(7, 900.0, "torus bundle page stability over Q and F2, n = 2..6");
    int workers = static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;
    if (workers > 8) workers = 8;
    for (const FieldSpec& field : {kQ, kF2}) {
        FibreTables fibres = shipped_fibre_tables({1}, field);
        StabilityReport rep = e2_stability_report({}, 1, 2, 6, fibres, field, workers);
        check_window_report(c, rep, field.name());
        c.expect(rep.transitions.size() == 4, "expected four transitions");
    }
}

void criterion8() {
    Criterion c(8, 600.0, "monopole bundle page stability over Q, n = 2..5");
    int workers = static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;
    if (workers > 8) workers = 8;
    FibreTables fibres = shipped_fibre_tables({2, 1}, kQ);
    StabilityReport rep = e2_stability_report({2}, 1, 2, 5, fibres, kQ, workers);
    check_window_report(c, rep, "monopole");
    c.expect(rep.transitions.size() == 3, "expected three transitions");
}

void criterion9() {
    Criterion c(9, 300.0, "bundle cohomology oracles and rank level stabilisation");
    for (long k : {1L, 2L, 3L})
        c.expect(koszul_cohomology({k}) == GradedBettiTable({1, 1}),
                 "single weight cohomology wrong at k=" + std::to_string(k));
    GradedBettiTable plain = koszul_cohomology({1, 1});
    c.expect(plain == GradedBettiTable({1, 1, 0, 1, 1}), "two unit weights: plain betti wrong");
    GradedBettiTable inv = koszul_cohomology({1, 1}, kQ, SubgroupSpec::full(2));
    c.expect(inv == GradedBettiTable({1, 1, 0, 1, 1}), "two unit weights: invariants wrong");

    StabilityReport rep = total_stability_report({}, 1, 1, 5, 2);
    c.expect(rep.pass, "total space betti do not stabilize");
    c.expect(rep.kind == "total", "wrong report kind");
    c.expect(rep.transitions.size() == 4, "expected four transitions");
    for (const TransitionReport& tr : rep.transitions)
        c.expect(tr.verification == "rank-consistent", "rank level flag missing");
    c.expect(rep.range_rule.find("rank") != std::string::npos, "range rule must state the level");
}

void criterion10() {
    Criterion c(10, 300.0, "randomized property suites");
    std::mt19937 rng(271828);

    // boundary-squared and stabilisation commutation on randomized specs
    int done = 0;
    while (done < 200) {
        int n = std::uniform_int_distribution<int>(1, 6)(rng);
        int d = std::uniform_int_distribution<int>(2, 3)(rng);
        int gkind = std::uniform_int_distribution<int>(0, 3)(rng);
        SubgroupSpec g = SubgroupSpec::trivial(n);
        switch (gkind) {
            case 0: break;
            case 1: g = SubgroupSpec::full(n); break;
            case 2: {
                // random split into two intervals
                int cut = std::uniform_int_distribution<int>(0, n)(rng);
                std::vector<int> a, b;
                for (int i = 0; i < cut; ++i) a.push_back(i);
                for (int i = cut; i < n; ++i) b.push_back(i);
                std::vector<std::vector<int>> classes;
                if (a.size() > 1) classes.push_back(a);
                if (b.size() > 1) classes.push_back(b);
                g = SubgroupSpec::young(n, classes);
                break;
            }
            default: {
                // a couple of random generators, exercising the generic
                // enumeration path
                std::vector<Perm> gens;
                for (int t = 0; t < 2; ++t) {
                    std::vector<int> img(n);
                    for (int i = 0; i < n; ++i) img[i] = i;
                    std::shuffle(img.begin(), img.end(), rng);
                    gens.push_back(Perm(img));
                }
                g = SubgroupSpec{n, gens};
                break;
            }
        }
        double cells = 1;
        for (int i = 0; i + 1 < n; ++i) cells *= d;
        double orbit = 1;
        for (int i = 2; i <= n; ++i) orbit *= i;
        cells *= orbit / static_cast<double>(g.order());
        if (cells > 4000) continue;
        ++done;

        int mkind = std::uniform_int_distribution<int>(0, 2)(rng);
        SigmaModule m = mkind == 0   ? trivial_module(g, kQR)
                        : mkind == 1 ? sign_module(g, kQR)
                                     : permutation_restricted(g, kQR);
        FNSkeleton sk(n, d, g);
        ChainComplex cc;
        try {
            cc = fn_complex_over(sk, m, kQR);  // asserts boundary-squared zero
        } catch (const std::exception& e) {
            c.fail(std::string("complex build failed: ") + e.what());
            break;
        }

        SubgroupSpec gx;
        if (g.product_structure) {
            gx = SubgroupSpec::young(n + 1, g.classes);
        } else {
            std::vector<Perm> gens;
            for (const Perm& s : g.gens) gens.push_back(s.extended(1));
            gx = SubgroupSpec{n + 1, gens};
        }
        SigmaModule mx = mkind == 0   ? trivial_module(gx, kQR)
                         : mkind == 1 ? sign_module(gx, kQR)
                                      : permutation_restricted(gx, kQR);
        QMat coeff(mx.dim(), m.dim());
        for (int i = 0; i < m.dim(); ++i) coeff.set(i, i, 1);
        FNSkeleton skx(n + 1, d, gx);
        ChainComplex ccx = fn_complex_over(skx, mx, kQR);
        StabChainMap f = build_stab_chain_map(sk, m, cc, skx, mx, ccx, coeff);
        c.expect(f.commutes, "stabilisation chain map does not commute (n=" +
                                 std::to_string(n) + ", d=" + std::to_string(d) + ")");
    }

    // smith identity on random integer matrices
    std::uniform_int_distribution<int> size(0, 8), entry(-20, 20), keep(0, 2);
    for (int t = 0; t < 500; ++t) {
        int nr = size(rng), nc = size(rng);
        ZMat a(nr, nc);
        for (int i = 0; i < nr; ++i)
            for (int j = 0; j < nc; ++j)
                if (keep(rng) == 0) a.set(i, j, entry(rng));
        SmithResult s = smith_normal_form(a);
        bool product_ok = s.u * a * s.v == s.d;
        mpq_class du = nr ? determinant(s.u.to_qmat()) : 1;
        mpq_class dv = nc ? determinant(s.v.to_qmat()) : 1;
        bool unimodular = (du == 1 || du == -1) && (dv == 1 || dv == -1);
        bool chain = true;
        for (size_t i = 0; i + 1 < s.diagonal.size(); ++i) {
            if (s.diagonal[i] < 0) chain = false;
            if (s.diagonal[i] != 0 && s.diagonal[i + 1] % s.diagonal[i] != 0) chain = false;
            if (s.diagonal[i] == 0 && s.diagonal[i + 1] != 0) chain = false;
        }
        c.expect(product_ok && unimodular && chain, "smith identity failed on a random matrix");
        if (!(product_ok && unimodular && chain)) break;
    }

    // swapping the two circle factors of a torus negates the top class
    SigmaModule torus = graded_power_module(GradedBettiTable({1, 1}), 2, 2, kQ);
    c.expect(torus.dim() == 1 && torus.act(Perm::transposition(2, 0, 1)).get(0, 0) == -1,
             "top class swap sign wrong");
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-cli>" << std::endl;
        return 2;
    }
    std::string cli = argv[1];
    criterion1(cli);
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    if (failures) std::cout << failures << " criteria failed" << std::endl;
    return failures ? 1 : 0;
}
