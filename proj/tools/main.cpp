#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gmstab/arnold.hpp"
#include "gmstab/betti_tables.hpp"
#include "gmstab/fi_sharp.hpp"
#include "gmstab/fox_neuwirth.hpp"
#include "gmstab/jobs.hpp"
#include "gmstab/report.hpp"
#include "gmstab/sigma_module.hpp"

namespace {

using gms::FieldSpec;
using gms::RingSpec;
using ordered_json = nlohmann::ordered_json;

std::vector<long> parse_lambda(const std::string& s) {
    std::vector<long> out;
    if (s.empty()) return out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw std::invalid_argument("lambda: empty entry in \"" + s + "\"");
        size_t used = 0;
        long v = std::stol(item, &used);
        if (used != item.size()) throw std::invalid_argument("lambda: bad entry \"" + item + "\"");
        out.push_back(v);
    }
    return out;
}

std::vector<int> parse_int_list(const std::string& s, const std::string& what) {
    std::vector<int> out;
    if (s.empty()) throw std::invalid_argument(what + ": empty list");
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t used = 0;
        int v = std::stoi(item, &used);
        if (used != item.size() || v < 0)
            throw std::invalid_argument(what + ": bad entry \"" + item + "\"");
        out.push_back(v);
    }
    return out;
}

void parse_n_range(const std::string& s, int& lo, int& hi) {
    size_t dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            lo = hi = std::stoi(s);
        } else {
            lo = std::stoi(s.substr(0, dots));
            hi = std::stoi(s.substr(dots + 2));
        }
    } catch (const std::exception&) {
        throw std::invalid_argument("n range: expected N or LO..HI, got \"" + s + "\"");
    }
    if (lo < 0 || hi < lo) throw std::invalid_argument("n range: bad bounds in \"" + s + "\"");
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw std::invalid_argument("cannot open output file " + out_path);
    f << text;
}

void require_positive_weights(const std::vector<long>& lambda) {
    for (long k : lambda)
        if (k <= 0) throw std::invalid_argument("weights must be positive");
}

gms::FibreTables fibre_tables_for_job(const std::string& fibres_path,
                                      const std::vector<long>& lambda, long c,
                                      const FieldSpec& field) {
    if (fibres_path.empty()) {
        std::vector<long> charges = lambda;
        charges.push_back(c);
        return gms::shipped_fibre_tables(charges, field);
    }
    return gms::load_fibre_tables_file(fibres_path);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact twisted-homology and stability computations for configuration spaces, "
                 "Gibbons-Manton torus bundles, and ideal monopole bundles"};
    app.require_subcommand(1);
    int exit_code = 0;

    // homology
    auto* cmd_h = app.add_subcommand("homology", "Homology of a configuration-space quotient");
    int h_n = 1, h_d = 3;
    std::string h_group = "full", h_coeff = "trivial", h_ring = "z", h_out;
    cmd_h->add_option("--n", h_n, "Number of points")->required();
    cmd_h->add_option("--d", h_d, "Ambient dimension (>= 2)");
    cmd_h->add_option("--group", h_group, "Quotient group: full | trivial")
        ->check(CLI::IsMember({"full", "trivial"}));
    cmd_h->add_option("--coeff", h_coeff, "Coefficient module: trivial | sign")
        ->check(CLI::IsMember({"trivial", "sign"}));
    cmd_h->add_option("--ring", h_ring, "Coefficient ring: Z | q | f<p>");
    cmd_h->add_option("--out", h_out, "Report path (default stdout)");
    cmd_h->callback([&] {
        if (h_n < 0) throw std::invalid_argument("homology: n must be nonnegative");
        if (h_d < 2) throw std::invalid_argument("homology: d must be at least 2");
        RingSpec ring = RingSpec::parse(h_ring);
        gms::SubgroupSpec g =
            h_group == "full" ? gms::SubgroupSpec::full(h_n) : gms::SubgroupSpec::trivial(h_n);
        gms::SigmaModule m =
            h_coeff == "trivial" ? gms::trivial_module(g, ring) : gms::sign_module(g, ring);
        gms::ConfigSpec spec{h_n, h_d, g, m, ring};
        gms::HomologyResult h = gms::homology_config(spec);
        emit(gms::homology_report_json("homology", h_n, h_d, h_group, h_coeff, ring, h), h_out);
    });

    // fisharp-degree
    auto* cmd_f = app.add_subcommand("fisharp-degree",
                                     "Degree certificate for a twisted coefficient system");
    std::string f_z = "1,1", f_y = "1", f_field = "q", f_out;
    int f_q = 0, f_bound = 0, f_nmax = 8;
    cmd_f->add_option("--z", f_z, "Betti table of the moving factor, e.g. 1,1")->required();
    cmd_f->add_option("--y", f_y, "Betti table of the fixed factor (default 1)");
    cmd_f->add_option("--q", f_q, "Homological degree of the system")->required();
    cmd_f->add_option("--bound", f_bound, "Claimed degree bound to certify")->required();
    cmd_f->add_option("--nmax", f_nmax, "Truncation level (default 8)");
    cmd_f->add_option("--field", f_field, "Field: q | f<p>");
    cmd_f->add_option("--out", f_out, "Report path (default stdout)");
    cmd_f->callback([&] {
        std::vector<int> z = parse_int_list(f_z, "--z");
        std::vector<int> y = parse_int_list(f_y, "--y");
        if (z.empty() || z[0] != 1) throw std::invalid_argument("--z must have b_0 = 1");
        if (y.empty() || y[0] != 1) throw std::invalid_argument("--y must have b_0 = 1");
        if (f_q < 0) throw std::invalid_argument("--q must be nonnegative");
        if (f_bound < -1) throw std::invalid_argument("--bound must be at least -1");
        if (f_nmax < 1) throw std::invalid_argument("--nmax must be at least 1");
        FieldSpec field = FieldSpec::parse(f_field);
        gms::FISharpModule t = gms::make_TZYq(gms::GradedBettiTable(z), gms::GradedBettiTable(y),
                                              f_q, field, f_nmax);
        gms::DegreeCertificate cert = gms::degree_bound(t, f_bound);
        emit(gms::degree_report_json(z, y, f_q, field.name(), f_nmax, cert), f_out);
        if (cert.status != gms::DegreeCertificate::Status::Verified) exit_code = 1;
    });

    // gm verify-pullback | forgetful | euler
    auto* cmd_gm = app.add_subcommand("gm", "Symbolic Euler-class checks");
    cmd_gm->require_subcommand(1);

    auto* gm_vp = cmd_gm->add_subcommand("verify-pullback",
                                         "Check the circle-factor pullback identity for every j");
    std::string vp_lambda, vp_out;
    gm_vp->add_option("--lambda", vp_lambda, "Weights, comma separated")->required();
    gm_vp->add_option("--out", vp_out, "Report path (default stdout)");
    gm_vp->callback([&] {
        std::vector<long> lambda = parse_lambda(vp_lambda);
        if (lambda.empty()) throw std::invalid_argument("verify-pullback: lambda must be nonempty");
        require_positive_weights(lambda);
        gms::PullbackVerdicts v = gms::verify_pullback_lemma(lambda);
        ordered_json doc;
        doc["schema"] = 1;
        doc["command"] = "gm-verify-pullback";
        doc["lambda"] = lambda;
        doc["per_j"] = v.per_j;
        doc["all_hold"] = v.all_hold;
        emit(doc.dump(2) + "\n", vp_out);
        if (!v.all_hold) exit_code = 1;
    });

    auto* gm_fg = cmd_gm->add_subcommand("forgetful",
                                         "Obstruction witness for lifting the forgetful map");
    std::string fg_lambda, fg_out;
    int fg_r = 0;
    gm_fg->add_option("--lambda", fg_lambda, "Weights, comma separated")->required();
    gm_fg->add_option("--r", fg_r, "Number of points kept")->required();
    gm_fg->add_option("--out", fg_out, "Report path (default stdout)");
    gm_fg->callback([&] {
        std::vector<long> lambda = parse_lambda(fg_lambda);
        require_positive_weights(lambda);
        gms::ForgetfulWitness w = gms::verify_forgetful_obstruction(lambda, fg_r);
        ordered_json doc;
        doc["schema"] = 1;
        doc["command"] = "gm-forgetful";
        doc["lambda"] = lambda;
        doc["r"] = fg_r;
        doc["witness_found"] = w.found;
        if (w.found) {
            doc["j"] = w.j;
            doc["witness"] = w.witness.to_string();
        }
        emit(doc.dump(2) + "\n", fg_out);
        if (!w.found) exit_code = 1;
    });

    auto* gm_eu = cmd_gm->add_subcommand("euler", "Circle-factor Euler class in normal form");
    std::string eu_lambda, eu_out;
    int eu_j = 1;
    gm_eu->add_option("--lambda", eu_lambda, "Weights, comma separated")->required();
    gm_eu->add_option("--j", eu_j, "Circle factor index, 1-based")->required();
    gm_eu->add_option("--out", eu_out, "Report path (default stdout)");
    gm_eu->callback([&] {
        std::vector<long> lambda = parse_lambda(eu_lambda);
        if (lambda.empty()) throw std::invalid_argument("euler: lambda must be nonempty");
        require_positive_weights(lambda);
        gms::EulerClass e = gms::gm_euler_class(lambda, eu_j);
        ordered_json doc;
        doc["schema"] = 1;
        doc["command"] = "gm-euler";
        doc["lambda"] = lambda;
        doc["j"] = eu_j;
        doc["class"] = e.cls.to_string();
        emit(doc.dump(2) + "\n", eu_out);
    });

    // stability e2 | total
    auto* cmd_s = app.add_subcommand("stability", "Stability verification across a range of n");
    cmd_s->require_subcommand(1);

    auto* s_e2 = cmd_s->add_subcommand("e2", "Serre-page window check with induced-map ranks");
    std::string e2_lambda, e2_n, e2_field = "q", e2_fibres, e2_csv, e2_out;
    long e2_c = 1;
    int e2_workers = 0;
    s_e2->add_option("--lambda", e2_lambda, "Weights, comma separated (empty for none)");
    s_e2->add_option("--c", e2_c, "Charge of the added points (default 1)");
    s_e2->add_option("--n", e2_n, "Range LO..HI of added-point counts")->required();
    s_e2->add_option("--field", e2_field, "Field: q | f<p>");
    s_e2->add_option("--fibres", e2_fibres, "Fibre Betti tables JSON (default: shipped)");
    s_e2->add_option("--csv", e2_csv, "Also write the page dimensions as CSV here");
    s_e2->add_option("--workers", e2_workers, "Worker threads (default: GMSTAB_WORKERS or 1)");
    s_e2->add_option("--out", e2_out, "Report path (default stdout)");
    s_e2->callback([&] {
        std::vector<long> lambda = parse_lambda(e2_lambda);
        int lo = 0, hi = 0;
        parse_n_range(e2_n, lo, hi);
        FieldSpec field = FieldSpec::parse(e2_field);
        gms::FibreTables fibres = fibre_tables_for_job(e2_fibres, lambda, e2_c, field);
        int workers = gms::resolve_workers(e2_workers);
        gms::StabilityReport rep =
            gms::e2_stability_report(lambda, e2_c, lo, hi, fibres, field, workers);
        emit(gms::stability_report_json(rep), e2_out);
        if (!e2_csv.empty()) {
            std::vector<gms::E2Page> pages;
            for (int n = lo; n <= hi; ++n)
                pages.push_back(gms::e2_page(lambda, e2_c, n, fibres, n, field));
            emit(gms::e2_pages_csv(pages), e2_csv);
        }
        if (!rep.pass) exit_code = 1;
    });

    auto* s_tot = cmd_s->add_subcommand("total",
                                        "Rank-level stability of invariant bundle cohomology");
    std::string tot_lambda, tot_n, tot_out;
    long tot_c = 1;
    int tot_workers = 0;
    s_tot->add_option("--lambda", tot_lambda, "Weights, comma separated (empty for none)");
    s_tot->add_option("--c", tot_c, "Charge of the added points (default 1)");
    s_tot->add_option("--n", tot_n, "Range LO..HI of added-point counts")->required();
    s_tot->add_option("--workers", tot_workers, "Worker threads (default: GMSTAB_WORKERS or 1)");
    s_tot->add_option("--out", tot_out, "Report path (default stdout)");
    s_tot->callback([&] {
        std::vector<long> lambda = parse_lambda(tot_lambda);
        int lo = 0, hi = 0;
        parse_n_range(tot_n, lo, hi);
        int workers = gms::resolve_workers(tot_workers);
        gms::StabilityReport rep = gms::total_stability_report(lambda, tot_c, lo, hi, workers);
        emit(gms::stability_report_json(rep), tot_out);
        if (!rep.pass) exit_code = 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
