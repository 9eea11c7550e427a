#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fib/coset.hpp"
#include "fib/curvature.hpp"
#include "fib/ledger.hpp"
#include "fib/presentation.hpp"
#include "fib/regions.hpp"
#include "fib/snf.hpp"
#include "fib/stargraph.hpp"
#include "fib/tietze.hpp"

using nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run_present(int r, int n) {
    std::cout << fib::build_fibonacci(r, n).str();
    return 0;
}

int run_tietze(const std::string& script_path, const std::string& family, int k, bool trace) {
    fib::TietzeScript script = fib::parse_tietze_script_json(slurp(script_path));
    fib::ExtensionFamily fam =
        family == "eight" ? fib::ExtensionFamily::eight : fib::ExtensionFamily::seven;
    fib::Presentation start = fib::build_extension(k, fam);
    int n = (fam == fib::ExtensionFamily::seven ? 7 : 8) + 5 * k;
    fib::Presentation target = fib::build_relative_pn(n).flatten();
    fib::TietzeVerdict verdict = fib::verify_tietze_script(start, script, target);
    if (trace)
        for (size_t i = 0; i < verdict.trace.size(); i++)
            std::cout << "-- after step " << i << ":\n" << verdict.trace[i].str();
    if (verdict.valid) {
        std::cout << "Valid (" << script.steps.size() << " steps, family " << family
                  << ", k=" << k << ")\n";
        return 0;
    }
    std::cout << "InvalidAtStep(" << verdict.failing_step << "): " << verdict.reason << "\n";
    return 1;
}

int run_order(int r, int n, std::int64_t max_cosets, const std::string& strategy_name) {
    fib::CosetStrategy strategy =
        strategy_name == "felsch" ? fib::CosetStrategy::felsch : fib::CosetStrategy::hlt;
    fib::CosetResult res = fib::coset_enumerate(fib::build_fibonacci(r, n), max_cosets, strategy);
    if (res.status == fib::CosetResult::Status::finite)
        std::cout << "|F(" << r << "," << n << ")| = " << res.order << "  (cosets defined "
                  << res.cosets_defined << ", " << res.millis << " ms)\n";
    else
        std::cout << "F(" << r << "," << n << "): not closed within " << max_cosets
                  << " cosets (no conclusion)\n";
    return 0;
}

int run_ab(int r, int n) {
    auto inv = fib::abelianization(fib::build_fibonacci(r, n));
    std::cout << "F(" << r << "," << n << ") abelianized: ";
    if (inv.empty()) {
        std::cout << "trivial\n";
        return 0;
    }
    for (size_t i = 0; i < inv.size(); i++) {
        if (i) std::cout << " x ";
        if (inv[i] == 0) std::cout << "Z";
        else std::cout << "Z/" << inv[i];
    }
    std::cout << "\n";
    return 0;
}

int run_verify_thm1(std::int64_t max_cosets, bool as_json) {
    auto results = fib::verify_finite_orders(fib::finite_fibonacci_cases(), max_cosets);
    bool all = true;
    json out = json::array();
    for (const auto& r : results) {
        all = all && r.pass;
        json j;
        j["r"] = r.c.r;
        j["n"] = r.c.n;
        j["expected"] = r.c.expected;
        j["got"] = r.enumeration.status == fib::CosetResult::Status::finite
                       ? json(r.enumeration.order)
                       : json("overflow");
        j["status"] = r.pass ? "pass" : "fail";
        j["cosets_defined"] = r.enumeration.cosets_defined;
        j["ms"] = r.enumeration.millis;
        out.push_back(j);
        if (!as_json)
            std::cout << (r.pass ? "pass" : "FAIL") << "  F(" << r.c.r << "," << r.c.n
                      << ")  expected " << r.c.expected << " got "
                      << (r.enumeration.status == fib::CosetResult::Status::finite
                              ? std::to_string(r.enumeration.order)
                              : std::string("overflow"))
                      << "\n";
    }
    if (as_json) std::cout << out.dump(2) << "\n";
    return all ? 0 : 1;
}

int run_star_labels(int degree, int modulus) {
    auto labels = fib::enumerate_vertex_labels(degree, modulus);
    for (const auto& l : labels) std::cout << l.str() << "\n";
    json j;
    j["degree"] = degree;
    j["count"] = labels.size();
    j["labels"] = json::array();
    for (const auto& l : labels) j["labels"].push_back(l.str());
    std::cout << j.dump() << "\n";
    return 0;
}

int run_curvature(const std::vector<int>& degrees, bool raw) {
    std::cout << fib::curvature(degrees, raw).str() << "\n";
    return 0;
}

int run_euler(const std::string& path) {
    json j = json::parse(slurp(path));
    fib::SphericalComplex k;
    for (const auto& f : j.at("faces")) k.faces.push_back(f.get<std::vector<int>>());
    if (j.contains("degrees")) {
        std::vector<int> want = j["degrees"].get<std::vector<int>>();
        if (want != k.vertex_degrees())
            throw std::runtime_error("declared degrees do not match the face corners");
    }
    fib::Angle total = fib::total_curvature(k);
    std::cout << "total curvature " << total.str() << "\n";
    return total == fib::Angle::pi(4) ? 0 : 1;
}

int run_regions_classify(int m, std::int64_t nmin, bool labelings, bool force) {
    fib::ClassificationReport rep = fib::classify_regions(m, nmin, labelings, force);
    json out;
    out["degree"] = rep.m;
    out["classes"] = rep.classes;
    out["lec_killed"] = rep.lec_killed;
    out["lac_killed"] = rep.lac_killed;
    out["survivors"] = json::array();
    for (const auto& s : rep.survivors) {
        json js;
        js["chords"] = s.config.str();
        json lens = json::array();
        for (const auto& l : s.feasibility.lengths) lens.push_back(l.str());
        js["lengths"] = lens;
        js["n_condition"] = s.feasibility.n_condition;
        if (labelings) {
            js["labeling_count"] = s.labelings.size();
            json labs = json::array();
            for (const auto& l : s.labelings) labs.push_back(l.str());
            js["labelings"] = labs;
        }
        out["survivors"].push_back(js);
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

int run_ledger_check(const std::string& path, bool as_json) {
    fib::LedgerReport rep = fib::check_file(path);
    if (as_json) {
        json out;
        out["verified"] = rep.verified;
        out["refuted"] = rep.refuted;
        out["malformed"] = rep.malformed;
        out["findings"] = rep.findings;
        json bad = json::array();
        for (const auto& v : rep.verdicts)
            if (v.status != fib::EntryVerdict::Status::verified)
                bad.push_back({{"id", v.id}, {"detail", v.detail}});
        out["failures"] = bad;
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& v : rep.verdicts)
            if (v.status != fib::EntryVerdict::Status::verified)
                std::cout << (v.status == fib::EntryVerdict::Status::refuted ? "REFUTED  "
                                                                             : "MALFORMED ")
                          << v.id << ": " << v.detail << "\n";
        for (const auto& f : rep.findings) std::cout << "finding: " << f << "\n";
        std::cout << rep.verified << " verified, " << rep.refuted << " refuted, "
                  << rep.malformed << " malformed\n";
    }
    return rep.clean() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification toolkit for the P_n asphericity analysis and the "
                 "finite Fibonacci group orders"};
    app.require_subcommand(1);

    auto* present = app.add_subcommand("present", "print the cyclic presentation F(r,n)");
    int pr = 2, pn = 5;
    present->add_option("--r", pr, "relator length parameter")->required();
    present->add_option("--n", pn, "number of generators")->required();

    auto* tietze = app.add_subcommand("tietze", "replay and verify a reduction script");
    std::string script_path, family = "seven";
    int tk = 0;
    bool ttrace = false;
    tietze->add_option("--script", script_path, "script JSON file")->required();
    tietze->add_option("--family", family, "seven or eight")->check(CLI::IsMember({"seven", "eight"}));
    tietze->add_option("--k", tk, "family parameter k >= 0");
    tietze->add_flag("--trace", ttrace, "print every intermediate presentation");

    auto* order = app.add_subcommand("order", "enumerate cosets of F(r,n) over the trivial subgroup");
    int orr = 2, orn = 5;
    std::int64_t max_cosets = 200000;
    std::string strategy = "hlt";
    order->add_option("--r", orr)->required();
    order->add_option("--n", orn)->required();
    order->add_option("--max-cosets", max_cosets, "definition budget");
    order->add_option("--strategy", strategy)->check(CLI::IsMember({"hlt", "felsch"}));

    auto* ab = app.add_subcommand("ab", "abelianization of F(r,n) via Smith normal form");
    int abr = 2, abn = 5;
    ab->add_option("--r", abr)->required();
    ab->add_option("--n", abn)->required();

    auto* thm1 = app.add_subcommand("verify-thm1", "check every finite Fibonacci order");
    bool thm1_json = false;
    std::int64_t thm1_budget = 200000;
    thm1->add_flag("--json", thm1_json);
    thm1->add_option("--max-cosets", thm1_budget);

    auto* star = app.add_subcommand("star-labels", "enumerate admissible vertex labels");
    int degree = 3, star_mod = 5;
    star->add_option("--degree", degree)->required();
    star->add_option("--mod", star_mod, "exponent-sum modulus");

    auto* curv = app.add_subcommand("curvature", "curvature of an m-gon from its vertex degrees");
    std::vector<int> degs;
    bool raw = false;
    curv->add_option("degrees", degs, "vertex degrees")->required();
    curv->add_flag("--raw", raw, "allow degrees below 3");

    auto* euler = app.add_subcommand("euler", "total curvature of a spherical complex");
    std::string complex_path;
    euler->add_option("--complex", complex_path, "JSON {\"faces\":[[v,...],...]}")->required();

    auto* regions = app.add_subcommand("regions", "region classification");
    auto* classify = regions->add_subcommand("classify", "classify chord configs of an m-gon");
    int rm = 6;
    std::int64_t nmin = 7;
    bool with_labelings = false, force_large = false;
    classify->add_option("--degree", rm)->required();
    classify->add_option("--nmin", nmin);
    classify->add_flag("--labelings", with_labelings);
    classify->add_flag("--force-large", force_large, "allow degrees above 9");

    auto* ledger = app.add_subcommand("ledger", "inequality ledger checks");
    auto* lcheck = ledger->add_subcommand("check", "verify a ledger file");
    std::string ledger_path;
    bool ledger_json = false;
    lcheck->add_option("file", ledger_path)->required();
    lcheck->add_flag("--json", ledger_json);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*present) return run_present(pr, pn);
        if (*tietze) return run_tietze(script_path, family, tk, ttrace);
        if (*order) return run_order(orr, orn, max_cosets, strategy);
        if (*ab) return run_ab(abr, abn);
        if (*thm1) return run_verify_thm1(thm1_budget, thm1_json);
        if (*star) return run_star_labels(degree, star_mod);
        if (*curv) return run_curvature(degs, raw);
        if (*euler) return run_euler(complex_path);
        if (*classify) return run_regions_classify(rm, nmin, with_labelings, force_large);
        if (*lcheck) return run_ledger_check(ledger_path, ledger_json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
