// End-to-end acceptance suite: one line per criterion, nonzero exit on any
// failure. Criteria carry their own time budgets.

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "fib/coset.hpp"
#include "fib/curvature.hpp"
#include "fib/ledger.hpp"
#include "fib/presentation.hpp"
#include "fib/regions.hpp"
#include "fib/snf.hpp"
#include "fib/stargraph.hpp"
#include "fib/tietze.hpp"

using namespace fib;

namespace {

std::string g_data_dir = "data";
int g_failures = 0;

struct Criterion {
    int number;
    std::string name;
    double budget_seconds;
};

void report(const Criterion& c, bool pass, double seconds, const std::string& note = "") {
    bool in_time = seconds <= c.budget_seconds;
    bool ok = pass && in_time;
    if (!ok) g_failures++;
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << c.number << ": " << c.name << "  ["
              << seconds << "s";
    if (!in_time) std::cout << ", over budget " << c.budget_seconds << "s";
    std::cout << "]";
    if (!note.empty()) std::cout << "  " << note;
    std::cout << std::endl;
}

template <typename F>
void run(const Criterion& c, F&& body) {
    auto t0 = std::chrono::steady_clock::now();
    bool pass = false;
    std::string note;
    try {
        pass = body(note);
    } catch (const std::exception& e) {
        note = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report(c, pass, secs, note);
}

std::string ledger_path(const std::string& name) { return g_data_dir + "/ledger/" + name; }

TietzeScript load_script(const std::string& name) {
    std::ifstream in(g_data_dir + "/tietze/" + name);
    if (!in) throw std::runtime_error("missing script " + name);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_tietze_script_json(ss.str());
}

// 1. Theorem order suite
void criterion_orders() {
    run({1, "finite Fibonacci orders by coset enumeration", 120.0}, [](std::string& note) {
        auto results = verify_finite_orders(finite_fibonacci_cases());
        bool ok = true;
        for (const auto& r : results) {
            if (!r.pass) {
                ok = false;
                note += " F(" + std::to_string(r.c.r) + "," + std::to_string(r.c.n) + ")";
            }
        }
        note = ok ? std::to_string(results.size()) + " orders exact" : "mismatch:" + note;
        return ok;
    });
}

// 2. curvature tables + closed form
void criterion_curvature_tables() {
    run({2, "curvature tables and closed form", 1.0}, [](std::string& note) {
        LedgerReport tables = check_file(ledger_path("tables_1_2.ledger"));
        bool ok = tables.clean() && tables.verified == 29;
        for (int m = 8; m <= 14 && ok; m++)
            for (int m2 = 0; m2 <= m && ok; m2++)
                for (int m3 = 0; m2 + m3 <= m && ok; m3++) {
                    std::vector<int> degs(m - m2 - m3, 3);
                    degs.insert(degs.end(), m2, 4);
                    degs.insert(degs.end(), m3, 5);
                    ok = curvature_closed_form(m - 8, m2, m3) == curvature(degs);
                }
        note = "29 table entries, all degree multisets of size <= 14 over {3,4,5}";
        return ok;
    });
}

// 3. Euler identity
void criterion_euler() {
    run({3, "total curvature 4 pi on spherical complexes", 1.0}, [](std::string& note) {
        bool ok = true;
        for (const SphericalComplex& k :
             {tetrahedron(), cube(), octahedron(), dodecahedron(), icosahedron()})
            ok = ok && total_curvature(k) == Angle::pi(4);
        std::mt19937_64 seeds(2026);
        for (int t = 0; t < 100 && ok; t++) {
            SphericalComplex k =
                randomized_complex(t % 2 ? cube() : tetrahedron(), 2 + t % 8, seeds());
            ok = k.euler_characteristic() == 2 && total_curvature(k) == Angle::pi(4);
        }
        note = "5 platonic + 100 randomized complexes";
        return ok;
    });
}

// 4. star graph enumeration
void criterion_star_labels() {
    run({4, "vertex labels of degree < 6", 10.0}, [](std::string& note) {
        auto want = [](std::vector<std::string> strs) {
            std::set<VertexLabel> s;
            for (const auto& t : strs) s.insert(VertexLabel::parse(t).canonical());
            return s;
        };
        auto got = [](int d) {
            auto v = enumerate_vertex_labels(d);
            return std::set<VertexLabel>(v.begin(), v.end());
        };
        bool ok3 = got(3) == want({"a~ x y^-1", "b~ mu~ z"});
        auto got4 = got(4);
        auto want4 = want({"a~ a~ z mu~", "b~ b~ x^-1 y"});
        bool ok4 = got4 == want4;
        bool ok5 = got(5) == want({"a~ a~ a~ a~ a~", "b~ b~ b~ b~ b~", "a~ z x^-1 y mu~",
                                   "b~ x^-1 l~ z^-1 y"});
        note = "degree 3: exact; degree 5: exact";
        if (!ok4) {
            note += "; degree 4 disagrees with the catalogue:";
            for (const auto& l : got4)
                if (!want4.count(l)) note += " surplus [" + l.str() + "]";
            for (const auto& l : want4)
                if (!got4.count(l)) note += " missing [" + l.str() + "]";
            note += " -- every pair of the surplus label occurs inside a catalogued label, so no"
                    " path-based reading of the corner grammar excludes it (see decisions notes)";
        }
        return ok3 && ok4 && ok5;
    });
}

// 5. region classification. The five-chord octagon survivor is printed in the
// source as (13)(14)(47)(48)(57), but that set admits no labelling at all
// (checked below), while (13)(14)(48)(57)(58) admits exactly the one
// labelling the downstream counts require; the expected list uses the
// corrected set and the discrepancy is reported.
void criterion_regions() {
    run({5, "region classification by degree", 300.0}, [](std::string& note) {
        bool ok = classify_regions(3).survivors.empty() && classify_regions(5).survivors.empty() &&
                  classify_regions(7).survivors.empty();
        ok = ok && !classify_regions(4).survivors.empty();
        ok = ok && !classify_regions(6).survivors.empty();
        ok = ok && lec_check(ChordConfig::parse(6, "")).witness == "n+1=6";
        ok = ok && lec_check(ChordConfig::parse(6, "(13)")).witness == "n+1=n+3";
        ok = ok && lec_check(ChordConfig::parse(6, "(13)(15)")).witness == "n+1=2n";
        ok = ok && !lac_check(ChordConfig::parse(6, "(13)(14)(15)")).pass;
        ClassificationReport eight = classify_regions(8);
        std::set<ChordConfig> got;
        for (const auto& s : eight.survivors) got.insert(s.config.canonical());
        for (const std::string& s : {"", "(15)", "(14)(15)(58)", "(13)(14)(47)", "(13)(14)(16)",
                                     "(13)(14)(58)", "(13)(14)(48)(57)(58)"})
            ok = ok && got.count(ChordConfig::parse(8, s).canonical()) == 1;
        ok = ok && eight.survivors.size() == 7;
        // the printed five-chord set must be killed by the labelling check
        LacResult printed = lac_check(ChordConfig::parse(8, "(13)(14)(47)(48)(57)"));
        ok = ok && !printed.pass && printed.rule == LacRule::r4_no_labeling;
        ClassificationReport nine = classify_regions(9);
        ok = ok && nine.survivors.size() == 1 && nine.survivors[0].config.chords.empty();
        note = "m in {3,5,7} empty; m=8 has exactly 7 survivors; as-printed five-chord set"
               " (13)(14)(47)(48)(57) is labelling-killed, (13)(14)(48)(57)(58) survives in its"
               " place; m=9 has the chordless 9-gon only";
        return ok;
    });
}

// 6. labeling counts
void criterion_labelings() {
    run({6, "labelled regions of degree 8 and 9", 60.0}, [](std::string& note) {
        std::map<std::string, size_t> expected = {
            {"", 1},           {"(15)", 1},           {"(14)(15)(58)", 4},
            {"(13)(14)(47)", 6}, {"(13)(14)(16)", 2}, {"(13)(14)(58)", 2},
            {"(13)(14)(48)(57)(58)", 1},
        };
        bool ok = true;
        size_t total = 0;
        std::set<std::vector<CornerLetter>> dedup;
        for (const auto& [s, want] : expected) {
            auto ls = enumerate_labelings(ChordConfig::parse(8, s).canonical());
            ok = ok && ls.size() == want;
            total += ls.size();
            for (const auto& l : ls) dedup.insert(l.corner_cycle_canonical());
        }
        auto nine = enumerate_labelings(ChordConfig::parse(9, "").canonical());
        ok = ok && nine.size() == 1;
        total += nine.size();
        for (const auto& l : nine) dedup.insert(l.corner_cycle_canonical());
        // the per-shape counts sum to 18 although the prose total says
        // seventeen; the deduplicated count is the twelve either way
        ok = ok && (total == 17 || total == 18) && dedup.size() == 12;
        note = "per-shape counts (1,1,4,6,2,2,1)+1; total " + std::to_string(total) +
               " before dedup (prose says seventeen), distinct " + std::to_string(dedup.size());
        return ok;
    });
}

// 7. reduction scripts
void criterion_tietze() {
    run({7, "reduction scripts for both families, k = 0..3", 1.0}, [](std::string& note) {
        TietzeScript seven = load_script("family_seven.json");
        TietzeScript eight = load_script("family_eight.json");
        bool ok = true;
        for (int k = 0; k <= 3 && ok; k++) {
            for (ExtensionFamily fam : {ExtensionFamily::seven, ExtensionFamily::eight}) {
                const TietzeScript& s = fam == ExtensionFamily::seven ? seven : eight;
                int n = (fam == ExtensionFamily::seven ? 7 : 8) + 5 * k;
                TietzeVerdict v = verify_tietze_script(build_extension(k, fam), s,
                                                       build_relative_pn(n).flatten());
                ok = ok && v.valid;
            }
        }
        TietzeScript bad = seven;
        bad.steps[1].relator = 0;
        TietzeVerdict rejected =
            verify_tietze_script(build_extension(0, ExtensionFamily::seven), bad,
                                 build_relative_pn(7).flatten());
        ok = ok && !rejected.valid && rejected.failing_step == 1;
        note = "8 validations, 1 rejection at the corrupted step";
        return ok;
    });
}

// 8. ledger suite
void criterion_ledgers() {
    run({8, "inequality ledgers for the whole case analysis", 30.0}, [](std::string& note) {
        bool ok = true;
        std::int64_t entries = 0;
        std::vector<std::string> findings;
        for (const std::string& name :
             {"tables_1_2.ledger", "table3_rows.ledger", "tables_4_5.ledger",
              "tables_6_9.ledger", "tables_10_12.ledger", "thresholds.ledger",
              "prop10_4.ledger", "prop11_3.ledger", "sec11_cases.ledger"}) {
            LedgerReport r = check_file(ledger_path(name));
            ok = ok && r.clean();
            entries += r.verified;
            for (const auto& f : r.findings) findings.push_back(name + ": " + f);
        }
        // transcribed-as-printed anomalies must refute, and stay documented
        LedgerReport disc = check_file(ledger_path("source_discrepancies.ledger"));
        ok = ok && disc.refuted == static_cast<std::int64_t>(disc.verdicts.size());
        std::ofstream out(g_data_dir + "/ledger/findings.out");
        for (const auto& f : findings) out << f << "\n";
        for (const auto& v : disc.verdicts) out << "discrepancy " << v.id << ": " << v.detail << "\n";
        note = std::to_string(entries) + " entries verified, " +
               std::to_string(disc.verdicts.size()) + " documented discrepancies, " +
               std::to_string(findings.size()) + " stated-value findings";
        return ok;
    });
}

// 9. oracle cross-checks
void criterion_oracle_cross() {
    run({9, "abelianization cross-checks", 5.0}, [](std::string& note) {
        auto inv23 = abelianization(build_fibonacci(2, 3));
        bool ok = inv23 == std::vector<BigInt>{2, 2};
        auto inv24 = abelianization(build_fibonacci(2, 4));
        ok = ok && inv24 == std::vector<BigInt>{5};
        for (const OrderCase& c : finite_fibonacci_cases()) {
            BigInt ab = 1;
            for (const BigInt& d : abelianization(build_fibonacci(c.r, c.n))) {
                if (d == 0) { ok = false; break; }
                ab *= d;
            }
            ok = ok && BigInt(c.expected) % ab == 0;
        }
        note = "F(2,3) -> (2,2), F(2,4) -> (5), |ab| divides every order";
        return ok;
    });
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) g_data_dir = argv[1];
    criterion_orders();
    criterion_curvature_tables();
    criterion_euler();
    criterion_star_labels();
    criterion_regions();
    criterion_labelings();
    criterion_tietze();
    criterion_ledgers();
    criterion_oracle_cross();
    if (g_failures) {
        std::cout << g_failures << " criterion(s) failed" << std::endl;
        return 1;
    }
    std::cout << "all criteria passed" << std::endl;
    return 0;
}
