#include "fib/ledger.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace fib {

const std::map<std::string, std::int64_t>& default_pair_sums() {
    static const std::map<std::string, std::int64_t> sums = {
        {"a", 7}, {"b", 8}, {"c", 9}, {"d", 10}, {"e", 11}, {"f", 12}, {"h", 14},
    };
    return sums;
}

namespace {

struct MalformedEntry : std::runtime_error {
    using std::runtime_error::runtime_error;
};

bool is_integer_token(const std::string& s) {
    if (s.empty()) return false;
    size_t i = s[0] == '-' ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); i++)
        if (!isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

// degree token "6+" evaluates at its bound (curvature decreases, deficit
// grows with degree, so the bound is the extreme case either way)
int degree_value(const std::string& tok) {
    std::string t = tok;
    if (!t.empty() && t.back() == '+') t.pop_back();
    if (!is_integer_token(t)) throw MalformedEntry("bad degree token: " + tok);
    int d = std::stoi(t);
    if (d < 3) throw MalformedEntry("degree below 3: " + tok);
    return d;
}

// Sum of a symbolic vector in pi/30 units. Stem symbols s1/s2 must pair up
// one-for-one; explicit groups ("x1+y1") must each appear exactly once.
std::int64_t symbolic_sum(const std::vector<std::string>& tokens,
                          const std::map<std::string, std::int64_t>& extra) {
    std::int64_t total = 0;
    std::map<std::string, std::int64_t> group_sum = default_pair_sums();
    std::map<std::string, std::string> member_group;  // explicit members
    for (const auto& [key, sum] : extra) {
        if (key.find('+') != std::string::npos) {
            std::string gid = key;
            size_t start = 0;
            while (start <= key.size()) {
                size_t plus = key.find('+', start);
                std::string member = key.substr(start, plus == std::string::npos
                                                           ? std::string::npos
                                                           : plus - start);
                if (member.empty()) throw MalformedEntry("bad group key: " + key);
                member_group[member] = gid;
                if (plus == std::string::npos) break;
                start = plus + 1;
            }
            group_sum[gid] = sum;
        } else {
            group_sum[key] = sum;
        }
    }
    std::map<std::string, std::int64_t> stem_count1, stem_count2;
    std::map<std::string, std::int64_t> member_count;
    for (const std::string& tok : tokens) {
        if (is_integer_token(tok)) {
            std::int64_t v = std::stoll(tok);
            if (v < 0) throw MalformedEntry("negative cv entry: " + tok);
            total += v;
            continue;
        }
        if (member_group.count(tok)) {
            member_count[tok]++;
            continue;
        }
        if (tok.size() >= 2 && (tok.back() == '1' || tok.back() == '2')) {
            std::string stem = tok.substr(0, tok.size() - 1);
            if (!group_sum.count(stem)) throw MalformedEntry("unknown pair symbol: " + tok);
            (tok.back() == '1' ? stem_count1 : stem_count2)[stem]++;
            continue;
        }
        throw MalformedEntry("unknown cv token: " + tok);
    }
    for (const auto& [stem, n1] : stem_count1) {
        std::int64_t n2 = stem_count2.count(stem) ? stem_count2[stem] : 0;
        if (n1 != n2) throw MalformedEntry("unpaired symbol: " + stem);
        total += n1 * group_sum.at(stem);
    }
    for (const auto& [stem, n2] : stem_count2)
        if (!stem_count1.count(stem)) throw MalformedEntry("unpaired symbol: " + stem);
    // explicit groups: every member exactly once
    std::map<std::string, std::vector<std::string>> groups;
    for (const auto& [member, gid] : member_group) groups[gid].push_back(member);
    for (const auto& [gid, members] : groups) {
        bool any = false, all = true;
        for (const std::string& mem : members) {
            std::int64_t n = member_count.count(mem) ? member_count[mem] : 0;
            if (n > 1) throw MalformedEntry("repeated group member: " + mem);
            any = any || n == 1;
            all = all && n == 1;
        }
        if (any && !all) throw MalformedEntry("incomplete group: " + gid);
        if (all) total += group_sum.at(gid);
    }
    return total;
}

bool claim_holds(const std::string& claim, Angle value, std::string& what) {
    if (claim.rfind("<=", 0) == 0) {
        what = "<= " + claim.substr(2) + " pi";
        return value <= Angle(Rational::parse(claim.substr(2)));
    }
    if (claim.rfind("<", 0) == 0) {
        what = "< " + claim.substr(1) + " pi";
        return value < Angle(Rational::parse(claim.substr(1)));
    }
    if (claim.rfind("=", 0) == 0) {
        what = "= " + claim.substr(1) + " pi";
        return value == Angle(Rational::parse(claim.substr(1)));
    }
    throw MalformedEntry("bad claim: " + claim);
}

}  // namespace

EntryVerdict check_entry(const LedgerEntry& e) {
    EntryVerdict v;
    v.id = e.id;
    try {
        Angle value = Angle::zero();
        std::int64_t cv_sum = 0;
        switch (e.kind) {
            case LedgerEntry::Kind::curvature: {
                std::vector<int> ds;
                for (const auto& t : e.degrees) ds.push_back(degree_value(t));
                value = curvature(ds);
                break;
            }
            case LedgerEntry::Kind::caze: {
                std::vector<int> ds;
                for (const auto& t : e.degrees) ds.push_back(degree_value(t));
                cv_sum = symbolic_sum(e.cv, e.pairs);
                value = curvature(ds) + Angle::thirtieths(cv_sum);
                for (const auto& adj : e.adjust) value = value + Angle::thirtieths(adj.thirtieths);
                break;
            }
            case LedgerEntry::Kind::sum: {
                cv_sum = symbolic_sum(e.cv, e.pairs);
                value = Angle::thirtieths(cv_sum);
                for (const auto& adj : e.adjust) value = value + Angle::thirtieths(adj.thirtieths);
                break;
            }
            case LedgerEntry::Kind::deficit: {
                // sum of vertex deficits plus the edge slack 4|kappa| - sum(kappa),
                // everything in pi/30
                Rational def(0);
                for (const auto& t : e.degrees) {
                    int d = degree_value(t);
                    def += Rational(20) - Rational(60, d);
                }
                std::int64_t ks = symbolic_sum(e.kappa, e.pairs);
                def += Rational(4 * static_cast<std::int64_t>(e.kappa.size()) - ks);
                for (const auto& adj : e.adjust) def += Rational(adj.thirtieths);
                value = Angle(def * Rational(1, 30));
                break;
            }
            case LedgerEntry::Kind::formula: {
                if (e.range_lo > e.range_hi) throw MalformedEntry("empty range");
                for (std::int64_t k = e.range_lo; k <= e.range_hi; k++) {
                    Angle a;
                    if (e.formula == "type_a_bound") a = type_a_bound(k);
                    else if (e.formula == "dagger") a = dagger_bound(static_cast<int>(k));
                    else if (e.formula == "delta0") a = delta0_bound(k);
                    else throw MalformedEntry("unknown formula: " + e.formula);
                    if (e.nonpositive_iff_ge) {
                        bool want = k >= *e.nonpositive_iff_ge;
                        if ((a.sign() <= 0) != want) {
                            v.status = EntryVerdict::Status::refuted;
                            v.detail = "at " + std::to_string(k) + ": " + a.str();
                            return v;
                        }
                    }
                    if (e.equals_pi) {
                        if (a != Angle(Rational::parse(*e.equals_pi))) {
                            v.status = EntryVerdict::Status::refuted;
                            v.detail = "at " + std::to_string(k) + ": " + a.str();
                            return v;
                        }
                    }
                }
                v.status = EntryVerdict::Status::verified;
                v.detail = "holds on [" + std::to_string(e.range_lo) + ", " +
                           std::to_string(e.range_hi) + "]";
                return v;
            }
        }
        std::string what;
        bool ok = claim_holds(e.claim, value, what);
        v.status = ok ? EntryVerdict::Status::verified : EntryVerdict::Status::refuted;
        v.detail = "computed " + value.str() + ", claimed " + what;
        if (e.stated && (e.kind == LedgerEntry::Kind::caze || e.kind == LedgerEntry::Kind::sum) &&
            cv_sum != *e.stated) {
            v.stated_mismatch = true;
            v.detail += "; source states " + std::to_string(*e.stated) + "/30 pi, transcription sums to " +
                        std::to_string(cv_sum) + "/30 pi";
        }
    } catch (const MalformedEntry& ex) {
        v.status = EntryVerdict::Status::malformed;
        v.detail = ex.what();
    } catch (const std::exception& ex) {
        v.status = EntryVerdict::Status::malformed;
        v.detail = ex.what();
    }
    return v;
}

LedgerReport check_entries(const std::vector<LedgerEntry>& entries) {
    LedgerReport report;
    for (const LedgerEntry& e : entries) {
        EntryVerdict v = check_entry(e);
        switch (v.status) {
            case EntryVerdict::Status::verified: report.verified++; break;
            case EntryVerdict::Status::refuted: report.refuted++; break;
            case EntryVerdict::Status::malformed: report.malformed++; break;
        }
        if (v.stated_mismatch) report.findings.push_back(v.id + ": " + v.detail);
        report.verdicts.push_back(std::move(v));
    }
    std::sort(report.verdicts.begin(), report.verdicts.end(),
              [](const EntryVerdict& a, const EntryVerdict& b) { return a.id < b.id; });
    return report;
}

std::vector<LedgerEntry> parse_ledger(const std::string& text) {
    std::vector<LedgerEntry> out;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        lineno++;
        if (line.empty() || line[0] == '#') continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const std::exception& ex) {
            throw std::runtime_error("line " + std::to_string(lineno) + ": " + ex.what());
        }
        LedgerEntry e;
        e.id = j.value("id", "line" + std::to_string(lineno));
        std::string kind = j.value("kind", "case");
        if (kind == "case") e.kind = LedgerEntry::Kind::caze;
        else if (kind == "sum") e.kind = LedgerEntry::Kind::sum;
        else if (kind == "deficit") e.kind = LedgerEntry::Kind::deficit;
        else if (kind == "curvature") e.kind = LedgerEntry::Kind::curvature;
        else if (kind == "formula") e.kind = LedgerEntry::Kind::formula;
        else throw std::runtime_error("line " + std::to_string(lineno) + ": bad kind " + kind);
        e.src = j.value("src", "");
        auto tokens = [](const nlohmann::json& arr) {
            std::vector<std::string> out;
            for (const auto& t : arr) {
                if (t.is_string()) out.push_back(t.get<std::string>());
                else out.push_back(std::to_string(t.get<std::int64_t>()));
            }
            return out;
        };
        if (j.contains("degrees")) e.degrees = tokens(j["degrees"]);
        if (j.contains("d")) e.degrees = tokens(j["d"]);
        if (j.contains("cv")) e.cv = tokens(j["cv"]);
        if (j.contains("kappa")) e.kappa = tokens(j["kappa"]);
        if (j.contains("pairs"))
            for (auto it = j["pairs"].begin(); it != j["pairs"].end(); ++it)
                e.pairs[it.key()] = it.value().get<std::int64_t>();
        if (j.contains("adjust"))
            for (const auto& a : j["adjust"])
                e.adjust.push_back({a.at("v").get<std::int64_t>(), a.value("note", "")});
        if (j.contains("claim")) {
            if (j["claim"].is_number())
                e.claim = "=" + std::to_string(j["claim"].get<std::int64_t>()) + "/30";
            else
                e.claim = j["claim"].get<std::string>();
        }
        if (j.contains("stated")) e.stated = j["stated"].get<std::int64_t>();
        e.formula = j.value("formula", "");
        if (j.contains("range")) {
            e.range_lo = j["range"][0].get<std::int64_t>();
            e.range_hi = j["range"][1].get<std::int64_t>();
        }
        if (j.contains("nonpositive_iff_ge"))
            e.nonpositive_iff_ge = j["nonpositive_iff_ge"].get<std::int64_t>();
        if (j.contains("equals_pi")) e.equals_pi = j["equals_pi"].get<std::string>();
        out.push_back(std::move(e));
    }
    return out;
}

LedgerReport check_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open ledger file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return check_entries(parse_ledger(ss.str()));
}

}  // namespace fib
