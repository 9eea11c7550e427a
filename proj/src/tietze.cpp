#include "fib/tietze.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace fib {

namespace {

struct StepError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int relator_at(const Presentation& p, int idx) {
    if (idx < 0 || idx >= static_cast<int>(p.relators.size()))
        throw StepError("relator index " + std::to_string(idx) + " out of range");
    return idx;
}

// relator must be a nonempty power gen^(+-m); returns (gen, m > 0) with the
// stored sign folded into the caller's use
std::pair<int, std::int64_t> as_power(const Presentation& p, int idx) {
    const Word& w = p.relators[relator_at(p, idx)];
    if (w.empty()) throw StepError("relator " + std::to_string(idx) + " is trivial");
    int g = w.letters[0].gen;
    for (Letter l : w.letters)
        if (l.gen != g || l.sign != w.letters[0].sign)
            throw StepError("relator " + std::to_string(idx) + " is not a generator power");
    return {g, static_cast<std::int64_t>(w.size())};
}

void remove_generator(Presentation& p, int gen) {
    for (const Word& r : p.relators)
        for (Letter l : r.letters)
            if (l.gen == gen) throw StepError("generator still occurs in a relator");
    p.generators.erase(p.generators.begin() + gen);
    for (Word& r : p.relators)
        for (Letter& l : r.letters)
            if (l.gen > gen) l.gen--;
}

std::int64_t mod_pos(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

void apply_step(Presentation& p, const TietzeStep& s) {
    switch (s.kind) {
        case TietzeStep::Kind::add_generator: {
            Word w = parse_word(p, s.word);  // parsed before the new name exists
            int g = p.add_generator(s.name);
            Word rel = Word::power({g, -1}, 1).concat(w);
            p.add_relator(free_reduce(rel));
            break;
        }
        case TietzeStep::Kind::eliminate_generator: {
            int g = p.require_gen(s.name);
            int ri = relator_at(p, s.relator);
            const Word& rel = p.relators[ri];
            int occurrences = 0;
            size_t at = 0;
            for (size_t i = 0; i < rel.letters.size(); i++)
                if (rel.letters[i].gen == g) {
                    occurrences++;
                    at = i;
                }
            if (occurrences != 1)
                throw StepError("relator does not define " + s.name + " (occurs " +
                                std::to_string(occurrences) + " times)");
            // rotate so the defining letter leads: g^e w = 1  =>  g = w^-e
            Word rot = rotate(rel, at);
            Word rest(std::vector<Letter>(rot.letters.begin() + 1, rot.letters.end()));
            Word value = rot.letters[0].sign > 0 ? rest.inverse() : rest;
            p.relators.erase(p.relators.begin() + ri);
            for (Word& r : p.relators) r = cyclic_reduce(substitute(r, g, value));
            remove_generator(p, g);
            break;
        }
        case TietzeStep::Kind::replace_by_inverse: {
            int g = p.require_gen(s.name);
            for (Word& r : p.relators)
                for (Letter& l : r.letters)
                    if (l.gen == g) l.sign = -l.sign;
            break;
        }
        case TietzeStep::Kind::insert_power: {
            auto [g, m] = as_power(p, s.modulus_relator);
            if (p.generators[g] != s.name)
                throw StepError("modulus relator is not a power of " + s.name);
            int ri = relator_at(p, s.relator);
            Word w = p.relators[ri];
            size_t pos = s.pos == "end" ? w.size() : static_cast<size_t>(std::stoul(s.pos));
            if (pos > w.size()) throw StepError("insert position out of range");
            Word ins = Word::power({g, +1}, s.count * m);
            Word out;
            out.letters.insert(out.letters.end(), w.letters.begin(), w.letters.begin() + pos);
            out.letters.insert(out.letters.end(), ins.letters.begin(), ins.letters.end());
            out.letters.insert(out.letters.end(), w.letters.begin() + pos, w.letters.end());
            p.relators[ri] = cyclic_reduce(free_reduce(out));
            break;
        }
        case TietzeStep::Kind::remove_power_relator: {
            auto [g, m] = as_power(p, s.modulus_relator);
            auto [g2, k] = as_power(p, s.relator);
            if (s.relator == s.modulus_relator) throw StepError("relator removed against itself");
            if (g2 != g) throw StepError("relators are powers of different generators");
            if (k % m != 0) throw StepError("power is not a multiple of the modulus");
            p.relators.erase(p.relators.begin() + relator_at(p, s.relator));
            break;
        }
        case TietzeStep::Kind::replace_generator_by_word: {
            int g = p.require_gen(s.name);
            auto [pg, m] = as_power(p, s.power_relator);
            if (pg != g) throw StepError("power relator is not a power of " + s.name);
            const Word& def = p.relators[relator_at(p, s.defining_relator)];
            int other = -1;
            size_t at = 0;
            for (size_t i = 0; i < def.letters.size(); i++) {
                if (def.letters[i].gen != g) {
                    if (other >= 0) throw StepError("defining relator has two foreign letters");
                    other = def.letters[i].gen;
                    at = i;
                }
            }
            if (other < 0) throw StepError("defining relator involves only " + s.name);
            // s^e g^t = 1  =>  s = g^(-e*t)
            Word rot = rotate(def, at);
            std::int64_t t_exp = 0;
            for (size_t i = 1; i < rot.letters.size(); i++) t_exp += rot.letters[i].sign;
            std::int64_t pexp = -static_cast<std::int64_t>(rot.letters[0].sign) * t_exp;
            Word w = parse_word(p, s.word);
            if (w.empty()) throw StepError("replacement word is empty");
            std::int64_t c = 0;
            for (Letter l : w.letters) {
                if (l.gen != other) throw StepError("replacement word is not a power of the defined generator");
                c += l.sign;
            }
            if (static_cast<std::int64_t>(w.size()) != std::abs(c))
                throw StepError("replacement word is not reduced");
            if (mod_pos(pexp * c - 1, m) != 0)
                throw StepError("replacement power is not inverse to the defining power mod " +
                                std::to_string(m));
            for (Word& r : p.relators) r = cyclic_reduce(substitute(r, g, w));
            remove_generator(p, g);
            break;
        }
        case TietzeStep::Kind::rename_generator: {
            int g = p.require_gen(s.name);
            if (p.gen_index(s.to) >= 0) throw StepError("generator " + s.to + " already exists");
            if (s.to.empty()) throw StepError("empty rename target");
            p.generators[g] = s.to;
            break;
        }
        case TietzeStep::Kind::cyclic_permute: {
            int ri = relator_at(p, s.relator);
            Word& w = p.relators[ri];
            if (!w.empty()) {
                std::int64_t n = static_cast<std::int64_t>(w.size());
                w = rotate(w, static_cast<size_t>(mod_pos(s.shift, n)));
            }
            break;
        }
        case TietzeStep::Kind::invert_relator: {
            int ri = relator_at(p, s.relator);
            p.relators[ri] = p.relators[ri].inverse();
            break;
        }
    }
    p.check();
}

}  // namespace

std::string step_kind_name(TietzeStep::Kind k) {
    switch (k) {
        case TietzeStep::Kind::add_generator: return "add_generator";
        case TietzeStep::Kind::eliminate_generator: return "eliminate_generator";
        case TietzeStep::Kind::replace_by_inverse: return "replace_by_inverse";
        case TietzeStep::Kind::insert_power: return "insert_power";
        case TietzeStep::Kind::remove_power_relator: return "remove_power_relator";
        case TietzeStep::Kind::replace_generator_by_word: return "replace_generator_by_word";
        case TietzeStep::Kind::rename_generator: return "rename_generator";
        case TietzeStep::Kind::cyclic_permute: return "cyclic_permute";
        case TietzeStep::Kind::invert_relator: return "invert_relator";
    }
    return "?";
}

TietzeVerdict verify_tietze_script(const Presentation& start, const TietzeScript& script,
                                   const Presentation& target) {
    TietzeVerdict v;
    Presentation p = start;
    v.trace.push_back(p);
    for (size_t i = 0; i < script.steps.size(); i++) {
        try {
            apply_step(p, script.steps[i]);
        } catch (const std::exception& e) {
            v.valid = false;
            v.failing_step = static_cast<int>(i);
            v.reason = std::string(e.what()) + " [" + step_kind_name(script.steps[i].kind) + "]";
            return v;
        }
        v.trace.push_back(p);
    }
    if (!p.equivalent(target)) {
        v.valid = false;
        v.failing_step = static_cast<int>(script.steps.size());
        v.reason = "final presentation differs from target";
        return v;
    }
    v.valid = true;
    return v;
}

TietzeScript parse_tietze_script_json(const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    TietzeScript script;
    script.note = j.value("note", "");
    for (const auto& js : j.at("steps")) {
        TietzeStep s;
        std::string kind = js.at("kind").get<std::string>();
        if (kind == "add_generator") s.kind = TietzeStep::Kind::add_generator;
        else if (kind == "eliminate_generator") s.kind = TietzeStep::Kind::eliminate_generator;
        else if (kind == "replace_by_inverse") s.kind = TietzeStep::Kind::replace_by_inverse;
        else if (kind == "insert_power") s.kind = TietzeStep::Kind::insert_power;
        else if (kind == "remove_power_relator") s.kind = TietzeStep::Kind::remove_power_relator;
        else if (kind == "replace_generator_by_word") s.kind = TietzeStep::Kind::replace_generator_by_word;
        else if (kind == "rename_generator") s.kind = TietzeStep::Kind::rename_generator;
        else if (kind == "cyclic_permute") s.kind = TietzeStep::Kind::cyclic_permute;
        else if (kind == "invert_relator") s.kind = TietzeStep::Kind::invert_relator;
        else throw std::invalid_argument("unknown step kind: " + kind);
        s.name = js.value("name", "");
        s.to = js.value("to", "");
        s.word = js.value("word", "");
        s.relator = js.value("relator", -1);
        s.modulus_relator = js.value("modulus_relator", -1);
        s.power_relator = js.value("power_relator", -1);
        s.defining_relator = js.value("defining_relator", -1);
        s.count = js.value("count", static_cast<std::int64_t>(0));
        s.shift = js.value("shift", static_cast<std::int64_t>(0));
        if (js.contains("pos")) {
            if (js["pos"].is_string()) s.pos = js["pos"].get<std::string>();
            else s.pos = std::to_string(js["pos"].get<std::int64_t>());
        }
        script.steps.push_back(std::move(s));
    }
    return script;
}

}  // namespace fib
