#include "fib/presentation.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace fib {

int Presentation::gen_index(const std::string& name) const {
    for (size_t i = 0; i < generators.size(); i++)
        if (generators[i] == name) return static_cast<int>(i);
    return -1;
}

int Presentation::require_gen(const std::string& name) const {
    int i = gen_index(name);
    if (i < 0) throw std::invalid_argument("unknown generator: " + name);
    return i;
}

int Presentation::add_generator(const std::string& name) {
    if (name.empty()) throw std::invalid_argument("empty generator name");
    if (gen_index(name) >= 0) throw std::invalid_argument("duplicate generator: " + name);
    generators.push_back(name);
    return static_cast<int>(generators.size()) - 1;
}

void Presentation::add_relator(Word w) {
    w = cyclic_reduce(w);
    for (Letter l : w.letters)
        if (l.gen < 0 || l.gen >= static_cast<int>(generators.size()))
            throw std::invalid_argument("relator letter names undeclared generator");
    relators.push_back(std::move(w));
}

void Presentation::check() const {
    for (size_t i = 0; i < generators.size(); i++)
        for (size_t j = i + 1; j < generators.size(); j++)
            if (generators[i] == generators[j]) throw std::invalid_argument("duplicate generator");
    for (const Word& r : relators)
        for (Letter l : r.letters)
            if (l.gen < 0 || l.gen >= static_cast<int>(generators.size()))
                throw std::invalid_argument("relator letter names undeclared generator");
}

std::string Presentation::letter_str(Letter l) const {
    std::string s = generators.at(l.gen);
    if (l.sign < 0) s += "^-1";
    return s;
}

std::string Presentation::word_str(const Word& w) const {
    std::string s;
    for (size_t i = 0; i < w.letters.size(); i++) {
        if (i) s += ' ';
        s += letter_str(w.letters[i]);
    }
    return s;
}

std::string Presentation::str() const {
    std::string s = "gens:";
    for (const auto& g : generators) s += " " + g;
    s += '\n';
    for (const Word& r : relators) s += word_str(r) + '\n';
    return s;
}

bool Presentation::equivalent(const Presentation& o) const {
    // generator sets must agree by name; storage order may differ
    if (generators.size() != o.generators.size()) return false;
    std::vector<int> remap(generators.size());
    for (size_t i = 0; i < generators.size(); i++) {
        int j = o.gen_index(generators[i]);
        if (j < 0) return false;
        remap[i] = j;
    }
    auto canon = [](std::vector<Word> rs) {
        for (Word& r : rs) r = cyclic_canonical(r);
        std::sort(rs.begin(), rs.end());
        return rs;
    };
    std::vector<Word> mine = relators;
    for (Word& r : mine)
        for (Letter& l : r.letters) l.gen = remap[l.gen];
    return canon(mine) == canon(o.relators);
}

Presentation Presentation::parse(const std::string& text) {
    Presentation p;
    std::istringstream in(text);
    std::string line;
    bool have_header = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (!have_header) {
            std::istringstream ls(line);
            std::string tok;
            ls >> tok;
            if (tok != "gens:") throw std::invalid_argument("expected 'gens:' header");
            while (ls >> tok) p.add_generator(tok);
            have_header = true;
        } else {
            p.add_relator(parse_word(p, line));
        }
    }
    if (!have_header) throw std::invalid_argument("missing 'gens:' header");
    return p;
}

std::vector<std::string> RelativePresentation::all_generators() const {
    std::vector<std::string> gens = coefficient.generators;
    gens.insert(gens.end(), extra_gens.begin(), extra_gens.end());
    return gens;
}

Presentation RelativePresentation::flatten() const {
    Presentation p;
    for (const auto& g : all_generators()) p.add_generator(g);
    for (const Word& r : coefficient.relators) p.add_relator(r);
    for (const Word& r : mixed_relators) p.add_relator(r);
    return p;
}

Presentation build_fibonacci(int r, int n) {
    if (r < 2) throw std::invalid_argument("r must be at least 2");
    if (n < 2) throw std::invalid_argument("n must be at least 2");
    Presentation p;
    for (int i = 1; i <= n; i++) p.add_generator("x" + std::to_string(i));
    for (int i = 0; i < n; i++) {
        Word w;
        for (int j = 0; j < r; j++) w.letters.push_back({(i + j) % n, +1});
        w.letters.push_back({(i + r) % n, -1});
        p.add_relator(w);
    }
    return p;
}

RelativePresentation build_relative_pn(int n, bool* below_range) {
    if (n < 2) throw std::invalid_argument("n must be at least 2");
    if (below_range) *below_range = n < 7;
    RelativePresentation rp;
    rp.coefficient.add_generator("t");
    rp.coefficient.add_relator(Word::power({0, +1}, 5));
    rp.extra_gens = {"u"};
    // generator indices in the flattened ordering: t = 0, u = 1
    Word w = Word::power({0, +1}, 2).concat(Word::power({1, +1}, 1)).concat(Word::power({0, +1}, 1));
    w = w.concat(Word::power({1, +1}, -n));
    if (!w.is_cyclically_reduced()) throw std::logic_error("mixed relator not cyclically reduced");
    rp.mixed_relators.push_back(w);
    return rp;
}

Presentation build_extension(int k, ExtensionFamily family) {
    if (k < 0) throw std::invalid_argument("k must be nonnegative");
    Presentation p;
    int x = p.add_generator("x");
    int t = p.add_generator("t");
    p.add_relator(Word::power({t, +1}, 5));
    int reps = (family == ExtensionFamily::seven ? 7 : 8) + 5 * k;
    int tail = family == ExtensionFamily::seven ? 2 : 3;
    Word w;
    for (int i = 0; i < reps; i++) {
        w.letters.push_back({x, +1});
        w.letters.push_back({t, -1});
    }
    w.letters.push_back({x, -1});
    for (int i = 0; i < tail; i++) w.letters.push_back({t, +1});
    p.add_relator(w);
    return p;
}

Word parse_word(const Presentation& p, const std::string& text) {
    Word w;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        int sign = +1;
        std::string name = tok;
        size_t caret = tok.find('^');
        if (caret != std::string::npos) {
            name = tok.substr(0, caret);
            std::string exp = tok.substr(caret + 1);
            if (exp != "-1" && exp != "1")
                throw std::invalid_argument("unsupported exponent in word: " + tok);
            if (exp == "-1") sign = -1;
        }
        w.letters.push_back({p.require_gen(name), sign});
    }
    return w;
}

}  // namespace fib
