#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "fib/tietze.hpp"

using namespace fib;

namespace {

std::string data_dir() {
    const char* env = std::getenv("FIB_DATA_DIR");
    return env ? env : "../data";
}

TietzeScript load(const std::string& name) {
    std::ifstream in(data_dir() + "/tietze/" + name);
    REQUIRE(in);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_tietze_script_json(ss.str());
}

Presentation target_for(ExtensionFamily fam, int k) {
    int n = (fam == ExtensionFamily::seven ? 7 : 8) + 5 * k;
    return build_relative_pn(n).flatten();
}

}  // namespace

TEST_CASE("the shipped reduction scripts validate for k = 0..3") {
    TietzeScript seven = load("family_seven.json");
    TietzeScript eight = load("family_eight.json");
    for (int k = 0; k <= 3; k++) {
        TietzeVerdict v7 = verify_tietze_script(build_extension(k, ExtensionFamily::seven), seven,
                                                target_for(ExtensionFamily::seven, k));
        INFO("family seven, k=" << k << ": " << v7.reason);
        CHECK(v7.valid);
        TietzeVerdict v8 = verify_tietze_script(build_extension(k, ExtensionFamily::eight), eight,
                                                target_for(ExtensionFamily::eight, k));
        INFO("family eight, k=" << k << ": " << v8.reason);
        CHECK(v8.valid);
    }
}

TEST_CASE("replay is deterministic") {
    TietzeScript seven = load("family_seven.json");
    TietzeVerdict a = verify_tietze_script(build_extension(1, ExtensionFamily::seven), seven,
                                           target_for(ExtensionFamily::seven, 1));
    TietzeVerdict b = verify_tietze_script(build_extension(1, ExtensionFamily::seven), seven,
                                           target_for(ExtensionFamily::seven, 1));
    REQUIRE(a.trace.size() == b.trace.size());
    for (size_t i = 0; i < a.trace.size(); i++) CHECK(a.trace[i].str() == b.trace[i].str());
}

TEST_CASE("a corrupted relator index is caught at the right step") {
    TietzeScript bad = load("family_seven.json");
    REQUIRE(bad.steps[1].kind == TietzeStep::Kind::eliminate_generator);
    bad.steps[1].relator = 0;  // points at t^5 instead of the defining relator
    TietzeVerdict v = verify_tietze_script(build_extension(0, ExtensionFamily::seven), bad,
                                           target_for(ExtensionFamily::seven, 0));
    CHECK(!v.valid);
    CHECK(v.failing_step == 1);
}

TEST_CASE("a wrong target is rejected after the last step") {
    TietzeScript seven = load("family_seven.json");
    TietzeVerdict v = verify_tietze_script(build_extension(0, ExtensionFamily::seven), seven,
                                           target_for(ExtensionFamily::seven, 1));
    CHECK(!v.valid);
    CHECK(v.failing_step == static_cast<int>(seven.steps.size()));
}

TEST_CASE("illegal moves are rejected") {
    Presentation p;
    p.add_generator("t");
    p.add_relator(Word::power({0, +1}, 5));

    TietzeScript s;
    TietzeStep add;
    add.kind = TietzeStep::Kind::add_generator;
    add.name = "t";  // duplicate name
    add.word = "t";
    s.steps.push_back(add);
    TietzeVerdict v = verify_tietze_script(p, s, p);
    CHECK(!v.valid);
    CHECK(v.failing_step == 0);

    // replace_generator_by_word with a power that is not inverse mod 5
    Presentation q;
    q.add_generator("t");
    q.add_generator("s");
    q.add_relator(Word::power({0, +1}, 5));
    q.add_relator(Word::power({1, +1}, 1).concat(Word::power({0, +1}, -3)));  // s = t^3
    TietzeScript s2;
    TietzeStep rep;
    rep.kind = TietzeStep::Kind::replace_generator_by_word;
    rep.name = "t";
    rep.word = "s s s";  // t = s^3 would need 3*3 == 1 mod 5, which fails
    rep.power_relator = 0;
    rep.defining_relator = 1;
    s2.steps.push_back(rep);
    TietzeVerdict v2 = verify_tietze_script(q, s2, q);
    CHECK(!v2.valid);
}
