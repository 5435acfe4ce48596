#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "supred/construct.hpp"
#include "supred/error.hpp"
#include "supred/supervision.hpp"

using namespace supred;
using supred::testing::fixture;
using supred::testing::Rng;

namespace {

struct Example1 {
    Automaton g = fixture("example1/g.aut");
    Automaton s = fixture("example1/s.aut");
    StateId z(const char* name) const { return *s.find_state(name); }
    EventSet events(std::initializer_list<const char*> names) const {
        EventSet out(s.num_events());
        for (auto n : names) out.insert(s.alphabet().id(n));
        return out;
    }
};

}  // namespace

TEST_CASE("Example-1 control data") {
    Example1 ex;
    auto data = control_data(ex.g, ex.s);
    const auto& z3 = data.at(ex.z("z3"));
    CHECK(z3.enabled == ex.events({"qo1", "hM", "hH"}));
    CHECK(z3.disabled == ex.events({"qo0"}));
    CHECK(!z3.marked_s);
    CHECK(!z3.marked_g);
    const auto& z2 = data.at(ex.z("z2"));
    CHECK(z2.enabled == ex.events({"qo0", "qo1", "hL", "hM", "hH"}));
    CHECK(z2.disabled.empty());
    CHECK(z2.marked_s);
    CHECK(z2.marked_g);
    CHECK_THROWS_AS(data.at(4), PreconditionError);

    CHECK(format_control_table(ex.s, data) ==
          "z0: En={hL,hM} D={} M=false T=false\n"
          "z1: En={qo0,qo1,hL,hM} D={} M=false T=false\n"
          "z2: En={qo0,qo1,hL,hM,hH} D={} M=true T=true\n"
          "z3: En={qo1,hM,hH} D={qo0} M=false T=false\n");
}

TEST_CASE("unreached supervisor states carry vacuous data") {
    Example1 ex;
    auto s = ex.s;
    StateId extra = s.add_state("z4", true);
    s.add_transition(extra, 0, extra);
    auto data = control_data(ex.g, s);
    CHECK(!data[extra].reached);
    CHECK(data[extra].disabled.empty());
    CHECK(!data[extra].marked_s);
    CHECK(!data[extra].marked_g);
    CHECK(data[0].reached);
}

TEST_CASE("control data matches string enumeration") {
    Rng rng(21);
    for (int i = 0; i < 200; ++i) {
        auto [g, s] = testing::random_instance(rng);
        auto data = control_data(g, s);
        auto ref = oracle::control_data(g, s);
        for (StateId z = 0; z < s.num_states(); ++z) {
            CHECK(data[z].enabled == ref[z].enabled);
            CHECK(data[z].disabled == ref[z].disabled);
            CHECK(data[z].marked_s == ref[z].marked_s);
            CHECK(data[z].marked_g == ref[z].marked_g);
            CHECK(data[z].reached == ref[z].reached);
            CHECK(!data[z].enabled.intersects(data[z].disabled));
            CHECK((!data[z].marked_s || data[z].marked_g));
        }
    }
}

TEST_CASE("compatibility on Example 1") {
    Example1 ex;
    auto data = control_data(ex.g, ex.s);
    CHECK(compatible(data, ex.z("z0"), ex.z("z1")));
    CHECK(!compatible(data, ex.z("z2"), ex.z("z3")));
    auto rel = compatibility_relation(data);
    for (StateId z = 0; z < 4; ++z) CHECK(rel(z, z));
    for (StateId a = 0; a < 4; ++a)
        for (StateId b = 0; b < 4; ++b) CHECK(rel(a, b) == rel(b, a));
    // Not transitive: z3 ~ z0 ~ z2 but not z3 ~ z2.
    CHECK(rel(ex.z("z3"), ex.z("z0")));
    CHECK(rel(ex.z("z0"), ex.z("z2")));
    CHECK(!rel(ex.z("z3"), ex.z("z2")));
    CHECK(!rel(ex.z("z1"), ex.z("z3")));
}

TEST_CASE("control existence") {
    Alphabet al({{"c", true, true}, {"u", false, true}});
    Automaton s(al, "S");
    s.add_state("p");
    s.add_state("q");
    s.add_transition(0, 1, 1);
    s.add_transition(1, 1, 0);
    CHECK(check_control_existence(s).holds);
    s.remove_transition(1, 1);
    auto r = check_control_existence(s);
    CHECK(!r.holds);
    CHECK(r.state == StateId{1});
    CHECK(r.event == EventId{1});

    // Plant-relative: the plant never offers u at q, so nothing is disabled.
    Automaton g(al, "G");
    g.add_state("x");
    g.add_state("y");
    g.add_transition(0, 1, 1);
    CHECK(check_control_existence(g, s).holds);
    g.add_transition(1, 1, 0);
    CHECK(!check_control_existence(g, s).holds);

    Example1 ex;
    CHECK(check_control_existence(ex.g, ex.s).holds);
}

TEST_CASE("control feasibility") {
    Alphabet al({{"o", true, true}, {"n", true, false}});
    Automaton s(al, "S");
    s.add_state("p");
    s.add_state("q");
    s.add_transition(0, 0, 1);
    s.add_transition(1, 1, 1);
    CHECK(check_control_feasibility(s).holds);
    s.add_transition(0, 1, 1);
    auto r = check_control_feasibility(s);
    CHECK(!r.holds);
    CHECK(*r.transition == Transition{0, 1, 1});

    Example1 ex;
    CHECK(check_control_feasibility(ex.s).holds);
    CHECK(check_control_feasibility(with_alphabet(ex.s, ex.s.alphabet().with_full_observation())).holds);
    CHECK_NOTHROW(require_feasible(ex.g, ex.s, "supervisor"));
}

TEST_CASE("control equivalence and normality on Example 2") {
    auto g = fixture("example2/g.aut");
    auto s1 = fixture("example2/s1.aut");
    auto s2 = fixture("example2/s2.aut");
    CHECK(control_equivalent(g, s1, s2).equal);
    CHECK(is_normal(g, s1, s1).holds);
    CHECK(is_normal(g, s1, s2).holds);

    auto broken = s2;
    broken.set_marked(1, true);
    auto cmp = control_equivalent(g, s1, broken);
    CHECK(!cmp.equal);
    CHECK(format_word(g.alphabet(), *cmp.counterexample) == "a");

    // An extra transition the loop never uses breaks normality.
    auto extra = s2;
    extra.add_transition(2, g.alphabet().id("b"), 2);
    auto nr = is_normal(g, s1, extra);
    CHECK(!nr.holds);
    CHECK(nr.unexercised);
}

TEST_CASE("random supervisors are feasible") {
    Rng rng(22);
    for (int i = 0; i < 200; ++i) {
        auto [g, s] = testing::random_instance(rng);
        CHECK(check_control_existence(s).holds);
        CHECK(check_control_existence(g, s).holds);
        CHECK(check_control_feasibility(s).holds);
        CHECK(is_normal(g, s, sync_product(g, s)).holds);
    }
}
