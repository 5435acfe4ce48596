#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "supred/construct.hpp"
#include "supred/error.hpp"
#include "supred/reduction.hpp"

using namespace supred;
using supred::testing::fixture;
using supred::testing::Rng;

namespace {

struct Example1 {
    Automaton g = fixture("example1/g.aut");
    Automaton s = fixture("example1/s.aut");
    ControlData data = control_data(g, s);
};

bool feasible(const Automaton& g, const Automaton& s) {
    return check_control_existence(g, s).holds && check_control_feasibility(s).holds;
}

}  // namespace

TEST_CASE("cover validation on Example 1") {
    Example1 ex;
    CHECK(validate_cover(ex.s, ex.data, Cover::parse("z0,z1,z2;z3", ex.s)).valid);
    auto whole = validate_cover(ex.s, ex.data, Cover::parse("z0,z1,z2,z3", ex.s));
    CHECK(!whole.valid);
    CHECK(whole.incompatible);
    CHECK(validate_cover(ex.s, ex.data, Cover::parse("z0,z3;z1;z2", ex.s)).valid);
    CHECK(validate_cover(ex.s, ex.data, Cover::singletons(4)).valid);

    CHECK_THROWS_AS(Cover::parse("z0,z1;z7", ex.s), PreconditionError);
    CHECK_THROWS_AS(Cover(std::vector<std::vector<StateId>>{{0, 1}, {}}), PreconditionError);
    CHECK_THROWS_AS(validate_cover(ex.s, ex.data, Cover::parse("z0,z1;z2", ex.s)), PreconditionError);
    CHECK_THROWS_AS(validate_cover(ex.s, ex.data, Cover({{0, 1, 2}, {3, 9}})), PreconditionError);
}

TEST_CASE("cover canonical order") {
    Cover c({{3}, {2, 0}, {0, 1}});
    CHECK(c.cells() == std::vector<std::vector<StateId>>{{0, 1}, {0, 2}, {3}});
    CHECK(!c.is_partition());
    CHECK(Cover({{1}, {0}}).is_partition());
}

TEST_CASE("Example-1 quotient") {
    Example1 ex;
    auto q = induce_quotient(ex.s, ex.data, Cover::parse("z0,z1,z2;z3", ex.s));
    const auto& a = q.automaton;
    REQUIRE(a.num_states() == 2);
    CHECK(feasible(ex.g, a));
    CHECK(control_equivalent(ex.g, ex.s, a).equal);
    CHECK(a.is_marked(0));
    CHECK(!a.is_marked(1));
    const auto& al = a.alphabet();
    for (auto e : {"qo0", "qo1", "hL", "hM"}) CHECK(a.next(0, al.id(e)) == StateId{0});
    CHECK(a.next(0, al.id("hH")) == StateId{1});
    CHECK(a.next(1, al.id("hM")) == StateId{0});
    CHECK(a.next(1, al.id("qo1")) == StateId{1});
    CHECK(a.next(1, al.id("hH")) == StateId{1});
    CHECK(!a.defined(1, al.id("qo0")));
    CHECK(!a.defined(0, al.id("hEH")));
}

TEST_CASE("singleton cover induces an isomorphic supervisor") {
    Rng rng(31);
    for (int i = 0; i < 50; ++i) {
        auto [g, s] = testing::random_instance(rng);
        auto data = control_data(g, s);
        auto q = induce_quotient(s, data, Cover::singletons(s.num_states()));
        CHECK(is_des_isomorphic(q.automaton, s).holds);
    }
}

TEST_CASE("a marked state the marked plant never reaches does not mark its cell") {
    Alphabet al({{"a", true, true}});
    Automaton g(al, "G");
    g.add_state("x0");
    g.add_state("x1", true);
    g.add_transition(0, 0, 1);
    Automaton s(al, "S");
    s.add_state("z0", true);
    s.add_state("z1");
    s.add_transition(0, 0, 1);
    auto data = control_data(g, s);
    CHECK(!data[0].marked_g);
    CHECK(data[1].marked_g);
    auto q = induce_quotient(s, data, Cover({{0, 1}})).automaton;
    // Marking the merged cell because z0 is marked would put "a" into Lm(G||Q).
    CHECK(!q.is_marked(0));
    CHECK(control_equivalent(g, s, q).equal);
}

TEST_CASE("invalid covers are refused") {
    Example1 ex;
    CHECK_THROWS_AS(induce_quotient(ex.s, ex.data, Cover::parse("z0,z1,z2,z3", ex.s)), PreconditionError);
}

TEST_CASE("quotients of SUPER by valid covers are feasible and equivalent") {
    Rng rng(32);
    int overlapping = 0;
    for (int i = 0; i < 150; ++i) {
        auto [g, s] = testing::random_instance(rng);
        auto super = build_super(g, s);
        auto data = control_data(g, super);
        auto cover = testing::random_valid_cover(rng, super, data);
        REQUIRE(validate_cover(super, data, cover).valid);
        overlapping += !cover.is_partition();
        auto q = induce_quotient(super, data, cover);
        CHECK(q.automaton.num_states() == cover.size());
        CHECK(feasible(g, q.automaton));
        CHECK(control_equivalent(g, s, q.automaton).equal);
    }
    CHECK(overlapping > 0);
}

TEST_CASE("SUPER construction") {
    Example1 ex;
    auto super = build_super(ex.g, ex.s);
    CHECK(super.num_states() == 4);
    CHECK(is_des_isomorphic(super, ex.s).holds);
    CHECK(feasible(ex.g, super));
    CHECK(control_equivalent(ex.g, ex.s, super).equal);

    Rng rng(33);
    for (int i = 0; i < 100; ++i) {
        auto [g, s] = testing::random_instance(rng);
        auto sup = build_super(g, s);
        CHECK(feasible(g, sup));
        CHECK(control_equivalent(g, s, sup).equal);
        CHECK(is_des_isomorphic(build_super(g, sup), sup).holds);
    }
    for (int i = 0; i < 50; ++i) {
        auto [g, s] = testing::random_instance(rng, {4, 0.5, 1.0});
        auto loop = sync_product(g, s);
        CHECK(is_des_isomorphic(build_super(g, loop), loop).holds);
    }

    Alphabet al({{"n", true, false}});
    Automaton g(al, "G");
    g.add_state("x");
    g.add_transition(0, 0, 0);
    Automaton bad(al, "B");
    bad.add_state("p");
    bad.add_state("q");
    bad.add_transition(0, 0, 1);
    CHECK_THROWS_AS(build_super(g, bad), PreconditionError);
}

TEST_CASE("SUPER states follow the string characterization") {
    Example1 ex;
    auto super = build_super(ex.g, ex.s);
    auto theta = *is_des_isomorphic(super, ex.s).mapping;
    for (StateId z = 0; z < super.num_states(); ++z) {
        auto [en, dis] = characterize_super_state(ex.g, ex.s, super, z);
        CHECK(en == ex.data[theta[z]].enabled);
        CHECK(dis == ex.data[theta[z]].disabled);
    }
    CHECK_THROWS_AS(characterize_super_state(ex.g, ex.s, super, 9), PreconditionError);

    Rng rng(34);
    int partial = 0;
    for (int i = 0; i < 150; ++i) {
        auto [g, s] = testing::random_instance(rng, {4, 0.5, 0.5}, 5, 3);
        auto super_i = build_super(g, s);
        auto data = control_data(g, super_i);
        bool any_unobservable = !g.alphabet().unobservable_events().empty();
        partial += any_unobservable;
        for (StateId z = 0; z < super_i.num_states(); ++z) {
            auto [en, dis] = characterize_super_state(g, s, super_i, z);
            auto [oen, odis] = oracle::proposition1(g, s, super_i, z);
            CHECK(en == oen);
            CHECK(dis == odis);
            CHECK(en == data[z].enabled);
            CHECK(dis == data[z].disabled);
        }
    }
    CHECK(partial > 50);
}

TEST_CASE("cover extraction") {
    Example1 ex;
    auto super = build_super(ex.g, ex.s);
    SUBCASE("SUPER against itself gives singletons") {
        auto ext = extract_cover_from_simsup(super, super, ex.g, ex.s);
        CHECK(ext.cover == Cover::singletons(super.num_states()));
        auto sdata = control_data(ex.g, super);
        auto q = induce_quotient(super, sdata, ext.cover, ext.choice);
        CHECK(is_des_isomorphic(q.automaton, super).holds);
    }
    SUBCASE("the two-state quotient yields the Example-1 cover") {
        auto simsup = induce_quotient(ex.s, ex.data, Cover::parse("z0,z1,z2;z3", ex.s)).automaton;
        auto ext = extract_cover_from_simsup(super, simsup, ex.g, ex.s);
        auto theta = *is_des_isomorphic(super, ex.s).mapping;
        std::vector<std::vector<StateId>> in_s;
        for (const auto& cell : ext.cover.cells()) {
            std::vector<StateId> mapped;
            for (StateId w : cell) mapped.push_back(theta[w]);
            std::sort(mapped.begin(), mapped.end());
            in_s.push_back(mapped);
        }
        std::sort(in_s.begin(), in_s.end());
        CHECK(in_s == std::vector<std::vector<StateId>>{{0, 1, 2}, {3}});
    }
    SUBCASE("preconditions are named") {
        auto s = ex.s;
        s.set_marked(0, true);
        CHECK(control_equivalent(ex.g, ex.s, s).equal);
        CHECK_THROWS_WITH_AS(extract_cover_from_simsup(super, s, ex.g, ex.s), doctest::Contains("not normal"),
                             PreconditionError);
        auto t = ex.s;
        t.set_marked(2, false);
        CHECK_THROWS_WITH_AS(extract_cover_from_simsup(super, t, ex.g, ex.s), doctest::Contains("control equivalent"),
                             PreconditionError);
    }
}

TEST_CASE("extracted covers rebuild normal reductions") {
    Rng rng(35);
    int checked = 0;
    for (int i = 0; i < 200; ++i) {
        auto [g, s] = testing::random_instance(rng);
        auto super = build_super(g, s);
        Automaton simsup = (i % 2 == 0) ? reduce_heuristic(g, super).supervisor
                                        : testing::random_quotient(rng, g, super);
        if (!is_normal(g, s, simsup).holds) continue;
        ++checked;
        auto ext = extract_cover_from_simsup(super, simsup, g, s);
        auto data = control_data(g, super);
        CHECK(validate_cover(super, data, ext.cover).valid);
        auto q = induce_quotient(super, data, ext.cover, ext.choice);
        CHECK(is_des_isomorphic(q.automaton, simsup).holds);
    }
    CHECK(checked >= 100);
}

TEST_CASE("heuristic reduction") {
    Example1 ex;
    auto r = reduce_heuristic(ex.g, ex.s);
    CHECK(r.report.output_size == 2);
    CHECK(r.report.cover == Cover::parse("z0,z1,z2;z3", ex.s));
    auto fig = induce_quotient(ex.s, ex.data, Cover::parse("z0,z1,z2;z3", ex.s)).automaton;
    CHECK(is_des_isomorphic(r.supervisor, fig).holds);

    // Pairwise incompatible: each state disables what the other enables.
    Alphabet al({{"a", true, true}, {"b", true, true}});
    Automaton g(al, "G");
    g.add_state("x0");
    g.add_state("x1");
    g.add_transition(0, 0, 1);
    g.add_transition(0, 1, 1);
    g.add_transition(1, 0, 0);
    g.add_transition(1, 1, 0);
    Automaton s(al, "S");
    s.add_state("p");
    s.add_state("q");
    s.add_transition(0, 0, 1);
    s.add_transition(1, 1, 0);
    auto none = reduce_heuristic(g, s);
    CHECK(is_des_isomorphic(none.supervisor, s).holds);

    Rng rng(36);
    for (int i = 0; i < 150; ++i) {
        auto [gi, si] = testing::random_instance(rng, {}, 6, 6);
        auto ri = reduce_heuristic(gi, si);
        CHECK(ri.report.output_size <= si.num_states());
        CHECK(ri.report.output_size == ri.supervisor.num_states());
        CHECK(ri.report.cover.is_partition());
        CHECK(feasible(gi, ri.supervisor));
        CHECK(control_equivalent(gi, si, ri.supervisor).equal);
    }
}

TEST_CASE("exact reduction on Example 2") {
    auto g = fixture("example2/g.aut");
    auto s1 = fixture("example2/s1.aut");
    auto s2 = fixture("example2/s2.aut");
    auto r1 = reduce_exact_minimum(g, s1, CoverMode::Cover);
    auto r2 = reduce_exact_minimum(g, s2, CoverMode::Cover);
    CHECK(r1.report.output_size == 2);
    CHECK(r2.report.output_size == 3);
    CHECK(r1.report.cover == Cover::parse("0,1;2,3", s1));
    CHECK(reduce_exact_minimum(g, s1, CoverMode::Partition).report.output_size == 2);
    CHECK(reduce_exact_minimum(g, s2, CoverMode::Partition).report.output_size == 3);
    CHECK(control_equivalent(g, s1, r1.supervisor).equal);
    CHECK(control_equivalent(g, s1, r2.supervisor).equal);
}

TEST_CASE("exact reduction matches brute force") {
    Rng rng(37);
    for (int i = 0; i < 150; ++i) {
        auto [g, s] = testing::random_instance(rng, {}, 6, 6);
        if (s.num_states() > 5) continue;
        auto data = control_data(g, s);
        auto part = reduce_exact_minimum(g, s, CoverMode::Partition);
        auto cov = reduce_exact_minimum(g, s, CoverMode::Cover);
        CHECK(part.report.output_size == oracle::min_partition_size(s, data));
        CHECK(cov.report.output_size == oracle::min_cover_size(s, data));
        CHECK(cov.report.output_size <= part.report.output_size);
        CHECK(part.report.output_size <= reduce_heuristic(g, s).report.output_size);
        CHECK(control_equivalent(g, s, cov.supervisor).equal);
        CHECK(feasible(g, cov.supervisor));
    }
}

TEST_CASE("exact reduction refuses inputs above the cap") {
    Alphabet al({{"a", true, true}});
    Automaton g(al, "G");
    g.add_state("x");
    g.add_transition(0, 0, 0);
    Automaton s(al, "S");
    for (int i = 0; i < 11; ++i) s.add_state("z" + std::to_string(i));
    for (StateId i = 0; i < 11; ++i) s.add_transition(i, 0, (i + 1) % 11);
    CHECK_THROWS_AS(reduce_exact_minimum(g, s, CoverMode::Cover), CapExceeded);
    CHECK_NOTHROW(reduce_exact_minimum(g, s, CoverMode::Cover, 11));
}

TEST_CASE("random equivalent supervisors") {
    Rng rng(38);
    auto [g, s] = testing::random_instance(rng);
    auto super = build_super(g, s);
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        auto a = generate_equivalent_supervisor(g, s, seed);
        CHECK(control_equivalent(g, s, a).equal);
        CHECK(feasible(g, a));
        CHECK(serialize_automaton(a) == serialize_automaton(generate_equivalent_supervisor(g, s, seed)));
        if (a.num_states() == super.num_states()) CHECK(is_des_isomorphic(a, super).holds);
    }
}
