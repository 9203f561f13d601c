#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "sdl/relation.hpp"

using namespace sdl;

static Bits bits_of(int n, std::initializer_list<int> xs) {
    Bits b(n);
    for (int x : xs) b.set(x);
    return b;
}

TEST_CASE("bits basics") {
    Bits b(70);
    b.set(0);
    b.set(64);
    b.set(69);
    CHECK(b.count() == 3);
    CHECK(b.test(64));
    CHECK(!b.test(63));
    CHECK(b.elems() == std::vector<int>{0, 64, 69});
    CHECK(b.complement().count() == 67);
    CHECK(bits_of(4, {1}).subset_of(bits_of(4, {1, 2})));
    CHECK(!bits_of(4, {1, 3}).subset_of(bits_of(4, {1, 2})));
    // ordering: cardinality first, then earliest elements
    CHECK(bits_of(4, {3}) < bits_of(4, {1, 2}));
    CHECK(bits_of(4, {0, 3}) < bits_of(4, {1, 2}));
}

TEST_CASE("fact of the semidistributive example") {
    auto [onto, into] = fact(fixtures::semi_to());
    Relation eo = Relation::identity(4);
    eo.add(1, 3); // 2 onto 4
    eo.add(2, 0); // 3 onto 1
    Relation ei = Relation::identity(4);
    ei.add(0, 1); // 1 into 2
    ei.add(3, 2); // 4 into 3
    CHECK(onto == eo);
    CHECK(into == ei);
}

TEST_CASE("fact of identity is identity") {
    auto [onto, into] = fact(Relation::identity(5));
    CHECK(onto == Relation::identity(5));
    CHECK(into == Relation::identity(5));
}

TEST_CASE("fact of the extremal chain example") {
    auto [onto, into] = fact(fixtures::ext_to());
    Relation eo = Relation::identity(4);
    eo.add(2, 3);
    Relation ei = Relation::identity(4);
    ei.add(0, 1);
    CHECK(onto == eo);
    CHECK(into == ei);
}

TEST_CASE("fact rejects non-reflexive input") {
    Relation r(3);
    r.add(0, 1);
    CHECK_THROWS_AS(fact(r), DomainError);
}

TEST_CASE("mult recovers the semidistributive example") {
    auto [onto, into] = fact(fixtures::semi_to());
    CHECK(mult(onto, into) == fixtures::semi_to());
    // the cycle arrows factor through other elements
    CHECK(mult(onto, into)(1, 2));
    CHECK(mult(onto, into)(2, 1));
}

TEST_CASE("mult misses the middle arrow of the extremal example") {
    auto [onto, into] = fact(fixtures::ext_to());
    Relation m = mult(onto, into);
    Relation expect = Relation::identity(4);
    expect.add(0, 1);
    expect.add(2, 3);
    CHECK(m == expect);
    CHECK(!m(1, 2));
}

TEST_CASE("validate accepts the semidistributive example") {
    Relation to = fixtures::semi_to();
    auto [onto, into] = fact(to);
    Diagnostics diag;
    auto sys = validate_system(GroundSet::plain(4), to, onto, into, diag);
    CHECK(sys);
    CHECK(diag.ok());
}

TEST_CASE("validate rejects the extremal example with the right witness") {
    Relation to = fixtures::ext_to();
    auto [onto, into] = fact(to);
    Diagnostics diag;
    auto sys = validate_system(GroundSet::plain(4), to, onto, into, diag);
    CHECK(!sys);
    REQUIRE(diag.violations.size() >= 1);
    CHECK(diag.violations[0].axiom == "Mult equality fails");
    CHECK(diag.violations[0].witness == std::vector<int>{1, 2});
}

TEST_CASE("any partial order validates as a distributive system") {
    Relation p = Relation::identity(4);
    p.add(0, 1);
    p.add(0, 2);
    p.add(0, 3);
    p.add(1, 3);
    Diagnostics diag;
    auto sys = validate_system(GroundSet::plain(4), p, p, p, diag);
    CHECK(sys);
}

TEST_CASE("system_from_posets") {
    SUBCASE("partial order twice") {
        Relation p = Relation::identity(3);
        p.add(0, 1);
        p.add(0, 2);
        Diagnostics diag;
        auto sys = system_from_posets(GroundSet::plain(3), p, p, diag);
        REQUIRE(sys);
        CHECK(sys->to == p);
    }
    SUBCASE("reconstructs the semidistributive example") {
        auto [onto, into] = fact(fixtures::semi_to());
        Diagnostics diag;
        auto sys = system_from_posets(GroundSet::plain(4), onto, into, diag);
        REQUIRE(sys);
        CHECK(sys->to == fixtures::semi_to());
    }
    SUBCASE("chain example orders do not regenerate themselves") {
        // the composed arrow relation refl + {1->2, 3->4} has 1 dominating
        // 2 by image containment, so the onto order is not recovered
        auto [onto, into] = fact(fixtures::ext_to());
        Diagnostics diag;
        auto sys = system_from_posets(GroundSet::plain(4), onto, into, diag);
        CHECK(!sys);
        REQUIRE(!diag.violations.empty());
        CHECK(diag.violations[0].axiom == "condition (ii): onto not recovered");
        CHECK(diag.violations[0].witness == std::vector<int>{0, 1});
    }
}

TEST_CASE("orthogonality operators on the semidistributive example") {
    Relation to = fixtures::semi_to();
    CHECK(perp_right(to, bits_of(4, {1})) == bits_of(4, {0}));
    CHECK(perp_right(to, Bits(4)) == Bits::full(4));
    CHECK(perp_right(to, Bits::full(4)) == Bits(4));
    CHECK(closure(to, bits_of(4, {1})) == bits_of(4, {1, 3}));
    CHECK(closure(to, Bits(4)) == Bits(4));
    CHECK(closure(to, bits_of(4, {0, 3})) == Bits::full(4));
}

TEST_CASE("closure operator laws on the fixtures") {
    for (Relation to : {fixtures::semi_to(), fixtures::ext_to()}) {
        for (unsigned mask = 0; mask < 16; ++mask) {
            Bits x(4);
            for (int i = 0; i < 4; ++i)
                if (mask & (1u << i)) x.set(i);
            Bits c = closure(to, x);
            CHECK(x.subset_of(c));
            CHECK(closure(to, c) == c);
            for (unsigned m2 = 0; m2 < 16; ++m2) {
                Bits y(4);
                for (int i = 0; i < 4; ++i)
                    if (m2 & (1u << i)) y.set(i);
                if (x.subset_of(y)) CHECK(c.subset_of(closure(to, y)));
            }
        }
    }
}

TEST_CASE("pairs lattice of the semidistributive example") {
    auto P = pairs_lattice(fixtures::semi_to());
    REQUIRE(P.pairs.size() == 6);
    std::vector<Bits> want = {Bits(4),          bits_of(4, {0}),       bits_of(4, {3}),
                              bits_of(4, {0, 2}), bits_of(4, {1, 3}), Bits::full(4)};
    for (const Bits& t : want) CHECK(P.index_of(t) >= 0);
    // meet is intersection of torsion parts
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            Bits cap = P.pairs[i].torsion & P.pairs[j].torsion;
            CHECK(P.pairs[P.lattice.meet[i][j]].torsion == cap);
        }
    // free parts are the right perps
    for (const auto& pr : P.pairs)
        CHECK(pr.free == perp_right(fixtures::semi_to(), pr.torsion));
}

TEST_CASE("pairs lattice of the extremal chain relation has 9 elements") {
    auto P = pairs_lattice(fixtures::ext_to());
    REQUIRE(P.pairs.size() == 9);
    std::vector<Bits> want = {Bits(4),
                              bits_of(4, {0}),
                              bits_of(4, {1}),
                              bits_of(4, {3}),
                              bits_of(4, {0, 1}),
                              bits_of(4, {0, 3}),
                              bits_of(4, {2, 3}),
                              bits_of(4, {1, 2, 3}),
                              Bits::full(4)};
    for (const Bits& t : want) CHECK(P.index_of(t) >= 0);
}

TEST_CASE("pairs lattice of the empty ground set") {
    auto P = pairs_lattice(Relation(0));
    CHECK(P.pairs.size() == 1);
    CHECK(P.lattice.n == 1);
}

TEST_CASE("closed set cap throws") {
    CHECK_THROWS_AS(closed_sets(Relation::identity(8), 10), DomainError);
}

TEST_CASE("op_dual") {
    FactSystem sys = fixtures::semi_system();
    FactSystem d = op_dual(sys);
    CHECK(d.to == sys.to.transpose());
    CHECK(d.onto == sys.into.transpose());
    FactSystem dd = op_dual(d);
    CHECK(dd.to == sys.to);
    CHECK(dd.onto == sys.onto);
    CHECK(dd.into == sys.into);
    auto P = pairs_lattice(sys);
    auto Q = pairs_lattice(d);
    CHECK(P.pairs.size() == Q.pairs.size());
    // anti-isomorphism: dual pairs are the swapped originals
    for (const auto& pr : P.pairs) CHECK(Q.index_of(pr.free) >= 0);
}

TEST_CASE("ground set label validation") {
    GroundSet g{2, {"a", "a"}};
    CHECK_THROWS_AS(g.validate(), DomainError);
    GroundSet ok{2, {"a", "b"}};
    CHECK_NOTHROW(ok.validate());
    CHECK(ok.label(1) == "b");
    CHECK(GroundSet::plain(3).label(0) == "1");
}
