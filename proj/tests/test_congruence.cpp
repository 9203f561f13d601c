#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "sdl/congruence.hpp"
#include "sdl/constructions.hpp"
#include "sdl/extract.hpp"
#include "sdl/generators.hpp"

using namespace sdl;

static Bits bits_of(int n, std::initializer_list<int> xs) {
    Bits b(n);
    for (int x : xs) b.set(x);
    return b;
}

static FactSystem identity_system(int n) {
    Diagnostics d;
    auto sys = validate_system(GroundSet::plain(n), Relation::identity(n),
                               Relation::identity(n), Relation::identity(n), d);
    return *sys;
}

TEST_CASE("direct forcing on the figure system") {
    FactSystem sys = fixtures::semi_system();
    ForcingRelation f = directly_forces(sys);
    Relation expect = Relation::identity(4);
    expect.add(0, 1);
    expect.add(3, 1);
    expect.add(0, 2);
    expect.add(3, 2);
    CHECK(f.squig == expect);
    // 1 forces 2 because both members of F(2) = {1,2} are onto-minimal
    CHECK((f.witness[0][1] & 1) != 0);
}

TEST_CASE("direct forcing on identity and distributive systems") {
    CHECK(directly_forces(identity_system(4)).squig == Relation::identity(4));
    Relation p = Relation::identity(3);
    p.add(0, 1);
    p.add(0, 2);
    Diagnostics d;
    auto sys = validate_system(GroundSet::plain(3), p, p, p, d);
    REQUIRE(sys);
    CHECK(directly_forces(*sys).squig == Relation::identity(3));
}

TEST_CASE("images and co-images") {
    FactSystem sys = fixtures::semi_system();
    auto [im, co] = image_coimage(sys, 1, 2);
    CHECK(im == bits_of(4, {3}));
    CHECK(co == bits_of(4, {3}));
    auto [im2, co2] = image_coimage(sys, 2, 1);
    CHECK(im2 == bits_of(4, {0}));
    CHECK(co2 == bits_of(4, {0}));
    auto [im3, co3] = image_coimage(sys, 2, 2);
    CHECK(im3 == bits_of(4, {2}));
    CHECK_THROWS_AS(image_coimage(sys, 0, 3), DomainError);
}

TEST_CASE("images force their endpoints") {
    FactSystem sys = fixtures::semi_system();
    ForcingRelation f = directly_forces(sys);
    for (int x = 0; x < 4; ++x)
        for (int z : sys.to.row[x].elems()) {
            auto [im, co] = image_coimage(sys, x, z);
            CHECK(im.any());
            CHECK(co.any());
            im.for_each([&](int y) { CHECK(f.squig(y, z)); });
            co.for_each([&](int y) { CHECK(f.squig(y, x)); });
        }
}

TEST_CASE("forcing upset recognition and restriction") {
    FactSystem sys = fixtures::semi_system();
    ForcingRelation f = directly_forces(sys);
    CHECK(is_forcing_upset(f, Bits::full(4)));
    CHECK(is_forcing_upset(f, bits_of(4, {0, 3})));
    std::pair<int, int> bad;
    CHECK(!is_forcing_upset(f, bits_of(4, {1, 2}), &bad));
    CHECK(bad.second == 1);

    CHECK_THROWS_AS(restrict_system(sys, bits_of(4, {1, 2})), DomainError);
    RestrictedSystem r = restrict_system(sys, bits_of(4, {0, 3}));
    CHECK(r.sys.to == Relation::identity(2));
    CHECK(restrict_system(sys, Bits::full(4)).sys.to == sys.to);
}

TEST_CASE("quotients of the figure system") {
    FactSystem sys = fixtures::semi_system();
    SUBCASE("upset {1,4} collapses to the boolean square") {
        CongruenceSpec spec = quotient(sys, bits_of(4, {0, 3}));
        CHECK(spec.quotient.pairs.size() == 4);
        CHECK(is_isomorphic(spec.quotient.lattice, boolean_lattice(2)));
    }
    SUBCASE("full upset is discrete") {
        CongruenceSpec spec = quotient(sys, Bits::full(4));
        for (const auto& blk : spec.blocks) CHECK(blk.size() == 1);
    }
    SUBCASE("empty upset is total") {
        CongruenceSpec spec = quotient(sys, Bits(4));
        CHECK(spec.blocks.size() == 1);
        CHECK(spec.blocks[0].size() == 6);
    }
}

TEST_CASE("quotient blocks form a lattice congruence and the map is a homomorphism") {
    FactSystem sys = fixtures::semi_system();
    auto P = pairs_lattice(sys);
    for (const Bits& up : forcing_upsets(sys)) {
        CongruenceSpec spec = quotient(sys, up);
        CHECK(is_lattice_congruence(P.lattice, spec.block_of));
        for (int i = 0; i < P.lattice.n; ++i)
            for (int j = 0; j < P.lattice.n; ++j) {
                CHECK(spec.block_of[P.lattice.meet[i][j]] ==
                      spec.quotient.lattice.meet[spec.block_of[i]][spec.block_of[j]]);
                CHECK(spec.block_of[P.lattice.join[i][j]] ==
                      spec.quotient.lattice.join[spec.block_of[i]][spec.block_of[j]]);
            }
    }
}

TEST_CASE("congruence lattice of the figure system has 7 elements") {
    FactSystem sys = fixtures::semi_system();
    ConLattice cl = con_lattice(sys);
    CHECK(cl.downsets.size() == 7);
    std::vector<Bits> want = {Bits(4),
                              bits_of(4, {1}),
                              bits_of(4, {2}),
                              bits_of(4, {1, 2}),
                              bits_of(4, {0, 1, 2}),
                              bits_of(4, {1, 2, 3}),
                              Bits::full(4)};
    for (const Bits& d : want)
        CHECK(std::find(cl.downsets.begin(), cl.downsets.end(), d) != cl.downsets.end());
    CHECK(is_distributive(cl.lattice));
}

TEST_CASE("congruence lattice of identity systems is boolean") {
    CHECK(con_lattice(identity_system(3)).downsets.size() == 8);
    CHECK(con_lattice(identity_system(1)).downsets.size() == 2);
}

TEST_CASE("brute congruence oracle on small lattices") {
    CHECK(brute_congruences(boolean_lattice(2)).size() == 4);
    CHECK(brute_congruences(chain(3)).size() == 4);
    for (const auto& c : brute_congruences(chain(3)))
        CHECK(is_lattice_congruence(chain(3), c));
    // diamond: contracting any cover collapses everything
    std::vector<std::vector<bool>> leq(5, std::vector<bool>(5, false));
    for (int i = 0; i < 5; ++i) leq[i][i] = true;
    for (int a : {1, 2, 3}) {
        leq[0][a] = true;
        leq[a][4] = true;
    }
    leq[0][4] = true;
    Lattice M3 = lattice_from_leq(leq);
    CHECK(brute_congruences(M3).size() == 2);
}

TEST_CASE("forcing downset count equals the brute congruence count") {
    std::vector<FactSystem> systems;
    systems.push_back(fixtures::semi_system());
    systems.push_back(identity_system(3));
    for (int n = 1; n <= 6; ++n)
        for (const Lattice& L : exhaustive_lattices(n))
            if (is_semidistributive(L).sd()) systems.push_back(extract_system(L).sys);
    for (const FactSystem& sys : systems) {
        auto P = pairs_lattice(sys);
        if (P.lattice.n > 12) continue;
        CHECK(con_lattice(sys).downsets.size() == brute_congruences(P.lattice).size());
    }
}

TEST_CASE("forcing closure matches the forcing order on principal congruences") {
    // x reaches y under forcing iff contracting the cover under T(x)
    // also contracts the cover under T(y)
    FactSystem sys = fixtures::semi_system();
    auto P = pairs_lattice(sys);
    ForcingRelation f = directly_forces(sys);
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) {
            int tx = P.index_of(T_of(sys, x));
            int ty = P.index_of(T_of(sys, y));
            int tx_star = P.index_of(closure(sys.to, T_star(sys, x)));
            int ty_star = P.index_of(closure(sys.to, T_star(sys, y)));
            auto con_x = principal_congruence(P.lattice, tx_star, tx);
            bool forces = (con_x[ty_star] == con_x[ty]);
            CHECK(forces == bool(f.closure(x, y)));
        }
}

TEST_CASE("larger upsets give finer congruences") {
    FactSystem sys = fixtures::semi_system();
    auto ups = forcing_upsets(sys);
    for (const Bits& a : ups)
        for (const Bits& b : ups) {
            if (!a.subset_of(b)) continue;
            CongruenceSpec ca = quotient(sys, a), cb = quotient(sys, b);
            // blocks of the finer congruence refine blocks of the coarser
            int m = int(ca.block_of.size());
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j)
                    if (cb.block_of[i] == cb.block_of[j])
                        CHECK(ca.block_of[i] == ca.block_of[j]);
        }
}

TEST_CASE("congruence uniformity") {
    CHECK(is_congruence_uniform(fixtures::semi_system()));
    CHECK(is_congruence_uniform(identity_system(4)));
}
