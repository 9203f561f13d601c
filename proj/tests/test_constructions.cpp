#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "sdl/constructions.hpp"
#include "sdl/generators.hpp"

using namespace sdl;

static Bits bits_of(int n, std::initializer_list<int> xs) {
    Bits b(n);
    for (int x : xs) b.set(x);
    return b;
}

TEST_CASE("interval systems") {
    FactSystem sys = fixtures::semi_system();
    auto P = pairs_lattice(sys);
    SUBCASE("full interval gives back the system") {
        IntervalSystem iv =
            interval_system(sys, P.pairs[P.lattice.bottom], P.pairs[P.lattice.top]);
        CHECK(iv.sys.to == sys.to);
        CHECK(iv.elem == std::vector<int>{0, 1, 2, 3});
    }
    SUBCASE("degenerate interval is empty") {
        IntervalSystem iv = interval_system(sys, P.pairs[0], P.pairs[0]);
        CHECK(iv.sys.size() == 0);
        CHECK(pairs_lattice(iv.sys).lattice.n == 1);
    }
    SUBCASE("lower interval below a principal pair") {
        // [bottom, ({2,4},...)] is the 3-chain of closed subsets of {2,4}
        int i24 = P.index_of(bits_of(4, {1, 3}));
        IntervalSystem iv =
            interval_system(sys, P.pairs[P.lattice.bottom], P.pairs[i24]);
        CHECK(iv.sys.size() == 2);
        CHECK(iv.elem == std::vector<int>{1, 3});
        CHECK(pairs_lattice(iv.sys).lattice.n == 3);
    }
    SUBCASE("incomparable endpoints are rejected") {
        int i24 = P.index_of(bits_of(4, {1, 3}));
        int i13 = P.index_of(bits_of(4, {0, 2}));
        CHECK_THROWS_AS(interval_system(sys, P.pairs[i24], P.pairs[i13]), DomainError);
    }
}

TEST_CASE("interval systems represent every interval") {
    std::vector<FactSystem> systems;
    systems.push_back(fixtures::semi_system());
    for (int n = 1; n <= 6; ++n)
        for (const Lattice& L : exhaustive_lattices(n))
            if (is_semidistributive(L).sd()) systems.push_back(extract_system(L).sys);
    for (const FactSystem& sys : systems) {
        auto P = pairs_lattice(sys);
        for (int lo = 0; lo < P.lattice.n; ++lo)
            for (int hi = 0; hi < P.lattice.n; ++hi) {
                if (!P.lattice.leq(lo, hi)) continue;
                IntervalSystem iv = interval_system(sys, P.pairs[lo], P.pairs[hi]);
                auto Q = pairs_lattice(iv.sys);
                int interval_size = (P.lattice.up[lo] & P.lattice.down[hi]).count();
                REQUIRE(Q.lattice.n == interval_size);
                // the restriction map torsion -> torsion cap lo.free is an
                // order isomorphism onto the new pairs
                std::vector<int> img;
                for (int x : (P.lattice.up[lo] & P.lattice.down[hi]).elems()) {
                    Bits cut(iv.sys.size());
                    for (int a = 0; a < iv.sys.size(); ++a)
                        if (P.pairs[x].torsion.test(iv.elem[a])) cut.set(a);
                    int q = Q.index_of(cut);
                    REQUIRE(q >= 0);
                    img.push_back(q);
                }
                std::vector<int> sorted = img;
                std::sort(sorted.begin(), sorted.end());
                sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
                CHECK(int(sorted.size()) == interval_size);
                // covers are the one-element grounds
                if (interval_size == 2) CHECK(iv.sys.size() == 1);
                if (iv.sys.size() == 1) CHECK(interval_size == 2);
            }
    }
}

TEST_CASE("lattice doubling") {
    SUBCASE("point doubles to a 2-chain") {
        Lattice one = chain(1);
        DoubledLattice d = double_lattice(one, 0, 0);
        CHECK(d.lattice.n == 2);
        CHECK(is_isomorphic(d.lattice, chain(2)));
    }
    SUBCASE("doubling an atom of the boolean square gives the pentagon") {
        Lattice B2 = boolean_lattice(2);
        DoubledLattice d = double_lattice(B2, 1, 1);
        CHECK(d.lattice.n == 5);
        CHECK(is_semidistributive(d.lattice).sd());
        // pentagon: longest chain 3, four covers of nothing special
        CHECK(longest_chain(d.lattice).size() == 4);
    }
    SUBCASE("doubling the whole 2-chain gives the 2x2 grid") {
        DoubledLattice d = double_lattice(chain(2), 0, 1);
        CHECK(d.lattice.n == 4);
        CHECK(is_isomorphic(d.lattice, boolean_lattice(2)));
    }
    SUBCASE("non-interval endpoints are rejected") {
        Lattice B2 = boolean_lattice(2);
        CHECK_THROWS_AS(double_lattice(B2, 2, 1), DomainError);
    }
}

TEST_CASE("system doubling commutes with lattice doubling") {
    std::vector<FactSystem> systems;
    systems.push_back(fixtures::semi_system());
    for (int n = 1; n <= 5; ++n)
        for (const Lattice& L : exhaustive_lattices(n))
            if (is_semidistributive(L).sd()) systems.push_back(extract_system(L).sys);
    for (const FactSystem& sys : systems) {
        auto P = pairs_lattice(sys);
        for (int lo = 0; lo < P.lattice.n; ++lo)
            for (int hi = 0; hi < P.lattice.n; ++hi) {
                if (!P.lattice.leq(lo, hi)) continue;
                FactSystem ds = double_system(sys, P.pairs[lo], P.pairs[hi]);
                auto Q = pairs_lattice(ds);
                DoubledLattice dl = double_lattice(P.lattice, lo, hi);
                CHECK(is_isomorphic(Q.lattice, dl.lattice));
                CHECK(is_semidistributive(Q.lattice).sd());
            }
    }
}

TEST_CASE("distributivity characterizations") {
    SUBCASE("downset lattices satisfy all five conditions") {
        Relation p = Relation::identity(3);
        p.add(0, 1);
        Lattice L = downsets_of(p);
        CHECK(is_distributive(L));
        ExtractedSystem ex = extract_system(L);
        DistReport r = dist_char(ex.sys);
        CHECK(r.lattice_distributive);
        CHECK(r.to_partial_order);
        CHECK(r.onto_equals_into);
        CHECK(r.to_equals_onto);
        CHECK(r.to_equals_into);
        CHECK(r.all_equivalent());
    }
    SUBCASE("the figure system fails all five") {
        DistReport r = dist_char(fixtures::semi_system());
        CHECK(!r.lattice_distributive);
        CHECK(!r.to_partial_order);
        CHECK(!r.onto_equals_into);
        CHECK(!r.to_equals_onto);
        CHECK(!r.to_equals_into);
        CHECK(r.all_equivalent());
    }
    SUBCASE("boolean cube extraction is the antichain order") {
        ExtractedSystem ex = extract_system(boolean_lattice(3));
        CHECK(ex.sys.to == Relation::identity(3));
    }
}

TEST_CASE("five distributivity conditions stay equivalent on extracted systems") {
    for (int n = 1; n <= 6; ++n)
        for (const Lattice& L : exhaustive_lattices(n)) {
            if (!is_semidistributive(L).sd()) continue;
            DistReport r = dist_char(extract_system(L).sys);
            CHECK(r.all_equivalent());
            CHECK(r.lattice_distributive == is_distributive(L));
        }
}

TEST_CASE("general lattice representation by irreducibles") {
    SUBCASE("diamond round trip") {
        std::vector<std::vector<bool>> leq(5, std::vector<bool>(5, false));
        for (int i = 0; i < 5; ++i) leq[i][i] = true;
        for (int a : {1, 2, 3}) {
            leq[0][a] = true;
            leq[a][4] = true;
        }
        leq[0][4] = true;
        Lattice M3 = lattice_from_leq(leq);
        MarkowskySystem ms = markowsky_system(M3);
        CHECK(ms.jirr.size() == 3);
        CHECK(ms.mirr.size() == 3);
        TwoSetPairs tp = two_set_pairs(ms.rel);
        CHECK(is_isomorphic(tp.lattice, M3));
    }
    SUBCASE("one-element lattice") {
        MarkowskySystem ms = markowsky_system(chain(1));
        CHECK(ms.jirr.empty());
        TwoSetPairs tp = two_set_pairs(ms.rel);
        CHECK(tp.lattice.n == 1);
    }
    SUBCASE("all small lattices round trip, semidistributive or not") {
        for (int n = 1; n <= 6; ++n)
            for (const Lattice& L : exhaustive_lattices(n)) {
                TwoSetPairs tp = two_set_pairs(markowsky_system(L).rel);
                auto iso = is_isomorphic(tp.lattice, L);
                CHECK(iso);
                // the canonical map x -> (jirr below, mirr above) lands on
                // the two-set pairs
                MarkowskySystem ms = markowsky_system(L);
                for (int x = 0; x < L.n; ++x) {
                    Bits left(int(ms.jirr.size()));
                    for (size_t a = 0; a < ms.jirr.size(); ++a)
                        if (L.leq(ms.jirr[a], x)) left.set(int(a));
                    CHECK(tp.index_of(left) >= 0);
                }
            }
    }
    SUBCASE("lattice relations are companionable") {
        for (int n = 1; n <= 6; ++n)
            for (const Lattice& L : exhaustive_lattices(n)) {
                MarkowskySystem ms = markowsky_system(L);
                for (int x = 0; x < ms.rel.left.size; ++x)
                    CHECK(has_right_companion(ms.rel, x));
                for (int y = 0; y < ms.rel.right.size; ++y)
                    CHECK(has_left_companion(ms.rel, y));
            }
    }
}

TEST_CASE("extremal certificates on the figure lattices") {
    auto semi = pairs_lattice(fixtures::semi_to()).lattice;
    ExtremalCertificate cs = extremal_analysis(semi);
    CHECK(cs.chain.size() == 4);
    CHECK(cs.n_jirr == 4);
    CHECK(cs.n_mirr == 4);
    CHECK(!cs.extremal);

    auto ext = pairs_lattice(fixtures::ext_to()).lattice;
    ExtremalCertificate ce = extremal_analysis(ext);
    CHECK(ce.chain.size() == 5);
    CHECK(ce.n_jirr == 4);
    CHECK(ce.n_mirr == 4);
    CHECK(ce.extremal);
    CHECK(ce.mu.size() == 4);
}

TEST_CASE("boolean square is extremal with the swap pairing") {
    ExtremalCertificate c = extremal_analysis(boolean_lattice(2));
    CHECK(c.extremal);
    auto mu = ftfel_mu(boolean_lattice(2));
    REQUIRE(mu);
    // each atom pairs with the other coatom (diagonal needs j not<= mu(j))
    MarkowskySystem ms = markowsky_system(boolean_lattice(2));
    for (size_t a = 0; a < ms.jirr.size(); ++a)
        CHECK(!boolean_lattice(2).leq(ms.jirr[a], ms.mirr[(*mu)[a]]));
}

TEST_CASE("reflexive pairing is unique on extremal lattices") {
    for (int n = 1; n <= 6; ++n)
        for (const Lattice& L : exhaustive_lattices(n)) {
            ExtremalCertificate c = extremal_analysis(L);
            auto mu = ftfel_mu(L);
            if (!c.extremal) continue;
            REQUIRE(mu);
            // brute force: mu is the only bijection making the relabelled
            // relation acyclic reflexive
            MarkowskySystem ms = markowsky_system(L);
            int k = int(ms.jirr.size());
            std::vector<int> perm(k);
            for (int i = 0; i < k; ++i) perm[i] = i;
            int hits = 0;
            do {
                Relation r(k);
                bool refl = true;
                for (int a = 0; a < k && refl; ++a) {
                    for (int b = 0; b < k; ++b)
                        if (ms.rel.adj[a].test(perm[b])) r.add(a, b);
                    if (!r(a, a)) refl = false;
                }
                if (refl && r.is_acyclic_reflexive()) {
                    ++hits;
                    CHECK(perm == *mu);
                }
            } while (std::next_permutation(perm.begin(), perm.end()));
            CHECK(hits == 1);
        }
}

TEST_CASE("acyclic reflexive relations characterize extremal pair lattices") {
    // scan all reflexive relations on 3 elements
    for (unsigned mask = 0; mask < 64; ++mask) {
        Relation r = Relation::identity(3);
        int bit = 0;
        for (int x = 0; x < 3; ++x)
            for (int y = 0; y < 3; ++y) {
                if (x == y) continue;
                if (mask & (1u << bit)) r.add(x, y);
                ++bit;
            }
        auto P = pairs_lattice(r);
        auto [onto, into] = fact(r);
        bool mult_eq = (mult(onto, into) == r);
        if (r.is_acyclic_reflexive()) {
            // semidistributive iff the relation regenerates itself
            CHECK(is_semidistributive(P.lattice).sd() == mult_eq);
            CHECK(extremal_analysis(P.lattice).extremal);
        }
        Diagnostics d;
        auto sys = validate_system(GroundSet::plain(3), r, onto, into, d);
        if (sys) {
            // two-acyclic systems: extremal pairs iff acyclic reflexive arrows
            CHECK(extremal_analysis(P.lattice).extremal == r.is_acyclic_reflexive());
        }
    }
}

TEST_CASE("classification of the figure instances") {
    ClassifyReport a = classify(fixtures::semi_system());
    CHECK(a.size == 6);
    CHECK(a.sd());
    CHECK(!a.extremal);
    CHECK(a.congruence_uniform);
    CHECK(!a.distributive);
    CHECK(a.two_acyclic);
    CHECK(!a.to_acyclic_reflexive);

    ClassifyReport b = classify(pairs_lattice(fixtures::ext_to()).lattice);
    CHECK(b.size == 9);
    CHECK(!b.sd());
    CHECK(b.extremal);
    CHECK(!b.trim_candidate);
}
