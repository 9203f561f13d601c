#pragma once

#include <cstdint>
#include <vector>

#include "sdl/constructions.hpp"
#include "sdl/lattice.hpp"
#include "sdl/relation.hpp"

namespace sdl {

/// Deterministic linear congruential generator so instances reproduce
/// bit-for-bit everywhere.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return state >> 16;
    }
    int below(int n) { return n > 0 ? int(next() % std::uint64_t(n)) : 0; }
    bool chance(int num, int den) { return below(den) < num; }
};

Lattice chain(int n);
Lattice boolean_lattice(int k); // 2^k elements

/// Distributive lattice of downsets of a partial order, by containment.
Lattice downsets_of(const Relation& poset, std::size_t cap = std::size_t{1} << 20);

/// Permutations ordered by inversion-set containment.
Lattice weak_order_sn(int n);

/// Binary trees under rotation. tamari(n) has Catalan(n) elements.
Lattice tamari(int n);

/// Interval doubling from a point, pseudorandom interval each step.
Lattice doubling_random(int steps, std::uint64_t seed, std::size_t cap = 4096);

/// All unlabeled lattices with exactly n elements (canonical
/// representatives). Counts for n = 1..8 are 1, 1, 1, 2, 5, 15, 53, 222.
std::vector<Lattice> exhaustive_lattices(int n);

/// All unlabeled posets with exactly n elements, as reflexive order
/// relations.
std::vector<Relation> exhaustive_posets(int n);

/// Random reflexive relation with roughly the given edge density (percent).
Relation random_reflexive_relation(int n, int density_pct, Rng& rng);

/// Random partial order (reflexive transitive antisymmetric).
Relation random_poset(int n, int density_pct, Rng& rng);

} // namespace sdl
