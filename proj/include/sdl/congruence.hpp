#pragma once

#include <optional>
#include <vector>

#include "sdl/covers.hpp"
#include "sdl/relation.hpp"

namespace sdl {

constexpr std::size_t kDefaultDownsetCap = std::size_t{1} << 22;

struct ForcingRelation {
    Relation squig;              // x squig y: x directly forces y
    Relation closure;            // transitive closure of squig
    // witness[x][y]: 0 none, 1 = onto-minimal in F(y), 2 = into-maximal
    // in T(y), 3 = both (diagonal typically)
    std::vector<std::vector<int>> witness;
};

ForcingRelation directly_forces(const FactSystem& sys);

/// Images are the onto-minimal elements of {y : x ->> y in-> z}, co-images
/// the into-maximal ones. Requires x -> z.
std::pair<Bits, Bits> image_coimage(const FactSystem& sys, int x, int z);

bool is_forcing_upset(const ForcingRelation& f, const Bits& upset,
                      std::pair<int, int>* bad = nullptr);

/// Entrywise restriction of all three relations to the upset, reindexed to
/// 0..k-1. elem maps new indices back to old ones.
struct RestrictedSystem {
    FactSystem sys;
    std::vector<int> elem;
};
RestrictedSystem restrict_system(const FactSystem& sys, const Bits& upset);

struct CongruenceSpec {
    Bits upset;
    RestrictedSystem restricted;
    std::vector<int> block_of;          // pairs index -> block id
    std::vector<std::vector<int>> blocks;
    PairsLattice quotient;
};

CongruenceSpec quotient(const FactSystem& sys, const Bits& upset);

struct ConLattice {
    std::vector<Bits> downsets; // forcing downsets, deterministic order
    Lattice lattice;            // ordered by containment
};

ConLattice con_lattice(const FactSystem& sys, std::size_t cap = kDefaultDownsetCap);

/// All forcing upsets (complements of the downsets above).
std::vector<Bits> forcing_upsets(const FactSystem& sys, std::size_t cap = kDefaultDownsetCap);

/// Oracle: all congruences of a finite lattice as block partitions
/// (block_of vectors with canonical block numbering), coarsest last not
/// guaranteed; deterministic order.
std::vector<std::vector<int>> brute_congruences(const Lattice& L, std::size_t cap = 1u << 20);

/// The finest congruence merging a with b.
std::vector<int> principal_congruence(const Lattice& L, int a, int b);

bool is_lattice_congruence(const Lattice& L, const std::vector<int>& block_of);

bool is_congruence_uniform(const FactSystem& sys);

} // namespace sdl
