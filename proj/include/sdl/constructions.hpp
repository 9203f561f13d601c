#pragma once

#include <optional>
#include <vector>

#include "sdl/congruence.hpp"
#include "sdl/covers.hpp"
#include "sdl/extract.hpp"
#include "sdl/relation.hpp"

namespace sdl {

/// System of an interval [lo, hi] of the pairs lattice: ground is
/// hi.torsion minus lo.torsion intersected with lo.free, the arrow
/// relation restricted there, refactored. elem maps back to the original
/// ground set.
struct IntervalSystem {
    FactSystem sys;
    std::vector<int> elem;
};
IntervalSystem interval_system(const FactSystem& sys, const OrthoPair& lo,
                               const OrthoPair& hi);

/// Day doubling of an interval. Elements outside the interval keep their
/// index; interval elements split into a lower and an upper copy.
struct DoubledLattice {
    Lattice lattice;
    std::vector<int> base_of;   // new index -> old index
    std::vector<int> level_of;  // 0 untouched, 1 lower copy, 2 upper copy
};
DoubledLattice double_lattice(const Lattice& L, int lo, int hi);

/// System-side doubling: one extra ground element, relations extended per
/// the interval data. Last ground index is the new element.
FactSystem double_system(const FactSystem& sys, const OrthoPair& lo, const OrthoPair& hi);

struct DistReport {
    bool lattice_distributive;
    bool to_partial_order;
    bool onto_equals_into;
    bool to_equals_onto;
    bool to_equals_into;
    bool all_equivalent() const {
        return lattice_distributive == to_partial_order &&
               to_partial_order == onto_equals_into &&
               onto_equals_into == to_equals_onto && to_equals_onto == to_equals_into;
    }
};
DistReport dist_char(const FactSystem& sys);

struct TwoSetRelation {
    GroundSet left, right;
    std::vector<Bits> adj; // adj[j].test(m): j -> m
};

/// (JIrr, MIrr, j -> m iff j not<= m). Works for any finite lattice.
struct MarkowskySystem {
    TwoSetRelation rel;
    std::vector<int> jirr, mirr; // ground index -> lattice element
};
MarkowskySystem markowsky_system(const Lattice& L);

struct TwoSetPairs {
    std::vector<std::pair<Bits, Bits>> pairs; // (left subset, right subset)
    Lattice lattice;
    int index_of(const Bits& left_part) const;
};
TwoSetPairs two_set_pairs(const TwoSetRelation& rel, std::size_t cap = kDefaultClosedSetCap);

/// x -> y with no x' != x satisfying x ->> x' -> y, where ->> compares
/// left images. Companion existence for all elements on both sides marks
/// the relations of canonical form.
bool has_right_companion(const TwoSetRelation& rel, int x);
bool has_left_companion(const TwoSetRelation& rel, int y);

struct ExtremalCertificate {
    std::vector<int> chain; // a longest chain, bottom up
    int n_jirr = 0, n_mirr = 0;
    bool extremal = false;
    std::vector<int> mu; // JIrr index -> MIrr index, empty when absent
};
ExtremalCertificate extremal_analysis(const Lattice& L);

/// The unique bijection pairing irreducibles so that every j lies outside
/// the order filter of its partner (diagonal of the two-set relation), when
/// the lattice is extremal.
std::optional<std::vector<int>> ftfel_mu(const Lattice& L);

struct ClassifyReport {
    int size = 0;
    bool distributive = false;
    bool join_sd = false, meet_sd = false;
    bool congruence_uniform = false;
    bool extremal = false;
    bool trim_candidate = false; // extremal and semidistributive
    // system-only fields
    bool has_system = false;
    bool two_acyclic = false;
    bool to_acyclic_reflexive = false;
    bool sd() const { return join_sd && meet_sd; }
};
ClassifyReport classify(const Lattice& L);
ClassifyReport classify(const FactSystem& sys);

} // namespace sdl
