#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "sdl/bits.hpp"
#include "sdl/errors.hpp"

namespace sdl {

/// A finite lattice, stored as its order matrix with eagerly derived
/// meet/join tables, Hasse diagram, and extremes.
struct Lattice {
    int n = 0;
    std::vector<Bits> up;   // up[x] = { y : x <= y }
    std::vector<Bits> down; // down[x] = { y : y <= x }
    std::vector<std::vector<int>> meet, join;
    std::vector<std::vector<int>> upper_covers, lower_covers;
    int bottom = -1, top = -1;

    bool leq(int a, int b) const { return up[a].test(b); }
    bool lt(int a, int b) const { return a != b && leq(a, b); }
    bool covers(int a, int b) const; // a covered-by b, i.e. a <. b

    int join_of(const Bits& s) const;  // join of a subset (bottom for empty)
    int meet_of(const Bits& s) const;
};

/// Per-element irreducibility data. j_star/m_star/kappa entries are -1
/// for elements where they do not apply; kappa entries are also -1 when
/// the defining max/min fails to exist (non-semidistributive lattices).
struct IrreducibleData {
    std::vector<int> jirr, mirr;
    std::vector<int> j_star, m_star;
    std::vector<int> kappa_up;   // JIrr -> MIrr
    std::vector<int> kappa_down; // MIrr -> JIrr
    bool kappa_up_total = false, kappa_down_total = false;
};

struct SemidistributivityReport {
    bool join_sd = false, meet_sd = false;
    // witness triple for whichever law fails first
    std::optional<std::array<int, 3>> join_witness, meet_witness;
    bool sd() const { return join_sd && meet_sd; }
};

Lattice lattice_from_leq(const std::vector<Bits>& leq_rows);
Lattice lattice_from_leq(const std::vector<std::vector<bool>>& leq);
Lattice lattice_from_covers(const std::vector<std::pair<int, int>>& edges, int size);

IrreducibleData irreducibles(const Lattice& L);
SemidistributivityReport is_semidistributive(const Lattice& L);
bool is_distributive(const Lattice& L);

/// Backtracking isomorphism search with invariant pruning.
std::optional<std::vector<int>> is_isomorphic(const Lattice& a, const Lattice& b);

/// Longest chain in the Hasse diagram, as a list of elements bottom-up.
std::vector<int> longest_chain(const Lattice& L);

/// Dual lattice (order reversed).
Lattice dual_lattice(const Lattice& L);

} // namespace sdl
