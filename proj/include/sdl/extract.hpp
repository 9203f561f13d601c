#pragma once

#include <vector>

#include "sdl/covers.hpp"
#include "sdl/relation.hpp"

namespace sdl {

/// The factorization system carried by the join-irreducibles of a
/// semidistributive lattice. elem[i] is the lattice element behind ground
/// index i.
struct ExtractedSystem {
    FactSystem sys;
    std::vector<int> elem;
};

/// Builds (JIrr(L), to, onto, into) with to: i not<= kappa(j),
/// onto: i >= j, into: kappa(i) >= kappa(j). Requires both kappa maps
/// total, i.e. L semidistributive.
ExtractedSystem extract_system(const Lattice& L);

struct RoundtripReport {
    bool ok = false;
    int size = 0;
    std::vector<int> pair_of_element; // lattice element -> pairs index
    std::string detail;               // set on failure
};

/// Verifies the element <-> maximal-orthogonal-pair correspondence between
/// L and the pairs lattice of its extracted system, including the inverse
/// map (join of the torsion part, meet of kappa over the free part).
RoundtripReport ftfsdl_roundtrip(const Lattice& L);

} // namespace sdl
