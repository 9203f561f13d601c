#pragma once

#include "sdl/relation.hpp"

namespace sdl::fixtures {

// 4-element system whose pairs lattice is the 6-element semidistributive,
// non-extremal example (isomorphic to the weak order on 3 letters).
// Elements 1..4 map to indices 0..3.
inline Relation semi_to() {
    Relation r = Relation::identity(4);
    r.add(0, 1);
    r.add(1, 3);
    r.add(2, 0);
    r.add(3, 2);
    r.add(1, 2);
    r.add(2, 1);
    return r;
}

inline FactSystem semi_system() {
    Relation to = semi_to();
    auto [onto, into] = fact(to);
    Diagnostics diag;
    auto sys = validate_system(GroundSet::plain(4), to, onto, into, diag);
    if (!sys) throw DomainError(ErrorCode::InternalInconsistency, diag.describe());
    return *sys;
}

// 4-element acyclic reflexive chain relation whose closed sets form the
// 9-element extremal, non-semidistributive example. It is NOT a
// factorization system (the middle arrow cannot be factored).
inline Relation ext_to() {
    Relation r = Relation::identity(4);
    r.add(0, 1);
    r.add(1, 2);
    r.add(2, 3);
    return r;
}

} // namespace sdl::fixtures
