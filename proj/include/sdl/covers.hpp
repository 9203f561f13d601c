#pragma once

#include <map>
#include <optional>
#include <vector>

#include "sdl/relation.hpp"

namespace sdl {

// Convention throughout: an arrow x R y reads "x >= y". So "c is in->-maximal
// in X" means no other x in X with x in-> c, and "x is ->>-minimal in S" means
// no other s in S with x ->> s.

Bits T_of(const FactSystem& sys, int x);      // {x' : x ->> x'}
Bits T_star(const FactSystem& sys, int x);    // T(x) minus x
Bits F_of(const FactSystem& sys, int x);      // {x' : x' in-> x}
Bits F_star(const FactSystem& sys, int x);

/// Elements of s with no other member of s above them in rel (arrow = geq).
Bits arrow_maximal(const Relation& rel, const Bits& s);
/// Elements of s with no other member of s below them.
Bits arrow_minimal(const Relation& rel, const Bits& s);

/// X minus {x in X : x ->> c}. Requires c in X.
Bits del(const FactSystem& sys, const Bits& closed_set, int c);

struct CoverData {
    Bits closed_set;
    std::vector<int> cov;             // ascending element order
    std::vector<Bits> lower_covers;   // parallel to cov: Del(X, c)
};

bool is_closed(const FactSystem& sys, const Bits& s);

CoverData cov(const FactSystem& sys, const Bits& closed_set);

/// {T(c) : c in Cov(X)}, the canonical join representation of a closed set.
std::vector<Bits> canonical_join_rep(const FactSystem& sys, const Bits& closed_set);

/// Refinement preorder on subsets of a lattice: every s in a lies below
/// some s' in b.
bool refines(const Lattice& L, const Bits& a, const Bits& b);

/// Oracle: the unique refinement-minimal antichain of join-irreducibles
/// joining to x, or nullopt when no minimum exists.
std::optional<std::vector<int>> brute_cjr(const Lattice& L, int x);

struct CJComplex {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges; // mutually non-arrow pairs, a < b
    bool flag = true;                       // faces are exactly the cliques

    bool has_edge(int a, int b) const;
    bool is_face(const Bits& s) const;
};

CJComplex cj_complex(const FactSystem& sys);

} // namespace sdl
