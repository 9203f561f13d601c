#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sdl/bits.hpp"
#include "sdl/errors.hpp"
#include "sdl/lattice.hpp"

namespace sdl {

constexpr std::size_t kDefaultClosedSetCap = std::size_t{1} << 20;

struct GroundSet {
    int size = 0;
    std::vector<std::string> labels; // empty, or one distinct label per index

    static GroundSet plain(int n) { return GroundSet{n, {}}; }
    std::string label(int i) const {
        return labels.empty() ? std::to_string(i + 1) : labels[i];
    }
    void validate() const;
};

/// Binary relation on indices 0..n-1; row[x].test(y) means x -> y.
struct Relation {
    int n = 0;
    std::vector<Bits> row;

    Relation() = default;
    explicit Relation(int n_) : n(n_), row(n_, Bits(n_)) {}
    static Relation identity(int n);

    bool operator()(int x, int y) const { return row[x].test(y); }
    void add(int x, int y) { row[x].set(y); }
    bool operator==(const Relation& o) const { return n == o.n && row == o.row; }

    Bits image(int x) const { return row[x]; }
    Bits preimage(int y) const;
    Relation transpose() const;
    Relation transitive_closure() const;

    bool is_reflexive() const;
    bool is_transitive() const;
    bool is_antisymmetric() const;
    /// acyclic apart from loops (no directed cycle through >= 2 elements)
    bool is_acyclic_reflexive() const;

    void set_diagonal();
};

struct Violation {
    std::string axiom;
    std::vector<int> witness;
    std::string describe() const;
};

struct Diagnostics {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    std::string describe() const;
};

struct FactSystem {
    GroundSet ground;
    Relation to, onto, into;
    Diagnostics diagnostics;

    int size() const { return ground.size; }
};

/// Fact(->) = (->>, in->). Throws NonReflexiveInput.
std::pair<Relation, Relation> fact(const Relation& rel);

/// Mult(->>, in->): boolean matrix product.
Relation mult(const Relation& onto, const Relation& into);

/// Checks all five axioms; the returned optional is empty iff diagnostics
/// has violations.
std::optional<FactSystem> validate_system(const GroundSet& ground, const Relation& to,
                                          const Relation& onto, const Relation& into,
                                          Diagnostics& diag);

/// Builds a system from the two partial orders alone (to := Mult), checking
/// the three poset-only conditions.
std::optional<FactSystem> system_from_posets(const GroundSet& ground, const Relation& onto,
                                             const Relation& into, Diagnostics& diag);

Bits perp_right(const Relation& to, const Bits& xs);
Bits perp_left(const Relation& to, const Bits& ys);
Bits closure(const Relation& to, const Bits& xs);

struct OrthoPair {
    Bits torsion, free;
};

struct PairsLattice {
    std::vector<OrthoPair> pairs; // deterministic order: bottom first
    Lattice lattice;

    int index_of(const Bits& torsion) const;
};

/// Enumerates all closed sets of an arbitrary relation (seeded with singleton
/// closures, closed under pairwise joins).
std::vector<Bits> closed_sets(const Relation& to, std::size_t cap = kDefaultClosedSetCap);

PairsLattice pairs_lattice(const Relation& to, std::size_t cap = kDefaultClosedSetCap);
inline PairsLattice pairs_lattice(const FactSystem& sys, std::size_t cap = kDefaultClosedSetCap) {
    return pairs_lattice(sys.to, cap);
}

/// Transposes all three relations and swaps onto/into.
FactSystem op_dual(const FactSystem& sys);

} // namespace sdl
