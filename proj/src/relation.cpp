#include "sdl/relation.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

namespace sdl {

void GroundSet::validate() const {
    if (size < 0) throw DomainError(ErrorCode::InvalidInput, "negative ground set size");
    if (!labels.empty()) {
        if (int(labels.size()) != size)
            throw DomainError(ErrorCode::InvalidInput, "label count does not match size");
        std::set<std::string> seen(labels.begin(), labels.end());
        if (int(seen.size()) != size)
            throw DomainError(ErrorCode::InvalidInput, "labels are not distinct");
    }
}

Relation Relation::identity(int n) {
    Relation r(n);
    r.set_diagonal();
    return r;
}

void Relation::set_diagonal() {
    for (int x = 0; x < n; ++x) row[x].set(x);
}

Bits Relation::preimage(int y) const {
    Bits b(n);
    for (int x = 0; x < n; ++x)
        if (row[x].test(y)) b.set(x);
    return b;
}

Relation Relation::transpose() const {
    Relation t(n);
    for (int x = 0; x < n; ++x)
        row[x].for_each([&](int y) { t.row[y].set(x); });
    return t;
}

Relation Relation::transitive_closure() const {
    Relation c = *this;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int x = 0; x < n; ++x) {
            Bits acc = c.row[x];
            c.row[x].for_each([&](int y) { acc |= c.row[y]; });
            if (acc != c.row[x]) {
                c.row[x] = acc;
                changed = true;
            }
        }
    }
    return c;
}

bool Relation::is_reflexive() const {
    for (int x = 0; x < n; ++x)
        if (!row[x].test(x)) return false;
    return true;
}

bool Relation::is_transitive() const {
    for (int x = 0; x < n; ++x) {
        bool ok = true;
        row[x].for_each([&](int y) {
            if (!row[y].subset_of(row[x])) ok = false;
        });
        if (!ok) return false;
    }
    return true;
}

bool Relation::is_antisymmetric() const {
    for (int x = 0; x < n; ++x)
        for (int y : row[x].elems())
            if (y != x && row[y].test(x)) return false;
    return true;
}

bool Relation::is_acyclic_reflexive() const {
    Relation c = transitive_closure();
    for (int x = 0; x < n; ++x)
        for (int y : c.row[x].elems())
            if (y != x && c.row[y].test(x)) return false;
    return true;
}

std::string Violation::describe() const {
    std::string s = axiom + " (witness";
    for (int w : witness) s += " " + std::to_string(w + 1);
    return s + ")";
}

std::string Diagnostics::describe() const {
    if (ok()) return "ok";
    std::string s;
    for (const auto& v : violations) {
        if (!s.empty()) s += "; ";
        s += v.describe();
    }
    return s;
}

std::pair<Relation, Relation> fact(const Relation& rel) {
    if (!rel.is_reflexive())
        throw DomainError(ErrorCode::NonReflexiveInput, "fact() requires a reflexive relation");
    int n = rel.n;
    Relation onto(n), into(n);
    Relation t = rel.transpose();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (rel.row[y].subset_of(rel.row[x])) onto.add(x, y);
            if (t.row[x].subset_of(t.row[y])) into.add(x, y);
        }
    return {onto, into};
}

Relation mult(const Relation& onto, const Relation& into) {
    if (!onto.is_reflexive() || !into.is_reflexive())
        throw DomainError(ErrorCode::NonReflexiveInput, "mult() requires reflexive relations");
    int n = onto.n;
    Relation r(n);
    for (int x = 0; x < n; ++x)
        onto.row[x].for_each([&](int y) { r.row[x] |= into.row[y]; });
    return r;
}

namespace {

void check_reflexive(const Relation& r, const char* name, Diagnostics& diag) {
    for (int x = 0; x < r.n; ++x)
        if (!r.row[x].test(x)) {
            diag.violations.push_back({std::string(name) + " not reflexive", {x}});
            return;
        }
}

void check_order_condition(const Relation& r, const char* name, Diagnostics& diag) {
    for (int x = 0; x < r.n; ++x)
        for (int y : r.row[x].elems())
            if (y != x && r.row[y].test(x)) {
                diag.violations.push_back({std::string("order condition fails for ") + name, {x, y}});
                return;
            }
}

} // namespace

std::optional<FactSystem> validate_system(const GroundSet& ground, const Relation& to,
                                          const Relation& onto, const Relation& into,
                                          Diagnostics& diag) {
    ground.validate();
    if (to.n != ground.size || onto.n != ground.size || into.n != ground.size)
        throw DomainError(ErrorCode::InvalidInput, "relation dimensions disagree with ground set");
    diag = Diagnostics{};

    check_reflexive(to, "to", diag);
    check_reflexive(onto, "onto", diag);
    check_reflexive(into, "into", diag);
    if (!diag.ok()) return std::nullopt;

    auto [fo, fi] = fact(to);
    for (int x = 0; x < to.n && diag.ok(); ++x) {
        if (fo.row[x] != onto.row[x]) {
            for (int y = 0; y < to.n; ++y)
                if (fo(x, y) != onto(x, y)) {
                    diag.violations.push_back({"Fact equality fails for onto", {x, y}});
                    break;
                }
        } else if (fi.row[x] != into.row[x]) {
            for (int y = 0; y < to.n; ++y)
                if (fi(x, y) != into(x, y)) {
                    diag.violations.push_back({"Fact equality fails for into", {x, y}});
                    break;
                }
        }
    }

    if (diag.ok()) {
        Relation m = mult(onto, into);
        for (int x = 0; x < to.n && diag.ok(); ++x)
            if (m.row[x] != to.row[x])
                for (int y = 0; y < to.n; ++y)
                    if (m(x, y) != to(x, y)) {
                        diag.violations.push_back({"Mult equality fails", {x, y}});
                        break;
                    }
    }

    check_order_condition(onto, "onto", diag);
    check_order_condition(into, "into", diag);

    // brick condition: no distinct x ->> y in-> x
    for (int x = 0; x < to.n && diag.ok(); ++x)
        for (int y : onto.row[x].elems())
            if (y != x && into(y, x)) {
                diag.violations.push_back({"brick condition fails", {x, y}});
                break;
            }

    if (!diag.ok()) return std::nullopt;
    return FactSystem{ground, to, onto, into, diag};
}

std::optional<FactSystem> system_from_posets(const GroundSet& ground, const Relation& onto,
                                             const Relation& into, Diagnostics& diag) {
    ground.validate();
    diag = Diagnostics{};
    if (!onto.is_reflexive() || !into.is_reflexive())
        throw DomainError(ErrorCode::NonReflexiveInput, "system_from_posets requires reflexive orders");
    if (!onto.is_transitive() || !onto.is_antisymmetric())
        throw DomainError(ErrorCode::NotAPartialOrder, "onto is not a partial order");
    if (!into.is_transitive() || !into.is_antisymmetric())
        throw DomainError(ErrorCode::NotAPartialOrder, "into is not a partial order");

    int n = ground.size;
    // (i) brick
    for (int x = 0; x < n && diag.ok(); ++x)
        for (int y : into.row[x].elems())
            if (y != x && onto(y, x)) {
                diag.violations.push_back({"condition (i): brick fails", {x, y}});
                break;
            }

    Relation to = mult(onto, into);
    auto [fo, fi] = fact(to);
    // (ii) onto is recovered by Fact(Mult), (iii) likewise for into
    for (int x = 0; x < n && diag.ok(); ++x)
        for (int y = 0; y < n; ++y)
            if (fo(x, y) != onto(x, y)) {
                diag.violations.push_back({"condition (ii): onto not recovered", {x, y}});
                break;
            }
    for (int x = 0; x < n && diag.ok(); ++x)
        for (int y = 0; y < n; ++y)
            if (fi(x, y) != into(x, y)) {
                diag.violations.push_back({"condition (iii): into not recovered", {x, y}});
                break;
            }

    if (!diag.ok()) return std::nullopt;
    return FactSystem{ground, to, onto, into, diag};
}

Bits perp_right(const Relation& to, const Bits& xs) {
    Bits hit(to.n);
    xs.for_each([&](int x) { hit |= to.row[x]; });
    return hit.complement();
}

Bits perp_left(const Relation& to, const Bits& ys) {
    Bits res = Bits::full(to.n);
    for (int x = 0; x < to.n; ++x)
        if (to.row[x].intersects(ys)) res.reset(x);
    return res;
}

Bits closure(const Relation& to, const Bits& xs) {
    return perp_left(to, perp_right(to, xs));
}

int PairsLattice::index_of(const Bits& torsion) const {
    for (int i = 0; i < int(pairs.size()); ++i)
        if (pairs[i].torsion == torsion) return i;
    return -1;
}

std::vector<Bits> closed_sets(const Relation& to, std::size_t cap) {
    std::set<Bits> found;
    std::vector<Bits> frontier;
    auto push = [&](const Bits& b) {
        if (found.insert(b).second) {
            frontier.push_back(b);
            if (found.size() > cap)
                throw DomainError(ErrorCode::SizeLimitExceeded,
                                  "closed-set count exceeds cap " + std::to_string(cap));
        }
    };
    push(closure(to, Bits(to.n)));
    for (int x = 0; x < to.n; ++x) push(closure(to, Bits::single(to.n, x)));
    // every closed set is a join of singleton closures, so pairwise joining
    // the frontier against everything reaches a fixpoint with all of them
    while (!frontier.empty()) {
        Bits a = frontier.back();
        frontier.pop_back();
        std::vector<Bits> snapshot(found.begin(), found.end());
        for (const Bits& b : snapshot) {
            if (b.subset_of(a) || a.subset_of(b)) continue;
            push(closure(to, a | b));
        }
    }
    return {found.begin(), found.end()}; // std::set: sorted by (count, lex)
}

PairsLattice pairs_lattice(const Relation& to, std::size_t cap) {
    auto closed = closed_sets(to, cap);
    int m = int(closed.size());
    PairsLattice pl;
    pl.pairs.reserve(m);
    for (const Bits& x : closed) pl.pairs.push_back({x, perp_right(to, x)});
    std::vector<Bits> leq(m, Bits(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (closed[i].subset_of(closed[j])) leq[i].set(j);
    pl.lattice = lattice_from_leq(leq);
    return pl;
}

FactSystem op_dual(const FactSystem& sys) {
    FactSystem d;
    d.ground = sys.ground;
    d.to = sys.to.transpose();
    d.onto = sys.into.transpose();
    d.into = sys.onto.transpose();
    Diagnostics diag;
    auto v = validate_system(d.ground, d.to, d.onto, d.into, diag);
    if (!v)
        throw DomainError(ErrorCode::InternalInconsistency,
                          "dual of a valid system failed validation: " + diag.describe());
    return *v;
}

} // namespace sdl
