#include "sdl/congruence.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

namespace sdl {

ForcingRelation directly_forces(const FactSystem& sys) {
    int n = sys.size();
    ForcingRelation f;
    f.squig = Relation(n);
    f.witness.assign(n, std::vector<int>(n, 0));
    for (int y = 0; y < n; ++y) {
        Bits fy = F_of(sys, y);
        arrow_minimal(sys.onto, fy).for_each([&](int x) {
            f.squig.add(x, y);
            f.witness[x][y] |= 1;
        });
        Bits ty = T_of(sys, y);
        arrow_maximal(sys.into, ty).for_each([&](int x) {
            f.squig.add(x, y);
            f.witness[x][y] |= 2;
        });
    }
    // brick condition makes y itself minimal in F(y), so the diagonal holds
    f.closure = f.squig.transitive_closure();
    return f;
}

std::pair<Bits, Bits> image_coimage(const FactSystem& sys, int x, int z) {
    if (!sys.to(x, z))
        throw DomainError(ErrorCode::NoArrow, "image_coimage: no arrow " +
                                                  std::to_string(x + 1) + " -> " +
                                                  std::to_string(z + 1));
    Bits mid(sys.size());
    sys.onto.row[x].for_each([&](int y) {
        if (sys.into(y, z)) mid.set(y);
    });
    return {arrow_minimal(sys.onto, mid), arrow_maximal(sys.into, mid)};
}

bool is_forcing_upset(const ForcingRelation& f, const Bits& upset,
                      std::pair<int, int>* bad) {
    int n = f.squig.n;
    for (int x = 0; x < n; ++x) {
        if (upset.test(x)) continue;
        for (int y : f.squig.row[x].elems())
            if (upset.test(y)) {
                if (bad) *bad = {x, y};
                return false;
            }
    }
    return true;
}

RestrictedSystem restrict_system(const FactSystem& sys, const Bits& upset) {
    ForcingRelation f = directly_forces(sys);
    std::pair<int, int> bad;
    if (!is_forcing_upset(f, upset, &bad))
        throw DomainError(ErrorCode::NotAForcingUpset,
                          "element " + std::to_string(bad.first + 1) + " forces " +
                              std::to_string(bad.second + 1) + " but is missing");
    RestrictedSystem r;
    r.elem = upset.elems();
    int k = int(r.elem.size());
    Relation to(k), onto(k), into(k);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
            if (sys.to(r.elem[a], r.elem[b])) to.add(a, b);
            if (sys.onto(r.elem[a], r.elem[b])) onto.add(a, b);
            if (sys.into(r.elem[a], r.elem[b])) into.add(a, b);
        }
    Diagnostics diag;
    auto v = validate_system(GroundSet::plain(k), to, onto, into, diag);
    if (!v)
        throw DomainError(ErrorCode::InternalInconsistency,
                          "restriction to a forcing upset is not a valid system: " +
                              diag.describe());
    r.sys = *v;
    return r;
}

CongruenceSpec quotient(const FactSystem& sys, const Bits& upset) {
    CongruenceSpec spec;
    spec.upset = upset;
    spec.restricted = restrict_system(sys, upset);
    spec.quotient = pairs_lattice(spec.restricted.sys);

    PairsLattice P = pairs_lattice(sys);
    int m = int(P.pairs.size());
    int k = int(spec.restricted.elem.size());
    spec.block_of.assign(m, -1);
    spec.blocks.assign(spec.quotient.pairs.size(), {});
    for (int i = 0; i < m; ++i) {
        Bits cut(k);
        for (int a = 0; a < k; ++a)
            if (P.pairs[i].torsion.test(spec.restricted.elem[a])) cut.set(a);
        int q = spec.quotient.index_of(cut);
        if (q < 0)
            throw DomainError(ErrorCode::InternalInconsistency,
                              "quotient image of a pair is not closed");
        spec.block_of[i] = q;
        spec.blocks[q].push_back(i);
    }
    for (const auto& blk : spec.blocks)
        if (blk.empty())
            throw DomainError(ErrorCode::InternalInconsistency,
                              "quotient map is not surjective");
    // every fiber must be an interval of the pairs lattice
    for (const auto& blk : spec.blocks) {
        Bits members(m);
        for (int i : blk) members.set(i);
        int lo = P.lattice.meet_of(members), hi = P.lattice.join_of(members);
        Bits interval = P.lattice.up[lo] & P.lattice.down[hi];
        if (interval != members)
            throw DomainError(ErrorCode::InternalInconsistency,
                              "quotient fiber is not an interval");
    }
    return spec;
}

namespace {

std::vector<Bits> downsets_of_closure(const Relation& tc, std::size_t cap) {
    int n = tc.n;
    std::set<Bits> seen;
    std::queue<Bits> work;
    Bits empty(n);
    seen.insert(empty);
    work.push(empty);
    while (!work.empty()) {
        Bits d = work.front();
        work.pop();
        for (int x = 0; x < n; ++x) {
            if (d.test(x)) continue;
            Bits need = tc.row[x];
            Bits nd = d | need;
            nd.set(x);
            // only grow by whole force-closed chunks
            bool closed = true;
            nd.for_each([&](int y) {
                if (!tc.row[y].subset_of(nd)) closed = false;
            });
            if (!closed) continue;
            if (seen.insert(nd).second) {
                if (seen.size() > cap)
                    throw DomainError(ErrorCode::SizeLimitExceeded,
                                      "too many forcing downsets");
                work.push(nd);
            }
        }
    }
    return {seen.begin(), seen.end()};
}

} // namespace

ConLattice con_lattice(const FactSystem& sys, std::size_t cap) {
    ForcingRelation f = directly_forces(sys);
    ConLattice cl;
    cl.downsets = downsets_of_closure(f.closure, cap);
    int m = int(cl.downsets.size());
    std::vector<Bits> leq(m, Bits(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (cl.downsets[i].subset_of(cl.downsets[j])) leq[i].set(j);
    cl.lattice = lattice_from_leq(leq);
    if (!is_distributive(cl.lattice))
        throw DomainError(ErrorCode::InternalInconsistency,
                          "congruence lattice came out non-distributive");
    return cl;
}

std::vector<Bits> forcing_upsets(const FactSystem& sys, std::size_t cap) {
    ForcingRelation f = directly_forces(sys);
    auto downs = downsets_of_closure(f.closure, cap);
    std::vector<Bits> ups;
    ups.reserve(downs.size());
    for (const Bits& d : downs) ups.push_back(d.complement());
    std::sort(ups.begin(), ups.end());
    return ups;
}

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (a > b) std::swap(a, b);
        parent[b] = a;
        return true;
    }
};

std::vector<int> canonical_blocks(Dsu& dsu, int n) {
    std::vector<int> label(n, -1), out(n);
    int next = 0;
    for (int x = 0; x < n; ++x) {
        int r = dsu.find(x);
        if (label[r] < 0) label[r] = next++;
        out[x] = label[r];
    }
    return out;
}

// closes the seeded merges under meet and join translation
std::vector<int> congruence_closure(const Lattice& L,
                                    const std::vector<std::pair<int, int>>& seeds) {
    Dsu dsu(L.n);
    std::queue<std::pair<int, int>> work;
    for (auto [a, b] : seeds) work.push({a, b});
    while (!work.empty()) {
        auto [x, y] = work.front();
        work.pop();
        if (!dsu.unite(x, y)) continue;
        for (int u = 0; u < L.n; ++u) {
            if (dsu.find(L.meet[x][u]) != dsu.find(L.meet[y][u]))
                work.push({L.meet[x][u], L.meet[y][u]});
            if (dsu.find(L.join[x][u]) != dsu.find(L.join[y][u]))
                work.push({L.join[x][u], L.join[y][u]});
        }
    }
    return canonical_blocks(dsu, L.n);
}

} // namespace

std::vector<int> principal_congruence(const Lattice& L, int a, int b) {
    return congruence_closure(L, {{a, b}});
}

std::vector<std::vector<int>> brute_congruences(const Lattice& L, std::size_t cap) {
    // generators: finest congruences contracting one cover each
    std::vector<std::vector<int>> gens;
    for (int b = 0; b < L.n; ++b)
        for (int a : L.lower_covers[b]) gens.push_back(principal_congruence(L, a, b));

    std::set<std::vector<int>> seen;
    std::queue<std::vector<int>> work;
    std::vector<int> discrete(L.n);
    std::iota(discrete.begin(), discrete.end(), 0);
    seen.insert(discrete);
    work.push(discrete);
    while (!work.empty()) {
        std::vector<int> cur = work.front();
        work.pop();
        for (const auto& g : gens) {
            std::vector<std::pair<int, int>> seeds;
            for (int x = 0; x < L.n; ++x)
                for (int y = x + 1; y < L.n; ++y)
                    if (cur[x] == cur[y] || g[x] == g[y]) seeds.push_back({x, y});
            auto merged = congruence_closure(L, seeds);
            if (seen.insert(merged).second) {
                if (seen.size() > cap)
                    throw DomainError(ErrorCode::SizeLimitExceeded,
                                      "too many congruences");
                work.push(merged);
            }
        }
    }
    return {seen.begin(), seen.end()};
}

bool is_lattice_congruence(const Lattice& L, const std::vector<int>& block_of) {
    for (int x = 0; x < L.n; ++x)
        for (int y = 0; y < L.n; ++y) {
            if (block_of[x] != block_of[y]) continue;
            for (int u = 0; u < L.n; ++u) {
                if (block_of[L.meet[x][u]] != block_of[L.meet[y][u]]) return false;
                if (block_of[L.join[x][u]] != block_of[L.join[y][u]]) return false;
            }
        }
    return true;
}

bool is_congruence_uniform(const FactSystem& sys) {
    ForcingRelation f = directly_forces(sys);
    for (int x = 0; x < sys.size(); ++x)
        for (int y : f.closure.row[x].elems())
            if (y != x && f.closure(y, x)) return false;
    return true;
}

} // namespace sdl
