#include "sdl/generators.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <string>

namespace sdl {

Lattice chain(int n) {
    if (n <= 0) throw DomainError(ErrorCode::InvalidInput, "chain needs n >= 1");
    std::vector<Bits> leq(n, Bits(n));
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) leq[i].set(j);
    return lattice_from_leq(leq);
}

Lattice boolean_lattice(int k) {
    if (k < 0 || k > 16) throw DomainError(ErrorCode::SizeLimitExceeded, "boolean rank");
    int n = 1 << k;
    std::vector<Bits> leq(n, Bits(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if ((i & j) == i) leq[i].set(j);
    return lattice_from_leq(leq);
}

namespace {

// enumerates downsets of a reflexive partial order, down[x] = {y : y <= x}
std::vector<Bits> poset_downsets(const std::vector<Bits>& down, std::size_t cap) {
    int n = int(down.size());
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
            Bits nd = d | down[x];
            if (seen.insert(nd).second) {
                if (seen.size() > cap)
                    throw DomainError(ErrorCode::SizeLimitExceeded, "too many downsets");
                work.push(nd);
            }
        }
    }
    return {seen.begin(), seen.end()};
}

} // namespace

Lattice downsets_of(const Relation& poset, std::size_t cap) {
    if (!poset.is_reflexive() || !poset.is_transitive() || !poset.is_antisymmetric())
        throw DomainError(ErrorCode::NotAPartialOrder, "downsets_of needs a partial order");
    std::vector<Bits> down(poset.n, Bits(poset.n));
    for (int x = 0; x < poset.n; ++x) down[x] = poset.preimage(x);
    auto ds = poset_downsets(down, cap);
    int m = int(ds.size());
    std::vector<Bits> leq(m, Bits(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (ds[i].subset_of(ds[j])) leq[i].set(j);
    return lattice_from_leq(leq);
}

Lattice weak_order_sn(int n) {
    if (n < 1 || n > 7)
        throw DomainError(ErrorCode::SizeLimitExceeded, "weak order supported for n in 1..7");
    std::vector<std::vector<int>> perms;
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    int npairs = n * (n - 1) / 2;
    auto pair_index = [&](int a, int b) { // a < b
        return a * n - a * (a + 1) / 2 + (b - a - 1);
    };
    std::vector<Bits> inv;
    inv.reserve(perms.size());
    for (const auto& q : perms) {
        Bits b(npairs);
        std::vector<int> pos(n);
        for (int i = 0; i < n; ++i) pos[q[i]] = i;
        for (int a = 0; a < n; ++a)
            for (int c = a + 1; c < n; ++c)
                if (pos[a] > pos[c]) b.set(pair_index(a, c));
        inv.push_back(b);
    }
    int m = int(perms.size());
    std::vector<Bits> leq(m, Bits(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (inv[i].subset_of(inv[j])) leq[i].set(j);
    return lattice_from_leq(leq);
}

namespace {

// binary trees as strings: "." leaf, "(LR)" internal node
void gen_trees(int k, std::vector<std::string>& out) {
    if (k == 0) {
        out.push_back(".");
        return;
    }
    for (int i = 0; i < k; ++i) {
        std::vector<std::string> ls, rs;
        gen_trees(i, ls);
        gen_trees(k - 1 - i, rs);
        for (const auto& l : ls)
            for (const auto& r : rs) out.push_back("(" + l + r + ")");
    }
}

// splits "(LR)" into L and R
std::pair<std::string, std::string> split_tree(const std::string& t) {
    int depth = 0;
    for (size_t i = 1; i + 1 < t.size(); ++i) {
        if (t[i] == '(') depth++;
        if (t[i] == ')') depth--;
        if (depth == 0) {
            return {t.substr(1, i), t.substr(i + 1, t.size() - i - 2)};
        }
    }
    throw DomainError(ErrorCode::InternalInconsistency, "bad tree encoding");
}

// all single right rotations ((AB)C) -> (A(BC)), anywhere in the tree
void rotations(const std::string& t, std::vector<std::string>& out) {
    if (t == ".") return;
    auto [l, r] = split_tree(t);
    if (l != ".") {
        auto [a, b] = split_tree(l);
        out.push_back("(" + a + "(" + b + r + "))");
    }
    std::vector<std::string> subs;
    rotations(l, subs);
    for (const auto& s : subs) out.push_back("(" + s + r + ")");
    subs.clear();
    rotations(r, subs);
    for (const auto& s : subs) out.push_back("(" + l + s + ")");
}

} // namespace

Lattice tamari(int n) {
    if (n < 1 || n > 9)
        throw DomainError(ErrorCode::SizeLimitExceeded, "tamari supported for n in 1..9");
    std::vector<std::string> trees;
    gen_trees(n, trees);
    std::sort(trees.begin(), trees.end());
    std::map<std::string, int> index;
    for (int i = 0; i < int(trees.size()); ++i) index[trees[i]] = i;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < int(trees.size()); ++i) {
        std::vector<std::string> rot;
        rotations(trees[i], rot);
        for (const auto& t : rot) edges.push_back({i, index.at(t)});
    }
    return lattice_from_covers(edges, int(trees.size()));
}

Lattice doubling_random(int steps, std::uint64_t seed, std::size_t cap) {
    Rng rng(seed);
    Lattice L = lattice_from_leq(std::vector<Bits>{Bits::full(1)});
    for (int s = 0; s < steps; ++s) {
        int lo = rng.below(L.n);
        auto above = L.up[lo].elems();
        int hi = above[rng.below(int(above.size()))];
        L = double_lattice(L, lo, hi).lattice;
        if (std::size_t(L.n) > cap)
            throw DomainError(ErrorCode::SizeLimitExceeded, "doubling grew past the cap");
    }
    return L;
}

namespace {

// canonical key of a reflexive order relation under relabeling: color
// refinement, then lexicographically least matrix over the consistent
// permutations
std::string relation_key(const Relation& r, const std::vector<int>& perm) {
    int n = r.n;
    std::string s(std::size_t(n) * n, '0');
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (r(perm[i], perm[j])) s[std::size_t(i) * n + j] = '1';
    return s;
}

std::string canonical_key(const Relation& r) {
    int n = r.n;
    std::vector<std::uint64_t> color(n);
    for (int x = 0; x < n; ++x)
        color[x] = std::uint64_t(r.row[x].count()) << 32 | std::uint64_t(r.preimage(x).count());
    for (int round = 0; round < n; ++round) {
        std::vector<std::uint64_t> next(n);
        for (int x = 0; x < n; ++x) {
            std::vector<std::uint64_t> lo, hi;
            for (int y = 0; y < n; ++y) {
                if (y == x) continue;
                if (r(x, y)) lo.push_back(color[y]);
                if (r(y, x)) hi.push_back(color[y]);
            }
            std::sort(lo.begin(), lo.end());
            std::sort(hi.begin(), hi.end());
            std::uint64_t h = color[x] * 1000003u + 17;
            for (auto c : lo) h = h * 1000003u + c;
            h = h * 1000003u + 0xabcdu;
            for (auto c : hi) h = h * 1000003u + c;
            next[x] = h;
        }
        if (next == color) break;
        color = next;
    }
    // elements sorted by color, permutations only within equal-color blocks
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return color[a] != color[b] ? color[a] < color[b] : a < b;
    });
    std::vector<std::pair<int, int>> blocks; // [begin, end)
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && color[order[j]] == color[order[i]]) ++j;
        blocks.push_back({i, j});
        i = j;
    }
    std::string best;
    std::vector<int> perm = order;
    // odometer over per-block permutations
    std::vector<std::vector<int>> blockperm;
    for (auto [b, e] : blocks)
        blockperm.push_back(std::vector<int>(order.begin() + b, order.begin() + e));
    while (true) {
        int pos = 0;
        for (auto& bp : blockperm)
            for (int v : bp) perm[pos++] = v;
        std::string key = relation_key(r, perm);
        if (best.empty() || key < best) best = key;
        int k = int(blockperm.size()) - 1;
        while (k >= 0 && !std::next_permutation(blockperm[k].begin(), blockperm[k].end()))
            --k;
        if (k < 0) break;
        // blocks after k were reset to sorted order by next_permutation wrap
    }
    return best;
}

} // namespace

std::vector<Relation> exhaustive_posets(int n) {
    if (n < 1 || n > 8)
        throw DomainError(ErrorCode::SizeLimitExceeded, "poset enumeration capped at 8");
    std::vector<Relation> cur;
    cur.push_back(Relation::identity(1));
    for (int k = 2; k <= n; ++k) {
        std::set<std::string> seen;
        std::vector<Relation> next;
        for (const Relation& r : cur) {
            // rows read x >= y, so row[x] is the principal downset; the new
            // element goes on top of every downset of r
            std::vector<Bits> down(k - 1);
            for (int x = 0; x < k - 1; ++x) down[x] = r.row[x];
            auto ds = poset_downsets(down, std::size_t{1} << 20);
            for (const Bits& d : ds) {
                Relation ext(k);
                for (int x = 0; x < k - 1; ++x)
                    r.row[x].for_each([&](int y) { ext.add(x, y); });
                ext.add(k - 1, k - 1);
                d.for_each([&](int y) { ext.add(k - 1, y); });
                std::string key = canonical_key(ext);
                if (seen.insert(key).second) next.push_back(ext);
            }
        }
        cur = std::move(next);
    }
    return cur;
}

std::vector<Lattice> exhaustive_lattices(int n) {
    std::vector<Lattice> out;
    for (const Relation& r : exhaustive_posets(n)) {
        // here rows read x >= y, i.e. the new maximal element has a full
        // row; reuse as a leq matrix by transposing
        Relation t = r.transpose();
        try {
            out.push_back(lattice_from_leq(t.row));
        } catch (const DomainError&) {
            // not a lattice
        }
    }
    return out;
}

Relation random_reflexive_relation(int n, int density_pct, Rng& rng) {
    Relation r = Relation::identity(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (x != y && rng.chance(density_pct, 100)) r.add(x, y);
    return r;
}

Relation random_poset(int n, int density_pct, Rng& rng) {
    Relation r = Relation::identity(n);
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (rng.chance(density_pct, 100)) r.add(x, y);
    return r.transitive_closure();
}

} // namespace sdl
