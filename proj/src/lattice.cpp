#include "sdl/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace sdl {

namespace {

void check_partial_order(const std::vector<Bits>& up) {
    int n = int(up.size());
    for (int x = 0; x < n; ++x) {
        if (int(up[x].size()) != n)
            throw DomainError(ErrorCode::InvalidInput, "leq matrix is not square");
        if (!up[x].test(x))
            throw DomainError(ErrorCode::NotAPartialOrder, "not reflexive at " + std::to_string(x));
    }
    for (int x = 0; x < n; ++x)
        for (int y : up[x].elems()) {
            if (y != x && up[y].test(x))
                throw DomainError(ErrorCode::NotAPartialOrder,
                                  "antisymmetry fails on (" + std::to_string(x) + "," + std::to_string(y) + ")");
            if (!up[y].subset_of(up[x]))
                throw DomainError(ErrorCode::NotAPartialOrder,
                                  "transitivity fails through (" + std::to_string(x) + "," + std::to_string(y) + ")");
        }
}

// unique maximum of a nonempty candidate set, or -1
int unique_max(const std::vector<Bits>& down, const Bits& cand) {
    int best = -1;
    cand.for_each([&](int c) {
        if (best == -1 || down[c].test(best)) best = c;
    });
    if (best == -1) return -1;
    bool all = true;
    cand.for_each([&](int c) {
        if (!down[best].test(c)) all = false;
    });
    return all ? best : -1;
}

int unique_min(const std::vector<Bits>& up, const Bits& cand) {
    int best = -1;
    cand.for_each([&](int c) {
        if (best == -1 || up[c].test(best)) best = c;
    });
    if (best == -1) return -1;
    bool all = true;
    cand.for_each([&](int c) {
        if (!up[best].test(c)) all = false;
    });
    return all ? best : -1;
}

} // namespace

bool Lattice::covers(int a, int b) const {
    if (!lt(a, b)) return false;
    for (int z : up[a].elems())
        if (z != a && z != b && down[b].test(z)) return false;
    return true;
}

int Lattice::join_of(const Bits& s) const {
    int r = bottom;
    s.for_each([&](int x) { r = join[r][x]; });
    return r;
}

int Lattice::meet_of(const Bits& s) const {
    int r = top;
    s.for_each([&](int x) { r = meet[r][x]; });
    return r;
}

Lattice lattice_from_leq(const std::vector<Bits>& leq_rows) {
    Lattice L;
    L.n = int(leq_rows.size());
    L.up = leq_rows;
    check_partial_order(L.up);

    L.down.assign(L.n, Bits(L.n));
    for (int x = 0; x < L.n; ++x)
        for (int y : L.up[x].elems()) L.down[y].set(x);

    if (L.n == 0) throw DomainError(ErrorCode::NotALattice, "empty poset has no extremes");

    L.meet.assign(L.n, std::vector<int>(L.n));
    L.join.assign(L.n, std::vector<int>(L.n));
    for (int x = 0; x < L.n; ++x)
        for (int y = x; y < L.n; ++y) {
            int m = unique_max(L.down, L.down[x] & L.down[y]);
            if (m < 0)
                throw DomainError(ErrorCode::NotALattice,
                                  "no unique meet for (" + std::to_string(x) + "," + std::to_string(y) + ")");
            int j = unique_min(L.up, L.up[x] & L.up[y]);
            if (j < 0)
                throw DomainError(ErrorCode::NotALattice,
                                  "no unique join for (" + std::to_string(x) + "," + std::to_string(y) + ")");
            L.meet[x][y] = L.meet[y][x] = m;
            L.join[x][y] = L.join[y][x] = j;
        }

    for (int x = 0; x < L.n; ++x) {
        if (L.down[x].count() == 1) L.bottom = x;
        if (L.up[x].count() == 1) L.top = x;
    }
    // bottom/top exist in any finite lattice (iterated meet/join)
    if (L.bottom < 0 || L.top < 0)
        throw DomainError(ErrorCode::InternalInconsistency, "lattice without extremes");

    L.upper_covers.assign(L.n, {});
    L.lower_covers.assign(L.n, {});
    for (int a = 0; a < L.n; ++a)
        for (int b : L.up[a].elems())
            if (L.covers(a, b)) {
                L.upper_covers[a].push_back(b);
                L.lower_covers[b].push_back(a);
            }
    return L;
}

Lattice lattice_from_leq(const std::vector<std::vector<bool>>& leq) {
    int n = int(leq.size());
    std::vector<Bits> rows(n, Bits(n));
    for (int x = 0; x < n; ++x) {
        if (int(leq[x].size()) != n)
            throw DomainError(ErrorCode::InvalidInput, "leq matrix is not square");
        for (int y = 0; y < n; ++y)
            if (leq[x][y]) rows[x].set(y);
    }
    return lattice_from_leq(rows);
}

Lattice lattice_from_covers(const std::vector<std::pair<int, int>>& edges, int size) {
    std::vector<Bits> up(size, Bits(size));
    for (int x = 0; x < size; ++x) up[x].set(x);
    std::vector<std::vector<int>> above(size);
    for (auto [a, b] : edges) {
        if (a < 0 || b < 0 || a >= size || b >= size)
            throw DomainError(ErrorCode::InvalidInput, "cover edge out of range");
        above[a].push_back(b);
    }
    // transitive closure by repeated relaxation (sizes are small)
    bool changed = true;
    while (changed) {
        changed = false;
        for (int x = 0; x < size; ++x)
            for (int b : above[x])
                if (!up[b].subset_of(up[x])) {
                    up[x] |= up[b];
                    changed = true;
                }
    }
    return lattice_from_leq(up);
}

IrreducibleData irreducibles(const Lattice& L) {
    IrreducibleData d;
    d.j_star.assign(L.n, -1);
    d.m_star.assign(L.n, -1);
    d.kappa_up.assign(L.n, -1);
    d.kappa_down.assign(L.n, -1);

    for (int x = 0; x < L.n; ++x) {
        if (L.lower_covers[x].size() == 1) {
            d.jirr.push_back(x);
            d.j_star[x] = L.lower_covers[x][0];
        }
        if (L.upper_covers[x].size() == 1) {
            d.mirr.push_back(x);
            d.m_star[x] = L.upper_covers[x][0];
        }
    }

    d.kappa_up_total = true;
    for (int j : d.jirr) {
        Bits cand(L.n);
        for (int x = 0; x < L.n; ++x)
            if (L.meet[j][x] == d.j_star[j]) cand.set(x);
        int best = -1;
        bool unique = true;
        cand.for_each([&](int c) {
            if (best == -1 || L.down[c].test(best)) best = c;
        });
        if (best >= 0)
            cand.for_each([&](int c) {
                if (!L.down[best].test(c)) unique = false;
            });
        if (best >= 0 && unique)
            d.kappa_up[j] = best;
        else
            d.kappa_up_total = false;
    }
    d.kappa_down_total = true;
    for (int m : d.mirr) {
        Bits cand(L.n);
        for (int x = 0; x < L.n; ++x)
            if (L.join[m][x] == d.m_star[m]) cand.set(x);
        int best = -1;
        bool unique = true;
        cand.for_each([&](int c) {
            if (best == -1 || L.up[c].test(best)) best = c;
        });
        if (best >= 0)
            cand.for_each([&](int c) {
                if (!L.up[best].test(c)) unique = false;
            });
        if (best >= 0 && unique)
            d.kappa_down[m] = best;
        else
            d.kappa_down_total = false;
    }
    return d;
}

SemidistributivityReport is_semidistributive(const Lattice& L) {
    SemidistributivityReport r;
    r.join_sd = r.meet_sd = true;
    for (int x = 0; x < L.n && (r.join_sd || r.meet_sd); ++x)
        for (int y = 0; y < L.n; ++y)
            for (int z = 0; z < L.n; ++z) {
                if (r.join_sd && L.join[x][y] == L.join[x][z] &&
                    L.join[x][L.meet[y][z]] != L.join[x][y]) {
                    r.join_sd = false;
                    r.join_witness = {{x, y, z}};
                }
                if (r.meet_sd && L.meet[x][y] == L.meet[x][z] &&
                    L.meet[x][L.join[y][z]] != L.meet[x][y]) {
                    r.meet_sd = false;
                    r.meet_witness = {{x, y, z}};
                }
                if (!r.join_sd && !r.meet_sd) return r;
            }
    return r;
}

bool is_distributive(const Lattice& L) {
    for (int x = 0; x < L.n; ++x)
        for (int y = 0; y < L.n; ++y)
            for (int z = 0; z < L.n; ++z)
                if (L.meet[x][L.join[y][z]] != L.join[L.meet[x][y]][L.meet[x][z]]) return false;
    return true;
}

namespace {

// invariant vector per element: (depth from bottom, height to top, up-degree,
// down-degree, number of join-irreducibles below)
std::vector<std::array<int, 5>> iso_invariants(const Lattice& L) {
    std::vector<int> depth(L.n, 0), height(L.n, 0);
    // longest path from bottom / to top over covers, processed by |down|
    std::vector<int> order(L.n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return L.down[a].count() < L.down[b].count(); });
    for (int x : order)
        for (int c : L.lower_covers[x]) depth[x] = std::max(depth[x], depth[c] + 1);
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        for (int c : L.upper_covers[*it]) height[*it] = std::max(height[*it], height[c] + 1);

    auto ird = irreducibles(L);
    std::vector<std::array<int, 5>> inv(L.n);
    for (int x = 0; x < L.n; ++x) {
        int ji_below = 0;
        for (int j : ird.jirr)
            if (L.down[x].test(j)) ++ji_below;
        inv[x] = {depth[x], height[x], int(L.upper_covers[x].size()),
                  int(L.lower_covers[x].size()), ji_below};
    }
    return inv;
}

bool iso_extend(const Lattice& a, const Lattice& b, const std::vector<std::vector<int>>& cand,
                std::vector<int>& map, std::vector<bool>& used, int x) {
    if (x == a.n) return true;
    for (int y : cand[x]) {
        if (used[y]) continue;
        bool ok = true;
        for (int p = 0; p < x && ok; ++p) {
            if (a.leq(p, x) != b.leq(map[p], y)) ok = false;
            if (a.leq(x, p) != b.leq(y, map[p])) ok = false;
        }
        if (!ok) continue;
        map[x] = y;
        used[y] = true;
        if (iso_extend(a, b, cand, map, used, x + 1)) return true;
        used[y] = false;
    }
    return false;
}

} // namespace

std::optional<std::vector<int>> is_isomorphic(const Lattice& a, const Lattice& b) {
    if (a.n != b.n) return std::nullopt;
    auto ia = iso_invariants(a), ib = iso_invariants(b);
    {
        auto sa = ia, sb = ib;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return std::nullopt;
    }
    std::vector<std::vector<int>> cand(a.n);
    for (int x = 0; x < a.n; ++x)
        for (int y = 0; y < b.n; ++y)
            if (ia[x] == ib[y]) cand[x].push_back(y);
    std::vector<int> map(a.n, -1);
    std::vector<bool> used(b.n, false);
    if (iso_extend(a, b, cand, map, used, 0)) return map;
    return std::nullopt;
}

std::vector<int> longest_chain(const Lattice& L) {
    std::vector<int> depth(L.n, 0), pred(L.n, -1), order(L.n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return L.down[a].count() < L.down[b].count(); });
    for (int x : order)
        for (int c : L.lower_covers[x])
            if (depth[c] + 1 > depth[x]) {
                depth[x] = depth[c] + 1;
                pred[x] = c;
            }
    int best = 0;
    for (int x = 0; x < L.n; ++x)
        if (depth[x] > depth[best]) best = x;
    std::vector<int> chain;
    for (int x = best; x != -1; x = pred[x]) chain.push_back(x);
    std::reverse(chain.begin(), chain.end());
    return chain;
}

Lattice dual_lattice(const Lattice& L) {
    return lattice_from_leq(L.down);
}

} // namespace sdl
