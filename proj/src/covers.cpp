#include "sdl/covers.hpp"

#include <algorithm>

namespace sdl {

Bits T_of(const FactSystem& sys, int x) { return sys.onto.row[x]; }

Bits T_star(const FactSystem& sys, int x) {
    Bits t = sys.onto.row[x];
    t.reset(x);
    return t;
}

Bits F_of(const FactSystem& sys, int x) { return sys.into.preimage(x); }

Bits F_star(const FactSystem& sys, int x) {
    Bits f = F_of(sys, x);
    f.reset(x);
    return f;
}

Bits arrow_maximal(const Relation& rel, const Bits& s) {
    Bits res = s;
    s.for_each([&](int c) {
        bool dominated = false;
        s.for_each([&](int x) {
            if (x != c && rel(x, c)) dominated = true;
        });
        if (dominated) res.reset(c);
    });
    return res;
}

Bits arrow_minimal(const Relation& rel, const Bits& s) {
    Bits res = s;
    s.for_each([&](int c) {
        bool dominates = false;
        s.for_each([&](int x) {
            if (x != c && rel(c, x)) dominates = true;
        });
        if (dominates) res.reset(c);
    });
    return res;
}

Bits del(const FactSystem& sys, const Bits& closed_set, int c) {
    if (!closed_set.test(c))
        throw DomainError(ErrorCode::ElementNotInSet,
                          "del: element " + std::to_string(c + 1) + " not in the set");
    Bits res = closed_set;
    closed_set.for_each([&](int x) {
        if (sys.onto(x, c)) res.reset(x);
    });
    return res;
}

bool is_closed(const FactSystem& sys, const Bits& s) {
    return closure(sys.to, s) == s;
}

CoverData cov(const FactSystem& sys, const Bits& closed_set) {
    if (!is_closed(sys, closed_set))
        throw DomainError(ErrorCode::NotClosed, "cov requires a closed set");
    CoverData data;
    data.closed_set = closed_set;
    // finite case: Cov(X) = ->>-maximal elements among the in->-maximal
    // elements of X
    Bits cx = arrow_maximal(sys.into, closed_set);
    Bits candidates = arrow_maximal(sys.onto, cx);
    candidates.for_each([&](int c) {
        Bits d = del(sys, closed_set, c);
        // definitional re-check guards against convention slips
        if (!is_closed(sys, d)) return;
        Bits back = d;
        back.set(c);
        if (closure(sys.to, back) != closed_set) return;
        data.cov.push_back(c);
        data.lower_covers.push_back(d);
    });
    return data;
}

std::vector<Bits> canonical_join_rep(const FactSystem& sys, const Bits& closed_set) {
    CoverData data = cov(sys, closed_set);
    std::vector<Bits> rep;
    rep.reserve(data.cov.size());
    for (int c : data.cov) rep.push_back(T_of(sys, c));
    std::sort(rep.begin(), rep.end());
    return rep;
}

bool refines(const Lattice& L, const Bits& a, const Bits& b) {
    bool ok = true;
    a.for_each([&](int s) {
        bool covered = false;
        b.for_each([&](int t) {
            if (L.leq(s, t)) covered = true;
        });
        if (!covered) ok = false;
    });
    return ok;
}

std::optional<std::vector<int>> brute_cjr(const Lattice& L, int x) {
    IrreducibleData irr = irreducibles(L);
    std::vector<int> below;
    for (int j : irr.jirr)
        if (L.leq(j, x)) below.push_back(j);
    int k = int(below.size());

    // candidate joining sets: antichains of join-irreducibles below x whose
    // join is x; any other joining set is refined by one of these, so the
    // refinement-minimum over all joining sets, if it exists, is among them
    std::vector<Bits> joining;
    constexpr std::size_t kCap = 1u << 20;
    Bits cur(L.n);
    auto dfs = [&](auto&& self, int start, int join) -> void {
        if (join == x) {
            joining.push_back(cur);
            if (joining.size() > kCap)
                throw DomainError(ErrorCode::SizeLimitExceeded,
                                  "brute_cjr: too many joining antichains");
            return; // adding more elements can only coarsen the refinement
        }
        for (int i = start; i < k; ++i) {
            int j = below[i];
            bool comparable = false;
            cur.for_each([&](int c) {
                if (L.leq(c, j) || L.leq(j, c)) comparable = true;
            });
            if (comparable) continue;
            int nj = L.join[join][j];
            if (!L.leq(nj, x)) continue;
            cur.set(j);
            self(self, i + 1, nj);
            cur.reset(j);
        }
    };
    dfs(dfs, 0, L.bottom);
    for (const Bits& cand : joining) {
        bool minimum = true;
        for (const Bits& other : joining)
            if (!refines(L, cand, other)) {
                minimum = false;
                break;
            }
        if (minimum) return cand.elems();
    }
    return std::nullopt;
}

bool CJComplex::has_edge(int a, int b) const {
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    return std::find(edges.begin(), edges.end(), std::make_pair(a, b)) != edges.end();
}

bool CJComplex::is_face(const Bits& s) const {
    auto v = s.elems();
    for (size_t i = 0; i < v.size(); ++i)
        for (size_t j = i + 1; j < v.size(); ++j)
            if (!has_edge(v[i], v[j])) return false;
    return true;
}

CJComplex cj_complex(const FactSystem& sys) {
    CJComplex cx;
    cx.vertex_count = sys.size();
    for (int a = 0; a < sys.size(); ++a)
        for (int b = a + 1; b < sys.size(); ++b)
            if (!sys.to(a, b) && !sys.to(b, a)) cx.edges.emplace_back(a, b);
    cx.flag = true;
    return cx;
}

} // namespace sdl
