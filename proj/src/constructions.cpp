#include "sdl/constructions.hpp"

#include <algorithm>
#include <set>

namespace sdl {

IntervalSystem interval_system(const FactSystem& sys, const OrthoPair& lo,
                               const OrthoPair& hi) {
    if (!lo.torsion.subset_of(hi.torsion))
        throw DomainError(ErrorCode::NotComparable,
                          "interval endpoints are not comparable");
    Bits ground_bits = hi.torsion & lo.free;
    IntervalSystem iv;
    iv.elem = ground_bits.elems();
    int k = int(iv.elem.size());
    Relation to(k);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            if (sys.to(iv.elem[a], iv.elem[b])) to.add(a, b);
    auto [onto, into] = fact(to);
    Diagnostics diag;
    auto v = validate_system(GroundSet::plain(k), to, onto, into, diag);
    if (!v)
        throw DomainError(ErrorCode::InternalInconsistency,
                          "interval restriction is not a valid system: " + diag.describe());
    iv.sys = *v;
    return iv;
}

DoubledLattice double_lattice(const Lattice& L, int lo, int hi) {
    if (!L.leq(lo, hi))
        throw DomainError(ErrorCode::NotAnInterval, "lo is not below hi");
    Bits interval = L.up[lo] & L.down[hi];

    DoubledLattice d;
    for (int x = 0; x < L.n; ++x) {
        if (!interval.test(x)) {
            d.base_of.push_back(x);
            d.level_of.push_back(0);
        }
    }
    for (int x = 0; x < L.n; ++x)
        if (interval.test(x)) {
            d.base_of.push_back(x);
            d.level_of.push_back(1);
        }
    for (int x = 0; x < L.n; ++x)
        if (interval.test(x)) {
            d.base_of.push_back(x);
            d.level_of.push_back(2);
        }
    int m = int(d.base_of.size());
    std::vector<Bits> leq(m, Bits(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (!L.leq(d.base_of[i], d.base_of[j])) continue;
            if (d.level_of[i] != 0 && d.level_of[j] != 0 && d.level_of[i] > d.level_of[j])
                continue;
            leq[i].set(j);
        }
    d.lattice = lattice_from_leq(leq);
    return d;
}

FactSystem double_system(const FactSystem& sys, const OrthoPair& lo, const OrthoPair& hi) {
    if (!lo.torsion.subset_of(hi.torsion))
        throw DomainError(ErrorCode::NotComparable,
                          "interval endpoints are not comparable");
    int n = sys.size();
    int a = n; // the new element
    const Bits& x1 = lo.torsion;
    const Bits& y1 = lo.free;
    const Bits& x2 = hi.torsion;
    const Bits& y2 = hi.free;

    Relation to(n + 1), onto(n + 1), into(n + 1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (sys.to(i, j)) to.add(i, j);
            if (sys.onto(i, j)) onto.add(i, j);
            if (sys.into(i, j)) into.add(i, j);
        }
    to.add(a, a);
    onto.add(a, a);
    into.add(a, a);

    for (int x = 0; x < n; ++x)
        if (!x2.test(x)) to.add(x, a);
    for (int y = 0; y < n; ++y)
        if (!y1.test(y)) to.add(a, y);

    for (int y : x1.elems()) onto.add(a, y);
    for (int x = 0; x < n; ++x) {
        if (x2.test(x)) continue;
        bool above_all = true;
        x1.for_each([&](int z) {
            if (!sys.onto(x, z)) above_all = false;
        });
        if (above_all) onto.add(x, a);
    }

    for (int x : y2.elems()) into.add(x, a);
    for (int y = 0; y < n; ++y) {
        if (y1.test(y)) continue;
        bool below_all = true;
        y2.for_each([&](int z) {
            if (!sys.into(z, y)) below_all = false;
        });
        if (below_all) into.add(a, y);
    }

    GroundSet ground;
    ground.size = n + 1;
    if (!sys.ground.labels.empty()) {
        ground.labels = sys.ground.labels;
        std::string extra = "a";
        while (std::find(ground.labels.begin(), ground.labels.end(), extra) !=
               ground.labels.end())
            extra += "'";
        ground.labels.push_back(extra);
    }
    Diagnostics diag;
    auto v = validate_system(ground, to, onto, into, diag);
    if (!v)
        throw DomainError(ErrorCode::InternalInconsistency,
                          "doubled system is not valid: " + diag.describe());
    return *v;
}

DistReport dist_char(const FactSystem& sys) {
    DistReport r;
    r.lattice_distributive = is_distributive(pairs_lattice(sys).lattice);
    r.to_partial_order =
        sys.to.is_reflexive() && sys.to.is_transitive() && sys.to.is_antisymmetric();
    r.onto_equals_into = sys.onto == sys.into;
    r.to_equals_onto = sys.to == sys.onto;
    r.to_equals_into = sys.to == sys.into;
    return r;
}

MarkowskySystem markowsky_system(const Lattice& L) {
    IrreducibleData irr = irreducibles(L);
    MarkowskySystem ms;
    ms.jirr = irr.jirr;
    ms.mirr = irr.mirr;
    ms.rel.left = GroundSet::plain(int(ms.jirr.size()));
    ms.rel.right = GroundSet::plain(int(ms.mirr.size()));
    ms.rel.adj.assign(ms.jirr.size(), Bits(int(ms.mirr.size())));
    for (size_t a = 0; a < ms.jirr.size(); ++a)
        for (size_t b = 0; b < ms.mirr.size(); ++b)
            if (!L.leq(ms.jirr[a], ms.mirr[b])) ms.rel.adj[a].set(int(b));
    return ms;
}

namespace {

Bits two_set_perp_right(const TwoSetRelation& rel, const Bits& xs) {
    Bits hit(rel.right.size);
    xs.for_each([&](int j) { hit |= rel.adj[j]; });
    return hit.complement();
}

Bits two_set_perp_left(const TwoSetRelation& rel, const Bits& ys) {
    Bits res = Bits::full(rel.left.size);
    for (int j = 0; j < rel.left.size; ++j)
        if (rel.adj[j].intersects(ys)) res.reset(j);
    return res;
}

Bits two_set_closure(const TwoSetRelation& rel, const Bits& xs) {
    return two_set_perp_left(rel, two_set_perp_right(rel, xs));
}

} // namespace

int TwoSetPairs::index_of(const Bits& left_part) const {
    for (int i = 0; i < int(pairs.size()); ++i)
        if (pairs[i].first == left_part) return i;
    return -1;
}

TwoSetPairs two_set_pairs(const TwoSetRelation& rel, std::size_t cap) {
    std::set<Bits> found;
    std::vector<Bits> frontier;
    auto push = [&](const Bits& b) {
        if (found.insert(b).second) {
            frontier.push_back(b);
            if (found.size() > cap)
                throw DomainError(ErrorCode::SizeLimitExceeded, "too many closed sets");
        }
    };
    push(two_set_closure(rel, Bits(rel.left.size)));
    for (int j = 0; j < rel.left.size; ++j)
        push(two_set_closure(rel, Bits::single(rel.left.size, j)));
    while (!frontier.empty()) {
        Bits cur = frontier.back();
        frontier.pop_back();
        std::vector<Bits> snapshot(found.begin(), found.end());
        for (const Bits& b : snapshot) {
            if (b.subset_of(cur) || cur.subset_of(b)) continue;
            push(two_set_closure(rel, cur | b));
        }
    }
    std::vector<Bits> closed(found.begin(), found.end());
    int m = int(closed.size());
    TwoSetPairs tp;
    tp.pairs.reserve(m);
    for (const Bits& x : closed) tp.pairs.push_back({x, two_set_perp_right(rel, x)});
    std::vector<Bits> leq(m, Bits(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (closed[i].subset_of(closed[j])) leq[i].set(j);
    tp.lattice = lattice_from_leq(leq);
    return tp;
}

bool has_right_companion(const TwoSetRelation& rel, int x) {
    for (int y : rel.adj[x].elems()) {
        bool clean = true;
        for (int xp = 0; xp < rel.left.size && clean; ++xp)
            if (xp != x && rel.adj[xp].test(y) && rel.adj[xp].subset_of(rel.adj[x]))
                clean = false;
        if (clean) return true;
    }
    return false;
}

bool has_left_companion(const TwoSetRelation& rel, int y) {
    // compare right elements by preimages
    std::vector<Bits> pre(rel.right.size, Bits(rel.left.size));
    for (int j = 0; j < rel.left.size; ++j)
        rel.adj[j].for_each([&](int m) { pre[m].set(j); });
    for (int x = 0; x < rel.left.size; ++x) {
        if (!rel.adj[x].test(y)) continue;
        bool clean = true;
        for (int yp : rel.adj[x].elems())
            if (yp != y && pre[yp].subset_of(pre[y])) clean = false;
        if (clean) return true;
    }
    return false;
}

namespace {

bool kuhn_augment(const std::vector<Bits>& adj, int x, std::vector<char>& used,
                  std::vector<int>& match_right) {
    bool found = false;
    adj[x].for_each([&](int y) {
        if (found || used[y]) return;
        used[y] = 1;
        if (match_right[y] < 0 || kuhn_augment(adj, match_right[y], used, match_right)) {
            match_right[y] = x;
            found = true;
        }
    });
    return found;
}

} // namespace

std::optional<std::vector<int>> ftfel_mu(const Lattice& L) {
    MarkowskySystem ms = markowsky_system(L);
    int nl = int(ms.jirr.size()), nr = int(ms.mirr.size());
    if (nl != nr) return std::nullopt;
    std::vector<int> match_right(nr, -1);
    for (int x = 0; x < nl; ++x) {
        std::vector<char> used(nr, 0);
        kuhn_augment(ms.rel.adj, x, used, match_right);
    }
    std::vector<int> mu(nl, -1);
    for (int y = 0; y < nr; ++y)
        if (match_right[y] >= 0) mu[match_right[y]] = y;
    for (int x = 0; x < nl; ++x)
        if (mu[x] < 0) return std::nullopt;
    // relabel columns by mu; the result must be acyclic apart from its
    // (guaranteed) diagonal
    Relation r(nl);
    for (int a = 0; a < nl; ++a)
        for (int b = 0; b < nl; ++b)
            if (ms.rel.adj[a].test(mu[b])) r.add(a, b);
    if (!r.is_reflexive() || !r.is_acyclic_reflexive()) return std::nullopt;
    return mu;
}

ExtremalCertificate extremal_analysis(const Lattice& L) {
    ExtremalCertificate cert;
    cert.chain = longest_chain(L);
    IrreducibleData irr = irreducibles(L);
    cert.n_jirr = int(irr.jirr.size());
    cert.n_mirr = int(irr.mirr.size());
    int len = int(cert.chain.size()) - 1;
    cert.extremal = (len == cert.n_jirr && len == cert.n_mirr);
    if (cert.extremal) {
        auto mu = ftfel_mu(L);
        if (!mu)
            throw DomainError(ErrorCode::InternalInconsistency,
                              "extremal lattice without a reflexive pairing");
        cert.mu = *mu;
    }
    return cert;
}

ClassifyReport classify(const Lattice& L) {
    ClassifyReport r;
    r.size = L.n;
    r.distributive = is_distributive(L);
    SemidistributivityReport sd = is_semidistributive(L);
    r.join_sd = sd.join_sd;
    r.meet_sd = sd.meet_sd;
    if (sd.sd()) {
        // congruence uniformity is only defined through the extracted
        // system; non-SD lattices are never congruence uniform
        r.congruence_uniform = is_congruence_uniform(extract_system(L).sys);
    }
    r.extremal = extremal_analysis(L).extremal;
    r.trim_candidate = r.extremal && sd.sd();
    return r;
}

ClassifyReport classify(const FactSystem& sys) {
    PairsLattice P = pairs_lattice(sys);
    ClassifyReport r = classify(P.lattice);
    r.has_system = true;
    r.two_acyclic = true; // a FactSystem only exists once validated
    r.to_acyclic_reflexive = sys.to.is_acyclic_reflexive();
    r.congruence_uniform = is_congruence_uniform(sys);
    return r;
}

} // namespace sdl
