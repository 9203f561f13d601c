#include "sdl/extract.hpp"

#include <algorithm>

namespace sdl {

ExtractedSystem extract_system(const Lattice& L) {
    IrreducibleData irr = irreducibles(L);
    if (!irr.kappa_up_total || !irr.kappa_down_total)
        throw DomainError(ErrorCode::NotSemidistributive,
                          "extract_system needs a semidistributive lattice");

    int k = int(irr.jirr.size());
    ExtractedSystem ex;
    ex.elem = irr.jirr;
    Relation to(k), onto(k), into(k);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
            int i = irr.jirr[a], j = irr.jirr[b];
            if (!L.leq(i, irr.kappa_up[j])) to.add(a, b);
            if (L.leq(j, i)) onto.add(a, b);
            if (L.leq(irr.kappa_up[j], irr.kappa_up[i])) into.add(a, b);
        }

    GroundSet ground = GroundSet::plain(k);
    Diagnostics diag;
    auto sys = validate_system(ground, to, onto, into, diag);
    if (!sys)
        throw DomainError(ErrorCode::InternalInconsistency,
                          "extracted system failed validation: " + diag.describe());
    ex.sys = *sys;
    return ex;
}

RoundtripReport ftfsdl_roundtrip(const Lattice& L) {
    RoundtripReport rep;
    rep.size = L.n;
    ExtractedSystem ex = extract_system(L);
    IrreducibleData irr = irreducibles(L);
    int k = int(ex.elem.size());
    PairsLattice P = pairs_lattice(ex.sys);

    if (int(P.pairs.size()) != L.n) {
        rep.detail = "pairs lattice size mismatch";
        return rep;
    }

    rep.pair_of_element.assign(L.n, -1);
    std::vector<int> seen(P.pairs.size(), 0);
    for (int x = 0; x < L.n; ++x) {
        Bits torsion(k);
        for (int a = 0; a < k; ++a)
            if (L.leq(ex.elem[a], x)) torsion.set(a);
        int p = P.index_of(torsion);
        if (p < 0) {
            rep.detail = "image of element " + std::to_string(x) + " is not closed";
            return rep;
        }
        // free part must come out as the kappa preimages of the
        // meet-irreducibles above x
        Bits expect_free(k);
        for (int a = 0; a < k; ++a)
            if (L.leq(x, irr.kappa_up[ex.elem[a]])) expect_free.set(a);
        if (P.pairs[p].free != expect_free) {
            rep.detail = "free component mismatch at element " + std::to_string(x);
            return rep;
        }
        rep.pair_of_element[x] = p;
        seen[p]++;
    }
    for (int c : seen)
        if (c != 1) {
            rep.detail = "correspondence is not a bijection";
            return rep;
        }
    for (int x = 0; x < L.n; ++x)
        for (int y = 0; y < L.n; ++y)
            if (L.leq(x, y) !=
                P.lattice.leq(rep.pair_of_element[x], rep.pair_of_element[y])) {
                rep.detail = "order not preserved";
                return rep;
            }
    // inverse map: join the torsion part, meet kappa over the free part
    for (int x = 0; x < L.n; ++x) {
        const OrthoPair& pr = P.pairs[rep.pair_of_element[x]];
        Bits joinset(L.n), meetset(L.n);
        pr.torsion.for_each([&](int a) { joinset.set(ex.elem[a]); });
        pr.free.for_each([&](int a) { meetset.set(irr.kappa_up[ex.elem[a]]); });
        if (L.join_of(joinset) != x || L.meet_of(meetset) != x) {
            rep.detail = "inverse map disagrees at element " + std::to_string(x);
            return rep;
        }
    }
    rep.ok = true;
    return rep;
}

} // namespace sdl
