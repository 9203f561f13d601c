// Python bindings for the core operations. Ground subsets cross the
// boundary as sorted index lists, relations as row-major bool matrices.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sdl/congruence.hpp"
#include "sdl/constructions.hpp"
#include "sdl/covers.hpp"
#include "sdl/extract.hpp"
#include "sdl/generators.hpp"
#include "sdl/io.hpp"

namespace py = pybind11;
using namespace sdl;

namespace {

Bits bits_from_list(int n, const std::vector<int>& xs) {
    Bits b(n);
    for (int x : xs) {
        if (x < 0 || x >= n)
            throw DomainError(ErrorCode::ElementNotInSet,
                              "index " + std::to_string(x) + " out of range");
        b.set(x);
    }
    return b;
}

std::vector<std::vector<bool>> matrix_of(const Relation& r) {
    std::vector<std::vector<bool>> m(r.n, std::vector<bool>(r.n, false));
    for (int x = 0; x < r.n; ++x)
        for (int y = 0; y < r.n; ++y) m[x][y] = r(x, y);
    return m;
}

Relation relation_of(const std::vector<std::vector<bool>>& m) {
    int n = int(m.size());
    Relation r(n);
    for (int x = 0; x < n; ++x) {
        if (int(m[x].size()) != n)
            throw DomainError(ErrorCode::InvalidInput, "matrix is not square");
        for (int y = 0; y < n; ++y)
            if (m[x][y]) r.add(x, y);
    }
    return r;
}

FactSystem make_system(const std::vector<std::string>& labels,
                       const std::vector<std::vector<bool>>& to_m,
                       const std::optional<std::vector<std::vector<bool>>>& onto_m,
                       const std::optional<std::vector<std::vector<bool>>>& into_m) {
    GroundSet ground;
    if (labels.empty()) {
        ground = GroundSet::plain(int(to_m.size()));
    } else {
        ground.labels = labels;
        ground.size = int(labels.size());
        ground.validate();
    }
    Relation to = relation_of(to_m);
    Relation onto(0), into(0);
    if (onto_m || into_m) {
        if (!onto_m || !into_m)
            throw DomainError(ErrorCode::InvalidInput,
                              "onto and into must be given together");
        onto = relation_of(*onto_m);
        into = relation_of(*into_m);
    } else {
        auto fo = fact(to);
        onto = fo.first;
        into = fo.second;
    }
    Diagnostics diag;
    auto sys = validate_system(ground, to, onto, into, diag);
    if (!sys) throw DomainError(ErrorCode::InvalidSystem, diag.describe());
    return *sys;
}

py::dict classify_dict(const ClassifyReport& r) {
    py::dict d;
    d["size"] = r.size;
    d["distributive"] = r.distributive;
    d["join_sd"] = r.join_sd;
    d["meet_sd"] = r.meet_sd;
    d["semidistributive"] = r.sd();
    d["congruence_uniform"] = r.congruence_uniform;
    d["extremal"] = r.extremal;
    d["trim_candidate"] = r.trim_candidate;
    if (r.has_system) {
        d["two_acyclic"] = r.two_acyclic;
        d["to_acyclic_reflexive"] = r.to_acyclic_reflexive;
    }
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "finite semidistributive lattices as two-acyclic factorization systems";

    py::register_exception<DomainError>(m, "DomainError");

    py::class_<Lattice>(m, "Lattice")
        .def_readonly("n", &Lattice::n)
        .def_readonly("bottom", &Lattice::bottom)
        .def_readonly("top", &Lattice::top)
        .def("leq", &Lattice::leq)
        .def("meet", [](const Lattice& L, int a, int b) { return L.meet[a][b]; })
        .def("join", [](const Lattice& L, int a, int b) { return L.join[a][b]; })
        .def("upper_covers", [](const Lattice& L, int x) { return L.upper_covers[x]; })
        .def("lower_covers", [](const Lattice& L, int x) { return L.lower_covers[x]; })
        .def("__len__", [](const Lattice& L) { return L.n; })
        .def("__repr__", [](const Lattice& L) {
            return "<Lattice of " + std::to_string(L.n) + " elements>";
        });

    py::class_<FactSystem>(m, "FactSystem")
        .def_property_readonly("n", &FactSystem::size)
        .def_property_readonly("labels",
                               [](const FactSystem& s) {
                                   std::vector<std::string> out;
                                   for (int i = 0; i < s.size(); ++i)
                                       out.push_back(s.ground.label(i));
                                   return out;
                               })
        .def("to", [](const FactSystem& s, int x, int y) { return s.to(x, y); })
        .def("onto", [](const FactSystem& s, int x, int y) { return s.onto(x, y); })
        .def("into", [](const FactSystem& s, int x, int y) { return s.into(x, y); })
        .def_property_readonly("to_matrix",
                               [](const FactSystem& s) { return matrix_of(s.to); })
        .def_property_readonly("onto_matrix",
                               [](const FactSystem& s) { return matrix_of(s.onto); })
        .def_property_readonly("into_matrix",
                               [](const FactSystem& s) { return matrix_of(s.into); })
        .def("__len__", &FactSystem::size)
        .def("__repr__", [](const FactSystem& s) {
            return "<FactSystem on " + std::to_string(s.size()) + " elements>";
        });

    m.def("system", &make_system, py::arg("labels"), py::arg("to"),
          py::arg("onto") = std::nullopt, py::arg("into") = std::nullopt,
          "validate a two-acyclic factorization system; onto/into default to Fact(to)");

    m.def("lattice_from_leq", [](const std::vector<std::vector<bool>>& leq) {
        return lattice_from_leq(leq);
    });

    m.def("pairs", [](const FactSystem& sys) {
        PairsLattice P = pairs_lattice(sys);
        std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
        for (const auto& pr : P.pairs)
            out.emplace_back(pr.torsion.elems(), pr.free.elems());
        return py::make_tuple(P.lattice, out);
    });
    m.def("pairs_of_relation", [](const std::vector<std::vector<bool>>& to) {
        PairsLattice P = pairs_lattice(relation_of(to));
        std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
        for (const auto& pr : P.pairs)
            out.emplace_back(pr.torsion.elems(), pr.free.elems());
        return py::make_tuple(P.lattice, out);
    });

    m.def("extract", [](const Lattice& L) {
        ExtractedSystem ex = extract_system(L);
        return py::make_tuple(ex.sys, ex.elem);
    });

    m.def("roundtrip", [](const Lattice& L) {
        RoundtripReport r = ftfsdl_roundtrip(L);
        py::dict d;
        d["ok"] = r.ok;
        d["size"] = r.size;
        d["detail"] = r.detail;
        return d;
    });

    m.def("covers", [](const FactSystem& sys, const std::vector<int>& closed_set) {
        CoverData cd = cov(sys, bits_from_list(sys.size(), closed_set));
        std::vector<std::vector<int>> lowers;
        for (const Bits& lc : cd.lower_covers) lowers.push_back(lc.elems());
        return py::make_tuple(cd.cov, lowers);
    });

    m.def("canonical_join_rep",
          [](const FactSystem& sys, const std::vector<int>& closed_set) {
              std::vector<std::vector<int>> out;
              for (const Bits& part :
                   canonical_join_rep(sys, bits_from_list(sys.size(), closed_set)))
                  out.push_back(part.elems());
              return out;
          });

    m.def("cj_complex", [](const FactSystem& sys) {
        CJComplex cx = cj_complex(sys);
        py::dict d;
        d["vertices"] = cx.vertex_count;
        d["edges"] = cx.edges;
        d["flag"] = cx.flag;
        return d;
    });

    m.def("forcing", [](const FactSystem& sys) {
        ForcingRelation f = directly_forces(sys);
        std::vector<std::tuple<int, int, int>> edges;
        for (int x = 0; x < sys.size(); ++x)
            for (int y : f.squig.row[x].elems())
                if (x != y) edges.emplace_back(x, y, f.witness[x][y]);
        py::dict d;
        d["edges"] = edges;
        d["acyclic"] = f.squig.is_acyclic_reflexive();
        return d;
    });

    m.def("forcing_upsets", [](const FactSystem& sys) {
        std::vector<std::vector<int>> out;
        for (const Bits& up : forcing_upsets(sys)) out.push_back(up.elems());
        return out;
    });

    m.def("quotient", [](const FactSystem& sys, const std::vector<int>& upset) {
        CongruenceSpec spec = quotient(sys, bits_from_list(sys.size(), upset));
        return py::make_tuple(spec.quotient.lattice, spec.block_of);
    });

    m.def("congruence_count", [](const FactSystem& sys) {
        return con_lattice(sys).downsets.size();
    });

    m.def("is_congruence_uniform",
          [](const FactSystem& sys) { return is_congruence_uniform(sys); });

    m.def("classify_system",
          [](const FactSystem& sys) { return classify_dict(classify(sys)); });
    m.def("classify_lattice",
          [](const Lattice& L) { return classify_dict(classify(L)); });

    m.def("double_system", [](const FactSystem& sys, const std::vector<int>& lo,
                              const std::vector<int>& hi) {
        Bits lo_t = bits_from_list(sys.size(), lo);
        Bits hi_t = bits_from_list(sys.size(), hi);
        if (closure(sys.to, lo_t) != lo_t || closure(sys.to, hi_t) != hi_t)
            throw DomainError(ErrorCode::NotClosed, "interval endpoints must be closed");
        OrthoPair plo{lo_t, perp_right(sys.to, lo_t)};
        OrthoPair phi{hi_t, perp_right(sys.to, hi_t)};
        return double_system(sys, plo, phi);
    });

    m.def("markowsky", [](const Lattice& L) {
        MarkowskySystem ms = markowsky_system(L);
        std::vector<std::vector<bool>> adj(ms.jirr.size(),
                                           std::vector<bool>(ms.mirr.size(), false));
        for (size_t a = 0; a < ms.jirr.size(); ++a)
            for (size_t b = 0; b < ms.mirr.size(); ++b) adj[a][b] = ms.rel.adj[a].test(int(b));
        py::dict d;
        d["jirr"] = ms.jirr;
        d["mirr"] = ms.mirr;
        d["adj"] = adj;
        return d;
    });

    m.def("extremal", [](const Lattice& L) {
        ExtremalCertificate c = extremal_analysis(L);
        py::dict d;
        d["chain"] = c.chain;
        d["n_jirr"] = c.n_jirr;
        d["n_mirr"] = c.n_mirr;
        d["extremal"] = c.extremal;
        d["mu"] = c.mu;
        return d;
    });

    m.def("is_isomorphic",
          [](const Lattice& a, const Lattice& b) { return bool(is_isomorphic(a, b)); });

    m.def("chain", &chain);
    m.def("boolean_lattice", &boolean_lattice);
    m.def("weak_order_sn", &weak_order_sn);
    m.def("tamari", &tamari);
    m.def("doubling_random", [](int steps, std::uint64_t seed) {
        return doubling_random(steps, seed);
    });
    m.def("exhaustive_lattices", &exhaustive_lattices);

    m.def("system_to_json", [](const FactSystem& sys) { return system_to_json(sys).dump(2); });
    m.def("system_from_json",
          [](const std::string& text) { return system_from_json(json::parse(text)); });
    m.def("lattice_to_json", [](const Lattice& L) { return lattice_to_json(L).dump(2); });
    m.def("lattice_from_json",
          [](const std::string& text) { return lattice_from_json(json::parse(text)); });
    m.def("render_dot", [](const std::string& text) { return render_dot(json::parse(text)); });
}
