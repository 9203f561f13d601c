// Command line front end. Documents are JSON files with a "kind" tag;
// subcommands read them, run one operation, and print JSON (or DOT) to
// stdout or -o. Exit codes: 0 ok, 1 domain error (JSON on stderr), 2 usage.
#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sdl/congruence.hpp"
#include "sdl/constructions.hpp"
#include "sdl/covers.hpp"
#include "sdl/extract.hpp"
#include "sdl/generators.hpp"
#include "sdl/io.hpp"

using namespace sdl;

namespace {

void emit(const std::string& text, const std::string& out) {
    if (out.empty()) {
        std::cout << text;
        if (text.empty() || text.back() != '\n') std::cout << "\n";
    } else {
        std::ofstream f(out);
        if (!f) throw DomainError(ErrorCode::InvalidInput, "cannot write " + out);
        f << text;
        if (text.empty() || text.back() != '\n') f << "\n";
    }
}

void emit(const json& doc, const std::string& out) { emit(doc.dump(2), out); }

// Ground set and arrow relation of a system document, skipping validation.
// Used by subcommands that work on arbitrary reflexive relations.
struct RawSystem {
    GroundSet ground;
    Relation to;
};

RawSystem raw_system(const json& doc) {
    if (document_kind(doc) != "system")
        throw DomainError(ErrorCode::KindMismatch, "expected a system document");
    RawSystem raw;
    for (const auto& v : doc.at("ground")) raw.ground.labels.push_back(v.get<std::string>());
    raw.ground.size = int(raw.ground.labels.size());
    raw.ground.validate();
    const json& rows = doc.at("to");
    int n = raw.ground.size;
    if (!rows.is_array() || int(rows.size()) != n)
        throw DomainError(ErrorCode::InvalidInput, "to is not a square boolean matrix");
    raw.to = Relation(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (rows[x][y].get<bool>()) raw.to.add(x, y);
    return raw;
}

json labels_of(const GroundSet& g, const Bits& s) {
    json arr = json::array();
    s.for_each([&](int i) { arr.push_back(g.label(i)); });
    return arr;
}

Bits set_from_labels(const GroundSet& g, const std::string& csv) {
    Bits s(g.size);
    if (csv.empty()) return s;
    size_t pos = 0;
    while (pos <= csv.size()) {
        size_t comma = csv.find(',', pos);
        std::string tok = csv.substr(pos, comma == std::string::npos ? comma : comma - pos);
        bool found = false;
        for (int i = 0; i < g.size; ++i)
            if (g.label(i) == tok) {
                s.set(i);
                found = true;
            }
        if (!found)
            throw DomainError(ErrorCode::ElementNotInSet, "no ground element labeled " + tok);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return s;
}

OrthoPair pair_of_closed(const FactSystem& sys, const Bits& torsion) {
    if (closure(sys.to, torsion) != torsion)
        throw DomainError(ErrorCode::NotClosed, "the given set is not closed");
    return OrthoPair{torsion, perp_right(sys.to, torsion)};
}

json pairs_doc(const GroundSet& ground, const PairsLattice& P) {
    json doc = lattice_to_json(P.lattice);
    json pairs = json::array();
    for (const auto& pr : P.pairs) {
        json e;
        e["torsion"] = labels_of(ground, pr.torsion);
        e["free"] = labels_of(ground, pr.free);
        pairs.push_back(e);
    }
    doc["pairs"] = pairs;
    return doc;
}

// Congruences of an arbitrary lattice, ordered by refinement.
Lattice congruence_lattice_of(const Lattice& L) {
    auto cons = brute_congruences(L);
    int k = int(cons.size());
    std::vector<std::vector<bool>> leq(k, std::vector<bool>(k, false));
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
            bool refine = true;
            for (int x = 0; x < L.n && refine; ++x)
                for (int y = x + 1; y < L.n; ++y)
                    if (cons[a][x] == cons[a][y] && cons[b][x] != cons[b][y]) {
                        refine = false;
                        break;
                    }
            leq[a][b] = refine;
        }
    return lattice_from_leq(leq);
}

int run(int argc, char** argv) {
    CLI::App app{"finite semidistributive lattices as factorization systems"};
    app.require_subcommand(1);

    std::string in_path, out_path, format = "json", lo_csv, hi_csv, set_csv;
    std::size_t cap = kDefaultClosedSetCap;
    bool count_only = false;
    std::uint64_t seed = 1;

    auto add_common = [&](CLI::App* cmd, bool needs_input = true) {
        if (needs_input) cmd->add_option("input", in_path, "input document")->required();
        cmd->add_option("-o,--output", out_path, "write output here instead of stdout");
        cmd->add_option("--cap", cap, "enumeration size cap");
    };

    auto* c_validate = app.add_subcommand("validate", "check the factorization axioms");
    add_common(c_validate);
    auto* c_pairs = app.add_subcommand("pairs", "lattice of maximal orthogonal pairs");
    add_common(c_pairs);
    c_pairs->add_flag("--count", count_only, "print only the element count");
    c_pairs->add_option("--format", format, "json or dot");
    auto* c_extract = app.add_subcommand("extract", "factorization system of a lattice");
    add_common(c_extract);
    auto* c_roundtrip = app.add_subcommand("roundtrip", "verify lattice <-> pairs isomorphism");
    add_common(c_roundtrip);
    auto* c_covers = app.add_subcommand("covers", "lower covers of closed sets");
    add_common(c_covers);
    c_covers->add_option("--set", set_csv, "one closed set as comma separated labels");
    auto* c_cjr = app.add_subcommand("cjr", "canonical join representations");
    add_common(c_cjr);
    c_cjr->add_option("--set", set_csv, "one closed set as comma separated labels");
    auto* c_cjcomplex = app.add_subcommand("cjcomplex", "canonical join complex edges");
    add_common(c_cjcomplex);
    auto* c_forcing = app.add_subcommand("forcing", "direct forcing relation with witnesses");
    add_common(c_forcing);
    c_forcing->add_option("--format", format, "json or dot");
    auto* c_quotients = app.add_subcommand("quotients", "all forcing upsets and quotient sizes");
    add_common(c_quotients);
    auto* c_con = app.add_subcommand("con", "congruence lattice");
    add_common(c_con);
    c_con->add_option("--format", format, "json or dot");
    auto* c_interval = app.add_subcommand("interval", "system of a pairs-lattice interval");
    add_common(c_interval);
    c_interval->add_option("--lo", lo_csv, "lower closed set, comma separated labels");
    c_interval->add_option("--hi", hi_csv, "upper closed set, comma separated labels")
        ->required();
    auto* c_double = app.add_subcommand("double", "system-side interval doubling");
    add_common(c_double);
    c_double->add_option("--lo", lo_csv, "lower closed set, comma separated labels");
    c_double->add_option("--hi", hi_csv, "upper closed set, comma separated labels")
        ->required();
    auto* c_markowsky = app.add_subcommand("markowsky", "irreducible two-set relation");
    add_common(c_markowsky);
    auto* c_extremal = app.add_subcommand("extremal", "longest chain and irreducible pairing");
    add_common(c_extremal);
    auto* c_classify = app.add_subcommand("classify", "one-stop structural report");
    add_common(c_classify);
    auto* c_generate = app.add_subcommand("generate", "build a named instance");
    std::string gen_kind;
    std::vector<int> gen_params;
    c_generate->add_option("kind", gen_kind,
                           "chain | boolean | weak_order_sn | tamari | doubling | "
                           "poset | semi_fig | ext_fig")
        ->required();
    c_generate->add_option("params", gen_params, "integer parameters");
    c_generate->add_option("--seed", seed, "random seed");
    add_common(c_generate, false);
    auto* c_render = app.add_subcommand("render", "DOT drawing of a document");
    add_common(c_render);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (c_validate->parsed()) {
        FactSystem sys = system_from_json(load_document(in_path));
        json doc;
        doc["kind"] = "report";
        doc["valid"] = true;
        doc["size"] = sys.size();
        emit(doc, out_path);
    } else if (c_pairs->parsed()) {
        RawSystem raw = raw_system(load_document(in_path));
        PairsLattice P = pairs_lattice(raw.to, cap);
        if (count_only)
            emit(std::to_string(P.pairs.size()), out_path);
        else if (format == "dot")
            emit(dot_of_lattice(P.lattice), out_path);
        else
            emit(pairs_doc(raw.ground, P), out_path);
    } else if (c_extract->parsed()) {
        Lattice L = lattice_from_json(load_document(in_path));
        ExtractedSystem ex = extract_system(L);
        json doc = system_to_json(ex.sys);
        doc["element"] = ex.elem;
        emit(doc, out_path);
    } else if (c_roundtrip->parsed()) {
        Lattice L = lattice_from_json(load_document(in_path));
        RoundtripReport r = ftfsdl_roundtrip(L);
        if (!r.ok)
            throw DomainError(ErrorCode::InternalInconsistency,
                              "round trip failed: " + r.detail);
        emit("isomorphism verified: " + std::to_string(r.size) + " elements", out_path);
    } else if (c_covers->parsed() || c_cjr->parsed()) {
        FactSystem sys = system_from_json(load_document(in_path));
        std::vector<Bits> sets;
        if (!set_csv.empty())
            sets.push_back(set_from_labels(sys.ground, set_csv));
        else
            for (const auto& pr : pairs_lattice(sys, cap).pairs) sets.push_back(pr.torsion);
        json table = json::array();
        for (const Bits& s : sets) {
            json row;
            row["set"] = labels_of(sys.ground, s);
            if (c_covers->parsed()) {
                CoverData cd = cov(sys, s);
                json covs = json::array(), lowers = json::array();
                for (int c : cd.cov) covs.push_back(sys.ground.label(c));
                for (const Bits& lc : cd.lower_covers) lowers.push_back(labels_of(sys.ground, lc));
                row["cov"] = covs;
                row["lower_covers"] = lowers;
            } else {
                json rep = json::array();
                for (const Bits& part : canonical_join_rep(sys, s))
                    rep.push_back(labels_of(sys.ground, part));
                row["canonical_join_rep"] = rep;
            }
            table.push_back(row);
        }
        json doc;
        doc["kind"] = "report";
        doc[c_covers->parsed() ? "covers" : "cjr"] = table;
        emit(doc, out_path);
    } else if (c_cjcomplex->parsed()) {
        FactSystem sys = system_from_json(load_document(in_path));
        CJComplex cx = cj_complex(sys);
        json doc;
        doc["kind"] = "report";
        doc["vertices"] = cx.vertex_count;
        json edges = json::array();
        for (auto [a, b] : cx.edges)
            edges.push_back({sys.ground.label(a), sys.ground.label(b)});
        doc["edges"] = edges;
        doc["flag"] = cx.flag;
        emit(doc, out_path);
    } else if (c_forcing->parsed()) {
        FactSystem sys = system_from_json(load_document(in_path));
        ForcingRelation f = directly_forces(sys);
        if (format == "dot") {
            std::string s = "digraph forcing {\n  node [shape=circle];\n";
            for (int x = 0; x < sys.size(); ++x)
                s += "  n" + std::to_string(x) + " [label=\"" + sys.ground.label(x) + "\"];\n";
            for (int x = 0; x < sys.size(); ++x)
                for (int y : f.squig.row[x].elems())
                    if (x != y)
                        s += "  n" + std::to_string(x) + " -> n" + std::to_string(y) + ";\n";
            emit(s + "}\n", out_path);
        } else {
            json edges = json::array();
            for (int x = 0; x < sys.size(); ++x)
                for (int y : f.squig.row[x].elems()) {
                    if (x == y) continue;
                    json e;
                    e["from"] = sys.ground.label(x);
                    e["to"] = sys.ground.label(y);
                    int w = f.witness[x][y];
                    e["witness"] = w == 3   ? "both"
                                   : w == 1 ? "onto-minimal"
                                            : "into-maximal";
                    edges.push_back(e);
                }
            json doc;
            doc["kind"] = "report";
            doc["edges"] = edges;
            doc["acyclic"] = f.squig.is_acyclic_reflexive();
            emit(doc, out_path);
        }
    } else if (c_quotients->parsed()) {
        FactSystem sys = system_from_json(load_document(in_path));
        json rows = json::array();
        for (const Bits& up : forcing_upsets(sys, cap)) {
            CongruenceSpec spec = quotient(sys, up);
            json row;
            row["upset"] = labels_of(sys.ground, up);
            row["quotient_size"] = spec.quotient.lattice.n;
            rows.push_back(row);
        }
        json doc;
        doc["kind"] = "report";
        doc["quotients"] = rows;
        emit(doc, out_path);
    } else if (c_con->parsed()) {
        json in = load_document(in_path);
        Lattice C = document_kind(in) == "lattice"
                        ? congruence_lattice_of(lattice_from_json(in))
                        : con_lattice(system_from_json(in), cap).lattice;
        if (format == "dot")
            emit(dot_of_lattice(C), out_path);
        else
            emit(lattice_to_json(C), out_path);
    } else if (c_interval->parsed() || c_double->parsed()) {
        FactSystem sys = system_from_json(load_document(in_path));
        OrthoPair lo = pair_of_closed(sys, set_from_labels(sys.ground, lo_csv));
        OrthoPair hi = pair_of_closed(sys, set_from_labels(sys.ground, hi_csv));
        if (c_interval->parsed()) {
            IntervalSystem iv = interval_system(sys, lo, hi);
            json doc = system_to_json(iv.sys);
            json kept = json::array();
            for (int e : iv.elem) kept.push_back(sys.ground.label(e));
            doc["element"] = kept;
            emit(doc, out_path);
        } else {
            emit(system_to_json(double_system(sys, lo, hi)), out_path);
        }
    } else if (c_markowsky->parsed()) {
        Lattice L = lattice_from_json(load_document(in_path));
        emit(two_set_to_json(markowsky_system(L).rel), out_path);
    } else if (c_extremal->parsed()) {
        Lattice L = lattice_from_json(load_document(in_path));
        ExtremalCertificate cert = extremal_analysis(L);
        MarkowskySystem ms = markowsky_system(L);
        json doc;
        doc["kind"] = "report";
        doc["chain"] = cert.chain;
        doc["n_jirr"] = cert.n_jirr;
        doc["n_mirr"] = cert.n_mirr;
        doc["extremal"] = cert.extremal;
        if (!cert.mu.empty()) {
            json mu = json::array();
            for (size_t a = 0; a < cert.mu.size(); ++a)
                mu.push_back({ms.jirr[a], ms.mirr[cert.mu[a]]});
            doc["pairing"] = mu;
        }
        emit(doc, out_path);
    } else if (c_classify->parsed()) {
        json in = load_document(in_path);
        std::string kind = document_kind(in);
        ClassifyReport r;
        if (kind == "lattice") {
            r = classify(lattice_from_json(in));
        } else {
            // fall back to the pairs lattice when the axioms fail, so the
            // report still covers relations like the extremal figure
            RawSystem raw = raw_system(in);
            try {
                r = classify(system_from_json(in));
            } catch (const DomainError& e) {
                if (e.code() != ErrorCode::InvalidSystem) throw;
                r = classify(pairs_lattice(raw.to, cap).lattice);
                r.has_system = true;
                r.two_acyclic = false;
                r.to_acyclic_reflexive = raw.to.is_acyclic_reflexive();
            }
        }
        emit(classify_to_json(r), out_path);
    } else if (c_generate->parsed()) {
        auto want = [&](size_t k) {
            if (gen_params.size() != k)
                throw DomainError(ErrorCode::InvalidInput,
                                  gen_kind + " needs " + std::to_string(k) + " parameter(s)");
        };
        json doc;
        if (gen_kind == "chain") {
            want(1);
            doc = lattice_to_json(chain(gen_params[0]));
        } else if (gen_kind == "boolean") {
            want(1);
            doc = lattice_to_json(boolean_lattice(gen_params[0]));
        } else if (gen_kind == "weak_order_sn") {
            want(1);
            doc = lattice_to_json(weak_order_sn(gen_params[0]));
        } else if (gen_kind == "tamari") {
            want(1);
            doc = lattice_to_json(tamari(gen_params[0]));
        } else if (gen_kind == "doubling") {
            want(1);
            doc = lattice_to_json(doubling_random(gen_params[0], seed, cap));
        } else if (gen_kind == "poset") {
            want(2);
            Rng rng(seed);
            Relation p = random_poset(gen_params[0], gen_params[1], rng);
            Diagnostics d;
            auto sys = validate_system(GroundSet::plain(p.n), p, p, p, d);
            if (!sys)
                throw DomainError(ErrorCode::InternalInconsistency, d.describe());
            doc = system_to_json(*sys);
        } else if (gen_kind == "semi_fig" || gen_kind == "ext_fig") {
            want(0);
            Relation to = Relation::identity(4);
            if (gen_kind == "semi_fig")
                for (auto [x, y] :
                     {std::pair{0, 1}, {1, 3}, {2, 0}, {3, 2}, {1, 2}, {2, 1}})
                    to.add(x, y);
            else
                for (auto [x, y] : {std::pair{0, 1}, {1, 2}, {2, 3}}) to.add(x, y);
            doc["kind"] = "system";
            doc["ground"] = {"1", "2", "3", "4"};
            json rows = json::array();
            for (int x = 0; x < 4; ++x) {
                json row = json::array();
                for (int y = 0; y < 4; ++y) row.push_back(to(x, y));
                rows.push_back(row);
            }
            doc["to"] = rows;
        } else {
            throw DomainError(ErrorCode::InvalidInput, "unknown generator " + gen_kind);
        }
        emit(doc, out_path);
    } else if (c_render->parsed()) {
        json in = load_document(in_path);
        std::string text;
        try {
            text = render_dot(in);
        } catch (const DomainError& e) {
            // draw non-validating system documents from the raw arrows
            if (e.code() != ErrorCode::InvalidSystem) throw;
            RawSystem raw = raw_system(in);
            auto [onto, into] = fact(raw.to);
            FactSystem sys{raw.ground, raw.to, onto, into, {}};
            text = dot_of_system(sys);
        }
        emit(text, out_path);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const DomainError& e) {
        json err;
        err["error"] = error_code_name(e.code());
        err["message"] = e.what();
        std::cerr << err.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        json err;
        err["error"] = "internal";
        err["message"] = e.what();
        std::cerr << err.dump() << "\n";
        return 1;
    }
}
