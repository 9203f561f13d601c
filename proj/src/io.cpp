#include "sdl/io.hpp"

#include <fstream>

namespace sdl {

namespace {

json matrix_to_json(const Relation& r) {
    json rows = json::array();
    for (int x = 0; x < r.n; ++x) {
        json row = json::array();
        for (int y = 0; y < r.n; ++y) row.push_back(r(x, y));
        rows.push_back(row);
    }
    return rows;
}

Relation matrix_from_json(const json& rows, const char* what) {
    if (!rows.is_array())
        throw DomainError(ErrorCode::InvalidInput, std::string(what) + " must be an array");
    int n = int(rows.size());
    Relation r(n);
    for (int x = 0; x < n; ++x) {
        const json& row = rows[x];
        if (!row.is_array() || int(row.size()) != n)
            throw DomainError(ErrorCode::InvalidInput,
                              std::string(what) + " is not a square boolean matrix");
        for (int y = 0; y < n; ++y)
            if (row[y].get<bool>()) r.add(x, y);
    }
    return r;
}

std::vector<std::string> labels_from_json(const json& arr, const char* what) {
    if (!arr.is_array())
        throw DomainError(ErrorCode::InvalidInput, std::string(what) + " must be an array");
    std::vector<std::string> out;
    for (const auto& v : arr) out.push_back(v.get<std::string>());
    return out;
}

} // namespace

json system_to_json(const FactSystem& sys) {
    json doc;
    doc["kind"] = "system";
    json ground = json::array();
    for (int i = 0; i < sys.size(); ++i) ground.push_back(sys.ground.label(i));
    doc["ground"] = ground;
    doc["to"] = matrix_to_json(sys.to);
    doc["onto"] = matrix_to_json(sys.onto);
    doc["into"] = matrix_to_json(sys.into);
    return doc;
}

FactSystem system_from_json(const json& doc) {
    if (document_kind(doc) != "system")
        throw DomainError(ErrorCode::KindMismatch, "expected a system document");
    GroundSet ground;
    ground.labels = labels_from_json(doc.at("ground"), "ground");
    ground.size = int(ground.labels.size());
    ground.validate();
    Relation to = matrix_from_json(doc.at("to"), "to");
    if (to.n != ground.size)
        throw DomainError(ErrorCode::InvalidInput, "to matrix size disagrees with ground");
    Relation onto(0), into(0);
    if (doc.contains("onto") || doc.contains("into")) {
        if (!doc.contains("onto") || !doc.contains("into"))
            throw DomainError(ErrorCode::InvalidInput,
                              "onto and into must be given together or both omitted");
        onto = matrix_from_json(doc.at("onto"), "onto");
        into = matrix_from_json(doc.at("into"), "into");
    } else {
        auto fo = fact(to);
        onto = fo.first;
        into = fo.second;
    }
    Diagnostics diag;
    auto sys = validate_system(ground, to, onto, into, diag);
    if (!sys)
        throw DomainError(ErrorCode::InvalidSystem, diag.describe());
    return *sys;
}

json lattice_to_json(const Lattice& L) {
    json doc;
    doc["kind"] = "lattice";
    doc["size"] = L.n;
    json rows = json::array();
    for (int x = 0; x < L.n; ++x) {
        json row = json::array();
        for (int y = 0; y < L.n; ++y) row.push_back(L.leq(x, y));
        rows.push_back(row);
    }
    doc["leq"] = rows;
    return doc;
}

Lattice lattice_from_json(const json& doc) {
    if (document_kind(doc) != "lattice")
        throw DomainError(ErrorCode::KindMismatch, "expected a lattice document");
    int n = doc.at("size").get<int>();
    if (doc.contains("leq")) {
        Relation leq = matrix_from_json(doc.at("leq"), "leq");
        if (leq.n != n) throw DomainError(ErrorCode::InvalidInput, "size disagrees with leq");
        return lattice_from_leq(leq.row);
    }
    if (doc.contains("covers")) {
        std::vector<std::pair<int, int>> edges;
        for (const auto& e : doc.at("covers")) {
            if (!e.is_array() || e.size() != 2)
                throw DomainError(ErrorCode::InvalidInput, "covers entries must be pairs");
            edges.push_back({e[0].get<int>(), e[1].get<int>()});
        }
        return lattice_from_covers(edges, n);
    }
    throw DomainError(ErrorCode::InvalidInput, "lattice document needs leq or covers");
}

json two_set_to_json(const TwoSetRelation& rel) {
    json doc;
    doc["kind"] = "two_set_relation";
    json left = json::array(), right = json::array();
    for (int i = 0; i < rel.left.size; ++i) left.push_back(rel.left.label(i));
    for (int i = 0; i < rel.right.size; ++i) right.push_back(rel.right.label(i));
    doc["left"] = left;
    doc["right"] = right;
    json rows = json::array();
    for (int x = 0; x < rel.left.size; ++x) {
        json row = json::array();
        for (int y = 0; y < rel.right.size; ++y) row.push_back(rel.adj[x].test(y));
        rows.push_back(row);
    }
    doc["adj"] = rows;
    return doc;
}

TwoSetRelation two_set_from_json(const json& doc) {
    if (document_kind(doc) != "two_set_relation")
        throw DomainError(ErrorCode::KindMismatch, "expected a two_set_relation document");
    TwoSetRelation rel;
    rel.left.labels = labels_from_json(doc.at("left"), "left");
    rel.left.size = int(rel.left.labels.size());
    rel.right.labels = labels_from_json(doc.at("right"), "right");
    rel.right.size = int(rel.right.labels.size());
    rel.left.validate();
    rel.right.validate();
    const json& rows = doc.at("adj");
    if (!rows.is_array() || int(rows.size()) != rel.left.size)
        throw DomainError(ErrorCode::InvalidInput, "adj has wrong row count");
    rel.adj.assign(rel.left.size, Bits(rel.right.size));
    for (int x = 0; x < rel.left.size; ++x) {
        const json& row = rows[x];
        if (!row.is_array() || int(row.size()) != rel.right.size)
            throw DomainError(ErrorCode::InvalidInput, "adj has wrong column count");
        for (int y = 0; y < rel.right.size; ++y)
            if (row[y].get<bool>()) rel.adj[x].set(y);
    }
    return rel;
}

std::string document_kind(const json& doc) {
    if (!doc.is_object() || !doc.contains("kind") || !doc.at("kind").is_string())
        throw DomainError(ErrorCode::InvalidInput, "document has no kind tag");
    return doc.at("kind").get<std::string>();
}

json load_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError(ErrorCode::InvalidInput, "cannot open " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw DomainError(ErrorCode::InvalidInput, "bad JSON in " + path + ": " + e.what());
    }
    return doc;
}

void save_document(const json& doc, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw DomainError(ErrorCode::InvalidInput, "cannot write " + path);
    out << doc.dump(2) << "\n";
}

json classify_to_json(const ClassifyReport& r) {
    json doc;
    doc["kind"] = "report";
    doc["size"] = r.size;
    doc["distributive"] = r.distributive;
    doc["join_sd"] = r.join_sd;
    doc["meet_sd"] = r.meet_sd;
    doc["semidistributive"] = r.sd();
    doc["congruence_uniform"] = r.congruence_uniform;
    doc["extremal"] = r.extremal;
    doc["trim_candidate"] = r.trim_candidate;
    if (r.has_system) {
        doc["two_acyclic"] = r.two_acyclic;
        doc["to_acyclic_reflexive"] = r.to_acyclic_reflexive;
    }
    return doc;
}

std::string dot_of_lattice(const Lattice& L, const std::vector<std::string>& labels) {
    std::string s = "digraph hasse {\n  rankdir=BT;\n  node [shape=circle];\n";
    IrreducibleData irr = irreducibles(L);
    std::vector<char> is_j(L.n, 0), is_m(L.n, 0);
    for (int j : irr.jirr) is_j[j] = 1;
    for (int m : irr.mirr) is_m[m] = 1;
    for (int x = 0; x < L.n; ++x) {
        std::string name = labels.empty() ? std::to_string(x) : labels[x];
        s += "  n" + std::to_string(x) + " [label=\"" + name + "\"";
        if (is_j[x] && is_m[x])
            s += ", style=filled, fillcolor=lightgoldenrod";
        else if (is_j[x])
            s += ", style=filled, fillcolor=lightblue";
        else if (is_m[x])
            s += ", style=filled, fillcolor=lightpink";
        s += "];\n";
    }
    for (int x = 0; x < L.n; ++x)
        for (int y : L.upper_covers[x])
            s += "  n" + std::to_string(x) + " -> n" + std::to_string(y) + ";\n";
    return s + "}\n";
}

std::string dot_of_system(const FactSystem& sys) {
    // loops suppressed; arrow decorations encode onto/into membership
    std::string s = "digraph system {\n  node [shape=circle];\n";
    for (int x = 0; x < sys.size(); ++x)
        s += "  n" + std::to_string(x) + " [label=\"" + sys.ground.label(x) + "\"];\n";
    for (int x = 0; x < sys.size(); ++x)
        for (int y : sys.to.row[x].elems()) {
            if (x == y) continue;
            std::string attrs;
            bool on = sys.onto(x, y), in = sys.into(x, y);
            if (on && in)
                attrs = " [color=purple, penwidth=2, label=\"oi\"]";
            else if (on)
                attrs = " [color=blue, arrowhead=normalnormal, label=\"o\"]";
            else if (in)
                attrs = " [color=red, arrowhead=onormal, label=\"i\"]";
            s += "  n" + std::to_string(x) + " -> n" + std::to_string(y) + attrs + ";\n";
        }
    return s + "}\n";
}

std::string render_dot(const json& doc) {
    std::string kind = document_kind(doc);
    if (kind == "lattice") {
        return dot_of_lattice(lattice_from_json(doc));
    }
    if (kind == "system") {
        return dot_of_system(system_from_json(doc));
    }
    throw DomainError(ErrorCode::KindMismatch, "render expects a lattice or system document");
}

} // namespace sdl
