#pragma once

#include <string>

#include <json.hpp>

#include "sdl/constructions.hpp"
#include "sdl/relation.hpp"

namespace sdl {

using json = nlohmann::json;

// Documents are flat JSON objects with a "kind" tag:
//   {"kind":"system","ground":[labels],"to":[[bool]],"onto":?,"into":?}
//   {"kind":"lattice","size":n,"leq":[[bool]]} or {"kind":"lattice","size":n,"covers":[[a,b]]}
//   {"kind":"two_set_relation","left":[labels],"right":[labels],"adj":[[bool]]}
// Omitted onto/into are computed with fact(). Serialization is canonical:
// row-major matrices, label order preserved.

json system_to_json(const FactSystem& sys);
FactSystem system_from_json(const json& doc);

json lattice_to_json(const Lattice& L);
Lattice lattice_from_json(const json& doc);

json two_set_to_json(const TwoSetRelation& rel);
TwoSetRelation two_set_from_json(const json& doc);

std::string document_kind(const json& doc);
json load_document(const std::string& path);
void save_document(const json& doc, const std::string& path);

json classify_to_json(const ClassifyReport& r);

/// Hasse diagram for lattices; for systems every non-loop arrow with a
/// decoration for onto/into membership.
std::string render_dot(const json& doc);

std::string dot_of_lattice(const Lattice& L, const std::vector<std::string>& labels = {});
std::string dot_of_system(const FactSystem& sys);

} // namespace sdl
