// Canonical JSON document formats for simplicial sets, morphisms, posets,
// and k-theory data.  Emission is deterministic: sorted keys, simplices
// listed by (dim, identifier).

#ifndef SSET_JSON_IO_HPP
#define SSET_JSON_IO_HPP

#include <string>

#include "json.hpp"
#include "sset/sset.hpp"

namespace sset {

nlohmann::json to_json(const MonotoneMap& f);
MonotoneMap monotone_map_from_json(const nlohmann::json& j);

nlohmann::json to_json(const EZSimplex& x);
EZSimplex ez_from_json(const nlohmann::json& j, int total_dim);

nlohmann::json to_json(const FinSSet& X);
FinSSet sset_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SSetMap& f);
SSetMap sset_map_from_json(const nlohmann::json& j);

std::string emit(const FinSSet& X);
std::string emit(const SSetMap& f);

FinSSet read_sset_file(const std::string& path);
SSetMap read_map_file(const std::string& path);
nlohmann::json read_json_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace sset

#endif
