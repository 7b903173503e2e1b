#include "sset/json_io.hpp"

#include <fstream>
#include <sstream>

namespace sset {

using nlohmann::json;

json to_json(const MonotoneMap& f) {
    return json{{"to", f.target}, {"map", f.values}};
}

MonotoneMap monotone_map_from_json(const json& j) {
    if (!j.is_object() || !j.contains("to") || !j.contains("map"))
        throw SSetError("operator document must have \"to\" and \"map\"");
    return MonotoneMap(j.at("to").get<int>(), j.at("map").get<std::vector<int>>());
}

json to_json(const EZSimplex& x) {
    json j{{"base", x.base}};
    if (!x.op.is_identity()) j["op"] = to_json(x.op);
    return j;
}

EZSimplex ez_from_json(const json& j, int total_dim) {
    if (!j.is_object() || !j.contains("base"))
        throw SSetError("face document must have \"base\"");
    MonotoneMap op =
        j.contains("op") ? monotone_map_from_json(j.at("op")) : identity_map(total_dim);
    return EZSimplex{std::move(op), j.at("base").get<std::string>()};
}

json to_json(const FinSSet& X) {
    json arr = json::array();
    for (const auto& id : X.ordered_ids()) {
        const SimplexRecord& rec = X.at(id);
        json faces = json::array();
        for (const auto& f : rec.faces) faces.push_back(to_json(f));
        arr.push_back(json{{"id", id}, {"dim", rec.dim}, {"faces", faces}});
    }
    return json{{"name", X.name}, {"simplices", arr}};
}

FinSSet sset_from_json(const json& j) {
    if (!j.is_object() || !j.contains("simplices"))
        throw SSetError("simplicial set document must have \"simplices\"");
    FinSSet X;
    X.name = j.value("name", std::string{});
    for (const auto& s : j.at("simplices")) {
        SimplexRecord rec;
        rec.dim = s.at("dim").get<int>();
        for (const auto& f : s.value("faces", json::array()))
            rec.faces.push_back(ez_from_json(f, rec.dim - 1));
        const std::string id = s.at("id").get<std::string>();
        if (X.has(id)) throw SSetError("duplicate simplex identifier: " + id);
        X.simplices[id] = std::move(rec);
    }
    return X;
}

json to_json(const SSetMap& f) {
    json assign = json::object();
    for (const auto& [id, y] : f.assign) assign[id] = to_json(y);
    return json{{"source", to_json(f.source)}, {"target", to_json(f.target)}, {"assign", assign}};
}

SSetMap sset_map_from_json(const json& j) {
    SSetMap f;
    f.source = sset_from_json(j.at("source"));
    f.target = sset_from_json(j.at("target"));
    for (const auto& [id, y] : j.at("assign").items()) {
        if (!f.source.has(id)) throw SSetError("assignment for unknown simplex " + id);
        f.assign[id] = ez_from_json(y, f.source.at(id).dim);
    }
    return f;
}

std::string emit(const FinSSet& X) { return to_json(X).dump(2) + "\n"; }
std::string emit(const SSetMap& f) { return to_json(f).dump(2) + "\n"; }

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SSetError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw SSetError(path + ": " + e.what());
    }
    return j;
}

FinSSet read_sset_file(const std::string& path) { return sset_from_json(read_json_file(path)); }
SSetMap read_map_file(const std::string& path) { return sset_map_from_json(read_json_file(path)); }

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path);
    if (!out) throw SSetError("cannot write " + path);
    out << contents;
}

}  // namespace sset
