#include "schurproc/io.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace schurproc {

using nlohmann::json;

std::string to_json(const Partition& p) {
    return json(p.parts()).dump();
}

Partition partition_from_json(const std::string& text) {
    json j = json::parse(text);
    if (!j.is_array()) throw std::invalid_argument("partition: array expected");
    return Partition(j.get<std::vector<int>>());
}

std::string to_json(const PlanePartition& pi) {
    return json(pi.rows()).dump();
}

PlanePartition plane_partition_from_json(const std::string& text) {
    json j = json::parse(text);
    if (!j.is_array())
        throw std::invalid_argument("plane partition: array of arrays expected");
    return PlanePartition(j.get<std::vector<std::vector<int>>>());
}

std::string to_json(const std::vector<TilePoint>& tiles) {
    json j = json::array();
    for (const TilePoint& p : tiles) j.push_back({p.t, p.h2});
    return j.dump();
}

std::vector<TilePoint> tile_points_from_json(const std::string& text) {
    json j = json::parse(text);
    std::vector<TilePoint> out;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("tile points: [t, 2h] pairs expected");
        out.push_back(TilePoint{e[0].get<int>(), e[1].get<int>()});
    }
    return out;
}

namespace {

const char* kind_name(FactorKind k) {
    switch (k) {
        case FactorKind::geom_pole: return "geom_pole";
        case FactorKind::lin_zero: return "lin_zero";
        case FactorKind::exp: return "exp";
    }
    throw std::logic_error("unknown factor kind");
}

FactorKind kind_from_name(const std::string& s) {
    if (s == "geom_pole") return FactorKind::geom_pole;
    if (s == "lin_zero") return FactorKind::lin_zero;
    if (s == "exp") return FactorKind::exp;
    throw std::invalid_argument("unknown factor kind: " + s);
}

}  // namespace

std::string to_json(const Specialization& s) {
    json j = json::array();
    for (const Factor& f : s.factors())
        j.push_back({{"kind", kind_name(f.kind)}, {"param", f.param}});
    return j.dump();
}

Specialization specialization_from_json(Orientation o, const std::string& text) {
    json j = json::parse(text);
    Specialization s(o);
    for (const auto& e : j)
        s.add(Factor{kind_from_name(e.at("kind").get<std::string>()),
                     e.at("param").get<double>()});
    return s;
}

std::string to_json(const SliceSequence& s) {
    json j = json::object();
    for (const auto& [t, p] : s.nonempty()) j[std::to_string(t)] = p.parts();
    return j.dump();
}

std::string ensemble_csv(const BoxedEnsemble& e) {
    std::ostringstream out;
    out << "volume,weight,config\n";
    for (const auto& [s, w] : e.configs) {
        out << s.total_size() << "," << w << ",\"" << to_json(s) << "\"\n";
    }
    return out.str();
}

}  // namespace schurproc
