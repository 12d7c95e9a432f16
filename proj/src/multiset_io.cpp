#include "divcodes/geometry.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace divcodes {

namespace {

Int json_to_int(const nlohmann::json& j) {
    if (j.is_string())
        return Int(j.get<std::string>());
    if (j.is_number_integer())
        return Int(j.get<long long>());
    throw std::invalid_argument("multiset file: expected an integer or decimal string");
}

}  // namespace

std::string write_multiset(const PointMultiset& p) {
    const Geometry& geo = p.geometry();
    nlohmann::json doc;
    doc["q"] = p.q();
    doc["v"] = p.v();
    doc["points"] = nlohmann::json::array();
    for (const auto& [index, count] : p.mult()) {
        nlohmann::json rec;
        rec["coords"] = geo.point(index);
        rec["mult"] = count.str();
        doc["points"].push_back(rec);
    }
    return doc.dump(2) + "\n";
}

PointMultiset read_multiset(const std::string& text) {
    nlohmann::json doc = nlohmann::json::parse(text);
    long long q = doc.at("q").get<long long>();
    int v = doc.at("v").get<int>();
    const Geometry& geo = Geometry::get(q, v);
    PointMultiset p(q, v);
    for (const auto& rec : doc.at("points")) {
        CoordVec coords;
        for (const auto& c : rec.at("coords")) {
            long long value = c.get<long long>();
            if (value < 0 || value >= q)
                throw std::invalid_argument("multiset file: coordinate out of [0, q-1]");
            coords.push_back(static_cast<Coord>(value));
        }
        if (geo.normalize(coords) != coords)
            throw std::invalid_argument("multiset file: coords must be leading-one normalized");
        Int count = json_to_int(rec.at("mult"));
        if (count <= 0)
            throw std::invalid_argument("multiset file: mult must be positive");
        auto index = static_cast<std::uint32_t>(geo.index_of(coords));
        if (p.multiplicity(index) != 0)
            throw std::invalid_argument("multiset file: duplicate coords");
        p.set(index, count);
    }
    return p;
}

PointMultiset read_multiset_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open multiset file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return read_multiset(buffer.str());
}

void write_multiset_file(const PointMultiset& p, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw std::invalid_argument("cannot write multiset file: " + path);
    out << write_multiset(p);
}

}  // namespace divcodes
