#include "plap/json_io.hpp"
#include "plap/errors.hpp"

#include <fstream>
#include <limits>

namespace plap {

Rat rat_from_json(const Json& j) {
    if (j.is_number_integer()) return Rat(j.get<long long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw std::invalid_argument("expected integer or \"p/q\" string, got " + j.dump());
}

Json rat_to_json(const Rat& r) {
    if (boost::multiprecision::denominator(r) == 1) {
        BigInt n = boost::multiprecision::numerator(r);
        if (n >= std::numeric_limits<long long>::min() &&
            n <= std::numeric_limits<long long>::max())
            return Json(n.convert_to<long long>());
    }
    return Json(rat_to_string(r));
}

WeightedGraph graph_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
        throw std::invalid_argument("graph JSON needs a \"vertices\" array");
    WeightedGraph g;
    for (const auto& v : j["vertices"]) {
        if (!v.contains("id") || !v["id"].is_string())
            throw std::invalid_argument("vertex entry needs a string \"id\"");
        g.add_vertex(v["id"].get<std::string>(),
                     v.contains("nu") ? rat_from_json(v["nu"]) : Rat(1));
    }
    if (j.contains("edges")) {
        for (const auto& e : j["edges"]) {
            if (!e.contains("u") || !e.contains("v"))
                throw std::invalid_argument("edge entry needs \"u\" and \"v\"");
            g.add_edge(e["u"].get<std::string>(), e["v"].get<std::string>(),
                       e.contains("mu") ? rat_from_json(e["mu"]) : Rat(1));
        }
    }
    return g;
}

Json graph_to_json(const WeightedGraph& g) {
    Json verts = Json::array();
    for (std::size_t i = 0; i < g.size(); ++i)
        verts.push_back({{"id", g.id_of(i)}, {"nu", rat_to_json(g.nu(i))}});
    Json edges = Json::array();
    for (const auto& e : g.edges())
        edges.push_back({{"u", g.id_of(e.u)}, {"v", g.id_of(e.v)}, {"mu", rat_to_json(e.mu)}});
    return Json{{"vertices", verts}, {"edges", edges}};
}

std::vector<std::string> omega_from_json(const Json& j, const WeightedGraph& g) {
    if (!j.contains("omega")) return g.ids();
    if (!j["omega"].is_array())
        throw std::invalid_argument("\"omega\" must be an array of vertex ids");
    std::vector<std::string> omega;
    for (const auto& id : j["omega"]) {
        if (!id.is_string()) throw std::invalid_argument("omega entries must be strings");
        omega.push_back(id.get<std::string>());
    }
    return omega;
}

std::vector<std::vector<std::string>> cells_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("cells") || !j["cells"].is_array())
        throw std::invalid_argument("partition JSON needs a \"cells\" array");
    std::vector<std::vector<std::string>> cells;
    for (const auto& c : j["cells"]) {
        if (!c.is_array()) throw std::invalid_argument("each cell must be an array of ids");
        std::vector<std::string> cell;
        for (const auto& id : c) cell.push_back(id.get<std::string>());
        cells.push_back(std::move(cell));
    }
    return cells;
}

Json cells_to_json(const std::vector<std::vector<std::string>>& cells) {
    Json arr = Json::array();
    for (const auto& c : cells) arr.push_back(c);
    return Json{{"cells", arr}};
}

std::pair<ModelSpec, int> model_spec_from_json(const Json& j) {
    if (!j.is_object()) throw InvalidSpec("model spec must be a JSON object");
    ModelSpec spec;
    if (!j.contains("family") || !j["family"].is_string())
        throw InvalidSpec("missing \"family\"");
    std::string family = j["family"].get<std::string>();
    if (family == "tree")
        spec.family = Family::Tree;
    else if (family == "antitree")
        spec.family = Family::AntiTree;
    else
        throw InvalidSpec("family must be \"tree\" or \"antitree\", got \"" + family + "\"");

    if (spec.family == Family::Tree) {
        if (!j.contains("branching") || !j["branching"].is_array())
            throw InvalidSpec("tree spec needs a \"branching\" array");
        for (const auto& m : j["branching"]) {
            if (!m.is_number_integer())
                throw InvalidSpec("branching entries must be integers");
            spec.branching.push_back(m.get<long long>());
            if (spec.branching.back() < 1)
                throw InvalidSpec("branching numbers must be >= 1");
        }
        if (spec.branching.empty()) throw InvalidSpec("branching array is empty");
    } else {
        if (!j.contains("order") || !j["order"].is_number_integer())
            throw InvalidSpec("anti-tree spec needs an integer \"order\"");
        spec.order = j["order"].get<int>();
        if (spec.order < 1) throw InvalidSpec("order must be >= 1");
    }

    if (!j.contains("scheme") || !j["scheme"].is_string())
        throw InvalidSpec("missing \"scheme\"");
    std::string scheme = j["scheme"].get<std::string>();
    if (scheme == "physical")
        spec.scheme = Scheme::Physical;
    else if (scheme == "modified")
        spec.scheme = Scheme::ModifiedPhysical;
    else if (scheme == "normalized")
        spec.scheme = Scheme::Normalized;
    else
        throw InvalidSpec("scheme must be physical, modified or normalized, got \"" +
                          scheme + "\"");

    int horizon = 200;
    if (j.contains("horizon")) {
        if (!j["horizon"].is_number_integer() || j["horizon"].get<long long>() < 1)
            throw InvalidSpec("horizon must be a positive integer");
        horizon = j["horizon"].get<int>();
    }
    return {spec, horizon};
}

Json model_spec_to_json(const ModelSpec& spec, int horizon) {
    Json j;
    j["family"] = spec.family == Family::Tree ? "tree" : "antitree";
    if (spec.family == Family::Tree)
        j["branching"] = spec.branching;
    else
        j["order"] = spec.order;
    j["scheme"] = scheme_name(spec.scheme);
    j["horizon"] = horizon;
    return j;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

} // namespace plap
