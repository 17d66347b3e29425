#include "netheat/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace netheat::io {

using json = nlohmann::ordered_json;

Graph parse_graph(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& err) {
        throw GraphError(std::string("malformed graph file: ") + err.what());
    }
    try {
        std::vector<VertexDecl> vs;
        for (const auto& v : doc.at("vertices")) {
            VertexDecl vd;
            vd.id = v.at("id").get<std::string>();
            vd.infinite = v.value("infinite", false);
            vs.push_back(vd);
        }
        std::vector<EdgeDecl> es;
        for (const auto& e : doc.at("edges")) {
            es.push_back({e.at("id").get<std::string>(),
                          e.at("tail").get<std::string>(),
                          e.at("head").get<std::string>()});
        }
        return Graph::build(std::move(vs), std::move(es));
    } catch (const json::exception& err) {
        throw GraphError(std::string("malformed graph file: ") + err.what());
    }
}

Graph load_graph(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw GraphError("cannot open graph file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

std::string serialize_graph(const Graph& g) {
    json doc;
    doc["vertices"] = json::array();
    for (int v = 0; v < g.num_vertices(); ++v)
        doc["vertices"].push_back({{"id", g.vertex_id(v)}, {"infinite", g.infinite(v)}});
    doc["edges"] = json::array();
    for (int e = 0; e < g.num_edges(); ++e)
        doc["edges"].push_back({{"id", g.edge_id(e)},
                                {"tail", g.vertex_id(g.tail(e))},
                                {"head", g.vertex_id(g.head(e))}});
    return doc.dump(2) + "\n";
}

void atomic_write(const std::filesystem::path& path, const std::string& content) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write: " + tmp.string());
        out << content;
        if (!out) throw std::runtime_error("write failed: " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace netheat::io
