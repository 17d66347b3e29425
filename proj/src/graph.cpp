#include "netheat/graph.hpp"

#include <algorithm>
#include <set>

namespace netheat {

Graph Graph::build(std::vector<VertexDecl> vertices, std::vector<EdgeDecl> edges) {
    std::sort(vertices.begin(), vertices.end(),
              [](const VertexDecl& a, const VertexDecl& b) { return a.id < b.id; });
    std::sort(edges.begin(), edges.end(),
              [](const EdgeDecl& a, const EdgeDecl& b) { return a.id < b.id; });

    Graph g;
    for (const auto& vd : vertices) {
        if (g.vertex_lookup_.count(vd.id))
            throw GraphError("duplicate vertex id: " + vd.id);
        g.vertex_lookup_[vd.id] = static_cast<int>(g.vertex_ids_.size());
        g.vertex_ids_.push_back(vd.id);
        g.infinite_.push_back(vd.infinite);
    }
    g.in_edges_.resize(g.vertex_ids_.size());
    g.out_edges_.resize(g.vertex_ids_.size());

    for (const auto& ed : edges) {
        if (g.edge_lookup_.count(ed.id))
            throw GraphError("duplicate edge id: " + ed.id);
        auto t = g.vertex_lookup_.find(ed.tail);
        if (t == g.vertex_lookup_.end())
            throw GraphError("dangling endpoint: edge " + ed.id + " tail " + ed.tail);
        auto h = g.vertex_lookup_.find(ed.head);
        if (h == g.vertex_lookup_.end())
            throw GraphError("dangling endpoint: edge " + ed.id + " head " + ed.head);
        if (t->second == h->second)
            throw GraphError("self-loop rejected: edge " + ed.id);
        int e = static_cast<int>(g.edge_ids_.size());
        g.edge_lookup_[ed.id] = e;
        g.edge_ids_.push_back(ed.id);
        g.endpoints_.emplace_back(t->second, h->second);
        g.out_edges_[t->second].push_back(e);
        g.in_edges_[h->second].push_back(e);
    }
    return g;
}

int Graph::vertex_index(const std::string& id) const {
    auto it = vertex_lookup_.find(id);
    if (it == vertex_lookup_.end()) throw GraphError("unknown vertex: " + id);
    return it->second;
}

int Graph::edge_index(const std::string& id) const {
    auto it = edge_lookup_.find(id);
    if (it == edge_lookup_.end()) throw GraphError("unknown edge: " + id);
    return it->second;
}

std::vector<int> Graph::incident_edges(int v) const {
    std::vector<int> out;
    out.reserve(in_edges_.at(v).size() + out_edges_.at(v).size());
    std::merge(in_edges_[v].begin(), in_edges_[v].end(),
               out_edges_[v].begin(), out_edges_[v].end(),
               std::back_inserter(out));
    return out;
}

Degree Graph::degree(int v) const {
    if (v < 0 || v >= num_vertices()) throw GraphError("unknown vertex index");
    Degree d;
    d.in = static_cast<int>(in_edges_[v].size());
    d.out = static_cast<int>(out_edges_[v].size());
    d.total = d.in + d.out;
    d.infinite = infinite_[v];
    return d;
}

Degree Graph::degree(const std::string& vertex) const {
    return degree(vertex_index(vertex));
}

int Graph::opposite(int e, int v) const {
    const auto& [t, h] = endpoints_.at(e);
    if (t == v) return h;
    if (h == v) return t;
    throw GraphError("vertex not an endpoint of edge " + edge_ids_[e]);
}

bool Subgraph::has_vertex(int v) const {
    return std::binary_search(vertices.begin(), vertices.end(), v);
}

bool Subgraph::has_edge(int e) const {
    return std::binary_search(edges.begin(), edges.end(), e);
}

static std::vector<int> compute_boundary(const Graph& g, const std::vector<int>& vs) {
    std::set<int> inside(vs.begin(), vs.end());
    std::vector<int> boundary;
    for (int v : vs) {
        bool adj_outside = false;
        for (int e : g.incident_edges(v))
            if (!inside.count(g.opposite(e, v))) { adj_outside = true; break; }
        if (adj_outside) boundary.push_back(v);
    }
    return boundary;
}

Subgraph induced_subgraph(const Graph& g, std::vector<int> vs) {
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    for (int v : vs)
        if (v < 0 || v >= g.num_vertices())
            throw GraphError("unknown vertex index in subgraph vertex list");

    Subgraph sub;
    sub.parent = &g;
    sub.vertices = vs;
    for (int e = 0; e < g.num_edges(); ++e)
        if (sub.has_vertex(g.tail(e)) && sub.has_vertex(g.head(e)))
            sub.edges.push_back(e);
    sub.boundary = compute_boundary(g, vs);
    return sub;
}

Subgraph star(const Graph& g, int v, StarDirection dir) {
    if (v < 0 || v >= g.num_vertices()) throw GraphError("unknown vertex index");
    Subgraph sub;
    sub.parent = &g;
    std::set<int> vset{v};
    std::vector<int> edges;
    if (dir == StarDirection::In || dir == StarDirection::Both)
        edges.insert(edges.end(), g.in_edges(v).begin(), g.in_edges(v).end());
    if (dir == StarDirection::Out || dir == StarDirection::Both)
        edges.insert(edges.end(), g.out_edges(v).begin(), g.out_edges(v).end());
    std::sort(edges.begin(), edges.end());
    for (int e : edges) vset.insert(g.opposite(e, v));
    sub.vertices.assign(vset.begin(), vset.end());
    sub.edges = edges;
    sub.boundary = compute_boundary(g, sub.vertices);
    return sub;
}

Subgraph finite_part(const Graph& g) {
    std::vector<int> vs;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (!g.infinite(v)) vs.push_back(v);
    return induced_subgraph(g, vs);
}

int SparseIncidence::nnz() const {
    int n = 0;
    for (const auto& col : by_col) n += static_cast<int>(col.size());
    return n;
}

SparseIncidence incidence(const Graph& g, IncidenceKind kind) {
    SparseIncidence m;
    m.rows = g.num_vertices();
    m.cols = g.num_edges();
    m.by_row.resize(m.rows);
    m.by_col.resize(m.cols);
    auto put = [&m](int v, int e, double val) {
        m.by_row[v].emplace_back(e, val);
        m.by_col[e].emplace_back(v, val);
    };
    for (int e = 0; e < g.num_edges(); ++e) {
        switch (kind) {
            case IncidenceKind::Plus:
                put(g.head(e), e, 1.0);
                break;
            case IncidenceKind::Minus:
                put(g.tail(e), e, 1.0);
                break;
            case IncidenceKind::Signed:
                put(g.head(e), e, 1.0);
                put(g.tail(e), e, -1.0);
                break;
        }
    }
    for (auto& col : m.by_col)
        std::sort(col.begin(), col.end());
    // rows already in ascending edge order by construction
    return m;
}

}  // namespace netheat
