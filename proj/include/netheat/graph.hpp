#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace netheat {

struct GraphError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct VertexDecl {
    std::string id;
    bool infinite = false;
};

struct EdgeDecl {
    std::string id;
    std::string tail;
    std::string head;
};

struct Degree {
    int in = 0;      // |Γ+(v)|, edges ending at v
    int out = 0;     // |Γ-(v)|, edges starting at v
    int total = 0;
    bool infinite = false;  // flag is authoritative, may exceed stored arity
};

/// Finite host graph with oriented edges and per-vertex infinite-degree
/// flags. Vertices and edges are sorted by id at construction; all
/// indices below refer to that order. Immutable after build().
class Graph {
public:
    static Graph build(std::vector<VertexDecl> vertices,
                       std::vector<EdgeDecl> edges);

    int num_vertices() const { return static_cast<int>(vertex_ids_.size()); }
    int num_edges() const { return static_cast<int>(edge_ids_.size()); }

    const std::string& vertex_id(int v) const { return vertex_ids_.at(v); }
    const std::string& edge_id(int e) const { return edge_ids_.at(e); }

    // throw GraphError on unknown ids
    int vertex_index(const std::string& id) const;
    int edge_index(const std::string& id) const;

    bool infinite(int v) const { return infinite_.at(v); }
    int tail(int e) const { return endpoints_.at(e).first; }
    int head(int e) const { return endpoints_.at(e).second; }

    /// Γ+(v): edges ending at v, ascending edge index.
    const std::vector<int>& in_edges(int v) const { return in_edges_.at(v); }
    /// Γ-(v): edges starting at v, ascending edge index.
    const std::vector<int>& out_edges(int v) const { return out_edges_.at(v); }
    /// Γ(v) = Γ+(v) ∪ Γ-(v), ascending (parallel edges kept).
    std::vector<int> incident_edges(int v) const;

    Degree degree(int v) const;
    Degree degree(const std::string& vertex) const;

    int opposite(int e, int v) const;

private:
    Graph() = default;

    std::vector<std::string> vertex_ids_;
    std::vector<bool> infinite_;
    std::vector<std::string> edge_ids_;
    std::vector<std::pair<int, int>> endpoints_;  // (tail, head)
    std::vector<std::vector<int>> in_edges_;
    std::vector<std::vector<int>> out_edges_;
    std::map<std::string, int> vertex_lookup_;
    std::map<std::string, int> edge_lookup_;
};

/// Induced subgraph: edge set is determined by the vertex set, boundary
/// is computed against the parent.
struct Subgraph {
    const Graph* parent = nullptr;
    std::vector<int> vertices;  // ascending
    std::vector<int> edges;     // ascending
    std::vector<int> boundary;  // ascending, ⊆ vertices

    bool has_vertex(int v) const;
    bool has_edge(int e) const;
};

enum class StarDirection { In, Out, Both };

Subgraph star(const Graph& g, int v, StarDirection dir);
Subgraph induced_subgraph(const Graph& g, std::vector<int> vs);
/// G_fin: induced subgraph on vertices with infinite = false.
Subgraph finite_part(const Graph& g);

enum class IncidenceKind { Plus, Minus, Signed };

/// Vertex × edge incidence matrix. Plus marks edge heads, Minus edge
/// tails, Signed is Plus − Minus. Stored in both row and column views
/// with entries sorted by index.
struct SparseIncidence {
    int rows = 0;  // |V|
    int cols = 0;  // |E|
    std::vector<std::vector<std::pair<int, double>>> by_row;  // vertex -> (edge, val)
    std::vector<std::vector<std::pair<int, double>>> by_col;  // edge -> (vertex, val)

    int nnz() const;
};

SparseIncidence incidence(const Graph& g, IncidenceKind kind);

}  // namespace netheat
