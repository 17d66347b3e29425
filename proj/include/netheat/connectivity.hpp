#pragma once

#include <string>
#include <vector>

#include "netheat/graph.hpp"

namespace netheat {

/// Deterministic union-find: path compression, union by rank, and
/// smallest-index representatives on extraction.
class UnionFind {
public:
    explicit UnionFind(int n);
    int find(int i);
    void unite(int a, int b);
    /// Groups sorted by smallest member; members ascending.
    std::vector<std::vector<int>> groups();
    int group_count();

private:
    std::vector<int> parent_;
    std::vector<int> rank_;
};

struct ConnectivityResult {
    bool connected = false;
    /// connected: vertices in BFS visit order (reachability certificate).
    /// disconnected: a proper nonempty vertex set with no edge leaving it.
    std::vector<int> witness;
};

/// Pathwise connectedness ignoring orientation. Throws on the empty graph.
ConnectivityResult pathwise_connected(const Graph& g);

/// S_fin(e): closure of {e} under "shares an unflagged endpoint",
/// ascending edge indices. Always contains e.
std::vector<int> finite_span(const Graph& g, int e);

struct SpanPartition {
    struct Block {
        std::vector<int> edges;     // ascending
        std::vector<int> boundary;  // flagged vertices incident to the block
    };
    std::vector<Block> blocks;   // ordered by smallest edge index
    std::vector<int> block_of;   // edge -> block index
};

/// Partition of E into distinct finite spans (union-find over the
/// unflagged-endpoint adjacency).
SpanPartition delta_components(const Graph& g);

struct IrreducibilityVerdict {
    bool irreducible = false;
    int block_count = 0;
    // certificate when reducible: two edges in different blocks and the
    // separating flagged vertex set
    int edge_a = -1;
    int edge_b = -1;
    std::vector<int> separator;
};

/// Theorem-level verdict: irreducible iff a single finite-span block.
/// Throws on an edgeless graph.
IrreducibilityVerdict is_irreducible(const Graph& g);

/// Number of nontrivial minimal invariant ideals = block count.
int count_invariant_ideals(const Graph& g);

std::string partition_json(const Graph& g, const SpanPartition& p, bool irreducible);

}  // namespace netheat
