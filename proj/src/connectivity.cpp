#include "netheat/connectivity.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace netheat {

UnionFind::UnionFind(int n) : parent_(n), rank_(n, 0) {
    for (int i = 0; i < n; ++i) parent_[i] = i;
}

int UnionFind::find(int i) {
    while (parent_[i] != i) {
        parent_[i] = parent_[parent_[i]];
        i = parent_[i];
    }
    return i;
}

void UnionFind::unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
}

std::vector<std::vector<int>> UnionFind::groups() {
    std::map<int, std::vector<int>> by_root;
    for (int i = 0; i < static_cast<int>(parent_.size()); ++i)
        by_root[find(i)].push_back(i);
    std::vector<std::vector<int>> out;
    for (auto& [root, members] : by_root) out.push_back(std::move(members));
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

int UnionFind::group_count() {
    std::set<int> roots;
    for (int i = 0; i < static_cast<int>(parent_.size()); ++i) roots.insert(find(i));
    return static_cast<int>(roots.size());
}

ConnectivityResult pathwise_connected(const Graph& g) {
    if (g.num_vertices() == 0) throw GraphError("pathwise_connected: no vertices");
    std::vector<bool> seen(g.num_vertices(), false);
    std::vector<int> order;
    std::deque<int> queue{0};
    seen[0] = true;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        order.push_back(v);
        for (int e : g.incident_edges(v)) {
            int u = g.opposite(e, v);
            if (!seen[u]) {
                seen[u] = true;
                queue.push_back(u);
            }
        }
    }
    ConnectivityResult result;
    result.connected = static_cast<int>(order.size()) == g.num_vertices();
    if (result.connected) {
        result.witness = order;
    } else {
        std::sort(order.begin(), order.end());
        result.witness = order;  // no edge leaves the reached set
    }
    return result;
}

std::vector<int> finite_span(const Graph& g, int e) {
    if (e < 0 || e >= g.num_edges()) throw GraphError("finite_span: unknown edge");
    std::vector<bool> in_span(g.num_edges(), false);
    std::deque<int> queue{e};
    in_span[e] = true;
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        for (int v : {g.tail(cur), g.head(cur)}) {
            if (g.infinite(v)) continue;
            for (int next : g.incident_edges(v)) {
                if (!in_span[next]) {
                    in_span[next] = true;
                    queue.push_back(next);
                }
            }
        }
    }
    std::vector<int> span;
    for (int i = 0; i < g.num_edges(); ++i)
        if (in_span[i]) span.push_back(i);
    return span;
}

SpanPartition delta_components(const Graph& g) {
    SpanPartition part;
    part.block_of.assign(g.num_edges(), -1);
    if (g.num_edges() == 0) return part;

    UnionFind uf(g.num_edges());
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (g.infinite(v)) continue;
        auto inc = g.incident_edges(v);
        for (size_t i = 1; i < inc.size(); ++i) uf.unite(inc[0], inc[i]);
    }

    for (const auto& members : uf.groups()) {
        SpanPartition::Block block;
        block.edges = members;
        std::set<int> boundary;
        for (int e : members)
            for (int v : {g.tail(e), g.head(e)})
                if (g.infinite(v)) boundary.insert(v);
        block.boundary.assign(boundary.begin(), boundary.end());
        int idx = static_cast<int>(part.blocks.size());
        for (int e : members) part.block_of[e] = idx;
        part.blocks.push_back(std::move(block));
    }
    return part;
}

IrreducibilityVerdict is_irreducible(const Graph& g) {
    if (g.num_edges() == 0) throw GraphError("is_irreducible: graph has no edges");
    SpanPartition part = delta_components(g);
    IrreducibilityVerdict verdict;
    verdict.block_count = static_cast<int>(part.blocks.size());
    verdict.irreducible = verdict.block_count == 1;
    if (!verdict.irreducible) {
        verdict.edge_a = part.blocks[0].edges.front();
        verdict.edge_b = part.blocks[1].edges.front();
        std::set<int> sep(part.blocks[0].boundary.begin(), part.blocks[0].boundary.end());
        sep.insert(part.blocks[1].boundary.begin(), part.blocks[1].boundary.end());
        verdict.separator.assign(sep.begin(), sep.end());
    }
    return verdict;
}

int count_invariant_ideals(const Graph& g) {
    return static_cast<int>(delta_components(g).blocks.size());
}

std::string partition_json(const Graph& g, const SpanPartition& p, bool irreducible) {
    nlohmann::ordered_json doc;
    doc["blocks"] = nlohmann::ordered_json::array();
    for (const auto& block : p.blocks) {
        nlohmann::ordered_json b;
        b["edges"] = nlohmann::ordered_json::array();
        for (int e : block.edges) b["edges"].push_back(g.edge_id(e));
        b["boundary"] = nlohmann::ordered_json::array();
        for (int v : block.boundary) b["boundary"].push_back(g.vertex_id(v));
        doc["blocks"].push_back(b);
    }
    doc["irreducible"] = irreducible;
    return doc.dump(2) + "\n";
}

}  // namespace netheat
