// Compares the serial reference kernels with the OpenMP variants on a
// large random network and checks that both produce identical bits.

#include <chrono>
#include <cstdio>
#include <random>

#include "netheat/graph.hpp"
#include "netheat/heat.hpp"
#include "netheat/incidence_ops.hpp"

using namespace netheat;
using Clock = std::chrono::steady_clock;

static double seconds(Clock::time_point a, Clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

static Graph random_graph(int n_vertices, int n_edges, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, n_vertices - 1);
    std::vector<VertexDecl> vs;
    vs.reserve(n_vertices);
    for (int v = 0; v < n_vertices; ++v)
        vs.push_back({"v" + std::to_string(1000000 + v)});
    std::vector<EdgeDecl> es;
    es.reserve(n_edges);
    for (int e = 0; e < n_edges; ++e) {
        int a = pick(rng), b = pick(rng);
        while (b == a) b = pick(rng);
        es.push_back({"e" + std::to_string(10000000 + e), vs[a].id, vs[b].id});
    }
    return Graph::build(std::move(vs), std::move(es));
}

template <typename F>
static double best_of(int reps, F&& fn) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        auto t0 = Clock::now();
        fn();
        best = std::min(best, seconds(t0, Clock::now()));
    }
    return best;
}

int main() {
    const int nv = 50000, ne = 200000;
    Graph g = random_graph(nv, ne, 42);
    SparseIncidence plus = incidence(g, IncidenceKind::Plus);

    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    EdgeVector x(ne);
    for (int e = 0; e < ne; ++e) x[e] = unit(rng);
    VertexVector d(nv);
    for (int v = 0; v < nv; ++v) d[v] = unit(rng);

    std::printf("%-22s %12s %12s %8s %s\n", "kernel", "serial [s]", "parallel [s]",
                "speedup", "identical");

    {
        VertexVector ys, yp;
        double ts = best_of(5, [&] { ys = apply(plus, x, Exec::Serial); });
        double tp = best_of(5, [&] { yp = apply(plus, x, Exec::Parallel); });
        std::printf("%-22s %12.6f %12.6f %8.2f %s\n", "incidence_apply", ts, tp, ts / tp,
                    ys == yp ? "yes" : "NO");
    }
    {
        EdgeVector ys, yp;
        double ts = best_of(5, [&] { ys = apply_transpose(plus, d, Exec::Serial); });
        double tp = best_of(5, [&] { yp = apply_transpose(plus, d, Exec::Parallel); });
        std::printf("%-22s %12.6f %12.6f %8.2f %s\n", "incidence_transpose", ts, tp,
                    ts / tp, ys == yp ? "yes" : "NO");
    }
    {
        Mesh mesh = build_mesh(g, 8);
        OperatorPair ps, pp;
        double ts = best_of(3, [&] { ps = assemble(mesh, MassMode::Lumped, Exec::Serial); });
        double tp = best_of(3, [&] { pp = assemble(mesh, MassMode::Lumped, Exec::Parallel); });
        bool same = (ps.K - pp.K).norm() == 0.0 && (ps.M - pp.M).norm() == 0.0;
        std::printf("%-22s %12.6f %12.6f %8.2f %s\n", "fe_assembly", ts, tp, ts / tp,
                    same ? "yes" : "NO");
    }
    {
        SparseIncidence small = incidence(random_graph(64, 256, 3), IncidenceKind::Plus);
        ContractionReport rs, rp;
        double ts = best_of(3, [&] {
            rs = verify_contraction_l1_linf(small, 20000, 0, Exec::Serial);
        });
        double tp = best_of(3, [&] {
            rp = verify_contraction_l1_linf(small, 20000, 0, Exec::Parallel);
        });
        bool same = rs.max_ratio == rp.max_ratio && rs.pass == rp.pass;
        std::printf("%-22s %12.6f %12.6f %8.2f %s\n", "contraction_samples", ts, tp,
                    ts / tp, same ? "yes" : "NO");
    }
    return 0;
}
