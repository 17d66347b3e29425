#include "netheat/heat.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/SparseCholesky>
#include <json.hpp>

#include "netheat/connectivity.hpp"
#include "netheat/io.hpp"

namespace netheat {

Mesh build_mesh(const Graph& g, int n) {
    if (n < 2) throw GraphError("build_mesh: need n >= 2 segments per edge");
    Mesh mesh;
    mesh.g = &g;
    mesh.segments.assign(g.num_edges(), n);
    mesh.vertex_dof.assign(g.num_vertices(), -1);
    int next = 0;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (!g.infinite(v)) mesh.vertex_dof[v] = next++;
    mesh.dof.resize(g.num_edges());
    for (int e = 0; e < g.num_edges(); ++e) {
        mesh.dof[e].assign(n + 1, -1);
        mesh.dof[e][0] = mesh.vertex_dof[g.tail(e)];
        mesh.dof[e][n] = mesh.vertex_dof[g.head(e)];
        for (int j = 1; j < n; ++j) mesh.dof[e][j] = next++;
    }
    mesh.n_dof = next;
    return mesh;
}

std::vector<double> Mesh::edge_values(const Eigen::VectorXd& u, int e) const {
    std::vector<double> vals(dof[e].size(), 0.0);
    for (size_t j = 0; j < dof[e].size(); ++j)
        if (dof[e][j] >= 0) vals[j] = u[dof[e][j]];
    return vals;
}

OperatorPair assemble(const Mesh& mesh, MassMode mass, Exec exec) {
    using Triplet = Eigen::Triplet<double>;
    const Graph& g = *mesh.g;
    std::vector<std::vector<Triplet>> k_parts(g.num_edges());
    std::vector<std::vector<Triplet>> m_parts(g.num_edges());

#ifdef _OPENMP
#pragma omp parallel for if (exec == Exec::Parallel && g.num_edges() > 64) schedule(static)
#endif
    for (int e = 0; e < g.num_edges(); ++e) {
        const int n = mesh.segments[e];
        const double h = 1.0 / n;
        auto& kt = k_parts[e];
        auto& mt = m_parts[e];
        for (int j = 0; j < n; ++j) {
            const int dof_local[2] = {mesh.dof[e][j], mesh.dof[e][j + 1]};
            const double k_local[2][2] = {{1.0 / h, -1.0 / h}, {-1.0 / h, 1.0 / h}};
            const double m_cons[2][2] = {{h / 3.0, h / 6.0}, {h / 6.0, h / 3.0}};
            for (int a = 0; a < 2; ++a) {
                if (dof_local[a] < 0) continue;
                for (int b = 0; b < 2; ++b) {
                    if (dof_local[b] < 0) continue;
                    kt.emplace_back(dof_local[a], dof_local[b], k_local[a][b]);
                    if (mass == MassMode::Consistent)
                        mt.emplace_back(dof_local[a], dof_local[b], m_cons[a][b]);
                }
                if (mass == MassMode::Lumped)
                    mt.emplace_back(dof_local[a], dof_local[a], h / 2.0);
            }
        }
    }
    (void)exec;

    std::vector<Triplet> k_all, m_all;
    for (int e = 0; e < g.num_edges(); ++e) {
        k_all.insert(k_all.end(), k_parts[e].begin(), k_parts[e].end());
        m_all.insert(m_all.end(), m_parts[e].begin(), m_parts[e].end());
    }
    OperatorPair pair;
    pair.mass = mass;
    pair.K.resize(mesh.n_dof, mesh.n_dof);
    pair.M.resize(mesh.n_dof, mesh.n_dof);
    pair.K.setFromTriplets(k_all.begin(), k_all.end());
    pair.M.setFromTriplets(m_all.begin(), m_all.end());
    return pair;
}

std::vector<HeatState> evolve(const OperatorPair& pair, const Eigen::VectorXd& u0,
                              double dt, double T) {
    if (dt <= 0) throw GraphError("evolve: dt must be positive");
    if (T < dt) throw GraphError("evolve: T must be >= dt");
    if (!u0.allFinite()) throw GraphError("evolve: non-finite initial data");
    if (u0.size() != pair.K.rows()) throw GraphError("evolve: dimension mismatch");

    Eigen::SparseMatrix<double> A = pair.M + dt * pair.K;
    Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver;
    solver.compute(A);
    if (solver.info() != Eigen::Success)
        throw GraphError("evolve: factorization of M + dt K failed");

    std::vector<HeatState> traj;
    traj.push_back({0.0, u0});
    Eigen::VectorXd u = u0;
    int step = 0;
    double t = 0.0;
    while (t < T - 1e-12 * std::max(T, 1.0)) {
        Eigen::VectorXd rhs = pair.M * u;
        u = solver.solve(rhs);
        if (solver.info() != Eigen::Success)
            throw GraphError("evolve: solver breakdown at step " + std::to_string(step + 1));
        ++step;
        t = step * dt;
        traj.push_back({t, u});
    }
    return traj;
}

SupportProfile support_profile(const Mesh& mesh, const HeatState& state, double theta) {
    if (theta < 0) throw GraphError("support_profile: theta must be >= 0");
    SupportProfile profile;
    for (int e = 0; e < mesh.g->num_edges(); ++e) {
        auto vals = mesh.edge_values(state.u, e);
        double lo = vals[0], hi = vals[0];
        for (double v : vals) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        profile.edge_range.emplace_back(lo, hi);
        if (hi > theta) profile.support.push_back(e);
    }
    return profile;
}

Eigen::VectorXd edge_bump(const Mesh& mesh, int e) {
    Eigen::VectorXd u = Eigen::VectorXd::Zero(mesh.n_dof);
    const int n = mesh.segments[e];
    for (int j = 1; j < n; ++j) {
        const double x = static_cast<double>(j) / n;
        if (mesh.dof[e][j] >= 0) u[mesh.dof[e][j]] = 1.0 - std::abs(2.0 * x - 1.0);
    }
    return u;
}

MaxPrincipleReport verify_strong_max_principle(const Graph& g, int e0, int n, double dt,
                                               double T, double theta) {
    if (e0 < 0 || e0 >= g.num_edges())
        throw GraphError("verify_strong_max_principle: unknown edge");
    if (n < 2 || dt <= 0 || T <= 0 || theta < 0)
        throw GraphError("verify_strong_max_principle: parameters must be positive");

    Mesh mesh = build_mesh(g, n);
    OperatorPair pair = assemble(mesh, MassMode::Lumped);
    Eigen::VectorXd u0 = edge_bump(mesh, e0);
    const double u0_max = u0.lpNorm<Eigen::Infinity>();
    auto traj = evolve(pair, u0, dt, T);

    MaxPrincipleReport report;
    report.start_edge = e0;
    report.n = n;
    report.dt = dt;
    report.T = T;
    report.theta = theta;
    report.span = finite_span(g, e0);
    report.block_threshold = 1e-12 * u0_max;

    std::vector<bool> in_span(g.num_edges(), false);
    for (int e : report.span) in_span[e] = true;

    // (i) strict interior positivity on the span at t = T
    const HeatState& final_state = traj.back();
    double min_on_span = std::numeric_limits<double>::infinity();
    for (int e : report.span) {
        auto vals = mesh.edge_values(final_state.u, e);
        for (int j = 1; j < mesh.segments[e]; ++j)
            min_on_span = std::min(min_on_span, vals[j]);
    }
    report.min_on_span = min_on_span;
    report.positivity_on_span = min_on_span > 0.0;

    // (ii) roundoff-scale values outside the span at every step
    double max_off = 0.0;
    for (const auto& state : traj) {
        for (int e = 0; e < g.num_edges(); ++e) {
            if (in_span[e]) continue;
            for (double v : mesh.edge_values(state.u, e))
                max_off = std::max(max_off, std::abs(v));
        }
    }
    report.max_off_span = max_off;
    report.blocked_outside_span = max_off <= report.block_threshold;

    report.pass = report.positivity_on_span && report.blocked_outside_span;
    return report;
}

std::string trajectory_csv(const Mesh& mesh, const std::vector<HeatState>& traj) {
    std::ostringstream out;
    out << "t,edge_id,sample_index,x,value\n";
    for (const auto& state : traj) {
        for (int e = 0; e < mesh.g->num_edges(); ++e) {
            auto vals = mesh.edge_values(state.u, e);
            const int n = mesh.segments[e];
            for (int j = 0; j <= n; ++j) {
                out << io::format_double(state.t) << ',' << mesh.g->edge_id(e) << ',' << j
                    << ',' << io::format_double(static_cast<double>(j) / n) << ','
                    << io::format_double(vals[j]) << '\n';
            }
        }
    }
    return out.str();
}

std::string max_principle_json(const Graph& g, const MaxPrincipleReport& report) {
    nlohmann::ordered_json doc;
    doc["pass"] = report.pass;
    doc["positivity_on_span"] = report.positivity_on_span;
    doc["blocked_outside_span"] = report.blocked_outside_span;
    doc["min_on_span"] = report.min_on_span;
    doc["max_off_span"] = report.max_off_span;
    doc["block_threshold"] = report.block_threshold;
    doc["start_edge"] = g.edge_id(report.start_edge);
    doc["span"] = nlohmann::ordered_json::array();
    for (int e : report.span) doc["span"].push_back(g.edge_id(e));
    doc["parameters"] = {{"n", report.n}, {"dt", report.dt}, {"T", report.T},
                         {"theta", report.theta}};
    return doc.dump(2) + "\n";
}

}  // namespace netheat
