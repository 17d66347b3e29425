#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "netheat/graph.hpp"
#include "netheat/incidence_ops.hpp"

namespace netheat {

/// Global degree-of-freedom numbering for hat functions on the network:
/// unflagged vertices first (vertex order), then interior grid points
/// edge by edge. Flagged vertices carry no DOF (Dirichlet elimination);
/// continuity at unflagged vertices is built into the shared vertex DOF.
struct Mesh {
    const Graph* g = nullptr;
    std::vector<int> segments;           // n_e per edge
    int n_dof = 0;
    std::vector<int> vertex_dof;         // -1 for flagged vertices
    std::vector<std::vector<int>> dof;   // per edge, n_e+1 entries, -1 = Dirichlet

    std::vector<double> edge_values(const Eigen::VectorXd& u, int e) const;
};

Mesh build_mesh(const Graph& g, int n);

enum class MassMode { Lumped, Consistent };

struct OperatorPair {
    Eigen::SparseMatrix<double> K;  // stiffness, symmetric PSD
    Eigen::SparseMatrix<double> M;  // mass, positive definite
    MassMode mass = MassMode::Lumped;
};

/// Hat-function Galerkin assembly of the energy form; per segment of
/// length h the stiffness stencil is (1/h)[[1,-1],[-1,1]] and the
/// consistent mass (h/6)[[2,1],[1,2]] (lumped: row sums). Parallel
/// assembly builds per-edge triplet lists and reduces in edge order, so
/// the result matches the serial one bit for bit.
OperatorPair assemble(const Mesh& mesh, MassMode mass, Exec exec = Exec::Parallel);

struct HeatState {
    double t = 0.0;
    Eigen::VectorXd u;
};

/// Implicit Euler: (M + dt K) u_{k+1} = M u_k until t >= T. Returns the
/// full trajectory including the initial state.
std::vector<HeatState> evolve(const OperatorPair& pair, const Eigen::VectorXd& u0,
                              double dt, double T);

struct SupportProfile {
    std::vector<std::pair<double, double>> edge_range;  // (min, max) per edge
    std::vector<int> support;                           // edges with max > theta
};

SupportProfile support_profile(const Mesh& mesh, const HeatState& state, double theta);

/// Interior hat bump of height 1 centered on edge e, zero at endpoints.
Eigen::VectorXd edge_bump(const Mesh& mesh, int e);

struct MaxPrincipleReport {
    bool pass = false;
    bool positivity_on_span = false;
    bool blocked_outside_span = false;
    double min_on_span = 0.0;       // min interior value over span edges at t = T
    double max_off_span = 0.0;      // max |value| outside the span over all steps
    double block_threshold = 0.0;
    std::vector<int> span;
    int start_edge = -1;
    int n = 0;
    double dt = 0.0;
    double T = 0.0;
    double theta = 0.0;
};

/// Strong maximum principle check: heat started as a bump on e0 must be
/// strictly positive on every edge of finite_span(g, e0) at t = T and
/// stay at roundoff scale outside it for every step.
MaxPrincipleReport verify_strong_max_principle(const Graph& g, int e0, int n, double dt,
                                               double T, double theta);

std::string trajectory_csv(const Mesh& mesh, const std::vector<HeatState>& traj);
std::string max_principle_json(const Graph& g, const MaxPrincipleReport& report);

}  // namespace netheat
