#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "netheat/graph.hpp"

namespace netheat {

/// Piecewise-affine function on the network: per edge e, n_e+1 samples
/// on the uniform grid of [0,1]. sample[0] sits at the tail, the last
/// sample at the head. May carry a vertex trace.
struct EdgeFunction {
    std::vector<std::vector<double>> samples;
    std::optional<Eigen::VectorXd> trace;

    double max_abs() const;
    static EdgeFunction zero(const Graph& g, int n);
    static EdgeFunction constant(const Graph& g, int n, double value);
};

struct TraceViolation {
    int vertex = -1;
    double lo = 0.0;
    double hi = 0.0;
};

struct TraceResult {
    bool ok = false;
    Eigen::VectorXd trace;
    std::vector<TraceViolation> violations;
};

/// Common endpoint value at every vertex, within tau * max|psi| spread.
/// Isolated vertices get trace 0.
TraceResult vertex_trace(const Graph& g, const EdgeFunction& psi, double tau = 1e-9);

struct DomainVerdict {
    bool in_domain = false;
    std::vector<std::string> violations;
};

/// Membership in the form domain: continuous trace exists and vanishes
/// at every flagged vertex.
DomainVerdict in_form_domain(const Graph& g, const EdgeFunction& psi, double tau = 1e-9);

/// Affine tent: lambda at v, 0 at every other vertex. Rejects flagged
/// vertices and lambda = 0.
EdgeFunction tent_function(const Graph& g, int v, double lambda, int n);

struct FunctionNorms {
    double l2_sq = 0.0;
    double h1_semi_sq = 0.0;
    double h1_sq = 0.0;
};

/// Exact quadrature for piecewise-affine data.
FunctionNorms norms(const EdgeFunction& psi);

double l2_inner(const EdgeFunction& a, const EdgeFunction& b);

/// Zero outside sub's edges, samples kept inside; trace recomputed and
/// dropped if continuity breaks.
EdgeFunction project_ideal(const Graph& g, const EdgeFunction& psi, const Subgraph& sub);

struct InvarianceReport {
    bool invariant = false;        // structural verdict
    bool corroborated = false;     // randomized trials agreed
    int trials = 0;
    int disagreements = 0;
    std::vector<std::string> notes;
};

/// Ouhabaz-style invariance check for the ideal over an induced
/// subgraph. Structural: every boundary vertex carrying a subgraph edge
/// is flagged. Randomized: projections of random form-domain functions
/// stay in the domain iff the structural verdict holds; disjoint
/// supports make the form-orthogonality condition exact.
InvarianceReport check_invariance(const Graph& g, const Subgraph& sub, int trials,
                                  std::uint64_t seed);

/// Random member of the form domain: random trace (zero at flagged
/// vertices, bounded away from zero elsewhere), affine extension, plus
/// interior bubbles vanishing at the endpoints.
EdgeFunction random_form_function(const Graph& g, int n, std::mt19937_64& rng);

std::string edge_function_csv(const Graph& g, const EdgeFunction& psi);

}  // namespace netheat
