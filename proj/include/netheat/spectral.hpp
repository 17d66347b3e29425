#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "netheat/graph.hpp"
#include "netheat/heat.hpp"

namespace netheat {

/// Δ = Δ_fin ⊕ 0: the combinatorial Laplacian D - A of the finite part
/// G_fin (orientation dropped, parallel edges summed), plus a zero
/// block over the flagged vertices.
struct CombinatorialLaplacian {
    Eigen::MatrixXd delta_fin;   // indexed by position in v_fin
    std::vector<int> v_fin;      // ascending vertex indices, infinite = false
    std::vector<int> v_inf;      // ascending vertex indices, infinite = true
};

CombinatorialLaplacian combinatorial_laplacian(const Graph& g);

enum class MultiplicityMode { FinOnly, WithZeroBlock };

/// dim ker Δ_fin (FinOnly) or dim ker Δ_fin + |V_inf| (WithZeroBlock).
/// The numeric kernel dimension (eigenvalues below tol * ||Δ_fin||) is
/// cross-checked against the union-find component count of G_fin read
/// off the matrix pattern; a mismatch throws.
int zero_multiplicity(const CombinatorialLaplacian& L, MultiplicityMode mode,
                      double tol = 1e-9);

struct TheoremReport {
    int span_count = 0;       // distinct finite spans
    int component_count = 0;  // components of G_fin, isolated vertices included
    int kernel_dim = 0;       // dim ker Δ_fin
    bool pass = false;
    std::vector<std::string> anomalies;
    std::vector<std::string> warnings;
};

/// Checks span count == G_fin component count == dim ker Δ_fin, and
/// classifies the failure causes (flagged-flagged edges, vertices the
/// finite part isolates) when they differ.
TheoremReport check_component_theorem(const Graph& g, double tol = 1e-9);

/// k smallest eigenvalues of K u = λ M u, ascending.
std::vector<double> network_spectrum(const OperatorPair& pair, int k, double tol = 1e-9);

std::string laplacian_json(const Graph& g, const CombinatorialLaplacian& L);
std::string theorem_report_json(const TheoremReport& report);
std::string spectrum_csv(const std::vector<double>& eigenvalues);

}  // namespace netheat
