#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "netheat/graph.hpp"

namespace netheat {

using EdgeVector = Eigen::VectorXd;    // indexed by edge
using VertexVector = Eigen::VectorXd;  // indexed by vertex

/// Kernel execution policy. Parallel uses OpenMP when compiled in and
/// produces bit-identical results to Serial (per-row summation order is
/// fixed).
enum class Exec { Serial, Parallel };

/// y = M x, rows summed in ascending edge order.
VertexVector apply(const SparseIncidence& M, const EdgeVector& x,
                   Exec exec = Exec::Parallel);

/// y = Mᵀ d, columns summed in ascending vertex order.
EdgeVector apply_transpose(const SparseIncidence& M, const VertexVector& d,
                           Exec exec = Exec::Parallel);

/// ‖M‖_{2→2} via power iteration on MᵀM. Deterministic: normalized
/// all-ones start, plus one restart from an alternating vector; the
/// larger estimate wins. tol is relative accuracy, default 1e-10.
double operator_norm(const SparseIncidence& M, double tol = 1e-10);

struct ReportRow {
    std::string test;
    std::string parameter;
    double observed = 0.0;
    double bound = 0.0;
    bool pass = false;
};

struct ContractionReport {
    std::vector<ReportRow> rows;
    double max_ratio = 0.0;
    bool pass = true;
    // first counterexample, if any
    EdgeVector counterexample;
};

/// Seeded check of ‖Mx‖_∞ ≤ ‖x‖₁ over random vectors, with exact
/// ℓ¹-preservation for nonnegative input. Samples are drawn with
/// 30-bit dyadic mantissas so all sums in the check are exact doubles.
ContractionReport verify_contraction_l1_linf(const SparseIncidence& M, int samples,
                                             std::uint64_t seed,
                                             Exec exec = Exec::Parallel);

struct WitnessRow {
    int k = 0;
    double input_norm = 1.0;
    double output_norm = 0.0;
};

/// Truncation study at a flagged vertex: for each k builds a k-edge
/// inbound star at that vertex and pushes the normalized indicator
/// through I⁺. Output norms must be √k and increase with k.
std::vector<WitnessRow> unbounded_witness(const Graph& g, int flagged_vertex,
                                          const std::vector<int>& k_list);

std::string report_csv(const std::vector<ReportRow>& rows);

}  // namespace netheat
