#include "netheat/incidence_ops.hpp"

#include <cmath>
#include <random>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace netheat {

VertexVector apply(const SparseIncidence& M, const EdgeVector& x, Exec exec) {
    if (x.size() != M.cols)
        throw GraphError("apply: dimension mismatch, expected " + std::to_string(M.cols));
    VertexVector y = VertexVector::Zero(M.rows);
#ifdef _OPENMP
#pragma omp parallel for if (exec == Exec::Parallel && M.rows > 512) schedule(static)
#endif
    for (int v = 0; v < M.rows; ++v) {
        double s = 0.0;
        for (const auto& [e, val] : M.by_row[v]) s += val * x[e];
        y[v] = s;
    }
    (void)exec;
    return y;
}

EdgeVector apply_transpose(const SparseIncidence& M, const VertexVector& d, Exec exec) {
    if (d.size() != M.rows)
        throw GraphError("apply_transpose: dimension mismatch, expected " +
                         std::to_string(M.rows));
    EdgeVector y = EdgeVector::Zero(M.cols);
#ifdef _OPENMP
#pragma omp parallel for if (exec == Exec::Parallel && M.cols > 512) schedule(static)
#endif
    for (int e = 0; e < M.cols; ++e) {
        double s = 0.0;
        for (const auto& [v, val] : M.by_col[e]) s += val * d[v];
        y[e] = s;
    }
    (void)exec;
    return y;
}

static double power_iteration(const SparseIncidence& M, EdgeVector v, double tol) {
    double nv = v.norm();
    if (nv == 0.0) return 0.0;
    v /= nv;
    double sigma_sq = 0.0;
    for (int it = 0; it < 100000; ++it) {
        EdgeVector w = apply_transpose(M, apply(M, v));
        double next = v.dot(w);  // Rayleigh quotient for MᵀM
        double nw = w.norm();
        if (nw == 0.0) return 0.0;
        v = w / nw;
        if (it > 0 && std::abs(next - sigma_sq) <= tol * std::max(next, 1e-300)) {
            sigma_sq = next;
            break;
        }
        sigma_sq = next;
    }
    return std::sqrt(std::max(sigma_sq, 0.0));
}

double operator_norm(const SparseIncidence& M, double tol) {
    if (tol <= 0) throw GraphError("operator_norm: tol must be positive");
    if (M.cols == 0 || M.rows == 0) return 0.0;
    EdgeVector ones = EdgeVector::Ones(M.cols);
    EdgeVector alt(M.cols);
    for (int i = 0; i < M.cols; ++i) alt[i] = (i % 2 == 0) ? 1.0 : -1.0;
    return std::max(power_iteration(M, ones, tol), power_iteration(M, alt, tol));
}

// Dyadic draw: k/2^30 with uniform k. Sums of fewer than 2^23 such
// values are exact in double.
static double draw_dyadic(std::mt19937_64& rng, bool signed_value) {
    std::uniform_int_distribution<std::uint32_t> mag(0, (1u << 30) - 1);
    double x = static_cast<double>(mag(rng)) / static_cast<double>(1u << 30);
    if (signed_value && (rng() & 1)) x = -x;
    return x;
}

static bool column_stochastic_positive(const SparseIncidence& M) {
    for (const auto& col : M.by_col) {
        double s = 0.0;
        for (const auto& [v, val] : col) {
            if (val < 0.0) return false;
            s += val;
        }
        if (s != 1.0) return false;
    }
    return true;
}

ContractionReport verify_contraction_l1_linf(const SparseIncidence& M, int samples,
                                             std::uint64_t seed, Exec exec) {
    if (samples < 1) throw GraphError("verify_contraction: samples must be >= 1");
    ContractionReport report;
    const bool check_l1 = column_stochastic_positive(M);

    std::vector<double> ratios(samples, 0.0);
    std::vector<double> l1_diffs(samples, 0.0);
    std::vector<EdgeVector> bad(samples);

#ifdef _OPENMP
#pragma omp parallel for if (exec == Exec::Parallel && samples >= 64) schedule(static)
#endif
    for (int s = 0; s < samples; ++s) {
        std::mt19937_64 rng(seed + 0x9E3779B97F4A7C15ull * static_cast<std::uint64_t>(s + 1));
        EdgeVector x(M.cols);
        for (int e = 0; e < M.cols; ++e) x[e] = draw_dyadic(rng, true);

        VertexVector y = apply(M, x, Exec::Serial);
        double linf = y.size() ? y.cwiseAbs().maxCoeff() : 0.0;
        double l1 = x.cwiseAbs().sum();
        ratios[s] = l1 > 0.0 ? linf / l1 : 0.0;
        if (linf > l1) bad[s] = x;

        if (check_l1) {
            EdgeVector xp = x.cwiseAbs();
            VertexVector yp = apply(M, xp, Exec::Serial);
            l1_diffs[s] = std::abs(yp.sum() - xp.sum());
            if (l1_diffs[s] != 0.0 && bad[s].size() == 0) bad[s] = xp;
        }
    }
    (void)exec;

    double max_l1_diff = 0.0;
    for (int s = 0; s < samples; ++s) {
        report.max_ratio = std::max(report.max_ratio, ratios[s]);
        max_l1_diff = std::max(max_l1_diff, l1_diffs[s]);
        if (bad[s].size() != 0 && report.counterexample.size() == 0)
            report.counterexample = bad[s];
    }

    bool contraction_ok = report.max_ratio <= 1.0;
    report.rows.push_back({"contraction_linf_le_l1", "samples=" + std::to_string(samples),
                           report.max_ratio, 1.0, contraction_ok});
    if (check_l1) {
        report.rows.push_back({"l1_preserved_on_positive", "samples=" + std::to_string(samples),
                               max_l1_diff, 0.0, max_l1_diff == 0.0});
    }
    report.pass = contraction_ok && (!check_l1 || max_l1_diff == 0.0);
    return report;
}

std::vector<WitnessRow> unbounded_witness(const Graph& g, int flagged_vertex,
                                          const std::vector<int>& k_list) {
    if (flagged_vertex < 0 || flagged_vertex >= g.num_vertices())
        throw GraphError("unbounded_witness: unknown vertex");
    if (!g.infinite(flagged_vertex))
        throw GraphError("unbounded_witness: vertex " + g.vertex_id(flagged_vertex) +
                         " is not flagged infinite");
    std::vector<WitnessRow> table;
    for (int k : k_list) {
        if (k < 1) throw GraphError("unbounded_witness: k must be >= 1");
        std::vector<VertexDecl> vs{{g.vertex_id(flagged_vertex), true}};
        std::vector<EdgeDecl> es;
        for (int i = 1; i <= k; ++i) {
            std::string suffix = std::to_string(1000000 + i).substr(1);
            vs.push_back({"t" + suffix});
            es.push_back({"t" + suffix, "t" + suffix, g.vertex_id(flagged_vertex)});
        }
        Graph trunc = Graph::build(std::move(vs), std::move(es));
        SparseIncidence plus = incidence(trunc, IncidenceKind::Plus);
        EdgeVector x = EdgeVector::Constant(k, 1.0 / std::sqrt(static_cast<double>(k)));
        WitnessRow row;
        row.k = k;
        row.input_norm = x.norm();
        row.output_norm = apply(plus, x).norm();
        table.push_back(row);
    }
    return table;
}

std::string report_csv(const std::vector<ReportRow>& rows) {
    std::ostringstream out;
    out << "test,parameter,observed,bound,pass\n";
    for (const auto& r : rows) {
        char obs[40], bnd[40];
        std::snprintf(obs, sizeof obs, "%.17g", r.observed);
        std::snprintf(bnd, sizeof bnd, "%.17g", r.bound);
        out << r.test << ',' << r.parameter << ',' << obs << ',' << bnd << ','
            << (r.pass ? "true" : "false") << '\n';
    }
    return out.str();
}

}  // namespace netheat
