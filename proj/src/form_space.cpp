#include "netheat/form_space.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "netheat/io.hpp"

namespace netheat {

double EdgeFunction::max_abs() const {
    double m = 0.0;
    for (const auto& edge : samples)
        for (double v : edge) m = std::max(m, std::abs(v));
    return m;
}

EdgeFunction EdgeFunction::zero(const Graph& g, int n) {
    if (n < 1) throw GraphError("EdgeFunction: need at least one segment per edge");
    EdgeFunction f;
    f.samples.assign(g.num_edges(), std::vector<double>(n + 1, 0.0));
    f.trace = Eigen::VectorXd::Zero(g.num_vertices());
    return f;
}

EdgeFunction EdgeFunction::constant(const Graph& g, int n, double value) {
    EdgeFunction f = zero(g, n);
    for (auto& edge : f.samples) std::fill(edge.begin(), edge.end(), value);
    f.trace = Eigen::VectorXd::Constant(g.num_vertices(), value);
    return f;
}

static void check_shape(const Graph& g, const EdgeFunction& psi) {
    if (static_cast<int>(psi.samples.size()) != g.num_edges())
        throw GraphError("edge function does not cover every edge");
    for (const auto& edge : psi.samples)
        if (edge.size() < 2) throw GraphError("edge function needs >= 2 samples per edge");
}

TraceResult vertex_trace(const Graph& g, const EdgeFunction& psi, double tau) {
    check_shape(g, psi);
    TraceResult result;
    result.trace = Eigen::VectorXd::Zero(g.num_vertices());
    const double tol = tau * psi.max_abs();
    result.ok = true;
    for (int v = 0; v < g.num_vertices(); ++v) {
        bool first = true;
        double lo = 0.0, hi = 0.0, rep = 0.0;
        for (int e : g.incident_edges(v)) {
            double val = (g.head(e) == v) ? psi.samples[e].back() : psi.samples[e].front();
            if (first) {
                rep = lo = hi = val;
                first = false;
            } else {
                lo = std::min(lo, val);
                hi = std::max(hi, val);
            }
        }
        if (first) continue;  // isolated vertex, trace 0
        if (hi - lo > tol) {
            result.ok = false;
            result.violations.push_back({v, lo, hi});
        }
        result.trace[v] = rep;
    }
    return result;
}

DomainVerdict in_form_domain(const Graph& g, const EdgeFunction& psi, double tau) {
    DomainVerdict verdict;
    TraceResult tr = vertex_trace(g, psi, tau);
    if (!tr.ok) {
        for (const auto& viol : tr.violations) {
            std::ostringstream msg;
            msg << "continuity violation at vertex " << g.vertex_id(viol.vertex)
                << " (values in [" << viol.lo << ", " << viol.hi << "])";
            verdict.violations.push_back(msg.str());
        }
        return verdict;
    }
    const double tol = tau * std::max(1.0, psi.max_abs());
    bool dirichlet_ok = true;
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (g.infinite(v) && std::abs(tr.trace[v]) > tol) {
            dirichlet_ok = false;
            verdict.violations.push_back("nonzero trace at flagged vertex " + g.vertex_id(v));
        }
    }
    verdict.in_domain = dirichlet_ok;
    return verdict;
}

EdgeFunction tent_function(const Graph& g, int v, double lambda, int n) {
    if (v < 0 || v >= g.num_vertices()) throw GraphError("tent_function: unknown vertex");
    if (g.infinite(v))
        throw GraphError("tent_function: vertex " + g.vertex_id(v) +
                         " is flagged infinite, tent would leave the form domain");
    if (lambda == 0.0) throw GraphError("tent_function: lambda must be nonzero");
    if (n < 2) throw GraphError("tent_function: need n >= 2 samples per edge");

    EdgeFunction psi = EdgeFunction::zero(g, n);
    for (int e = 0; e < g.num_edges(); ++e) {
        if (g.tail(e) == v) {
            for (int j = 0; j <= n; ++j)
                psi.samples[e][j] = lambda * (1.0 - static_cast<double>(j) / n);
        } else if (g.head(e) == v) {
            for (int j = 0; j <= n; ++j)
                psi.samples[e][j] = lambda * (static_cast<double>(j) / n);
        }
    }
    (*psi.trace)[v] = lambda;
    return psi;
}

FunctionNorms norms(const EdgeFunction& psi) {
    FunctionNorms result;
    for (const auto& edge : psi.samples) {
        const int n = static_cast<int>(edge.size()) - 1;
        const double h = 1.0 / n;
        for (int j = 0; j < n; ++j) {
            const double a = edge[j];
            const double b = edge[j + 1];
            result.l2_sq += h * (a * a + a * b + b * b) / 3.0;
            result.h1_semi_sq += (b - a) * (b - a) / h;
        }
    }
    result.h1_sq = result.l2_sq + result.h1_semi_sq;
    return result;
}

double l2_inner(const EdgeFunction& a, const EdgeFunction& b) {
    if (a.samples.size() != b.samples.size())
        throw GraphError("l2_inner: edge count mismatch");
    double s = 0.0;
    for (size_t e = 0; e < a.samples.size(); ++e) {
        if (a.samples[e].size() != b.samples[e].size())
            throw GraphError("l2_inner: sample count mismatch");
        const int n = static_cast<int>(a.samples[e].size()) - 1;
        const double h = 1.0 / n;
        for (int j = 0; j < n; ++j) {
            const double a0 = a.samples[e][j], a1 = a.samples[e][j + 1];
            const double b0 = b.samples[e][j], b1 = b.samples[e][j + 1];
            s += h / 6.0 * (2 * a0 * b0 + a0 * b1 + a1 * b0 + 2 * a1 * b1);
        }
    }
    return s;
}

EdgeFunction project_ideal(const Graph& g, const EdgeFunction& psi, const Subgraph& sub) {
    check_shape(g, psi);
    if (sub.parent != &g) throw GraphError("project_ideal: subgraph of a different graph");
    EdgeFunction proj;
    proj.samples = psi.samples;
    for (int e = 0; e < g.num_edges(); ++e)
        if (!sub.has_edge(e)) std::fill(proj.samples[e].begin(), proj.samples[e].end(), 0.0);
    TraceResult tr = vertex_trace(g, proj);
    if (tr.ok)
        proj.trace = tr.trace;
    else
        proj.trace.reset();
    return proj;
}

EdgeFunction random_form_function(const Graph& g, int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> mag(0.5, 1.5);
    std::uniform_real_distribution<double> bubble(-0.3, 0.3);
    Eigen::VectorXd trace = Eigen::VectorXd::Zero(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v)
        if (!g.infinite(v)) trace[v] = ((rng() & 1) ? 1.0 : -1.0) * mag(rng);

    EdgeFunction psi = EdgeFunction::zero(g, n);
    for (int e = 0; e < g.num_edges(); ++e) {
        const double a = trace[g.tail(e)];
        const double b = trace[g.head(e)];
        for (int j = 0; j <= n; ++j) {
            const double t = static_cast<double>(j) / n;
            psi.samples[e][j] = a + (b - a) * t;
            if (j > 0 && j < n) psi.samples[e][j] += bubble(rng);
        }
    }
    psi.trace = trace;
    return psi;
}

InvarianceReport check_invariance(const Graph& g, const Subgraph& sub, int trials,
                                  std::uint64_t seed) {
    if (sub.parent != &g) throw GraphError("check_invariance: subgraph of a different graph");
    InvarianceReport report;
    report.trials = trials;

    // Structural verdict: boundary vertices that carry at least one
    // subgraph edge must be flagged. Boundary vertices with no subgraph
    // edge contribute nothing to the ideal and are exempt.
    bool structural = true;
    for (int v : sub.boundary) {
        bool carries_edge = false;
        for (int e : g.incident_edges(v))
            if (sub.has_edge(e)) { carries_edge = true; break; }
        if (carries_edge && !g.infinite(v)) {
            structural = false;
            report.notes.push_back("unflagged boundary vertex " + g.vertex_id(v) +
                                   " breaks continuity under projection");
        }
    }
    report.invariant = structural;

    std::mt19937_64 rng(seed);
    int disagreements = 0;
    for (int t = 0; t < trials; ++t) {
        EdgeFunction psi = random_form_function(g, 4, rng);
        EdgeFunction proj = project_ideal(g, psi, sub);
        bool projected_in_domain = in_form_domain(g, proj).in_domain;
        if (projected_in_domain != structural) ++disagreements;

        // form-orthogonality via disjoint supports: an edge is nonzero
        // in at most one of P psi, (1-P) psi
        for (int e = 0; e < g.num_edges(); ++e) {
            bool in_proj = sub.has_edge(e);
            for (size_t j = 0; j < psi.samples[e].size(); ++j) {
                const double kept = proj.samples[e][j];
                const double dropped = psi.samples[e][j] - proj.samples[e][j];
                if (in_proj ? dropped != 0.0 : kept != 0.0) {
                    report.notes.push_back("support overlap at edge " + g.edge_id(e));
                    ++disagreements;
                    break;
                }
            }
        }
    }
    report.disagreements = disagreements;
    report.corroborated = disagreements == 0;
    return report;
}

std::string edge_function_csv(const Graph& g, const EdgeFunction& psi) {
    std::ostringstream out;
    out << "edge_id,sample_index,x,value\n";
    for (int e = 0; e < g.num_edges(); ++e) {
        const int n = static_cast<int>(psi.samples[e].size()) - 1;
        for (int j = 0; j <= n; ++j) {
            out << g.edge_id(e) << ',' << j << ','
                << io::format_double(static_cast<double>(j) / n) << ','
                << io::format_double(psi.samples[e][j]) << '\n';
        }
    }
    return out.str();
}

}  // namespace netheat
