#include "netheat/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "netheat/connectivity.hpp"
#include "netheat/io.hpp"

namespace netheat {

CombinatorialLaplacian combinatorial_laplacian(const Graph& g) {
    CombinatorialLaplacian L;
    for (int v = 0; v < g.num_vertices(); ++v)
        (g.infinite(v) ? L.v_inf : L.v_fin).push_back(v);

    const int m = static_cast<int>(L.v_fin.size());
    std::vector<int> pos(g.num_vertices(), -1);
    for (int i = 0; i < m; ++i) pos[L.v_fin[i]] = i;

    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(m, m);
    Subgraph fin = finite_part(g);
    for (int e : fin.edges) {
        const int i = pos[g.tail(e)];
        const int j = pos[g.head(e)];
        A(i, j) += 1.0;  // parallel edges accumulate
        A(j, i) += 1.0;
    }
    Eigen::VectorXd deg = A.rowwise().sum();
    L.delta_fin = Eigen::MatrixXd(deg.asDiagonal()) - A;
    return L;
}

static int pattern_component_count(const Eigen::MatrixXd& delta_fin) {
    const int m = static_cast<int>(delta_fin.rows());
    UnionFind uf(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (delta_fin(i, j) != 0.0) uf.unite(i, j);
    return m == 0 ? 0 : uf.group_count();
}

int zero_multiplicity(const CombinatorialLaplacian& L, MultiplicityMode mode, double tol) {
    if (tol <= 0) throw GraphError("zero_multiplicity: tol must be positive");
    const int m = static_cast<int>(L.delta_fin.rows());
    const int oracle = pattern_component_count(L.delta_fin);

    int numeric = 0;
    if (m > 0) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(L.delta_fin);
        if (solver.info() != Eigen::Success)
            throw GraphError("zero_multiplicity: eigensolve failed");
        const Eigen::VectorXd& ev = solver.eigenvalues();
        const double norm = std::max(std::abs(ev[0]), std::abs(ev[m - 1]));
        if (norm == 0.0) {
            numeric = m;  // zero matrix, all of ker
        } else {
            const double threshold = tol * norm;
            for (int i = 0; i < m; ++i)
                if (std::abs(ev[i]) <= threshold) ++numeric;
        }
    }

    if (numeric != oracle) {
        std::ostringstream msg;
        msg << "zero_multiplicity: numeric kernel dimension " << numeric
            << " disagrees with union-find component count " << oracle;
        throw GraphError(msg.str());
    }
    int count = numeric;
    if (mode == MultiplicityMode::WithZeroBlock) count += static_cast<int>(L.v_inf.size());
    return count;
}

TheoremReport check_component_theorem(const Graph& g, double tol) {
    TheoremReport report;
    report.span_count = static_cast<int>(delta_components(g).blocks.size());

    Subgraph fin = finite_part(g);
    {
        const int m = static_cast<int>(fin.vertices.size());
        std::vector<int> pos(g.num_vertices(), -1);
        for (int i = 0; i < m; ++i) pos[fin.vertices[i]] = i;
        UnionFind uf(m);
        for (int e : fin.edges) uf.unite(pos[g.tail(e)], pos[g.head(e)]);
        report.component_count = m == 0 ? 0 : uf.group_count();
    }

    CombinatorialLaplacian L = combinatorial_laplacian(g);
    report.kernel_dim = zero_multiplicity(L, MultiplicityMode::FinOnly, tol);

    for (int e = 0; e < g.num_edges(); ++e)
        if (g.infinite(g.tail(e)) && g.infinite(g.head(e)))
            report.warnings.push_back("edge between two flagged vertices: " + g.edge_id(e));
    for (int v = 0; v < g.num_vertices(); ++v)
        if (!g.infinite(v) && g.degree(v).total == 0)
            report.warnings.push_back("isolated vertex with no edges: " + g.vertex_id(v));

    report.pass = report.span_count == report.component_count &&
                  report.component_count == report.kernel_dim;
    if (!report.pass) {
        for (int e = 0; e < g.num_edges(); ++e)
            if (g.infinite(g.tail(e)) && g.infinite(g.head(e)))
                report.anomalies.push_back(
                    "edge between two flagged vertices forms a span invisible to G_fin: " +
                    g.edge_id(e));
        for (int v = 0; v < g.num_vertices(); ++v)
            if (!g.infinite(v) && g.degree(v).total == 0)
                report.anomalies.push_back(
                    "edgeless vertex counts as a G_fin component but spans no edge: " +
                    g.vertex_id(v));
    }
    return report;
}

std::vector<double> network_spectrum(const OperatorPair& pair, int k, double tol) {
    (void)tol;
    const int n = static_cast<int>(pair.K.rows());
    if (k < 1) throw GraphError("network_spectrum: k must be >= 1");
    if (k > n) throw GraphError("network_spectrum: k exceeds DOF count");
    Eigen::MatrixXd K = Eigen::MatrixXd(pair.K);
    Eigen::MatrixXd M = Eigen::MatrixXd(pair.M);
    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> solver(K, M);
    if (solver.info() != Eigen::Success)
        throw GraphError("network_spectrum: generalized eigensolve failed");
    const Eigen::VectorXd& ev = solver.eigenvalues();  // ascending
    return std::vector<double>(ev.data(), ev.data() + k);
}

std::string laplacian_json(const Graph& g, const CombinatorialLaplacian& L) {
    nlohmann::ordered_json doc;
    doc["v_fin"] = nlohmann::ordered_json::array();
    for (int v : L.v_fin) doc["v_fin"].push_back(g.vertex_id(v));
    doc["v_inf"] = nlohmann::ordered_json::array();
    for (int v : L.v_inf) doc["v_inf"].push_back(g.vertex_id(v));
    doc["delta_fin"] = nlohmann::ordered_json::array();
    for (int i = 0; i < L.delta_fin.rows(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (int j = 0; j < L.delta_fin.cols(); ++j) row.push_back(L.delta_fin(i, j));
        doc["delta_fin"].push_back(row);
    }
    return doc.dump(2) + "\n";
}

std::string theorem_report_json(const TheoremReport& report) {
    nlohmann::ordered_json doc;
    doc["span_count"] = report.span_count;
    doc["component_count"] = report.component_count;
    doc["kernel_dim"] = report.kernel_dim;
    doc["pass"] = report.pass;
    doc["anomalies"] = report.anomalies;
    doc["warnings"] = report.warnings;
    return doc.dump(2) + "\n";
}

std::string spectrum_csv(const std::vector<double>& eigenvalues) {
    std::ostringstream out;
    out << "index,eigenvalue\n";
    for (size_t i = 0; i < eigenvalues.size(); ++i)
        out << i << ',' << io::format_double(eigenvalues[i]) << '\n';
    return out.str();
}

}  // namespace netheat
