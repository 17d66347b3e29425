#include <doctest.h>

#include <cmath>

#include "netheat/connectivity.hpp"
#include "netheat/fixtures.hpp"
#include "netheat/spectral.hpp"

using namespace netheat;
namespace fx = netheat::fixtures;

TEST_CASE("combinatorial Laplacian blocks") {
    Graph p3 = fx::p3();
    CombinatorialLaplacian L = combinatorial_laplacian(p3);
    CHECK(L.v_inf.empty());
    Eigen::MatrixXd expected(4, 4);
    expected << 1, -1, 0, 0,
               -1, 2, -1, 0,
                0, -1, 2, -1,
                0, 0, -1, 1;
    CHECK((L.delta_fin - expected).cwiseAbs().maxCoeff() == 0.0);

    CombinatorialLaplacian Ls = combinatorial_laplacian(fx::star4_inf());
    CHECK(Ls.v_inf.size() == 1);
    CHECK(Ls.delta_fin.rows() == 4);
    CHECK(Ls.delta_fin.cwiseAbs().maxCoeff() == 0.0);

    CombinatorialLaplacian Lk = combinatorial_laplacian(fx::k3pair_inf());
    CHECK(Lk.v_inf.size() == 1);
    CHECK(Lk.delta_fin.rows() == 6);
    for (int i = 0; i < 6; ++i) CHECK(Lk.delta_fin(i, i) == 2.0);
    // no coupling between the two triangles (vertices a* then b*)
    CHECK(Lk.delta_fin.topRightCorner(3, 3).cwiseAbs().maxCoeff() == 0.0);

    // zero row sums, PSD
    for (const auto& [name, g] : fx::gallery()) {
        CAPTURE(name);
        CombinatorialLaplacian L2 = combinatorial_laplacian(g);
        if (L2.delta_fin.rows() == 0) continue;
        CHECK(L2.delta_fin.rowwise().sum().cwiseAbs().maxCoeff() == 0.0);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(L2.delta_fin);
        double norm = es.eigenvalues().cwiseAbs().maxCoeff();
        CHECK(es.eigenvalues()[0] >= -1e-9 * std::max(norm, 1.0));
    }
}

TEST_CASE("parallel edges accumulate in the adjacency") {
    Graph multi = Graph::build({{"a"}, {"b"}},
                               {{"e0", "a", "b"}, {"e1", "a", "b"}, {"e2", "b", "a"}});
    CombinatorialLaplacian L = combinatorial_laplacian(multi);
    CHECK(L.delta_fin(0, 1) == -3.0);
    CHECK(L.delta_fin(0, 0) == 3.0);
}

TEST_CASE("zero multiplicity modes and oracle cross-check") {
    CHECK(zero_multiplicity(combinatorial_laplacian(fx::p3()),
                            MultiplicityMode::FinOnly) == 1);
    CHECK(zero_multiplicity(combinatorial_laplacian(fx::k3pair_inf()),
                            MultiplicityMode::FinOnly) == 2);
    CHECK(zero_multiplicity(combinatorial_laplacian(fx::star4_inf()),
                            MultiplicityMode::WithZeroBlock) == 5);
    CHECK(zero_multiplicity(combinatorial_laplacian(fx::star4_inf()),
                            MultiplicityMode::FinOnly) == 4);
    CHECK_THROWS_AS(zero_multiplicity(combinatorial_laplacian(fx::p3()),
                                      MultiplicityMode::FinOnly, -1.0),
                    GraphError);
}

TEST_CASE("component theorem checker") {
    TheoremReport ok = check_component_theorem(fx::k3pair_inf());
    CHECK(ok.pass);
    CHECK(ok.span_count == 2);
    CHECK(ok.component_count == 2);
    CHECK(ok.kernel_dim == 2);

    TheoremReport p3 = check_component_theorem(fx::p3());
    CHECK(p3.pass);
    CHECK(p3.span_count == 1);

    TheoremReport bad = check_component_theorem(fx::ee_inf());
    CHECK_FALSE(bad.pass);
    CHECK(bad.span_count == 2);
    CHECK(bad.component_count == 1);
    CHECK(bad.kernel_dim == 1);
    REQUIRE(!bad.anomalies.empty());
    CHECK(bad.anomalies[0].find("two flagged vertices") != std::string::npos);
    CHECK(!bad.warnings.empty());
}

TEST_CASE("interval spectra against Sturm-Liouville closed forms") {
    const double pi = std::acos(-1.0);

    // free interval: 0 and pi^2
    Graph single = fx::single();
    OperatorPair nn = assemble(build_mesh(single, 64), MassMode::Lumped);
    auto ev_nn = network_spectrum(nn, 2);
    CHECK(std::abs(ev_nn[0]) <= 1e-10);
    CHECK(std::abs(ev_nn[1] - pi * pi) / (pi * pi) <= 1e-3);

    // Dirichlet-Dirichlet: pi^2
    OperatorPair dd = assemble(build_mesh(fx::single_dd(), 64), MassMode::Lumped);
    auto ev_dd = network_spectrum(dd, 1);
    CHECK(std::abs(ev_dd[0] - pi * pi) / (pi * pi) <= 1e-3);

    // mixed: (pi/2)^2
    OperatorPair dn = assemble(build_mesh(fx::single_d(), 64), MassMode::Lumped);
    auto ev_dn = network_spectrum(dn, 1);
    const double quarter = pi * pi / 4.0;
    CHECK(std::abs(ev_dn[0] - quarter) / quarter <= 1e-3);

    // second-order convergence between n=32 and n=64
    OperatorPair dd32 = assemble(build_mesh(fx::single_dd(), 32), MassMode::Lumped);
    double err32 = std::abs(network_spectrum(dd32, 1)[0] - pi * pi);
    double err64 = std::abs(ev_dd[0] - pi * pi);
    double ratio = err32 / err64;
    CHECK(ratio >= 3.5);
    CHECK(ratio <= 4.5);

    CHECK_THROWS_AS(network_spectrum(dd, 0), GraphError);
    CHECK_THROWS_AS(network_spectrum(dd, 10000), GraphError);
}

TEST_CASE("flag-free graphs: spans, components, kernel all collapse") {
    for (const auto& [name, g] : fx::gallery()) {
        bool flagged = false;
        for (int v = 0; v < g.num_vertices(); ++v) flagged |= g.infinite(v);
        if (flagged || g.num_edges() == 0) continue;
        CAPTURE(name);
        TheoremReport r = check_component_theorem(g);
        CHECK(r.pass);
    }
}
