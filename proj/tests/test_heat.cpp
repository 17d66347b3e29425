#include <doctest.h>

#include <set>

#include "netheat/connectivity.hpp"
#include "netheat/fixtures.hpp"
#include "netheat/heat.hpp"

using namespace netheat;
namespace fx = netheat::fixtures;

TEST_CASE("mesh DOF counting") {
    Graph single = fx::single();
    CHECK(build_mesh(single, 4).n_dof == 5);
    CHECK(build_mesh(fx::single_dd(), 4).n_dof == 3);
    CHECK(build_mesh(fx::star4_inf(), 2).n_dof == 8);
    CHECK_THROWS_AS(build_mesh(single, 1), GraphError);
}

TEST_CASE("hand-assembled operators on SINGLE") {
    Graph single = fx::single();
    Mesh mesh = build_mesh(single, 2);
    OperatorPair pair = assemble(mesh, MassMode::Lumped);
    REQUIRE(mesh.n_dof == 3);
    // DOF order: vertices a,b then the midpoint
    Eigen::MatrixXd K(pair.K);
    Eigen::MatrixXd expected(3, 3);
    expected << 2, 0, -2,
                0, 2, -2,
               -2, -2, 4;
    CHECK((K - expected).cwiseAbs().maxCoeff() == 0.0);
    Eigen::MatrixXd M(pair.M);
    CHECK(M(0, 0) == 0.25);
    CHECK(M(1, 1) == 0.25);
    CHECK(M(2, 2) == 0.5);
    CHECK(Eigen::MatrixXd(M).diagonal().sum() == 1.0);

    // both endpoints Dirichlet: a single interior DOF with stencil sum 4
    Mesh mdd = build_mesh(fx::single_dd(), 2);
    OperatorPair pdd = assemble(mdd, MassMode::Lumped);
    REQUIRE(mdd.n_dof == 1);
    CHECK(Eigen::MatrixXd(pdd.K)(0, 0) == 4.0);
}

TEST_CASE("stiffness is symmetric PSD with constants in the kernel") {
    for (const auto& [name, g] : fx::gallery()) {
        CAPTURE(name);
        if (g.num_edges() == 0) continue;
        Mesh mesh = build_mesh(g, 8);
        OperatorPair pair = assemble(mesh, MassMode::Lumped);
        Eigen::MatrixXd K(pair.K);
        CHECK((K - K.transpose()).cwiseAbs().maxCoeff() <= 1e-14);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(K);
        CHECK(es.eigenvalues()[0] >= -1e-12 * es.eigenvalues().cwiseAbs().maxCoeff());

        // indicator of each flag-free span block lies in ker K
        SpanPartition part = delta_components(g);
        for (const auto& block : part.blocks) {
            if (!block.boundary.empty()) continue;  // touches a flagged vertex
            Eigen::VectorXd ind = Eigen::VectorXd::Zero(mesh.n_dof);
            for (int e : block.edges)
                for (int dof : mesh.dof[e])
                    if (dof >= 0) ind[dof] = 1.0;
            CHECK((K * ind).cwiseAbs().maxCoeff() <= 1e-12);
        }
    }
}

TEST_CASE("no coupling between different span blocks") {
    for (const auto& [name, g] : fx::gallery()) {
        CAPTURE(name);
        if (g.num_edges() == 0) continue;
        Mesh mesh = build_mesh(g, 4);
        SpanPartition part = delta_components(g);
        std::vector<int> dof_block(mesh.n_dof, -1);
        for (int e = 0; e < g.num_edges(); ++e)
            for (int dof : mesh.dof[e])
                if (dof >= 0) dof_block[dof] = part.block_of[e];
        for (auto mass : {MassMode::Lumped, MassMode::Consistent}) {
            OperatorPair pair = assemble(mesh, mass);
            for (const auto& mat : {pair.K, pair.M}) {
                for (int col = 0; col < mat.outerSize(); ++col)
                    for (Eigen::SparseMatrix<double>::InnerIterator it(mat, col); it; ++it)
                        if (it.value() != 0.0)
                            CHECK(dof_block[it.row()] == dof_block[it.col()]);
            }
        }
    }
}

TEST_CASE("implicit Euler: zero data, conservation, Dirichlet decay") {
    Graph single = fx::single();
    Mesh mesh = build_mesh(single, 8);
    OperatorPair pair = assemble(mesh, MassMode::Lumped);

    auto zero_traj = evolve(pair, Eigen::VectorXd::Zero(mesh.n_dof), 1e-2, 0.1);
    for (const auto& state : zero_traj) CHECK(state.u.isZero(0.0));

    Eigen::VectorXd u0(mesh.n_dof);
    for (int i = 0; i < mesh.n_dof; ++i) u0[i] = 0.1 * i + 0.3;
    auto traj = evolve(pair, u0, 1e-2, 0.2);
    const double total0 = (pair.M * traj.front().u).sum();
    for (const auto& state : traj) {
        const double total = (pair.M * state.u).sum();
        CHECK(total == doctest::Approx(total0).epsilon(1e-12));
    }

    // Dirichlet at both ends: norm decays monotonically to ~0
    Graph dd = fx::single_dd();
    Mesh mesh_dd = build_mesh(dd, 16);
    OperatorPair pair_dd = assemble(mesh_dd, MassMode::Lumped);
    Eigen::VectorXd bump = edge_bump(mesh_dd, 0);
    auto traj_dd = evolve(pair_dd, bump, 1e-2, 1.0);
    for (size_t i = 1; i < traj_dd.size(); ++i)
        CHECK(traj_dd[i].u.norm() < traj_dd[i - 1].u.norm());
    // lambda_1 ~ pi^2 decay leaves nearly nothing after t=1
    CHECK(traj_dd.back().u.norm() < 1e-3 * bump.norm());

    CHECK_THROWS_AS(evolve(pair, u0, -1.0, 1.0), GraphError);
    Eigen::VectorXd nan_u0 = u0;
    nan_u0[0] = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(evolve(pair, nan_u0, 1e-2, 0.1), GraphError);
}

TEST_CASE("positivity preservation with lumped mass") {
    for (const auto& [name, g] : fx::gallery()) {
        CAPTURE(name);
        if (g.num_edges() == 0) continue;
        Mesh mesh = build_mesh(g, 8);
        OperatorPair pair = assemble(mesh, MassMode::Lumped);
        Eigen::VectorXd u0 = edge_bump(mesh, 0);
        auto traj = evolve(pair, u0, 1e-3, 0.1);
        for (const auto& state : traj) CHECK(state.u.minCoeff() >= -1e-14);
    }
}

TEST_CASE("one step makes a connected flag-free mesh strictly positive") {
    for (const auto& name : {"p3", "single", "star4"}) {
        Graph g = [&] {
            for (auto& [n, gr] : fx::gallery())
                if (n == name) return gr;
            throw std::runtime_error("fixture not found");
        }();
        CAPTURE(name);
        Mesh mesh = build_mesh(g, 8);
        OperatorPair pair = assemble(mesh, MassMode::Lumped);
        Eigen::VectorXd u0 = edge_bump(mesh, 0);
        auto traj = evolve(pair, u0, 1e-2, 1e-2);
        CHECK(traj.back().u.minCoeff() > 0.0);
    }
}

TEST_CASE("support profile") {
    Graph p3 = fx::p3();
    Mesh mesh = build_mesh(p3, 8);
    OperatorPair pair = assemble(mesh, MassMode::Lumped);

    HeatState zero{0.0, Eigen::VectorXd::Zero(mesh.n_dof)};
    CHECK(support_profile(mesh, zero, 1e-10).support.empty());

    auto traj = evolve(pair, edge_bump(mesh, p3.edge_index("e0")), 1e-3, 0.1);
    SupportProfile prof = support_profile(mesh, traj.back(), 1e-10);
    CHECK(prof.support.size() == 3);  // heat reaches every edge
}

TEST_CASE("strong maximum principle reports") {
    Graph p3 = fx::p3();
    MaxPrincipleReport r1 =
        verify_strong_max_principle(p3, p3.edge_index("e0"), 16, 1e-3, 0.1, 1e-10);
    CHECK(r1.pass);
    CHECK(r1.span.size() == 3);
    CHECK(r1.min_on_span > 0.0);

    Graph k3 = fx::k3pair_inf();
    MaxPrincipleReport r2 =
        verify_strong_max_principle(k3, k3.edge_index("ea1"), 16, 1e-3, 0.1, 1e-10);
    CHECK(r2.pass);
    CHECK(r2.span.size() == 4);
    CHECK(r2.max_off_span <= r2.block_threshold);

    Graph star = fx::star4_inf();
    MaxPrincipleReport r3 =
        verify_strong_max_principle(star, star.edge_index("e1"), 16, 1e-3, 0.1, 1e-10);
    CHECK(r3.pass);
    CHECK(r3.span.size() == 1);
}

TEST_CASE("serial and parallel assembly agree bit for bit") {
    Graph k3 = fx::k3pair_inf();
    Mesh mesh = build_mesh(k3, 16);
    for (auto mass : {MassMode::Lumped, MassMode::Consistent}) {
        OperatorPair serial = assemble(mesh, mass, Exec::Serial);
        OperatorPair parallel = assemble(mesh, mass, Exec::Parallel);
        CHECK((serial.K - parallel.K).norm() == 0.0);
        CHECK((serial.M - parallel.M).norm() == 0.0);
    }
}
