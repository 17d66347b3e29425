#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "netheat/connectivity.hpp"
#include "netheat/fixtures.hpp"
#include "netheat/form_space.hpp"
#include "netheat/graph.hpp"
#include "netheat/heat.hpp"
#include "netheat/incidence_ops.hpp"
#include "netheat/io.hpp"
#include "netheat/spectral.hpp"

namespace fs = std::filesystem;
using namespace netheat;

namespace {

struct RunConfig {
    std::string input;
    std::string edge;
    int n = 32;
    double dt = 1e-3;
    double T = 0.1;
    double tol = 1e-9;
    double theta = 1e-10;  // support threshold, relative to ||u0||_inf
    int samples = 1000;
    int k = 6;
    std::uint64_t seed = 0;
    std::string mass = "lumped";
    std::string mode = "fin";
    std::string out = "./out";
};

Graph load(const RunConfig& cfg) { return io::load_graph(cfg.input); }

fs::path out_dir(const RunConfig& cfg) {
    fs::path dir(cfg.out);
    fs::create_directories(dir);
    return dir;
}

int cmd_components(const RunConfig& cfg) {
    Graph g = load(cfg);
    SpanPartition part = delta_components(g);
    bool irreducible = g.num_edges() > 0 && part.blocks.size() == 1;
    std::string doc = partition_json(g, part, irreducible);
    io::atomic_write(out_dir(cfg) / "components.json", doc);
    std::cout << doc;
    return 0;
}

int cmd_irreducible(const RunConfig& cfg) {
    Graph g = load(cfg);
    IrreducibilityVerdict verdict = is_irreducible(g);
    nlohmann::ordered_json doc;
    doc["irreducible"] = verdict.irreducible;
    doc["block_count"] = verdict.block_count;
    if (!verdict.irreducible) {
        doc["certificate"]["edge_a"] = g.edge_id(verdict.edge_a);
        doc["certificate"]["edge_b"] = g.edge_id(verdict.edge_b);
        doc["certificate"]["separator"] = nlohmann::ordered_json::array();
        for (int v : verdict.separator)
            doc["certificate"]["separator"].push_back(g.vertex_id(v));
    }
    std::string text = doc.dump(2) + "\n";
    io::atomic_write(out_dir(cfg) / "irreducible.json", text);
    std::cout << text;
    return 0;
}

int cmd_ideals(const RunConfig& cfg) {
    Graph g = load(cfg);
    nlohmann::ordered_json doc;
    doc["invariant_ideals"] = count_invariant_ideals(g);
    std::string text = doc.dump(2) + "\n";
    io::atomic_write(out_dir(cfg) / "ideals.json", text);
    std::cout << text;
    return 0;
}

int cmd_spectrum(const RunConfig& cfg) {
    Graph g = load(cfg);
    Mesh mesh = build_mesh(g, cfg.n);
    MassMode mass = cfg.mass == "consistent" ? MassMode::Consistent : MassMode::Lumped;
    OperatorPair pair = assemble(mesh, mass);
    int k = std::min(cfg.k, mesh.n_dof);
    if (k < 1) throw GraphError("spectrum: mesh has no degrees of freedom");
    auto ev = network_spectrum(pair, k, cfg.tol);
    std::string text = spectrum_csv(ev);
    io::atomic_write(out_dir(cfg) / "spectrum.csv", text);
    std::cout << text;
    return 0;
}

int cmd_laplacian(const RunConfig& cfg) {
    Graph g = load(cfg);
    CombinatorialLaplacian L = combinatorial_laplacian(g);
    MultiplicityMode mode = cfg.mode == "full" ? MultiplicityMode::WithZeroBlock
                                               : MultiplicityMode::FinOnly;
    std::string text = laplacian_json(g, L);
    auto doc = nlohmann::ordered_json::parse(text);
    doc["zero_multiplicity"] = zero_multiplicity(L, mode, cfg.tol);
    doc["mode"] = cfg.mode;
    text = doc.dump(2) + "\n";
    io::atomic_write(out_dir(cfg) / "laplacian.json", text);
    std::cout << text;
    return 0;
}

int cmd_check_theorem(const RunConfig& cfg) {
    Graph g = load(cfg);
    TheoremReport report = check_component_theorem(g, cfg.tol);
    std::string text = theorem_report_json(report);
    io::atomic_write(out_dir(cfg) / "theorem.json", text);
    std::cout << text;
    return report.pass ? 0 : 1;
}

int cmd_simulate(const RunConfig& cfg) {
    Graph g = load(cfg);
    if (cfg.edge.empty()) throw CLI::ValidationError("--edge is required for simulate");
    int e0 = g.edge_index(cfg.edge);

    Mesh mesh = build_mesh(g, cfg.n);
    OperatorPair pair = assemble(
        mesh, cfg.mass == "consistent" ? MassMode::Consistent : MassMode::Lumped);
    Eigen::VectorXd u0 = edge_bump(mesh, e0);
    auto traj = evolve(pair, u0, cfg.dt, cfg.T);

    MaxPrincipleReport report =
        verify_strong_max_principle(g, e0, cfg.n, cfg.dt, cfg.T, cfg.theta);

    auto dir = out_dir(cfg);
    io::atomic_write(dir / "trajectory.csv", trajectory_csv(mesh, traj));
    std::string text = max_principle_json(g, report);
    io::atomic_write(dir / "max_principle.json", text);
    std::cout << text;
    return report.pass ? 0 : 1;
}

int cmd_verify_incidence(const RunConfig& cfg) {
    Graph g = load(cfg);
    std::vector<ReportRow> rows;
    bool all_pass = true;

    for (auto kind : {IncidenceKind::Plus, IncidenceKind::Minus}) {
        const char* name = kind == IncidenceKind::Plus ? "I+" : "I-";
        SparseIncidence M = incidence(g, kind);

        ContractionReport contraction = verify_contraction_l1_linf(M, cfg.samples, cfg.seed);
        for (auto row : contraction.rows) {
            row.parameter = std::string(name) + " " + row.parameter;
            rows.push_back(row);
        }
        all_pass = all_pass && contraction.pass;

        int max_deg = 0;
        for (int v = 0; v < g.num_vertices(); ++v) {
            const Degree d = g.degree(v);
            max_deg = std::max(max_deg, kind == IncidenceKind::Plus ? d.in : d.out);
        }
        const double bound = std::sqrt(static_cast<double>(max_deg));
        const double norm = g.num_edges() > 0 ? operator_norm(M, 1e-10) : 0.0;
        bool ok = norm <= bound + 1e-6;
        rows.push_back({"operator_norm_le_sqrt_maxdeg", name, norm, bound, ok});
        all_pass = all_pass && ok;
    }

    std::string text = report_csv(rows);
    io::atomic_write(out_dir(cfg) / "incidence_report.csv", text);
    std::cout << text;
    return all_pass ? 0 : 1;
}

int cmd_fixtures(const RunConfig& cfg) {
    auto dir = out_dir(cfg);
    for (const auto& [name, g] : fixtures::gallery()) {
        io::atomic_write(dir / (name + ".json"), io::serialize_graph(g));
        std::cout << name << ".json\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"netheat: oriented-network heat semigroup toolkit"};
    app.require_subcommand(1);

    RunConfig cfg;

    auto add_common = [&cfg](CLI::App* sub, bool needs_input) {
        if (needs_input)
            sub->add_option("input", cfg.input, "graph JSON file")->required();
        sub->add_option("--out", cfg.out, "output directory (default ./out)");
        sub->add_option("--tol", cfg.tol, "numeric tolerance (default 1e-9)")
            ->check(CLI::PositiveNumber);
        sub->add_option("--seed", cfg.seed, "RNG seed (default 0)");
        return sub;
    };

    auto* components = add_common(app.add_subcommand(
        "components", "delta-connected decomposition (finite spans)"), true);
    auto* irreducible = add_common(app.add_subcommand(
        "irreducible", "irreducibility verdict with certificate"), true);
    auto* ideals = add_common(app.add_subcommand(
        "ideals", "count of nontrivial minimal invariant ideals"), true);

    auto* spectrum = add_common(app.add_subcommand(
        "spectrum", "smallest eigenvalues of the network operator"), true);
    spectrum->add_option("--n", cfg.n, "segments per edge (default 32)")
        ->check(CLI::Range(2, 100000));
    spectrum->add_option("--k", cfg.k, "number of eigenvalues (default 6)")
        ->check(CLI::PositiveNumber);
    spectrum->add_option("--mass", cfg.mass, "mass matrix: lumped|consistent (default lumped)")
        ->check(CLI::IsMember({"lumped", "consistent"}));

    auto* laplacian = add_common(app.add_subcommand(
        "laplacian", "combinatorial Laplacian delta_fin + zero block"), true);
    laplacian->add_option("--mode", cfg.mode,
                          "zero multiplicity: fin|full (default fin)")
        ->check(CLI::IsMember({"fin", "full"}));

    auto* check = add_common(app.add_subcommand(
        "check-theorem", "component-counting theorem check"), true);

    auto* simulate = add_common(app.add_subcommand(
        "simulate", "heat evolution from a bump with max-principle report"), true);
    simulate->add_option("--edge", cfg.edge, "starting edge id")->required();
    simulate->add_option("--n", cfg.n, "segments per edge (default 32)")
        ->check(CLI::Range(2, 100000));
    simulate->add_option("--dt", cfg.dt, "time step (default 1e-3)")
        ->check(CLI::PositiveNumber);
    simulate->add_option("--T", cfg.T, "final time (default 0.1)")
        ->check(CLI::PositiveNumber);
    simulate->add_option("--theta", cfg.theta,
                         "support threshold relative to ||u0||_inf (default 1e-10)");
    simulate->add_option("--mass", cfg.mass, "mass matrix: lumped|consistent (default lumped)")
        ->check(CLI::IsMember({"lumped", "consistent"}));

    auto* verify = add_common(app.add_subcommand(
        "verify-incidence", "incidence operator property suite"), true);
    verify->add_option("--samples", cfg.samples, "random samples (default 1000)")
        ->check(CLI::PositiveNumber);

    auto* fixture_cmd = add_common(app.add_subcommand(
        "fixtures", "write the built-in fixture gallery"), false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        int code = app.exit(err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(components)) return cmd_components(cfg);
        if (app.got_subcommand(irreducible)) return cmd_irreducible(cfg);
        if (app.got_subcommand(ideals)) return cmd_ideals(cfg);
        if (app.got_subcommand(spectrum)) return cmd_spectrum(cfg);
        if (app.got_subcommand(laplacian)) return cmd_laplacian(cfg);
        if (app.got_subcommand(check)) return cmd_check_theorem(cfg);
        if (app.got_subcommand(simulate)) return cmd_simulate(cfg);
        if (app.got_subcommand(verify)) return cmd_verify_incidence(cfg);
        if (app.got_subcommand(fixture_cmd)) return cmd_fixtures(cfg);
    } catch (const GraphError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    }
    return 2;
}
