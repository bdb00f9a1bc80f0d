#include <cstdio>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "caustica/action_angle.hpp"
#include "caustica/dynamics.hpp"
#include "caustica/error.hpp"
#include "caustica/harness.hpp"
#include "caustica/io.hpp"
#include "caustica/modes.hpp"
#include "caustica/variational.hpp"

namespace fs = std::filesystem;
using namespace caustica;
using nlohmann::json;

namespace {

struct Globals {
    std::string config;
    std::string out;
    std::string format = "all";
    std::optional<std::uint64_t> seed;
    std::optional<int> threads;
};

void deliver(const Globals& g, const std::string& name, const std::string& text)
{
    if (g.out.empty()) {
        std::cout << text;
        return;
    }
    const fs::path p = fs::path(g.out) / name;
    io::write_text(p, text);
    std::cerr << "wrote " << p.string() << '\n';
}

BoundarySpec boundary_or_ellipse(const std::string& file, double e)
{
    if (!file.empty()) return io::boundary_from_json(io::read_json(file));
    return BoundarySpec{EllipsePose{e}, std::nullopt};
}

harness::ExperimentConfig config_for(const Globals& g, const std::string& id)
{
    harness::ExperimentConfig c = g.config.empty() ? harness::default_config(id) : harness::load_config(g.config, id);
    if (g.seed) c.seed = *g.seed;
    if (g.threads) c.threads = *g.threads;
    if (!g.out.empty()) c.out_dir = g.out;
    c.validate();
    return c;
}

bool verify(const Globals& g, const std::string& id)
{
    const auto cfg = config_for(g, id);
    const auto report = harness::run_experiment(cfg);
    harness::emit(report, harness::parse_format(g.format), cfg.out_dir);
    std::printf("%-5s %s  (%.2f s)%s%s\n", id.c_str(), report.passed() ? "PASS" : "FAIL", report.wall_time,
                report.error.empty() ? "" : "  ", report.error.c_str());
    for (const auto& [k, v] : report.pass) std::printf("      %-32s %s\n", k.c_str(), v ? "pass" : "FAIL");
    return report.passed();
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Billiard caustics, deformed Fourier modes and best-ellipse fits"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--config", g.config, "JSON experiment config");
    app.add_option("--out", g.out, "output directory (default: stdout, or the config's out_dir for verify)");
    app.add_option("--format", g.format, "report format for verify: json, csv, svg or all")
        ->check(CLI::IsMember({"json", "csv", "svg", "all"}));
    app.add_option("--seed", g.seed, "random seed override");
    app.add_option("--threads", g.threads, "worker thread cap (0 = all cores)");

    double e = 0.0, s = 0.0, phi = 1.0, omega = 0.0;
    int q = 3, steps = 100, nodes = 64, grid_nodes = 2048, N = 64, harmonic = 5;
    std::string boundary_file;
    std::vector<double> eps = numerics::logspace(3e-5, 1e-3, 4);
    bool polish = false;
    std::string id;

    auto* orbit_cmd = app.add_subcommand("orbit", "iterate the billiard map, CSV of (s, phi, x, y, I)");
    orbit_cmd->add_option("--e", e, "eccentricity");
    orbit_cmd->add_option("--s", s, "initial arc length");
    orbit_cmd->add_option("--phi", phi, "initial angle in (0, pi)");
    orbit_cmd->add_option("--steps", steps, "number of reflections");
    orbit_cmd->add_option("--boundary", boundary_file, "boundary JSON");

    auto* caustic_cmd = app.add_subcommand("caustic", "confocal caustic of rotation number 1/q (or --omega)");
    caustic_cmd->add_option("--e", e, "eccentricity");
    caustic_cmd->add_option("--q", q, "period");
    caustic_cmd->add_option("--omega", omega, "rotation number in (0, 1/2]");

    auto* chart_cmd = app.add_subcommand("chart", "action-angle chart table");
    chart_cmd->add_option("--e", e, "eccentricity");
    chart_cmd->add_option("--q", q, "period, q > 2");
    chart_cmd->add_option("--nodes", nodes, "theta nodes");

    auto* qgon_cmd = app.add_subcommand("qgon", "maximal-perimeter inscribed q-gon");
    qgon_cmd->add_option("--e", e, "eccentricity");
    qgon_cmd->add_option("--q", q, "number of vertices");
    qgon_cmd->add_option("--s", s, "arc length of the pinned vertex");
    qgon_cmd->add_option("--boundary", boundary_file, "boundary JSON");

    auto* defect_cmd = app.add_subcommand("defect", "perimeter defect sweep for v = cos 2 pi j x");
    defect_cmd->add_option("--e", e, "eccentricity");
    defect_cmd->add_option("--q", q, "period");
    defect_cmd->add_option("--eps", eps, "perturbation sizes");
    defect_cmd->add_option("--harmonic", harmonic, "j in cos 2 pi j x");
    defect_cmd->add_option("--nodes", nodes, "theta nodes");

    auto* modes_cmd = app.add_subcommand("modes", "deformed Fourier modes c_q, s_q as CSV");
    modes_cmd->add_option("--e", e, "eccentricity");
    modes_cmd->add_option("--q", q, "harmonic, q > 2");
    modes_cmd->add_option("--nodes", grid_nodes, "x-grid size");

    auto* gram_cmd = app.add_subcommand("gram", "operator report in the Fourier basis");
    gram_cmd->add_option("--e", e, "eccentricity");
    gram_cmd->add_option("--N", N, "truncation");

    auto* project_cmd = app.add_subcommand("project", "five-mode projection of a boundary's perturbation");
    project_cmd->add_option("--boundary", boundary_file, "boundary JSON")->required();

    auto* fit_cmd = app.add_subcommand("fit", "best-ellipse fit");
    fit_cmd->add_option("--boundary", boundary_file, "boundary JSON")->required();
    fit_cmd->add_flag("--polish", polish, "finish with a Nelder-Mead polish");

    auto* verify_cmd = app.add_subcommand("verify", "run one acceptance experiment");
    verify_cmd->add_option("id", id, "experiment id (E1 .. E11, E10b)")->required();
    auto* verify_all_cmd = app.add_subcommand("verify-all", "run every acceptance experiment");

    CLI11_PARSE(app, argc, argv);

    try {
        if (g.threads) numerics::set_thread_limit(*g.threads);
        if (*orbit_cmd) {
            const Boundary b(boundary_or_ellipse(boundary_file, e));
            const auto rows = orbit(b, {s, phi}, steps);
            std::vector<std::vector<double>> data;
            for (const auto& r : rows) data.push_back({double(r.step), r.s, r.phi, r.x, r.y, r.I.value_or(NAN)});
            deliver(g, "orbit.csv", io::csv({"step", "s", "phi", "x", "y", "I"}, data));
        } else if (*caustic_cmd) {
            const EllipsePose pose{e};
            const double w = omega > 0.0 ? omega : 1.0 / q;
            const auto c = caustic_from_rotation_number(pose, w);
            deliver(g, "caustic.json",
                    json{{"e", e}, {"omega", w}, {"Z", c.Z}, {"check", caustic_rotation_number(pose, c.Z)}}.dump(2) +
                        "\n");
        } else if (*chart_cmd) {
            const AAChart ch = build_chart(EllipsePose{e}, q);
            std::vector<std::vector<double>> data;
            for (const auto& r : ch.table(nodes)) data.push_back({r.theta, r.S, r.Phi, r.Xq, r.Yq, r.dXq});
            deliver(g, "chart.csv", io::csv({"theta", "S", "Phi", "Xq", "Yq", "dXq"}, data));
        } else if (*qgon_cmd) {
            const Boundary b(boundary_or_ellipse(boundary_file, e));
            deliver(g, "qgon.json", io::to_json(max_perimeter_polygon(b, q, s)).dump(2) + "\n");
        } else if (*defect_cmd) {
            const auto sweep = perimeter_defect(EllipsePose{e}, PerturbationSeries::harmonic(harmonic, false, 1.0), q,
                                                eps, default_theta_grid(nodes));
            std::vector<std::vector<double>> data;
            for (const auto& r : sweep.reports) data.push_back({r.scale, r.epsilon, r.defect});
            deliver(g, "defect.csv", io::csv({"scale", "epsilon", "defect"}, data));
            std::fprintf(stderr, "slope %.6f\n", sweep.slope);
        } else if (*modes_cmd) {
            const ModeGrid grid(EllipsePose{e}, grid_nodes);
            const auto [c, sm] = deformed_mode(grid, q);
            std::vector<std::vector<double>> data;
            for (int i = 0; i < grid.nodes(); ++i) data.push_back({grid.x()[i], c.values[i], sm.values[i], grid.mu()[i]});
            deliver(g, "modes.csv", io::csv({"x", "c", "s", "mu"}, data));
        } else if (*gram_cmd) {
            deliver(g, "gram.json", io::to_json(operator_report(EllipsePose{e}, N)).dump(2) + "\n");
        } else if (*project_cmd) {
            const BoundarySpec spec = io::boundary_from_json(io::read_json(boundary_file));
            const PerturbationSeries n = spec.perturbation.value_or(PerturbationSeries{});
            const Projection p = five_mode_projection(n, spec.base);
            deliver(g, "project.json",
                    json{{"coefficients", io::to_json(p.coeffs)},
                         {"basis_coefficients", p.basis_coeffs},
                         {"condition", p.condition},
                         {"orthogonality", p.orthogonality},
                         {"remainder_sup", numerics::sup_abs(p.n_perp)}}
                            .dump(2) +
                        "\n");
        } else if (*fit_cmd) {
            const BoundarySpec spec = io::boundary_from_json(io::read_json(boundary_file));
            FitOptions opt;
            opt.polish = polish;
            deliver(g, "fit.json", io::to_json(fit_ellipse(Boundary(spec), spec.base, opt)).dump(2) + "\n");
        } else if (*verify_cmd) {
            return verify(g, id) ? 0 : 1;
        } else if (*verify_all_cmd) {
            bool ok = true;
            for (const auto& each : harness::experiment_ids()) ok = verify(g, each) && ok;
            const auto gaps = harness::coverage_gaps();
            std::printf("coverage %s", gaps.empty() ? "PASS\n" : "FAIL:");
            for (const auto& n : gaps) std::printf(" %s", n.c_str());
            if (!gaps.empty()) std::printf("\n");
            return ok && gaps.empty() ? 0 : 1;
        }
    } catch (const Error& ex) {
        std::cerr << "caustica: " << ex.what() << '\n';
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "caustica: " << ex.what() << '\n';
        return 2;
    }
    return 0;
}
