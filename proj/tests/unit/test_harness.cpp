#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "caustica/error.hpp"
#include "caustica/harness.hpp"
#include "caustica/io.hpp"

using namespace caustica;
using namespace caustica::harness;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name)
{
    const fs::path p = fs::path(CAUSTICA_TEST_TMP) / name;
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int count(const std::string& hay, const std::string& needle)
{
    int n = 0;
    for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
    return n;
}

TEST(Config, DefaultsAreValid)
{
    ASSERT_EQ(experiment_ids().size(), 12u);
    for (const auto& id : experiment_ids()) {
        const ExperimentConfig c = default_config(id);
        EXPECT_EQ(c.id, id);
        EXPECT_NO_THROW(c.validate()) << id;
        EXPECT_FALSE(c.tolerances.empty()) << id;
    }
    EXPECT_THROW(default_config("E12"), Error);
}

TEST(Config, ValidationRejectsBadValues)
{
    ExperimentConfig c = default_config("E7");
    c.eccentricities.clear();
    EXPECT_THROW(c.validate(), Error);
    c = default_config("E7");
    c.tolerances["slope_tol"] = -1.0;
    EXPECT_THROW(c.validate(), Error);
    c = default_config("E7");
    c.epsilons = {1e-3, 0.0};
    EXPECT_THROW(c.validate(), Error);
    c = default_config("E7");
    c.q_max = 1;
    EXPECT_THROW(c.validate(), Error);
    EXPECT_THROW(c.tol("nonexistent"), Error);
}

TEST(Config, JsonRoundTripAndFiles)
{
    const ExperimentConfig c = default_config("E5");
    const ExperimentConfig back = config_from_json(to_json(c), ExperimentConfig{});
    EXPECT_EQ(to_json(back), to_json(c));
    EXPECT_THROW(config_from_json(json{{"bogus", 1}}, c), Error);

    const fs::path dir = scratch("config");
    io::write_text(dir / "cfg.json", json{{"defaults", {{"seed", 7}}}, {"E5", {{"q_max", 12}}}}.dump());
    const ExperimentConfig f = load_config(dir / "cfg.json", "E5");
    EXPECT_EQ(f.seed, 7u);
    EXPECT_EQ(f.q_max, 12);
    EXPECT_EQ(f.eccentricities, c.eccentricities);
    EXPECT_EQ(load_config(dir / "cfg.json", "E2").seed, 7u);
    EXPECT_THROW(load_config(dir / "missing.json", "E5"), Error);
}

TEST(RunExperiment, CircleClosedFormsPass)
{
    const Report r = run_experiment(default_config("E2"));
    EXPECT_TRUE(r.error.empty()) << r.error;
    EXPECT_TRUE(r.passed());
    EXPECT_FALSE(r.rows.empty());
}

TEST(RunExperiment, OrthogonalityAtModerateEccentricity)
{
    ExperimentConfig c = default_config("E6");
    c.eccentricities = {0.1};
    const Report r = run_experiment(c);
    EXPECT_TRUE(r.passed()) << r.error;
    double worst = 0.0;
    for (double v : r.column("inner_product")) worst = std::max(worst, std::abs(v));
    EXPECT_LT(worst, 1e-8);
}

TEST(RunExperiment, DefectSlopeSingleCell)
{
    ExperimentConfig c = default_config("E7");
    c.eccentricities = {0.1};
    c.q_max = 3;
    const Report r = run_experiment(c);
    ASSERT_TRUE(r.error.empty()) << r.error;
    ASSERT_EQ(r.fits.count("slope_e0.1_q3"), 1u);
    const double s = r.fits.at("slope_e0.1_q3");
    EXPECT_GE(s, 1.85);
    EXPECT_LE(s, 2.15);
}

TEST(RunExperiment, ErrorsAreCaptured)
{
    ExperimentConfig c = default_config("E2");
    c.id = "nope";
    const Report r = run_experiment(c);
    EXPECT_FALSE(r.error.empty());
    EXPECT_FALSE(r.passed());
    EXPECT_EQ(r.pass.at("completed"), false);
}

TEST(RunExperiment, DeterministicUnderFixedSeed)
{
    const ExperimentConfig c = default_config("E8");
    const Report a = run_experiment(c), b = run_experiment(c);
    EXPECT_EQ(to_json(a).dump(), to_json(b).dump());
    EXPECT_EQ(to_csv(a), to_csv(b));
    ExperimentConfig d = c;
    d.seed = c.seed + 1;
    EXPECT_NE(to_json(run_experiment(d))["data"].dump(), to_json(a)["data"].dump());
}

TEST(Emit, EmptyReport)
{
    Report r;
    r.id = "E2";
    const json j = to_json(r);
    EXPECT_EQ(j["schema"], kSchema);
    EXPECT_EQ(j["id"], "E2");
    EXPECT_TRUE(j["data"].is_array());
    EXPECT_TRUE(j["data"].empty());
    EXPECT_TRUE(j["pass"].is_object());
    EXPECT_TRUE(j["pass"].empty());
    EXPECT_TRUE(j.contains("config"));
    EXPECT_TRUE(j.contains("fits"));
    const fs::path dir = scratch("empty");
    const auto paths = emit(r, Format::all, dir);
    EXPECT_EQ(paths.size(), 3u);
    EXPECT_NO_THROW(static_cast<void>(json::parse(slurp(dir / "E2.json"))));
}

TEST(Emit, CsvRoundTrip)
{
    Report r;
    r.id = "E9";
    r.columns = {"e", "gap", "tiny"};
    r.add_row({0.1, 0.009612345678901234, 1e-300});
    r.add_row({0.3, 1.0 / 3.0, -2.5e-17});
    const CsvTable t = parse_csv(to_csv(r));
    EXPECT_EQ(t.header, r.columns);
    ASSERT_EQ(t.rows.size(), r.rows.size());
    for (std::size_t i = 0; i < t.rows.size(); ++i)
        for (std::size_t k = 0; k < t.rows[i].size(); ++k) EXPECT_EQ(t.rows[i][k], r.rows[i][k]);
    EXPECT_THROW(r.add_row({1.0}), Error);
    EXPECT_THROW(parse_csv("a,b\n1,x\n"), Error);
}

TEST(Emit, SvgHasOnePolylinePerEccentricity)
{
    const Report r = run_experiment(default_config("E5"));
    ASSERT_TRUE(r.plot.has_value());
    const std::string svg = to_svg(r);
    EXPECT_EQ(count(svg, "<polyline"), static_cast<int>(default_config("E5").eccentricities.size()));
    EXPECT_EQ(svg.rfind("</svg>"), svg.size() - 7);
}

TEST(Emit, BitStableFiles)
{
    const Report r = run_experiment(default_config("E2"));
    const fs::path a = scratch("stable_a"), b = scratch("stable_b");
    emit(r, Format::all, a);
    emit(run_experiment(default_config("E2")), Format::all, b);
    for (const char* ext : {".json", ".csv", ".svg"})
        EXPECT_EQ(slurp(a / (std::string("E2") + ext)), slurp(b / (std::string("E2") + ext))) << ext;
}

TEST(Emit, FormatParsing)
{
    EXPECT_EQ(parse_format("json"), Format::json);
    EXPECT_EQ(parse_format("all"), Format::all);
    EXPECT_THROW(parse_format("xml"), Error);
}

TEST(Io, BoundaryJsonRoundTrip)
{
    const BoundarySpec spec{EllipsePose{0.3, {0.1, -0.2}, 0.5, 1.2},
                            PerturbationSeries({1e-4, 2e-4}, {0.0, 3e-4})};
    const BoundarySpec back = io::boundary_from_json(io::to_json(spec));
    EXPECT_EQ(back.base.e, 0.3);
    EXPECT_EQ(back.base.center.y, -0.2);
    ASSERT_TRUE(back.perturbation.has_value());
    EXPECT_EQ(back.perturbation->cos_coeffs(), spec.perturbation->cos_coeffs());
    EXPECT_EQ(back.perturbation->sin_coeffs(), spec.perturbation->sin_coeffs());
    EXPECT_THROW(io::boundary_from_json(json{{"base", {{"e", 1.5}}}}), Error);
    EXPECT_THROW(io::boundary_from_json(json::array()), Error);
}

}  // namespace
