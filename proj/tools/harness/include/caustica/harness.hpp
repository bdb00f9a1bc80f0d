#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace caustica::harness {

inline constexpr const char* kSchema = "caustica-report/1";

struct ExperimentConfig {
    std::string id;
    std::vector<double> eccentricities;
    int q_min = 3;
    int q_max = 3;
    std::vector<double> epsilons;
    int grid = 2048;     // x-grid for modes and re-expression
    int nodes = 64;      // theta nodes
    int samples = 20;    // seeded random starts
    int steps = 10000;   // orbit length
    int N = 64;          // operator truncation
    /// Pass thresholds; all positive. Signs are fixed by each experiment.
    std::map<std::string, double> tolerances;
    std::string out_dir = "caustica-out";
    std::uint64_t seed = 20261015;
    int threads = 0;

    void validate() const;
    double tol(const std::string& key) const;
};

/// E1 .. E11 and E10b, in run order.
const std::vector<std::string>& experiment_ids();

/// Defaults carry the acceptance thresholds.
ExperimentConfig default_config(const std::string& id);

nlohmann::json to_json(const ExperimentConfig& cfg);
/// Keys absent from j keep the values of `base`.
ExperimentConfig config_from_json(const nlohmann::json& j, ExperimentConfig base);

/// Reads a JSON config. The file may hold the keys directly or one object per experiment id
/// ({"E7": {...}}); a top-level "defaults" object applies to every experiment.
ExperimentConfig load_config(const std::filesystem::path& path, const std::string& id);

struct PlotSpec {
    std::string x;
    std::string y;
    std::string group;  // empty: a single polyline
    bool log_x = false;
    bool log_y = false;
    std::string title;
};

struct Report {
    std::string id;
    nlohmann::json config = nlohmann::json::object();
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    std::map<std::string, double> fits;
    std::map<std::string, bool> pass;
    std::vector<std::string> notes;
    std::string error;
    double wall_time = 0.0;
    std::optional<PlotSpec> plot;

    void add_row(std::vector<double> row);
    bool passed() const;
    std::vector<double> column(const std::string& name) const;
};

Report run_experiment(const ExperimentConfig& cfg);

enum class Format { json, csv, svg, all };

Format parse_format(const std::string& s);

nlohmann::json to_json(const Report& r);
std::string to_csv(const Report& r);
std::string to_svg(const Report& r);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

CsvTable parse_csv(const std::string& text);

/// Writes <dir>/<id>.json, .csv and/or .svg; returns the paths written.
std::vector<std::filesystem::path> emit(const Report& r, Format format, const std::filesystem::path& dir);

/// Names of library operations not yet invoked in this process.
std::vector<std::string> coverage_gaps();

}  // namespace caustica::harness
