#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include "caustica/coverage.hpp"
#include "caustica/error.hpp"
#include "caustica/harness.hpp"
#include "caustica/io.hpp"
#include "caustica/numerics.hpp"

namespace caustica::harness {

using nlohmann::json;

// ---------------------------------------------------------------- config

void ExperimentConfig::validate() const
{
    const auto& ids = experiment_ids();
    CAUSTICA_REQUIRE(std::find(ids.begin(), ids.end(), id) != ids.end(), ErrorKind::invalid_input,
                     "unknown experiment id '" + id + "'");
    CAUSTICA_REQUIRE(!eccentricities.empty(), ErrorKind::invalid_input, "eccentricity list is empty");
    for (double e : eccentricities)
        CAUSTICA_REQUIRE(e >= 0.0 && e < 1.0, ErrorKind::invalid_input, "eccentricity outside [0, 1)");
    CAUSTICA_REQUIRE(q_min >= 1 && q_max >= q_min, ErrorKind::invalid_input, "bad q range");
    CAUSTICA_REQUIRE(!epsilons.empty(), ErrorKind::invalid_input, "epsilon list is empty");
    for (double v : epsilons) CAUSTICA_REQUIRE(v > 0.0, ErrorKind::invalid_input, "epsilons must be positive");
    CAUSTICA_REQUIRE(grid >= 16 && nodes >= 1 && samples >= 1 && steps >= 1 && N >= 5, ErrorKind::invalid_input,
                     "grid sizes must be positive");
    for (const auto& [k, v] : tolerances)
        CAUSTICA_REQUIRE(v > 0.0 && std::isfinite(v), ErrorKind::invalid_input, "tolerance '" + k + "' must be positive");
    CAUSTICA_REQUIRE(threads >= 0, ErrorKind::invalid_input, "threads must be non-negative");
}

double ExperimentConfig::tol(const std::string& key) const
{
    const auto it = tolerances.find(key);
    CAUSTICA_REQUIRE(it != tolerances.end(), ErrorKind::invalid_input, id + " config lacks tolerance '" + key + "'");
    return it->second;
}

const std::vector<std::string>& experiment_ids()
{
    static const std::vector<std::string> ids = {"E1", "E2", "E3", "E4", "E5", "E6",
                                                 "E7", "E8", "E9", "E10", "E10b", "E11"};
    return ids;
}

ExperimentConfig default_config(const std::string& id)
{
    ExperimentConfig c;
    c.id = id;
    c.epsilons = {1e-3};
    if (id == "E1") {
        c.eccentricities = {0.3};
        c.samples = 20;
        c.steps = 10000;
        c.tolerances = {{"drift", 1e-9}, {"root_tol", 1e-12}};
    } else if (id == "E2") {
        c.eccentricities = {0.0};
        c.q_min = 3;
        c.q_max = 12;
        c.samples = 200;
        c.nodes = 256;
        c.tolerances = {{"step", 1e-12}, {"perimeter", 1e-10}, {"mu", 1e-10}};
    } else if (id == "E3") {
        c.eccentricities = {0.1, 0.2, 0.4};
        c.q_min = 3;
        c.q_max = 15;
        c.tolerances = {{"conjugacy", 1e-8}, {"invariance", 1e-8}, {"origin", 1e-12}};
    } else if (id == "E4") {
        c.eccentricities = {0.1, 0.25};
        c.q_min = 3;
        c.q_max = 10;
        c.nodes = 64;
        c.tolerances = {{"variation", 1e-9}, {"closure", 1e-9}};
    } else if (id == "E5") {
        c.eccentricities = {0.05, 0.2};
        c.q_min = 3;
        c.q_max = 40;
        c.tolerances = {{"slope", 1.0}, {"slope_tol", 0.3}};
    } else if (id == "E6") {
        c.eccentricities = {0.05, 0.1, 0.2};
        c.q_max = 30;
        c.tolerances = {{"orthogonality", 1e-8}};
    } else if (id == "E7") {
        c.eccentricities = {0.0, 0.1};
        c.q_min = 3;
        c.q_max = 5;
        c.epsilons = numerics::logspace(3e-5, 1e-3, 4);
        c.nodes = 64;
        c.tolerances = {{"slope", 2.0}, {"slope_tol", 0.15}};
    } else if (id == "E8") {
        c.eccentricities = {0.1};
        c.q_min = 5;
        c.q_max = 20;
        c.epsilons = {1e-4, 3e-4, 1e-3};
        c.tolerances = {{"slope", 2.0}, {"slope_tol", 0.2}};
    } else if (id == "E9") {
        c.eccentricities = {0.0, 0.05, 0.1, 0.15, 0.2, 0.25, 0.3, 0.35, 0.4, 0.45, 0.5};
        c.N = 64;
        c.tolerances = {{"gap_circle", 1e-10}, {"gap_max", 1.0}, {"gap_e", 0.1}};
    } else if (id == "E10") {
        c.eccentricities = {0.1};
        c.epsilons = {1e-3, 1e-4};
        c.tolerances = {{"exponent", 1.5}};
    } else if (id == "E10b") {
        c.eccentricities = {0.0};
        c.q_min = 3;
        c.q_max = 4;
        c.epsilons = {1e-3};
        c.nodes = 64;
        c.tolerances = {{"separation", 1e-2}, {"retained", 0.5}};
    } else if (id == "E11") {
        c.eccentricities = {0.2};
        c.q_min = 5;
        c.q_max = 50;
        c.tolerances = {{"decay", 3.0}, {"decay_tol", 0.2}, {"xi", 3.0}};
    } else {
        throw Error(ErrorKind::invalid_input, "unknown experiment id '" + id + "'");
    }
    c.out_dir = "caustica-out";
    return c;
}

json to_json(const ExperimentConfig& c)
{
    return {{"id", c.id},
            {"eccentricities", c.eccentricities},
            {"q_min", c.q_min},
            {"q_max", c.q_max},
            {"epsilons", c.epsilons},
            {"grid", c.grid},
            {"nodes", c.nodes},
            {"samples", c.samples},
            {"steps", c.steps},
            {"N", c.N},
            {"tolerances", c.tolerances},
            {"out_dir", c.out_dir},
            {"seed", c.seed},
            {"threads", c.threads}};
}

ExperimentConfig config_from_json(const json& j, ExperimentConfig c)
{
    static const std::set<std::string> known = {"id",    "eccentricities", "q_min", "q_max",      "epsilons",
                                                "grid",  "nodes",          "samples", "steps",    "N",
                                                "tolerances", "out_dir",   "seed",  "threads"};
    CAUSTICA_REQUIRE(j.is_object(), ErrorKind::invalid_input, "config must be a JSON object");
    try {
        for (const auto& [k, v] : j.items()) {
            (void)v;
            CAUSTICA_REQUIRE(known.count(k) != 0, ErrorKind::invalid_input, "unknown config key '" + k + "'");
        }
        if (j.contains("id")) c.id = j.at("id").get<std::string>();
        if (j.contains("eccentricities")) c.eccentricities = j.at("eccentricities").get<std::vector<double>>();
        if (j.contains("q_min")) c.q_min = j.at("q_min").get<int>();
        if (j.contains("q_max")) c.q_max = j.at("q_max").get<int>();
        if (j.contains("epsilons")) c.epsilons = j.at("epsilons").get<std::vector<double>>();
        if (j.contains("grid")) c.grid = j.at("grid").get<int>();
        if (j.contains("nodes")) c.nodes = j.at("nodes").get<int>();
        if (j.contains("samples")) c.samples = j.at("samples").get<int>();
        if (j.contains("steps")) c.steps = j.at("steps").get<int>();
        if (j.contains("N")) c.N = j.at("N").get<int>();
        if (j.contains("tolerances"))
            for (const auto& [k, v] : j.at("tolerances").items()) c.tolerances[k] = v.get<double>();
        if (j.contains("out_dir")) c.out_dir = j.at("out_dir").get<std::string>();
        if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
        if (j.contains("threads")) c.threads = j.at("threads").get<int>();
    } catch (const json::exception& ex) {
        throw Error(ErrorKind::invalid_input, std::string("bad config: ") + ex.what());
    }
    return c;
}

ExperimentConfig load_config(const std::filesystem::path& path, const std::string& id)
{
    const json j = io::read_json(path);
    CAUSTICA_REQUIRE(j.is_object(), ErrorKind::invalid_input, "config must be a JSON object");
    ExperimentConfig c = default_config(id);
    json flat = json::object();
    if (j.contains("defaults")) flat.update(j.at("defaults"));
    if (j.contains(id)) flat.update(j.at(id));
    for (const auto& [k, v] : j.items()) {
        const auto& ids = experiment_ids();
        if (k != "defaults" && std::find(ids.begin(), ids.end(), k) == ids.end()) flat[k] = v;
    }
    c = config_from_json(flat, c);
    c.id = id;
    c.validate();
    return c;
}

// ---------------------------------------------------------------- report

void Report::add_row(std::vector<double> row)
{
    CAUSTICA_REQUIRE(row.size() == columns.size(), ErrorKind::invalid_input, "row width differs from the header");
    rows.push_back(std::move(row));
}

bool Report::passed() const
{
    if (!error.empty() || pass.empty()) return false;
    return std::all_of(pass.begin(), pass.end(), [](const auto& kv) { return kv.second; });
}

std::vector<double> Report::column(const std::string& name) const
{
    const auto it = std::find(columns.begin(), columns.end(), name);
    CAUSTICA_REQUIRE(it != columns.end(), ErrorKind::invalid_input, "no column '" + name + "'");
    const std::size_t c = static_cast<std::size_t>(it - columns.begin());
    std::vector<double> out;
    for (const auto& r : rows) out.push_back(r[c]);
    return out;
}

Format parse_format(const std::string& s)
{
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    if (s == "svg") return Format::svg;
    if (s == "all") return Format::all;
    throw Error(ErrorKind::invalid_input, "unknown format '" + s + "'");
}

json to_json(const Report& r)
{
    json data = json::array();
    for (const auto& row : r.rows) {
        json o = json::object();
        for (std::size_t i = 0; i < r.columns.size(); ++i)
            o[r.columns[i]] = std::isfinite(row[i]) ? json(row[i]) : json(nullptr);
        data.push_back(o);
    }
    json fits = json::object();
    for (const auto& [k, v] : r.fits) fits[k] = std::isfinite(v) ? json(v) : json(nullptr);
    json j = {{"schema", kSchema},
              {"id", r.id},
              {"config", r.config},
              {"columns", r.columns},
              {"data", data},
              {"fits", fits},
              {"pass", r.pass},
              {"passed", r.passed()},
              {"notes", r.notes}};
    if (!r.error.empty()) j["error"] = r.error;
    return j;
}

std::string to_csv(const Report& r) { return io::csv(r.columns, r.rows); }

CsvTable parse_csv(const std::string& text)
{
    CsvTable t;
    std::istringstream in(text);
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream ls(line);
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (header) {
            t.header = cells;
            header = false;
            continue;
        }
        CAUSTICA_REQUIRE(cells.size() == t.header.size(), ErrorKind::io, "ragged CSV row");
        std::vector<double> row;
        for (const auto& c : cells) {
            char* end = nullptr;
            const double v = std::strtod(c.c_str(), &end);
            CAUSTICA_REQUIRE(end != c.c_str() && *end == '\0', ErrorKind::io, "bad CSV number '" + c + "'");
            row.push_back(v);
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

namespace {

std::string fmt(const char* f, double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

}  // namespace

std::string to_svg(const Report& r)
{
    const double W = 640, H = 420, left = 70, right = 130, top = 40, bottom = 50;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\" viewBox=\"0 0 "
       << W << ' ' << H << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    const PlotSpec spec = r.plot.value_or(PlotSpec{});
    os << "<text x=\"" << left << "\" y=\"24\" font-family=\"sans-serif\" font-size=\"14\">" << r.id
       << (spec.title.empty() ? "" : ": " + spec.title) << "</text>\n";
    if (!r.plot || r.rows.empty()) {
        os << "</svg>\n";
        return os.str();
    }
    const auto xs = r.column(spec.x), ys = r.column(spec.y);
    const std::vector<double> gs = spec.group.empty() ? std::vector<double>(xs.size(), 0.0) : r.column(spec.group);
    auto tx = [&](double v) { return spec.log_x ? std::log10(v) : v; };
    auto ty = [&](double v) { return spec.log_y ? std::log10(v) : v; };
    auto usable = [&](std::size_t i) {
        return std::isfinite(xs[i]) && std::isfinite(ys[i]) && (!spec.log_x || xs[i] > 0) && (!spec.log_y || ys[i] > 0);
    };
    double x0 = INFINITY, x1 = -INFINITY, y0 = INFINITY, y1 = -INFINITY;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (!usable(i)) continue;
        x0 = std::min(x0, tx(xs[i]));
        x1 = std::max(x1, tx(xs[i]));
        y0 = std::min(y0, ty(ys[i]));
        y1 = std::max(y1, ty(ys[i]));
    }
    if (!(x0 <= x1) || !(y0 <= y1)) {
        os << "</svg>\n";
        return os.str();
    }
    if (x1 == x0) x1 = x0 + 1;
    if (y1 == y0) y1 = y0 + 1;
    const double pw = W - left - right, ph = H - top - bottom;
    auto px = [&](double v) { return left + (tx(v) - x0) / (x1 - x0) * pw; };
    auto py = [&](double v) { return top + ph - (ty(v) - y0) / (y1 - y0) * ph; };

    os << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << pw << "\" height=\"" << ph
       << "\" fill=\"none\" stroke=\"black\"/>\n";
    const char* tick = "%.3g";
    auto label = [&](double v, bool logged) { return fmt(tick, logged ? std::pow(10.0, v) : v); };
    os << "<text x=\"" << left << "\" y=\"" << H - 30 << "\" font-family=\"sans-serif\" font-size=\"11\">"
       << label(x0, spec.log_x) << "</text>\n";
    os << "<text x=\"" << left + pw << "\" y=\"" << H - 30
       << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << label(x1, spec.log_x) << "</text>\n";
    os << "<text x=\"" << left + pw / 2 << "\" y=\"" << H - 12
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" << spec.x
       << (spec.log_x ? " (log)" : "") << "</text>\n";
    os << "<text x=\"" << left - 6 << "\" y=\"" << top + ph
       << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << label(y0, spec.log_y) << "</text>\n";
    os << "<text x=\"" << left - 6 << "\" y=\"" << top + 10
       << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << label(y1, spec.log_y) << "</text>\n";
    os << "<text x=\"16\" y=\"" << top + ph / 2 << "\" font-family=\"sans-serif\" font-size=\"12\" transform=\"rotate(-90 16 "
       << top + ph / 2 << ")\" text-anchor=\"middle\">" << spec.y << (spec.log_y ? " (log)" : "") << "</text>\n";

    static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                                    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
    std::vector<double> groups;
    for (double g : gs)
        if (std::find(groups.begin(), groups.end(), g) == groups.end()) groups.push_back(g);
    for (std::size_t gi = 0; gi < groups.size(); ++gi) {
        std::vector<std::pair<double, double>> pts;
        for (std::size_t i = 0; i < xs.size(); ++i)
            if (gs[i] == groups[gi] && usable(i)) pts.emplace_back(xs[i], ys[i]);
        std::sort(pts.begin(), pts.end());
        const char* colour = palette[gi % 10];
        os << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t k = 0; k < pts.size(); ++k)
            os << (k ? " " : "") << fmt("%.2f", px(pts[k].first)) << ',' << fmt("%.2f", py(pts[k].second));
        os << "\"/>\n";
        if (!spec.group.empty()) {
            const double ly = top + 14 + 16 * static_cast<double>(gi);
            os << "<line x1=\"" << W - right + 10 << "\" y1=\"" << ly - 4 << "\" x2=\"" << W - right + 30 << "\" y2=\""
               << ly - 4 << "\" stroke=\"" << colour << "\" stroke-width=\"2\"/>\n";
            os << "<text x=\"" << W - right + 34 << "\" y=\"" << ly
               << "\" font-family=\"sans-serif\" font-size=\"11\">" << spec.group << '=' << fmt("%g", groups[gi])
               << "</text>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

std::vector<std::filesystem::path> emit(const Report& r, Format format, const std::filesystem::path& dir)
{
    coverage::mark(coverage::Op::emit);
    std::vector<std::filesystem::path> out;
    const std::string stem = r.id.empty() ? "report" : r.id;
    if (format == Format::json || format == Format::all) {
        out.push_back(dir / (stem + ".json"));
        io::write_text(out.back(), to_json(r).dump(2) + "\n");
    }
    if (format == Format::csv || format == Format::all) {
        out.push_back(dir / (stem + ".csv"));
        io::write_text(out.back(), to_csv(r));
    }
    if (format == Format::svg || format == Format::all) {
        out.push_back(dir / (stem + ".svg"));
        io::write_text(out.back(), to_svg(r));
    }
    return out;
}

std::vector<std::string> coverage_gaps()
{
    std::vector<std::string> out;
    for (auto op : coverage::untouched()) out.emplace_back(coverage::name(op));
    return out;
}

}  // namespace caustica::harness
