#include "caustica/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "caustica/error.hpp"

namespace caustica::io {

using nlohmann::json;

namespace {

json number(double v)
{
    if (std::isfinite(v)) return v;
    return nullptr;
}

std::vector<double> vec_or_empty(const json& j, const char* key)
{
    if (!j.contains(key)) return {};
    return j.at(key).get<std::vector<double>>();
}

}  // namespace

json to_json(const EllipsePose& p)
{
    return {{"e", p.e}, {"center", {p.center.x, p.center.y}}, {"tilt", p.tilt}, {"scale", p.scale}};
}

EllipsePose pose_from_json(const json& j)
{
    try {
        EllipsePose p;
        p.e = j.value("e", 0.0);
        if (j.contains("center")) {
            const auto c = j.at("center").get<std::vector<double>>();
            CAUSTICA_REQUIRE(c.size() == 2, ErrorKind::invalid_input, "center must have two entries");
            p.center = {c[0], c[1]};
        }
        p.tilt = j.value("tilt", 0.0);
        p.scale = j.value("scale", 1.0);
        p.validate();
        return p;
    } catch (const json::exception& ex) {
        throw Error(ErrorKind::invalid_input, std::string("bad ellipse pose: ") + ex.what());
    }
}

json to_json(const PerturbationSeries& n)
{
    return {{"cos", n.cos_coeffs()}, {"sin", n.sin_coeffs()}, {"grid", n.grid()}};
}

PerturbationSeries perturbation_from_json(const json& j)
{
    try {
        std::vector<double> c = vec_or_empty(j, "cos");
        std::vector<double> s = vec_or_empty(j, "sin");
        if (c.empty()) c.push_back(0.0);
        return PerturbationSeries(c, s, j.value("grid", 2048));
    } catch (const json::exception& ex) {
        throw Error(ErrorKind::invalid_input, std::string("bad perturbation: ") + ex.what());
    }
}

json to_json(const BoundarySpec& spec)
{
    json j = {{"base", to_json(spec.base)}};
    if (spec.perturbation) j["perturbation"] = to_json(*spec.perturbation);
    return j;
}

BoundarySpec boundary_from_json(const json& j)
{
    CAUSTICA_REQUIRE(j.is_object(), ErrorKind::invalid_input, "boundary must be a JSON object");
    BoundarySpec spec;
    spec.base = pose_from_json(j.contains("base") ? j.at("base") : json::object());
    if (j.contains("perturbation")) spec.perturbation = perturbation_from_json(j.at("perturbation"));
    return spec;
}

json to_json(const EllipseCoeffs& c)
{
    return {{"a0", c.a0}, {"a1", c.a1}, {"b1", c.b1}, {"a2", c.a2}, {"b2", c.b2}};
}

json to_json(const GramReport& r)
{
    json m = json::array(), w = json::array();
    for (int j = 0; j < r.N; ++j) {
        json row = json::array(), wrow = json::array();
        for (int k = 0; k < r.N; ++k) {
            row.push_back(number(r.matrix[static_cast<std::size_t>(j) * r.N + k]));
            wrow.push_back(number(r.weighted[static_cast<std::size_t>(j) * r.N + k]));
        }
        m.push_back(row);
        w.push_back(wrow);
    }
    return {{"e", r.e},
            {"N", r.N},
            {"gap", number(r.gap)},
            {"tail", number(r.tail)},
            {"c_star", number(r.c_star)},
            {"rhs", number(r.rhs)},
            {"below_rhs", r.below_rhs},
            {"smallness", r.smallness},
            {"weighted_sigma_min", number(r.weighted_sigma_min)},
            {"parseval_constant", number(r.parseval_constant)},
            {"matrix", m},
            {"weighted", w}};
}

json to_json(const FitResult& r)
{
    json trace = json::array();
    for (const auto& s : r.trace)
        trace.push_back({{"iteration", s.iteration},
                         {"coeff_norm", number(s.coeff_norm)},
                         {"residual_c0", number(s.residual_c0)},
                         {"residual_c1", number(s.residual_c1)}});
    return {{"coefficients", to_json(r.coefficients)},
            {"pose", to_json(r.pose)},
            {"residual", to_json(r.residual)},
            {"residual_c0", number(r.residual_c0)},
            {"residual_c1", number(r.residual_c1)},
            {"orthogonality", number(r.orthogonality)},
            {"converged", r.converged},
            {"diverged", r.diverged},
            {"message", r.message},
            {"trace", trace}};
}

json to_json(const InscribedPolygon& p)
{
    return {{"q", p.q},
            {"s", p.s},
            {"t", p.t},
            {"perimeter", p.perimeter},
            {"residuals", p.residuals},
            {"iterations", p.iterations}};
}

json read_json(const std::filesystem::path& path)
{
    std::ifstream in(path);
    CAUSTICA_REQUIRE(in.good(), ErrorKind::io, "cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::exception& ex) {
        throw Error(ErrorKind::io, path.string() + ": " + ex.what());
    }
}

void write_text(const std::filesystem::path& path, const std::string& text)
{
    if (path.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(path.parent_path(), ec);
        CAUSTICA_REQUIRE(!ec, ErrorKind::io, "cannot create " + path.parent_path().string());
    }
    std::ofstream out(path, std::ios::binary);
    CAUSTICA_REQUIRE(out.good(), ErrorKind::io, "cannot write " + path.string());
    out << text;
    out.close();
    CAUSTICA_REQUIRE(out.good(), ErrorKind::io, "write failed for " + path.string());
}

std::string csv(const std::vector<std::string>& header, const std::vector<std::vector<double>>& rows)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
    os << '\n';
    char buf[40];
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            std::snprintf(buf, sizeof buf, "%.17g", row[i]);
            os << (i ? "," : "") << buf;
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace caustica::io
