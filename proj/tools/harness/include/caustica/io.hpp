#pragma once

#include <filesystem>
#include <vector>

#include <nlohmann/json.hpp>

#include "caustica/dynamics.hpp"
#include "caustica/geometry.hpp"
#include "caustica/modes.hpp"
#include "caustica/variational.hpp"

namespace caustica::io {

nlohmann::json to_json(const EllipsePose& pose);
EllipsePose pose_from_json(const nlohmann::json& j);

nlohmann::json to_json(const PerturbationSeries& n);
PerturbationSeries perturbation_from_json(const nlohmann::json& j);

/// {"base": pose, "perturbation": {"cos": [...], "sin": [...]}} with the perturbation optional.
nlohmann::json to_json(const BoundarySpec& spec);
BoundarySpec boundary_from_json(const nlohmann::json& j);

nlohmann::json to_json(const EllipseCoeffs& c);
nlohmann::json to_json(const GramReport& r);
nlohmann::json to_json(const FitResult& r);
nlohmann::json to_json(const InscribedPolygon& p);

nlohmann::json read_json(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

/// CSV with a header row and %.17g numbers.
std::string csv(const std::vector<std::string>& header, const std::vector<std::vector<double>>& rows);

}  // namespace caustica::io
