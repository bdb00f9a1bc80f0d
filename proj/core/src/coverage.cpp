#include "caustica/coverage.hpp"

#include <array>
#include <atomic>

namespace caustica::coverage {

namespace {

constexpr std::size_t kCount = static_cast<std::size_t>(Op::count_);

std::array<std::atomic<bool>, kCount>& flags()
{
    static std::array<std::atomic<bool>, kCount> f{};
    return f;
}

constexpr std::array<std::string_view, kCount> kNames = {
    "ellipse_geometry",
    "lazutkin_chart",
    "boundary_point",
    "reexpress",
    "billiard_step",
    "to_lazutkin",
    "from_lazutkin",
    "lazutkin_step",
    "rotation_number",
    "elliptic_integral",
    "elliptical_coords",
    "first_integral",
    "caustic_from_rotation_number",
    "build_chart",
    "max_perimeter_polygon",
    "perimeter_functions",
    "deformation_function",
    "perimeter_defect",
    "pseudo_orbit_diagnostics",
    "integrability_scan",
    "deformed_mode",
    "base_modes",
    "weighted_inner_product",
    "tilde_coefficients",
    "operator_report",
    "five_mode_projection",
    "ellipse_from_coeffs",
    "fit_ellipse",
    "run_experiment",
    "fit_loglog_slope",
    "emit",
};

}  // namespace

void mark(Op op) noexcept
{
    flags()[static_cast<std::size_t>(op)].store(true, std::memory_order_relaxed);
}

bool touched(Op op) noexcept
{
    return flags()[static_cast<std::size_t>(op)].load(std::memory_order_relaxed);
}

void reset() noexcept
{
    for (auto& f : flags()) f.store(false, std::memory_order_relaxed);
}

std::string_view name(Op op) noexcept
{
    return kNames[static_cast<std::size_t>(op)];
}

std::vector<Op> all()
{
    std::vector<Op> out;
    for (std::size_t i = 0; i < kCount; ++i) out.push_back(static_cast<Op>(i));
    return out;
}

std::vector<Op> untouched()
{
    std::vector<Op> out;
    for (Op op : all())
        if (!touched(op)) out.push_back(op);
    return out;
}

}  // namespace caustica::coverage
