#pragma once

#include <string_view>
#include <vector>

namespace caustica::coverage {

// One entry per public operation. The harness's self-test asserts every entry
// is touched by a full verification run.
enum class Op {
    ellipse_geometry,
    lazutkin_chart,
    boundary_point,
    reexpress,
    billiard_step,
    to_lazutkin,
    from_lazutkin,
    lazutkin_step,
    rotation_number,
    elliptic_integral,
    elliptical_coords,
    first_integral,
    caustic_from_rotation_number,
    build_chart,
    max_perimeter_polygon,
    perimeter_functions,
    deformation_function,
    perimeter_defect,
    pseudo_orbit_diagnostics,
    integrability_scan,
    deformed_mode,
    base_modes,
    weighted_inner_product,
    tilde_coefficients,
    operator_report,
    five_mode_projection,
    ellipse_from_coeffs,
    fit_ellipse,
    run_experiment,
    fit_loglog_slope,
    emit,
    count_,
};

void mark(Op op) noexcept;
bool touched(Op op) noexcept;
void reset() noexcept;
std::string_view name(Op op) noexcept;
std::vector<Op> all();
std::vector<Op> untouched();

}  // namespace caustica::coverage
