#pragma once

#include <optional>
#include <vector>

#include "caustica/geometry.hpp"

namespace caustica {

struct PhasePoint {
    double s = 0.0;
    double phi = 0.0;
};

struct LazPoint {
    double x = 0.0;
    double y = 0.0;
};

struct StepOptions {
    double phi_min = 1e-6;
    int brackets = 256;
    /// Ray/boundary residual tolerance relative to the perimeter.
    double residual_tol = 1e-13;
};

/// Billiard state in the internal curve parameter; t is a lift (not reduced mod 2 pi).
struct TState {
    double t = 0.0;
    double phi = 0.0;
};

/// One reflection in the internal parameter. The returned t lies in (t, t + 2 pi).
TState billiard_step_t(const Boundary& omega, const TState& p, const StepOptions& opt = {});

/// Same as billiard_step_t, but from a known boundary jet at the start point.
TState billiard_step_t(const Boundary& omega, const TState& p, const CurveJet& start, const StepOptions& opt);

PhasePoint billiard_step(const Boundary& omega, const PhasePoint& p, const StepOptions& opt = {});

LazPoint to_lazutkin(const Boundary& omega, const PhasePoint& p);
PhasePoint from_lazutkin(const Boundary& omega, const LazPoint& q);

/// Billiard map in Lazutkin coordinates. The returned x is lifted so that x' - x is the
/// advance in (0, 1).
LazPoint lazutkin_step(const Boundary& omega, const LazPoint& q, const StepOptions& opt = {});

double rotation_number(const Boundary& omega, const PhasePoint& p0, int iterations,
                       const StepOptions& opt = {});

struct OrbitRow {
    int step = 0;
    double s = 0.0;  // reduced mod perimeter
    double phi = 0.0;
    double x = 0.0;
    double y = 0.0;
    std::optional<double> I;  // only on unperturbed ellipses
};

std::vector<OrbitRow> orbit(const Boundary& omega, const PhasePoint& p0, int steps,
                            const StepOptions& opt = {});

}  // namespace caustica
