#pragma once

#include <vector>

#include "caustica/dynamics.hpp"
#include "caustica/elliptic.hpp"
#include "caustica/geometry.hpp"

namespace caustica {

struct EllipticCoordsPoint {
    double mu = 0.0;
    double psi = 0.0;
};

/// Confocal coordinates about the ellipse's foci (+-h, 0) in its own frame, h = a e.
EllipticCoordsPoint elliptical_coords(const EllipsePose& pose, Vec2 point);
Vec2 from_elliptical_coords(const EllipsePose& pose, const EllipticCoordsPoint& c);

/// cos^2 phi + e^2 cos^2 psi sin^2 phi.
double first_integral(const EllipsePose& pose, double psi, double phi);

/// First integral of a boundary state given by the ellipse's internal parameter
/// (psi coincides with t on the boundary).
inline double first_integral_t(const EllipsePose& pose, double t, double phi)
{
    return first_integral(pose, t, phi);
}

/// Confocal ellipse X^2/(a^2 - Z) + Y^2/(b^2 - Z) = 1 in the ellipse's frame.
struct ConfocalCaustic {
    double Z = 0.0;
};

/// Rotation number of the dynamics tangent to the caustic Z, Z in [0, b^2].
double caustic_rotation_number(const EllipsePose& pose, double Z);

ConfocalCaustic caustic_from_rotation_number(const EllipsePose& pose, double omega);

enum class ChartMethod { density, orbit_average };

struct ChartOptions {
    ChartMethod method = ChartMethod::density;
    bool validate = true;
    int validation_samples = 32;
    double tolerance = 1e-8;
    int orbit_average_nodes = 256;
};

struct ChartRow {
    double theta, S, Phi, Xq, Yq, dXq;
};

/// Action-angle chart of the 1/q caustic: theta is the angle in which the billiard map
/// acts as theta -> theta + 1/q.
class AAChart {
public:
    int q() const { return q_; }
    double omega() const { return 1.0 / q_; }
    const ConfocalCaustic& caustic() const { return caustic_; }
    const EllipsePose& pose() const { return boundary_.base(); }
    const Boundary& boundary() const { return boundary_; }
    ChartMethod method() const { return method_; }
    /// Max relative residual of h(F t) F'(t) = h(t) on the validation samples.
    double invariance_residual() const { return invariance_residual_; }
    /// Max |S(theta + 1/q) - s'(S(theta), Phi(theta))| on the validation samples.
    double conjugacy_residual() const { return conjugacy_residual_; }

    // angle as a lifted function of the ellipse parameter
    double theta_of_t(double t) const;
    double dtheta_dt(double t) const;
    double t_of_theta(double theta) const;

    double S(double theta) const;
    double Phi(double theta) const;
    double Phi_of_t(double t) const;
    double Xq(double theta) const;
    double Yq(double theta) const;
    double dXq(double theta) const;
    /// theta as a function of the Lazutkin parameter (lifted).
    double Xq_inv(double x) const;
    /// 1 / X_q'(X_q^{-1}(x)).
    double dtheta_dx(double x) const;
    double eta(double x) const;

    std::vector<ChartRow> table(int nodes) const;

private:
    friend AAChart build_chart(const EllipsePose& pose, int q, const ChartOptions& opt);
    Boundary boundary_;
    int q_ = 3;
    ConfocalCaustic caustic_;
    ChartMethod method_ = ChartMethod::density;
    double k_ = 0.0, Kk_ = 0.0;            // density: modulus and K(k)
    numerics::TrigSeries periodic_angle_;  // orbit_average: theta - t / 2 pi
    numerics::TrigSeries periodic_angle_d_;
    double invariance_residual_ = 0.0;
    double conjugacy_residual_ = 0.0;
};

AAChart build_chart(const EllipsePose& pose, int q, const ChartOptions& opt = {});

}  // namespace caustica
