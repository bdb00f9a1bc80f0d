#pragma once

namespace caustica {

enum class EllipticKind { K, E, F, E_inc };

/// Legendre elliptic integrals in the modulus convention (integrand sqrt(1 - k^2 sin^2)).
/// `angle` is used by the incomplete kinds and may be any real number; the
/// periodic extension F(phi + pi) = F(phi) + 2K applies.
double elliptic_integral(EllipticKind kind, double k, double angle = 0.0);

}  // namespace caustica
