#include "caustica/elliptic.hpp"

#include <cmath>

#include <boost/math/special_functions/ellint_1.hpp>
#include <boost/math/special_functions/ellint_2.hpp>

#include "caustica/coverage.hpp"
#include "caustica/error.hpp"

namespace caustica {

double elliptic_integral(EllipticKind kind, double k, double angle)
{
    coverage::mark(coverage::Op::elliptic_integral);
    CAUSTICA_REQUIRE(k >= 0.0 && k < 1.0, ErrorKind::invalid_input, "elliptic modulus must lie in [0,1)");
    using boost::math::ellint_1;
    using boost::math::ellint_2;
    switch (kind) {
    case EllipticKind::K: return ellint_1(k);
    case EllipticKind::E: return ellint_2(k);
    case EllipticKind::F: return ellint_1(k, angle);
    case EllipticKind::E_inc: return ellint_2(k, angle);
    }
    throw Error(ErrorKind::invalid_input, "unknown elliptic integral kind");
}

}  // namespace caustica
