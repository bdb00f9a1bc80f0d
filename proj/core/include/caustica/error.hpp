#pragma once

#include <stdexcept>
#include <string>

namespace caustica {

enum class ErrorKind {
    invalid_input,      // precondition violated by the caller
    convexity,          // realized curve not strictly convex
    reach,              // perturbation leaves the tubular neighbourhood
    tangency,           // reflection angle inside the glancing guard
    bracket,            // root finder could not bracket a root
    convergence,        // iterative method did not converge
    conditioning,       // linear system too ill-conditioned to trust
    io,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library carries a kind so callers (and the
/// experiment harness) can report it without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

inline const char* to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::invalid_input: return "invalid input";
    case ErrorKind::convexity: return "convexity violation";
    case ErrorKind::reach: return "reach violation";
    case ErrorKind::tangency: return "tangency guard";
    case ErrorKind::bracket: return "bracket failure";
    case ErrorKind::convergence: return "non-convergence";
    case ErrorKind::conditioning: return "ill-conditioned";
    case ErrorKind::io: return "i/o failure";
    }
    return "error";
}

#define CAUSTICA_REQUIRE(cond, kind, msg)                       \
    do {                                                        \
        if (!(cond)) throw ::caustica::Error((kind), (msg));    \
    } while (0)

}  // namespace caustica
