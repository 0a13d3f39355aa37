#pragma once

#include <utility>
#include <vector>

#include "playfront/rational.hpp"

namespace playfront {

/// Continuous piecewise-affine flux, stored as its vertex list
/// (strictly increasing u-coordinates, >= 2 vertices).
class PiecewiseLinearFlux {
public:
    explicit PiecewiseLinearFlux(std::vector<std::pair<Rat, Rat>> vertices);

    const std::vector<std::pair<Rat, Rat>>& vertices() const { return vertices_; }
    const Rat& domain_lo() const { return vertices_.front().first; }
    const Rat& domain_hi() const { return vertices_.back().first; }

    Rat eval(const Rat& u) const;  // DomainError outside [domain_lo, domain_hi]

    /// Vertex list restricted to [lo, hi]: interpolated endpoints plus the
    /// interior vertices. DomainError if [lo, hi] exceeds the domain.
    std::vector<std::pair<Rat, Rat>> restricted_vertices(const Rat& lo, const Rat& hi) const;

    friend bool operator==(const PiecewiseLinearFlux& a, const PiecewiseLinearFlux& b) {
        return a.vertices_ == b.vertices_;
    }

private:
    std::vector<std::pair<Rat, Rat>> vertices_;
};

/// Greatest convex minorant of the flux on [lo, hi] (lower convex envelope of
/// the restricted vertices). Agrees with the flux at lo and hi, lies below it
/// pointwise, and carries no collinear interior vertices.
PiecewiseLinearFlux convex_minorant(const PiecewiseLinearFlux& flux, const Rat& lo, const Rat& hi);

/// Least concave majorant on [lo, hi] (upper envelope), mirror of the above.
PiecewiseLinearFlux concave_majorant(const PiecewiseLinearFlux& flux, const Rat& lo, const Rat& hi);

}  // namespace playfront
