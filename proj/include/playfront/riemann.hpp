#pragma once

#include <utility>
#include <vector>

#include "playfront/flux.hpp"
#include "playfront/signals.hpp"

namespace playfront {

struct Wave {
    Rat speed;
    Rat right_value;

    friend bool operator==(const Wave& a, const Wave& b) {
        return a.speed == b.speed && a.right_value == b.right_value;
    }
};

/// Self-similar fan for a scalar conservation law: constant states separated
/// by jumps at strictly increasing speeds, each speed the chord slope of the
/// flux between its neighbor values.
struct WaveFan {
    Rat left_value;
    std::vector<Wave> waves;

    Rat right_value() const { return waves.empty() ? left_value : waves.back().right_value; }
};

/// Entropy fan for the Riemann problem with a piecewise-linear flux: the
/// convex-minorant vertices for u_l < u_r, the concave-majorant vertices for
/// u_l > u_r. DegenerateData if u_l == u_r.
WaveFan solve_riemann_plf(const PiecewiseLinearFlux& flux, const Rat& u_l, const Rat& u_r);

struct RiemannData {
    HysteresisStrip strip;
    PlayState left;
    PlayState right;
};

/// One discontinuity of the hysteresis solution. Speeds are 0 (pure w-jump),
/// 1 (interior u-jump, w frozen) or 1/2 (joint jump along one strip
/// boundary); all satisfy the extended jump condition
///   u_l - u_r = speed * (u_l - u_r + w_l - w_r).
struct HystFront {
    Rat speed;
    PlayState left;
    PlayState right;

    friend bool operator==(const HystFront& a, const HystFront& b) {
        return a.speed == b.speed && a.left == b.left && a.right == b.right;
    }
};

/// Throws InfeasibleState unless the front satisfies every HystFront invariant.
void validate_front(const HysteresisStrip& strip, const HystFront& front);

struct HystWaveFan {
    PlayState far_left;
    PlayState far_right;
    std::vector<HystFront> fronts;  // strictly increasing speeds, adjacent states chained
};

/// Flux whose weak derivative encodes the hysteresis switching rule along the
/// Play path from (u_r, w_r) toward u_l: slope 1 while the pair moves with w
/// frozen, slope 1/2 while it follows a strip boundary. At most two affine
/// pieces; normalized by g(min) = min/2. DegenerateData if u_l == u_r.
PiecewiseLinearFlux effective_flux(const RiemannData& data);

/// Unified hysteresis Riemann solver: effective flux -> envelope fan ->
/// Play-folded w states -> optional standing w-front at x = 0. Empty fan iff
/// the two full states coincide.
HystWaveFan solve_riemann_hyst(const RiemannData& data);

/// Profiles of the self-similar solution at time t > 0, with cuts at
/// speed * t, clipped to the window.
std::pair<PcProfile, PcProfile> fan_to_profiles(const HystWaveFan& fan, const Rat& t,
                                                const std::pair<Rat, Rat>& window);

}  // namespace playfront
