#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "playfront/riemann.hpp"
#include "playfront/tracking.hpp"

namespace playfront {

/// Speed forced on a discontinuity by the extended jump condition
/// (u_l - u_r) / (u_l - u_r + w_l - w_r). Throws DegenerateJump on equal
/// states and NonAdmissiblePair when the denominator vanishes on a genuine
/// jump (no speed can satisfy the condition).
Rat rh_speed(const PlayState& left, const PlayState& right);

/// The four admissible jump patterns; anything else is not an entropy front.
enum class FrontClass { WStanding, UInterior, JointUpper, JointLower, NotEntropy };

FrontClass classify_front(const HystFront& front, const HysteresisStrip& strip);

/// A Kruzkov-type test pair (k, k_hat) inside the strip.
struct EntropyTestPoint {
    Rat k;
    Rat k_hat;
};

/// Exact value of
///   speed * [(|u_r-k| + |w_r-kh|) - (|u_l-k| + |w_l-kh|)] - [|u_r-k| - |u_l-k|];
/// entropy admissibility requires >= 0 for every test pair in the strip.
Rat entropy_pointwise(const HystFront& front, const EntropyTestPoint& test);

struct GridCheck {
    bool ok = true;
    std::optional<EntropyTestPoint> witness;
    std::size_t points_checked = 0;
};

/// Exhaustive sign check of entropy_pointwise over the strip. The expression
/// is piecewise affine in (k, k_hat) with kinks only on k = u_l, u_r and
/// k_hat = w_l, w_r and constant recession along the strip, so evaluating at
/// the state coordinates, their +-a shifts, and one exterior point per side
/// decides the sign everywhere. `refine` adds that many extra points per
/// axis gap (useful as a cross-check; never needed for exactness).
GridCheck entropy_grid_check(const HystFront& front, const HysteresisStrip& strip, int refine = 0);

/// Smooth compactly supported space-time test bump
///   exp(-1/(1-s^2)) in each normalized variable; evaluated in floating
/// point for quadrature only.
struct TestBump {
    double x0, t0;  // center
    double rx, rt;  // support radii

    double value(double x, double t) const;
    double ddx(double x, double t) const;
    double ddt(double x, double t) const;
};

struct GeometricResidual {
    Rat value;                                  // exactly 0 for a valid trajectory
    std::vector<std::pair<int, Rat>> brackets;  // (front id, jump defect) for nonzero defects
};

/// Weak-form residual by parts: sum over front segments of
///   [du - speed * (du + dw)] * (line integral of the bump).
/// Each bracket vanishes exactly on admissible fronts, so any nonzero value
/// names the offending front.
GeometricResidual weak_residual_geometric(const Trajectory& traj, const TestBump& bump);

/// Midpoint-rule evaluation of the weak form over the bump support on an
/// n x n mesh; O(1/n) for valid trajectories, plateaus at a nonzero value
/// for corrupted ones.
double weak_residual_quadrature(const Trajectory& traj, const TestBump& bump, int mesh_n);

struct EnergyReport {
    Rat lhs;          // (1/2) int (u^2 - u0^2) + (1/2) int (w^2 - w0^2)
    Rat mass_sweep;   // |dw/dt|(R x (0,t)) from the front-sweep formula
    Rat mass_fubini;  // same mass from per-x time sections
    bool holds = false;
    bool mass_agree = false;
};

/// Exact dissipation inequality lhs <= -a * mass at time t (not an event
/// time). Requires zero far states (UnboundedSupport otherwise).
EnergyReport hysteresis_energy_check(const Trajectory& traj, const Rat& t);

struct ContractionReport {
    Rat initial;
    std::vector<std::pair<Rat, Rat>> at_times;  // (t, combined distance)
    bool holds = true;
};

/// Combined L1 distance |u1-u2| + |w1-w2| at the sampled times never exceeds
/// its value at t = 0.
ContractionReport contraction_check(const Trajectory& a, const Trajectory& b,
                                    const std::vector<Rat>& times);

struct TimeModulusEntry {
    Rat t, t_prime;
    Rat u_distance, u_bound;
    Rat w_distance, w_bound;
};

struct TimeModulusReport {
    std::vector<TimeModulusEntry> entries;
    bool holds = true;
};

/// Exact L1-in-time bounds: int |u(t)-u(t')| <= Var(u0) |t-t'| and
/// int |w(t)-w(t')| <= (1/2) Var(w0) |t-t'|.
TimeModulusReport time_modulus_check(const Trajectory& traj,
                                     const std::vector<std::pair<Rat, Rat>>& pairs);

/// Exact space-time L1 distance over [0, T]:
/// int_0^T int (|u_a-u_b| + |w_a-w_b|) dx dt. The integrand in t is piecewise
/// affine between event and front-crossing times, so trapezoids are exact.
Rat spacetime_l1_distance(const Trajectory& a, const Trajectory& b);

}  // namespace playfront
