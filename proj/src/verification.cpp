#include "playfront/verification.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "playfront/errors.hpp"

namespace playfront {

Rat rh_speed(const PlayState& left, const PlayState& right) {
    const Rat du = left.u - right.u;
    const Rat dw = left.w - right.w;
    if (du.is_zero() && dw.is_zero()) throw DegenerateJump("equal states carry no front");
    if ((du + dw).is_zero())
        throw NonAdmissiblePair("jump with du = -dw admits no propagation speed");
    return du / (du + dw);
}

FrontClass classify_front(const HystFront& f, const HysteresisStrip& strip) {
    const Rat du = f.left.u - f.right.u;
    const Rat dw = f.left.w - f.right.w;
    if (du.is_zero() && dw.is_zero()) throw DegenerateJump("equal states carry no front");
    if ((du + dw).is_zero()) return FrontClass::NotEntropy;
    if (f.speed * (du + dw) != du) return FrontClass::NotEntropy;
    if (du.is_zero()) return FrontClass::WStanding;
    if (dw.is_zero()) return FrontClass::UInterior;
    if (f.speed != Rat(1, 2)) return FrontClass::NotEntropy;
    if (f.right.u > f.left.u && strip.on_upper(f.left.u, f.left.w) &&
        strip.on_upper(f.right.u, f.right.w))
        return FrontClass::JointUpper;
    if (f.right.u < f.left.u && strip.on_lower(f.left.u, f.left.w) &&
        strip.on_lower(f.right.u, f.right.w))
        return FrontClass::JointLower;
    return FrontClass::NotEntropy;
}

Rat entropy_pointwise(const HystFront& f, const EntropyTestPoint& test) {
    const Rat right = (f.right.u - test.k).abs() + (f.right.w - test.k_hat).abs();
    const Rat left = (f.left.u - test.k).abs() + (f.left.w - test.k_hat).abs();
    return f.speed * (right - left) - ((f.right.u - test.k).abs() - (f.left.u - test.k).abs());
}

GridCheck entropy_grid_check(const HystFront& f, const HysteresisStrip& strip, int refine) {
    std::set<Rat> axis;
    for (const Rat& v : {f.left.u, f.right.u, f.left.w, f.right.w}) {
        axis.insert(v);
        axis.insert(v - strip.a);
        axis.insert(v + strip.a);
    }
    axis.insert(*axis.begin() - Rat(1));
    axis.insert(*axis.rbegin() + Rat(1));
    std::vector<Rat> ks(axis.begin(), axis.end());
    if (refine > 0) {
        std::vector<Rat> dense;
        for (std::size_t i = 0; i + 1 < ks.size(); ++i) {
            dense.push_back(ks[i]);
            const Rat step = (ks[i + 1] - ks[i]) / Rat(refine + 1);
            for (int j = 1; j <= refine; ++j) dense.push_back(ks[i] + Rat(j) * step);
        }
        dense.push_back(ks.back());
        ks = std::move(dense);
    }

    GridCheck out;
    for (const Rat& k : ks) {
        for (const Rat& kh : ks) {
            if ((k - kh).abs() > strip.a) continue;
            ++out.points_checked;
            if (entropy_pointwise(f, {k, kh}).sign() < 0) {
                out.ok = false;
                out.witness = EntropyTestPoint{k, kh};
                return out;
            }
        }
    }
    return out;
}

namespace {

double bump1d(double s) {
    if (std::abs(s) >= 1.0) return 0.0;
    return std::exp(-1.0 / (1.0 - s * s));
}

double bump1d_deriv(double s) {
    if (std::abs(s) >= 1.0) return 0.0;
    const double q = 1.0 - s * s;
    return bump1d(s) * (-2.0 * s / (q * q));
}

}  // namespace

double TestBump::value(double x, double t) const {
    return bump1d((x - x0) / rx) * bump1d((t - t0) / rt);
}

double TestBump::ddx(double x, double t) const {
    return bump1d_deriv((x - x0) / rx) / rx * bump1d((t - t0) / rt);
}

double TestBump::ddt(double x, double t) const {
    return bump1d((x - x0) / rx) * bump1d_deriv((t - t0) / rt) / rt;
}

namespace {

void require_interior_bump(const Trajectory& traj, const TestBump& bump) {
    if (!(bump.rx > 0.0) || !(bump.rt > 0.0)) throw DomainError("bump radii must be positive");
    if (!(bump.t0 - bump.rt > 0.0) || !(bump.t0 + bump.rt < traj.horizon.to_double()))
        throw DomainError("bump support must sit strictly inside (0, T)");
}

}  // namespace

GeometricResidual weak_residual_geometric(const Trajectory& traj, const TestBump& bump) {
    require_interior_bump(traj, bump);
    GeometricResidual out{Rat(0), {}};
    constexpr int kLineSamples = 512;
    for (const auto& fr : traj.front_log) {
        const Front& f = fr.front;
        const Rat du = f.left.u - f.right.u;
        const Rat dw = f.left.w - f.right.w;
        const Rat bracket = du - f.speed * (du + dw);
        if (bracket.is_zero()) continue;
        out.brackets.emplace_back(f.id, bracket);

        const double t_lo = std::max(f.t_birth.to_double(), bump.t0 - bump.rt);
        const double t_hi = std::min(fr.end_time(traj.horizon).to_double(), bump.t0 + bump.rt);
        if (t_hi <= t_lo) continue;
        const double h = (t_hi - t_lo) / kLineSamples;
        const double xb = f.x_birth.to_double();
        const double tb = f.t_birth.to_double();
        const double s = f.speed.to_double();
        double line = 0.0;
        for (int i = 0; i < kLineSamples; ++i) {
            const double t = t_lo + (i + 0.5) * h;
            line += bump.value(xb + s * (t - tb), t);
        }
        line *= h;
        out.value += bracket * Rat::from_double(line);
    }
    return out;
}

double weak_residual_quadrature(const Trajectory& traj, const TestBump& bump, int mesh_n) {
    require_interior_bump(traj, bump);
    if (mesh_n < 8) throw DomainError("quadrature mesh too coarse");
    const double hx = 2.0 * bump.rx / mesh_n;
    const double ht = 2.0 * bump.rt / mesh_n;
    double total = 0.0;
    for (int j = 0; j < mesh_n; ++j) {
        const double t = bump.t0 - bump.rt + (j + 0.5) * ht;
        const auto [up, wp] = traj.sample(Rat::from_double(t));
        std::vector<double> cuts;
        cuts.reserve(up.cuts().size());
        for (const auto& c : up.cuts()) cuts.push_back(c.to_double());
        std::vector<double> wcuts;
        wcuts.reserve(wp.cuts().size());
        for (const auto& c : wp.cuts()) wcuts.push_back(c.to_double());
        std::vector<double> uv;
        for (const auto& v : up.values()) uv.push_back(v.to_double());
        std::vector<double> wv;
        for (const auto& v : wp.values()) wv.push_back(v.to_double());
        for (int i = 0; i < mesh_n; ++i) {
            const double x = bump.x0 - bump.rx + (i + 0.5) * hx;
            const auto ui = std::upper_bound(cuts.begin(), cuts.end(), x) - cuts.begin();
            const auto wi = std::upper_bound(wcuts.begin(), wcuts.end(), x) - wcuts.begin();
            const double u = uv[static_cast<std::size_t>(ui)];
            const double w = wv[static_cast<std::size_t>(wi)];
            total += (u + w) * bump.ddt(x, t) + u * bump.ddx(x, t);
        }
    }
    return total * hx * ht;
}

namespace {

void require_zero_far(const Trajectory& traj) {
    const SimState& s0 = traj.snapshots.front();
    if (!s0.far_left.u.is_zero() || !s0.far_left.w.is_zero() || !s0.far_right.u.is_zero() ||
        !s0.far_right.w.is_zero())
        throw UnboundedSupport("energy accounting needs zero far states");
}

// A point of the open cell (lo, hi) avoiding the finite excluded set.
Rat cell_representative(const Rat& lo, const Rat& hi, const std::vector<Rat>& excluded) {
    Rat x = half(lo + hi);
    for (int i = 0; i < 64; ++i) {
        if (!std::binary_search(excluded.begin(), excluded.end(), x)) return x;
        x = half(x + hi);
    }
    throw Error("no representative found in cell");
}

}  // namespace

EnergyReport hysteresis_energy_check(const Trajectory& traj, const Rat& t) {
    require_zero_far(traj);
    if (t.sign() <= 0 || t > traj.horizon) throw DomainError("energy check time outside (0, T]");
    for (const auto& er : traj.events)
        if (er.event.t == t) throw DomainError("energy check at an event time");

    EnergyReport rep;
    const auto [ut, wt] = traj.sample(t);
    rep.lhs = half(integral_of_square(ut) - integral_of_square(traj.u0)) +
              half(integral_of_square(wt) - integral_of_square(traj.w0));

    // Front-sweep mass: each w-carrying front contributes |dw| times the
    // x-length it sweeps inside (0, t).
    rep.mass_sweep = Rat(0);
    std::set<Rat> cell_edges;
    for (const auto& fr : traj.front_log) {
        const Front& f = fr.front;
        const Rat dw = f.left.w - f.right.w;
        if (dw.is_zero() || f.speed.is_zero()) continue;
        const Rat t_end = fr.t_death ? min(*fr.t_death, t) : t;
        if (t_end <= f.t_birth) continue;
        rep.mass_sweep += dw.abs() * f.speed * (t_end - f.t_birth);
        cell_edges.insert(f.x_birth);
        cell_edges.insert(f.position(t_end));
    }

    // Independent route: integrate the per-x jump mass of w(x, .) over the
    // arrangement cells, reading each section off sampled profiles.
    rep.mass_fubini = Rat(0);
    if (cell_edges.size() >= 2) {
        const std::vector<Rat> edges(cell_edges.begin(), cell_edges.end());
        const std::vector<Rat> excluded = traj.exceptional_x();
        for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
            const Rat x = cell_representative(edges[i], edges[i + 1], excluded);
            const auto [us, ws] = traj.time_section(x);
            Rat per_x(0);
            for (std::size_t j = 0; j + 1 < ws.values().size(); ++j)
                if (ws.breakpoints()[j + 1] < t)
                    per_x += (ws.values()[j + 1] - ws.values()[j]).abs();
            rep.mass_fubini += per_x * (edges[i + 1] - edges[i]);
        }
    }

    rep.mass_agree = rep.mass_sweep == rep.mass_fubini;
    rep.holds = rep.lhs <= -(traj.strip.a * rep.mass_sweep);
    return rep;
}

ContractionReport contraction_check(const Trajectory& a, const Trajectory& b,
                                    const std::vector<Rat>& times) {
    ContractionReport rep;
    rep.initial = l1_distance(a.u0, b.u0) + l1_distance(a.w0, b.w0);
    for (const Rat& t : times) {
        const auto [ua, wa] = a.sample(t);
        const auto [ub, wb] = b.sample(t);
        const Rat d = l1_distance(ua, ub) + l1_distance(wa, wb);
        rep.at_times.emplace_back(t, d);
        if (d > rep.initial) rep.holds = false;
    }
    return rep;
}

TimeModulusReport time_modulus_check(const Trajectory& traj,
                                     const std::vector<std::pair<Rat, Rat>>& pairs) {
    TimeModulusReport rep;
    const Rat var_u = traj.u0.total_variation();
    const Rat var_w = traj.w0.total_variation();
    for (const auto& [t, tp] : pairs) {
        const auto [ut, wt] = traj.sample(t);
        const auto [utp, wtp] = traj.sample(tp);
        TimeModulusEntry e;
        e.t = t;
        e.t_prime = tp;
        e.u_distance = l1_distance(ut, utp);
        e.w_distance = l1_distance(wt, wtp);
        e.u_bound = var_u * (t - tp).abs();
        e.w_bound = half(var_w) * (t - tp).abs();
        if (e.u_distance > e.u_bound || e.w_distance > e.w_bound) rep.holds = false;
        rep.entries.push_back(std::move(e));
    }
    return rep;
}

Rat spacetime_l1_distance(const Trajectory& a, const Trajectory& b) {
    if (a.horizon != b.horizon) throw DomainError("trajectories with different horizons");
    std::set<Rat> kinks{Rat(0), a.horizon};
    for (const auto& er : a.events) kinks.insert(er.event.t);
    for (const auto& er : b.events) kinks.insert(er.event.t);
    for (const auto& fa : a.front_log) {
        for (const auto& fb : b.front_log) {
            if (fa.front.speed == fb.front.speed) continue;
            const Rat t = ((fb.front.x_birth - fb.front.speed * fb.front.t_birth) -
                           (fa.front.x_birth - fa.front.speed * fa.front.t_birth)) /
                          (fa.front.speed - fb.front.speed);
            if (t >= max(fa.front.t_birth, fb.front.t_birth) &&
                t <= min(fa.end_time(a.horizon), fb.end_time(b.horizon)))
                kinks.insert(t);
        }
    }
    const std::vector<Rat> times(kinks.begin(), kinks.end());
    std::vector<Rat> dist;
    dist.reserve(times.size());
    for (const Rat& t : times) {
        const auto [ua, wa] = a.sample(t);
        const auto [ub, wb] = b.sample(t);
        dist.push_back(l1_distance(ua, ub) + l1_distance(wa, wb));
    }
    Rat total(0);
    for (std::size_t i = 0; i + 1 < times.size(); ++i)
        total += half(dist[i] + dist[i + 1]) * (times[i + 1] - times[i]);
    return total;
}

}  // namespace playfront
