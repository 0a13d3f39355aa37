#include "playfront/riemann.hpp"

#include <algorithm>

#include "playfront/errors.hpp"
#include "playfront/play.hpp"

namespace playfront {

WaveFan solve_riemann_plf(const PiecewiseLinearFlux& flux, const Rat& u_l, const Rat& u_r) {
    if (u_l == u_r) throw DegenerateData("riemann data with equal states");
    WaveFan fan;
    fan.left_value = u_l;
    if (u_l < u_r) {
        const auto hull = convex_minorant(flux, u_l, u_r).vertices();
        for (std::size_t i = 1; i < hull.size(); ++i) {
            const Rat speed = (hull[i].second - hull[i - 1].second) /
                              (hull[i].first - hull[i - 1].first);
            fan.waves.push_back({speed, hull[i].first});
        }
    } else {
        const auto hull = concave_majorant(flux, u_r, u_l).vertices();
        for (std::size_t i = hull.size() - 1; i >= 1; --i) {
            const Rat speed = (hull[i].second - hull[i - 1].second) /
                              (hull[i].first - hull[i - 1].first);
            fan.waves.push_back({speed, hull[i - 1].first});
        }
    }
    return fan;
}

void validate_front(const HysteresisStrip& strip, const HystFront& f) {
    const Rat du = f.left.u - f.right.u;
    const Rat dw = f.left.w - f.right.w;
    if (du != f.speed * (du + dw))
        throw InfeasibleState("front violates the extended jump condition");
    if (f.speed == Rat(0)) {
        if (!du.is_zero() || dw.is_zero())
            throw InfeasibleState("standing front must jump in w only");
    } else if (f.speed == Rat(1)) {
        if (!dw.is_zero() || du.is_zero())
            throw InfeasibleState("unit-speed front must jump in u only");
    } else if (f.speed == Rat(1, 2)) {
        const bool upper = strip.on_upper(f.left.u, f.left.w) && strip.on_upper(f.right.u, f.right.w);
        const bool lower = strip.on_lower(f.left.u, f.left.w) && strip.on_lower(f.right.u, f.right.w);
        if (du.is_zero() || dw.is_zero() || du != dw || !(upper || lower))
            throw InfeasibleState("joint front must jump equally along one boundary");
    } else {
        throw InfeasibleState("front speed outside {0, 1/2, 1}");
    }
}

PiecewiseLinearFlux effective_flux(const RiemannData& data) {
    const Rat& u_l = data.left.u;
    const Rat& u_r = data.right.u;
    if (u_l == u_r) throw DegenerateData("effective flux for equal u states");
    const Rat lo = min(u_l, u_r);
    const Rat hi = max(u_l, u_r);
    // Kink where the frozen-w stretch of the Play path meets a boundary:
    // the upper one (u = w_r - a) when u travels down from u_r, the lower
    // one (u = w_r + a) when it travels up.
    const Rat kink = clamp(u_l < u_r ? data.right.w - data.strip.a : data.right.w + data.strip.a,
                           lo, hi);
    // Slope on the low-u side: the boundary-following stretch (1/2) sits
    // below the kink when u decreases toward u_l, above it when u increases.
    const Rat slope_low = u_l < u_r ? Rat(1, 2) : Rat(1);
    const Rat slope_high = u_l < u_r ? Rat(1) : Rat(1, 2);

    std::vector<std::pair<Rat, Rat>> vs;
    vs.emplace_back(lo, half(lo));
    if (lo < kink && kink < hi) {
        vs.emplace_back(kink, vs.back().second + slope_low * (kink - lo));
        vs.emplace_back(hi, vs.back().second + slope_high * (hi - kink));
    } else {
        // Kink at an endpoint: a single affine piece, with the slope of the
        // regime that survives.
        const Rat slope = (kink == lo) ? slope_high : slope_low;
        vs.emplace_back(hi, vs.back().second + slope * (hi - lo));
    }
    return PiecewiseLinearFlux(std::move(vs));
}

HystWaveFan solve_riemann_hyst(const RiemannData& data) {
    const HysteresisStrip& strip = data.strip;
    HystWaveFan fan{data.left, data.right, {}};
    if (data.left.u == data.right.u) {
        if (data.left.w != data.right.w)
            fan.fronts.push_back({Rat(0), data.left, data.right});
        for (const auto& f : fan.fronts) validate_front(strip, f);
        return fan;
    }

    const PiecewiseLinearFlux g = effective_flux(data);
    const WaveFan plf = solve_riemann_plf(g, data.left.u, data.right.u);

    std::vector<Rat> values{plf.left_value};
    for (const auto& w : plf.waves) values.push_back(w.right_value);

    // w states along the fan, folded right to left through the Play jump.
    std::vector<Rat> wvals(values.size(), data.right.w);
    for (std::size_t i = values.size() - 1; i >= 1; --i)
        wvals[i - 1] = play_jump(strip, wvals[i], values[i - 1]);

    if (wvals.front() != data.left.w)
        fan.fronts.push_back(
            {Rat(0), data.left, PlayState(strip, data.left.u, wvals.front())});
    for (std::size_t i = 1; i < values.size(); ++i)
        fan.fronts.push_back({plf.waves[i - 1].speed,
                              PlayState(strip, values[i - 1], wvals[i - 1]),
                              PlayState(strip, values[i], wvals[i])});

    for (const auto& f : fan.fronts) validate_front(strip, f);
    for (std::size_t i = 1; i < fan.fronts.size(); ++i) {
        if (!(fan.fronts[i - 1].speed < fan.fronts[i].speed) ||
            fan.fronts[i - 1].right != fan.fronts[i].left)
            throw InfeasibleState("fan fronts out of order");
    }
    return fan;
}

namespace {

PcProfile clip_profile(const std::vector<Rat>& cuts, const std::vector<Rat>& values,
                       const std::pair<Rat, Rat>& window) {
    if (!(window.first < window.second)) throw DomainError("empty window");
    std::vector<Rat> c;
    std::vector<Rat> v;
    v.push_back(values.front());
    for (std::size_t i = 0; i < cuts.size(); ++i) {
        if (cuts[i] <= window.first) {
            v.front() = values[i + 1];
        } else if (cuts[i] < window.second) {
            c.push_back(cuts[i]);
            v.push_back(values[i + 1]);
        }
    }
    return PcProfile(std::move(c), std::move(v));
}

}  // namespace

std::pair<PcProfile, PcProfile> fan_to_profiles(const HystWaveFan& fan, const Rat& t,
                                                const std::pair<Rat, Rat>& window) {
    if (t.sign() <= 0) throw DomainError("fan profiles need t > 0");
    std::vector<Rat> cuts;
    std::vector<Rat> us{fan.far_left.u};
    std::vector<Rat> ws{fan.far_left.w};
    for (const auto& f : fan.fronts) {
        cuts.push_back(f.speed * t);
        us.push_back(f.right.u);
        ws.push_back(f.right.w);
    }
    return {clip_profile(cuts, us, window), clip_profile(cuts, ws, window)};
}

}  // namespace playfront
