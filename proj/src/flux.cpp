#include "playfront/flux.hpp"

#include <algorithm>

#include "playfront/errors.hpp"

namespace playfront {

PiecewiseLinearFlux::PiecewiseLinearFlux(std::vector<std::pair<Rat, Rat>> vertices)
    : vertices_(std::move(vertices)) {
    if (vertices_.size() < 2) throw DomainError("flux needs at least 2 vertices");
    for (std::size_t i = 1; i < vertices_.size(); ++i)
        if (!(vertices_[i - 1].first < vertices_[i].first))
            throw DomainError("flux vertices not strictly increasing in u");
}

Rat PiecewiseLinearFlux::eval(const Rat& u) const {
    if (u < domain_lo() || u > domain_hi()) throw DomainError("flux evaluated outside its domain");
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), u,
                               [](const auto& v, const Rat& x) { return v.first < x; });
    if (it != vertices_.end() && it->first == u) return it->second;
    const auto& hi = *it;
    const auto& lo = *(it - 1);
    const Rat slope = (hi.second - lo.second) / (hi.first - lo.first);
    return lo.second + slope * (u - lo.first);
}

std::vector<std::pair<Rat, Rat>> PiecewiseLinearFlux::restricted_vertices(const Rat& lo,
                                                                          const Rat& hi) const {
    if (!(lo < hi)) throw DomainError("empty restriction interval");
    if (lo < domain_lo() || hi > domain_hi())
        throw DomainError("restriction interval exceeds flux domain");
    std::vector<std::pair<Rat, Rat>> out;
    out.emplace_back(lo, eval(lo));
    for (const auto& v : vertices_)
        if (lo < v.first && v.first < hi) out.push_back(v);
    out.emplace_back(hi, eval(hi));
    return out;
}

namespace {

// Cross product (A - O) x (B - O); positive for a counterclockwise turn.
Rat cross(const std::pair<Rat, Rat>& o, const std::pair<Rat, Rat>& a,
          const std::pair<Rat, Rat>& b) {
    return (a.first - o.first) * (b.second - o.second) -
           (a.second - o.second) * (b.first - o.first);
}

// Monotone chain over points already sorted by u. keep_sign = +1 builds the
// lower (convex) envelope, -1 the upper (concave) one; collinear middle
// points are dropped either way.
std::vector<std::pair<Rat, Rat>> envelope(const std::vector<std::pair<Rat, Rat>>& pts,
                                          int keep_sign) {
    std::vector<std::pair<Rat, Rat>> hull;
    for (const auto& p : pts) {
        while (hull.size() >= 2 &&
               cross(hull[hull.size() - 2], hull.back(), p).sign() * keep_sign <= 0)
            hull.pop_back();
        hull.push_back(p);
    }
    return hull;
}

}  // namespace

PiecewiseLinearFlux convex_minorant(const PiecewiseLinearFlux& flux, const Rat& lo,
                                    const Rat& hi) {
    return PiecewiseLinearFlux(envelope(flux.restricted_vertices(lo, hi), +1));
}

PiecewiseLinearFlux concave_majorant(const PiecewiseLinearFlux& flux, const Rat& lo,
                                     const Rat& hi) {
    return PiecewiseLinearFlux(envelope(flux.restricted_vertices(lo, hi), -1));
}

}  // namespace playfront
