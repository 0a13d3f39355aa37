#include <doctest.h>

#include <random>

#include "playfront/errors.hpp"
#include "playfront/flux.hpp"

using namespace playfront;

namespace {

using Pt = std::pair<Rat, Rat>;

// Gift-wrapping envelope oracle, independent of the monotone chain: from the
// left endpoint repeatedly pick the point minimizing (lower) or maximizing
// (upper) the chord slope, taking the farthest on ties.
std::vector<Pt> wrap_envelope(std::vector<Pt> pts, bool lower) {
    std::vector<Pt> hull{pts.front()};
    std::size_t cur = 0;
    while (cur + 1 < pts.size()) {
        std::size_t best = cur + 1;
        Rat best_slope =
            (pts[best].second - pts[cur].second) / (pts[best].first - pts[cur].first);
        for (std::size_t j = cur + 2; j < pts.size(); ++j) {
            const Rat s = (pts[j].second - pts[cur].second) / (pts[j].first - pts[cur].first);
            if ((lower && s < best_slope) || (!lower && s > best_slope) ||
                (s == best_slope && pts[j].first > pts[best].first)) {
                best = j;
                best_slope = s;
            }
        }
        hull.push_back(pts[best]);
        cur = best;
    }
    return hull;
}

PiecewiseLinearFlux random_flux(std::mt19937_64& rng, int vertices) {
    std::uniform_int_distribution<int> f(-12, 12);
    std::vector<Pt> vs;
    for (int i = 0; i < vertices; ++i) vs.emplace_back(Rat(i), Rat(f(rng), 2));
    return PiecewiseLinearFlux(std::move(vs));
}

}  // namespace

TEST_CASE("convex input is its own minorant") {
    const PiecewiseLinearFlux f({{Rat(0), Rat(2)}, {Rat(1), Rat(0)}, {Rat(2), Rat(1)}});
    CHECK(convex_minorant(f, Rat(0), Rat(2)) == f);
}

TEST_CASE("minorant skips a concave kink") {
    const PiecewiseLinearFlux f(
        {{Rat(0), Rat(4)}, {Rat(1), Rat(2)}, {Rat(2), Rat(1)}, {Rat(3), Rat(2)}, {Rat(4), Rat(5, 2)}});
    const PiecewiseLinearFlux hull = convex_minorant(f, Rat(0), Rat(4));
    const std::vector<Pt> expect{
        {Rat(0), Rat(4)}, {Rat(1), Rat(2)}, {Rat(2), Rat(1)}, {Rat(4), Rat(5, 2)}};
    CHECK(hull.vertices() == expect);
    CHECK(hull.eval(Rat(3)) == Rat(7, 4));  // strictly below f there
}

TEST_CASE("affine flux is its own majorant") {
    const PiecewiseLinearFlux f({{Rat(0), Rat(1)}, {Rat(3), Rat(4)}});
    CHECK(concave_majorant(f, Rat(0), Rat(3)) == f);
}

TEST_CASE("restriction interpolates the endpoints") {
    const PiecewiseLinearFlux f({{Rat(0), Rat(0)}, {Rat(2), Rat(4)}, {Rat(4), Rat(0)}});
    const auto hull = convex_minorant(f, Rat(1), Rat(3));
    CHECK(hull.domain_lo() == Rat(1));
    CHECK(hull.domain_hi() == Rat(3));
    CHECK(hull.eval(Rat(1)) == Rat(2));
    CHECK(hull.eval(Rat(3)) == Rat(2));
    CHECK_THROWS_AS(convex_minorant(f, Rat(-1), Rat(3)), DomainError);
    CHECK_THROWS_AS(convex_minorant(f, Rat(3), Rat(3)), DomainError);
}

TEST_CASE("property: envelopes match the gift-wrapping oracle") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 200; ++trial) {
        const PiecewiseLinearFlux f = random_flux(rng, 6);
        const auto lo = convex_minorant(f, Rat(0), Rat(5));
        const auto hi = concave_majorant(f, Rat(0), Rat(5));
        CHECK(lo.vertices() == wrap_envelope(f.vertices(), true));
        CHECK(hi.vertices() == wrap_envelope(f.vertices(), false));
    }
}

TEST_CASE("property: minorant bounds, endpoint agreement, idempotence") {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 100; ++trial) {
        const PiecewiseLinearFlux f = random_flux(rng, 7);
        const auto hull = convex_minorant(f, Rat(0), Rat(6));
        CHECK(hull.eval(Rat(0)) == f.eval(Rat(0)));
        CHECK(hull.eval(Rat(6)) == f.eval(Rat(6)));
        for (int k = 0; k <= 24; ++k) {
            const Rat u(k, 4);
            CHECK(hull.eval(u) <= f.eval(u));
        }
        CHECK(convex_minorant(hull, Rat(0), Rat(6)) == hull);
        // chord slopes strictly increase
        const auto& vs = hull.vertices();
        for (std::size_t i = 2; i < vs.size(); ++i) {
            const Rat s1 =
                (vs[i - 1].second - vs[i - 2].second) / (vs[i - 1].first - vs[i - 2].first);
            const Rat s2 = (vs[i].second - vs[i - 1].second) / (vs[i].first - vs[i - 1].first);
            CHECK(s1 < s2);
        }
    }
}

TEST_CASE("property: reflection duality") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        const PiecewiseLinearFlux f = random_flux(rng, 6);
        std::vector<Pt> neg;
        for (const auto& [u, y] : f.vertices()) neg.emplace_back(u, -y);
        const PiecewiseLinearFlux fneg{std::move(neg)};
        const auto maj = concave_majorant(f, Rat(0), Rat(5));
        const auto dual = convex_minorant(fneg, Rat(0), Rat(5));
        REQUIRE(maj.vertices().size() == dual.vertices().size());
        for (std::size_t i = 0; i < maj.vertices().size(); ++i) {
            CHECK(maj.vertices()[i].first == dual.vertices()[i].first);
            CHECK(maj.vertices()[i].second == -dual.vertices()[i].second);
        }
    }
}
