#pragma once

#include <random>
#include <utility>
#include <vector>

#include "playfront/riemann.hpp"
#include "playfront/tracking.hpp"

namespace playfront::testing {

inline Rat rand_quarter(std::mt19937_64& rng, int lo = -20, int hi = 20) {
    std::uniform_int_distribution<int> num(lo * 4, hi * 4);
    return Rat(num(rng), 4);
}

inline Rat feasible_partner(std::mt19937_64& rng, const HysteresisStrip& strip, const Rat& u) {
    std::uniform_int_distribution<int> k(-4, 4);
    return u + strip.a * Rat(k(rng), 4);
}

inline RiemannData random_riemann(std::mt19937_64& rng, const HysteresisStrip& strip) {
    const Rat ul = rand_quarter(rng);
    const Rat ur = rand_quarter(rng);
    return RiemannData{strip, PlayState(strip, ul, feasible_partner(rng, strip, ul)),
                       PlayState(strip, ur, feasible_partner(rng, strip, ur))};
}

struct CorpusItem {
    HysteresisStrip strip;
    PcProfile u0;
    PcProfile w0;
};

/// Random feasible piecewise-constant data; with compact == true the far
/// pairs are pinned to (0, 0).
inline CorpusItem random_corpus(std::mt19937_64& rng, int pieces, bool compact, const Rat& a) {
    const HysteresisStrip strip{a};
    std::uniform_int_distribution<int> jitter(0, 3);
    std::vector<Rat> cuts;
    for (int i = 1; i < pieces; ++i) cuts.push_back(Rat(4 * i + jitter(rng), 4));
    std::vector<Rat> us;
    std::vector<Rat> ws;
    for (int i = 0; i < pieces; ++i) {
        const Rat u = rand_quarter(rng, -5, 5);
        us.push_back(u);
        ws.push_back(feasible_partner(rng, strip, u));
    }
    if (compact) {
        us.front() = us.back() = Rat(0);
        ws.front() = ws.back() = Rat(0);
    }
    return CorpusItem{strip, PcProfile(cuts, us), PcProfile(cuts, ws)};
}

/// Copy of a trajectory with one front's recorded speed replaced everywhere;
/// the result deliberately violates the jump condition.
inline Trajectory corrupt_front_speed(Trajectory traj, int id, const Rat& speed) {
    for (auto& fr : traj.front_log)
        if (fr.front.id == id) fr.front.speed = speed;
    for (auto& snap : traj.snapshots)
        for (auto& f : snap.fronts)
            if (f.id == id) f.speed = speed;
    return traj;
}

}  // namespace playfront::testing
