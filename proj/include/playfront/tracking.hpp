#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "playfront/riemann.hpp"
#include "playfront/signals.hpp"

namespace playfront {

/// A discontinuity line in the (x, t) plane, alive from its birth point,
/// moving at constant speed in {0, 1/2, 1}.
struct Front {
    int id;
    Rat t_birth;
    Rat x_birth;
    Rat speed;
    PlayState left;
    PlayState right;

    Rat position(const Rat& t) const { return x_birth + speed * (t - t_birth); }
    bool carries_u() const { return speed.sign() > 0; }
};

/// Fronts sorted by position at `time`, chained between the far states.
struct SimState {
    HysteresisStrip strip;
    Rat time;
    std::vector<Front> fronts;
    PlayState far_left;
    PlayState far_right;
    int next_id = 0;

    /// The instantaneous profiles at time t; states squeezed to zero width
    /// (touching fronts at a collision instant) drop out.
    std::pair<PcProfile, PcProfile> profiles(const Rat& t) const;

    /// Total variation of the state chain: the TV of the profiles at any
    /// time strictly between events, independent of front positions.
    Rat tv_u() const;
    Rat tv_w() const;

    void check_invariants() const;  // adjacency + per-front invariants
};

/// A collision: every participant occupies position x at time t.
struct Event {
    Rat t;
    Rat x;
    std::vector<int> participants;  // ids, left to right
};

struct EventRecord {
    Event event;
    std::vector<int> produced;
    int u_carrying_consumed = 0;
    Rat tv_u_before, tv_u_after;
    Rat tv_w_before, tv_w_after;
};

struct FrontRecord {
    Front front;
    std::optional<Rat> t_death;

    Rat end_time(const Rat& horizon) const { return t_death ? min(*t_death, horizon) : horizon; }
};

/// Full history of one run: per-event log, per-front lifespans, and the
/// state snapshots taken after t = 0 and after every resolution.
class Trajectory {
public:
    HysteresisStrip strip;
    PcProfile u0;
    PcProfile w0;
    Rat horizon;
    std::vector<SimState> snapshots;
    std::vector<EventRecord> events;
    std::vector<FrontRecord> front_log;

    Trajectory(HysteresisStrip strip_, PcProfile u0_, PcProfile w0_, Rat horizon_)
        : strip(std::move(strip_)), u0(std::move(u0_)), w0(std::move(w0_)),
          horizon(std::move(horizon_)) {}

    const SimState& final_state() const { return snapshots.back(); }

    /// Exact profiles at time t (right limit at event times).
    std::pair<PcProfile, PcProfile> sample(const Rat& t) const;

    /// Exact time signals (u(x,.), w(x,.)) on [0, horizon] for an x outside
    /// the exceptional set.
    std::pair<PcSignal, PcSignal> time_section(const Rat& x) const;

    /// x positions where time sections are ill-defined: initial cuts,
    /// standing-front locations, collision points.
    std::vector<Rat> exceptional_x() const;

    bool is_exceptional(const Rat& x) const;
};

/// Solves one local Riemann problem per initial jump and splices the fans.
/// Throws InfeasibleData when |u0 - w0| > a somewhere.
SimState init_state(const PcProfile& u0, const PcProfile& w0, const HysteresisStrip& strip);

/// Earliest future collision among adjacent converging fronts; none if all
/// pairs diverge. Simultaneous collisions at distinct points come out one at
/// a time, smallest x first.
std::optional<Event> next_event(const SimState& state);

/// Advances to the event, replaces the participants by the fan of the local
/// Riemann problem between their outer neighbor states. StaleEvent if the
/// event does not match the state.
SimState resolve_event(const SimState& state, const Event& event);

/// Runs the front-tracking loop until no event remains at or before T.
Trajectory run(const PcProfile& u0, const PcProfile& w0, const HysteresisStrip& strip,
               const Rat& horizon);

/// Minimal positive gap of the reachable u-value lattice
/// {u_i +- k a} u {w_j +- k a} within [min u, max u]; nullopt when the
/// lattice is a single point (no u-front can ever exist).
std::optional<Rat> delta_floor(const PcProfile& u0, const PcProfile& w0,
                               const HysteresisStrip& strip);

}  // namespace playfront
