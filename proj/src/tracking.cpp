#include "playfront/tracking.hpp"

#include <algorithm>
#include <set>

#include "playfront/errors.hpp"

namespace playfront {

std::pair<PcProfile, PcProfile> SimState::profiles(const Rat& t) const {
    std::vector<Rat> cuts;
    std::vector<Rat> us{far_left.u};
    std::vector<Rat> ws{far_left.w};
    for (const auto& f : fronts) {
        const Rat pos = f.position(t);
        if (!cuts.empty() && pos == cuts.back()) {
            // zero-width piece at a collision instant: the squeezed state
            // drops out of the instantaneous profile
            us.back() = f.right.u;
            ws.back() = f.right.w;
        } else {
            cuts.push_back(pos);
            us.push_back(f.right.u);
            ws.push_back(f.right.w);
        }
    }
    return {PcProfile(cuts, us), PcProfile(std::move(cuts), std::move(ws))};
}

Rat SimState::tv_u() const {
    Rat tv(0);
    Rat prev = far_left.u;
    for (const auto& f : fronts) {
        tv += (f.right.u - prev).abs();
        prev = f.right.u;
    }
    return tv;
}

Rat SimState::tv_w() const {
    Rat tv(0);
    Rat prev = far_left.w;
    for (const auto& f : fronts) {
        tv += (f.right.w - prev).abs();
        prev = f.right.w;
    }
    return tv;
}

void SimState::check_invariants() const {
    const PlayState* prev = &far_left;
    for (const auto& f : fronts) {
        if (f.left != *prev) throw InfeasibleState("front adjacency broken");
        validate_front(strip, HystFront{f.speed, f.left, f.right});
        prev = &f.right;
    }
    if (*prev != far_right) throw InfeasibleState("far-right adjacency broken");
}

SimState init_state(const PcProfile& u0, const PcProfile& w0, const HysteresisStrip& strip) {
    const AlignedProfilePair cells = align(u0, w0);
    for (std::size_t i = 0; i < cells.a.size(); ++i)
        if (!strip.contains(cells.a[i], cells.b[i]))
            throw InfeasibleData("initial data outside strip near cell " + std::to_string(i));

    SimState state{strip,
                   Rat(0),
                   {},
                   PlayState(strip, cells.a.front(), cells.b.front()),
                   PlayState(strip, cells.a.back(), cells.b.back()),
                   0};
    for (std::size_t k = 0; k < cells.cuts.size(); ++k) {
        const RiemannData data{strip, PlayState(strip, cells.a[k], cells.b[k]),
                               PlayState(strip, cells.a[k + 1], cells.b[k + 1])};
        const HystWaveFan fan = solve_riemann_hyst(data);
        for (const auto& hf : fan.fronts)
            state.fronts.push_back(
                {state.next_id++, Rat(0), cells.cuts[k], hf.speed, hf.left, hf.right});
    }
    state.check_invariants();
    return state;
}

namespace {

// Collision time of two fronts, assuming the left one is faster.
Rat collision_time(const Front& l, const Front& r) {
    return ((r.x_birth - r.speed * r.t_birth) - (l.x_birth - l.speed * l.t_birth)) /
           (l.speed - r.speed);
}

}  // namespace

std::optional<Event> next_event(const SimState& state) {
    std::optional<Rat> best_t;
    std::optional<Rat> best_x;
    for (std::size_t i = 0; i + 1 < state.fronts.size(); ++i) {
        const Front& l = state.fronts[i];
        const Front& r = state.fronts[i + 1];
        if (!(l.speed > r.speed)) continue;
        const Rat t = collision_time(l, r);
        if (t < state.time) throw Error("front ordering already violated");
        const Rat x = l.position(t);
        if (!best_t || t < *best_t || (t == *best_t && x < *best_x)) {
            best_t = t;
            best_x = x;
        }
    }
    if (!best_t) return std::nullopt;

    Event ev{*best_t, *best_x, {}};
    for (const auto& f : state.fronts) {
        if (f.position(ev.t) == ev.x)
            ev.participants.push_back(f.id);
        else if (!ev.participants.empty())
            break;  // participants form one contiguous run
    }
    return ev;
}

SimState resolve_event(const SimState& state, const Event& event) {
    if (event.t < state.time) throw StaleEvent("event in the past");
    if (event.participants.size() < 2) throw StaleEvent("event needs at least two fronts");

    const auto first = std::find_if(state.fronts.begin(), state.fronts.end(), [&](const Front& f) {
        return f.id == event.participants.front();
    });
    if (first == state.fronts.end()) throw StaleEvent("participant not alive");
    const auto begin = first;
    auto end = begin;
    for (int id : event.participants) {
        if (end == state.fronts.end() || end->id != id)
            throw StaleEvent("participants not contiguous in the state");
        if (end->position(event.t) != event.x) throw StaleEvent("participant misses the event");
        ++end;
    }
    // Every front at the collision point must participate.
    if (begin != state.fronts.begin() && std::prev(begin)->position(event.t) == event.x)
        throw StaleEvent("event omits a front at the collision point");
    if (end != state.fronts.end() && end->position(event.t) == event.x)
        throw StaleEvent("event omits a front at the collision point");

    SimState out = state;
    out.time = event.t;
    const auto out_begin = out.fronts.begin() + (begin - state.fronts.begin());
    const auto out_end = out.fronts.begin() + (end - state.fronts.begin());

    const RiemannData data{state.strip, begin->left, std::prev(end)->right};
    const HystWaveFan fan = solve_riemann_hyst(data);

    std::vector<Front> born;
    for (const auto& hf : fan.fronts)
        born.push_back({out.next_id++, event.t, event.x, hf.speed, hf.left, hf.right});

    const auto insert_at = out.fronts.erase(out_begin, out_end);
    out.fronts.insert(insert_at, born.begin(), born.end());
    out.check_invariants();
    return out;
}

Trajectory run(const PcProfile& u0, const PcProfile& w0, const HysteresisStrip& strip,
               const Rat& horizon) {
    if (horizon.sign() <= 0) throw DomainError("horizon must be positive");
    Trajectory traj(strip, u0, w0, horizon);
    SimState state = init_state(u0, w0, strip);
    for (const auto& f : state.fronts) traj.front_log.push_back({f, std::nullopt});
    traj.snapshots.push_back(state);

    constexpr std::size_t kEventCap = 1'000'000;
    while (true) {
        const auto ev = next_event(state);
        if (!ev || ev->t > horizon) break;
        if (traj.events.size() >= kEventCap) throw Error("event cap exceeded");

        EventRecord rec;
        rec.event = *ev;
        rec.tv_u_before = state.tv_u();
        rec.tv_w_before = state.tv_w();
        for (int id : ev->participants) {
            traj.front_log[static_cast<std::size_t>(id)].t_death = ev->t;
            if (traj.front_log[static_cast<std::size_t>(id)].front.carries_u())
                ++rec.u_carrying_consumed;
        }
        const int first_new_id = state.next_id;
        state = resolve_event(state, *ev);
        for (int id = first_new_id; id < state.next_id; ++id) {
            rec.produced.push_back(id);
            const auto it = std::find_if(state.fronts.begin(), state.fronts.end(),
                                         [&](const Front& f) { return f.id == id; });
            traj.front_log.push_back({*it, std::nullopt});
        }
        rec.tv_u_after = state.tv_u();
        rec.tv_w_after = state.tv_w();
        traj.events.push_back(std::move(rec));
        traj.snapshots.push_back(state);
    }
    return traj;
}

std::pair<PcProfile, PcProfile> Trajectory::sample(const Rat& t) const {
    if (t.sign() < 0 || t > horizon) throw DomainError("sample time outside [0, T]");
    // last snapshot with time <= t
    std::size_t lo = 0;
    for (std::size_t i = snapshots.size(); i-- > 0;) {
        if (snapshots[i].time <= t) {
            lo = i;
            break;
        }
    }
    return snapshots[lo].profiles(t);
}

std::vector<Rat> Trajectory::exceptional_x() const {
    std::set<Rat> xs;
    for (const auto& c : u0.cuts()) xs.insert(c);
    for (const auto& c : w0.cuts()) xs.insert(c);
    for (const auto& fr : front_log)
        if (fr.front.speed.is_zero()) xs.insert(fr.front.x_birth);
    for (const auto& er : events) xs.insert(er.event.x);
    return {xs.begin(), xs.end()};
}

bool Trajectory::is_exceptional(const Rat& x) const {
    const auto xs = exceptional_x();
    return std::binary_search(xs.begin(), xs.end(), x);
}

std::pair<PcSignal, PcSignal> Trajectory::time_section(const Rat& x) const {
    if (is_exceptional(x)) throw DomainError("time section at an exceptional x");
    std::set<Rat> times;
    for (const auto& fr : front_log) {
        const Front& f = fr.front;
        if (f.speed.is_zero()) continue;  // standing fronts never cross a non-exceptional x
        const Rat t_cross = f.t_birth + (x - f.x_birth) / f.speed;
        if (t_cross >= f.t_birth && t_cross <= fr.end_time(horizon) && t_cross.sign() > 0 &&
            t_cross < horizon)
            times.insert(t_cross);
    }
    std::vector<Rat> breaks{Rat(0)};
    breaks.insert(breaks.end(), times.begin(), times.end());
    breaks.push_back(horizon);
    std::vector<Rat> us;
    std::vector<Rat> ws;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        const Rat mid = half(breaks[i] + breaks[i + 1]);
        const auto profs = sample(mid);
        us.push_back(profs.first.value_at(x));
        ws.push_back(profs.second.value_at(x));
    }
    return {PcSignal(breaks, us), PcSignal(breaks, ws)};
}

std::optional<Rat> delta_floor(const PcProfile& u0, const PcProfile& w0,
                               const HysteresisStrip& strip) {
    const auto& uv = u0.values();
    Rat u_min = uv.front();
    Rat u_max = uv.front();
    for (const auto& v : uv) {
        u_min = min(u_min, v);
        u_max = max(u_max, v);
    }
    if (u_min == u_max) return std::nullopt;

    std::set<Rat> lattice;
    auto seed = [&](const Rat& v) {
        for (Rat off(0);; off += strip.a) {
            const Rat up = v + off;
            const Rat down = v - off;
            if (up >= u_min && up <= u_max) lattice.insert(up);
            if (down >= u_min && down <= u_max) lattice.insert(down);
            if (up > u_max && down < u_min) break;
        }
    };
    for (const auto& v : uv) seed(v);
    for (const auto& v : w0.values()) seed(v);

    Rat best = u_max - u_min;
    auto it = lattice.begin();
    for (auto next = std::next(it); next != lattice.end(); ++it, ++next)
        best = min(best, *next - *it);
    return best;
}

}  // namespace playfront
