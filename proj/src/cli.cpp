#include "playfront/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>

#include "playfront/errors.hpp"
#include "playfront/play.hpp"
#include "playfront/verification.hpp"

namespace playfront {

namespace {

using nlohmann::ordered_json;

std::string join_ids(const std::vector<int>& ids) {
    std::string s;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) s += ';';
        s += std::to_string(ids[i]);
    }
    return s;
}

std::string join_rats(const std::vector<Rat>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ';';
        s += xs[i].str();
    }
    return s;
}

bool zero_far(const Trajectory& traj) {
    const SimState& s0 = traj.snapshots.front();
    return s0.far_left.u.is_zero() && s0.far_left.w.is_zero() && s0.far_right.u.is_zero() &&
           s0.far_right.w.is_zero();
}

Rat non_event_time(const Trajectory& traj, Rat t) {
    auto is_event = [&](const Rat& x) {
        for (const auto& er : traj.events)
            if (er.event.t == x) return true;
        return false;
    };
    while (is_event(t) || t.sign() <= 0) t = t * Rat(1019, 1024) + traj.horizon / Rat(4096);
    return min(t, traj.horizon);
}

}  // namespace

VerificationSummary verify_trajectory(const Trajectory& traj, int max_sections) {
    VerificationSummary out;
    ordered_json& rep = out.report;

    // Every front ever alive: jump condition, entropy class, grid check.
    {
        bool ok = true;
        std::string detail;
        for (const auto& fr : traj.front_log) {
            const HystFront f{fr.front.speed, fr.front.left, fr.front.right};
            if (rh_speed(f.left, f.right) != f.speed) {
                ok = false;
                detail = "front " + std::to_string(fr.front.id) + " violates the jump condition";
                break;
            }
            if (classify_front(f, traj.strip) == FrontClass::NotEntropy) {
                ok = false;
                detail = "front " + std::to_string(fr.front.id) + " is not an entropy front";
                break;
            }
            if (!entropy_grid_check(f, traj.strip).ok) {
                ok = false;
                detail = "front " + std::to_string(fr.front.id) + " fails the entropy grid";
                break;
            }
        }
        rep["fronts"] = {{"checked", traj.front_log.size()}, {"ok", ok}};
        if (!detail.empty()) rep["fronts"]["detail"] = detail;
        out.ok = out.ok && ok;
    }

    // TV laws across events, the per-interaction drop, and the standing-front
    // budget.
    {
        bool ok = true;
        const auto delta = delta_floor(traj.u0, traj.w0, traj.strip);
        int uu_events = 0;
        std::size_t initial_standing = 0;
        for (const auto& f : traj.snapshots.front().fronts)
            if (!f.carries_u()) ++initial_standing;
        for (std::size_t i = 0; i < traj.events.size(); ++i) {
            const auto& er = traj.events[i];
            if (er.tv_u_after > er.tv_u_before || er.tv_w_after > er.tv_w_before) ok = false;
            if (er.u_carrying_consumed >= 2) {
                ++uu_events;
                if (delta && er.tv_u_before - er.tv_u_after < Rat(2) * *delta) ok = false;
            }
            std::size_t standing_alive = 0;
            for (const auto& f : traj.snapshots[i + 1].fronts)
                if (!f.carries_u()) ++standing_alive;
            if (standing_alive > initial_standing + static_cast<std::size_t>(uu_events)) ok = false;
        }
        rep["tv_laws"] = {{"events", traj.events.size()},
                          {"uu_events", uu_events},
                          {"delta_floor", delta ? ordered_json(delta->str()) : ordered_json()},
                          {"ok", ok}};
        out.ok = out.ok && ok;
    }

    // Per-x hysteresis: each time section must reproduce the Play fold and
    // satisfy the variational identity with equality.
    {
        bool ok = true;
        int checked = 0;
        std::vector<Rat> xs = traj.exceptional_x();
        std::vector<Rat> candidates;
        if (xs.empty()) {
            candidates.push_back(Rat(0));
        } else {
            candidates.push_back(xs.front() - Rat(1));
            for (std::size_t i = 0; i + 1 < xs.size(); ++i)
                candidates.push_back(half(xs[i] + xs[i + 1]));
            candidates.push_back(xs.back() + Rat(1));
        }
        for (const Rat& x : candidates) {
            if (checked >= max_sections) break;
            ++checked;
            const auto [us, ws] = traj.time_section(x);
            const Rat w0x = traj.w0.value_at(x);
            if (!(ws == play_pc(traj.strip, us, w0x))) ok = false;
            const auto var = verify_play_variational(traj.strip, us, ws, w0x);
            if (!var.ok() || !var.equality_everywhere) ok = false;
        }
        rep["per_x_hysteresis"] = {{"sections", checked}, {"ok", ok}};
        out.ok = out.ok && ok;
    }

    // Exact weak-form residual over a few bumps spanning the action region.
    {
        bool ok = true;
        Rat lo_r(0), hi_r(0);
        const auto xs = traj.exceptional_x();
        if (!xs.empty()) {
            lo_r = xs.front();
            hi_r = xs.back();
        }
        const double lo = lo_r.to_double() - 1.0;
        const double hi = hi_r.to_double() + traj.horizon.to_double() + 1.0;
        const double T = traj.horizon.to_double();
        for (int i = 1; i <= 3; ++i) {
            const TestBump bump{lo + i * (hi - lo) / 4.0, T / 2, (hi - lo) / 2.0, 0.45 * T};
            if (!weak_residual_geometric(traj, bump).value.is_zero()) ok = false;
        }
        rep["weak_residual"] = {{"bumps", 3}, {"ok", ok}};
        out.ok = out.ok && ok;
    }

    // Energy inequality (compact support only) and the L1 time modulus.
    if (zero_far(traj)) {
        bool ok = true;
        for (int j = 1; j <= 3; ++j) {
            const Rat t = non_event_time(traj, traj.horizon * Rat(2 * j - 1, 8));
            const auto er = hysteresis_energy_check(traj, t);
            if (!er.holds || !er.mass_agree) ok = false;
        }
        rep["energy"] = {{"times", 3}, {"ok", ok}};
        out.ok = out.ok && ok;
    } else {
        rep["energy"] = {{"skipped", "far states not null"}};
    }
    {
        const std::vector<std::pair<Rat, Rat>> pairs = {
            {Rat(0), traj.horizon},
            {traj.horizon / Rat(4), traj.horizon * Rat(3, 4)},
            {traj.horizon / Rat(3), traj.horizon / Rat(2)}};
        const auto mod = time_modulus_check(traj, pairs);
        rep["time_modulus"] = {{"pairs", pairs.size()}, {"ok", mod.holds}};
        out.ok = out.ok && mod.holds;
    }

    rep["ok"] = out.ok;
    return out;
}

void write_fronts_csv(const std::string& path, const Trajectory& traj) {
    std::ofstream f(path);
    f << "id,t_birth,x_birth,speed,u_l,w_l,u_r,w_r,t_death\n";
    for (const auto& fr : traj.front_log) {
        f << fr.front.id << ',' << fr.front.t_birth.str() << ',' << fr.front.x_birth.str() << ','
          << fr.front.speed.str() << ',' << fr.front.left.u.str() << ',' << fr.front.left.w.str()
          << ',' << fr.front.right.u.str() << ',' << fr.front.right.w.str() << ','
          << (fr.t_death ? fr.t_death->str() : "") << '\n';
    }
}

void write_events_csv(const std::string& path, const Trajectory& traj) {
    std::ofstream f(path);
    f << "t,x,consumed,produced,tv_u_before,tv_u_after,tv_w_before,tv_w_after\n";
    for (const auto& er : traj.events) {
        f << er.event.t.str() << ',' << er.event.x.str() << ',' << join_ids(er.event.participants)
          << ',' << join_ids(er.produced) << ',' << er.tv_u_before.str() << ','
          << er.tv_u_after.str() << ',' << er.tv_w_before.str() << ',' << er.tv_w_after.str()
          << '\n';
    }
}

void write_snapshots_csv(const std::string& path, const Trajectory& traj,
                         const std::vector<Rat>& times) {
    std::ofstream f(path);
    f << "t,cuts,u_values,w_values\n";
    for (const Rat& t : times) {
        const auto [u, w] = traj.sample(t);
        const auto aligned = align(u, w);
        f << t.str() << ',' << join_rats(aligned.cuts) << ',' << join_rats(aligned.a) << ','
          << join_rats(aligned.b) << '\n';
    }
}

void write_diagnostics_json(const std::string& path, const Trajectory& traj,
                            const VerificationSummary* verification) {
    ordered_json j;
    j["a"] = traj.strip.a.str();
    j["horizon"] = traj.horizon.str();
    const auto& init = traj.snapshots.front();
    std::size_t u_fronts = 0;
    std::size_t standing = 0;
    for (const auto& f : init.fronts) (f.carries_u() ? u_fronts : standing)++;
    j["initial"] = {{"tv_u", traj.u0.total_variation().str()},
                    {"tv_w", traj.w0.total_variation().str()},
                    {"u_fronts", u_fronts},
                    {"standing_fronts", standing}};
    const auto delta = delta_floor(traj.u0, traj.w0, traj.strip);
    j["delta_floor"] = delta ? ordered_json(delta->str()) : ordered_json();

    int uu_events = 0;
    for (const auto& er : traj.events)
        if (er.u_carrying_consumed >= 2) ++uu_events;
    j["events"] = traj.events.size();
    j["uu_events"] = uu_events;

    // Termination accounting: u-u interactions against TV(u0)/(2 delta),
    // everything else against the standing-front budget.
    ordered_json budget;
    if (delta) {
        const Rat uu_bound = traj.u0.total_variation() / (Rat(2) * *delta);
        const Rat total =
            uu_bound + Rat(static_cast<long>(u_fronts)) *
                           (Rat(static_cast<long>(standing)) + Rat(uu_events));
        budget["uu_bound"] = uu_bound.str();
        budget["total_bound"] = total.str();
        budget["within"] = Rat(static_cast<long>(traj.events.size())) <= total;
    } else {
        budget["uu_bound"] = nullptr;
        budget["total_bound"] = "0/1";
        budget["within"] = traj.events.empty();
    }
    j["event_budget"] = budget;

    ordered_json timeline = ordered_json::array();
    timeline.push_back({"0/1", traj.u0.total_variation().str(), traj.w0.total_variation().str()});
    for (const auto& er : traj.events)
        timeline.push_back({er.event.t.str(), er.tv_u_after.str(), er.tv_w_after.str()});
    j["tv_timeline"] = timeline;

    j["verification"] = verification ? verification->report : ordered_json();

    std::ofstream f(path);
    f << j.dump(2) << '\n';
}

namespace {

std::vector<Rat> snapshot_times_for(const ProblemSpec& spec) {
    if (!spec.snapshot_times.empty()) return spec.snapshot_times;
    return {Rat(0), half(spec.horizon), spec.horizon};
}

}  // namespace

int cmd_solve(const ProblemSpec& spec, const std::string& out_dir, std::ostream& log) {
    const HysteresisStrip strip(spec.a);
    const auto [u0, w0] = spec.initial_data();
    const Trajectory traj = run(u0, w0, strip, spec.horizon);

    std::filesystem::create_directories(out_dir);
    write_fronts_csv(out_dir + "/fronts.csv", traj);
    write_events_csv(out_dir + "/events.csv", traj);
    write_snapshots_csv(out_dir + "/snapshots.csv", traj, snapshot_times_for(spec));

    std::optional<VerificationSummary> ver;
    if (spec.verify) ver = verify_trajectory(traj);
    write_diagnostics_json(out_dir + "/diagnostics.json", traj, ver ? &*ver : nullptr);

    log << "solve: " << traj.front_log.size() << " fronts, " << traj.events.size()
        << " events, tv_u " << traj.u0.total_variation().str() << " -> "
        << traj.final_state().tv_u().str() << '\n';
    if (ver) log << "verification: " << (ver->ok ? "pass" : "FAIL") << '\n';
    log << "outputs in " << out_dir << '\n';
    return ver && !ver->ok ? 1 : 0;
}

int cmd_riemann(const ProblemSpec& spec, const std::string& out_dir, std::ostream& log) {
    const HysteresisStrip strip(spec.a);
    const auto [u0, w0] = spec.initial_data();
    const auto cells = align(u0, w0);
    if (cells.cuts.size() != 1)
        throw DegenerateData("riemann command needs exactly one initial jump");
    const RiemannData data{strip, PlayState(strip, cells.a[0], cells.b[0]),
                           PlayState(strip, cells.a[1], cells.b[1])};
    const HystWaveFan fan = solve_riemann_hyst(data);

    ordered_json j;
    j["a"] = spec.a.str();
    j["far_left"] = {{"u", fan.far_left.u.str()}, {"w", fan.far_left.w.str()}};
    j["far_right"] = {{"u", fan.far_right.u.str()}, {"w", fan.far_right.w.str()}};
    ordered_json fronts = ordered_json::array();
    for (const auto& f : fan.fronts) {
        fronts.push_back({{"speed", f.speed.str()},
                          {"left", {{"u", f.left.u.str()}, {"w", f.left.w.str()}}},
                          {"right", {{"u", f.right.u.str()}, {"w", f.right.w.str()}}}});
    }
    j["fronts"] = fronts;

    std::filesystem::create_directories(out_dir);
    std::ofstream f(out_dir + "/fan.json");
    f << j.dump(2) << '\n';

    // Profiles of the self-similar solution at the positive snapshot times,
    // clipped to the window.
    const auto window = spec.effective_window();
    std::ofstream prof(out_dir + "/profiles.csv");
    prof << "t,cuts,u_values,w_values\n";
    for (const Rat& t : snapshot_times_for(spec)) {
        if (t.sign() <= 0) continue;
        const auto [u, w] = fan_to_profiles(fan, t, window);
        const auto aligned = align(u, w);
        prof << t.str() << ',' << join_rats(aligned.cuts) << ',' << join_rats(aligned.a) << ','
             << join_rats(aligned.b) << '\n';
    }

    log << "riemann fan: " << fan.fronts.size() << " front(s)\n";
    for (const auto& fr : fan.fronts)
        log << "  speed " << fr.speed.str() << "  (" << fr.left.u.str() << ", " << fr.left.w.str()
            << ") | (" << fr.right.u.str() << ", " << fr.right.w.str() << ")\n";
    return 0;
}

int cmd_verify(const ProblemSpec& spec, const std::string& out_dir, std::ostream& log) {
    const HysteresisStrip strip(spec.a);
    const auto [u0, w0] = spec.initial_data();
    const Trajectory traj = run(u0, w0, strip, spec.horizon);
    const VerificationSummary ver = verify_trajectory(traj);

    std::filesystem::create_directories(out_dir);
    std::ofstream f(out_dir + "/verification.json");
    f << ver.report.dump(2) << '\n';

    for (const auto& [key, val] : ver.report.items()) {
        if (!val.is_object()) continue;
        log << key << ": ";
        if (val.contains("skipped"))
            log << "skipped\n";
        else
            log << (val.value("ok", false) ? "pass" : "FAIL") << '\n';
    }
    return ver.ok ? 0 : 1;
}

int cmd_converge(const ProblemSpec& spec, const std::string& out_dir, std::ostream& log) {
    if (!spec.has_tabulation())
        throw SpecParseError("converge needs a tabulation data block");
    std::vector<int> levels = spec.levels.empty() ? std::vector<int>{8, 16, 32, 64} : spec.levels;

    const HysteresisStrip strip(spec.a);
    std::filesystem::create_directories(out_dir);
    std::ofstream csv(out_dir + "/converge.csv");
    csv << "level,n,l1_prev,tv_u0,tv_w0,events\n";
    log << "level  n     l1_prev          tv_u0    tv_w0    events\n";

    std::optional<Trajectory> prev;
    for (std::size_t k = 0; k < levels.size(); ++k) {
        const auto [u0, w0] = coarsen_bv(spec.tabulation, levels[k]);
        Trajectory traj = run(u0, w0, strip, spec.horizon);
        std::string dist;
        if (prev) dist = spacetime_l1_distance(traj, *prev).str();
        csv << k << ',' << levels[k] << ',' << dist << ',' << u0.total_variation().str() << ','
            << w0.total_variation().str() << ',' << traj.events.size() << '\n';
        char row[160];
        std::snprintf(row, sizeof row, "%-6zu %-5d %-16s %-8s %-8s %zu", k, levels[k],
                      dist.empty() ? "-" : dist.c_str(), u0.total_variation().str().c_str(),
                      w0.total_variation().str().c_str(), traj.events.size());
        log << row << '\n';
        prev = std::move(traj);
    }
    return 0;
}

}  // namespace playfront
