#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "playfront/problem.hpp"
#include "playfront/tracking.hpp"

namespace playfront {

/// Runs the full checker battery on a trajectory: jump conditions and
/// entropy class of every front, TV monotonicity, per-x hysteresis sections,
/// the exact weak-form residual, the energy inequality (compact support
/// only) and the L1 time modulus.
struct VerificationSummary {
    bool ok = true;
    nlohmann::ordered_json report;
};

VerificationSummary verify_trajectory(const Trajectory& traj, int max_sections = 16);

/// Deterministic emitters for a run; all rationals as "p/q".
void write_fronts_csv(const std::string& path, const Trajectory& traj);
void write_events_csv(const std::string& path, const Trajectory& traj);
void write_snapshots_csv(const std::string& path, const Trajectory& traj,
                         const std::vector<Rat>& times);
void write_diagnostics_json(const std::string& path, const Trajectory& traj,
                            const VerificationSummary* verification);

/// CLI commands; exit codes: 0 success, 1 verification failure (2 is the
/// driver's parse-error code).
int cmd_solve(const ProblemSpec& spec, const std::string& out_dir, std::ostream& log);
int cmd_riemann(const ProblemSpec& spec, const std::string& out_dir, std::ostream& log);
int cmd_verify(const ProblemSpec& spec, const std::string& out_dir, std::ostream& log);
int cmd_converge(const ProblemSpec& spec, const std::string& out_dir, std::ostream& log);

}  // namespace playfront
