#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "playfront/signals.hpp"

namespace playfront {

/// One input jump of the Play operator: the previous output clamped into
/// [u_new - a, u_new + a].
Rat play_jump(const HysteresisStrip& strip, const Rat& w_prev, const Rat& u_new);

/// Play output for a piecewise-constant input, folding play_jump across the
/// jumps of u. Throws InfeasibleInitialState if |u(0+) - w0| > a.
PcSignal play_pc(const HysteresisStrip& strip, const PcSignal& input, const Rat& w0);

/// Exact Play output for a continuous piecewise-linear input: flat while the
/// pair is interior, following the active boundary once it is reached. Adds
/// at most one node (the boundary hit) per input segment.
PlSignal play_piecewise_linear(const HysteresisStrip& strip, const PlSignal& input, const Rat& w0);

/// Fine-step clamping oracle on a uniform grid; converges to
/// play_piecewise_linear at rate O(step * Lip(input)).
std::vector<std::pair<Rat, Rat>> play_oracle(const HysteresisStrip& strip, const PlSignal& input,
                                             const Rat& w0, const Rat& step);

/// Outcome of the variational-inequality characterization on a pc pair:
/// feasibility of (u, w) everywhere plus the prefix inequality
///   sum (u~ - w~) dW >= a * sum |dW|.
/// For genuine Play outputs the inequality holds with equality at every
/// prefix; a strict occurrence is flagged as suspicious.
struct VariationalReport {
    bool w0_matches = true;
    bool feasible_everywhere = true;
    bool inequality_holds = true;
    bool equality_everywhere = true;
    std::optional<Rat> first_violation_time;  // earliest breakpoint where (i) or (ii) fails
    std::optional<Rat> first_strict_time;     // earliest strict-inequality jump

    bool ok() const { return w0_matches && feasible_everywhere && inequality_holds; }
};

VariationalReport verify_play_variational(const HysteresisStrip& strip, const PcSignal& u,
                                          const PcSignal& w, const Rat& w0);

}  // namespace playfront
