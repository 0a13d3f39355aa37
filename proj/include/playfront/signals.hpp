#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "playfront/rational.hpp"

namespace playfront {

/// Feasibility band {(u,w) : |u-w| <= a}.
struct HysteresisStrip {
    Rat a;

    explicit HysteresisStrip(Rat half_width);
    bool contains(const Rat& u, const Rat& w) const { return (u - w).abs() <= a; }
    bool on_upper(const Rat& u, const Rat& w) const { return w == u + a; }
    bool on_lower(const Rat& u, const Rat& w) const { return w == u - a; }
};

/// A feasible (u, w) pair; checked against the strip at construction.
struct PlayState {
    Rat u;
    Rat w;

    PlayState(const HysteresisStrip& strip, Rat u_, Rat w_);

    friend bool operator==(const PlayState& a, const PlayState& b) {
        return a.u == b.u && a.w == b.w;
    }
    friend bool operator!=(const PlayState& a, const PlayState& b) { return !(a == b); }
};

/// Piecewise-constant time signal on [0, T]: values live on the open
/// intervals between breakpoints, nothing is stored at the breakpoints
/// themselves. Always normalized (no two adjacent equal values).
class PcSignal {
public:
    PcSignal(std::vector<Rat> breakpoints, std::vector<Rat> values);
    static PcSignal constant(const Rat& duration, const Rat& value);

    const std::vector<Rat>& breakpoints() const { return breaks_; }
    const std::vector<Rat>& values() const { return values_; }
    std::size_t pieces() const { return values_.size(); }
    const Rat& duration() const { return breaks_.back(); }
    const Rat& first_value() const { return values_.front(); }
    const Rat& last_value() const { return values_.back(); }

    /// Right-continuous representative; defined for t in [0, T), and at
    /// t = T returns the final value.
    const Rat& value_right(const Rat& t) const;

    /// Value on the open interval containing t; t must not be a breakpoint.
    const Rat& value_at(const Rat& t) const;

    PcSignal restrict_from(const Rat& t0) const;  // tail on [t0, T] shifted to start at 0

    friend bool operator==(const PcSignal& a, const PcSignal& b) {
        return a.breaks_ == b.breaks_ && a.values_ == b.values_;
    }

private:
    std::vector<Rat> breaks_;  // size N+1, breaks_[0] == 0, strictly increasing
    std::vector<Rat> values_;  // size N
};

/// Aligns two signals on the union of their breakpoints. Throws
/// MismatchedBreakpoints if durations differ.
struct AlignedPcPair {
    std::vector<Rat> breaks;
    std::vector<Rat> a;
    std::vector<Rat> b;
};
AlignedPcPair align(const PcSignal& a, const PcSignal& b);

/// Continuous piecewise-linear time signal (>= 2 nodes, strictly increasing t).
class PlSignal {
public:
    explicit PlSignal(std::vector<std::pair<Rat, Rat>> nodes);

    const std::vector<std::pair<Rat, Rat>>& nodes() const { return nodes_; }
    const Rat& start_time() const { return nodes_.front().first; }
    const Rat& end_time() const { return nodes_.back().first; }
    const Rat& start_value() const { return nodes_.front().second; }
    Rat value_at(const Rat& t) const;
    Rat lipschitz() const;  // max |segment slope|

    friend bool operator==(const PlSignal& a, const PlSignal& b) { return a.nodes_ == b.nodes_; }

private:
    std::vector<std::pair<Rat, Rat>> nodes_;
};

/// Piecewise-constant spatial profile on the whole line: N values separated
/// by N-1 interior cuts; the first and last values extend to -inf / +inf.
/// Always normalized.
class PcProfile {
public:
    PcProfile(std::vector<Rat> cuts, std::vector<Rat> values);
    static PcProfile constant(const Rat& value);

    const std::vector<Rat>& cuts() const { return cuts_; }
    const std::vector<Rat>& values() const { return values_; }
    std::size_t pieces() const { return values_.size(); }
    const Rat& far_left() const { return values_.front(); }
    const Rat& far_right() const { return values_.back(); }

    /// Value of the piece right of x (right-continuous representative).
    const Rat& value_right(const Rat& x) const;
    /// Value on the open interval containing x; x must not be a cut.
    const Rat& value_at(const Rat& x) const;

    Rat total_variation() const;

    friend bool operator==(const PcProfile& a, const PcProfile& b) {
        return a.cuts_ == b.cuts_ && a.values_ == b.values_;
    }
    friend bool operator!=(const PcProfile& a, const PcProfile& b) { return !(a == b); }

private:
    std::vector<Rat> cuts_;
    std::vector<Rat> values_;
};

struct AlignedProfilePair {
    std::vector<Rat> cuts;
    std::vector<Rat> a;
    std::vector<Rat> b;
};
AlignedProfilePair align(const PcProfile& a, const PcProfile& b);

/// Exact L1 distance between two profiles. Requires equal far values on each
/// side (the difference is then compactly supported); throws WindowMismatch
/// otherwise.
Rat l1_distance(const PcProfile& a, const PcProfile& b);

/// Exact integral of value^2 over the line; requires zero far values
/// (UnboundedSupport otherwise).
Rat integral_of_square(const PcProfile& p);

/// Sum of absolute adjacent differences of a profile.
Rat total_variation(const PcProfile& p);

}  // namespace playfront
