#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "playfront/signals.hpp"

namespace playfront {

/// A problem file: line-oriented `key = <json>` pairs, rationals as "p/q"
/// strings. Initial data come either as cut/value arrays or as a dense
/// tabulation of (x, u, w) cell samples to be coarsened.
struct ProblemSpec {
    Rat a{1};
    Rat horizon{1};
    std::optional<std::pair<Rat, Rat>> window;
    std::optional<PcProfile> u0;
    std::optional<PcProfile> w0;
    std::vector<std::array<Rat, 3>> tabulation;  // (x, u, w), x strictly increasing
    std::vector<Rat> snapshot_times;
    std::vector<int> levels;
    bool verify = false;

    bool has_tabulation() const { return !tabulation.empty(); }

    /// The pc initial data; coarsens the tabulation at `tab_pieces` cells
    /// when no explicit profiles are given.
    std::pair<PcProfile, PcProfile> initial_data(int tab_pieces = 64) const;

    /// Window for profile dumps: the given one, or the causal hull of the
    /// data cuts.
    std::pair<Rat, Rat> effective_window() const;
};

ProblemSpec parse_problem(const std::string& text);
ProblemSpec load_problem(const std::string& path);
std::string serialize_problem(const ProblemSpec& spec);

/// Piecewise-constant approximation of a tabulated (x, u, w) data set by
/// sampling at n equispaced cell midpoints over the tabulated span, null
/// outside it. Sampling never increases total variation.
std::pair<PcProfile, PcProfile> coarsen_bv(const std::vector<std::array<Rat, 3>>& tabulation,
                                           int n_pieces);

}  // namespace playfront
