#include "playfront/play.hpp"

#include "playfront/errors.hpp"

namespace playfront {

Rat play_jump(const HysteresisStrip& strip, const Rat& w_prev, const Rat& u_new) {
    return clamp(w_prev, u_new - strip.a, u_new + strip.a);
}

PcSignal play_pc(const HysteresisStrip& strip, const PcSignal& input, const Rat& w0) {
    if (!strip.contains(input.first_value(), w0))
        throw InfeasibleInitialState("initial pair (" + input.first_value().str() + ", " +
                                     w0.str() + ") outside strip");
    std::vector<Rat> values;
    values.push_back(w0);
    for (std::size_t i = 1; i < input.pieces(); ++i)
        values.push_back(play_jump(strip, values.back(), input.values()[i]));
    return PcSignal(input.breakpoints(), std::move(values));
}

namespace {

void push_node(std::vector<std::pair<Rat, Rat>>& nodes, const Rat& t, const Rat& w) {
    if (!nodes.empty() && nodes.back().first == t) return;
    if (nodes.size() >= 2) {
        // drop the middle node when collinear, keeping the output canonical
        const auto& p = nodes[nodes.size() - 2];
        const auto& q = nodes.back();
        const Rat lhs = (q.second - p.second) * (t - p.first);
        const Rat rhs = (w - p.second) * (q.first - p.first);
        if (lhs == rhs) nodes.pop_back();
    }
    nodes.emplace_back(t, w);
}

}  // namespace

PlSignal play_piecewise_linear(const HysteresisStrip& strip, const PlSignal& input,
                               const Rat& w0) {
    if (!strip.contains(input.start_value(), w0))
        throw InfeasibleInitialState("initial pair (" + input.start_value().str() + ", " +
                                     w0.str() + ") outside strip");
    const Rat& a = strip.a;
    std::vector<std::pair<Rat, Rat>> out;
    out.emplace_back(input.start_time(), w0);
    Rat w = w0;
    for (std::size_t i = 1; i < input.nodes().size(); ++i) {
        const auto& [t0, v0] = input.nodes()[i - 1];
        const auto& [t1, v1] = input.nodes()[i];
        if (v1 == v0) {
            push_node(out, t1, w);
            continue;
        }
        // Moving toward the boundary that drags w along: lower (w = u - a)
        // when increasing, upper (w = u + a) when decreasing.
        const Rat target = v1 > v0 ? w + a : w - a;
        const bool hits = v1 > v0 ? (v1 > target) : (v1 < target);
        if (!hits) {
            push_node(out, t1, w);
            continue;
        }
        const Rat slope = (v1 - v0) / (t1 - t0);
        const Rat t_hit = t0 + (target - v0) / slope;
        push_node(out, t_hit, w);
        w = v1 > v0 ? v1 - a : v1 + a;
        push_node(out, t1, w);
    }
    return PlSignal(std::move(out));
}

std::vector<std::pair<Rat, Rat>> play_oracle(const HysteresisStrip& strip, const PlSignal& input,
                                             const Rat& w0, const Rat& step) {
    if (step.sign() <= 0) throw DomainError("oracle step must be positive");
    const auto& nodes = input.nodes();
    std::vector<std::pair<Rat, Rat>> samples;
    Rat t = input.start_time();
    Rat w = w0;
    samples.emplace_back(t, w);
    std::size_t seg = 1;
    Rat slope = (nodes[1].second - nodes[0].second) / (nodes[1].first - nodes[0].first);
    while (t < input.end_time()) {
        t = min(t + step, input.end_time());
        if (nodes[seg].first < t) {
            while (nodes[seg].first < t) ++seg;
            slope = (nodes[seg].second - nodes[seg - 1].second) /
                    (nodes[seg].first - nodes[seg - 1].first);
        }
        const Rat u = nodes[seg - 1].second + slope * (t - nodes[seg - 1].first);
        w = play_jump(strip, w, u);
        samples.emplace_back(t, w);
    }
    return samples;
}

VariationalReport verify_play_variational(const HysteresisStrip& strip, const PcSignal& u,
                                          const PcSignal& w, const Rat& w0) {
    const AlignedPcPair pair = align(u, w);
    VariationalReport report;
    if (pair.b.front() != w0) report.w0_matches = false;

    const auto note_violation = [&](const Rat& t) {
        if (!report.first_violation_time) report.first_violation_time = t;
    };

    for (std::size_t i = 0; i < pair.a.size(); ++i) {
        if (!strip.contains(pair.a[i], pair.b[i])) {
            report.feasible_everywhere = false;
            note_violation(pair.breaks[i]);
        }
    }

    // Prefix sums of (u~ - w~) dW against a |dW| across the interior jumps;
    // u~, w~ at a breakpoint are the right limits.
    Rat lhs(0);
    Rat mass(0);
    for (std::size_t i = 0; i + 1 < pair.a.size(); ++i) {
        const Rat dw = pair.b[i + 1] - pair.b[i];
        const Rat term = (pair.a[i + 1] - pair.b[i + 1]) * dw;
        lhs += term;
        mass += dw.abs();
        const Rat& t = pair.breaks[i + 1];
        if (lhs < strip.a * mass) {
            report.inequality_holds = false;
            report.equality_everywhere = false;
            note_violation(t);
        } else if (lhs != strip.a * mass) {
            report.equality_everywhere = false;
            if (!report.first_strict_time) report.first_strict_time = t;
        }
    }
    return report;
}

}  // namespace playfront
