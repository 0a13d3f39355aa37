#include "playfront/signals.hpp"

#include <algorithm>

#include "playfront/errors.hpp"

namespace playfront {

HysteresisStrip::HysteresisStrip(Rat half_width) : a(std::move(half_width)) {
    if (a.sign() <= 0) throw DomainError("hysteresis half-width must be positive");
}

PlayState::PlayState(const HysteresisStrip& strip, Rat u_, Rat w_)
    : u(std::move(u_)), w(std::move(w_)) {
    if (!strip.contains(u, w))
        throw InfeasibleState("state (" + u.str() + ", " + w.str() + ") outside strip a=" +
                              strip.a.str());
}

namespace {

void check_strictly_increasing(const std::vector<Rat>& xs, const char* what) {
    for (std::size_t i = 1; i < xs.size(); ++i)
        if (!(xs[i - 1] < xs[i])) throw DomainError(std::string(what) + " not strictly increasing");
}

// Merges adjacent equal values in-place (cuts[i] separates values[i] and values[i+1]).
void normalize_pc(std::vector<Rat>& cuts, std::vector<Rat>& values) {
    std::vector<Rat> nc;
    std::vector<Rat> nv;
    nv.push_back(values.front());
    for (std::size_t i = 0; i + 1 < values.size(); ++i) {
        if (values[i + 1] != nv.back()) {
            nc.push_back(cuts[i]);
            nv.push_back(values[i + 1]);
        }
    }
    cuts = std::move(nc);
    values = std::move(nv);
}

}  // namespace

PcSignal::PcSignal(std::vector<Rat> breakpoints, std::vector<Rat> values)
    : breaks_(std::move(breakpoints)), values_(std::move(values)) {
    if (breaks_.size() < 2) throw DomainError("pc signal needs at least [0, T]");
    if (breaks_.front() != Rat(0)) throw DomainError("pc signal must start at t = 0");
    if (values_.size() + 1 != breaks_.size())
        throw DomainError("pc signal needs one value per interval");
    check_strictly_increasing(breaks_, "pc signal breakpoints");
    // Normalize: drop interior breakpoints between equal values.
    std::vector<Rat> interior(breaks_.begin() + 1, breaks_.end() - 1);
    normalize_pc(interior, values_);
    std::vector<Rat> nb;
    nb.push_back(breaks_.front());
    nb.insert(nb.end(), interior.begin(), interior.end());
    nb.push_back(breaks_.back());
    breaks_ = std::move(nb);
}

PcSignal PcSignal::constant(const Rat& duration, const Rat& value) {
    return PcSignal({Rat(0), duration}, {value});
}

const Rat& PcSignal::value_right(const Rat& t) const {
    if (t < Rat(0) || t > duration()) throw DomainError("time outside signal domain");
    if (t == duration()) return values_.back();
    // first interval (breaks_[i], breaks_[i+1]) with breaks_[i] <= t
    auto it = std::upper_bound(breaks_.begin(), breaks_.end(), t);
    const auto idx = static_cast<std::size_t>(it - breaks_.begin()) - 1;
    return values_[idx];
}

const Rat& PcSignal::value_at(const Rat& t) const {
    if (std::binary_search(breaks_.begin() + 1, breaks_.end() - 1, t))
        throw DomainError("value_at at a breakpoint");
    return value_right(t);
}

PcSignal PcSignal::restrict_from(const Rat& t0) const {
    if (t0 < Rat(0) || t0 >= duration()) throw DomainError("restrict_from outside domain");
    std::vector<Rat> nb{Rat(0)};
    std::vector<Rat> nv;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (breaks_[i + 1] <= t0) continue;
        nv.push_back(values_[i]);
        nb.push_back(breaks_[i + 1] - t0);
    }
    return PcSignal(std::move(nb), std::move(nv));
}

AlignedPcPair align(const PcSignal& a, const PcSignal& b) {
    if (a.duration() != b.duration())
        throw MismatchedBreakpoints("signals have different durations");
    std::vector<Rat> breaks;
    std::merge(a.breakpoints().begin(), a.breakpoints().end(), b.breakpoints().begin(),
               b.breakpoints().end(), std::back_inserter(breaks));
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
    AlignedPcPair out;
    out.breaks = breaks;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        const Rat mid = half(breaks[i] + breaks[i + 1]);
        out.a.push_back(a.value_at(mid));
        out.b.push_back(b.value_at(mid));
    }
    return out;
}

PlSignal::PlSignal(std::vector<std::pair<Rat, Rat>> nodes) : nodes_(std::move(nodes)) {
    if (nodes_.size() < 2) throw DomainError("pl signal needs at least 2 nodes");
    for (std::size_t i = 1; i < nodes_.size(); ++i)
        if (!(nodes_[i - 1].first < nodes_[i].first))
            throw DomainError("pl signal nodes not strictly increasing in t");
}

Rat PlSignal::value_at(const Rat& t) const {
    if (t < start_time() || t > end_time()) throw DomainError("time outside pl signal domain");
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), t,
                               [](const auto& n, const Rat& x) { return n.first < x; });
    if (it != nodes_.end() && it->first == t) return it->second;
    const auto& hi = *it;
    const auto& lo = *(it - 1);
    const Rat slope = (hi.second - lo.second) / (hi.first - lo.first);
    return lo.second + slope * (t - lo.first);
}

Rat PlSignal::lipschitz() const {
    Rat best(0);
    for (std::size_t i = 1; i < nodes_.size(); ++i) {
        const Rat s =
            ((nodes_[i].second - nodes_[i - 1].second) / (nodes_[i].first - nodes_[i - 1].first))
                .abs();
        best = max(best, s);
    }
    return best;
}

PcProfile::PcProfile(std::vector<Rat> cuts, std::vector<Rat> values)
    : cuts_(std::move(cuts)), values_(std::move(values)) {
    if (values_.empty()) throw DomainError("profile needs at least one value");
    if (cuts_.size() + 1 != values_.size())
        throw DomainError("profile needs one more value than cuts");
    check_strictly_increasing(cuts_, "profile cuts");
    normalize_pc(cuts_, values_);
}

PcProfile PcProfile::constant(const Rat& value) { return PcProfile({}, {value}); }

const Rat& PcProfile::value_right(const Rat& x) const {
    auto it = std::upper_bound(cuts_.begin(), cuts_.end(), x);
    return values_[static_cast<std::size_t>(it - cuts_.begin())];
}

const Rat& PcProfile::value_at(const Rat& x) const {
    if (std::binary_search(cuts_.begin(), cuts_.end(), x))
        throw DomainError("value_at on a profile cut");
    return value_right(x);
}

Rat PcProfile::total_variation() const {
    Rat tv(0);
    for (std::size_t i = 1; i < values_.size(); ++i) tv += (values_[i] - values_[i - 1]).abs();
    return tv;
}

Rat total_variation(const PcProfile& p) { return p.total_variation(); }

AlignedProfilePair align(const PcProfile& a, const PcProfile& b) {
    std::vector<Rat> cuts;
    std::merge(a.cuts().begin(), a.cuts().end(), b.cuts().begin(), b.cuts().end(),
               std::back_inserter(cuts));
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    AlignedProfilePair out;
    out.cuts = cuts;
    for (std::size_t i = 0; i <= cuts.size(); ++i) {
        // representative point of cell i: below the first cut, between two, or above the last
        Rat x;
        if (cuts.empty())
            x = Rat(0);
        else if (i == 0)
            x = cuts.front() - Rat(1);
        else if (i == cuts.size())
            x = cuts.back() + Rat(1);
        else
            x = half(cuts[i - 1] + cuts[i]);
        out.a.push_back(a.value_right(x));
        out.b.push_back(b.value_right(x));
    }
    return out;
}

Rat l1_distance(const PcProfile& a, const PcProfile& b) {
    if (a.far_left() != b.far_left() || a.far_right() != b.far_right())
        throw WindowMismatch("profiles differ at infinity; L1 distance undefined");
    const auto al = align(a, b);
    Rat dist(0);
    for (std::size_t i = 1; i + 1 <= al.cuts.size(); ++i)
        dist += (al.a[i] - al.b[i]).abs() * (al.cuts[i] - al.cuts[i - 1]);
    return dist;
}

Rat integral_of_square(const PcProfile& p) {
    if (!p.far_left().is_zero() || !p.far_right().is_zero())
        throw UnboundedSupport("profile does not vanish at infinity");
    Rat total(0);
    for (std::size_t i = 1; i + 1 <= p.cuts().size(); ++i)
        total += p.values()[i] * p.values()[i] * (p.cuts()[i] - p.cuts()[i - 1]);
    return total;
}

}  // namespace playfront
