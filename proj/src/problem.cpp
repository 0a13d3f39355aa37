#include "playfront/problem.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "playfront/errors.hpp"

namespace playfront {

namespace {

using nlohmann::ordered_json;

Rat rat_of(const ordered_json& j, const std::string& key, int line) {
    if (!j.is_string())
        throw SpecParseError("line " + std::to_string(line) + ": " + key +
                             " expects a \"p/q\" string");
    return Rat::parse(j.get<std::string>());
}

std::vector<Rat> rat_list(const ordered_json& j, const std::string& key, int line) {
    if (!j.is_array())
        throw SpecParseError("line " + std::to_string(line) + ": " + key + " expects an array");
    std::vector<Rat> out;
    for (const auto& e : j) out.push_back(rat_of(e, key, line));
    return out;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

std::pair<PcProfile, PcProfile> ProblemSpec::initial_data(int tab_pieces) const {
    if (u0 && w0) return {*u0, *w0};
    if (has_tabulation()) return coarsen_bv(tabulation, tab_pieces);
    throw SpecParseError("problem defines neither profiles nor a tabulation");
}

std::pair<Rat, Rat> ProblemSpec::effective_window() const {
    if (window) return *window;
    Rat lo(0);
    Rat hi(0);
    bool seen = false;
    auto widen = [&](const Rat& x) {
        if (!seen) {
            lo = hi = x;
            seen = true;
        } else {
            lo = min(lo, x);
            hi = max(hi, x);
        }
    };
    if (u0)
        for (const auto& c : u0->cuts()) widen(c);
    if (w0)
        for (const auto& c : w0->cuts()) widen(c);
    for (const auto& row : tabulation) widen(row[0]);
    if (!seen) widen(Rat(0));
    return {lo - Rat(1) - horizon, hi + Rat(1) + horizon};
}

ProblemSpec parse_problem(const std::string& text) {
    ProblemSpec spec;
    std::optional<std::vector<Rat>> u0_cuts, u0_values, w0_cuts, w0_values;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    bool saw_a = false;
    bool saw_T = false;
    while (std::getline(in, raw)) {
        ++line;
        const std::string s = trim(raw);
        if (s.empty() || s[0] == '#') continue;
        const auto eq = s.find('=');
        if (eq == std::string::npos)
            throw SpecParseError("line " + std::to_string(line) + ": expected key = value");
        const std::string key = trim(s.substr(0, eq));
        ordered_json val;
        try {
            val = ordered_json::parse(s.substr(eq + 1));
        } catch (const nlohmann::json::exception& e) {
            throw SpecParseError("line " + std::to_string(line) + " (" + key +
                                 "): " + e.what());
        }

        if (key == "a") {
            spec.a = rat_of(val, key, line);
            saw_a = true;
        } else if (key == "T") {
            spec.horizon = rat_of(val, key, line);
            saw_T = true;
        } else if (key == "window") {
            const auto w = rat_list(val, key, line);
            if (w.size() != 2 || !(w[0] < w[1]))
                throw SpecParseError("line " + std::to_string(line) + ": window expects [lo, hi]");
            spec.window = std::make_pair(w[0], w[1]);
        } else if (key == "u0_cuts") {
            u0_cuts = rat_list(val, key, line);
        } else if (key == "u0_values") {
            u0_values = rat_list(val, key, line);
        } else if (key == "w0_cuts") {
            w0_cuts = rat_list(val, key, line);
        } else if (key == "w0_values") {
            w0_values = rat_list(val, key, line);
        } else if (key == "snapshot_times") {
            spec.snapshot_times = rat_list(val, key, line);
        } else if (key == "levels") {
            if (!val.is_array())
                throw SpecParseError("line " + std::to_string(line) + ": levels expects an array");
            for (const auto& e : val) {
                if (!e.is_number_integer() || e.get<int>() < 1)
                    throw SpecParseError("line " + std::to_string(line) +
                                         ": levels must be positive integers");
                spec.levels.push_back(e.get<int>());
            }
        } else if (key == "verify") {
            if (!val.is_boolean())
                throw SpecParseError("line " + std::to_string(line) + ": verify expects a boolean");
            spec.verify = val.get<bool>();
        } else if (key == "tabulation") {
            if (!val.is_array())
                throw SpecParseError("line " + std::to_string(line) +
                                     ": tabulation expects an array of [x, u, w] rows");
            for (const auto& row : val) {
                const auto r = rat_list(row, key, line);
                if (r.size() != 3)
                    throw SpecParseError("line " + std::to_string(line) +
                                         ": tabulation rows are [x, u, w]");
                spec.tabulation.push_back({r[0], r[1], r[2]});
            }
        } else {
            throw SpecParseError("line " + std::to_string(line) + ": unknown key \"" + key + "\"");
        }
    }
    if (!saw_a) throw SpecParseError("missing key: a");
    if (!saw_T) throw SpecParseError("missing key: T");
    if (spec.a.sign() <= 0) throw SpecParseError("a must be positive");
    if (spec.horizon.sign() <= 0) throw SpecParseError("T must be positive");

    const bool has_u0 = u0_values.has_value();
    const bool has_w0 = w0_values.has_value();
    if (has_u0 != has_w0) throw SpecParseError("u0 and w0 must both be given or both omitted");
    if (has_u0) {
        try {
            spec.u0 = PcProfile(u0_cuts.value_or(std::vector<Rat>{}), *u0_values);
            spec.w0 = PcProfile(w0_cuts ? *w0_cuts : u0_cuts.value_or(std::vector<Rat>{}),
                                *w0_values);
        } catch (const DomainError& e) {
            throw SpecParseError(std::string("invalid profile data: ") + e.what());
        }
    }
    if (!has_u0 && !spec.has_tabulation())
        throw SpecParseError("problem needs u0/w0 profiles or a tabulation");

    for (std::size_t i = 1; i < spec.tabulation.size(); ++i)
        if (!(spec.tabulation[i - 1][0] < spec.tabulation[i][0]))
            throw SpecParseError("tabulation x values must be strictly increasing");

    // Pointwise feasibility of whatever data form was supplied.
    if (spec.u0) {
        const auto cells = align(*spec.u0, *spec.w0);
        const HysteresisStrip strip(spec.a);
        for (std::size_t i = 0; i < cells.a.size(); ++i)
            if (!strip.contains(cells.a[i], cells.b[i]))
                throw SpecParseError("initial data violate |u0 - w0| <= a");
    }
    for (const auto& row : spec.tabulation)
        if ((row[1] - row[2]).abs() > spec.a)
            throw SpecParseError("tabulation violates |u - w| <= a at x = " + row[0].str());
    return spec;
}

ProblemSpec load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SpecParseError("cannot open problem file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_problem(buf.str());
}

std::string serialize_problem(const ProblemSpec& spec) {
    std::ostringstream out;
    auto rats = [](const std::vector<Rat>& xs) {
        ordered_json j = ordered_json::array();
        for (const auto& x : xs) j.push_back(x.str());
        return j.dump();
    };
    out << "a = \"" << spec.a.str() << "\"\n";
    out << "T = \"" << spec.horizon.str() << "\"\n";
    if (spec.window)
        out << "window = " << rats({spec.window->first, spec.window->second}) << "\n";
    if (spec.u0) {
        out << "u0_cuts = " << rats(spec.u0->cuts()) << "\n";
        out << "u0_values = " << rats(spec.u0->values()) << "\n";
        out << "w0_cuts = " << rats(spec.w0->cuts()) << "\n";
        out << "w0_values = " << rats(spec.w0->values()) << "\n";
    }
    if (!spec.tabulation.empty()) {
        ordered_json rows = ordered_json::array();
        for (const auto& row : spec.tabulation)
            rows.push_back(ordered_json::array({row[0].str(), row[1].str(), row[2].str()}));
        out << "tabulation = " << rows.dump() << "\n";
    }
    if (!spec.snapshot_times.empty()) out << "snapshot_times = " << rats(spec.snapshot_times) << "\n";
    if (!spec.levels.empty()) {
        ordered_json j = spec.levels;
        out << "levels = " << j.dump() << "\n";
    }
    if (spec.verify) out << "verify = true\n";
    return out.str();
}

std::pair<PcProfile, PcProfile> coarsen_bv(const std::vector<std::array<Rat, 3>>& tabulation,
                                           int n_pieces) {
    if (tabulation.size() < 2) throw SpecParseError("tabulation needs at least 2 rows");
    if (n_pieces < 1) throw SpecParseError("coarsening needs at least one piece");
    const Rat lo = tabulation.front()[0];
    const Rat hi = tabulation.back()[0];
    const Rat width = (hi - lo) / Rat(n_pieces);

    auto value_at = [&](const Rat& x) -> std::pair<Rat, Rat> {
        // value of the tabulation cell containing x (largest sample x_i <= x)
        std::size_t idx = 0;
        for (std::size_t i = 0; i < tabulation.size(); ++i) {
            if (tabulation[i][0] <= x)
                idx = i;
            else
                break;
        }
        return {tabulation[idx][1], tabulation[idx][2]};
    };

    std::vector<Rat> cuts;
    std::vector<Rat> us{Rat(0)};
    std::vector<Rat> ws{Rat(0)};
    for (int j = 0; j <= n_pieces; ++j) cuts.push_back(lo + Rat(j) * width);
    for (int j = 1; j <= n_pieces; ++j) {
        const Rat mid = lo + (Rat(j) - Rat(1, 2)) * width;
        const auto [u, w] = value_at(mid);
        us.push_back(u);
        ws.push_back(w);
    }
    us.push_back(Rat(0));
    ws.push_back(Rat(0));
    return {PcProfile(cuts, us), PcProfile(std::move(cuts), std::move(ws))};
}

}  // namespace playfront
