#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "playfront/cli.hpp"
#include "playfront/errors.hpp"
#include "playfront/problem.hpp"

using namespace playfront;
namespace fs = std::filesystem;

namespace {

const std::string kData = std::string(PLAYFRONT_SOURCE_DIR) + "/data";

std::string read_file(const fs::path& p) {
    std::ifstream in(p);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::size_t count_lines(const std::string& s) {
    std::size_t n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

fs::path fresh_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / name;
    fs::remove_all(dir);
    return dir;
}

// the tabulation itself as a profile: each row's value holds until the next
// row, null outside the span
PcProfile tab_profile(const std::vector<std::array<Rat, 3>>& tab, int col) {
    std::vector<Rat> cuts;
    std::vector<Rat> values{Rat(0)};
    for (std::size_t i = 0; i < tab.size(); ++i) {
        cuts.push_back(tab[i][0]);
        values.push_back(tab[i][static_cast<std::size_t>(col)]);
    }
    values.back() = Rat(0);
    return PcProfile(cuts, values);
}

}  // namespace

TEST_CASE("problem files round-trip through serialize/parse") {
    for (const char* name :
         {"case_a2.prob", "merge_uu.prob", "converge_ramp.prob"}) {
        const ProblemSpec spec = load_problem(kData + "/" + name);
        const ProblemSpec again = parse_problem(serialize_problem(spec));
        CHECK(again.a == spec.a);
        CHECK(again.horizon == spec.horizon);
        CHECK(again.window == spec.window);
        CHECK(again.u0.has_value() == spec.u0.has_value());
        if (spec.u0) {
            CHECK(*again.u0 == *spec.u0);
            CHECK(*again.w0 == *spec.w0);
        }
        CHECK(again.tabulation == spec.tabulation);
        CHECK(again.snapshot_times == spec.snapshot_times);
        CHECK(again.levels == spec.levels);
        CHECK(serialize_problem(again) == serialize_problem(spec));
    }
}

TEST_CASE("parse errors carry line context") {
    CHECK_THROWS_AS(parse_problem("T = \"1/1\"\nu0_values = [\"0/1\"]\nw0_values = [\"0/1\"]"),
                    SpecParseError);
    CHECK_THROWS_WITH_AS(parse_problem("a = \"1/1\"\nT = \"1/1\"\nnope = 3"),
                         doctest::Contains("line 3"), SpecParseError);
    CHECK_THROWS_WITH_AS(parse_problem("a = \"1/1\"\nT = [oops"), doctest::Contains("line 2"),
                         SpecParseError);
    // feasibility is checked at parse time
    CHECK_THROWS_AS(parse_problem("a = \"1/1\"\nT = \"1/1\"\nu0_values = [\"3/1\"]\n"
                                  "w0_values = [\"0/1\"]"),
                    SpecParseError);
    CHECK_THROWS_AS(parse_problem("a = \"1/1\"\nT = \"1/1\"\n"
                                  "tabulation = [[\"0/1\",\"0/1\",\"0/1\"],[\"0/1\",\"0/1\",\"0/1\"]]"),
                    SpecParseError);
}

TEST_CASE("coarsen_bv recovers aligned pc data exactly") {
    std::vector<std::array<Rat, 3>> tab;
    const std::vector<Rat> us{Rat(0), Rat(1), Rat(2), Rat(0)};
    const std::vector<Rat> ws{Rat(0), Rat(0), Rat(1), Rat(0)};
    for (int i = 0; i < 4; ++i) tab.push_back({Rat(i), us[static_cast<std::size_t>(i)],
                                               ws[static_cast<std::size_t>(i)]});
    const auto [u4, w4] = coarsen_bv(tab, 3);
    CHECK(u4 == tab_profile(tab, 1));
    CHECK(w4 == tab_profile(tab, 2));
    const auto [u8, w8] = coarsen_bv(tab, 6);  // refinement changes nothing
    CHECK(u8 == tab_profile(tab, 1));
}

TEST_CASE("coarsen_bv never increases TV and converges in L1") {
    const ProblemSpec spec = load_problem(kData + "/converge_ramp.prob");
    const PcProfile exact_u = tab_profile(spec.tabulation, 1);
    const PcProfile exact_w = tab_profile(spec.tabulation, 2);
    Rat prev_err(-1);
    for (int n : {2, 4, 8, 16, 48}) {
        const auto [u, w] = coarsen_bv(spec.tabulation, n);
        CHECK(u.total_variation() <= exact_u.total_variation());
        CHECK(w.total_variation() <= exact_w.total_variation());
        const HysteresisStrip strip{spec.a};
        const auto cells = align(u, w);
        for (std::size_t i = 0; i < cells.a.size(); ++i)
            CHECK(strip.contains(cells.a[i], cells.b[i]));
        const Rat err = l1_distance(u, exact_u) + l1_distance(w, exact_w);
        if (prev_err >= Rat(0)) CHECK(err <= prev_err);
        prev_err = err;
    }
    CHECK(prev_err == Rat(0));  // n = 48 matches the tabulation cells
}

TEST_CASE("cmd_solve emits the full output set deterministically") {
    const ProblemSpec spec = load_problem(kData + "/case_a2.prob");
    const fs::path dir = fresh_dir("pf_solve_a2");
    std::ostringstream log;
    ProblemSpec with_verify = spec;
    with_verify.verify = true;
    CHECK(cmd_solve(with_verify, dir.string(), log) == 0);

    const std::string fronts = read_file(dir / "fronts.csv");
    CHECK(count_lines(fronts) == 4);  // header + the three fan fronts
    CHECK(fronts.find("0,0/1,0/1,0/1,0/1,0/1,0/1,1/1,") != std::string::npos);
    CHECK(fronts.find("1,0/1,0/1,1/2,0/1,1/1,1/2,3/2,") != std::string::npos);
    CHECK(fronts.find("2,0/1,0/1,1/1,1/2,3/2,2/1,3/2,") != std::string::npos);
    CHECK(count_lines(read_file(dir / "events.csv")) == 1);  // header only

    const std::string diag = read_file(dir / "diagnostics.json");
    CHECK(diag.find("\"ok\": true") != std::string::npos);

    // byte-identical on a second run
    const fs::path dir2 = fresh_dir("pf_solve_a2_again");
    std::ostringstream log2;
    CHECK(cmd_solve(with_verify, dir2.string(), log2) == 0);
    CHECK(read_file(dir2 / "fronts.csv") == fronts);
    CHECK(read_file(dir2 / "snapshots.csv") == read_file(dir / "snapshots.csv"));
    CHECK(read_file(dir2 / "diagnostics.json") == diag);
}

TEST_CASE("cmd_solve records the interaction event") {
    const ProblemSpec spec = load_problem(kData + "/merge_uu.prob");
    const fs::path dir = fresh_dir("pf_solve_uu");
    std::ostringstream log;
    CHECK(cmd_solve(spec, dir.string(), log) == 0);
    const std::string events = read_file(dir / "events.csv");
    CHECK(count_lines(events) == 2);
    CHECK(events.find("2/1,2/1,0;1,2;3,5/2,1/2,1/1,1/1") != std::string::npos);
}

TEST_CASE("cmd_riemann dumps the fan and windowed profiles") {
    const ProblemSpec spec = load_problem(kData + "/case_a2.prob");
    const fs::path dir = fresh_dir("pf_riemann_a2");
    std::ostringstream log;
    CHECK(cmd_riemann(spec, dir.string(), log) == 0);
    const std::string fan = read_file(dir / "fan.json");
    CHECK(fan.find("\"speed\": \"0/1\"") != std::string::npos);
    CHECK(fan.find("\"speed\": \"1/2\"") != std::string::npos);
    CHECK(fan.find("\"speed\": \"1/1\"") != std::string::npos);
    CHECK(count_lines(read_file(dir / "profiles.csv")) == 3);  // header + t=1, t=2

    const ProblemSpec multi = load_problem(kData + "/merge_uu.prob");
    CHECK_THROWS_AS(cmd_riemann(multi, fresh_dir("pf_riemann_bad").string(), log),
                    DegenerateData);
}

TEST_CASE("cmd_verify passes on the bundled scenarios") {
    for (const char* name : {"case_a2.prob", "merge_uu.prob",
                             "crossing_uw.prob"}) {
        const ProblemSpec spec = load_problem(kData + "/" + name);
        const fs::path dir = fresh_dir(std::string("pf_verify_") + name);
        std::ostringstream log;
        CHECK(cmd_verify(spec, dir.string(), log) == 0);
        CHECK(read_file(dir / "verification.json").find("\"ok\": true") != std::string::npos);
    }
}

TEST_CASE("cmd_solve coarsens tabulation-only problems") {
    ProblemSpec spec = load_problem(kData + "/converge_steps.prob");
    spec.verify = true;
    const fs::path dir = fresh_dir("pf_solve_tab");
    std::ostringstream log;
    CHECK(cmd_solve(spec, dir.string(), log) == 0);
    CHECK(read_file(dir / "diagnostics.json").find("\"ok\": true") != std::string::npos);
}

TEST_CASE("cmd_converge emits non-increasing refinement distances") {
    ProblemSpec spec = load_problem(kData + "/converge_ramp.prob");
    spec.levels = {4, 8, 16};  // a light sweep; the acceptance suite runs the full one
    const fs::path dir = fresh_dir("pf_converge_ramp");
    std::ostringstream log;
    CHECK(cmd_converge(spec, dir.string(), log) == 0);
    const std::string csv = read_file(dir / "converge.csv");
    CHECK(count_lines(csv) == 4);

    // parse the distance column and check monotonicity
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);  // header
    std::vector<Rat> dists;
    while (std::getline(in, line)) {
        std::istringstream row(line);
        std::string field;
        for (int i = 0; i < 3; ++i) std::getline(row, field, ',');
        if (!field.empty()) dists.push_back(Rat::parse(field));
    }
    REQUIRE(dists.size() == 2);
    CHECK(dists[1] <= dists[0]);
}
