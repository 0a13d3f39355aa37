#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "playfront/cli.hpp"
#include "playfront/errors.hpp"

namespace {

struct CommonOpts {
    std::string spec_path;
    std::string out_dir = "out";
    std::vector<std::string> window;
    std::vector<std::string> snapshot_times;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--spec", opts.spec_path, "problem file")->required();
    cmd->add_option("--out", opts.out_dir, "output directory");
    cmd->add_option("--window", opts.window, "override window as two p/q values")->expected(2);
    cmd->add_option("--snapshot-times", opts.snapshot_times, "override snapshot times (p/q)");
}

playfront::ProblemSpec load_with_overrides(const CommonOpts& opts) {
    playfront::ProblemSpec spec = playfront::load_problem(opts.spec_path);
    if (!opts.window.empty()) {
        auto lo = playfront::Rat::parse(opts.window[0]);
        auto hi = playfront::Rat::parse(opts.window[1]);
        if (!(lo < hi)) throw playfront::SpecParseError("window expects lo < hi");
        spec.window = std::make_pair(std::move(lo), std::move(hi));
    }
    if (!opts.snapshot_times.empty()) {
        spec.snapshot_times.clear();
        for (const auto& s : opts.snapshot_times)
            spec.snapshot_times.push_back(playfront::Rat::parse(s));
    }
    return spec;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact wave-front tracking for u_t + w_t + u_x = 0 with Play hysteresis"};
    app.require_subcommand(1);

    CommonOpts solve_opts, riemann_opts, verify_opts, converge_opts;
    bool solve_verify = false;
    std::vector<int> levels;

    auto* solve = app.add_subcommand("solve", "run the front-tracking engine");
    add_common(solve, solve_opts);
    solve->add_flag("--verify", solve_verify, "run the checker battery on the result");

    auto* riemann = app.add_subcommand("riemann", "solve a single Riemann problem");
    add_common(riemann, riemann_opts);

    auto* verify = app.add_subcommand("verify", "solve and run every checker");
    add_common(verify, verify_opts);

    auto* converge = app.add_subcommand("converge", "refinement study on tabulated data");
    add_common(converge, converge_opts);
    converge->add_option("--levels", levels, "piece counts per refinement level");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) {
            auto spec = load_with_overrides(solve_opts);
            if (solve_verify) spec.verify = true;
            return playfront::cmd_solve(spec, solve_opts.out_dir, std::cout);
        }
        if (riemann->parsed()) {
            return playfront::cmd_riemann(load_with_overrides(riemann_opts), riemann_opts.out_dir,
                                          std::cout);
        }
        if (verify->parsed()) {
            return playfront::cmd_verify(load_with_overrides(verify_opts), verify_opts.out_dir,
                                         std::cout);
        }
        auto spec = load_with_overrides(converge_opts);
        if (!levels.empty()) spec.levels = levels;
        return playfront::cmd_converge(spec, converge_opts.out_dir, std::cout);
    } catch (const playfront::SpecParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const playfront::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
