// urnlab command-line front end: analyze | simulate | verify.
//
// Exit codes: 0 success, 1 invalid or inapplicable input, 2 statistical
// verification failure, 3 I/O failure. All randomness flows from --seed.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "urnlab/urnlab.hpp"

namespace {

using urnlab::json;

int fail_invalid(const urnlab::UrnError& e) {
    std::cout << urnlab::error_json(e.code(), e.what()).dump(2) << '\n';
    return 1;
}

int cmd_analyze(const std::string& model_path) {
    urnlab::ModelSpec spec = urnlab::load_model(model_path);
    json rep = urnlab::analysis_report(spec);
    std::cout << rep.dump(2) << '\n';
    return rep.contains("error") ? 1 : 0;
}

struct SimulateArgs {
    std::string model_path;
    std::int64_t steps = 10000;
    std::uint64_t replicas = 1;
    std::uint64_t seed = 0;
    std::string checkpoints = "geometric:10";
    std::string out_path;
    bool paranoid = false;
    unsigned threads = 0;
};

int cmd_simulate(const SimulateArgs& args) {
    urnlab::ModelSpec spec = urnlab::load_model(args.model_path);
    const urnlab::Schedule sched = urnlab::parse_schedule(args.checkpoints);
    const auto cps = urnlab::checkpoint_list(sched, args.steps);
    urnlab::RunOptions opts;
    opts.paranoid = args.paranoid;
    const auto recs = urnlab::run_ensemble(spec, args.steps, args.replicas, args.seed, cps,
                                           opts, args.threads);
    {
        std::ofstream out(args.out_path, std::ios::binary);
        if (!out) {
            std::cerr << "io_error: cannot open " << args.out_path << " for writing\n";
            return 3;
        }
        urnlab::write_trajectory_csv(out, recs, spec.k());
        if (!out.good()) {
            std::cerr << "io_error: short write to " << args.out_path << "\n";
            return 3;
        }
    }
    urnlab::Vec mean(spec.k(), 0.0);
    for (const auto& rec : recs) {
        const urnlab::Vec p = rec.checkpoints.back().u_proportions();
        for (int j = 0; j < spec.k(); ++j) mean[j] += p[j];
    }
    char buf[32];
    std::string line = "final n=" + std::to_string(args.steps) + " mean proportions:";
    for (int j = 0; j < spec.k(); ++j) {
        std::snprintf(buf, sizeof(buf), " %.6f", mean[j] / static_cast<double>(recs.size()));
        line += buf;
    }
    std::cout << line << '\n';
    return 0;
}

struct VerifyArgs {
    std::string model_path;
    std::string suite = "all";
    std::uint64_t seed = 0;
    std::string budget = "quick";
    std::string out_path;
    unsigned threads = 0;
};

int cmd_verify(const VerifyArgs& args) {
    urnlab::ModelSpec spec = urnlab::load_model(args.model_path);
    const urnlab::Budget budget =
        args.budget == "full" ? urnlab::Budget::Full : urnlab::Budget::Quick;
    urnlab::VerifyReport rep;
    try {
        rep = urnlab::run_verify(spec, args.suite, budget, args.seed, args.threads);
    } catch (const urnlab::UrnError& e) {
        if (e.code() == urnlab::Err::InapplicableSuite) return fail_invalid(e);
        throw;
    }
    const json doc = urnlab::verify_report_json(rep);
    if (!args.out_path.empty()) {
        std::ofstream out(args.out_path, std::ios::binary);
        if (!out) {
            std::cerr << "io_error: cannot open " << args.out_path << " for writing\n";
            return 3;
        }
        out << doc.dump(2) << '\n';
    } else {
        std::cout << doc.dump(2) << '\n';
    }
    return rep.all_pass() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"urnlab: balanced urn schemes with linearly de-preferential selection"};
    app.require_subcommand(1);

    std::string model_path;
    auto* analyze = app.add_subcommand("analyze",
                                       "exact analysis: irreducibility, star structure, "
                                       "limit vectors, spectrum, CLT regime");
    analyze->add_option("model", model_path, "model JSON file")->required();

    SimulateArgs sim;
    auto* simulate = app.add_subcommand("simulate", "run trajectories and write CSV");
    simulate->add_option("model", sim.model_path, "model JSON file")->required();
    simulate->add_option("--steps", sim.steps, "horizon (steps per replica)")
        ->check(CLI::PositiveNumber);
    simulate->add_option("--replicas", sim.replicas, "number of replicas")
        ->check(CLI::PositiveNumber);
    simulate->add_option("--seed", sim.seed, "master seed (64-bit unsigned)");
    simulate->add_option("--checkpoints", sim.checkpoints,
                         "schedule: linear:<step> or geometric:<ratio>");
    simulate->add_option("--out", sim.out_path, "output CSV path")->required();
    simulate->add_flag("--paranoid", sim.paranoid, "check state invariants at every step");
    simulate->add_option("--threads", sim.threads, "worker threads (0 = hardware)");

    VerifyArgs ver;
    auto* verify = app.add_subcommand("verify", "statistical verification of the limit laws");
    verify->add_option("model", ver.model_path, "model JSON file")->required();
    verify->add_option("--suite", ver.suite, "invariants|slln|clt|counts|star|friedman|all");
    verify->add_option("--seed", ver.seed, "master seed (64-bit unsigned)");
    verify->add_option("--budget", ver.budget, "quick|full")
        ->check(CLI::IsMember({"quick", "full"}));
    verify->add_option("--out", ver.out_path, "write report JSON here instead of stdout");
    verify->add_option("--threads", ver.threads, "worker threads (0 = hardware)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) return cmd_analyze(model_path);
        if (simulate->parsed()) return cmd_simulate(sim);
        if (verify->parsed()) return cmd_verify(ver);
    } catch (const urnlab::UrnError& e) {
        if (e.code() == urnlab::Err::IoError) {
            std::cerr << e.what() << '\n';
            return 3;
        }
        return fail_invalid(e);
    } catch (const std::exception& e) {
        std::cout << urnlab::error_json(urnlab::Err::BadInput, e.what()).dump(2) << '\n';
        return 1;
    }
    return 1;
}
