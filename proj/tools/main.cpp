#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "hmrnet/error.hpp"
#include "hmrnet/netfile.hpp"
#include "hmrnet/pipeline.hpp"

using namespace hmrnet;

namespace {

// Exit codes: 0 success, 1 runtime failure, 2 usage error.
constexpr int kFailure = 1;
constexpr int kUsage = 2;

struct SolverFlags {
    std::string algo = "mp";
    std::string preference = "median";
    RunConfig cfg;
};

// Sweep runs both solvers and takes M from its grid, so it omits --algo and --m.
void add_solver_flags(CLI::App& cmd, SolverFlags& f, bool for_detect) {
    if (for_detect) {
        cmd.add_option("--algo", f.algo, "Solver")->check(CLI::IsMember({"ap", "mp"}))->capture_default_str();
        cmd.add_option("--m", f.cfg.m_penalty, "Biclique penalty M")->capture_default_str();
    }
    cmd.add_option("--damping", f.cfg.damping, "Message damping in [0,1)")->capture_default_str();
    cmd.add_option("--stable-window", f.cfg.stable_window, "Unchanged iterations before stopping")
        ->capture_default_str();
    cmd.add_option("--max-iterations", f.cfg.max_iterations, "Iteration limit")->capture_default_str();
    cmd.add_option("--preference", f.preference, "'median' or a number")->capture_default_str();
    cmd.add_option("--min-x", f.cfg.bicliques.min_x, "Minimum biclique X side")->capture_default_str();
    cmd.add_option("--min-y", f.cfg.bicliques.min_y, "Minimum biclique Y side")->capture_default_str();
    cmd.add_option("--biclique-cap", f.cfg.bicliques.cap, "Abort enumeration beyond this many bicliques")
        ->capture_default_str();
    cmd.add_option("--tie-noise", f.cfg.tie_noise, "Relative tie-breaking perturbation")->capture_default_str();
}

RunConfig finish_solver_flags(const SolverFlags& f) {
    RunConfig cfg = f.cfg;
    cfg.algorithm = f.algo == "ap" ? Algorithm::AP : Algorithm::MP;
    if (f.preference == "median") {
        cfg.preference = MedianPreference{};
    } else {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(f.preference, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != f.preference.size())
            throw UsageError("--preference must be 'median' or a number");
        cfg.preference = FixedPreference{v};
    }
    cfg.validate();
    return cfg;
}

const std::map<std::string, LinkModel> kLinkModels{{"pair", LinkModel::PerPair},
                                                   {"mixing", LinkModel::MixingFraction}};
const std::map<std::string, GeneratorKind> kGenerators{{"synth1", GeneratorKind::Synth1},
                                                       {"synth2", GeneratorKind::Synth2}};

void emit(const std::string& output, const std::function<void(std::ostream&)>& writer) {
    if (output.empty() || output == "-") {
        writer(std::cout);
        std::cout.flush();
    } else {
        write_atomically(output, writer);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Community detection in two-layer heterogeneous networks"};
    app.require_subcommand(1);

    // detect
    auto* detect_cmd = app.add_subcommand("detect", "Detect communities in a network file");
    SolverFlags detect_flags;
    std::string detect_input;
    std::string detect_output;
    bool detect_timings = false;
    std::uint64_t detect_seed = 0;
    detect_cmd->add_option("network", detect_input, "Network file")->required();
    detect_cmd->add_option("-o,--output", detect_output, "Report path (stdout if omitted)");
    detect_cmd->add_option("--seed", detect_seed, "Seed for tie-breaking")->capture_default_str();
    detect_cmd->add_flag("--timings", detect_timings, "Include wall-clock timings in the report");
    add_solver_flags(*detect_cmd, detect_flags, true);

    // generate
    auto* gen_cmd = app.add_subcommand("generate", "Write a synthetic benchmark network");
    std::string gen_kind;
    GeneratorParams gen;
    std::optional<double> gen_p_in, gen_p_out;
    std::optional<std::size_t> gen_k;
    std::string gen_link = "pair";
    std::string gen_output;
    gen_cmd->add_option("generator", gen_kind, "synth1 or synth2")->required()->check(CLI::IsMember({"synth1", "synth2"}));
    gen_cmd->add_option("--k", gen_k, "Communities per layer (synth2)");
    gen_cmd->add_option("--p-in", gen_p_in, "Intra-community link probability");
    gen_cmd->add_option("--p-out", gen_p_out, "Inter-community link probability");
    gen_cmd->add_option("--seed", gen.seed, "Generator seed")->capture_default_str();
    gen_cmd->add_option("--link-model", gen_link, "pair or mixing")->check(CLI::IsMember({"pair", "mixing"}))
        ->capture_default_str();
    gen_cmd->add_option("-o,--output", gen_output, "Output path (stdout if omitted)");

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "Run AP and MP over a parameter grid and write CSV");
    SolverFlags sweep_flags;
    std::string sweep_kind;
    std::string sweep_m;
    std::string sweep_grid;
    std::optional<double> sweep_from, sweep_to, sweep_step;
    std::optional<std::size_t> sweep_k;
    std::optional<double> sweep_p_in, sweep_p_out;
    std::optional<std::size_t> sweep_seed_count;
    std::vector<std::uint64_t> sweep_seed_list;
    std::string sweep_link = "pair";
    std::string sweep_output;
    sweep_cmd->add_option("generator", sweep_kind, "synth1 or synth2 (default: synth2 with --grid pIO, else synth1)")
        ->check(CLI::IsMember({"synth1", "synth2"}));
    sweep_cmd->add_option("--net-spec", sweep_kind, "Same as the positional generator")
        ->check(CLI::IsMember({"synth1", "synth2"}));
    sweep_cmd->add_option("--m", sweep_m, "M grid: start:step:stop or a comma list");
    sweep_cmd->add_option("--grid", sweep_grid, "Probability grid kind")->check(CLI::IsMember({"pIO"}));
    sweep_cmd->add_option("--from", sweep_from, "First p_inter of the pIO grid (p_intra = 1 - p_inter)");
    sweep_cmd->add_option("--to", sweep_to, "Last p_inter of the pIO grid");
    sweep_cmd->add_option("--step", sweep_step, "pIO grid step");
    sweep_cmd->add_option("--k", sweep_k, "Communities per layer (synth2)");
    sweep_cmd->add_option("--p-in", sweep_p_in, "Intra-community link probability outside a pIO grid");
    sweep_cmd->add_option("--p-out", sweep_p_out, "Inter-community link probability outside a pIO grid");
    auto* count_opt = sweep_cmd->add_option("--seeds", sweep_seed_count, "Use seeds 1..N");
    sweep_cmd->add_option("--seed-list", sweep_seed_list, "Explicit seeds")->delimiter(',')->excludes(count_opt);
    sweep_cmd->add_option("--link-model", sweep_link, "pair or mixing")->check(CLI::IsMember({"pair", "mixing"}))
        ->capture_default_str();
    sweep_cmd->add_option("-o,--output", sweep_output, "CSV path (stdout if omitted)");
    add_solver_flags(*sweep_cmd, sweep_flags, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kUsage;
    }

    try {
        if (*detect_cmd) {
            RunConfig cfg = finish_solver_flags(detect_flags);
            cfg.seed = detect_seed;
            const NetworkFile input = parse_network_file(detect_input);
            const Detection result = detect(cfg, input);
            for (const auto& notice : result.notices) std::cerr << "notice: " << notice << '\n';
            const auto report = detect_report(cfg, input, result, detect_input, detect_timings);
            emit(detect_output, [&](std::ostream& out) { out << report.dump(2) << '\n'; });
        } else if (*gen_cmd) {
            gen.kind = kGenerators.at(gen_kind);
            gen.link_model = kLinkModels.at(gen_link);
            if (gen.kind == GeneratorKind::Synth1) {
                if (gen_k) throw UsageError("--k applies to synth2 only");
            } else {
                gen.k = gen_k.value_or(gen.k);
            }
            gen.p_intra = gen_p_in.value_or(gen.p_intra);
            gen.p_inter = gen_p_out.value_or(gen.p_inter);
            const SyntheticInstance inst = generate_instance(gen);
            const NetworkFile file{inst.net, inst.truth_x, inst.truth_y};
            emit(gen_output, [&](std::ostream& out) { write_network(out, file, inst.planted); });
        } else if (*sweep_cmd) {
            SweepConfig cfg;
            cfg.base = finish_solver_flags(sweep_flags);
            cfg.base.algorithm = Algorithm::MP;
            const bool p_grid = !sweep_grid.empty();
            if (sweep_kind.empty()) sweep_kind = p_grid ? "synth2" : "synth1";
            cfg.generator.kind = kGenerators.at(sweep_kind);
            cfg.generator.link_model = kLinkModels.at(sweep_link);
            if (cfg.generator.kind == GeneratorKind::Synth1 && sweep_k) throw UsageError("--k applies to synth2 only");
            cfg.generator.k = sweep_k.value_or(cfg.generator.k);
            cfg.generator.p_intra = sweep_p_in.value_or(cfg.generator.p_intra);
            cfg.generator.p_inter = sweep_p_out.value_or(cfg.generator.p_inter);
            if (!sweep_m.empty()) cfg.m_values = parse_grid(sweep_m);
            if (p_grid) {
                if (!sweep_from || !sweep_to || !sweep_step)
                    throw UsageError("--grid pIO needs --from, --to and --step");
                if (sweep_p_in || sweep_p_out) throw UsageError("--p-in/--p-out conflict with --grid pIO");
                cfg.p_inter_values = arithmetic_grid(*sweep_from, *sweep_to, *sweep_step);
            } else if (sweep_from || sweep_to || sweep_step) {
                throw UsageError("--from/--to/--step require --grid pIO");
            }
            if (!sweep_seed_list.empty()) {
                cfg.seeds = sweep_seed_list;
            } else {
                const std::size_t n = sweep_seed_count.value_or(1);
                for (std::size_t s = 1; s <= n; ++s) cfg.seeds.push_back(s);
            }
            emit(sweep_output, [&](std::ostream& out) { run_sweep(cfg, out); });
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFailure;
    }
    return 0;
}
