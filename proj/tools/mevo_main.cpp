// mevo: evolve, evaluate and sample constructive level generators.
//
//   mevo evolve   --config run.cfg
//   mevo eval     --problem binary --script gen.json|--chromosome gen.chromosome --samples 50 [--seed 7]
//   mevo sample   --problem zelda --script gen.json --count 8 --seed 1 [--render] [--out dir]
//   mevo baseline --problem sokoban --n 500 --samples 50 --seed 1 [--out file.csv]
//
// Exit codes: 0 success, 1 usage error, 2 I/O error.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "mevo/app.hpp"
#include "mevo/script_io.hpp"

namespace {

mevo::ProblemKind problem_arg(const std::string& name) {
    try {
        return mevo::parse_problem_kind(name);
    } catch (const std::invalid_argument& e) {
        throw mevo::UsageError(e.what());
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Evolve constructive level generators"};
    app.require_subcommand(1);

    std::string config_path;
    auto* evolve = app.add_subcommand("evolve", "Run a multi-objective evolution");
    evolve->add_option("--config", config_path, "Run configuration (key = value)")->required();
    bool quiet = false;
    evolve->add_flag("--quiet", quiet, "Suppress per-generation progress");

    std::string problem = "binary";
    std::string script_path;
    std::string chromosome_path;
    std::size_t samples = 50;
    std::optional<std::uint64_t> seed;
    auto* eval = app.add_subcommand("eval", "Print the mean fitness of one generator");
    eval->add_option("--problem", problem)->required();
    auto* eval_script = eval->add_option("--script", script_path, "Generator script (JSON)");
    eval->add_option("--chromosome", chromosome_path, "Chromosome file")->excludes(eval_script);
    eval->add_option("--samples", samples);
    eval->add_option("--seed", seed, "Override the generator seed");

    std::size_t count = 8;
    std::uint64_t sample_seed = 0;
    bool render = false;
    std::string out_dir = "samples";
    auto* sample = app.add_subcommand("sample", "Write levels produced by a generator");
    sample->add_option("--problem", problem)->required();
    sample->add_option("--script", script_path)->required();
    sample->add_option("--count", count)->required();
    sample->add_option("--seed", sample_seed)->required();
    sample->add_flag("--render", render, "Also write PPM images");
    sample->add_option("--out", out_dir, "Output directory");

    std::size_t n = 500;
    std::uint64_t baseline_seed = 0;
    std::string baseline_out;
    unsigned threads = 0;
    auto* baseline = app.add_subcommand("baseline", "Fitness of randomly sampled generators as CSV");
    baseline->add_option("--problem", problem)->required();
    baseline->add_option("--n", n)->required();
    baseline->add_option("--samples", samples)->required();
    baseline->add_option("--seed", baseline_seed)->required();
    baseline->add_option("--out", baseline_out, "CSV file (default: standard output)");
    baseline->add_option("--threads", threads, "Evaluation workers (0 = all cores)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*evolve) {
            mevo::RunConfig config = mevo::parse_run_config(mevo::read_file(config_path));
            const auto dir = mevo::cmd_evolve(config, quiet ? nullptr : &std::cerr);
            std::cout << dir.string() << "\n";
        } else if (*eval) {
            mevo::EvalRequest request;
            request.problem = problem_arg(problem);
            if (!script_path.empty()) request.script = script_path;
            if (!chromosome_path.empty()) request.chromosome = chromosome_path;
            request.samples = samples;
            request.seed = seed;
            const auto fitness = mevo::cmd_eval(request);
            std::cout << mevo::format_fitness(fitness, mevo::problem_spec(request.problem));
        } else if (*sample) {
            mevo::SampleRequest request;
            request.problem = problem_arg(problem);
            request.script = script_path;
            request.count = count;
            request.seed = sample_seed;
            request.render = render;
            request.output_dir = out_dir;
            for (const auto& path : mevo::cmd_sample(request)) std::cout << path.string() << "\n";
        } else if (*baseline) {
            mevo::BaselineRequest request;
            request.problem = problem_arg(problem);
            request.n = n;
            request.samples = samples;
            request.seed = baseline_seed;
            request.threads = threads;
            const std::string csv = mevo::cmd_baseline(request);
            if (baseline_out.empty()) std::cout << csv;
            else mevo::write_file(baseline_out, csv);
        }
    } catch (const mevo::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
