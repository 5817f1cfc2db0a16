#include "mevo/app.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <fmt/format.h>

#include "mevo/level_io.hpp"
#include "mevo/script_io.hpp"

namespace mevo {

namespace fs = std::filesystem;

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError(fmt::format("cannot open '{}' for reading", path.string()));
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const fs::path& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError(fmt::format("cannot open '{}' for writing", path.string()));
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw IoError(fmt::format("write to '{}' failed", path.string()));
}

namespace {

void make_directories(const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw IoError(fmt::format("cannot create directory '{}': {}", dir.string(), ec.message()));
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

template <typename T>
T parse_number(std::string_view key, std::string_view value) {
    T out{};
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size()) {
        throw UsageError(fmt::format("config key '{}': invalid value '{}'", key, value));
    }
    return out;
}

bool parse_bool(std::string_view key, std::string_view value) {
    if (value == "true" || value == "1") return true;
    if (value == "false" || value == "0") return false;
    throw UsageError(fmt::format("config key '{}': expected true or false, got '{}'", key, value));
}

std::string fixed(double v) { return fmt::format("{:.6f}", v); }

}  // namespace

RunConfig parse_run_config(std::string_view text) {
    RunConfig config;
    auto& evo = config.evolution;
    std::map<std::string, std::size_t, std::less<>> seen;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw UsageError(fmt::format("config line {}: expected 'key = value'", line_no));
        const std::string_view key = trim(line.substr(0, eq));
        const std::string_view value = trim(line.substr(eq + 1));
        if (!seen.emplace(std::string(key), line_no).second) {
            throw UsageError(fmt::format("config key '{}' repeated on line {}", key, line_no));
        }

        if (key == "problem") {
            try {
                evo.problem = parse_problem_kind(value);
            } catch (const std::invalid_argument& e) {
                throw UsageError(fmt::format("config key 'problem': {}", e.what()));
            }
        } else if (key == "population_size") evo.population_size = parse_number<std::size_t>(key, value);
        else if (key == "generations") evo.generations = parse_number<std::size_t>(key, value);
        else if (key == "crossover_rate") evo.crossover_rate = parse_number<double>(key, value);
        else if (key == "mutation_rate") evo.mutation_rate = parse_number<double>(key, value);
        else if (key == "tournament_size") evo.tournament_size = parse_number<std::size_t>(key, value);
        else if (key == "samples") evo.samples_per_eval = parse_number<std::size_t>(key, value);
        else if (key == "seed") evo.master_seed = parse_number<std::uint64_t>(key, value);
        else if (key == "threads") evo.threads = parse_number<unsigned>(key, value);
        else if (key == "output_dir") {
            if (value.empty()) throw UsageError("config key 'output_dir': empty path");
            config.output_dir = fs::path(std::string(value));
        } else if (key == "render_count") config.render_count = parse_number<std::size_t>(key, value);
        else if (key == "render_ppm") config.render_ppm = parse_bool(key, value);
        else if (key == "scaling") {
            if (value == "corrected") config.eval.scaling = Scaling::corrected;
            else if (value == "raw") config.eval.scaling = Scaling::raw;
            else throw UsageError(fmt::format("config key 'scaling': expected corrected or raw, got '{}'", value));
        } else if (key == "enemies_block") config.eval.enemies_block = parse_bool(key, value);
        else throw UsageError(fmt::format("config line {}: unknown key '{}'", line_no, key));
    }

    try {
        evo.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(fmt::format("config: {}", e.what()));
    }
    return config;
}

std::string format_run_config(const RunConfig& config) {
    const auto& evo = config.evolution;
    std::string out;
    auto put = [&](std::string_view key, const std::string& value) { out += fmt::format("{} = {}\n", key, value); };
    put("problem", problem_spec(evo.problem).name);
    put("population_size", std::to_string(evo.population_size));
    put("generations", std::to_string(evo.generations));
    put("crossover_rate", fmt::format("{}", evo.crossover_rate));
    put("mutation_rate", fmt::format("{}", evo.mutation_rate));
    put("tournament_size", std::to_string(evo.tournament_size));
    put("samples", std::to_string(evo.samples_per_eval));
    put("seed", std::to_string(evo.master_seed));
    put("threads", std::to_string(evo.threads));
    put("output_dir", config.output_dir.string());
    put("render_count", std::to_string(config.render_count));
    put("render_ppm", config.render_ppm ? "true" : "false");
    put("scaling", config.eval.scaling == Scaling::corrected ? "corrected" : "raw");
    put("enemies_block", config.eval.enemies_block ? "true" : "false");
    return out;
}

std::string stats_csv(const std::vector<GenerationStats>& stats, const ProblemSpec& problem) {
    std::string out = "generation,num_fronts,front0_size";
    for (const auto& o : problem.objectives) out += ",best_" + o.name;
    for (const auto& o : problem.objectives) out += ",mean_" + o.name;
    out += '\n';
    for (const auto& s : stats) {
        out += fmt::format("{},{},{}", s.generation, s.num_fronts, s.front0_size);
        for (double v : s.best) out += "," + fixed(v);
        for (double v : s.mean) out += "," + fixed(v);
        out += '\n';
    }
    return out;
}

std::string fitness_csv(const std::vector<FitnessVector>& rows, const ProblemSpec& problem) {
    std::string out = "id";
    for (const auto& o : problem.objectives) out += "," + o.name;
    out += '\n';
    for (std::size_t i = 0; i < rows.size(); ++i) {
        out += std::to_string(i);
        for (double v : rows[i]) out += "," + fixed(v);
        out += '\n';
    }
    return out;
}

std::string format_fitness(const FitnessVector& fitness, const ProblemSpec& problem) {
    std::string out;
    for (std::size_t i = 0; i < fitness.size(); ++i) {
        out += fmt::format("{}={}\n", problem.objectives[i].name, fixed(fitness[i]));
    }
    return out;
}

fs::path cmd_evolve(const RunConfig& config, std::ostream* log) {
    const ProblemSpec& problem = problem_spec(config.evolution.problem);
    const fs::path& out = config.output_dir;
    const fs::path front_dir = out / "front0";
    make_directories(front_dir);
    write_file(out / "config.txt", format_run_config(config));

    GenerationObserver observer;
    if (log) {
        observer = [log](const GenerationStats& s) {
            *log << fmt::format("generation {}: fronts={} front0={}\n", s.generation, s.num_fronts, s.front0_size);
        };
    }
    const EvolutionResult result = evolve(config.evolution, config.eval, observer);

    write_file(out / "stats.csv", stats_csv(result.stats, problem));
    std::vector<FitnessVector> front;
    const auto names = problem.entity_names();
    for (std::size_t i = 0; i < result.archive.size(); ++i) {
        const Individual& ind = result.archive[i];
        front.push_back(ind.fitness);
        const std::string stem = fmt::format("generator_{:03}", i);
        const GeneratorScript script = decode(ind.chromosome, problem.entity_count());
        write_file(front_dir / (stem + ".json"), serialize_script(script, names));
        write_file(front_dir / (stem + ".chromosome"), format_chromosome(ind.chromosome) + "\n");
        for (std::size_t k = 0; k < config.render_count; ++k) {
            const Sample s = generate_sample(script, problem, script.seed, k);
            const std::string sample_stem = fmt::format("{}_sample_{:02}", stem, k);
            write_file(front_dir / (sample_stem + ".txt"), render_text(s.final, problem));
            if (config.render_ppm) write_file(front_dir / (sample_stem + ".ppm"), render_ppm(s.final, problem));
        }
    }
    write_file(out / "front0_fitness.csv", fitness_csv(front, problem));
    return out;
}

FitnessVector cmd_eval(const EvalRequest& request) {
    const ProblemSpec& problem = problem_spec(request.problem);
    if (request.script.has_value() == request.chromosome.has_value()) {
        throw UsageError("eval needs exactly one of --script or --chromosome");
    }
    if (request.samples == 0) throw UsageError("--samples must be at least 1");
    GeneratorScript script;
    if (request.script) {
        const std::string text = read_file(*request.script);
        try {
            script = parse_script(text, problem.entity_names());
        } catch (const ScriptParseError& e) {
            throw UsageError(fmt::format("{}: {}", request.script->string(), e.what()));
        }
    } else {
        try {
            script = decode(parse_chromosome(read_file(*request.chromosome)), problem.entity_count());
        } catch (const std::invalid_argument& e) {
            throw UsageError(fmt::format("{}: {}", request.chromosome->string(), e.what()));
        }
    }
    return evaluate_script(script, problem, request.samples, request.options, request.seed);
}

std::vector<fs::path> cmd_sample(const SampleRequest& request) {
    const ProblemSpec& problem = problem_spec(request.problem);
    const std::string text = read_file(request.script);
    GeneratorScript script;
    try {
        script = parse_script(text, problem.entity_names());
    } catch (const ScriptParseError& e) {
        throw UsageError(fmt::format("{}: {}", request.script.string(), e.what()));
    }
    make_directories(request.output_dir);
    std::vector<fs::path> files;
    for (std::size_t i = 0; i < request.count; ++i) {
        const Sample s = generate_sample(script, problem, request.seed, i);
        const fs::path path = request.output_dir / fmt::format("sample_{:03}.txt", i);
        write_file(path, render_text(s.final, problem));
        if (request.render) {
            write_file(request.output_dir / fmt::format("sample_{:03}.ppm", i), render_ppm(s.final, problem));
        }
        files.push_back(path);
    }
    return files;
}

std::vector<FitnessVector> run_baseline(const BaselineRequest& request) {
    if (request.n == 0) throw UsageError("--n must be at least 1");
    if (request.samples == 0) throw UsageError("--samples must be at least 1");
    const ProblemSpec& problem = problem_spec(request.problem);
    Rng rng(request.seed);
    std::vector<Chromosome> genomes;
    genomes.reserve(request.n);
    for (std::size_t i = 0; i < request.n; ++i) genomes.push_back(random_chromosome(rng));
    const std::size_t samples = request.samples;
    const EvalOptions options = request.options;
    return evaluate_all(
        genomes, [&](const Chromosome& c) { return evaluate_generator(c, problem, samples, options); },
        request.threads);
}

std::string cmd_baseline(const BaselineRequest& request) {
    return fitness_csv(run_baseline(request), problem_spec(request.problem));
}

}  // namespace mevo
