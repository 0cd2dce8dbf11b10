#include "commands.hpp"

#include "cliqueowf/analysis.hpp"
#include "cliqueowf/error.hpp"
#include "cliqueowf/experiments.hpp"
#include "cliqueowf/instance_format.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <cmath>
#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>

namespace cliqueowf::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Accepts "256" or "2^8".
std::uint64_t parse_vertex_count(const std::string& text) {
    try {
        std::size_t used = 0;
        if (const auto caret = text.find('^'); caret != std::string::npos) {
            if (text.substr(0, caret) != "2") {
                throw UsageError("--n: only powers of two may use the 2^k form");
            }
            const unsigned long k = std::stoul(text.substr(caret + 1), &used);
            if (used != text.size() - caret - 1 || k > 63) {
                throw UsageError("--n: bad exponent in '" + text + "'");
            }
            return std::uint64_t{1} << k;
        }
        const unsigned long long n = std::stoull(text, &used);
        if (used != text.size()) {
            throw UsageError("--n: '" + text + "' is not an integer");
        }
        return n;
    } catch (const std::logic_error&) {
        throw UsageError("--n: '" + text + "' is not an integer");
    }
}

std::string read_file(const std::string& path, bool binary = false) {
    std::ifstream in(path, binary ? std::ios::binary : std::ios::in);
    if (!in) {
        throw UsageError("cannot open '" + path + "'");
    }
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file || !(file << text)) {
        throw UsageError("cannot write '" + path + "'");
    }
}

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::StringTooShort:
            return kExitExhausted;
        case ErrorCode::GuardExceeded:
            return kExitGuard;
        default:
            return kExitUsage;
    }
}

std::string format_log2(long double v) {
    if (std::isinf(v)) {
        return v < 0 ? "-inf" : "inf";
    }
    return fmt::format("{:.4f}", static_cast<double>(v));
}

// Plain probability when it is representable, otherwise 2^x notation.
std::string format_probability(const LogProb& p) {
    if (p.is_zero()) {
        return "0";
    }
    if (p.log2_value < -1000) {
        return fmt::format("2^{:.1f}", static_cast<double>(p.log2_value));
    }
    return fmt::format("{:.6g}", static_cast<double>(p.probability()));
}

std::string render_bounds(const std::vector<BoundRow>& rows, bool csv) {
    std::string text;
    if (csv) {
        text = "formula_id,inputs,log2_value,probability,flag,published,status\n";
        for (const auto& row : rows) {
            text += fmt::format("{},\"{}\",{},{},{},{},{}\n", row.formula_id, row.inputs,
                                format_log2(row.value.log2_value), format_probability(row.value),
                                to_string(row.value.flag),
                                row.published ? format_log2(*row.published) : "", row.status);
        }
        return text;
    }
    text = fmt::format("{:<24} {:<34} {:>14} {:>12} {:<12} {:>11} {}\n", "formula", "inputs", "log2",
                       "probability", "flag", "published", "status");
    for (const auto& row : rows) {
        text += fmt::format("{:<24} {:<34} {:>14} {:>12} {:<12} {:>11} {}\n", row.formula_id, row.inputs,
                            format_log2(row.value.log2_value), format_probability(row.value),
                            to_string(row.value.flag),
                            row.published ? format_log2(*row.published) : "-", row.status);
    }
    return text;
}

std::string summary_line(const TrialReport& report) {
    const std::string csv = report.to_csv();
    const auto start = csv.rfind("summary,");
    return "experiment=" + report.experiment + " " + csv.substr(start + 8);
}

struct Options {
    std::string n_text = "16";
    std::string variant = "basic";
    std::string kind = "cw";
    std::string seed_hex;
    std::string seed_file;
    std::string out;
    std::string solution_out;
    std::string instance_path;
    std::string solution_path;
    std::uint64_t max_subsets = kDefaultPreimageGuard;
    unsigned c = 0;
    std::optional<double> alpha;
    bool all_constants = false;
    std::string format = "table";
    std::string experiment;
    std::uint64_t trials = 1000;
    std::uint64_t master_seed = 1;
    std::string csv;
};

int cmd_generate(const Options& o, std::ostream& out) {
    const std::uint64_t n = parse_vertex_count(o.n_text);
    const VariantTag variant = parse_variant(o.variant);
    const HashKind kind = parse_hash_kind(o.kind);
    derive_params(n);
    RandomString rs;
    if (!o.seed_hex.empty()) {
        rs = RandomString::from_hex(o.seed_hex);
    } else {
        const std::string raw = read_file(o.seed_file, true);
        rs = RandomString(std::vector<std::uint8_t>(raw.begin(), raw.end()));
    }
    const Generation gen = generate(variant, rs, n, kind);
    write_output(o.out, serialize_instance(gen.instance), out);
    if (!o.solution_out.empty()) {
        write_output(o.solution_out, serialize_solution(Solution{gen.seed.vertices}), out);
    }
    return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
    const Instance inst = parse_instance(read_file(o.instance_path));
    const Solution sol = parse_solution(read_file(o.solution_path));
    const bool ok = verify(inst, sol);
    out << (ok ? "verified\n" : "rejected\n");
    return ok ? kExitOk : kExitFalse;
}

int cmd_invert(const Options& o, std::ostream& out) {
    const Instance inst = parse_instance(read_file(o.instance_path));
    const std::vector<Solution> found = count_preimages(inst, o.max_subsets);
    for (const Solution& s : found) {
        out << serialize_solution(s);
    }
    out << "preimages=" << found.size() << "\n";
    return found.empty() ? kExitFalse : kExitOk;
}

int cmd_bounds(const Options& o, std::ostream& out) {
    if (o.c < 2 || o.c > kMaxLog2) {
        throw UsageError(fmt::format("--c must lie in [2, {}]", kMaxLog2));
    }
    if (o.format != "table" && o.format != "csv") {
        throw UsageError("--format must be table or csv");
    }
    std::optional<long double> alpha;
    if (o.alpha) {
        alpha = *o.alpha;
    }
    out << render_bounds(bounds_table(o.c, alpha, o.all_constants), o.format == "csv");
    return kExitOk;
}

ExperimentConfig experiment_config(const Options& o) {
    ExperimentConfig config;
    config.n = parse_vertex_count(o.n_text);
    config.variant = parse_variant(o.variant);
    config.kind = parse_hash_kind(o.kind);
    config.trials = o.trials;
    config.master_seed = o.master_seed;
    return config;
}

int emit_report(const TrialReport& report, const Options& o, std::ostream& out) {
    if (o.csv.empty() || o.csv == "-") {
        out << report.to_csv();
    } else {
        write_output(o.csv, report.to_csv(), out);
        out << summary_line(report);
    }
    return kExitOk;
}

int cmd_simulate(const Options& o, std::ostream& out) {
    if (o.experiment == "univalence") {
        return emit_report(univalence_trials(experiment_config(o), o.max_subsets), o, out);
    }
    if (o.experiment == "gnp") {
        if (!o.alpha) {
            throw UsageError("--experiment gnp needs --alpha");
        }
        return emit_report(gnp_spurious_trials(parse_vertex_count(o.n_text), *o.alpha, o.trials, o.master_seed),
                           o, out);
    }
    if (o.experiment == "attack") {
        return emit_report(attack_simulation(experiment_config(o)), o, out);
    }
    throw UsageError("--experiment must be univalence, gnp or attack");
}

int cmd_density(const Options& o, std::ostream& out) {
    return emit_report(density_experiment(experiment_config(o)), o, out);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bloom-filter planted-clique one-way function candidates"};
    app.name(args.empty() ? "cliqueowf" : args.front());
    app.require_subcommand(1);
    Options o;

    auto* gen = app.add_subcommand("generate", "Generate an instance from a random string");
    gen->add_option("--n", o.n_text, "Vertex count, e.g. 256 or 2^8")->required();
    gen->add_option("--variant", o.variant, "basic | multi | derived | masked");
    gen->add_option("--kind", o.kind, "cw | tp | poly");
    auto* seed_hex = gen->add_option("--seed-hex", o.seed_hex, "Random string as hex");
    auto* seed_file = gen->add_option("--seed-file", o.seed_file, "Random string as a raw byte file");
    seed_hex->excludes(seed_file);
    gen->add_option("--out", o.out, "Instance file (default stdout)");
    gen->add_option("--emit-solution", o.solution_out, "Also write the generating solution here");

    auto* ver = app.add_subcommand("verify", "Check a solution against an instance");
    ver->add_option("--instance", o.instance_path)->required();
    ver->add_option("--solution", o.solution_path)->required();

    auto* inv = app.add_subcommand("invert", "Find every preimage by exhaustive search");
    inv->add_option("--instance", o.instance_path)->required();
    inv->add_option("--max-subsets", o.max_subsets, "Largest C(n, c) searched");

    auto* bnd = app.add_subcommand("bounds", "Evaluate the probability bounds");
    bnd->add_option("--c", o.c, "log2 of the vertex count")->required();
    bnd->add_option("--alpha", o.alpha, "Edge density for the exact spurious sum");
    bnd->add_flag("--all-constants", o.all_constants, "Every named bound, with published values at c=64");
    bnd->add_option("--format", o.format, "table | csv");

    auto* sim = app.add_subcommand("simulate", "Run a Monte Carlo experiment");
    sim->add_option("--experiment", o.experiment, "univalence | gnp | attack")->required();
    sim->add_option("--n", o.n_text, "Vertex count");
    sim->add_option("--variant", o.variant);
    sim->add_option("--kind", o.kind);
    sim->add_option("--alpha", o.alpha, "Edge probability (gnp)");
    sim->add_option("--trials", o.trials);
    sim->add_option("--seed", o.master_seed, "Master seed");
    sim->add_option("--max-subsets", o.max_subsets, "Preimage guard (univalence)");
    sim->add_option("--csv", o.csv, "Report file (default stdout)");

    auto* den = app.add_subcommand("density", "Measure per-array densities");
    den->add_option("--n", o.n_text, "Vertex count");
    den->add_option("--variant", o.variant);
    den->add_option("--kind", o.kind);
    den->add_option("--trials", o.trials);
    den->add_option("--seed", o.master_seed, "Master seed");
    den->add_option("--csv", o.csv, "Report file (default stdout)");

    std::vector<const char*> argv;
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
        if (gen->parsed() && o.seed_hex.empty() && o.seed_file.empty()) {
            throw UsageError("generate needs --seed-hex or --seed-file");
        }
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (gen->parsed()) return cmd_generate(o, out);
        if (ver->parsed()) return cmd_verify(o, out);
        if (inv->parsed()) return cmd_invert(o, out);
        if (bnd->parsed()) return cmd_bounds(o, out);
        if (sim->parsed()) return cmd_simulate(o, out);
        return cmd_density(o, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace cliqueowf::cli
