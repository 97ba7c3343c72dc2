#include <cstdint>
#include <fstream>
#include <sstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "worstlab/harness.hpp"

namespace {

using namespace worstlab;

// "a..b" (inclusive) or a single "a"
std::vector<std::uint64_t> parse_range(const std::string& text) {
    auto dots = text.find("..");
    std::vector<std::uint64_t> out;
    if (dots == std::string::npos) {
        out.push_back(std::stoull(text));
        return out;
    }
    std::uint64_t lo = std::stoull(text.substr(0, dots));
    std::uint64_t hi = std::stoull(text.substr(dots + 2));
    if (hi < lo) throw std::invalid_argument("range '" + text + "' is empty");
    for (std::uint64_t v = lo; v <= hi; ++v) out.push_back(v);
    return out;
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(out_path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open output file " + out_path);
    os << text;
}

struct CommonOpts {
    std::string input_text;
    std::uint64_t n = 0;
    bool has_n = false;
    std::uint64_t k = 0;
    std::string f_text;
    std::uint64_t seed = 0;
    std::uint64_t trials = 1;
    std::string budget_cmp;
    std::string budget_leaves;
    std::string format = "json";
    std::string out_path;
};

void add_budget_flags(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--budget-cmp", opts.budget_cmp,
                    "Max integer comparisons (decimal integer or 'unlimited')");
    cmd->add_option("--budget-leaves", opts.budget_leaves,
                    "Max materialized leaves (decimal integer or 'unlimited')");
}

Budget make_budget(const CommonOpts& opts) {
    Budget b = default_budget();
    auto apply = [](const std::string& text, std::optional<BigInt>& field) {
        if (text.empty()) return;
        if (text == "unlimited") {
            field.reset();
            return;
        }
        field = BigInt(text);
        if (*field <= 0) throw std::invalid_argument("budget limits must be positive");
    };
    apply(opts.budget_cmp, b.max_integer_comparisons);
    apply(opts.budget_leaves, b.max_leaves_materialized);
    return b;
}

ExperimentConfig make_config(const std::string& algo, const CommonOpts& opts) {
    ExperimentConfig cfg;
    cfg.algorithm = parse_algorithm(algo);
    if (!opts.input_text.empty()) {
        NestedValue v = parse_value(opts.input_text);
        if (!v.is_list())
            throw std::invalid_argument("--input must be a list, e.g. \"[2,3,1]\"");
        cfg.input = v.items();
    }
    if (opts.has_n) cfg.n = opts.n;
    cfg.k = opts.k;
    if (!opts.f_text.empty()) cfg.f = GrowthFunctionSpec::parse(opts.f_text);
    cfg.seed = opts.seed;
    cfg.trials = opts.trials;
    cfg.budget = make_budget(opts);
    return cfg;
}

TableFormat parse_format(const std::string& f) {
    if (f == "json") return TableFormat::Json;
    if (f == "csv") return TableFormat::Csv;
    if (f == "text") return TableFormat::Text;
    throw std::invalid_argument("unknown format '" + f + "'");
}

int exit_code_for(Outcome outcome) {
    switch (outcome) {
    case Outcome::Sorted: return 0;
    case Outcome::Refused: return 2;
    case Outcome::BudgetExceeded: return 2;
    case Outcome::Error: return 1;
    }
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"worstlab: instrumented pessimal sorting laboratory"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string algo;
    bool exhaustive = false;
    int threads = 0;
    std::string n_range_text = "0", k_range_text = "0";

    auto add_common = [&](CLI::App* cmd, bool with_algo) {
        if (with_algo)
            cmd->add_option("--algo", algo,
                            "bublesort | bogo-random | bogo-det | multilevel | worst")
                ->required();
        cmd->add_option("--input", opts.input_text, "Input list, e.g. \"[2,3,1]\"");
        cmd->add_option("--n", opts.n, "Generated input size")->each([&](const std::string&) {
            opts.has_n = true;
        });
        cmd->add_option("--k", opts.k, "Nesting level (multilevel)");
        cmd->add_option("--f", opts.f_text,
                        "Growth function: const:<c> | id | poly:<p> | exp2 | fact");
        cmd->add_option("--seed", opts.seed, "Random seed");
        cmd->add_option("--format", opts.format, "json | csv | text");
        cmd->add_option("--out", opts.out_path, "Write output to a file");
        add_budget_flags(cmd, opts);
    };

    CLI::App* predict_cmd = app.add_subcommand("predict", "Analytical cost prediction");
    predict_cmd->add_option("--n", opts.n, "Input length")->required();
    predict_cmd->add_option("--k", opts.k, "Nesting level");
    predict_cmd->add_option("--format", opts.format, "json | csv | text");
    predict_cmd->add_option("--out", opts.out_path, "Write output to a file");
    add_budget_flags(predict_cmd, opts);

    CLI::App* run_cmd = app.add_subcommand("run", "Run one instrumented experiment");
    add_common(run_cmd, true);

    CLI::App* verify_cmd =
        app.add_subcommand("verify", "Run and check measured counts against predictions");
    add_common(verify_cmd, true);
    verify_cmd->add_flag("--exhaustive", exhaustive,
                         "Repeat over every permutation of the input");

    CLI::App* table_cmd = app.add_subcommand("table", "Growth table over (n, k) ranges");
    table_cmd->add_option("--algo", algo, "Only 'multilevel' is tabulated");
    table_cmd->add_option("--n", n_range_text, "n range, e.g. 1..6 or 3")->required();
    table_cmd->add_option("--k", k_range_text, "k range, e.g. 0..4 or 2")->required();
    table_cmd->add_option("--format", opts.format, "json | csv | text");
    table_cmd->add_option("--out", opts.out_path, "Write output to a file");
    add_budget_flags(table_cmd, opts);

    CLI::App* stats_cmd =
        app.add_subcommand("bogo-stats", "Statistics of randomized bogosort trials");
    stats_cmd->add_option("--n", opts.n, "Input size (descending input)")->required();
    stats_cmd->add_option("--trials", opts.trials, "Number of trials");
    stats_cmd->add_option("--seed", opts.seed, "Master seed");
    stats_cmd->add_option("--threads", threads, "OpenMP threads (0 = all, 1 = serial)");
    stats_cmd->add_option("--format", opts.format, "json | csv | text");
    stats_cmd->add_option("--out", opts.out_path, "Write output to a file");
    add_budget_flags(stats_cmd, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1; // usage errors exit 1; --help exits 0
    }

    try {
        if (*predict_cmd) {
            Prediction p = predict(opts.n, opts.k);
            if (opts.format == "json") {
                write_output(to_json(p).dump(2) + "\n", opts.out_path);
            } else {
                write_output(growth_table({opts.n}, {opts.k}, make_budget(opts),
                                          parse_format(opts.format)),
                             opts.out_path);
            }
            return 0;
        }
        if (*run_cmd) {
            ExperimentReport report = run_experiment(make_config(algo, opts));
            if (opts.format == "text") {
                std::ostringstream os;
                os << "outcome: " << outcome_name(report.outcome) << "\n";
                if (!report.message.empty()) os << "message: " << report.message << "\n";
                os << "counters: " << to_json(report.counters).dump() << "\n";
                if (report.output_value) os << "output: " << *report.output_value << "\n";
                write_output(os.str(), opts.out_path);
            } else {
                write_output(to_json(report).dump(2) + "\n", opts.out_path);
            }
            return exit_code_for(report.outcome);
        }
        if (*verify_cmd) {
            VerificationReport vr = verify(make_config(algo, opts), exhaustive);
            if (opts.format == "text") {
                std::ostringstream os;
                os << (vr.passed ? "pass" : "FAIL") << " (" << vr.runs << " runs)\n";
                for (const auto& f : vr.failures) os << "  " << f << "\n";
                write_output(os.str(), opts.out_path);
            } else {
                write_output(to_json(vr).dump(2) + "\n", opts.out_path);
            }
            return vr.passed ? 0 : 3;
        }
        if (*table_cmd) {
            if (!algo.empty() && algo != "multilevel")
                throw std::invalid_argument("table supports --algo multilevel only");
            std::string text = growth_table(parse_range(n_range_text),
                                            parse_range(k_range_text), make_budget(opts),
                                            parse_format(opts.format));
            write_output(text, opts.out_path);
            return 0;
        }
        if (*stats_cmd) {
            BogoStatsReport report =
                threads == 1
                    ? bogo_stats_serial(opts.n, opts.trials, opts.seed, make_budget(opts))
                    : bogo_stats_parallel(opts.n, opts.trials, opts.seed, make_budget(opts),
                                          threads);
            write_output(to_json(report).dump(2) + "\n", opts.out_path);
            return 0;
        }
    } catch (const DigitLimitError& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
