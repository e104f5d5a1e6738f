// Command-line front end: diagnose (run one of the three decision
// algorithms over an input file), examples (replay the numerical
// operation demonstrations), cost (emit the quantum/classical unit-cost
// series as CSV).
//
// Exit codes: 0 success, 1 input or validation failure, 2 internal
// numeric failure (including failed example checks).

#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qzn/cost_model.hpp"
#include "qzn/errors.hpp"
#include "qzn/io.hpp"
#include "qzn/report.hpp"
#include "qzn/worked_examples.hpp"

namespace {

// Report text goes to `out_path` when given, stdout otherwise.
void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        throw qzn::ParseError("cannot open output file: " + out_path);
    }
    out << text;
    if (!out.good()) {
        throw qzn::ParseError("failed writing output file: " + out_path);
    }
}

struct DiagnoseArgs {
    std::string input_path;
    std::string input_format; // empty = detect by extension
    std::string algorithm = "qzn";
    std::string mode = "exact";
    std::uint64_t shots = 100000;
    std::uint64_t seed = 1;
    std::string format = "text";
    std::string out_path;
};

int run_diagnose(const DiagnoseArgs& args) {
    const qzn::InputFormat in_format =
        args.input_format.empty() ? qzn::detect_format(args.input_path)
        : args.input_format == "csv" ? qzn::InputFormat::Csv
                                     : qzn::InputFormat::Json;
    const auto [szm, rzm] = qzn::ingest(args.input_path, in_format);

    qzn::RunConfig config;
    config.algorithm = *qzn::parse_algorithm(args.algorithm);
    switch (*qzn::parse_mode(args.mode)) {
        case qzn::FidelityMode::Kind::Exact:
            config.mode = qzn::FidelityMode::exact();
            break;
        case qzn::FidelityMode::Kind::Factorized:
            config.mode = qzn::FidelityMode::factorized();
            break;
        case qzn::FidelityMode::Kind::CircuitExact:
            config.mode = qzn::FidelityMode::circuit_exact();
            break;
        case qzn::FidelityMode::Kind::CircuitSampled:
            config.mode = qzn::FidelityMode::circuit_sampled(args.shots,
                                                             args.seed);
            std::cerr << "note: sampled mode draws " << args.shots
                      << " shots per pair; estimating a fidelity to within "
                         "eps takes on the order of 1/eps^2 shots\n";
            break;
    }
    config.format = args.format == "json" ? qzn::OutputFormat::Json
                                          : qzn::OutputFormat::Text;

    const qzn::DiagnosisRun run = qzn::run_diagnosis(szm, rzm, config);
    const std::string rendered = config.format == qzn::OutputFormat::Json
                                     ? qzn::render_json(run)
                                     : qzn::render_text(run);
    write_output(rendered, args.out_path);
    return 0;
}

int run_examples() {
    const auto checks = qzn::run_worked_examples();
    std::cout << qzn::render_worked_examples(checks);
    return qzn::all_examples_pass(checks) ? 0 : 2;
}

struct CostArgs {
    std::uint64_t m = 1;
    std::uint64_t n = 1;
    double epsilon = 0.002;
    std::uint64_t k_min = 1;
    std::uint64_t k_max = 1;
    std::string out_path;
};

int run_cost(const CostArgs& args) {
    qzn::CostParams base;
    base.m_samples = args.m;
    base.n_references = args.n;
    base.epsilon = args.epsilon;
    const auto series = qzn::crossover_series(base, args.k_min, args.k_max);
    const std::string csv = qzn::cost_csv(series);
    const std::string crossover_line =
        "crossover K* = " + std::to_string(qzn::crossover_k(base)) +
        " (classical total exceeds quantum total for larger K)\n";
    if (args.out_path.empty()) {
        std::cout << csv;
        std::cerr << crossover_line;
    } else {
        write_output(csv, args.out_path);
        std::cout << crossover_line;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum fuzzy decision toolkit"};
    app.require_subcommand(1);

    DiagnoseArgs d;
    CLI::App* diagnose =
        app.add_subcommand("diagnose", "score samples against references");
    diagnose->add_option("input", d.input_path, "input file (JSON or CSV)")
        ->required();
    diagnose
        ->add_option("--input-format", d.input_format,
                     "override extension-based format detection")
        ->check(CLI::IsMember({"json", "csv"}));
    diagnose->add_option("--algorithm", d.algorithm, "decision algorithm")
        ->check(CLI::IsMember({"qzn", "zn", "qfs"}))
        ->capture_default_str();
    diagnose->add_option("--mode", d.mode, "fidelity evaluation mode")
        ->check(CLI::IsMember({"exact", "factorized", "circuit-exact",
                               "sampled"}))
        ->capture_default_str();
    diagnose->add_option("--shots", d.shots, "samples per pair (sampled mode)")
        ->capture_default_str();
    diagnose->add_option("--seed", d.seed, "base RNG seed (sampled mode)")
        ->capture_default_str();
    diagnose->add_option("--format", d.format, "report format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    diagnose->add_option("--out", d.out_path, "write report to file");

    CLI::App* examples = app.add_subcommand(
        "examples", "replay the numerical operation demonstrations");

    CostArgs c;
    CLI::App* cost = app.add_subcommand(
        "cost", "emit quantum vs classical cost series as CSV");
    cost->add_option("--m", c.m, "number of samples")->capture_default_str();
    cost->add_option("--n", c.n, "number of references")
        ->capture_default_str();
    cost->add_option("--epsilon", c.epsilon, "fidelity error tolerance")
        ->capture_default_str();
    cost->add_option("--k-min", c.k_min, "first attribute count")
        ->capture_default_str();
    cost->add_option("--k-max", c.k_max, "last attribute count")->required();
    cost->add_option("--out", c.out_path, "write CSV to file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (diagnose->parsed()) return run_diagnose(d);
        if (examples->parsed()) return run_examples();
        if (cost->parsed()) return run_cost(c);
    } catch (const qzn::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const qzn::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
