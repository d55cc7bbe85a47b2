#include "fmom/report.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <exception>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

std::vector<std::string> split_list(const std::string& arg) {
    std::vector<std::string> out;
    std::istringstream in(arg);
    std::string piece;
    while (std::getline(in, piece, ','))
        if (!piece.empty()) out.push_back(piece);
    return out;
}

fmom::generator_spec make_generator(const std::string& kind, double p_plus, double rho,
                                    std::size_t length, std::uint64_t seed) {
    fmom::generator_spec spec;
    spec.kind = fmom::generator_kind_from_string(kind);
    spec.p_plus = p_plus;
    spec.rho = rho;
    spec.length = length;
    spec.seed = seed;
    return spec;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Normalized factorial moments of return-sign multiplicities over binned "
                 "time windows, with bootstrap and offset-scan uncertainties"};
    app.require_subcommand(1);

    // analyze ---------------------------------------------------------------
    fmom::run_config cfg;
    std::string input_path;
    std::string kind;
    double p_plus = 0.5, rho = 0.5;
    std::size_t gen_length = 0;
    std::string modes_arg = "pp,mm,pm";
    std::vector<std::size_t> offsets_arg;
    std::string format_arg = "csv";
    std::string output_path;
    std::string delimiter = ",";
    std::size_t price_column = 0;
    bool has_header = false;

    CLI::App* analyze = app.add_subcommand("analyze", "Compute the moment report for a price series");
    CLI::Option* opt_input = analyze->add_option("--input", input_path, "CSV price series to ingest");
    CLI::Option* opt_kind = analyze->add_option(
        "--kind", kind, "Generate the input instead: iid, markov or gaussian-walk");
    opt_input->excludes(opt_kind);
    opt_kind->excludes(opt_input);
    analyze->add_option("--p-plus", p_plus, "Probability of +1 for the iid generator")
        ->capture_default_str();
    analyze->add_option("--rho", rho, "Persistence P(sign_t == sign_t-1) for the markov generator")
        ->capture_default_str();
    analyze->add_option("--length", gen_length, "Generated sequence length");
    analyze->add_option("--window", cfg.window_len, "Samples per event window")
        ->capture_default_str();
    analyze->add_option("--bins", cfg.bins_list, "Bin counts to scan (each must divide --window)")
        ->delimiter(',')
        ->capture_default_str();
    analyze->add_option("--modes", modes_arg, "Comma list from pp, mm, pm, all")
        ->capture_default_str();
    analyze->add_option("--order", cfg.order, "Moment order q (pm supports 2 only)")
        ->capture_default_str();
    analyze->add_option("--resamples", cfg.n_resamples, "Bootstrap resamples")
        ->capture_default_str();
    analyze
        ->add_option("--offsets", offsets_arg,
                     "Window offsets for the systematic scan (default 0, window/4, window/2)")
        ->delimiter(',');
    analyze->add_option("--seed", cfg.seed, "Base RNG seed")
        ->envname("FMOM_SEED")
        ->capture_default_str();
    analyze->add_option("--sample-interval", cfg.sample_interval,
                        "Time units per sample; scales the resolution column")
        ->capture_default_str();
    analyze->add_option("--format", format_arg, "Report format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    analyze->add_option("--output", output_path, "Report path (stdout when omitted)");
    analyze->add_option("--delimiter", delimiter, "CSV field delimiter")->capture_default_str();
    analyze->add_option("--price-column", price_column, "Zero-indexed price column")
        ->capture_default_str();
    analyze->add_flag("--header", has_header, "Skip one header row");

    // generate --------------------------------------------------------------
    std::string g_kind;
    double g_p_plus = 0.5, g_rho = 0.5;
    std::size_t g_length = 0;
    std::uint64_t g_seed = 1;
    std::string g_output;

    CLI::App* generate = app.add_subcommand("generate", "Write a synthetic CSV price series");
    generate->add_option("--kind", g_kind, "iid, markov or gaussian-walk")->required();
    generate->add_option("--length", g_length, "Sequence length")->required();
    generate->add_option("--p-plus", g_p_plus, "Probability of +1 (iid)")->capture_default_str();
    generate->add_option("--rho", g_rho, "Persistence probability (markov)")->capture_default_str();
    generate->add_option("--seed", g_seed, "RNG seed")->envname("FMOM_SEED")->capture_default_str();
    generate->add_option("--output", g_output, "Destination CSV path")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) {
            if (!input_path.empty()) cfg.input = input_path;
            if (!kind.empty()) cfg.generator = make_generator(kind, p_plus, rho, gen_length, cfg.seed);
            if (delimiter.size() != 1)
                throw std::invalid_argument("delimiter must be a single character");
            cfg.csv.delimiter = delimiter[0];
            cfg.csv.price_column = price_column;
            cfg.csv.has_header = has_header;
            cfg.modes.clear();
            for (const auto& piece : split_list(modes_arg))
                cfg.modes.push_back(fmom::sign_mode_from_string(piece));
            if (!offsets_arg.empty()) cfg.offsets = offsets_arg;
            cfg.format = format_arg == "json" ? fmom::output_format::json : fmom::output_format::csv;
            if (!output_path.empty()) cfg.output = output_path;

            const std::vector<fmom::report_row> rows = fmom::run_analyze(cfg);
            fmom::write_report(cfg, rows);
        } else {
            fmom::run_generate(make_generator(g_kind, g_p_plus, g_rho, g_length, g_seed), g_output);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
