// fpbench: corpus statistics, synthetic data generation and filter-vs-naive
// benchmarks for fingerprint-accelerated approximate keyword matching.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fingerprints/fingerprints.hpp"
#include "fingerprints/report.hpp"

namespace fp = fingerprints;

namespace {

fp::Variant parse_variant(const std::string& name) {
    if (name == "occurrence" || name == "occ")
        return fp::Variant::Occurrence;
    if (name == "occurrence-halved" || name == "occh" || name == "halved")
        return fp::Variant::OccurrenceHalved;
    if (name == "count")
        return fp::Variant::Count;
    if (name == "position" || name == "pos")
        return fp::Variant::Position;
    throw CLI::ValidationError("--scheme", "unknown scheme: " + name);
}

fp::LetterStrategy parse_strategy(const std::string& name) {
    if (name == "common")
        return fp::LetterStrategy::Common;
    if (name == "mixed")
        return fp::LetterStrategy::Mixed;
    if (name == "rare")
        return fp::LetterStrategy::Rare;
    throw CLI::ValidationError("--letters", "unknown letter strategy: " + name);
}

fp::Metric parse_metric(const std::string& name) {
    if (name == "hamming" || name == "ham")
        return fp::Metric::Hamming;
    if (name == "levenshtein" || name == "lev")
        return fp::Metric::Levenshtein;
    throw CLI::ValidationError("--metric", "unknown metric: " + name);
}

// Accepts "6:30" (inclusive range) or a comma list "6,9,18".
std::vector<std::size_t> parse_sizes(const std::string& spec) {
    std::vector<std::size_t> sizes;
    if (const auto colon = spec.find(':'); colon != std::string::npos) {
        const std::size_t lo = std::stoull(spec.substr(0, colon));
        const std::size_t hi = std::stoull(spec.substr(colon + 1));
        if (lo == 0 || hi < lo)
            throw CLI::ValidationError("--sizes", "bad range: " + spec);
        for (std::size_t s = lo; s <= hi; ++s)
            sizes.push_back(s);
        return sizes;
    }
    std::size_t start = 0;
    while (start <= spec.size()) {
        const auto comma = spec.find(',', start);
        const auto token = spec.substr(start, comma == std::string::npos ? comma : comma - start);
        if (!token.empty())
            sizes.push_back(std::stoull(token));
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    if (sizes.empty())
        throw CLI::ValidationError("--sizes", "no sizes given");
    return sizes;
}

std::vector<std::string> load_words(const std::string& dict_path, std::size_t word_length) {
    std::vector<std::string> words = fp::read_word_lines(dict_path);
    if (word_length != 0)
        std::erase_if(words, [&](const std::string& w) { return w.size() != word_length; });
    if (words.empty())
        throw std::runtime_error("no words to process (check --dict / --word-length)");
    return words;
}

std::string dataset_label(const std::string& dict_path) {
    return std::filesystem::path(dict_path).filename().string();
}

int run_stats(const std::string& dict_path, const std::string& format) {
    const std::vector<std::string> words = load_words(dict_path, 0);
    const fp::CorpusStats stats = fp::corpus_stats(words);
    const std::size_t alphabet = fp::compute_frequencies(words).alphabet_size();

    if (format == "csv") {
        std::cout << "length,count\n";
        for (const auto& [length, count] : stats.length_histogram)
            std::cout << length << ',' << count << '\n';
    } else if (format == "json-lines") {
        nlohmann::json histogram;
        for (const auto& [length, count] : stats.length_histogram)
            histogram[std::to_string(length)] = count;
        nlohmann::json j{{"dataset", dataset_label(dict_path)},
                         {"words", words.size()},
                         {"bytes", stats.total_bytes},
                         {"mode_length", stats.mode_length},
                         {"alphabet_size", alphabet},
                         {"histogram", histogram}};
        std::cout << j.dump() << '\n';
    } else {
        std::cout << "dataset:       " << dataset_label(dict_path) << '\n'
                  << "words:         " << words.size() << '\n'
                  << "bytes:         " << stats.total_bytes << '\n'
                  << "mode length:   " << stats.mode_length << '\n'
                  << "alphabet size: " << alphabet << '\n'
                  << "histogram:\n";
        for (const auto& [length, count] : stats.length_histogram)
            std::cout << "  " << length << ": " << count << '\n';
    }
    return 0;
}

struct BenchCli {
    std::string dict_path;
    std::uint64_t synthetic_bytes = 0;
    std::size_t word_length = 0;
    std::string metric = "hamming";
    int k = 1;
    std::vector<std::string> schemes{"occurrence"};
    std::vector<std::string> letters{"common"};
    std::size_t queries = 1000;
    std::size_t iterations = 100;
    int distort = 0;
    std::uint64_t seed = 0;
    bool length_filter = false;
    std::string format = "text";
    std::string queries_file;
};

int run_bench(const BenchCli& cli) {
    fp::BenchConfig config;
    if (!cli.dict_path.empty()) {
        config.words = load_words(cli.dict_path, cli.word_length);
        config.dataset = dataset_label(cli.dict_path);
    } else {
        if (cli.word_length == 0)
            throw std::runtime_error("--synthetic-bytes requires --word-length");
        config.words = fp::generate_synthetic(cli.synthetic_bytes, cli.word_length,
                                              fp::english_letter_frequencies(), cli.seed);
        config.dataset = "synthetic";
    }
    config.metric = parse_metric(cli.metric);
    config.k = cli.k;
    config.word_length = cli.word_length;
    config.query_count = cli.queries;
    config.iterations = cli.iterations;
    config.distort_max_errors = cli.distort;
    config.seed = cli.seed;
    config.levenshtein_length_prefilter = cli.length_filter;
    if (!cli.queries_file.empty())
        config.queries_override = fp::read_word_lines(cli.queries_file);

    const bool single_cell = cli.schemes.size() == 1 && cli.letters.size() == 1;
    bool csv_header_done = false;
    for (const auto& scheme_name : cli.schemes) {
        for (const auto& strategy_name : cli.letters) {
            config.variant = parse_variant(scheme_name);
            config.strategy = parse_strategy(strategy_name);
            if (!fp::variant_supports(config.variant, config.metric)) {
                if (single_cell)
                    throw std::runtime_error(std::string(fp::to_string(config.variant)) +
                                             " fingerprints do not filter for the " +
                                             cli.metric + " distance");
                std::cerr << "skipping " << fp::to_string(config.variant) << "/"
                          << strategy_name << ": no " << cli.metric << " support\n";
                continue;
            }

            const fp::BenchReport report = fp::run_benchmark(config);
            if (cli.format == "csv") {
                if (!csv_header_done) {
                    std::cout << fp::bench_csv_header() << '\n';
                    csv_header_done = true;
                }
                std::cout << fp::to_csv_row(report) << '\n';
            } else if (cli.format == "json-lines") {
                std::cout << fp::to_json_line(report) << '\n';
            } else {
                std::cout << fp::to_text(report) << '\n';
            }
        }
    }
    return 0;
}

struct SweepCli {
    std::string sizes = "6:30";
    std::uint64_t bytes = 256 * 1024;
    std::string metric = "hamming";
    int k = 1;
    std::size_t queries = 200;
    std::size_t iterations = 1;
    int distort = 0;
    std::uint64_t seed = 0;
    std::string format = "csv";
};

int run_sweep(const SweepCli& cli) {
    fp::SweepConfig config;
    config.word_sizes = parse_sizes(cli.sizes);
    config.corpus_bytes = cli.bytes;
    config.metric = parse_metric(cli.metric);
    config.k = cli.k;
    config.query_count = cli.queries;
    config.iterations = cli.iterations;
    config.distort_max_errors = cli.distort;
    config.seed = cli.seed;

    const std::vector<fp::SweepRow> rows = fp::emit_figure_data(config);
    if (cli.format == "json-lines") {
        for (const auto& row : rows)
            std::cout << fp::to_json_line(row) << '\n';
    } else {
        std::cout << fp::sweep_csv_header() << '\n';
        for (const auto& row : rows)
            std::cout << fp::to_csv_row(row) << '\n';
    }
    return 0;
}

struct CheckCli {
    std::string dict_path;
    std::size_t word_length = 0;
    std::string metric = "hamming";
    int k = 1;
    std::string scheme = "occurrence";
    std::string letters = "common";
    std::size_t queries = 200;
    int distort = 2;
    std::uint64_t seed = 0;
};

// Cross-checks the filtered query path against the slow oracle scan.
int run_check(const CheckCli& cli) {
    const std::vector<std::string> words = load_words(cli.dict_path, cli.word_length);
    const fp::Metric metric = parse_metric(cli.metric);
    const fp::Variant variant = parse_variant(cli.scheme);
    const fp::LetterSet set = fp::select_letters(fp::compute_frequencies(words),
                                                 fp::Scheme::letter_capacity(variant),
                                                 parse_strategy(cli.letters));
    const fp::FingerprintedDictionary dict(words, fp::Scheme::make(variant, set));

    const std::vector<std::string> queries =
        fp::sample_queries(words, cli.queries, {cli.distort, 0.5}, cli.seed);
    fp::QueryOptions opt;
    opt.metric = metric;
    opt.k = cli.k;
    opt.use_filter = true;

    std::size_t disagreements = 0;
    for (const auto& q : queries) {
        const auto filtered = dict.query(q, opt);
        const auto oracle = fp::naive_scan(words, q, cli.k, metric);
        if (filtered != oracle) {
            ++disagreements;
            std::cerr << "mismatch for query \"" << q << "\": filtered " << filtered.size()
                      << " matches, oracle " << oracle.size() << '\n';
        }
    }
    std::cout << queries.size() - disagreements << "/" << queries.size()
              << " queries agree with the oracle scan\n";
    return disagreements == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fingerprint filtering benchmark for approximate keyword matching"};
    app.require_subcommand(1);

    const auto format_check = CLI::IsMember({"csv", "text", "json-lines"});

    std::string stats_dict;
    std::string stats_format = "text";
    auto* stats = app.add_subcommand("stats", "corpus statistics");
    stats->add_option("--dict", stats_dict, "newline-separated word file")->required();
    stats->add_option("--format", stats_format)->check(format_check);

    std::string gen_out;
    std::uint64_t gen_bytes = 10 * 1000 * 1000;
    std::size_t gen_word_length = 9;
    std::uint64_t gen_seed = 0;
    auto* gen = app.add_subcommand("gen", "generate a synthetic English-frequency corpus");
    gen->add_option("--out", gen_out, "output word file")->required();
    gen->add_option("--bytes", gen_bytes, "total bytes of word data");
    gen->add_option("--word-length", gen_word_length)->check(CLI::PositiveNumber);
    gen->add_option("--seed", gen_seed);

    BenchCli bench_cli;
    auto* bench = app.add_subcommand("bench", "naive vs fingerprint benchmark");
    bench->add_option("--dict", bench_cli.dict_path, "newline-separated word file");
    bench->add_option("--synthetic-bytes", bench_cli.synthetic_bytes,
                      "generate this many bytes of synthetic words instead of --dict");
    bench->add_option("--word-length", bench_cli.word_length,
                      "keep only words of this length (or the generated length)");
    bench->add_option("--metric", bench_cli.metric);
    bench->add_option("--k", bench_cli.k)->check(CLI::PositiveNumber);
    bench->add_option("--scheme", bench_cli.schemes, "fingerprint variants, comma separated")
        ->delimiter(',');
    bench->add_option("--letters", bench_cli.letters, "letter strategies, comma separated")
        ->delimiter(',');
    bench->add_option("--queries", bench_cli.queries)->check(CLI::PositiveNumber);
    bench->add_option("--iterations", bench_cli.iterations)->check(CLI::PositiveNumber);
    bench->add_option("--distort", bench_cli.distort,
                      "max substitutions per query, each applied with probability 0.5");
    bench->add_option("--seed", bench_cli.seed);
    bench->add_flag("--length-filter", bench_cli.length_filter,
                    "enable the Levenshtein length pre-filter");
    bench->add_option("--format", bench_cli.format)->check(format_check);
    bench->add_option("--queries-file", bench_cli.queries_file,
                      "use these queries instead of sampling");

    SweepCli sweep_cli;
    auto* sweep = app.add_subcommand("sweep", "comparison time vs word size on synthetic data");
    sweep->add_option("--sizes", sweep_cli.sizes, "word sizes, e.g. 6:30 or 6,9,18");
    sweep->add_option("--bytes", sweep_cli.bytes, "synthetic corpus bytes per size");
    sweep->add_option("--metric", sweep_cli.metric);
    sweep->add_option("--k", sweep_cli.k)->check(CLI::PositiveNumber);
    sweep->add_option("--queries", sweep_cli.queries)->check(CLI::PositiveNumber);
    sweep->add_option("--iterations", sweep_cli.iterations)->check(CLI::PositiveNumber);
    sweep->add_option("--distort", sweep_cli.distort);
    sweep->add_option("--seed", sweep_cli.seed);
    sweep->add_option("--format", sweep_cli.format)->check(CLI::IsMember({"csv", "json-lines"}));

    CheckCli check_cli;
    auto* check = app.add_subcommand("check", "cross-check filtered queries against the oracle");
    check->add_option("--dict", check_cli.dict_path)->required();
    check->add_option("--word-length", check_cli.word_length);
    check->add_option("--metric", check_cli.metric);
    check->add_option("--k", check_cli.k)->check(CLI::PositiveNumber);
    check->add_option("--scheme", check_cli.scheme);
    check->add_option("--letters", check_cli.letters);
    check->add_option("--queries", check_cli.queries)->check(CLI::PositiveNumber);
    check->add_option("--distort", check_cli.distort);
    check->add_option("--seed", check_cli.seed);

    CLI11_PARSE(app, argc, argv);

    try {
        if (stats->parsed())
            return run_stats(stats_dict, stats_format);
        if (gen->parsed()) {
            fp::write_word_lines(gen_out, fp::generate_synthetic(gen_bytes, gen_word_length,
                                                                 fp::english_letter_frequencies(),
                                                                 gen_seed));
            return 0;
        }
        if (bench->parsed()) {
            if (bench_cli.dict_path.empty() == (bench_cli.synthetic_bytes == 0))
                throw std::runtime_error("give exactly one of --dict or --synthetic-bytes");
            return run_bench(bench_cli);
        }
        if (sweep->parsed())
            return run_sweep(sweep_cli);
        if (check->parsed())
            return run_check(check_cli);
    } catch (const std::exception& e) {
        std::cerr << "fpbench: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
