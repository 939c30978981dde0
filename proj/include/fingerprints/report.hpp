#pragma once

#include <iomanip>
#include <sstream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "fingerprints/bench.hpp"

namespace fingerprints {

inline std::string_view bench_csv_header() {
    return "dataset,variant,strategy,metric,k,word_length,T_n_ns,T_f_ns,speedup,"
           "rejection_pct,construction_mbps,matches";
}

inline std::string to_csv_row(const BenchReport& r) {
    std::ostringstream out;
    out << r.dataset << ',' << to_string(r.variant) << ',' << to_string(r.strategy) << ','
        << to_string(r.metric) << ',' << r.k << ',' << r.word_length << ',' << std::fixed
        << std::setprecision(3) << r.t_naive_ns << ',' << r.t_fingerprint_ns << ','
        << r.speedup << ',' << std::setprecision(2) << r.rejection_pct << ','
        << r.construction_mbps << ',' << r.matches_fingerprint;
    return out.str();
}

inline std::string to_text(const BenchReport& r) {
    std::ostringstream out;
    out << "dataset:            " << r.dataset << " (" << r.word_count << " words";
    if (r.word_length != 0)
        out << ", length " << r.word_length;
    out << ")\n";
    out << "scheme:             " << to_string(r.variant) << " / " << to_string(r.strategy)
        << ", letters \"" << r.letters << "\"\n";
    out << "query:              " << to_string(r.metric) << ", k=" << r.k << ", "
        << r.query_count << " queries x " << r.iterations << " iterations, seed " << r.seed
        << "\n";
    out << std::fixed << std::setprecision(3);
    out << "naive time/pair:    " << r.t_naive_ns << " ns\n";
    out << "filtered time/pair: " << r.t_fingerprint_ns << " ns\n";
    out << "speedup:            " << r.speedup << "\n";
    out << std::setprecision(2);
    out << "rejected:           " << r.rejection_pct << " % ("
        << r.filtered_stats.rejected_by_fingerprint << " by fingerprint, "
        << r.filtered_stats.rejected_by_length << " by length, " << r.filtered_stats.verified
        << " verified)\n";
    out << "construction:       " << r.construction_mbps << " MB/s\n";
    out << "matches:            " << r.matches_fingerprint << " (naive path: " << r.matches_naive
        << ")\n";
    out << "environment:        " << r.environment << "\n";
    return out.str();
}

inline std::string to_json_line(const BenchReport& r) {
    nlohmann::json j{
        {"dataset", r.dataset},
        {"variant", to_string(r.variant)},
        {"strategy", to_string(r.strategy)},
        {"metric", to_string(r.metric)},
        {"k", r.k},
        {"word_length", r.word_length},
        {"word_count", r.word_count},
        {"letters", r.letters},
        {"T_n_ns", r.t_naive_ns},
        {"T_f_ns", r.t_fingerprint_ns},
        {"speedup", r.speedup},
        {"rejection_pct", r.rejection_pct},
        {"construction_mbps", r.construction_mbps},
        {"matches", r.matches_fingerprint},
        {"matches_naive", r.matches_naive},
        {"compared", r.filtered_stats.compared},
        {"rejected_by_length", r.filtered_stats.rejected_by_length},
        {"rejected_by_fingerprint", r.filtered_stats.rejected_by_fingerprint},
        {"verified", r.filtered_stats.verified},
        {"queries", r.query_count},
        {"iterations", r.iterations},
        {"seed", r.seed},
        {"environment", r.environment},
    };
    return j.dump();
}

inline std::string_view sweep_csv_header() {
    return "word_size,variant,strategy,mean_pair_ns";
}

inline std::string to_csv_row(const SweepRow& r) {
    std::ostringstream out;
    out << r.word_size << ',' << r.variant << ',' << r.strategy << ',' << std::fixed
        << std::setprecision(3) << r.mean_pair_ns;
    return out.str();
}

inline std::string to_json_line(const SweepRow& r) {
    nlohmann::json j{{"word_size", r.word_size},
                     {"variant", r.variant},
                     {"strategy", r.strategy},
                     {"mean_pair_ns", r.mean_pair_ns}};
    return j.dump();
}

}  // namespace fingerprints
