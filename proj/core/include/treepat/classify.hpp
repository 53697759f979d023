#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "treepat/genfunc.hpp"
#include "treepat/power_series.hpp"
#include "treepat/wordset.hpp"

namespace treepat {

enum class SeqMethod { brute, genfunc, both };

std::string to_string(SeqMethod m);
SeqMethod seq_method_from_string(const std::string& s);

/// Avoidance sequence av_t(0..N).  brute counts trees exhaustively, genfunc
/// extracts series coefficients from the equation system, both runs the two
/// and throws std::logic_error on the first disagreement.
PowerSeries avoidance_sequence(const WordSet& pattern, int max_leaves, SeqMethod method);

/// One Wilf class: patterns with identical avoidance sequences up to the
/// computed number of terms.
struct WilfClass {
    std::vector<std::string> members;  // word-set literals, sorted
    std::vector<Integer> sequence;     // av(0..terms)
    std::optional<std::string> equation; // fitted functional equation, if found
    bool equation_certified = false;   // every member's own fit agrees

    friend bool operator==(const WilfClass&, const WilfClass&) = default;
};

/// Partition of the L-leaf pattern family into Wilf classes (equivalence up
/// to the computed terms), most permissive class first.
struct WilfClassReport {
    int arity = 0;
    int pattern_leaves = 0;
    int terms = 0; // max leaf count N computed (sequence has N+1 entries)
    std::string method;
    std::vector<WilfClass> classes;

    friend bool operator==(const WilfClassReport&, const WilfClassReport&) = default;
};

struct ClassifyOptions {
    SeqMethod method = SeqMethod::brute;
    bool reduce_reflections = false;
    int jobs = 1;
};

/// Classifies all patterns with `pattern_leaves` leaves by their avoidance
/// sequences through max_leaves terms, fits each class's functional equation
/// (automatic bound scan, subject to the available series length), and
/// cross-certifies the equation against every member's own system.
/// Requires pattern_leaves = 1 mod (arity-1) and max_leaves >= pattern_leaves.
WilfClassReport classify_patterns(int arity, int pattern_leaves, int max_leaves,
                                  const ClassifyOptions& options = {});

std::string report_to_json(const WilfClassReport& report);
WilfClassReport report_from_json(const std::string& text);

void write_report(const WilfClassReport& report, const std::filesystem::path& path);
WilfClassReport read_report(const std::filesystem::path& path);

} // namespace treepat
