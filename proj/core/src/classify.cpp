#include "treepat/classify.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <future>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "treepat/errors.hpp"
#include "treepat/tree.hpp"

namespace treepat {

std::string to_string(SeqMethod m) {
    switch (m) {
    case SeqMethod::brute: return "brute";
    case SeqMethod::genfunc: return "genfunc";
    case SeqMethod::both: return "both";
    }
    return "?";
}

SeqMethod seq_method_from_string(const std::string& s) {
    if (s == "brute") return SeqMethod::brute;
    if (s == "genfunc") return SeqMethod::genfunc;
    if (s == "both") return SeqMethod::both;
    throw std::invalid_argument("unknown method '" + s + "' (expected brute, genfunc or both)");
}

namespace {

PowerSeries brute_sequence(const WordSet& pattern, int max_leaves) {
    MAryTree t = wordset_to_tree(pattern);
    std::vector<Integer> coeff(max_leaves + 1, Integer(0));
    for (int n = 1; n <= max_leaves; ++n)
        coeff[n] = Integer(static_cast<unsigned long>(avoid_count(t, n)));
    return PowerSeries(std::move(coeff));
}

} // namespace

PowerSeries avoidance_sequence(const WordSet& pattern, int max_leaves, SeqMethod method) {
    if (max_leaves < 1) throw std::invalid_argument("max leaf count must be at least 1");
    MAryTree t = wordset_to_tree(pattern);
    if (t.node_count() == 1) // every tree contains the single vertex
        return PowerSeries(std::vector<Integer>(max_leaves + 1, Integer(0)));
    switch (method) {
    case SeqMethod::brute:
        return brute_sequence(pattern, max_leaves);
    case SeqMethod::genfunc:
        return series_from_system(build_system(pattern), max_leaves);
    case SeqMethod::both: {
        PowerSeries b = brute_sequence(pattern, max_leaves);
        PowerSeries g = series_from_system(build_system(pattern), max_leaves);
        for (int n = 0; n <= max_leaves; ++n)
            if (b[n] != g[n])
                throw std::logic_error("brute and genfunc sequences for " + pattern.to_literal() +
                                       " disagree at n=" + std::to_string(n) + ": " +
                                       b[n].get_str() + " vs " + g[n].get_str());
        return b;
    }
    }
    throw std::logic_error("unreachable");
}

namespace {

// lexicographically descending comparison of sequences
bool sequence_greater(const std::vector<Integer>& a, const std::vector<Integer>& b) {
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
        if (a[i] != b[i]) return a[i] > b[i];
    }
    return a.size() > b.size();
}

} // namespace

WilfClassReport classify_patterns(int arity, int pattern_leaves, int max_leaves,
                                  const ClassifyOptions& options) {
    if (pattern_leaves < 1 || (pattern_leaves != 1 && (pattern_leaves - 1) % (arity - 1) != 0))
        throw std::domain_error("no patterns with " + std::to_string(pattern_leaves) +
                                " leaves exist at arity " + std::to_string(arity));
    if (max_leaves < pattern_leaves)
        throw std::domain_error("terms must reach at least the pattern size");

    std::vector<WordSet> family;
    for (const MAryTree& t : enumerate_trees(arity, pattern_leaves))
        family.push_back(tree_to_wordset(t));
    if (family.empty())
        throw std::domain_error("empty pattern family");
    if (options.reduce_reflections) {
        std::vector<WordSet> reduced;
        for (const WordSet& w : family) {
            if (w.to_literal() <= reflect(w).to_literal()) reduced.push_back(w);
        }
        family = std::move(reduced);
    }

    // avoidance sequences, optionally in parallel (deterministic merge)
    std::vector<PowerSeries> seqs(family.size());
    int jobs = options.jobs;
    if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs <= 1 || family.size() < 2) {
        for (std::size_t i = 0; i < family.size(); ++i)
            seqs[i] = avoidance_sequence(family[i], max_leaves, options.method);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= family.size()) return;
                seqs[i] = avoidance_sequence(family[i], max_leaves, options.method);
            }
        };
        std::vector<std::future<void>> pool;
        for (int j = 0; j < jobs; ++j) pool.push_back(std::async(std::launch::async, worker));
        for (auto& f : pool) f.get(); // propagates the first exception
    }

    std::map<std::string, WilfClass> grouped; // key = rendered sequence
    for (std::size_t i = 0; i < family.size(); ++i) {
        WilfClass& cls = grouped[seqs[i].to_string()];
        cls.members.push_back(family[i].to_literal());
        if (cls.sequence.empty()) cls.sequence = seqs[i].coeff;
    }

    WilfClassReport report;
    report.arity = arity;
    report.pattern_leaves = pattern_leaves;
    report.terms = max_leaves;
    report.method = to_string(options.method);
    for (auto& [key, cls] : grouped) {
        std::sort(cls.members.begin(), cls.members.end());
        // fitted functional equation, when the series is long enough
        std::optional<BivariatePoly> eq = fit_algebraic_equation_auto(PowerSeries(cls.sequence));
        if (eq) {
            cls.equation = eq->to_string();
            // certify: every member's own system yields the same minimal equation
            cls.equation_certified = true;
            for (const std::string& literal : cls.members) {
                WordSet member = parse_word_set(literal, arity);
                PowerSeries own = avoidance_sequence(member, max_leaves, SeqMethod::genfunc);
                std::optional<BivariatePoly> own_eq =
                    fit_algebraic_equation(own, eq->degree_a(), eq->degree_x());
                if (!own_eq || !(*own_eq == *eq)) {
                    cls.equation_certified = false;
                    break;
                }
            }
        }
        report.classes.push_back(std::move(cls));
    }
    std::sort(report.classes.begin(), report.classes.end(),
              [](const WilfClass& a, const WilfClass& b) {
                  return sequence_greater(a.sequence, b.sequence);
              });
    return report;
}

// ---------------------------------------------------------------------------
// JSON report serialization

namespace {

nlohmann::json sequence_to_json(const std::vector<Integer>& seq) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Integer& v : seq) {
        if (!v.fits_slong_p())
            throw std::domain_error("sequence value exceeds the JSON integer range");
        arr.push_back(static_cast<long>(v.get_si()));
    }
    return arr;
}

} // namespace

std::string report_to_json(const WilfClassReport& report) {
    nlohmann::json j;
    j["arity"] = report.arity;
    j["pattern_leaves"] = report.pattern_leaves;
    j["terms"] = report.terms;
    j["method"] = report.method;
    j["classes"] = nlohmann::json::array();
    for (const WilfClass& cls : report.classes) {
        nlohmann::json c;
        c["members"] = cls.members;
        c["sequence"] = sequence_to_json(cls.sequence);
        if (cls.equation)
            c["equation"] = *cls.equation;
        else
            c["equation"] = nullptr;
        c["equation_certified"] = cls.equation_certified;
        j["classes"].push_back(std::move(c));
    }
    return j.dump(2);
}

WilfClassReport report_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(std::string("invalid report JSON: ") + e.what(), e.byte);
    }
    auto require = [&](const nlohmann::json& obj, const char* key) -> const nlohmann::json& {
        if (!obj.contains(key))
            throw parse_error(std::string("report is missing key '") + key + "'", 0);
        return obj.at(key);
    };
    try {
        WilfClassReport report;
        report.arity = require(j, "arity").get<int>();
        report.pattern_leaves = require(j, "pattern_leaves").get<int>();
        report.terms = require(j, "terms").get<int>();
        report.method = require(j, "method").get<std::string>();
        for (const auto& c : require(j, "classes")) {
            WilfClass cls;
            for (const auto& m : require(c, "members")) cls.members.push_back(m.get<std::string>());
            for (const auto& v : require(c, "sequence")) cls.sequence.emplace_back(v.get<long>());
            const auto& eq = require(c, "equation");
            if (!eq.is_null()) cls.equation = eq.get<std::string>();
            cls.equation_certified = require(c, "equation_certified").get<bool>();
            report.classes.push_back(std::move(cls));
        }
        return report;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("invalid report JSON: ") + e.what(), 0);
    }
}

void write_report(const WilfClassReport& report, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << report_to_json(report) << "\n";
    if (!out) throw std::runtime_error("failed writing " + path.string());
}

WilfClassReport read_report(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return report_from_json(buf.str());
}

} // namespace treepat
