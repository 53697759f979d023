// treepat command line: enumeration, avoidance sequences, functional
// equations, Wilf classification and bijections for pattern-avoiding
// strict m-ary trees.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "treepat/bijections.hpp"
#include "treepat/classify.hpp"
#include "treepat/errors.hpp"
#include "treepat/genfunc.hpp"
#include "treepat/tree.hpp"
#include "treepat/wordset.hpp"

namespace {

using nlohmann::json;
using namespace treepat;

struct Output {
    std::string format = "text";
    std::string out_path;

    void emit(const std::string& text, const json& j) const {
        std::string payload = format == "json" ? j.dump(2) + "\n" : text;
        if (out_path.empty()) {
            std::cout << payload;
        } else {
            std::ofstream f(out_path);
            if (!f) throw std::runtime_error("cannot open " + out_path + " for writing");
            f << payload;
        }
    }
};

json integer_to_json(const Integer& v) {
    if (v.fits_slong_p()) return static_cast<long>(v.get_si());
    return v.get_str();
}

json sequence_json(const PowerSeries& s) {
    json arr = json::array();
    for (const Integer& c : s.coeff) arr.push_back(integer_to_json(c));
    return arr;
}

// Word-set literals start with '{'; anything else is a parenthesized tree.
MAryTree parse_any_tree(const std::string& text, int arity) {
    std::size_t i = text.find_first_not_of(" \t\n\r");
    if (i != std::string::npos && text[i] == '{')
        return wordset_to_tree(parse_word_set(text, arity));
    return parse_tree_literal(text, arity);
}

void add_format_flags(CLI::App* cmd, Output& out) {
    cmd->add_option("--format", out.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    cmd->add_option("--out", out.out_path, "Write the result to a file instead of stdout");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"pattern-avoiding m-ary trees: enumeration, generating functions, bijections"};
    app.require_subcommand(1);
    Output out;

    int arity = 3;

    // ---- trees ----------------------------------------------------------
    auto* trees = app.add_subcommand("trees", "Enumerate or count strict m-ary trees");
    trees->require_subcommand(1);

    auto* trees_enum = trees->add_subcommand("enumerate", "List all trees with a given leaf count");
    int enum_leaves = 1;
    std::string notation = "words";
    trees_enum->add_option("--arity", arity, "Tree arity m")->capture_default_str();
    trees_enum->add_option("--leaves", enum_leaves, "Leaf count")->required();
    trees_enum->add_option("--notation", notation, "Tree rendering")
        ->check(CLI::IsMember({"words", "parens"}))
        ->capture_default_str();
    add_format_flags(trees_enum, out);
    trees_enum->callback([&] {
        std::vector<MAryTree> ts = enumerate_trees(arity, enum_leaves);
        std::string text;
        json arr = json::array();
        for (const MAryTree& t : ts) {
            std::string lit =
                notation == "parens" ? to_tree_literal(t) : tree_to_wordset(t).to_literal();
            text += lit + "\n";
            arr.push_back(lit);
        }
        out.emit(text, json{{"arity", arity},
                            {"leaves", enum_leaves},
                            {"count", ts.size()},
                            {"trees", arr}});
    });

    auto* trees_count = trees->add_subcommand("count", "Count trees with k internal vertices");
    int internal = 0;
    trees_count->add_option("--arity", arity, "Tree arity m")->capture_default_str();
    trees_count->add_option("--internal", internal, "Internal vertex count")->required();
    add_format_flags(trees_count, out);
    trees_count->callback([&] {
        Integer c = count_trees(arity, internal);
        out.emit(c.get_str() + "\n",
                 json{{"arity", arity}, {"internal", internal}, {"count", integer_to_json(c)}});
    });

    // ---- pattern --------------------------------------------------------
    auto* pattern = app.add_subcommand("pattern", "Pattern containment queries");
    pattern->require_subcommand(1);
    auto* pat_contains = pattern->add_subcommand("contains", "Find a pattern occurrence");
    std::string host_lit, pat_lit;
    pat_contains->add_option("--arity", arity, "Tree arity m")->capture_default_str();
    pat_contains->add_option("--host", host_lit, "Host tree (word-set or parenthesized literal)")
        ->required();
    pat_contains->add_option("--pattern", pat_lit, "Pattern tree")->required();
    add_format_flags(pat_contains, out);
    pat_contains->callback([&] {
        auto occ = contains(parse_any_tree(host_lit, arity), parse_any_tree(pat_lit, arity));
        if (occ)
            out.emit("occurrence at path \"" + occ->path + "\"\n",
                     json{{"contains", true}, {"path", occ->path}});
        else
            out.emit("no occurrence\n", json{{"contains", false}, {"path", nullptr}});
    });

    // ---- avoid ----------------------------------------------------------
    auto* avoid = app.add_subcommand("avoid", "Avoidance counts and sequences");
    avoid->require_subcommand(1);

    auto* avoid_cnt = avoid->add_subcommand("count", "Number of n-leaf trees avoiding a pattern");
    std::string avoid_pat;
    int avoid_leaves = 1;
    avoid_cnt->add_option("--arity", arity, "Tree arity m")->capture_default_str();
    avoid_cnt->add_option("--pattern", avoid_pat, "Pattern (word-set literal)")->required();
    avoid_cnt->add_option("--leaves", avoid_leaves, "Leaf count n")->required();
    add_format_flags(avoid_cnt, out);
    avoid_cnt->callback([&] {
        std::uint64_t c =
            avoid_count(wordset_to_tree(parse_word_set(avoid_pat, arity)), avoid_leaves);
        out.emit(std::to_string(c) + "\n",
                 json{{"pattern", avoid_pat}, {"leaves", avoid_leaves}, {"count", c}});
    });

    auto* avoid_series = avoid->add_subcommand("series", "Avoidance sequence av(0..terms-1)");
    int terms = 20;
    std::string method = "genfunc";
    avoid_series->add_option("--arity", arity, "Tree arity m")->capture_default_str();
    avoid_series->add_option("--pattern", avoid_pat, "Pattern (word-set literal)")->required();
    avoid_series->add_option("--terms", terms, "Number of terms, including av(0)")
        ->capture_default_str();
    avoid_series->add_option("--method", method, "Sequence method")
        ->check(CLI::IsMember({"brute", "genfunc", "both"}))
        ->capture_default_str();
    add_format_flags(avoid_series, out);
    avoid_series->callback([&] {
        if (terms < 2) throw std::domain_error("need at least 2 terms");
        PowerSeries s = avoidance_sequence(parse_word_set(avoid_pat, arity), terms - 1,
                                           seq_method_from_string(method));
        out.emit(s.to_string() + "\n", json{{"pattern", avoid_pat},
                                            {"method", method},
                                            {"sequence", sequence_json(s)}});
    });

    // ---- genfunc --------------------------------------------------------
    auto* genfunc = app.add_subcommand("genfunc", "Generating-function system and equations");
    genfunc->require_subcommand(1);
    std::string gf_pat;

    auto* gf_system = genfunc->add_subcommand("system", "Print the polynomial equation system");
    gf_system->add_option("--arity", arity, "Tree arity m")->capture_default_str();
    gf_system->add_option("--pattern", gf_pat, "Pattern (word-set literal)")->required();
    add_format_flags(gf_system, out);
    gf_system->callback([&] {
        PatternSystem sys = build_system(parse_word_set(gf_pat, arity));
        std::string text = system_to_string(sys);
        json eqs = json::array();
        {
            std::istringstream in(text);
            std::string line;
            while (std::getline(in, line)) eqs.push_back(line);
        }
        json vars = json::array();
        for (const std::string& n : sys.var_names()) vars.push_back(n);
        out.emit(text, json{{"pattern", gf_pat}, {"variables", vars}, {"equations", eqs}});
    });

    auto* gf_elim = genfunc->add_subcommand(
        "eliminate", "Eliminate auxiliary variables down to one equation in x and a");
    gf_elim->add_option("--arity", arity, "Tree arity m")->capture_default_str();
    gf_elim->add_option("--pattern", gf_pat, "Pattern (word-set literal)")->required();
    add_format_flags(gf_elim, out);
    gf_elim->callback([&] {
        BivariatePoly p = eliminate(build_system(parse_word_set(gf_pat, arity)));
        out.emit(p.to_string() + "\n", json{{"pattern", gf_pat}, {"equation", p.to_string()}});
    });

    auto* gf_fit = genfunc->add_subcommand(
        "fit", "Fit a minimal algebraic equation to the avoidance series");
    int fit_terms = 36, deg_a = -1, deg_x = -1;
    gf_fit->add_option("--arity", arity, "Tree arity m")->capture_default_str();
    gf_fit->add_option("--pattern", gf_pat, "Pattern (word-set literal)")->required();
    gf_fit->add_option("--terms", fit_terms, "Series terms to fit against")
        ->capture_default_str();
    gf_fit->add_option("--dega", deg_a, "Degree bound in a (with --degx; default: scan)");
    gf_fit->add_option("--degx", deg_x, "Degree bound in x (with --dega; default: scan)");
    add_format_flags(gf_fit, out);
    gf_fit->callback([&] {
        if (fit_terms < 13) throw std::domain_error("need at least 13 terms to fit");
        PowerSeries s = avoidance_sequence(parse_word_set(gf_pat, arity), fit_terms - 1,
                                           SeqMethod::genfunc);
        std::optional<BivariatePoly> fit;
        if (deg_a >= 0 && deg_x >= 0)
            fit = fit_algebraic_equation(s, deg_a, deg_x);
        else
            fit = fit_algebraic_equation_auto(s);
        if (fit)
            out.emit(fit->to_string() + "\n",
                     json{{"pattern", gf_pat}, {"equation", fit->to_string()}});
        else
            out.emit("no relation found\n", json{{"pattern", gf_pat}, {"equation", nullptr}});
    });

    // ---- classify -------------------------------------------------------
    auto* classify = app.add_subcommand("classify", "Group patterns into Wilf classes");
    int cls_leaves = 5, cls_terms = 20, jobs = 1;
    std::string cls_method = "auto";
    bool reduce_reflections = false;
    classify->add_option("--arity", arity, "Tree arity m")->capture_default_str();
    classify->add_option("--leaves", cls_leaves, "Pattern leaf count")->required();
    classify->add_option("--terms", cls_terms, "Sequence terms, including av(0)")
        ->capture_default_str();
    classify->add_option("--method", cls_method,
                         "brute, genfunc, both, or auto (brute up to 20 terms, genfunc beyond)")
        ->check(CLI::IsMember({"brute", "genfunc", "both", "auto"}))
        ->capture_default_str();
    classify->add_flag("--reduce-reflections", reduce_reflections,
                       "Keep one pattern per reflection pair");
    classify->add_option("--jobs", jobs, "Worker threads (0 = hardware)")->capture_default_str();
    add_format_flags(classify, out);
    classify->callback([&] {
        ClassifyOptions opt;
        opt.method = cls_method == "auto"
                         ? (cls_terms <= 20 ? SeqMethod::brute : SeqMethod::genfunc)
                         : seq_method_from_string(cls_method);
        opt.reduce_reflections = reduce_reflections;
        opt.jobs = jobs;
        WilfClassReport r = classify_patterns(arity, cls_leaves, cls_terms - 1, opt);
        std::string text;
        {
            std::ostringstream s;
            s << "arity " << r.arity << ", " << r.pattern_leaves << "-leaf patterns, av(0.."
              << r.terms << ") by " << r.method << ": " << r.classes.size() << " classes\n";
            for (std::size_t i = 0; i < r.classes.size(); ++i) {
                const WilfClass& c = r.classes[i];
                s << "class " << i + 1 << " (" << c.members.size() << " patterns)\n";
                s << "  members:";
                for (const std::string& m : c.members) s << " " << m;
                s << "\n  sequence: ";
                for (std::size_t k = 0; k < c.sequence.size(); ++k)
                    s << (k ? ", " : "") << c.sequence[k].get_str();
                s << "\n  equation: " << (c.equation ? *c.equation : "(none)")
                  << (c.equation_certified ? " [certified]" : "") << "\n";
            }
            text = s.str();
        }
        out.emit(text, json::parse(report_to_json(r)));
    });

    // ---- biject ---------------------------------------------------------
    auto* biject = app.add_subcommand("biject", "Bijections between avoidance classes");
    biject->require_subcommand(1);
    std::string input;

    auto* relabel_cmd = biject->add_subcommand("relabel", "Apply a letter permutation");
    std::string perm_lit, preset;
    relabel_cmd->add_option("--arity", arity, "Tree arity m")->capture_default_str();
    relabel_cmd->add_option("--perm", perm_lit, "Image list, e.g. 2,1,3");
    relabel_cmd->add_option("--preset", preset,
                            "Named bijection (t51-t52, t73-t77, t71-t72, t74-t75, t75-t76)");
    relabel_cmd->add_option("--input", input, "Word-set literal")->required();
    add_format_flags(relabel_cmd, out);
    relabel_cmd->callback([&] {
        WordSet w = parse_word_set(input, arity);
        std::optional<LetterPermutation> perm;
        if (!perm_lit.empty())
            perm = parse_permutation(perm_lit);
        else if (!preset.empty())
            perm = named_relabel(preset).perm;
        else
            throw std::domain_error("relabel needs --perm or --preset");
        WordSet r = relabel(w, *perm);
        out.emit(r.to_literal() + "\n", json{{"input", input}, {"output", r.to_literal()}});
    });

    auto add_ws_biject = [&](const char* name, const char* help, WordSet (*fn)(const WordSet&)) {
        auto* cmd = biject->add_subcommand(name, help);
        cmd->add_option("--input", input, "Word-set literal")->required();
        add_format_flags(cmd, out);
        cmd->callback([&, fn] {
            WordSet r = fn(parse_word_set(input, 3));
            out.emit(r.to_literal() + "\n", json{{"input", input}, {"output", r.to_literal()}});
        });
    };
    add_ws_biject("cut-forward", "Map a {1,2}-avoider to a {12}-avoider", &cut_forward);
    add_ws_biject("cut-inverse", "Map a {12}-avoider back to a {1,2}-avoider", &cut_inverse);

    auto* s2t = biject->add_subcommand("schroder-to-ternary",
                                       "Map a colored binary tree to a {1,3}-avoider");
    s2t->add_option("--input", input, "Colored-binary literal, e.g. ((. d:(..)) s:(..))")
        ->required();
    add_format_flags(s2t, out);
    s2t->callback([&] {
        MAryTree t = schroder_to_ternary(parse_colored_tree(input));
        std::string lit = tree_to_wordset(t).to_literal();
        out.emit(lit + "\n", json{{"input", input}, {"output", lit}});
    });

    auto* t2s = biject->add_subcommand("schroder-from-ternary",
                                       "Map a {1,3}-avoiding ternary tree to a colored binary tree");
    t2s->add_option("--input", input, "Ternary tree (word-set or parenthesized literal)")
        ->required();
    add_format_flags(t2s, out);
    t2s->callback([&] {
        ColoredBinaryTree b = ternary_to_schroder(parse_any_tree(input, 3));
        std::string lit = to_colored_literal(b);
        out.emit(lit + "\n", json{{"input", input}, {"output", lit}});
    });

    // ---- dispatch -------------------------------------------------------
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        std::cerr << "hint: word sets look like {21,23,321}, {e} or {}; trees like ((...)..)"
                  << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
