#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "treepat/genfunc.hpp"
#include "treepat/tree.hpp"
#include "treepat/wordset.hpp"

using namespace treepat;
using testutil::bp;
using testutil::seq;

namespace {

WordSet ws(const char* literal, int arity = 3) { return parse_word_set(literal, arity); }

} // namespace

TEST_CASE("pattern intersection") {
    CHECK(intersect(ws("{11}"), ws("{}")) == ws("{11}"));
    CHECK(intersect(ws("{}"), ws("{11}")) == ws("{11}"));
    CHECK(intersect(ws("{1}"), ws("{2}")) == ws("{1,2}"));
    CHECK(intersect(ws("{12}"), ws("{12}")) == ws("{12}"));
    CHECK(intersect(ws("{1}"), ws("{11}")) == ws("{11}"));
    CHECK(intersect(ws("{e}"), ws("{111}")) == ws("{111}"));
    CHECK_THROWS_AS(intersect(ws("{1}"), ws("{1}", 4)), std::invalid_argument);

    // both operands occur at the root of the intersection
    const char* lits[] = {"{1}", "{2}", "{e}", "{12}", "{1,2}", "{11}"};
    for (const char* a : lits)
        for (const char* b : lits) {
            WordSet i = intersect(ws(a), ws(b));
            CHECK(intersect(ws(a), ws(b)) == intersect(ws(b), ws(a)));
            auto occ = contains(wordset_to_tree(i), wordset_to_tree(ws(a)));
            REQUIRE(occ.has_value());
            CHECK(occ->path == "");
        }
}

TEST_CASE("build_system for {11} reproduces the worked three-variable system") {
    PatternSystem sys = build_system(ws("{11}"));
    REQUIRE(sys.patterns.size() == 3);
    CHECK(sys.patterns[0].to_literal() == "{}");
    CHECK(sys.patterns[1].to_literal() == "{e}");
    CHECK(sys.patterns[2].to_literal() == "{1}");

    // with x=var0, a=var1, b=var2, c=var3:  a = x + b,  b = a^3 - c a^2,
    // c = b a^2 - c a^2
    const int nv = 4;
    MultiPoly x = MultiPoly::variable(nv, 0), a = MultiPoly::variable(nv, 1);
    MultiPoly b = MultiPoly::variable(nv, 2), c = MultiPoly::variable(nv, 3);
    CHECK(sys.equations[0] == a - x - b);
    CHECK(sys.equations[1] == b - (a.pow(3) - c * a.pow(2)));
    CHECK(sys.equations[2] == c - (b * a.pow(2) - c * a.pow(2)));

    CHECK(system_to_string(sys) ==
          "g{} = x + g{e}\n"
          "g{e} = g{}^3 - g{}^2*g{1}\n"
          "g{1} = g{}^2*g{e} - g{}^2*g{1}\n");
}

TEST_CASE("build_system for the star") {
    PatternSystem sys = build_system(ws("{e}"));
    REQUIRE(sys.patterns.size() == 2);
    // g_star = a^3 - a^3 = 0
    CHECK(sys.equations[1] == MultiPoly::variable(3, 2));
    CHECK(series_from_system(sys, 5) == testutil::series("0, 1, 0, 0, 0, 0"));
}

TEST_CASE("build_system rejects the single-vertex pattern") {
    CHECK_THROWS_AS(build_system(ws("{}")), std::domain_error);
}

TEST_CASE("every system is closed: one equation per discovered pattern") {
    for (int L : {3, 5, 7, 9}) {
        for (const MAryTree& t : enumerate_trees(3, L)) {
            PatternSystem sys = build_system(tree_to_wordset(t));
            CHECK(sys.equations.size() == sys.patterns.size());
            CHECK(sys.index.size() == sys.patterns.size());
            CHECK(sys.patterns[0].to_literal() == "{}");
            CHECK(sys.patterns[1].to_literal() == "{e}");
            // the base equation for the single-vertex pattern is present
            MultiPoly base = MultiPoly::variable(sys.var_count(), 1) -
                             MultiPoly::variable(sys.var_count(), 0) -
                             MultiPoly::variable(sys.var_count(), 2);
            CHECK(sys.equations[0] == base);
        }
    }
}

TEST_CASE("series_from_system on the worked examples") {
    CHECK(series_from_system(build_system(ws("{11}")), 25) ==
          testutil::series("0, 1, 0, 1, 0, 3, 0, 11, 0, 46, 0, 207, 0, 979, 0, 4797, 0, 24138, "
                           "0, 123998, 0, 647615, 0, 3428493, 0, 18356714"));
    CHECK(series_from_system(build_system(ws("{1}")), 9) ==
          testutil::series("0, 1, 0, 1, 0, 2, 0, 5, 0, 14"));
    CHECK_THROWS_AS(series_from_system(build_system(ws("{1}")), 0), std::invalid_argument);
}

TEST_CASE("series equals brute-force counts for every small ternary pattern") {
    for (int L : {3, 5, 7, 9}) {
        for (const MAryTree& t : enumerate_trees(3, L)) {
            WordSet w = tree_to_wordset(t);
            PowerSeries s = series_from_system(build_system(w), 15);
            for (int n = 0; n <= 15; ++n)
                CHECK(s[n] == Integer(static_cast<unsigned long>(avoid_count(t, n))));
        }
    }
}

TEST_CASE("series iteration divergence guard") {
    // a deliberately malformed system: g_star = g_star + x never stabilizes
    PatternSystem sys = build_system(ws("{e}"));
    sys.equations[1] = -MultiPoly::variable(3, 0); // g_star - (g_star + x)
    CHECK_THROWS_AS(series_from_system(sys, 10), std::domain_error);
}

TEST_CASE("eliminate reproduces the published functional equations") {
    BivariatePoly e73 = eliminate(build_system(ws("{11}")));
    CHECK(pseudo_divisible(e73, bp({{4, 1, 1}, {2, 1, 1}, {1, 0, -1}, {0, 1, 1}})));

    BivariatePoly e51 = eliminate(build_system(ws("{1}")));
    CHECK(pseudo_divisible(e51, bp({{2, 1, 1}, {1, 0, -1}, {0, 1, 1}})));

    BivariatePoly e71 = eliminate(build_system(ws("{1,2}")));
    CHECK(pseudo_divisible(e71, bp({{2, 1, 2}, {1, 2, -1}, {1, 0, -1}, {0, 1, 1}})));
}

TEST_CASE("eliminate output annihilates the series for every small pattern") {
    for (int L : {3, 5, 7, 9}) {
        for (const MAryTree& t : enumerate_trees(3, L)) {
            WordSet w = tree_to_wordset(t);
            PatternSystem sys = build_system(w);
            BivariatePoly p = eliminate(sys); // already self-checks to order 30
            PowerSeries s = series_from_system(sys, 30);
            for (const Integer& c : p.evaluate_at_series(s.coeff, 30)) CHECK(c == 0);
        }
    }
}

TEST_CASE("fit_algebraic_equation") {
    PowerSeries catalan = series_from_system(build_system(ws("{1}")), 25);
    auto q = fit_algebraic_equation(catalan, 2, 1);
    REQUIRE(q.has_value());
    CHECK(*q == bp({{2, 1, 1}, {1, 0, -1}, {0, 1, 1}}));
    CHECK(q->to_string() == "x*a^2 - a + x");

    PowerSeries class93 = series_from_system(build_system(ws("{111}")), 30);
    auto q93 = fit_algebraic_equation(class93, 6, 1);
    REQUIRE(q93.has_value());
    CHECK(*q93 == bp({{6, 1, 1}, {4, 1, 1}, {2, 1, 1}, {1, 0, -1}, {0, 1, 1}}));

    // g = x: the only relation at bounds (1,1) is a - x, normalized to -a + x
    std::vector<Integer> xonly(20, Integer(0));
    xonly[1] = 1;
    auto qx = fit_algebraic_equation(PowerSeries(xonly), 1, 1);
    REQUIRE(qx.has_value());
    CHECK(qx->to_string() == "-a + x");

    // loose bounds make the nullspace multidimensional: no unique relation
    CHECK_FALSE(fit_algebraic_equation(catalan, 2, 2).has_value());
    CHECK_FALSE(fit_algebraic_equation(catalan, 3, 1).has_value());
    // too-short series violates the precondition
    CHECK_THROWS_AS(fit_algebraic_equation(testutil::series("0, 1, 0"), 2, 1),
                    std::invalid_argument);
}

TEST_CASE("fit auto-scan finds the minimal equation first") {
    PowerSeries s71 = series_from_system(build_system(ws("{1,2}")), 30);
    auto q = fit_algebraic_equation_auto(s71);
    REQUIRE(q.has_value());
    CHECK(*q == bp({{2, 1, 2}, {1, 2, -1}, {1, 0, -1}, {0, 1, 1}}));
}

TEST_CASE("minimal equation pseudo-divides the eliminant") {
    for (const char* lit : {"{1}", "{1,2}", "{11}", "{1,2,3}", "{1,21}", "{111}"}) {
        PatternSystem sys = build_system(ws(lit));
        BivariatePoly p = eliminate(sys);
        auto q = fit_algebraic_equation_auto(series_from_system(sys, 35));
        REQUIRE(q.has_value());
        CHECK(pseudo_divisible(p, *q));
    }
}

TEST_CASE("reference recurrences") {
    CHECK(reference_sequence("t51-catalan", 9) == testutil::series("0, 1, 0, 1, 0, 2, 0, 5, 0, 14"));
    CHECK(reference_sequence("t71-schroeder", 11) ==
          testutil::series("0, 1, 0, 1, 0, 3, 0, 11, 0, 45, 0, 197"));
    CHECK(reference_sequence("t73-quadconv", 11) ==
          testutil::series("0, 1, 0, 1, 0, 3, 0, 11, 0, 46, 0, 207"));
    CHECK_THROWS_AS(reference_sequence("bogus", 10), std::invalid_argument);
    CHECK_THROWS_AS(reference_sequence("t51-catalan", 1), std::invalid_argument);
}

TEST_CASE("recurrences agree with the equation systems through 25 terms") {
    CHECK(reference_sequence("t51-catalan", 25) == series_from_system(build_system(ws("{1}")), 25));
    CHECK(reference_sequence("t71-schroeder", 25) ==
          series_from_system(build_system(ws("{1,2}")), 25));
    CHECK(reference_sequence("t73-quadconv", 25) ==
          series_from_system(build_system(ws("{11}")), 25));
}

TEST_CASE("the generalized product rule covers binary trees") {
    // m=2: avoiding {1} leaves only right combs, so av(n) = 1 for n >= 1
    PowerSeries s = series_from_system(build_system(ws("{1}", 2)), 10);
    for (int n = 1; n <= 10; ++n) CHECK(s[n] == 1);
    // the binary star: only the single leaf avoids it
    PowerSeries st = series_from_system(build_system(ws("{e}", 2)), 6);
    CHECK(st == testutil::series("0, 1, 0, 0, 0, 0, 0"));
}

TEST_CASE("bivariate polynomial normalization and rendering") {
    CHECK(bp({{2, 1, 3}, {1, 2, -3}, {1, 0, -1}, {0, 3, 1}, {0, 1, 1}}).to_string() ==
          "3*x*a^2 - 3*x^2*a - a + x^3 + x");
    // content is removed and the a-coefficient sign rule applies
    CHECK(bp({{2, 1, -2}, {1, 0, 2}, {0, 1, -2}}) == bp({{2, 1, 1}, {1, 0, -1}, {0, 1, 1}}));
    // without an a*x^0 term the graded-lex leading coefficient is positive
    CHECK(bp({{2, 0, -1}, {0, 1, 1}}).to_string() == "a^2 - x");
    CHECK_THROWS_AS(bp({}), std::invalid_argument);
    CHECK_THROWS_AS(bp({{1, 1, 1}, {1, 1, -1}}), std::invalid_argument);
}
