#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "treepat/errors.hpp"
#include "treepat/tree.hpp"
#include "treepat/wordset.hpp"

using namespace treepat;
using testutil::Rng;

namespace {

MAryTree ws(const char* literal, int arity = 3) {
    return wordset_to_tree(parse_word_set(literal, arity));
}

} // namespace

TEST_CASE("count_trees matches formula and enumeration oracle") {
    CHECK(count_trees(3, 0) == 1);
    CHECK(count_trees(3, 2) == 3);
    CHECK(count_trees(3, 4) == 55); // 9-leaf ternary trees, cross-checked below
    CHECK(count_trees(2, 4) == 14); // Catalan
    CHECK(count_trees(4, 3) == 22);

    for (int m = 2; m <= 4; ++m)
        for (int k = 0; k <= 6; ++k) {
            int n = (m - 1) * k + 1;
            CHECK(count_trees(m, k) == testutil::naive_tree_count(m, n));
        }

    CHECK_THROWS_AS(count_trees(1, 3), std::invalid_argument);
    CHECK_THROWS_AS(count_trees(3, -1), std::invalid_argument);
}

TEST_CASE("enumerate_trees basics") {
    CHECK(enumerate_trees(3, 0).empty());
    auto one = enumerate_trees(3, 1);
    REQUIRE(one.size() == 1);
    CHECK(one[0] == MAryTree(3));
    CHECK(enumerate_trees(3, 2).empty()); // no trees with 2 leaves
    CHECK(enumerate_trees(3, 4).empty());
    CHECK(enumerate_trees(3, 5).size() == 3);
    CHECK(enumerate_trees(3, 7).size() == 12);
    CHECK(enumerate_trees(3, 9).size() == 55);
}

TEST_CASE("enumerate_trees count equals count_trees for m <= 4, n <= 17") {
    for (int m = 2; m <= 4; ++m) {
        for (int n = 0; n <= 17; ++n) {
            long long seen = 0;
            for_each_tree(m, n, [&](const MAryTree& t) {
                ++seen;
                CHECK(t.leaf_count() == n);
            });
            if (n >= 1 && (n - 1) % (m - 1) == 0)
                CHECK(Integer(static_cast<unsigned long>(seen)) ==
                      count_trees(m, (n - 1) / (m - 1)));
            else
                CHECK(seen == 0);
        }
    }
}

TEST_CASE("enumerate_trees output has no duplicates") {
    for (int n : {5, 7, 9, 11}) {
        std::set<std::string> seen;
        for (const MAryTree& t : enumerate_trees(3, n))
            CHECK(seen.insert(tree_to_wordset(t).to_literal()).second);
    }
}

TEST_CASE("containment examples") {
    MAryTree host = ws("{21,23,321}");
    auto occ = contains(host, ws("{1,3}"));
    REQUIRE(occ.has_value());
    CHECK(occ->path == "2"); // occurs beginning at the center child
    CHECK_FALSE(contains(host, ws("{1,2}")).has_value());

    // the single-vertex pattern occurs at the root of any tree
    auto root = contains(host, MAryTree(3));
    REQUIRE(root.has_value());
    CHECK(root->path == "");
    CHECK(contains(MAryTree(3), MAryTree(3))->path == "");

    CHECK_THROWS_AS(contains(host, MAryTree(2)), std::invalid_argument);
}

TEST_CASE("containment is preorder-first") {
    // the star occurs at every internal vertex (pattern leaves may map to
    // internal vertices); the root wins in preorder
    auto star = contains(ws("{21,23,321}"), ws("{e}"));
    REQUIRE(star.has_value());
    CHECK(star->path == "");

    // {1} occurs at "2" (via 21) and at "32" (via 321); "2" comes first
    auto occ = contains(ws("{21,23,321}"), ws("{1}"));
    REQUIRE(occ.has_value());
    CHECK(occ->path == "2");
}

TEST_CASE("reflect") {
    CHECK(reflect(MAryTree(3)) == MAryTree(3));
    CHECK(tree_to_wordset(reflect(ws("{1}"))).to_literal() == "{3}");
    CHECK(tree_to_wordset(reflect(ws("{1,2}"))).to_literal() == "{2,3}");

    // involution, leaf preservation (random trees)
    Rng rng(42);
    for (int i = 0; i < 50; ++i) {
        int m = rng.uniform(2, 4);
        int n = 1 + (m - 1) * rng.uniform(0, 5);
        MAryTree t = testutil::random_tree(rng, m, n);
        CHECK(reflect(reflect(t)) == t);
        CHECK(reflect(t).leaf_count() == t.leaf_count());
    }

    // reflection in word notation is the letter map i -> m+1-i
    for (int i = 0; i < 30; ++i) {
        MAryTree t = testutil::random_tree(rng, 3, 1 + 2 * rng.uniform(0, 5));
        WordSet w = tree_to_wordset(t);
        CHECK(tree_to_wordset(reflect(t)) == treepat::reflect(w));
    }
}

TEST_CASE("avoid_count examples") {
    CHECK(avoid_count(ws("{1}"), 7) == 5);
    CHECK(avoid_count(ws("{1,2}"), 9) == 45);
    CHECK(avoid_count(ws("{11}"), 13) == 979);
    CHECK(avoid_count(ws("{1}"), 0) == 0);
    CHECK(avoid_count(ws("{1}"), 6) == 0); // no even-leaf ternary trees
}

TEST_CASE("avoidance is reflection-symmetric") {
    for (int L : {1, 3, 5, 7, 9}) {
        for (const MAryTree& t : enumerate_trees(3, L)) {
            MAryTree r = reflect(t);
            for (int n = 1; n <= 15; n += 2) CHECK(avoid_count(t, n) == avoid_count(r, n));
        }
    }
}

TEST_CASE("containment commutes with reflection") {
    std::vector<MAryTree> patterns;
    for (int L : {1, 3, 5, 7})
        for (const MAryTree& t : enumerate_trees(3, L)) patterns.push_back(t);
    for (int n = 1; n <= 11; n += 2) {
        for_each_tree(3, n, [&](const MAryTree& host) {
            MAryTree rhost = reflect(host);
            for (const MAryTree& p : patterns)
                CHECK(contains(host, p).has_value() == contains(rhost, reflect(p)).has_value());
        });
    }
}

TEST_CASE("intersect_trees") {
    CHECK(intersect_trees(ws("{11}"), MAryTree(3)) == ws("{11}"));
    CHECK(intersect_trees(ws("{1}"), ws("{2}")) == ws("{1,2}"));
    CHECK(intersect_trees(ws("{12}"), ws("{12}")) == ws("{12}"));
    CHECK_THROWS_AS(intersect_trees(MAryTree(2), MAryTree(3)), std::invalid_argument);
}

TEST_CASE("tree literal parse and format") {
    CHECK(to_tree_literal(MAryTree(3)) == ".");
    CHECK(to_tree_literal(ws("{e}")) == "(...)");
    MAryTree t74 = ws("{12}");
    CHECK(parse_tree_literal(to_tree_literal(t74), 3) == t74);
    CHECK(parse_tree_literal("((.(...).)..)", 3) == t74);
    CHECK(parse_tree_literal(" ( . . . ) ", 3) == ws("{e}"));
    CHECK(parse_tree_literal("((..)(..))", 2).leaf_count() == 4);

    CHECK_THROWS_AS(parse_tree_literal("(..)", 3), parse_error);   // arity mismatch
    CHECK_THROWS_AS(parse_tree_literal("(....)", 3), parse_error); // too many children
    CHECK_THROWS_AS(parse_tree_literal("", 3), parse_error);
    CHECK_THROWS_AS(parse_tree_literal("(...)x", 3), parse_error);
}

TEST_CASE("leaf/internal counts satisfy n = (m-1)k + 1") {
    Rng rng(7);
    for (int i = 0; i < 40; ++i) {
        int m = rng.uniform(2, 5);
        int n = 1 + (m - 1) * rng.uniform(0, 6);
        MAryTree t = testutil::random_tree(rng, m, n);
        CHECK(t.leaf_count() == (m - 1) * t.internal_count() + 1);
    }
}
