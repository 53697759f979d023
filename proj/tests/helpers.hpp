#pragma once

// Shared test utilities.  The oracles here are deliberately independent of
// the library code paths they are used to check.

#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "treepat/bijections.hpp"
#include "treepat/genfunc.hpp"
#include "treepat/multipoly.hpp"
#include "treepat/power_series.hpp"
#include "treepat/tree.hpp"
#include "treepat/wordset.hpp"

namespace testutil {

using treepat::Integer;
using treepat::MultiPoly;

// Independent count of strict m-ary trees with n leaves: plain recursion over
// child compositions with memoization (no binomials, no generator).
inline Integer naive_tree_count(int m, int n, std::map<int, Integer>& memo) {
    if (n == 1) return 1;
    if (n < m) return 0;
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    // sum over first-child leaf counts of (#first) * (#rest as (m-1)-tuple);
    // recurse on suffix lengths via an inner helper over remaining children
    struct Inner {
        int m;
        std::map<int, Integer>& memo;
        std::map<std::pair<int, int>, Integer> part; // (children left, leaves)
        Integer trees(int n) { return naive_tree_count(m, n, memo); }
        Integer tuples(int children, int leaves) {
            if (children == 1) return trees(leaves);
            auto key = std::make_pair(children, leaves);
            auto it = part.find(key);
            if (it != part.end()) return it->second;
            Integer total = 0;
            for (int k = 1; k + (children - 1) <= leaves; ++k)
                total += trees(k) * tuples(children - 1, leaves - k);
            part.emplace(key, total);
            return total;
        }
    } inner{m, memo, {}};
    Integer total = inner.tuples(m, n);
    memo.emplace(n, total);
    return total;
}

inline Integer naive_tree_count(int m, int n) {
    std::map<int, Integer> memo;
    return naive_tree_count(m, n, memo);
}

// Resultant oracle: determinant of the Sylvester matrix by fraction-free
// Bareiss elimination (needs only ring operations and exact division).
inline MultiPoly sylvester_resultant(const MultiPoly& a, const MultiPoly& b, int var) {
    int da = a.degree(var), db = b.degree(var);
    const int nv = a.nvars();
    if (da < 0 || db < 0) return MultiPoly(nv); // zero polynomial involved
    if (da == 0 && db == 0) return MultiPoly::constant(nv, 1);
    int n = da + db;
    std::vector<std::vector<MultiPoly>> mat(n, std::vector<MultiPoly>(n, MultiPoly(nv)));
    for (int r = 0; r < db; ++r)
        for (int k = 0; k <= da; ++k) mat[r][r + k] = a.coeff_of(var, da - k);
    for (int r = 0; r < da; ++r)
        for (int k = 0; k <= db; ++k) mat[db + r][r + k] = b.coeff_of(var, db - k);

    MultiPoly prev = MultiPoly::constant(nv, 1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (mat[k][k].is_zero()) {
            int swap_row = -1;
            for (int r = k + 1; r < n; ++r)
                if (!mat[r][k].is_zero()) {
                    swap_row = r;
                    break;
                }
            if (swap_row < 0) return MultiPoly(nv); // singular
            std::swap(mat[k], mat[swap_row]);
            sign = -sign;
        }
        for (int r = k + 1; r < n; ++r) {
            for (int c = k + 1; c < n; ++c) {
                MultiPoly num = mat[k][k] * mat[r][c] - mat[r][k] * mat[k][c];
                mat[r][c] = exact_div(num, prev);
            }
            mat[r][k] = MultiPoly(nv);
        }
        prev = mat[k][k];
    }
    MultiPoly det = mat[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

// Avoidance set as canonical word-set literals.
inline std::set<std::string> av_set(const treepat::WordSet& pattern, int leaves) {
    treepat::MAryTree p = treepat::wordset_to_tree(pattern);
    std::set<std::string> out;
    treepat::for_each_tree(pattern.arity(), leaves, [&](const treepat::MAryTree& t) {
        if (!treepat::contains(t, p)) out.insert(treepat::tree_to_wordset(t).to_literal());
    });
    return out;
}

// "0, 1, 0, 2" -> vector<Integer>
inline std::vector<Integer> seq(const std::string& text) {
    std::vector<Integer> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        std::size_t b = item.find_first_not_of(' ');
        std::size_t e = item.find_last_not_of(' ');
        out.emplace_back(item.substr(b, e - b + 1));
    }
    return out;
}

inline treepat::PowerSeries series(const std::string& text) {
    return treepat::PowerSeries(seq(text));
}

// Expected bivariate polynomial from (deg_a, deg_x, coeff) triples.
inline treepat::BivariatePoly bp(std::vector<std::tuple<int, int, Integer>> terms) {
    return treepat::BivariatePoly::from_terms(terms);
}

// Deterministic xorshift for property tests.
struct Rng {
    std::uint64_t s;
    explicit Rng(std::uint64_t seed) : s(seed ? seed : 0x9e3779b97f4a7c15ULL) {}
    std::uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    int uniform(int lo, int hi) { return lo + static_cast<int>(next() % (hi - lo + 1)); }
};

// Random multivariate polynomial with small degrees and coefficients.
inline MultiPoly random_poly(Rng& rng, int nvars, int max_deg, int terms, int max_coeff = 9) {
    MultiPoly p(nvars);
    for (int t = 0; t < terms; ++t) {
        MultiPoly::Monomial m(nvars, 0);
        for (int v = 0; v < nvars; ++v) m[v] = static_cast<unsigned char>(rng.uniform(0, max_deg));
        int c = rng.uniform(-max_coeff, max_coeff);
        p.add_term(m, Integer(c));
    }
    return p;
}

// Random strict m-ary tree with the given leaf count.
inline treepat::MAryTree random_tree(Rng& rng, int m, int leaves) {
    if (leaves == 1) return treepat::MAryTree(m);
    std::vector<treepat::MAryTree> children;
    int rest = leaves;
    for (int i = 0; i < m; ++i) {
        int remaining_children = m - 1 - i;
        if (remaining_children == 0) {
            children.push_back(random_tree(rng, m, rest));
            break;
        }
        // child leaf count: 1 mod (m-1), leaving at least 1 per later child
        int max_k = rest - remaining_children;
        int choices = (max_k - 1) / (m - 1) + 1;
        int k = 1 + (m - 1) * rng.uniform(0, choices - 1);
        children.push_back(random_tree(rng, m, k));
        rest -= k;
    }
    return treepat::MAryTree::internal(children);
}

} // namespace testutil
