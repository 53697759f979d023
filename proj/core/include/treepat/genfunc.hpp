#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "treepat/multipoly.hpp"
#include "treepat/power_series.hpp"
#include "treepat/wordset.hpp"

namespace treepat {

/// Bivariate polynomial P(x, a) with exact integer coefficients, normalized:
/// content 1, and the sign chosen so the coefficient of the monomial a*x^0 is
/// negative when present (the "-a + x" style), otherwise so the graded-lex
/// leading coefficient (a before x) is positive.  Never zero.
class BivariatePoly {
public:
    /// Key = (degree in a, degree in x).
    using TermMap = std::map<std::pair<int, int>, Integer, std::greater<>>;

    /// Builds and normalizes; throws std::invalid_argument if all terms cancel.
    static BivariatePoly from_terms(const std::vector<std::tuple<int, int, Integer>>& terms);

    const TermMap& terms() const { return terms_; }
    int degree_a() const;
    int degree_x() const;

    /// Coefficients (as polynomials in x) by power of a, index 0..degree_a().
    std::vector<std::vector<Integer>> coeffs_by_a() const;

    /// P(x, s(x)) truncated to x^max_order, s given by its coefficient list.
    std::vector<Integer> evaluate_at_series(const std::vector<Integer>& s, int max_order) const;

    /// Terms ordered by decreasing degree in a, then decreasing degree in x,
    /// e.g. "x*a^4 + x*a^2 - a + x".
    std::string to_string() const;

    friend bool operator==(const BivariatePoly&, const BivariatePoly&) = default;

private:
    TermMap terms_;
};

/// Pseudo-remainder of p by q in the variable a over Z[x]; the remainder is
/// empty iff q divides p over the rationals in x.
bool pseudo_divisible(const BivariatePoly& p, const BivariatePoly& q);

/// The polynomial system for the generating functions g_(t;p)(x) of trees
/// avoiding `target` with root pattern p.  Variable 0 of every equation is x;
/// variable 1+i is the generating function of patterns[i].  patterns[0] is
/// always the single vertex and patterns[1] the m-leaf star; discovery order
/// is breadth-first from the star.  equations[i] is g_i - RHS_i, identically
/// zero on the solution.
struct PatternSystem {
    WordSet target;
    std::vector<WordSet> patterns;
    std::map<std::string, int> index; // canonical literal -> pattern position
    std::vector<MultiPoly> equations;

    int var_count() const { return static_cast<int>(patterns.size()) + 1; }
    /// Names for rendering: "x", "g{}", "g{e}", ...
    std::vector<std::string> var_names() const;
};

/// Intersection of two patterns: overlay at a common root (decoded to trees,
/// intersected, re-encoded).
WordSet intersect(const WordSet& s, const WordSet& t);

/// Builds the closed equation system for the avoidance generating function of
/// `target`.  Throws std::domain_error for the single-vertex pattern.
PatternSystem build_system(const WordSet& target);

/// One line per equation: "g{...} = <polynomial in g{...} and x>".
std::string system_to_string(const PatternSystem& sys);

/// Truncated-series fixed point of the system modulo x^(N+1): all variables
/// start at 0 and every right-hand side is re-evaluated (in discovery order)
/// until stable.  Returns the single-vertex variable's series, whose
/// coefficients are the avoidance counts.  Throws std::domain_error if the
/// iteration has not stabilized after N+2 sweeps.
PowerSeries series_from_system(const PatternSystem& sys, int max_leaves);

/// Eliminates all auxiliary variables (reverse discovery order, iterated
/// resultants by the subresultant PRS; primitive and squarefree reduction
/// after each step) down to one equation P(x, a) with P(x, g_t(x)) = 0.
/// The identity is verified internally on 30 series terms.  Throws
/// std::domain_error if a resultant degenerates to zero.
BivariatePoly eliminate(const PatternSystem& sys);

/// Finds integer coefficients c_ij, not all zero, with
/// sum c_ij x^i a^j annihilating the series to its full length, by an exact
/// rational nullspace computation.  Returns the polynomial only if the
/// nullspace is one-dimensional and the relation involves a.  Requires at
/// least (deg_a+1)*(deg_x+1) + 10 series coefficients.
std::optional<BivariatePoly> fit_algebraic_equation(const PowerSeries& series, int deg_a,
                                                    int deg_x);

/// Scans bounds in increasing (deg_a + deg_x, deg_a) order, as far as the
/// series length allows, and returns the first fit.
std::optional<BivariatePoly> fit_algebraic_equation_auto(const PowerSeries& series);

/// Closed-form recurrences used as cross-checks; name is one of
/// "t51-catalan", "t71-schroeder", "t73-quadconv".  Initial conditions
/// av(0)=0, av(1)=1, av(2)=0.
PowerSeries reference_sequence(const std::string& name, int max_leaves);

} // namespace treepat
