#pragma once

#include <map>
#include <string>
#include <vector>

#include "treepat/integer.hpp"

namespace treepat {

/// Sparse multivariate polynomial with exact integer coefficients over a
/// fixed, ordered set of indeterminates.  Monomials are exponent vectors
/// (one byte per variable); the term map is ordered lexicographically with
/// variable 0 most significant.  Zero coefficients are never stored.
class MultiPoly {
public:
    using Monomial = std::basic_string<unsigned char>;

    MultiPoly() : nvars_(0) {}
    explicit MultiPoly(int nvars) : nvars_(nvars) {}

    static MultiPoly constant(int nvars, Integer c);
    static MultiPoly variable(int nvars, int var);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    const Integer& constant_value() const; // requires is_constant and nonzero... zero returns 0
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, Integer>& terms() const { return terms_; }

    void add_term(const Monomial& mono, const Integer& c);

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
    MultiPoly pow(unsigned e) const;

    friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

    /// Degree in one variable; -1 for the zero polynomial.
    int degree(int var) const;
    int total_degree() const;
    bool depends_on(int var) const { return degree(var) > 0; }

    /// Coefficient of var^k, as a polynomial with that variable's exponent
    /// zeroed out.
    MultiPoly coeff_of(int var, int k) const;
    MultiPoly leading_coeff(int var) const { return coeff_of(var, degree(var)); }
    MultiPoly derivative(int var) const;

    /// gcd of all integer coefficients (nonnegative); 0 for the zero poly.
    Integer int_content() const;
    void divide_by_int(const Integer& d);

    /// Flips the sign so the lexicographically leading coefficient is positive.
    void normalize_sign();

    /// Rendering with the given variable names, terms in descending
    /// lexicographic monomial order, e.g. "x^2*a - 3*a + 1".
    std::string to_string(const std::vector<std::string>& var_names) const;

private:
    int nvars_;
    std::map<Monomial, Integer> terms_;
};

/// Quotient of an exact division; throws std::logic_error if b does not
/// divide a.
MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b);

/// Pseudo-remainder of a by b with respect to `var`:
/// lc_var(b)^(deg_a - deg_b + 1) * a  mod  b.   Requires deg_var(b) >= 1.
MultiPoly pseudo_rem(const MultiPoly& a, const MultiPoly& b, int var);

/// Resultant of a and b with respect to `var`, via the subresultant
/// polynomial remainder sequence.  Returns 0 iff a and b share a factor of
/// positive degree in `var`.
MultiPoly resultant(const MultiPoly& a, const MultiPoly& b, int var);

/// Multivariate gcd over Z (primitive PRS), sign-normalized.
MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b);

/// Product of the distinct irreducible factors of p (integer content and
/// multiplicities removed), sign-normalized.
MultiPoly squarefree_part(MultiPoly p);

} // namespace treepat
