#include "treepat/multipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace treepat {

namespace {

void check_same_space(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars() != b.nvars())
        throw std::logic_error("polynomials from different variable spaces");
}

} // namespace

MultiPoly MultiPoly::constant(int nvars, Integer c) {
    MultiPoly p(nvars);
    if (c != 0) p.terms_.emplace(Monomial(nvars, 0), std::move(c));
    return p;
}

MultiPoly MultiPoly::variable(int nvars, int var) {
    MultiPoly p(nvars);
    Monomial m(nvars, 0);
    m[var] = 1;
    p.terms_.emplace(std::move(m), Integer(1));
    return p;
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Monomial& m = terms_.begin()->first;
    return std::all_of(m.begin(), m.end(), [](unsigned char e) { return e == 0; });
}

const Integer& MultiPoly::constant_value() const {
    static const Integer zero(0);
    if (terms_.empty()) return zero;
    if (!is_constant()) throw std::logic_error("polynomial is not constant");
    return terms_.begin()->second;
}

void MultiPoly::add_term(const Monomial& mono, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(mono, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    check_same_space(*this, o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    check_same_space(*this, o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    check_same_space(a, b);
    MultiPoly r(a.nvars_);
    MultiPoly::Monomial prod;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            prod = ma;
            for (int i = 0; i < a.nvars_; ++i) {
                unsigned sum = static_cast<unsigned>(prod[i]) + mb[i];
                if (sum > 255) throw std::overflow_error("monomial exponent overflow");
                prod[i] = static_cast<unsigned char>(sum);
            }
            r.add_term(prod, ca * cb);
        }
    }
    return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly r = constant(nvars_, 1);
    MultiPoly base = *this;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

int MultiPoly::degree(int var) const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m[var]));
    return d;
}

int MultiPoly::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) {
        int t = 0;
        for (unsigned char e : m) t += e;
        d = std::max(d, t);
    }
    return d;
}

MultiPoly MultiPoly::coeff_of(int var, int k) const {
    MultiPoly r(nvars_);
    for (const auto& [m, c] : terms_) {
        if (m[var] == k) {
            Monomial reduced = m;
            reduced[var] = 0;
            r.terms_.emplace(std::move(reduced), c);
        }
    }
    return r;
}

MultiPoly MultiPoly::derivative(int var) const {
    MultiPoly r(nvars_);
    for (const auto& [m, c] : terms_) {
        if (m[var] == 0) continue;
        Monomial reduced = m;
        reduced[var] -= 1;
        r.add_term(reduced, c * m[var]);
    }
    return r;
}

Integer MultiPoly::int_content() const {
    Integer g = 0;
    for (const auto& [m, c] : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

void MultiPoly::divide_by_int(const Integer& d) {
    if (d == 0) throw std::logic_error("division by zero content");
    for (auto& [m, c] : terms_) {
        Integer q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
        if (r != 0) throw std::logic_error("integer content does not divide");
        c = q;
    }
}

void MultiPoly::normalize_sign() {
    if (terms_.empty()) return;
    if (terms_.rbegin()->second < 0)
        for (auto& [m, c] : terms_) c = -c;
}

std::string MultiPoly::to_string(const std::vector<std::string>& var_names) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // descending lexicographic monomial order
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Integer mag = c < 0 ? Integer(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        std::string vars;
        for (int i = 0; i < nvars_; ++i) {
            if (m[i] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += var_names.at(i);
            if (m[i] > 1) vars += "^" + std::to_string(m[i]);
        }
        if (vars.empty()) {
            out << mag;
        } else {
            if (mag != 1) out << mag << "*";
            out << vars;
        }
    }
    return out.str();
}

MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b) {
    check_same_space(a, b);
    if (b.is_zero()) throw std::logic_error("division by zero polynomial");
    MultiPoly q(a.nvars());
    MultiPoly r = a;
    const auto& ltb = *b.terms().rbegin();
    while (!r.is_zero()) {
        const auto& ltr = *r.terms().rbegin();
        // divide leading terms
        MultiPoly::Monomial mq = ltr.first;
        for (int i = 0; i < a.nvars(); ++i) {
            if (mq[i] < ltb.first[i]) throw std::logic_error("division is not exact");
            mq[i] = static_cast<unsigned char>(mq[i] - ltb.first[i]);
        }
        Integer cq, rem;
        mpz_tdiv_qr(cq.get_mpz_t(), rem.get_mpz_t(), ltr.second.get_mpz_t(),
                    ltb.second.get_mpz_t());
        if (rem != 0) throw std::logic_error("division is not exact");
        MultiPoly t(a.nvars());
        t.add_term(mq, cq);
        q += t;
        r -= t * b;
    }
    return q;
}

MultiPoly pseudo_rem(const MultiPoly& a, const MultiPoly& b, int var) {
    check_same_space(a, b);
    int db = b.degree(var);
    if (db < 1) throw std::logic_error("pseudo_rem requires positive degree divisor");
    MultiPoly r = a;
    MultiPoly lcb = b.leading_coeff(var);
    int da = a.degree(var);
    int e = da - db + 1;
    if (e < 0) e = 0;
    while (!r.is_zero() && r.degree(var) >= db) {
        int dr = r.degree(var);
        MultiPoly lcr = r.leading_coeff(var);
        MultiPoly shift = MultiPoly::variable(a.nvars(), var).pow(dr - db);
        r = lcb * r - lcr * shift * b;
        --e;
    }
    // scale so the total multiplier is lc(b)^(da-db+1)
    for (; e > 0; --e) r = r * lcb;
    return r;
}

// Subresultant PRS resultant (Collins / Brown-Traub recurrences).
MultiPoly resultant(const MultiPoly& a, const MultiPoly& b, int var) {
    check_same_space(a, b);
    const int nv = a.nvars();
    if (a.is_zero() || b.is_zero()) return MultiPoly(nv);
    MultiPoly A = a, B = b;
    int da = A.degree(var), db = B.degree(var);
    bool negate = false;
    if (da < db) {
        std::swap(A, B);
        std::swap(da, db);
        if ((da & 1) && (db & 1)) negate = true;
    }
    if (db == 0) {
        // Res(A, const-in-var) = B^deg(A); for two constants the resultant is 1
        MultiPoly r = da == 0 ? MultiPoly::constant(nv, 1) : B.pow(static_cast<unsigned>(da));
        return negate ? -r : r;
    }

    // strip integer contents (cheap) and compensate at the end
    Integer ca = A.int_content(), cb = B.int_content();
    A.divide_by_int(ca);
    B.divide_by_int(cb);
    Integer tz(1);
    for (int i = 0; i < db; ++i) tz *= ca;
    for (int i = 0; i < da; ++i) tz *= cb;

    int sign = negate ? -1 : 1;
    MultiPoly g = MultiPoly::constant(nv, 1);
    MultiPoly h = MultiPoly::constant(nv, 1);
    for (;;) {
        int dA = A.degree(var), dB = B.degree(var);
        int delta = dA - dB;
        if ((dA & 1) && (dB & 1)) sign = -sign;
        MultiPoly R = pseudo_rem(A, B, var);
        A = B;
        // B <- R / (g * h^delta), exact by subresultant theory
        MultiPoly denom = g;
        for (int i = 0; i < delta; ++i) denom = denom * h;
        B = R.is_zero() ? R : exact_div(R, denom);
        g = A.leading_coeff(var);
        // h <- g^delta / h^(delta-1)
        if (delta > 0) {
            MultiPoly num = g.pow(static_cast<unsigned>(delta));
            h = delta == 1 ? num : exact_div(num, h.pow(static_cast<unsigned>(delta - 1)));
        }
        if (B.is_zero()) return MultiPoly(nv); // common factor of positive degree
        if (B.degree(var) == 0) {
            // res = s * t * lc(B)^(deg A) / h^(deg A - 1)
            int dAfin = A.degree(var);
            MultiPoly num = B.pow(static_cast<unsigned>(dAfin));
            MultiPoly res =
                dAfin <= 1 ? num : exact_div(num, h.pow(static_cast<unsigned>(dAfin - 1)));
            res = res * MultiPoly::constant(nv, tz);
            if (sign < 0) res = -res;
            return res;
        }
    }
}

namespace {

// content of p viewed as a polynomial in `var` (gcd of its coefficients)
MultiPoly content_in(const MultiPoly& p, int var) {
    MultiPoly c(p.nvars());
    for (int k = 0; k <= p.degree(var); ++k) {
        MultiPoly coeff = p.coeff_of(var, k);
        if (coeff.is_zero()) continue;
        c = poly_gcd(c, coeff);
        if (c.is_constant() && c.constant_value() == 1) break;
    }
    return c;
}

int top_var(const MultiPoly& p) {
    for (int v = p.nvars() - 1; v >= 0; --v)
        if (p.degree(v) > 0) return v;
    return -1;
}

} // namespace

MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b) {
    check_same_space(a, b);
    const int nv = a.nvars();
    if (a.is_zero()) {
        MultiPoly r = b;
        r.normalize_sign();
        return r;
    }
    if (b.is_zero()) {
        MultiPoly r = a;
        r.normalize_sign();
        return r;
    }
    if (a.is_constant() || b.is_constant()) {
        Integer g;
        mpz_gcd(g.get_mpz_t(), a.int_content().get_mpz_t(), b.int_content().get_mpz_t());
        return MultiPoly::constant(nv, g);
    }
    int v = std::max(top_var(a), top_var(b));
    if (a.degree(v) == 0) return poly_gcd(a, content_in(b, v));
    if (b.degree(v) == 0) return poly_gcd(content_in(a, v), b);

    MultiPoly ca = content_in(a, v), cb = content_in(b, v);
    MultiPoly P = exact_div(a, ca), Q = exact_div(b, cb);
    MultiPoly c = poly_gcd(ca, cb);
    if (P.degree(v) < Q.degree(v)) std::swap(P, Q);
    // primitive PRS
    for (;;) {
        MultiPoly R = pseudo_rem(P, Q, v);
        if (R.is_zero()) break;
        MultiPoly cr = content_in(R, v);
        P = Q;
        Q = exact_div(R, cr);
        if (Q.degree(v) == 0) {
            Q = MultiPoly::constant(nv, 1);
            break;
        }
    }
    MultiPoly g = c * Q;
    g.normalize_sign();
    return g;
}

MultiPoly squarefree_part(MultiPoly p) {
    if (p.is_zero()) return p;
    Integer ic = p.int_content();
    p.divide_by_int(ic);
    if (p.is_constant()) return MultiPoly::constant(p.nvars(), 1);
    // split off the content in the top variable; every factor of the primitive
    // part depends on that variable, so dividing by gcd(q, dq/dz) leaves each
    // of them exactly once
    int z = top_var(p);
    MultiPoly c = content_in(p, z);
    MultiPoly q = exact_div(p, c);
    MultiPoly g = poly_gcd(q, q.derivative(z));
    if (!g.is_constant()) q = exact_div(q, g);
    MultiPoly result = squarefree_part(c) * q;
    Integer ic2 = result.int_content();
    if (ic2 > 1) result.divide_by_int(ic2);
    result.normalize_sign();
    return result;
}

} // namespace treepat
