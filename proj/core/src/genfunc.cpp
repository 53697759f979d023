#include "treepat/genfunc.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

namespace treepat {

// ---------------------------------------------------------------------------
// BivariatePoly

BivariatePoly BivariatePoly::from_terms(
    const std::vector<std::tuple<int, int, Integer>>& terms) {
    BivariatePoly p;
    for (const auto& [da, dx, c] : terms) {
        if (da < 0 || dx < 0) throw std::invalid_argument("negative degree");
        if (c == 0) continue;
        auto [it, inserted] = p.terms_.emplace(std::make_pair(da, dx), c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) p.terms_.erase(it);
        }
    }
    if (p.terms_.empty())
        throw std::invalid_argument("bivariate polynomial must be nonzero");

    // primitive
    Integer g = 0;
    for (const auto& [m, c] : p.terms_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g > 1)
        for (auto& [m, c] : p.terms_) c /= g;

    // sign: coefficient of a^1 x^0 negative when present; otherwise positive
    // graded-lex (a before x) leading coefficient
    bool flip = false;
    auto it = p.terms_.find({1, 0});
    if (it != p.terms_.end()) {
        flip = it->second > 0;
    } else {
        auto lead = p.terms_.begin();
        for (auto jt = p.terms_.begin(); jt != p.terms_.end(); ++jt) {
            auto total = [](const std::pair<int, int>& k) { return k.first + k.second; };
            if (total(jt->first) > total(lead->first) ||
                (total(jt->first) == total(lead->first) && jt->first.first > lead->first.first))
                lead = jt;
        }
        flip = lead->second < 0;
    }
    if (flip)
        for (auto& [m, c] : p.terms_) c = -c;
    return p;
}

int BivariatePoly::degree_a() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.first);
    return d;
}

int BivariatePoly::degree_x() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.second);
    return d;
}

std::vector<std::vector<Integer>> BivariatePoly::coeffs_by_a() const {
    std::vector<std::vector<Integer>> out(degree_a() + 1);
    for (auto& row : out) row.assign(degree_x() + 1, Integer(0));
    for (const auto& [m, c] : terms_) out[m.first][m.second] = c;
    return out;
}

namespace {

std::vector<Integer> series_mul(const std::vector<Integer>& a, const std::vector<Integer>& b,
                                int max_order) {
    std::vector<Integer> out(max_order + 1, Integer(0));
    for (int i = 0; i < static_cast<int>(a.size()) && i <= max_order; ++i) {
        if (a[i] == 0) continue;
        int jmax = std::min<int>(static_cast<int>(b.size()) - 1, max_order - i);
        for (int j = 0; j <= jmax; ++j) {
            if (b[j] == 0) continue;
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

} // namespace

std::vector<Integer> BivariatePoly::evaluate_at_series(const std::vector<Integer>& s,
                                                       int max_order) const {
    std::vector<std::vector<Integer>> pow_a;
    pow_a.push_back(std::vector<Integer>{Integer(1)}); // s^0
    for (int j = 1; j <= degree_a(); ++j) pow_a.push_back(series_mul(pow_a.back(), s, max_order));
    std::vector<Integer> out(max_order + 1, Integer(0));
    for (const auto& [m, c] : terms_) {
        const auto& sj = pow_a[m.first];
        for (int k = 0; k + m.second <= max_order && k < static_cast<int>(sj.size()); ++k)
            if (sj[k] != 0) out[k + m.second] += c * sj[k];
    }
    return out;
}

std::string BivariatePoly::to_string() const {
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) { // descending (deg_a, deg_x)
        Integer mag = c < 0 ? Integer(-c) : c;
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        std::string vars;
        if (m.second > 0) {
            vars += "x";
            if (m.second > 1) vars += "^" + std::to_string(m.second);
        }
        if (m.first > 0) {
            if (!vars.empty()) vars += "*";
            vars += "a";
            if (m.first > 1) vars += "^" + std::to_string(m.first);
        }
        if (vars.empty())
            out += mag.get_str();
        else {
            if (mag != 1) out += mag.get_str() + "*";
            out += vars;
        }
    }
    return out;
}

namespace {

MultiPoly bivariate_to_multi(const BivariatePoly& p) {
    MultiPoly out(2); // var 0 = x, var 1 = a
    for (const auto& [m, c] : p.terms()) {
        MultiPoly::Monomial mono(2, 0);
        mono[0] = static_cast<unsigned char>(m.second);
        mono[1] = static_cast<unsigned char>(m.first);
        out.add_term(mono, c);
    }
    return out;
}

} // namespace

bool pseudo_divisible(const BivariatePoly& p, const BivariatePoly& q) {
    if (q.degree_a() < 1)
        throw std::invalid_argument("pseudo-division requires a divisor involving a");
    MultiPoly pm = bivariate_to_multi(p), qm = bivariate_to_multi(q);
    return pseudo_rem(pm, qm, 1).is_zero();
}

// ---------------------------------------------------------------------------
// Pattern system

std::vector<std::string> PatternSystem::var_names() const {
    std::vector<std::string> names{"x"};
    for (const WordSet& p : patterns) names.push_back("g" + p.to_literal());
    return names;
}

WordSet intersect(const WordSet& s, const WordSet& t) {
    if (s.arity() != t.arity())
        throw std::invalid_argument("intersection requires equal arities");
    return tree_to_wordset(intersect_trees(wordset_to_tree(s), wordset_to_tree(t)));
}

PatternSystem build_system(const WordSet& target) {
    const int m = target.arity();
    MAryTree t = wordset_to_tree(target);
    if (t.node_count() == 1)
        throw std::domain_error(
            "the single-vertex pattern is unsupported: every tree contains it");

    PatternSystem sys{target, {}, {}, {}};
    std::vector<MAryTree> trees;
    auto get_id = [&](const MAryTree& p) -> int {
        WordSet w = tree_to_wordset(p);
        std::string key = w.to_literal();
        auto it = sys.index.find(key);
        if (it != sys.index.end()) return it->second;
        int id = static_cast<int>(sys.patterns.size());
        sys.index.emplace(std::move(key), id);
        sys.patterns.push_back(std::move(w));
        trees.push_back(p);
        if (id > 500) throw std::logic_error("pattern system grew unreasonably large");
        return id;
    };

    get_id(MAryTree(m)); // single vertex, id 0
    std::vector<std::uint8_t> star_shape(static_cast<std::size_t>(m) + 1, 0);
    star_shape[0] = 1;
    get_id(MAryTree(m, star_shape)); // star, id 1, first work item

    std::vector<MAryTree> target_children;
    for (int i = 1; i <= m; ++i) target_children.push_back(t.subtree(t.child(0, i)));

    // children ids and intersection ids per processed pattern (index >= 1)
    std::vector<std::pair<std::vector<int>, std::vector<int>>> product_rule;
    for (std::size_t pi = 1; pi < trees.size(); ++pi) {
        const MAryTree p = trees[pi];
        std::vector<int> cid, iid;
        for (int i = 1; i <= m; ++i) cid.push_back(get_id(p.subtree(p.child(0, i))));
        for (int i = 1; i <= m; ++i)
            iid.push_back(get_id(intersect_trees(p.subtree(p.child(0, i)),
                                                 target_children[i - 1])));
        product_rule.emplace_back(std::move(cid), std::move(iid));
    }

    const int nv = sys.var_count();
    auto gvar = [&](int pattern_id) { return MultiPoly::variable(nv, pattern_id + 1); };

    // base equation: g_v - x - g_star = 0
    sys.equations.push_back(gvar(0) - MultiPoly::variable(nv, 0) - gvar(1));
    for (std::size_t pi = 1; pi < sys.patterns.size(); ++pi) {
        const auto& [cid, iid] = product_rule[pi - 1];
        MultiPoly keep = MultiPoly::constant(nv, 1);
        MultiPoly drop = MultiPoly::constant(nv, 1);
        for (int i = 0; i < m; ++i) {
            keep = keep * gvar(cid[i]);
            drop = drop * gvar(iid[i]);
        }
        sys.equations.push_back(gvar(static_cast<int>(pi)) - keep + drop);
    }
    return sys;
}

std::string system_to_string(const PatternSystem& sys) {
    std::vector<std::string> names = sys.var_names();
    std::string out;
    for (std::size_t i = 0; i < sys.patterns.size(); ++i) {
        MultiPoly rhs = MultiPoly::variable(sys.var_count(), static_cast<int>(i) + 1) -
                        sys.equations[i];
        out += names[i + 1] + " = " + rhs.to_string(names) + "\n";
    }
    return out;
}

// ---------------------------------------------------------------------------
// Series extraction

namespace {

// Evaluates p at the given variable series (index 0 is x itself), truncated.
std::vector<Integer> eval_poly_at_series(const MultiPoly& p,
                                         const std::vector<std::vector<Integer>>& vals,
                                         int max_order) {
    // lazily computed powers per variable
    std::vector<std::vector<std::vector<Integer>>> powers(vals.size());
    auto power = [&](int var, int e) -> const std::vector<Integer>& {
        auto& pv = powers[var];
        if (pv.empty()) pv.push_back(std::vector<Integer>{Integer(1)});
        while (static_cast<int>(pv.size()) <= e)
            pv.push_back(series_mul(pv.back(), vals[var], max_order));
        return pv[e];
    };
    std::vector<Integer> out(max_order + 1, Integer(0));
    for (const auto& [mono, c] : p.terms()) {
        std::vector<Integer> term{c};
        for (std::size_t v = 0; v < vals.size(); ++v)
            if (mono[v] > 0) term = series_mul(term, power(static_cast<int>(v), mono[v]), max_order);
        for (int k = 0; k < static_cast<int>(term.size()) && k <= max_order; ++k)
            out[k] += term[k];
    }
    return out;
}

} // namespace

PowerSeries series_from_system(const PatternSystem& sys, int max_leaves) {
    if (max_leaves < 1) throw std::invalid_argument("series order must be at least 1");
    const int N = max_leaves;
    const int K = static_cast<int>(sys.patterns.size());
    const int nv = sys.var_count();

    std::vector<MultiPoly> rhs;
    for (int i = 0; i < K; ++i)
        rhs.push_back(MultiPoly::variable(nv, i + 1) - sys.equations[i]);

    // vals[0] is the series of x itself; vals[1+i] belongs to patterns[i]
    std::vector<std::vector<Integer>> vals(nv);
    for (auto& v : vals) v.assign(N + 1, Integer(0));
    if (N >= 1) vals[0][1] = 1;

    for (int sweep = 0; sweep < N + 2; ++sweep) {
        bool changed = false;
        for (int i = 0; i < K; ++i) {
            std::vector<Integer> nv_series = eval_poly_at_series(rhs[i], vals, N);
            if (nv_series != vals[i + 1]) {
                vals[i + 1] = std::move(nv_series);
                changed = true;
            }
        }
        if (!changed) return PowerSeries(vals[1]);
    }
    throw std::domain_error("series iteration did not stabilize within " +
                            std::to_string(N + 2) + " sweeps (malformed system)");
}

// ---------------------------------------------------------------------------
// Elimination

namespace {

// content of p over Z[x]: gcd of its coefficients when grouped by the
// exponents of all non-x variables
MultiPoly content_over_x(const MultiPoly& p) {
    std::map<MultiPoly::Monomial, MultiPoly> buckets;
    for (const auto& [mono, c] : p.terms()) {
        MultiPoly::Monomial key = mono;
        MultiPoly::Monomial xpart(mono.size(), 0);
        xpart[0] = mono[0];
        key[0] = 0;
        auto [it, inserted] = buckets.emplace(key, MultiPoly(p.nvars()));
        it->second.add_term(xpart, c);
    }
    MultiPoly g(p.nvars());
    for (auto& [key, coeff] : buckets) {
        g = poly_gcd(g, coeff);
        if (g.is_constant() && g.constant_value() == 1) break;
    }
    return g;
}

// safe reductions: integer content, Z[x] content, squarefree part
MultiPoly reduce_equation(MultiPoly p) {
    if (p.is_zero()) return p;
    Integer ic = p.int_content();
    if (ic > 1) p.divide_by_int(ic);
    MultiPoly cx = content_over_x(p);
    if (!(cx.is_constant() && cx.constant_value() == 1)) p = exact_div(p, cx);
    p = squarefree_part(std::move(p));
    return p;
}

} // namespace

BivariatePoly eliminate(const PatternSystem& sys) {
    const int nv = sys.var_count();
    std::vector<std::string> names = sys.var_names();
    std::vector<MultiPoly> eqs = sys.equations;

    // auxiliary variables leave in reverse discovery order; variable 1 is a
    for (int z = nv - 1; z >= 2; --z) {
        std::vector<std::size_t> with;
        for (std::size_t i = 0; i < eqs.size(); ++i)
            if (eqs[i].degree(z) > 0) with.push_back(i);
        if (with.empty()) continue;
        std::size_t pivot = with.front();
        for (std::size_t i : with) {
            int dp = eqs[pivot].degree(z), di = eqs[i].degree(z);
            if (di < dp || (di == dp && eqs[i].term_count() < eqs[pivot].term_count()))
                pivot = i;
        }
        std::vector<MultiPoly> next;
        for (std::size_t i = 0; i < eqs.size(); ++i) {
            if (i == pivot) continue;
            if (eqs[i].degree(z) == 0) {
                next.push_back(eqs[i]);
                continue;
            }
            MultiPoly r = resultant(eqs[i], eqs[pivot], z);
            if (r.is_zero())
                throw std::domain_error("degenerate elimination: zero resultant at " +
                                        names[z]);
            next.push_back(reduce_equation(std::move(r)));
        }
        eqs = std::move(next);
    }

    if (eqs.empty()) throw std::logic_error("elimination consumed every equation");
    MultiPoly p = eqs.front();
    for (std::size_t i = 1; i < eqs.size(); ++i) p = poly_gcd(p, eqs[i]);
    for (int v = 2; v < nv; ++v)
        if (p.depends_on(v))
            throw std::logic_error("elimination left auxiliary variable " + names[v]);

    // strip monomial factors x^k and a^k: both x and g_t are nonzero series
    unsigned char minx = 255, mina = 255;
    for (const auto& [mono, c] : p.terms()) {
        minx = std::min(minx, mono[0]);
        mina = std::min(mina, mono[1]);
    }
    if (minx > 0 || mina > 0) {
        MultiPoly::Monomial shift(nv, 0);
        shift[0] = minx;
        shift[1] = mina;
        MultiPoly div(nv);
        div.add_term(shift, Integer(1));
        p = exact_div(p, div);
    }
    p = reduce_equation(std::move(p));
    if (p.is_zero() || p.is_constant())
        throw std::logic_error("elimination produced no algebraic relation");

    std::vector<std::tuple<int, int, Integer>> terms;
    for (const auto& [mono, c] : p.terms())
        terms.emplace_back(static_cast<int>(mono[1]), static_cast<int>(mono[0]), c);
    BivariatePoly result = BivariatePoly::from_terms(terms);

    // certify: the eliminant annihilates the avoidance series
    const int order = 30;
    PowerSeries s = series_from_system(sys, order);
    std::vector<Integer> ev = result.evaluate_at_series(s.coeff, order);
    for (const Integer& c : ev)
        if (c != 0)
            throw std::logic_error("eliminant failed series annihilation check");
    return result;
}

// ---------------------------------------------------------------------------
// Algebraic fitting

namespace {

using Rational = mpq_class;

// Nullspace of the (rows x cols) matrix over Q; returns basis vectors.
std::vector<std::vector<Rational>> nullspace(std::vector<std::vector<Rational>> mat, int cols) {
    int rows = static_cast<int>(mat.size());
    std::vector<int> pivot_col_of_row;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int sel = -1;
        for (int i = r; i < rows; ++i)
            if (mat[i][c] != 0) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        std::swap(mat[r], mat[sel]);
        Rational inv = mat[r][c];
        for (int j = c; j < cols; ++j) mat[r][j] /= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || mat[i][c] == 0) continue;
            Rational f = mat[i][c];
            for (int j = c; j < cols; ++j) mat[i][j] -= f * mat[r][j];
        }
        pivot_col_of_row.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col_of_row) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[f] = 1;
        for (int i = 0; i < static_cast<int>(pivot_col_of_row.size()); ++i)
            v[pivot_col_of_row[i]] = -mat[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace

std::optional<BivariatePoly> fit_algebraic_equation(const PowerSeries& series, int deg_a,
                                                    int deg_x) {
    if (deg_a < 0 || deg_x < 0) throw std::invalid_argument("degree bounds must be nonnegative");
    const int len = static_cast<int>(series.size());
    const int need = (deg_a + 1) * (deg_x + 1) + 10;
    if (len < need)
        throw std::invalid_argument("series too short: need " + std::to_string(need) +
                                    " coefficients, have " + std::to_string(len));

    // powers of the series
    std::vector<std::vector<Integer>> pow;
    pow.push_back(std::vector<Integer>(len, Integer(0)));
    pow[0][0] = 1;
    for (int j = 1; j <= deg_a; ++j) pow.push_back(series_mul(pow.back(), series.coeff, len - 1));

    const int cols = (deg_a + 1) * (deg_x + 1);
    std::vector<std::vector<Rational>> mat(len, std::vector<Rational>(cols, Rational(0)));
    for (int j = 0; j <= deg_a; ++j)
        for (int i = 0; i <= deg_x; ++i) {
            int col = j * (deg_x + 1) + i;
            for (int n = i; n < len; ++n) mat[n][col] = Rational(pow[j][n - i]);
        }

    auto basis = nullspace(std::move(mat), cols);
    if (basis.size() != 1) return std::nullopt;

    // scale the kernel vector to a primitive integer vector
    const auto& v = basis.front();
    Integer lcm(1);
    for (const Rational& q : v)
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
    std::vector<Integer> iv(cols);
    bool involves_a = false;
    for (int c = 0; c < cols; ++c) {
        Rational scaled = v[c] * Rational(lcm);
        iv[c] = scaled.get_num();
        if (iv[c] != 0 && c >= deg_x + 1) involves_a = true;
    }
    if (!involves_a) return std::nullopt;

    std::vector<std::tuple<int, int, Integer>> terms;
    for (int j = 0; j <= deg_a; ++j)
        for (int i = 0; i <= deg_x; ++i) {
            const Integer& c = iv[j * (deg_x + 1) + i];
            if (c != 0) terms.emplace_back(j, i, c);
        }
    return BivariatePoly::from_terms(terms);
}

std::optional<BivariatePoly> fit_algebraic_equation_auto(const PowerSeries& series) {
    const int len = static_cast<int>(series.size());
    for (int total = 1; total <= len - 11; ++total) {
        for (int da = 1; da <= total; ++da) {
            int dx = total - da;
            if ((da + 1) * (dx + 1) + 10 > len) continue;
            if (auto fit = fit_algebraic_equation(series, da, dx)) return fit;
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Reference recurrences

PowerSeries reference_sequence(const std::string& name, int max_leaves) {
    if (max_leaves < 2) throw std::invalid_argument("need max_leaves >= 2");
    enum class Kind { catalan, schroeder, quadconv };
    Kind kind;
    if (name == "t51-catalan")
        kind = Kind::catalan;
    else if (name == "t71-schroeder")
        kind = Kind::schroeder;
    else if (name == "t73-quadconv")
        kind = Kind::quadconv;
    else
        throw std::invalid_argument("unknown reference sequence '" + name + "'");

    std::vector<Integer> av(max_leaves + 1, Integer(0));
    av[1] = 1;
    for (int n = 3; n <= max_leaves; ++n) {
        Integer pair_sum = 0;
        for (int k = 1; k <= n - 2; ++k) pair_sum += av[k] * av[n - k - 1];
        switch (kind) {
        case Kind::catalan:
            av[n] = pair_sum;
            break;
        case Kind::schroeder:
            av[n] = 2 * pair_sum - av[n - 2];
            break;
        case Kind::quadconv: {
            Integer quad = 0;
            for (int l = 1; l <= n - 4; ++l)
                for (int mm = 1; mm <= n - l - 3; ++mm)
                    for (int k = 1; k <= n - l - mm - 2; ++k)
                        quad += av[l] * av[mm] * av[k] * av[n - l - mm - k - 1];
            av[n] = pair_sum + quad;
            break;
        }
        }
    }
    return PowerSeries(std::move(av));
}

} // namespace treepat
