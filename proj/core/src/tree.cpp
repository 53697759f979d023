#include "treepat/tree.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "treepat/errors.hpp"

namespace treepat {

namespace {

void check_arity(int arity) {
    if (arity < kMinArity || arity > kMaxArity)
        throw std::invalid_argument("arity must be between 2 and 9, got " +
                                    std::to_string(arity));
}

// skip[i] = one past the end of the subtree rooted at preorder position i.
// Single right-to-left pass with a stack of completed subtree ends.
std::vector<std::uint32_t> compute_skip(int arity, const std::vector<std::uint8_t>& shape) {
    std::vector<std::uint32_t> skip(shape.size());
    std::vector<std::uint32_t> ends;
    ends.reserve(shape.size());
    for (std::size_t i = shape.size(); i-- > 0;) {
        if (shape[i] == 0) {
            skip[i] = static_cast<std::uint32_t>(i + 1);
        } else {
            std::uint32_t end = 0;
            for (int c = 0; c < arity; ++c) {
                if (ends.empty())
                    throw std::invalid_argument("preorder shape is not a complete strict tree");
                end = ends.back();
                ends.pop_back();
            }
            skip[i] = end;
        }
        ends.push_back(skip[i]);
    }
    if (ends.size() != 1 || ends.back() != shape.size())
        throw std::invalid_argument("preorder shape is not a complete strict tree");
    return skip;
}

// Non-owning nullary callable; the referenced object must outlive the call.
struct FnRef {
    void* obj;
    void (*fn)(void*);
    template <class F>
    explicit FnRef(F& f)
        : obj(&f), fn(+[](void* o) { (*static_cast<F*>(o))(); }) {}
    void operator()() const { fn(obj); }
};

// Emits the preorder shape of every tree with the requested leaf count, in
// canonical order: at each internal vertex the child leaf-count compositions
// (parts >= 1, each = 1 mod (m-1)) run in ascending lexicographic order, and
// for a fixed composition children are generated left to right (the leftmost
// child varies slowest).
class Generator {
public:
    using EmitFn = std::function<void(const std::vector<std::uint8_t>&)>;

    Generator(int arity, EmitFn emit) : m_(arity), emit_(std::move(emit)) {}

    void run(int leaves) {
        if (leaves <= 0) return;
        if (leaves != 1 && (leaves - 1) % (m_ - 1) != 0) return;
        struct Done {
            Generator* g;
            void operator()() { g->emit_(g->buf_); }
        } done{this};
        gen(leaves, FnRef(done));
    }

private:
    void gen(int n, FnRef done) {
        if (n == 1) {
            buf_.push_back(0);
            done();
            buf_.pop_back();
            return;
        }
        if (n < m_) return;
        buf_.push_back(1);
        std::size_t base = comp_.size();
        comp_.resize(base + m_);
        compose(base, 0, n, done);
        comp_.resize(base);
        buf_.pop_back();
    }

    // Choose parts base+i.. of the composition, summing to rest.
    void compose(std::size_t base, int i, int rest, FnRef done) {
        if (i == m_ - 1) {
            comp_[base + i] = rest;
            fill(base, 0, done);
            return;
        }
        int others = m_ - 1 - i;
        for (int k = 1; k + others <= rest; k += m_ - 1) {
            comp_[base + i] = k;
            compose(base, i + 1, rest - k, done);
        }
    }

    void fill(std::size_t base, int i, FnRef done) {
        if (i == m_) {
            done();
            return;
        }
        struct Cont {
            Generator* g;
            std::size_t base;
            int i;
            FnRef done;
            void operator()() { g->fill(base, i + 1, done); }
        } cont{this, base, i, done};
        gen(comp_[base + i], FnRef(cont));
    }

    int m_;
    EmitFn emit_;
    std::vector<std::uint8_t> buf_;
    std::vector<int> comp_;
};

// Does `pat` occur anchored at vertex v of `host`?
bool match_at(const MAryTree& host, std::size_t v, const MAryTree& pat, std::size_t q) {
    if (pat.is_leaf(q)) return true;
    if (host.is_leaf(v)) return false;
    const int m = host.arity();
    std::size_t cv = v + 1, cq = q + 1;
    for (int i = 0; i < m; ++i) {
        if (!match_at(host, cv, pat, cq)) return false;
        cv = host.subtree_end(cv);
        cq = pat.subtree_end(cq);
    }
    return true;
}

} // namespace

MAryTree::MAryTree(int arity) : arity_(arity), leaves_(1), shape_{0}, skip_{1} {
    check_arity(arity);
}

MAryTree::MAryTree(int arity, std::vector<std::uint8_t> preorder_shape)
    : arity_(arity), shape_(std::move(preorder_shape)) {
    check_arity(arity);
    if (shape_.empty())
        throw std::invalid_argument("tree shape must be nonempty");
    skip_ = compute_skip(arity_, shape_);
    leaves_ = static_cast<int>(std::count(shape_.begin(), shape_.end(), 0));
}

MAryTree MAryTree::internal(const std::vector<MAryTree>& children) {
    if (children.empty())
        throw std::invalid_argument("internal node needs children");
    int m = children.front().arity();
    if (static_cast<int>(children.size()) != m)
        throw std::invalid_argument("internal node must have exactly arity children");
    std::vector<std::uint8_t> shape{1};
    for (const MAryTree& c : children) {
        if (c.arity() != m)
            throw std::invalid_argument("child arity mismatch");
        shape.insert(shape.end(), c.shape_.begin(), c.shape_.end());
    }
    return MAryTree(m, std::move(shape));
}

std::size_t MAryTree::child(std::size_t v, int i) const {
    std::size_t c = v + 1;
    for (int k = 1; k < i; ++k) c = skip_[c];
    return c;
}

MAryTree MAryTree::subtree(std::size_t v) const {
    return MAryTree(arity_, std::vector<std::uint8_t>(shape_.begin() + v,
                                                      shape_.begin() + skip_[v]));
}

Integer count_trees(int arity, int internal_vertices) {
    check_arity(arity);
    if (internal_vertices < 0)
        throw std::invalid_argument("internal vertex count must be nonnegative");
    unsigned long k = static_cast<unsigned long>(internal_vertices);
    Integer num = binomial(static_cast<unsigned long>(arity) * k, k);
    Integer den = Integer(arity - 1) * k + 1;
    Integer q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0)
        throw std::logic_error("count_trees: formula did not divide exactly");
    return q;
}

void for_each_tree(int arity, int leaves, const std::function<void(const MAryTree&)>& visit) {
    check_arity(arity);
    if (leaves < 0)
        throw std::invalid_argument("leaf count must be nonnegative");
    Generator gen(arity, [&](const std::vector<std::uint8_t>& shape) {
        visit(MAryTree(arity, shape));
    });
    gen.run(leaves);
}

std::vector<MAryTree> enumerate_trees(int arity, int leaves) {
    std::vector<MAryTree> out;
    for_each_tree(arity, leaves, [&](const MAryTree& t) { out.push_back(t); });
    return out;
}

std::optional<PatternOccurrence> contains(const MAryTree& host, const MAryTree& pattern) {
    if (host.arity() != pattern.arity())
        throw std::invalid_argument("containment requires equal arities");
    const int m = host.arity();
    std::string path;
    auto search = [&](auto&& self, std::size_t v) -> bool {
        if (match_at(host, v, pattern, 0)) return true;
        if (host.is_leaf(v)) return false;
        std::size_t c = v + 1;
        for (int i = 1; i <= m; ++i) {
            path.push_back(static_cast<char>('0' + i));
            if (self(self, c)) return true;
            path.pop_back();
            c = host.subtree_end(c);
        }
        return false;
    };
    if (search(search, 0)) return PatternOccurrence{path};
    return std::nullopt;
}

MAryTree reflect(const MAryTree& t) {
    const int m = t.arity();
    std::vector<std::uint8_t> out;
    out.reserve(t.node_count());
    auto rec = [&](auto&& self, std::size_t v) -> void {
        if (t.is_leaf(v)) {
            out.push_back(0);
            return;
        }
        out.push_back(1);
        for (int i = m; i >= 1; --i) self(self, t.child(v, i));
    };
    rec(rec, 0);
    return MAryTree(m, std::move(out));
}

std::uint64_t avoid_count(const MAryTree& pattern, int leaves) {
    if (leaves < 0)
        throw std::invalid_argument("leaf count must be nonnegative");
    const int m = pattern.arity();
    std::uint64_t count = 0;
    Generator gen(m, [&](const std::vector<std::uint8_t>& shape) {
        MAryTree t(m, shape);
        for (std::size_t v = 0; v < t.node_count(); ++v)
            if (match_at(t, v, pattern, 0)) return;
        ++count;
    });
    gen.run(leaves);
    return count;
}

MAryTree intersect_trees(const MAryTree& s, const MAryTree& t) {
    if (s.arity() != t.arity())
        throw std::invalid_argument("intersection requires equal arities");
    const int m = s.arity();
    std::vector<std::uint8_t> out;
    auto rec = [&](auto&& self, std::size_t va, std::size_t vb) -> void {
        if (s.is_leaf(va)) {
            out.insert(out.end(), t.shape().begin() + vb, t.shape().begin() + t.subtree_end(vb));
            return;
        }
        if (t.is_leaf(vb)) {
            out.insert(out.end(), s.shape().begin() + va, s.shape().begin() + s.subtree_end(va));
            return;
        }
        out.push_back(1);
        std::size_t ca = va + 1, cb = vb + 1;
        for (int i = 0; i < m; ++i) {
            self(self, ca, cb);
            ca = s.subtree_end(ca);
            cb = t.subtree_end(cb);
        }
    };
    rec(rec, 0, 0);
    return MAryTree(m, std::move(out));
}

MAryTree parse_tree_literal(std::string_view text, int arity) {
    check_arity(arity);
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    std::vector<std::uint8_t> shape;
    auto rec = [&](auto&& self) -> void {
        skip_ws();
        if (pos >= text.size())
            throw parse_error("unexpected end of tree literal, expected '.' or '('", pos);
        char c = text[pos];
        if (c == '.') {
            ++pos;
            shape.push_back(0);
            return;
        }
        if (c == '(') {
            ++pos;
            shape.push_back(1);
            for (int i = 0; i < arity; ++i) self(self);
            skip_ws();
            if (pos >= text.size() || text[pos] != ')')
                throw parse_error("expected ')' closing internal node", pos);
            ++pos;
            return;
        }
        throw parse_error(std::string("unexpected character '") + c +
                              "' in tree literal, expected '.' or '('",
                          pos);
    };
    rec(rec);
    skip_ws();
    if (pos != text.size())
        throw parse_error("trailing characters after tree literal", pos);
    return MAryTree(arity, std::move(shape));
}

std::string to_tree_literal(const MAryTree& t) {
    std::string out;
    out.reserve(t.node_count() + t.internal_count());
    auto rec = [&](auto&& self, std::size_t v) -> void {
        if (t.is_leaf(v)) {
            out.push_back('.');
            return;
        }
        out.push_back('(');
        std::size_t c = v + 1;
        for (int i = 0; i < t.arity(); ++i) {
            self(self, c);
            c = t.subtree_end(c);
        }
        out.push_back(')');
    };
    rec(rec, 0);
    return out;
}

} // namespace treepat
