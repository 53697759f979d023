#include "treepat/bijections.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

#include "treepat/errors.hpp"

namespace treepat {

LetterPermutation::LetterPermutation(std::vector<int> img) : image(std::move(img)) {
    int m = static_cast<int>(image.size());
    if (m < kMinArity || m > kMaxArity)
        throw std::invalid_argument("permutation size must be between 2 and 9");
    std::vector<bool> seen(m, false);
    for (int v : image) {
        if (v < 1 || v > m || seen[v - 1])
            throw std::invalid_argument("image list is not a permutation of 1.." +
                                        std::to_string(m));
        seen[v - 1] = true;
    }
}

LetterPermutation parse_permutation(std::string_view text) {
    std::vector<int> image;
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    for (;;) {
        skip_ws();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw parse_error("expected a digit in permutation literal", pos);
        image.push_back(text[pos] - '0');
        ++pos;
        skip_ws();
        if (pos == text.size()) break;
        if (text[pos] != ',')
            throw parse_error("expected ',' between permutation entries", pos);
        ++pos;
    }
    try {
        return LetterPermutation(std::move(image));
    } catch (const std::invalid_argument& e) {
        throw parse_error(e.what(), 0);
    }
}

WordSet relabel(const WordSet& w, const LetterPermutation& b) {
    if (w.arity() != b.size())
        throw std::invalid_argument("permutation size does not match word set arity");
    std::vector<std::string> out;
    out.reserve(w.words().size());
    for (std::string word : w.words()) {
        for (char& c : word) c = static_cast<char>('0' + b.apply(c - '0'));
        out.push_back(std::move(word));
    }
    return WordSet(w.arity(), std::move(out));
}

std::vector<RelabelBijection> paper_relabel_bijections() {
    auto ws = [](std::vector<std::string> words) { return WordSet(3, std::move(words)); };
    LetterPermutation swap12({2, 1, 3}), swap23({1, 3, 2}), cycle({2, 3, 1});
    return {
        {"t51-t52", ws({"1"}), ws({"2"}), swap12},
        {"t73-t77", ws({"11"}), ws({"22"}), swap12},
        {"t71-t72", ws({"1", "2"}), ws({"1", "3"}), swap23},
        {"t74-t75", ws({"12"}), ws({"13"}), swap23},
        {"t75-t76", ws({"13"}), ws({"21"}), cycle},
    };
}

RelabelBijection named_relabel(const std::string& name) {
    for (RelabelBijection& b : paper_relabel_bijections())
        if (b.name == name) return b;
    throw std::invalid_argument("unknown relabel bijection '" + name +
                                "' (expected t51-t52, t73-t77, t71-t72, t74-t75 or t75-t76)");
}

namespace {

void require_ternary(const WordSet& w, const char* what) {
    if (w.arity() != 3)
        throw std::invalid_argument(std::string(what) + " is defined for ternary trees");
}

void require_avoids(const WordSet& w, const WordSet& pattern, const char* what) {
    auto occ = contains(wordset_to_tree(w), wordset_to_tree(pattern));
    if (occ)
        throw std::domain_error(std::string(what) + " requires a " + pattern.to_literal() +
                                "-avoiding input, but " + w.to_literal() + " contains it at path \"" +
                                occ->path + "\"");
}

// discard words that are proper prefixes of other words (input sorted)
std::vector<std::string> discard_prefixes(std::vector<std::string> words) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (i + 1 < words.size() && words[i].size() < words[i + 1].size() &&
            std::equal(words[i].begin(), words[i].end(), words[i + 1].begin()))
            continue;
        out.push_back(std::move(words[i]));
    }
    return out;
}

} // namespace

WordSet cut_forward(const WordSet& w) {
    require_ternary(w, "cut_forward");
    require_avoids(w, WordSet(3, {"1", "2"}), "cut_forward");

    std::set<std::string> done;
    std::vector<std::string> queue = w.words();
    while (!queue.empty()) {
        std::string word = std::move(queue.back());
        queue.pop_back();
        std::size_t j = word.find("12");
        if (j == std::string::npos) {
            done.insert(std::move(word));
            continue;
        }
        std::size_t i = j;
        while (i > 0 && word[i - 1] == '1') --i; // maximal run of 1s before the 2
        queue.push_back(word.substr(0, j + 1));              // x_1..x_j
        queue.push_back(word.substr(0, i) + word.substr(j + 1)); // run of 1s removed
    }
    std::vector<std::string> words(done.begin(), done.end());
    return WordSet(3, discard_prefixes(std::move(words)));
}

WordSet cut_inverse(const WordSet& w) {
    require_ternary(w, "cut_inverse");
    require_avoids(w, WordSet(3, {"12"}), "cut_inverse");

    std::vector<std::string> words = w.words();
    std::size_t total_letters = 0, max_len = 0;
    for (const std::string& word : words) {
        total_letters += word.size();
        max_len = std::max(max_len, word.size());
    }
    const std::size_t cap = total_letters + words.size() * max_len;

    for (std::size_t d = 0;; ++d) {
        std::size_t longest = 0;
        for (const std::string& word : words) longest = std::max(longest, word.size());
        if (d >= longest) break;
        if (d > cap) throw std::logic_error("cut_inverse exceeded its insertion bound");

        // depth-d vertices having both a 1-branch and a 2-branch, in
        // lexicographic order (independent at a fixed depth)
        std::set<std::string> anchors;
        for (const std::string& word : words)
            if (word.size() > d) anchors.insert(word.substr(0, d));
        for (const std::string& p0 : anchors) {
            bool has1 = false, has2 = false;
            for (const std::string& word : words) {
                if (word.size() <= d || word.compare(0, d, p0) != 0) continue;
                if (word[d] == '1') has1 = true;
                if (word[d] == '2') has2 = true;
            }
            if (!has1 || !has2) continue;
            for (std::string& word : words)
                if (word.size() > d && word.compare(0, d, p0) == 0 && word[d] == '2')
                    word.insert(d, 1, '1');
        }
    }

    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    return WordSet(3, discard_prefixes(std::move(words)));
}

// ---------------------------------------------------------------------------
// Colored binary trees

ColoredBinaryTree ColoredBinaryTree::vertex() {
    ColoredBinaryTree t;
    t.nodes_.push_back(Node{});
    return t;
}

ColoredBinaryTree ColoredBinaryTree::make(const std::optional<ColoredBinaryTree>& left,
                                          const std::optional<ColoredBinaryTree>& right,
                                          bool right_dashed) {
    ColoredBinaryTree t;
    Node root;
    std::size_t offset = 1;
    if (left && !left->empty()) {
        root.left = static_cast<std::int32_t>(offset);
        offset += left->nodes_.size();
    }
    if (right && !right->empty()) {
        root.right = static_cast<std::int32_t>(offset);
        root.dashed = right_dashed;
    }
    t.nodes_.push_back(root);
    auto append = [&t](const ColoredBinaryTree& sub) {
        std::int32_t shift = static_cast<std::int32_t>(t.nodes_.size());
        for (Node n : sub.nodes_) {
            if (n.left >= 0) n.left += shift;
            if (n.right >= 0) n.right += shift;
            t.nodes_.push_back(n);
        }
    };
    if (left && !left->empty()) append(*left);
    if (right && !right->empty()) append(*right);
    return t;
}

ColoredBinaryTree parse_colored_tree(std::string_view text) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto node = [&](auto&& self) -> ColoredBinaryTree {
        skip_ws();
        if (pos >= text.size() || text[pos] != '(')
            throw parse_error("expected '(' opening a colored-tree node", pos);
        ++pos;
        skip_ws();
        std::optional<ColoredBinaryTree> left, right;
        bool dashed = false;
        if (pos < text.size() && text[pos] == '.')
            ++pos;
        else
            left = self(self);
        skip_ws();
        if (pos < text.size() && text[pos] == '.') {
            ++pos;
        } else if (pos < text.size() && (text[pos] == 's' || text[pos] == 'd')) {
            dashed = text[pos] == 'd';
            ++pos;
            if (pos >= text.size() || text[pos] != ':')
                throw parse_error("expected ':' after right-edge color", pos);
            ++pos;
            right = self(self);
        } else {
            throw parse_error("expected '.', 's:' or 'd:' for the right child", pos);
        }
        skip_ws();
        if (pos >= text.size() || text[pos] != ')')
            throw parse_error("expected ')' closing colored-tree node", pos);
        ++pos;
        return ColoredBinaryTree::make(left, right, dashed);
    };
    skip_ws();
    ColoredBinaryTree result;
    if (pos < text.size() && text[pos] == '.') {
        ++pos; // "." alone denotes the empty tree
    } else {
        result = node(node);
    }
    skip_ws();
    if (pos != text.size())
        throw parse_error("trailing characters after colored-tree literal", pos);
    return result;
}

std::string to_colored_literal(const ColoredBinaryTree& t) {
    if (t.empty()) return ".";
    auto rec = [&](auto&& self, std::int32_t i) -> std::string {
        const auto& n = t.nodes()[i];
        std::string left = n.left >= 0 ? self(self, n.left) : ".";
        std::string right = n.right >= 0
                                ? std::string(n.dashed ? "d:" : "s:") + self(self, n.right)
                                : ".";
        return "(" + left + " " + right + ")";
    };
    return rec(rec, 0);
}

std::vector<ColoredBinaryTree> enumerate_colored_trees(int vertices) {
    if (vertices < 0) throw std::invalid_argument("vertex count must be nonnegative");
    if (vertices == 0) return {ColoredBinaryTree()};
    std::vector<ColoredBinaryTree> out;
    for (int nl = 0; nl <= vertices - 1; ++nl) {
        int nr = vertices - 1 - nl;
        auto lefts = enumerate_colored_trees(nl);
        auto rights = enumerate_colored_trees(nr);
        for (const auto& l : lefts) {
            std::optional<ColoredBinaryTree> lopt;
            if (!l.empty()) lopt = l;
            for (const auto& r : rights) {
                if (r.empty()) {
                    out.push_back(ColoredBinaryTree::make(lopt, std::nullopt, false));
                } else {
                    out.push_back(ColoredBinaryTree::make(lopt, r, false));
                    out.push_back(ColoredBinaryTree::make(lopt, r, true));
                }
            }
        }
    }
    return out;
}

MAryTree schroder_to_ternary(const ColoredBinaryTree& b) {
    if (b.empty()) return MAryTree(3);
    auto rec = [&](auto&& self, std::int32_t i) -> MAryTree {
        const auto& n = b.nodes()[i];
        MAryTree leaf(3);
        MAryTree left = (n.right >= 0 && !n.dashed) ? self(self, n.right) : leaf;
        MAryTree center = n.left >= 0 ? self(self, n.left) : leaf;
        MAryTree right = (n.right >= 0 && n.dashed) ? self(self, n.right) : leaf;
        return MAryTree::internal({left, center, right});
    };
    return rec(rec, 0);
}

ColoredBinaryTree ternary_to_schroder(const MAryTree& t) {
    if (t.arity() != 3)
        throw std::invalid_argument("schroder inverse is defined for ternary trees");
    if (t.node_count() == 1) return ColoredBinaryTree();
    auto rec = [&](auto&& self, std::size_t v) -> ColoredBinaryTree {
        std::size_t c1 = t.child(v, 1), c2 = t.child(v, 2), c3 = t.child(v, 3);
        bool li = !t.is_leaf(c1), ci = !t.is_leaf(c2), ri = !t.is_leaf(c3);
        if (li && ri)
            throw std::domain_error(
                "tree contains {1,3}: a vertex would need two right children");
        std::optional<ColoredBinaryTree> left, right;
        bool dashed = false;
        if (ci) left = self(self, c2);
        if (li) {
            right = self(self, c1);
        } else if (ri) {
            right = self(self, c3);
            dashed = true;
        }
        return ColoredBinaryTree::make(left, right, dashed);
    };
    return rec(rec, 0);
}

} // namespace treepat
