#include "treepat/wordset.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <unordered_set>

#include "treepat/errors.hpp"

namespace treepat {

namespace {

bool is_prefix(const std::string& a, const std::string& b) {
    return a.size() <= b.size() && std::equal(a.begin(), a.end(), b.begin());
}

} // namespace

WordSet::WordSet(int arity, std::vector<std::string> words)
    : arity_(arity), words_(std::move(words)) {
    if (arity_ < kMinArity || arity_ > kMaxArity)
        throw std::invalid_argument("arity must be between 2 and 9");
    for (const std::string& w : words_)
        for (char c : w)
            if (c < '1' || c > '0' + arity_)
                throw std::invalid_argument("word '" + w + "' has a letter outside 1.." +
                                            std::to_string(arity_));
    std::sort(words_.begin(), words_.end());
    for (std::size_t i = 1; i < words_.size(); ++i) {
        if (words_[i - 1] == words_[i])
            throw std::invalid_argument("duplicate word '" + words_[i] + "'");
        if (is_prefix(words_[i - 1], words_[i]))
            throw std::invalid_argument("word '" + words_[i - 1] + "' is a prefix of '" +
                                        words_[i] + "'");
    }
}

std::string WordSet::to_literal() const {
    std::string out = "{";
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if (i) out.push_back(',');
        out += words_[i].empty() ? "e" : words_[i];
    }
    out.push_back('}');
    return out;
}

WordSet parse_word_set(std::string_view text, int arity) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    if (pos >= text.size() || text[pos] != '{')
        throw parse_error("word set literal must start with '{'", pos);
    ++pos;
    std::vector<std::string> words;
    std::vector<std::size_t> starts;
    skip_ws();
    if (pos < text.size() && text[pos] == '}') {
        ++pos;
    } else {
        for (;;) {
            skip_ws();
            std::size_t start = pos;
            std::string word;
            if (pos < text.size() && text[pos] == 'e') {
                ++pos;
            } else {
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                    char c = text[pos];
                    if (c < '1' || c > '0' + arity)
                        throw parse_error(std::string("digit '") + c + "' is outside 1.." +
                                              std::to_string(arity),
                                          pos);
                    word.push_back(c);
                    ++pos;
                }
                if (word.empty())
                    throw parse_error("expected a word (digits 1.." + std::to_string(arity) +
                                          " or 'e')",
                                      pos);
            }
            words.push_back(word);
            starts.push_back(start);
            skip_ws();
            if (pos < text.size() && text[pos] == ',') {
                ++pos;
                continue;
            }
            if (pos < text.size() && text[pos] == '}') {
                ++pos;
                break;
            }
            throw parse_error("expected ',' or '}' in word set literal", pos);
        }
    }
    skip_ws();
    if (pos != text.size())
        throw parse_error("trailing characters after word set literal", pos);

    // duplicate / prefix validation with byte offsets
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = 0; j < words.size(); ++j) {
            if (i == j) continue;
            if (words[i] == words[j] && i < j)
                throw parse_error("duplicate word '" + (words[j].empty() ? "e" : words[j]) + "'",
                                  starts[j]);
            if (words[i].size() < words[j].size() && is_prefix(words[i], words[j]))
                throw parse_error("word '" + (words[i].empty() ? "e" : words[i]) +
                                      "' is a prefix of '" + words[j] + "'",
                                  starts[j]);
        }
    return WordSet(arity, std::move(words));
}

WordSet tree_to_wordset(const MAryTree& t) {
    const int m = t.arity();
    std::vector<std::string> words;
    std::string path;
    auto rec = [&](auto&& self, std::size_t v) -> void {
        if (t.is_leaf(v)) return;
        bool all_leaves = true;
        std::size_t c = v + 1;
        for (int i = 0; i < m; ++i) {
            if (!t.is_leaf(c)) all_leaves = false;
            c = t.subtree_end(c);
        }
        if (all_leaves) {
            words.push_back(path);
            return;
        }
        c = v + 1;
        for (int i = 1; i <= m; ++i) {
            path.push_back(static_cast<char>('0' + i));
            self(self, c);
            path.pop_back();
            c = t.subtree_end(c);
        }
    };
    rec(rec, 0);
    return WordSet(m, std::move(words));
}

MAryTree wordset_to_tree(const WordSet& w) {
    const int m = w.arity();
    // Internal vertices are exactly the prefixes of the words.
    std::unordered_set<std::string> closure;
    for (const std::string& word : w.words())
        for (std::size_t len = 0; len <= word.size(); ++len)
            closure.insert(word.substr(0, len));
    if (w.words().empty()) return MAryTree(m); // single leaf
    std::vector<std::uint8_t> shape;
    std::string path;
    auto rec = [&](auto&& self) -> void {
        if (!closure.count(path)) {
            shape.push_back(0);
            return;
        }
        shape.push_back(1);
        for (int i = 1; i <= m; ++i) {
            path.push_back(static_cast<char>('0' + i));
            self(self);
            path.pop_back();
        }
    };
    rec(rec);
    return MAryTree(m, std::move(shape));
}

bool word_contains(const WordSet& host, const WordSet& pattern) {
    if (host.arity() != pattern.arity())
        throw std::invalid_argument("containment requires equal arities");
    if (pattern.words().empty()) return true; // single-vertex pattern
    const auto& hw = host.words();
    // candidate anchors: every prefix of a host word (including full words)
    std::unordered_set<std::string> anchors;
    for (const std::string& word : hw)
        for (std::size_t len = 0; len <= word.size(); ++len)
            anchors.insert(word.substr(0, len));
    auto has_word_with_prefix = [&](const std::string& p) {
        auto it = std::lower_bound(hw.begin(), hw.end(), p);
        return it != hw.end() && is_prefix(p, *it);
    };
    for (const std::string& anchor : anchors) {
        bool ok = true;
        for (const std::string& l : pattern.words()) {
            if (!has_word_with_prefix(anchor + l)) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

WordSet lift_arity(const WordSet& w, int new_arity) {
    if (new_arity < w.arity())
        throw std::invalid_argument("lift_arity requires a larger or equal arity");
    return WordSet(new_arity, w.words());
}

WordSet reflect(const WordSet& w) {
    const int m = w.arity();
    std::vector<std::string> out;
    out.reserve(w.words().size());
    for (std::string word : w.words()) {
        for (char& c : word) c = static_cast<char>('0' + (m + 1 - (c - '0')));
        out.push_back(std::move(word));
    }
    return WordSet(m, std::move(out));
}

} // namespace treepat
