#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "treepat/tree.hpp"

namespace treepat {

/// Word notation for a strict m-ary tree: the prefix-free set of child-index
/// paths (words over '1'..'m') from the root to each m-leaf parent.  The
/// single-leaf tree is {} and the m-leaf star is {e} (the empty word).
/// Words are kept sorted lexicographically.
class WordSet {
public:
    /// Validates: arity in range, letters in '1'..arity, no duplicates,
    /// prefix-free.  Throws std::invalid_argument on violation.
    WordSet(int arity, std::vector<std::string> words);

    int arity() const { return arity_; }
    const std::vector<std::string>& words() const { return words_; }
    bool empty() const { return words_.empty(); }

    /// Canonical literal, e.g. "{21,23,321}", "{e}", "{}".
    std::string to_literal() const;

    friend bool operator==(const WordSet&, const WordSet&) = default;

private:
    int arity_;
    std::vector<std::string> words_;
};

/// Literal grammar: wordset := "{" [item ("," item)*] "}", item := "e" | digit+,
/// digits in 1..arity, optional whitespace around items.
WordSet parse_word_set(std::string_view text, int arity);

WordSet tree_to_wordset(const MAryTree& t);
MAryTree wordset_to_tree(const WordSet& w);

/// Containment on word notation: true iff some prefix p exists such that for
/// every pattern word L there is a host word with prefix p.L.  Agrees with
/// contains() on the decoded trees.
bool word_contains(const WordSet& host, const WordSet& pattern);

/// Reads the same words over a larger alphabet.  Requires new_arity >= arity.
WordSet lift_arity(const WordSet& w, int new_arity);

/// Word-notation counterpart of tree reflection (letter i becomes m+1-i).
WordSet reflect(const WordSet& w);

} // namespace treepat
