#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "treepat/tree.hpp"
#include "treepat/wordset.hpp"

namespace treepat {

/// Permutation of the letters {1..m}, stored as the image list b(1),...,b(m).
struct LetterPermutation {
    std::vector<int> image;

    explicit LetterPermutation(std::vector<int> img);
    int size() const { return static_cast<int>(image.size()); }
    int apply(int letter) const { return image[letter - 1]; }
};

/// Literal "2,1,3" (comma-separated image list).
LetterPermutation parse_permutation(std::string_view text);

/// Letterwise relabeling of a word set; bijection between avoiders of a
/// single-word pattern {L} and of its image {b(L)}.
WordSet relabel(const WordSet& w, const LetterPermutation& b);

/// One of the named ternary relabel bijections.
struct RelabelBijection {
    std::string name;
    WordSet source;
    WordSet target;
    LetterPermutation perm;
};

/// The five relabel bijections between ternary patterns with 5 or 7 leaves:
/// t51-t52, t73-t77 (swap 1,2), t71-t72, t74-t75 (swap 2,3), t75-t76
/// (1->2->3->1).
std::vector<RelabelBijection> paper_relabel_bijections();
RelabelBijection named_relabel(const std::string& name);

/// Word-cutting bijection from {1,2}-avoiders onto {12}-avoiders (ternary):
/// each word is split at the first run of 1s that is followed by a 2,
/// iterating until no word contains "12"; redundant prefixes are discarded.
/// Throws std::domain_error if the input contains {1,2}.
WordSet cut_forward(const WordSet& w);

/// Inverse of cut_forward: sweeps vertex depths from the root, reinserting a
/// 1 in front of the 2-branch of every {1,2} occurrence, then discards
/// redundant prefixes.  Throws std::domain_error if the input contains {12}.
WordSet cut_inverse(const WordSet& w);

/// Binary tree in which vertices have an optional left child, an optional
/// right child, and a solid/dashed color on each right edge.  Not strict:
/// a vertex may have 0, 1 or 2 children.  Nodes are stored in preorder; the
/// default-constructed tree is empty.
class ColoredBinaryTree {
public:
    struct Node {
        std::int32_t left = -1;
        std::int32_t right = -1;
        bool dashed = false;

        friend bool operator==(const Node&, const Node&) = default;
    };

    ColoredBinaryTree() = default;

    static ColoredBinaryTree vertex();
    /// Root with the given subtrees; right_dashed applies when right exists.
    static ColoredBinaryTree make(const std::optional<ColoredBinaryTree>& left,
                                  const std::optional<ColoredBinaryTree>& right,
                                  bool right_dashed);

    bool empty() const { return nodes_.empty(); }
    std::size_t vertex_count() const { return nodes_.size(); }
    const std::vector<Node>& nodes() const { return nodes_; }

    friend bool operator==(const ColoredBinaryTree&, const ColoredBinaryTree&) = default;

private:
    std::vector<Node> nodes_;
};

/// Literal: node := "(" left right ")", left := "." | node,
/// right := "." | "s:" node | "d:" node; "." alone is the empty tree.
/// Whitespace is insignificant.
ColoredBinaryTree parse_colored_tree(std::string_view text);
std::string to_colored_literal(const ColoredBinaryTree& t);

/// All colored binary trees with the given vertex count (Little Schroeder
/// many), deterministic order.
std::vector<ColoredBinaryTree> enumerate_colored_trees(int vertices);

/// Maps a colored binary tree to a ternary tree avoiding {1,3}: left child
/// becomes the center child, a solid right child the left child, a dashed
/// right child the right child, and every image vertex is padded to three
/// children with leaves.  An n-vertex tree yields 2n+1 leaves.
MAryTree schroder_to_ternary(const ColoredBinaryTree& b);

/// Inverse of schroder_to_ternary; throws std::domain_error if the ternary
/// tree contains {1,3} (some vertex would need two right children).
ColoredBinaryTree ternary_to_schroder(const MAryTree& t);

} // namespace treepat
