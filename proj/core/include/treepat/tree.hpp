#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "treepat/integer.hpp"

namespace treepat {

inline constexpr int kMinArity = 2;
inline constexpr int kMaxArity = 9;

/// A strict m-ary plane tree: every vertex has exactly 0 or m ordered
/// children.  Stored as the preorder sequence of vertex kinds (1 = internal,
/// 0 = leaf), which determines the tree uniquely.  Values are immutable after
/// construction.
class MAryTree {
public:
    /// The single-leaf tree.
    explicit MAryTree(int arity);

    /// Builds a tree from its preorder shape; throws std::invalid_argument if
    /// the shape is not a complete strict m-ary tree.
    MAryTree(int arity, std::vector<std::uint8_t> preorder_shape);

    /// Internal root with the given children (children.size() must equal the
    /// common arity).
    static MAryTree internal(const std::vector<MAryTree>& children);

    int arity() const { return arity_; }
    std::size_t node_count() const { return shape_.size(); }
    int leaf_count() const { return leaves_; }
    int internal_count() const { return static_cast<int>(shape_.size()) - leaves_; }

    bool is_leaf(std::size_t v) const { return shape_[v] == 0; }
    /// Position of child i (1-based, i in 1..m) of internal vertex v.
    std::size_t child(std::size_t v, int i) const;
    /// One past the last node of the subtree rooted at v.
    std::size_t subtree_end(std::size_t v) const { return skip_[v]; }
    /// The subtree rooted at v as a standalone tree.
    MAryTree subtree(std::size_t v) const;

    const std::vector<std::uint8_t>& shape() const { return shape_; }

    friend bool operator==(const MAryTree& a, const MAryTree& b) {
        return a.arity_ == b.arity_ && a.shape_ == b.shape_;
    }

private:
    int arity_;
    int leaves_;
    std::vector<std::uint8_t> shape_;
    std::vector<std::uint32_t> skip_;
};

/// Witness for pattern containment: child-index path (digits '1'..'m') from
/// the host root to the vertex where the pattern root is anchored.  The empty
/// path addresses the root.
struct PatternOccurrence {
    std::string path;

    friend bool operator==(const PatternOccurrence&, const PatternOccurrence&) = default;
};

/// Number of strict m-ary trees with k internal vertices:
/// binom(mk, k) / ((m-1)k + 1), exactly.
Integer count_trees(int arity, int internal_vertices);

/// All trees with exactly `leaves` leaves in canonical order (recursive
/// generation; the root's child leaf-count compositions are visited in
/// ascending lexicographic order, children filled left to right).  Empty for
/// leaves == 0 or leaves not congruent to 1 mod (arity-1).
std::vector<MAryTree> enumerate_trees(int arity, int leaves);

/// Streaming variant of enumerate_trees; visits trees in the same order.
void for_each_tree(int arity, int leaves, const std::function<void(const MAryTree&)>& visit);

/// First occurrence of `pattern` in `host` in depth-first preorder, if any.
/// A pattern occurs at vertex v iff the pattern is a single vertex, or v is
/// internal and each child pattern occurs at the corresponding child of v.
std::optional<PatternOccurrence> contains(const MAryTree& host, const MAryTree& pattern);

/// Left-right reflection: child i becomes child m+1-i at every vertex.
MAryTree reflect(const MAryTree& t);

/// Number of `leaves`-leaf trees avoiding `pattern`, by exhaustive search.
std::uint64_t avoid_count(const MAryTree& pattern, int leaves);

/// Pattern intersection: overlay both trees at a common root.  A leaf
/// intersected with anything yields the other tree.
MAryTree intersect_trees(const MAryTree& s, const MAryTree& t);

/// Parenthesized literal: tree := "." | "(" tree{m} ")".  Whitespace is
/// ignored.  Example: the 3-leaf ternary tree is "(...)".
MAryTree parse_tree_literal(std::string_view text, int arity);
std::string to_tree_literal(const MAryTree& t);

} // namespace treepat
