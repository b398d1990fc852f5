// Ordered rooted trees as the structural view of Dyck words.
//
// tree_from_dyck assigns stable vertex ids in DFS preorder (0 = root), so a
// vertex keeps its id across labeled rotations. Word-level rotation maps
// x = 1u0v to u1v0 (re-root at the first child); pull moves a depth-2
// leftmost leaf up to become the first child of the root.

#pragma once

#include "mlham/bitword.hpp"

#include <vector>

namespace mlham {

struct OrderedTree {
    int root = 0;
    std::vector<std::vector<int>> children; // by vertex id, order significant

    int vertex_count() const { return static_cast<int>(children.size()); }
    int edge_count() const { return vertex_count() - 1; }

    bool operator==(const OrderedTree& o) const {
        return root == o.root && children == o.children;
    }
};

OrderedTree tree_from_dyck(const BitWord& x);
BitWord dyck_from_tree(const OrderedTree& t);

// x = 1u0v -> u1v0
BitWord rotate_word(const BitWord& x);
// u1v0 -> 1u0v; inverse of rotate_word on Dyck words.
BitWord rotate_word_inverse(const BitWord& x);
// Re-roots at the first child, keeping vertex ids.
OrderedTree rotate_labeled(const OrderedTree& t);

// True iff x = 110u0v with u, v Dyck, i.e. the leftmost leaf sits at depth 2.
bool is_pullable(const BitWord& x);
// 110u0v -> 101u0v
BitWord pull(const BitWord& x);
// The parts (u, v) of a pullable word x = 110u0v.
std::pair<BitWord, BitWord> pull_parts(const BitWord& x);

// Plane-tree class of a word: canonical = lexicographic minimum of the
// rotation orbit {r^k(x)}, period = orbit size.
struct RotationOrbit {
    BitWord canonical;
    int period = 0;
    int steps_to_canonical = 0; // least k with r^k(x) = canonical
};
RotationOrbit rotation_orbit(const BitWord& x);

struct ClassId {
    BitWord canonical;

    bool operator==(const ClassId& o) const { return canonical == o.canonical; }
    bool operator<(const ClassId& o) const { return canonical < o.canonical; }
};
ClassId canonical_of(const BitWord& x);
int rotation_period(const BitWord& x);

// Deterministic star center: the vertex of x's labeled tree that becomes the
// root when x is rotated (fewest steps) to its canonical form.
int choose_center(const BitWord& x);

// Helpers on labeled trees.
int leftmost_leaf_depth(const OrderedTree& t);
long long distance_sum(const OrderedTree& t, int from);

} // namespace mlham
