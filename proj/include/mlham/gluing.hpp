// Gluing machinery: the 6-cycle attached to a pullable word merges the two
// factor cycles through it, the star reduction discovers which pulls to use,
// and the resulting plan is an adjacency-override table for the nine
// footprint vertices of every chosen pull.

#pragma once

#include "mlham/bitword.hpp"
#include "mlham/factor.hpp"
#include "mlham/tree.hpp"

#include <array>
#include <iosfwd>
#include <unordered_map>
#include <vector>

namespace mlham {

struct GluingCycle {
    BitWord x; // pullable nut
    // Ring order (y, f(y), f^6(y), f^5(y), z, f(z)) where y = <x,0,0> and
    // z = <p(x),0,0>; consecutive ring words differ in one bit cyclically.
    std::array<Triple, 6> ring;
    std::array<BitWord, 6> ring_words;
    // f^0..f^6(y), then z, f(z); shifts run 0,1,1,2,2,3,3,0,1.
    std::array<Triple, 9> footprint;
    std::array<BitWord, 9> footprint_words;
};

// Builds the cycle both from successor iterates and from direct substitution
// into (110u0v0, 110u1v0, 100u1v0, 101u1v0, 101u0v0, 111u0v0) and requires the
// two to agree.
GluingCycle gluing_cycle(const BitWord& x);

struct ReductionStep {
    enum class Kind { Rotate, Pull };
    Kind kind;
    BitWord before; // word before the step was applied
};

struct ReductionTrace {
    BitWord start;
    int center = 0; // vertex id in the labeled tree of start
    std::vector<ReductionStep> steps;
    BitWord final_word;

    int pull_count() const;
    std::vector<BitWord> pulled_words() const; // words before each pull
};

// Rotates/pulls the tree of x until it is the star centered on
// choose_center(x). Every pull drops the sum of vertex distances to the
// center by exactly one.
ReductionTrace reduce_to_star(const BitWord& x);

struct OverrideNeighbor {
    BitWord word;
    Triple triple; // avoids a decode scan when the stream lands here
};

struct OverrideEntry {
    std::array<OverrideNeighbor, 2> nbr; // sorted by word
};

using OverrideMap = std::unordered_map<BitWord, OverrideEntry, BitWordHash>;

struct GluingPlan {
    int n = 0;
    std::vector<BitWord> chosen; // pullable words, ascending
    OverrideMap overrides;       // 9 entries per chosen word
};

// Spanning set of pulls over the plane-tree classes: reduces every class
// representative, keeps each pull whose endpoints' classes are still
// separate (union-find), and derives the override table. Deterministic.
GluingPlan build_gluing_plan(int n);

// Final two-neighbor adjacency for every footprint vertex after toggling the
// three shared edges of each chosen gluing cycle.
OverrideMap build_overrides(int n, const std::vector<BitWord>& chosen);

// Plan cache: "mlham-plan v1 n=<n>" header then one chosen word per line.
void save_plan(const GluingPlan& plan, std::ostream& out);
// Re-validates everything: word syntax, pullability, spanning structure over
// the classes of n, and footprint disjointness.
GluingPlan load_plan(std::istream& in);

} // namespace mlham
