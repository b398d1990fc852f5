// The cycle factor on the middle levels.
//
// The factor successor maps <x,0,s> to <r(x),1,s+1> and <x,1,s> to <x,0,s>;
// it changes exactly one bit of the encoded word, so iterating it walks a
// Gray-code cycle. Cycles are in bijection with plane-tree classes of nuts;
// a cycle with nut period t has length 2*t*(2n+1).

#pragma once

#include "mlham/bitword.hpp"
#include "mlham/tree.hpp"

#include <vector>

namespace mlham {

Triple factor_next(const Triple& v);
Triple factor_prev(const Triple& v);

// In-place variants used on the streaming path: word and triple are kept in
// sync, the single changed bit is flipped directly (no decode). Returns the
// 0-based index of the flipped bit.
int factor_next_inplace(BitWord& word, Triple& t);
int factor_prev_inplace(BitWord& word, Triple& t);

// Iterates the successor from start until it returns there; asserts the
// emitted length against the 2*t*(2n+1) formula. Diagnostic/testing tool, the
// Hamilton stream never materializes cycles.
std::vector<Triple> factor_cycle(const Triple& start);

struct FactorCycle {
    BitWord canonical; // plane-tree class representative (lex-min rotation)
    int period = 0;    // t
    std::uint64_t length = 0;

    Triple representative_start() const { return Triple{canonical, 0, 0}; }
};

// One entry per plane-tree class over D_n, ascending by canonical word.
// enumerate_classes shards D_n by prefix across OpenMP threads;
// enumerate_classes_serial is the single-threaded reference.
std::vector<FactorCycle> enumerate_classes(int n);
std::vector<FactorCycle> enumerate_classes_serial(int n);

} // namespace mlham
