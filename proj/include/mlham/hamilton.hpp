// Streaming Hamilton cycle: factor successor steps with local overrides at
// the gluing footprints. State per stream is one word, one triple and the
// previous word; nothing is materialized.

#pragma once

#include "mlham/bitword.hpp"
#include "mlham/gluing.hpp"

#include <cstdint>

namespace mlham {

// 2 * C(2n+1, n); throws when the count overflows 64 bits.
std::uint64_t cycle_length(int n);

// Fixed start <(10)^n, 0, 0>, i.e. the word (10)^n 0.
BitWord start_vertex(int n);

class HamiltonStream {
public:
    // Starts at start_vertex(n) heading in factor-successor direction (or
    // along the override table if the start itself is a footprint vertex).
    explicit HamiltonStream(const GluingPlan& plan);
    // Resumes mid-cycle; prev must be a cycle neighbor of at.
    HamiltonStream(const GluingPlan& plan, const BitWord& at, const BitWord& prev);

    const BitWord& current() const { return cur_; }
    const Triple& current_triple() const { return cur_t_; }
    std::uint64_t emitted() const { return emitted_; }
    bool closed() const { return closed_; }

    // Moves to the successor; returns false (and stays put) once the walk is
    // back at the start vertex.
    bool advance();

private:
    void step(BitWord& word, Triple& t) const;

    const GluingPlan* plan_;
    int len_;
    BitWord start_;
    BitWord cur_;
    BitWord prev_; // empty before the first step
    Triple cur_t_;
    std::uint64_t emitted_ = 1;
    bool closed_ = false;
};

// Successor of `at` coming from `prev`: the override neighbor != prev at
// footprint vertices, otherwise the factor neighbor != prev. `prev` must be a
// single-bit neighbor of `at` on the middle levels.
BitWord hamilton_successor(const BitWord& prev, const BitWord& at, const GluingPlan& plan);

} // namespace mlham
