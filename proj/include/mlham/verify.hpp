// Independent checking: streaming verification of a claimed Hamilton cycle,
// a backtracking oracle for toy sizes, and the exhaustive lemma suite that
// re-derives every structural property at small n.

#pragma once

#include "mlham/bitword.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace mlham {

// Pull-style word source; returns nullopt at end of stream.
using WordSource = std::function<std::optional<BitWord>()>;

struct CheckIssue {
    std::string kind;       // "count", "hamming", "weight", "distinct", "closure", "length"
    std::uint64_t position; // 0-based vertex position where it was noticed
    std::string detail;
};

struct CheckReport {
    int n = 0;
    std::uint64_t count = 0;
    std::vector<CheckIssue> issues;

    bool passed() const { return issues.empty(); }
};

// Verifies count 2*C(2n+1,n), single-bit steps, weight alternation between n
// and n+1, distinctness (direct-indexed bitset up to 2^27 words, hash set
// beyond) and wraparound closure.
CheckReport check_stream(int n, const WordSource& source);

// Backtracking Hamilton cycle search over the middle levels; intended for
// n <= 2 (6 and 20 vertices), n = 3 (70 vertices) still completes.
std::vector<BitWord> brute_force_hamilton(int n);

struct LemmaResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Exhaustive suite over D_n; sensible for n <= 6.
std::vector<LemmaResult> check_all_lemmas(int n);

} // namespace mlham
