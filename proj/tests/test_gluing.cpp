#include "mlham/gluing.hpp"

#include <doctest.h>

#include <sstream>
#include <unordered_map>
#include <unordered_set>

using namespace mlham;

namespace {

BitWord bw(const char* s) { return BitWord::parse(s); }

} // namespace

TEST_SUITE("gluing") {

TEST_CASE("gluing cycle of 1100") {
    GluingCycle g = gluing_cycle(bw("1100")); // u = v = empty
    const char* expect[6] = {"11000", "11010", "10010", "10110", "10100", "11100"};
    for (int i = 0; i < 6; ++i) CHECK(g.ring_words[i] == bw(expect[i]));
    const int shifts[9] = {0, 1, 1, 2, 2, 3, 3, 0, 1};
    for (int i = 0; i < 9; ++i) CHECK(g.footprint[i].shift == shifts[i]);
    CHECK_THROWS_AS(gluing_cycle(bw("1010")), std::invalid_argument);
}

TEST_CASE("gluing cycle construction checks itself for every pullable word") {
    // gluing_cycle asserts iterates == substitution, single-bit ring steps and
    // the footprint shift pattern; here we additionally pin the ring ends on
    // their factor cycles.
    for (int n = 2; n <= 6; ++n)
        for_each_dyck(n, [&](const BitWord& x) {
            if (!is_pullable(x)) return;
            GluingCycle g = gluing_cycle(x);
            CHECK(g.ring[0] == Triple{x, 0, 0});
            CHECK(g.ring[4] == Triple{pull(x), 0, 0});
            CHECK(g.ring[1] == factor_next(g.ring[0]));          // (y, f(y)) on C(y)
            CHECK(g.ring[2] == factor_next(g.ring[3]));          // (f^6, f^5) on C(y)
            CHECK(g.ring[5] == factor_next(g.ring[4]));          // (z, f(z)) on C(z)
            for (int i = 0; i < 6; ++i)
                CHECK(hamming_distance(g.ring_words[i], g.ring_words[(i + 1) % 6]) == 1);
        });
}

TEST_CASE("footprints of distinct pullable words are disjoint") {
    for (int n = 2; n <= 5; ++n) {
        std::unordered_map<BitWord, BitWord, BitWordHash> owner;
        for_each_dyck(n, [&](const BitWord& x) {
            if (!is_pullable(x)) return;
            for (const BitWord& w : gluing_cycle(x).footprint_words) {
                auto [it, inserted] = owner.emplace(w, x);
                if (!inserted) FAIL("footprint overlap at ", w.str(), " between ", it->second.str(), " and ", x.str());
            }
        });
    }
}

TEST_CASE("reduction: already a star") {
    ReductionTrace t = reduce_to_star(bw("101010"));
    CHECK(t.pull_count() == 0);
    CHECK(t.steps.empty());
    CHECK(t.final_word == bw("101010"));
}

TEST_CASE("reduction of small paths") {
    // 1100 is the star of n=2 once rooted at the middle (the chosen center),
    // so no pull is needed.
    ReductionTrace t2 = reduce_to_star(bw("1100"));
    CHECK(t2.center == 1);
    CHECK(t2.pull_count() == 0);
    CHECK(canonical_of(t2.final_word) == canonical_of(bw("1010")));

    // depth-3 path: center lands in the middle, one leaf hangs at distance 2
    ReductionTrace t3 = reduce_to_star(bw("111000"));
    CHECK(t3.center == 2);
    CHECK(t3.pull_count() == 1);
    CHECK(is_pullable(t3.pulled_words().front()));
    CHECK(canonical_of(t3.final_word) == canonical_of(bw("101010")));
}

TEST_CASE("reduction terminates with monotone distance drop, exhaustive") {
    for (int n = 1; n <= 6; ++n) {
        BitWord star = BitWord::zeros(2 * n);
        for (int i = 0; i < 2 * n; i += 2) star.set(i, true);
        for_each_dyck(n, [&](const BitWord& x) {
            ReductionTrace trace = reduce_to_star(x); // internal checks enforce monotonicity
            const long long excess = distance_sum(tree_from_dyck(x), trace.center) - n;
            CHECK(trace.pull_count() == excess);
            for (const BitWord& w : trace.pulled_words()) CHECK(is_pullable(w));
            CHECK(canonical_of(trace.final_word).canonical == star);
            // a pull happens exactly when the start is not already the star
            CHECK((trace.pull_count() == 0) == (canonical_of(x).canonical == star));
        });
    }
}

TEST_CASE("plan sizes over small instances") {
    const std::size_t expected[] = {0, 0, 0, 1, 2, 5, 13, 33};
    for (int n = 1; n <= 7; ++n) {
        GluingPlan plan = build_gluing_plan(n);
        CHECK(plan.chosen.size() == expected[n]);
        CHECK(plan.overrides.size() == 9 * plan.chosen.size());
        for (const BitWord& x : plan.chosen) CHECK(is_pullable(x));
    }
}

TEST_CASE("plan construction is deterministic") {
    GluingPlan a = build_gluing_plan(5);
    GluingPlan b = build_gluing_plan(5);
    CHECK(a.chosen == b.chosen);
}

TEST_CASE("override table: n=3 has one gluing with nine entries") {
    GluingPlan plan = build_gluing_plan(3);
    REQUIRE(plan.chosen.size() == 1);
    CHECK(plan.overrides.size() == 9);
    for (const auto& [word, entry] : plan.overrides) {
        CHECK(entry.nbr[0].word != entry.nbr[1].word);
        CHECK(hamming_distance(word, entry.nbr[0].word) == 1);
        CHECK(hamming_distance(word, entry.nbr[1].word) == 1);
        CHECK(entry.nbr[0].word < entry.nbr[1].word);
        CHECK(triple_encode(entry.nbr[0].triple) == entry.nbr[0].word);
        CHECK(triple_encode(entry.nbr[1].triple) == entry.nbr[1].word);
    }
}

TEST_CASE("override adjacency is symmetric") {
    GluingPlan plan = build_gluing_plan(5);
    for (const auto& [word, entry] : plan.overrides)
        for (const OverrideNeighbor& nb : entry.nbr) {
            auto it = plan.overrides.find(nb.word);
            if (it != plan.overrides.end()) {
                CHECK((it->second.nbr[0].word == word || it->second.nbr[1].word == word));
            } else {
                Triple t = triple_decode(nb.word);
                CHECK((triple_encode(factor_next(t)) == word || triple_encode(factor_prev(t)) == word));
            }
        }
}

TEST_CASE("plan cache round trip") {
    GluingPlan plan = build_gluing_plan(4);
    std::ostringstream out;
    save_plan(plan, out);
    CHECK(out.str().rfind("mlham-plan v1 n=4\n", 0) == 0);

    std::istringstream in(out.str());
    GluingPlan loaded = load_plan(in);
    CHECK(loaded.n == 4);
    CHECK(loaded.chosen == plan.chosen);
    CHECK(loaded.overrides.size() == plan.overrides.size());
}

TEST_CASE("plan cache rejects corruption") {
    GluingPlan plan = build_gluing_plan(4);
    std::ostringstream out;
    save_plan(plan, out);
    const std::string good = out.str();

    {
        std::istringstream in("not-a-plan v1 n=4\n");
        CHECK_THROWS_AS(load_plan(in), std::invalid_argument);
    }
    {
        // drop one chosen word: no longer spanning
        std::string trunc = good.substr(0, good.find_last_of('\n', good.size() - 2) + 1);
        std::istringstream in(trunc);
        CHECK_THROWS_AS(load_plan(in), std::invalid_argument);
    }
    {
        // swap a word for a non-pullable one
        std::string bad = good;
        bad.replace(bad.find('\n') + 1, 8, "10101010");
        std::istringstream in(bad);
        CHECK_THROWS_AS(load_plan(in), std::invalid_argument);
    }
    {
        // duplicate a word
        std::string first_word = good.substr(good.find('\n') + 1, 8);
        std::istringstream in(good + first_word + "\n");
        CHECK_THROWS_AS(load_plan(in), std::invalid_argument);
    }
}

} // TEST_SUITE
