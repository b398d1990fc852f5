#include "mlham/verify.hpp"

#include "mlham/gluing.hpp"
#include "mlham/hamilton.hpp"

#include <doctest.h>

#include <memory>
#include <unordered_set>
#include <vector>

using namespace mlham;

namespace {

WordSource source_from(std::vector<BitWord> words) {
    auto state = std::make_shared<std::pair<std::vector<BitWord>, std::size_t>>(std::move(words), 0);
    return [state]() -> std::optional<BitWord> {
        if (state->second == state->first.size()) return std::nullopt;
        return state->first[state->second++];
    };
}

std::vector<BitWord> generate(int n) {
    GluingPlan plan = build_gluing_plan(n);
    HamiltonStream s(plan);
    std::vector<BitWord> out{s.current()};
    while (s.advance()) out.push_back(s.current());
    return out;
}

bool has_issue(const CheckReport& r, const char* kind) {
    for (const auto& i : r.issues)
        if (i.kind == kind) return true;
    return false;
}

} // namespace

TEST_SUITE("verify") {

TEST_CASE("generated stream passes for n=4") {
    CheckReport r = check_stream(4, source_from(generate(4)));
    CHECK(r.passed());
    CHECK(r.count == 252);
}

TEST_CASE("fault injection is detected") {
    std::vector<BitWord> good = generate(3);

    SUBCASE("repeated vertex") {
        std::vector<BitWord> bad = good;
        bad[20] = bad[10];
        CheckReport r = check_stream(3, source_from(bad));
        CHECK_FALSE(r.passed());
        CHECK(has_issue(r, "distinct"));
    }
    SUBCASE("corrupted bit") {
        std::vector<BitWord> bad = good;
        bad[33].flip(2);
        CheckReport r = check_stream(3, source_from(bad));
        CHECK_FALSE(r.passed());
        CHECK(has_issue(r, "hamming"));
    }
    SUBCASE("truncated stream") {
        std::vector<BitWord> bad(good.begin(), good.end() - 3);
        CheckReport r = check_stream(3, source_from(bad));
        CHECK_FALSE(r.passed());
        CHECK(has_issue(r, "count"));
    }
    SUBCASE("level violation") {
        std::vector<BitWord> bad = good;
        bad[5] = BitWord::parse("0000000");
        CheckReport r = check_stream(3, source_from(bad));
        CHECK_FALSE(r.passed());
        CHECK(has_issue(r, "weight"));
    }
    SUBCASE("broken closure") {
        std::vector<BitWord> bad = good;
        std::swap(bad[0], bad[35]);
        CheckReport r = check_stream(3, source_from(bad));
        CHECK_FALSE(r.passed());
    }
}

TEST_CASE("issue positions are reported") {
    std::vector<BitWord> bad = generate(3);
    bad[33].flip(2);
    CheckReport r = check_stream(3, source_from(bad));
    REQUIRE_FALSE(r.passed());
    bool found = false;
    for (const auto& i : r.issues)
        if (i.kind == "hamming" && i.position == 33) found = true;
    CHECK(found);
}

TEST_CASE("brute force oracle agrees with the stream on the vertex set") {
    for (int n : {1, 2}) {
        std::vector<BitWord> oracle = brute_force_hamilton(n);
        std::vector<BitWord> stream = generate(n);
        CHECK(oracle.size() == cycle_length(n));
        CHECK(oracle.size() == stream.size());
        std::unordered_set<BitWord, BitWordHash> a(oracle.begin(), oracle.end());
        std::unordered_set<BitWord, BitWordHash> b(stream.begin(), stream.end());
        CHECK(a == b);
        // the oracle output is itself a Hamilton cycle
        for (std::size_t i = 0; i < oracle.size(); ++i)
            CHECK(hamming_distance(oracle[i], oracle[(i + 1) % oracle.size()]) == 1);
    }
    CHECK_THROWS_AS(brute_force_hamilton(4), std::invalid_argument);
}

TEST_CASE("brute force handles n=3") {
    std::vector<BitWord> oracle = brute_force_hamilton(3);
    CHECK(oracle.size() == 70);
    std::unordered_set<BitWord, BitWordHash> distinct(oracle.begin(), oracle.end());
    CHECK(distinct.size() == 70);
}

TEST_CASE("lemma suite passes for small n") {
    for (int n : {1, 2, 3}) {
        for (const LemmaResult& r : check_all_lemmas(n)) {
            INFO("lemma ", r.name, " n=", n, ": ", r.detail);
            CHECK(r.pass);
        }
    }
}

TEST_CASE("lemma suite names stay stable") {
    auto results = check_all_lemmas(2);
    std::unordered_set<std::string> names;
    for (const auto& r : results) names.insert(r.name);
    for (const char* expected : {"dyck-count", "triple-codec-roundtrip", "class-census",
                                 "gluing-footprints-disjoint", "reduction-to-star", "gluing-plan"})
        CHECK(names.count(expected) == 1);
}

} // TEST_SUITE
