#include "mlham/factor.hpp"

#include <algorithm>
#include <unordered_map>

namespace mlham {

namespace {

// |u| in the decomposition x = 1u0v: the matching 0 of x[0] sits at ulen+1.
int dyck_ulen(const BitWord& x) {
    int depth = 0;
    for (int i = 0; i < x.size(); ++i) {
        depth += x.get(i) ? 1 : -1;
        if (depth == 0) return i - 1;
    }
    throw std::logic_error("dyck_ulen: input not a Dyck word");
}

// |u| in the parse x = u1v0 (preimage decomposition of rotate_word).
int inverse_ulen(const BitWord& x) {
    int depth = 0, ulen = 0;
    for (int i = 0; i < x.size() - 1; ++i) {
        depth += x.get(i) ? 1 : -1;
        if (depth == 0) ulen = i + 1;
    }
    return ulen;
}

} // namespace

Triple factor_next(const Triple& v) {
    const int len = v.nut.size() + 1;
    if (v.bit == 0)
        return Triple{rotate_word(v.nut), 1, (v.shift + 1) % len};
    return Triple{v.nut, 0, v.shift};
}

Triple factor_prev(const Triple& v) {
    const int len = v.nut.size() + 1;
    if (v.bit == 0)
        return Triple{v.nut, 1, v.shift};
    return Triple{rotate_word_inverse(v.nut), 0, (v.shift + len - 1) % len};
}

int factor_next_inplace(BitWord& word, Triple& t) {
    const int len = word.size();
    int idx;
    if (t.bit == 0) {
        // <x,0,s> -> <r(x),1,s+1>: the 0 between u and v becomes 1.
        const int ulen = dyck_ulen(t.nut);
        idx = (ulen + 1 + t.shift) % len;
        detail::check_internal(!word.get(idx), "factor_next: expected a 0 bit");
        word.flip(idx);
        t.nut = rotate_word(t.nut);
        t.bit = 1;
        t.shift = (t.shift + 1) % len;
    } else {
        // <x,1,s> -> <x,0,s>: the appended bit drops to 0.
        idx = (t.shift + len - 1) % len;
        detail::check_internal(word.get(idx), "factor_next: expected a 1 bit");
        word.flip(idx);
        t.bit = 0;
    }
    return idx;
}

int factor_prev_inplace(BitWord& word, Triple& t) {
    const int len = word.size();
    int idx;
    if (t.bit == 0) {
        // back to <x,1,s>: the appended bit rises to 1.
        idx = (t.shift + len - 1) % len;
        detail::check_internal(!word.get(idx), "factor_prev: expected a 0 bit");
        word.flip(idx);
        t.bit = 1;
    } else {
        // back to <r^-1(x),0,s-1>: the bit between u' and v' drops to 0.
        const int ulen = inverse_ulen(t.nut);
        idx = (ulen + t.shift) % len;
        detail::check_internal(word.get(idx), "factor_prev: expected a 1 bit");
        word.flip(idx);
        t.nut = rotate_word_inverse(t.nut);
        t.bit = 0;
        t.shift = (t.shift + len - 1) % len;
    }
    return idx;
}

std::vector<Triple> factor_cycle(const Triple& start) {
    const int len = start.nut.size() + 1;
    std::vector<Triple> cycle{start};
    Triple v = factor_next(start);
    while (v != start) {
        cycle.push_back(v);
        v = factor_next(v);
        detail::check_internal(cycle.size() <= static_cast<std::size_t>(2 * (len - 1) * len),
                               "factor_cycle: runaway iteration");
    }
    const std::uint64_t expect =
        2ull * static_cast<std::uint64_t>(rotation_period(start.nut)) * static_cast<std::uint64_t>(len);
    detail::check_internal(cycle.size() == expect, "factor_cycle: length differs from 2*t*(2n+1)");
    return cycle;
}

namespace {

using ClassMap = std::unordered_map<BitWord, int, BitWordHash>; // canonical -> period

std::vector<FactorCycle> finish_classes(int n, ClassMap&& classes) {
    std::vector<FactorCycle> out;
    out.reserve(classes.size());
    const std::uint64_t len_unit = static_cast<std::uint64_t>(2 * n + 1);
    for (auto& [canonical, period] : classes)
        out.push_back(FactorCycle{canonical, period, 2ull * static_cast<std::uint64_t>(period) * len_unit});
    std::sort(out.begin(), out.end(),
              [](const FactorCycle& a, const FactorCycle& b) { return a.canonical < b.canonical; });

    std::uint64_t total = 0;
    for (const auto& c : out) total += c.length;
    detail::check_internal(total == MiddleLevels{n}.vertex_count(),
                           "enumerate_classes: cycle lengths do not cover the middle levels");
    return out;
}

void absorb(ClassMap& classes, const BitWord& x) {
    RotationOrbit orbit = rotation_orbit(x);
    auto [it, inserted] = classes.emplace(orbit.canonical, orbit.period);
    if (!inserted)
        detail::check_internal(it->second == orbit.period, "enumerate_classes: inconsistent period");
}

} // namespace

std::vector<FactorCycle> enumerate_classes_serial(int n) {
    detail::check_arg(n >= 1, "enumerate_classes: n must be >= 1");
    ClassMap classes;
    for_each_dyck(n, [&](const BitWord& x) { absorb(classes, x); });
    return finish_classes(n, std::move(classes));
}

std::vector<FactorCycle> enumerate_classes(int n) {
    detail::check_arg(n >= 1, "enumerate_classes: n must be >= 1");
#ifndef _OPENMP
    return enumerate_classes_serial(n);
#else
    const int prefix_len = 10;
    if (2 * n <= prefix_len + 2) return enumerate_classes_serial(n);

    std::vector<BitWord> prefixes;
    {
        // Feasible +-1 prefixes; completability is checked inside the sharded
        // enumerator, an over-approximation here only wastes empty tasks.
        BitWord buf = BitWord::zeros(prefix_len);
        auto rec = [&](auto&& self, int pos, int depth) -> void {
            if (pos == prefix_len) {
                prefixes.push_back(buf);
                return;
            }
            if (depth > 0) {
                buf.set(pos, false);
                self(self, pos + 1, depth - 1);
            }
            buf.set(pos, true);
            self(self, pos + 1, depth + 1);
        };
        rec(rec, 0, 0);
    }

    ClassMap classes;
#pragma omp parallel
    {
        ClassMap local;
#pragma omp for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(prefixes.size()); ++i)
            for_each_dyck_with_prefix(n, prefixes[static_cast<std::size_t>(i)],
                                      [&](const BitWord& x) { absorb(local, x); });
#pragma omp critical(mlham_class_merge)
        for (auto& [canonical, period] : local) {
            auto [it, inserted] = classes.emplace(canonical, period);
            if (!inserted)
                detail::check_internal(it->second == period, "enumerate_classes: inconsistent period");
        }
    }
    return finish_classes(n, std::move(classes));
#endif
}

} // namespace mlham
