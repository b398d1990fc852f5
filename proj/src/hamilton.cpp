#include "mlham/hamilton.hpp"

namespace mlham {

std::uint64_t cycle_length(int n) { return MiddleLevels{n}.vertex_count(); }

BitWord start_vertex(int n) {
    detail::check_arg(n >= 1, "start_vertex: n must be >= 1");
    BitWord w = BitWord::zeros(2 * n + 1);
    for (int i = 0; i < 2 * n; i += 2) w.set(i, true);
    return w;
}

HamiltonStream::HamiltonStream(const GluingPlan& plan)
    : plan_(&plan), len_(2 * plan.n + 1), start_(start_vertex(plan.n)), cur_(start_) {
    detail::check_arg(plan.n >= 1, "HamiltonStream: plan has no instance size");
    cur_t_ = Triple{cur_.substr(0, 2 * plan.n), 0, 0};
}

HamiltonStream::HamiltonStream(const GluingPlan& plan, const BitWord& at, const BitWord& prev)
    : plan_(&plan), len_(2 * plan.n + 1), start_(at), cur_(at), prev_(prev) {
    detail::check_arg(at.size() == len_ && prev.size() == len_,
                      "HamiltonStream: word length does not match the instance");
    cur_t_ = triple_decode(at); // also validates the level
    // prev must be one of the two cycle neighbors of at.
    auto it = plan_->overrides.find(at);
    bool adjacent;
    if (it != plan_->overrides.end()) {
        adjacent = prev == it->second.nbr[0].word || prev == it->second.nbr[1].word;
    } else {
        adjacent = prev == triple_encode(factor_next(cur_t_)) ||
                   prev == triple_encode(factor_prev(cur_t_));
    }
    detail::check_arg(adjacent, "HamiltonStream: prev is not a cycle neighbor of the start");
}

void HamiltonStream::step(BitWord& word, Triple& t) const {
    auto it = plan_->overrides.find(word);
    if (it != plan_->overrides.end()) {
        const OverrideEntry& e = it->second;
        int pick = 0;
        if (!prev_.empty() && e.nbr[0].word == prev_) pick = 1;
        detail::check_internal(prev_.empty() || e.nbr[static_cast<std::size_t>(1 - pick)].word == prev_,
                               "HamiltonStream: walk arrived from outside the cycle");
        word = e.nbr[static_cast<std::size_t>(pick)].word;
        t = e.nbr[static_cast<std::size_t>(pick)].triple;
        return;
    }
    BitWord fwd = word;
    Triple fwd_t = t;
    factor_next_inplace(fwd, fwd_t);
    if (prev_.empty() || fwd != prev_) {
        word = std::move(fwd);
        t = std::move(fwd_t);
    } else {
        factor_prev_inplace(word, t);
    }
}

bool HamiltonStream::advance() {
    if (closed_) return false;
    BitWord next = cur_;
    Triple next_t = cur_t_;
    step(next, next_t);
    if (next == start_) {
        closed_ = true;
        return false;
    }
    prev_ = std::move(cur_);
    cur_ = std::move(next);
    cur_t_ = std::move(next_t);
    ++emitted_;
    return true;
}

BitWord hamilton_successor(const BitWord& prev, const BitWord& at, const GluingPlan& plan) {
    detail::check_arg(at.size() == 2 * plan.n + 1, "successor: word length does not match the instance");
    Triple t = triple_decode(at); // validates levels n / n+1
    detail::check_arg(prev.size() == at.size() && hamming_distance(prev, at) == 1,
                      "successor: prev is not a single-bit neighbor");

    auto it = plan.overrides.find(at);
    if (it != plan.overrides.end()) {
        const OverrideEntry& e = it->second;
        if (e.nbr[0].word == prev) return e.nbr[1].word;
        if (e.nbr[1].word == prev) return e.nbr[0].word;
        throw std::invalid_argument("successor: prev is not adjacent to an overridden vertex");
    }
    BitWord fwd = triple_encode(factor_next(t));
    if (fwd != prev) return fwd;
    return triple_encode(factor_prev(t));
}

} // namespace mlham
