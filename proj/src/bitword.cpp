#include "mlham/bitword.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace mlham {

namespace detail {

std::uint64_t mix64(std::uint64_t x) {
    // splitmix64 finalizer
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace detail

BitWord BitWord::zeros(int len) {
    detail::check_arg(len >= 0, "BitWord length must be >= 0");
    BitWord w;
    w.len_ = len;
    if (len > 64) w.blocks_.assign((len + 63) / 64, 0);
    return w;
}

BitWord BitWord::parse(std::string_view s) {
    BitWord w = zeros(static_cast<int>(s.size()));
    for (int i = 0; i < w.len_; ++i) {
        char c = s[static_cast<std::size_t>(i)];
        detail::check_arg(c == '0' || c == '1', "BitWord::parse: character is not 0/1");
        if (c == '1') w.set(i, true);
    }
    return w;
}

bool BitWord::get(int i) const {
    detail::check_arg(i >= 0 && i < len_, "BitWord::get: index out of range");
    if (small()) return (bits_ >> (len_ - 1 - i)) & 1u;
    return (blocks_[static_cast<std::size_t>(i) / 64] >> (63 - (i % 64))) & 1u;
}

void BitWord::set(int i, bool v) {
    detail::check_arg(i >= 0 && i < len_, "BitWord::set: index out of range");
    if (small()) {
        std::uint64_t m = std::uint64_t{1} << (len_ - 1 - i);
        bits_ = v ? (bits_ | m) : (bits_ & ~m);
    } else {
        std::uint64_t& b = blocks_[static_cast<std::size_t>(i) / 64];
        std::uint64_t m = std::uint64_t{1} << (63 - (i % 64));
        b = v ? (b | m) : (b & ~m);
    }
}

void BitWord::flip(int i) {
    detail::check_arg(i >= 0 && i < len_, "BitWord::flip: index out of range");
    if (small())
        bits_ ^= std::uint64_t{1} << (len_ - 1 - i);
    else
        blocks_[static_cast<std::size_t>(i) / 64] ^= std::uint64_t{1} << (63 - (i % 64));
}

void BitWord::append(bool bit) {
    if (len_ < 64) {
        bits_ = (bits_ << 1) | (bit ? 1u : 0u);
        ++len_;
        return;
    }
    if (len_ == 64) { // migrate to block form
        blocks_.assign(2, 0);
        blocks_[0] = bits_;
        bits_ = 0;
    } else if (len_ % 64 == 0) {
        blocks_.push_back(0);
    }
    ++len_;
    if (bit) set(len_ - 1, true);
}

void BitWord::append(const BitWord& w) {
    if (len_ + w.len_ <= 64) {
        bits_ = (bits_ << w.len_) | w.bits_;
        len_ += w.len_;
        return;
    }
    for (int i = 0; i < w.len_; ++i) append(w.get(i));
}

BitWord BitWord::substr(int pos, int count) const {
    detail::check_arg(pos >= 0 && count >= 0 && pos + count <= len_,
                      "BitWord::substr: range out of bounds");
    if (count == 0) return BitWord{};
    if (small()) {
        BitWord r = zeros(count);
        r.bits_ = (bits_ >> (len_ - pos - count)) & mask_of(count);
        return r;
    }
    BitWord r = zeros(count);
    for (int i = 0; i < count; ++i)
        if (get(pos + i)) r.set(i, true);
    return r;
}

int BitWord::weight() const {
    if (small()) return std::popcount(bits_);
    int w = 0;
    for (std::uint64_t b : blocks_) w += std::popcount(b);
    return w;
}

BitWord BitWord::rotated_right(long long s) const {
    if (len_ == 0) return *this;
    s %= len_;
    if (s < 0) s += len_;
    if (s == 0) return *this;
    if (small()) {
        BitWord r = zeros(len_);
        std::uint64_t low = bits_ & mask_of(static_cast<int>(s));
        r.bits_ = ((bits_ >> s) | (low << (len_ - s))) & mask_of(len_);
        return r;
    }
    BitWord r = zeros(len_);
    for (int i = 0; i < len_; ++i)
        if (get(i)) r.set((i + static_cast<int>(s)) % len_, true);
    return r;
}

std::uint64_t BitWord::to_uint() const {
    detail::check_arg(small(), "BitWord::to_uint: word longer than 64 bits");
    return bits_;
}

std::string BitWord::str() const {
    std::string s(static_cast<std::size_t>(len_), '0');
    for (int i = 0; i < len_; ++i)
        if (get(i)) s[static_cast<std::size_t>(i)] = '1';
    return s;
}

bool BitWord::operator==(const BitWord& o) const {
    if (len_ != o.len_) return false;
    if (small()) return bits_ == o.bits_;
    return blocks_ == o.blocks_;
}

bool BitWord::operator<(const BitWord& o) const {
    if (small() && o.small()) {
        // Left-align so padding compares as the smaller character.
        std::uint64_t a = len_ ? bits_ << (64 - len_) : 0;
        std::uint64_t b = o.len_ ? o.bits_ << (64 - o.len_) : 0;
        if (a != b) return a < b;
        return len_ < o.len_;
    }
    int m = std::min(len_, o.len_);
    for (int i = 0; i < m; ++i) {
        bool x = get(i), y = o.get(i);
        if (x != y) return !x;
    }
    return len_ < o.len_;
}

std::size_t BitWord::hash() const {
    std::uint64_t h = detail::mix64(static_cast<std::uint64_t>(len_));
    if (small()) return detail::mix64(h ^ bits_);
    for (std::uint64_t b : blocks_) h = detail::mix64(h ^ b);
    return h;
}

int weight(const BitWord& w) { return w.weight(); }

int hamming_distance(const BitWord& a, const BitWord& b) {
    detail::check_arg(a.size() == b.size(), "hamming_distance: length mismatch");
    int d = 0;
    for (int i = 0; i < a.size(); ++i) d += a.get(i) != b.get(i);
    return d;
}

BitWord rotate_right(const BitWord& w, long long s) { return w.rotated_right(s); }

BitWord concat(const BitWord& a, const BitWord& b) {
    BitWord r = a;
    r.append(b);
    return r;
}

bool is_dyck(const BitWord& w) {
    if (w.size() % 2 != 0) return false;
    int depth = 0;
    for (int i = 0; i < w.size(); ++i) {
        depth += w.get(i) ? 1 : -1;
        if (depth < 0) return false;
    }
    return depth == 0;
}

std::pair<BitWord, BitWord> dyck_decompose(const BitWord& x) {
    detail::check_arg(x.size() >= 2 && is_dyck(x), "dyck_decompose: input not a nonempty Dyck word");
    int depth = 0;
    for (int i = 0; i < x.size(); ++i) {
        depth += x.get(i) ? 1 : -1;
        if (depth == 0) // x[i] is the 0 matching x[0]
            return {x.substr(1, i - 1), x.substr(i + 1, x.size() - i - 1)};
    }
    throw std::logic_error("dyck_decompose: no matching zero"); // unreachable
}

BitWord triple_encode(const Triple& t) {
    detail::check_arg(t.bit == 0 || t.bit == 1, "triple_encode: bit must be 0/1");
    detail::check_arg(is_dyck(t.nut), "triple_encode: nut is not a Dyck word");
    detail::check_arg(t.shift >= 0 && t.shift <= t.nut.size(), "triple_encode: shift out of range");
    BitWord w = t.nut;
    w.append(t.bit == 1);
    return w.rotated_right(t.shift);
}

Triple triple_decode(const BitWord& v) {
    const int len = v.size();
    detail::check_arg(len >= 1 && len % 2 == 1, "triple_decode: length must be odd");
    const int n = (len - 1) / 2;
    const int wt = v.weight();
    detail::check_arg(wt == n || wt == n + 1, "triple_decode: weight outside levels n, n+1");
    const int b = (wt == n + 1) ? 1 : 0;

    Triple found;
    int matches = 0;
    for (int s = 0; s < len; ++s) {
        // frame = sigma^{-s}(v); frame[i] = v[(i + s) mod len]
        auto at = [&](int i) { return v.get((i + s) % len); };
        if (at(len - 1) != (b == 1)) continue;
        int depth = 0;
        bool ok = true;
        for (int i = 0; i < len - 1; ++i) {
            depth += at(i) ? 1 : -1;
            if (depth < 0) {
                ok = false;
                break;
            }
        }
        if (!ok || depth != 0) continue;
        ++matches;
        if (matches == 1) {
            BitWord nut = BitWord::zeros(len - 1);
            for (int i = 0; i < len - 1; ++i)
                if (at(i)) nut.set(i, true);
            found = Triple{std::move(nut), b, s};
        }
    }
    detail::check_internal(matches == 1, "triple_decode: rotation match not unique");
    return found;
}

std::uint64_t binomial_exact(int a, int b) {
    detail::check_arg(a >= 0 && b >= 0 && b <= a, "binomial_exact: bad arguments");
    b = std::min(b, a - b);
    unsigned __int128 acc = 1;
    for (int i = 1; i <= b; ++i) {
        acc = acc * static_cast<unsigned>(a - b + i);
        acc /= static_cast<unsigned>(i);
        detail::check_arg(acc <= ~std::uint64_t{0}, "binomial_exact: 64-bit overflow");
    }
    return static_cast<std::uint64_t>(acc);
}

std::uint64_t MiddleLevels::level_size() const {
    detail::check_arg(n >= 1, "MiddleLevels: n must be >= 1");
    return binomial_exact(2 * n + 1, n);
}

std::uint64_t MiddleLevels::vertex_count() const {
    std::uint64_t half = level_size();
    detail::check_arg(half <= (~std::uint64_t{0}) / 2, "vertex_count: 64-bit overflow");
    return 2 * half;
}

} // namespace mlham
