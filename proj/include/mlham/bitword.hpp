// Bit-level representation of hypercube vertices and Dyck words.
//
// Conventions used throughout the library:
//   - position 1 of a word is the leftmost printed character (index 0 here),
//   - "right rotation" by s moves the last s characters to the front,
//   - a Dyck word has weight len/2 and every prefix has >= as many 1s as 0s.
//
// Words of length <= 64 are packed into a single machine word (character i
// lives at machine bit len-1-i, so equal-length comparison is integer
// comparison). Longer words fall back to a block vector with the same
// semantics.

#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mlham {

namespace detail {

inline void check_arg(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

inline void check_internal(bool ok, const char* msg) {
    if (!ok) throw std::logic_error(msg);
}

std::uint64_t mix64(std::uint64_t x);

}  // namespace detail

class BitWord {
public:
    BitWord() = default;

    static BitWord zeros(int len);
    // Parses a string of '0'/'1' characters, leftmost first.
    static BitWord parse(std::string_view s);

    int size() const { return len_; }
    bool empty() const { return len_ == 0; }

    // i is 0-based from the left.
    bool get(int i) const;
    void set(int i, bool v);
    void flip(int i);

    void append(bool bit);
    void append(const BitWord& w);
    BitWord substr(int pos, int count) const;

    int weight() const;
    BitWord rotated_right(long long s) const;
    std::string str() const;
    // Word value with the leftmost character as most significant bit;
    // only for lengths <= 64.
    std::uint64_t to_uint() const;

    bool operator==(const BitWord& o) const;
    bool operator!=(const BitWord& o) const { return !(*this == o); }
    // Lexicographic on characters; a proper prefix sorts first.
    bool operator<(const BitWord& o) const;

    std::size_t hash() const;

private:
    bool small() const { return len_ <= 64; }
    static constexpr std::uint64_t mask_of(int len) {
        return len >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << len) - 1);
    }

    int len_ = 0;
    std::uint64_t bits_ = 0;            // valid when len_ <= 64
    std::vector<std::uint64_t> blocks_; // valid when len_ > 64; big-endian, char j at bit 63-(j%64)
};

struct BitWordHash {
    std::size_t operator()(const BitWord& w) const { return w.hash(); }
};

int weight(const BitWord& w);
int hamming_distance(const BitWord& a, const BitWord& b);
BitWord rotate_right(const BitWord& w, long long s);
BitWord concat(const BitWord& a, const BitWord& b);

bool is_dyck(const BitWord& w);
// Splits x in D_n (n >= 1) as x = 1 u 0 v with u, v Dyck; the 0 is the
// matching partner of the leading 1.
std::pair<BitWord, BitWord> dyck_decompose(const BitWord& x);

// Vertex coordinates on the middle levels: encoded word = sigma^shift(nut . bit).
struct Triple {
    BitWord nut; // Dyck word of length 2n
    int bit = 0;
    int shift = 0;

    bool operator==(const Triple& o) const {
        return bit == o.bit && shift == o.shift && nut == o.nut;
    }
    bool operator!=(const Triple& o) const { return !(*this == o); }
};

BitWord triple_encode(const Triple& t);
// Inverse of triple_encode for words of odd length 2n+1 and weight n or n+1.
// Scans all 2n+1 rotations; exactly one must match, anything else is an
// internal error.
Triple triple_decode(const BitWord& v);

struct MiddleLevels {
    int n = 1;

    int dimension() const { return 2 * n + 1; }
    std::uint64_t level_size() const;   // C(2n+1, n)
    std::uint64_t vertex_count() const; // 2 * C(2n+1, n)
};

// Exact binomial coefficient; throws on 64-bit overflow.
std::uint64_t binomial_exact(int a, int b);

namespace detail {
template <class Fn>
void dyck_rec(BitWord& buf, int pos, int ones, int zeros, int n, Fn& fn) {
    if (pos == 2 * n) {
        fn(const_cast<const BitWord&>(buf));
        return;
    }
    if (zeros < ones) { // '0' first: lexicographic order
        buf.set(pos, false);
        dyck_rec(buf, pos + 1, ones, zeros + 1, n, fn);
    }
    if (ones < n) {
        buf.set(pos, true);
        dyck_rec(buf, pos + 1, ones + 1, zeros, n, fn);
    }
}
} // namespace detail

// Calls fn with every word of D_n in lexicographic order.
template <class Fn>
void for_each_dyck(int n, Fn&& fn) {
    detail::check_arg(n >= 0, "for_each_dyck: n must be >= 0");
    BitWord buf = BitWord::zeros(2 * n);
    detail::dyck_rec(buf, 0, 0, 0, n, fn);
}

// As above but restricted to completions of a fixed prefix (prefix itself must
// be extendable to a Dyck word).
template <class Fn>
void for_each_dyck_with_prefix(int n, const BitWord& prefix, Fn&& fn) {
    detail::check_arg(prefix.size() <= 2 * n, "dyck prefix longer than word");
    int ones = 0, zeros = 0;
    for (int i = 0; i < prefix.size(); ++i) {
        prefix.get(i) ? ++ones : ++zeros;
        if (zeros > ones) return; // dead prefix
    }
    if (ones > n || zeros > n) return;
    BitWord buf = BitWord::zeros(2 * n);
    for (int i = 0; i < prefix.size(); ++i) buf.set(i, prefix.get(i));
    detail::dyck_rec(buf, prefix.size(), ones, zeros, n, fn);
}

} // namespace mlham
