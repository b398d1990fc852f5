#include "mlham/tree.hpp"

#include <algorithm>
#include <numeric>

namespace mlham {

OrderedTree tree_from_dyck(const BitWord& x) {
    detail::check_arg(is_dyck(x), "tree_from_dyck: input is not a Dyck word");
    OrderedTree t;
    t.children.resize(static_cast<std::size_t>(x.size() / 2 + 1));
    t.root = 0;
    std::vector<int> stack{0};
    int next_id = 1;
    for (int i = 0; i < x.size(); ++i) {
        if (x.get(i)) {
            int v = next_id++;
            t.children[static_cast<std::size_t>(stack.back())].push_back(v);
            stack.push_back(v);
        } else {
            stack.pop_back();
        }
    }
    return t;
}

namespace {

void encode_subtree(const OrderedTree& t, int v, BitWord& out) {
    for (int c : t.children[static_cast<std::size_t>(v)]) {
        out.append(true);
        encode_subtree(t, c, out);
        out.append(false);
    }
}

} // namespace

BitWord dyck_from_tree(const OrderedTree& t) {
    BitWord out;
    encode_subtree(t, t.root, out);
    detail::check_internal(out.size() == 2 * t.edge_count(), "dyck_from_tree: tree malformed");
    return out;
}

BitWord rotate_word(const BitWord& x) {
    auto [u, v] = dyck_decompose(x);
    BitWord r = u;
    r.append(true);
    r.append(v);
    r.append(false);
    return r;
}

BitWord rotate_word_inverse(const BitWord& x) {
    detail::check_arg(x.size() >= 2 && is_dyck(x), "rotate_word_inverse: input not a nonempty Dyck word");
    // x = u 1 v 0 where |u| is the last position before the end with prefix
    // sum zero; then S >= 1 strictly between, so u and v are Dyck.
    int depth = 0, ulen = 0;
    for (int i = 0; i < x.size() - 1; ++i) {
        depth += x.get(i) ? 1 : -1;
        if (depth == 0) ulen = i + 1;
    }
    BitWord r;
    r.append(true);
    r.append(x.substr(0, ulen));
    r.append(false);
    r.append(x.substr(ulen + 1, x.size() - ulen - 2));
    return r;
}

OrderedTree rotate_labeled(const OrderedTree& t) {
    detail::check_arg(t.edge_count() >= 1, "rotate_labeled: tree has no edges");
    OrderedTree r = t;
    auto& root_kids = r.children[static_cast<std::size_t>(t.root)];
    int a = root_kids.front();
    root_kids.erase(root_kids.begin());
    r.children[static_cast<std::size_t>(a)].push_back(t.root);
    r.root = a;
    return r;
}

bool is_pullable(const BitWord& x) {
    if (!is_dyck(x) || x.size() < 4) return false;
    return x.get(0) && x.get(1) && !x.get(2);
}

std::pair<BitWord, BitWord> pull_parts(const BitWord& x) {
    detail::check_arg(is_pullable(x), "pull_parts: word is not pullable");
    auto [inner, v] = dyck_decompose(x); // inner = 10u
    return {inner.substr(2, inner.size() - 2), v};
}

BitWord pull(const BitWord& x) {
    detail::check_arg(is_pullable(x), "pull: word is not pullable");
    BitWord p = x;
    p.set(1, false);
    p.set(2, true); // 110u0v -> 101u0v
    return p;
}

RotationOrbit rotation_orbit(const BitWord& x) {
    detail::check_arg(x.size() >= 2 && is_dyck(x), "rotation_orbit: input not a nonempty Dyck word");
    RotationOrbit orbit;
    orbit.canonical = x;
    BitWord y = rotate_word(x);
    int steps = 1;
    while (y != x) {
        if (y < orbit.canonical) {
            orbit.canonical = y;
            orbit.steps_to_canonical = steps;
        }
        y = rotate_word(y);
        ++steps;
    }
    orbit.period = steps;
    const int two_n = x.size();
    detail::check_internal(two_n % orbit.period == 0, "rotation_orbit: period does not divide 2n");
    detail::check_internal(std::gcd(orbit.period, two_n + 1) == 1,
                           "rotation_orbit: period shares a factor with 2n+1");
    return orbit;
}

ClassId canonical_of(const BitWord& x) { return ClassId{rotation_orbit(x).canonical}; }

int rotation_period(const BitWord& x) { return rotation_orbit(x).period; }

int choose_center(const BitWord& x) {
    RotationOrbit orbit = rotation_orbit(x);
    OrderedTree t = tree_from_dyck(x);
    for (int k = 0; k < orbit.steps_to_canonical; ++k) t = rotate_labeled(t);
    return t.root;
}

int leftmost_leaf_depth(const OrderedTree& t) {
    int d = 0, v = t.root;
    while (!t.children[static_cast<std::size_t>(v)].empty()) {
        v = t.children[static_cast<std::size_t>(v)].front();
        ++d;
    }
    return d;
}

long long distance_sum(const OrderedTree& t, int from) {
    const int nv = t.vertex_count();
    detail::check_arg(from >= 0 && from < nv, "distance_sum: vertex out of range");
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(nv));
    for (int v = 0; v < nv; ++v)
        for (int c : t.children[static_cast<std::size_t>(v)]) {
            adj[static_cast<std::size_t>(v)].push_back(c);
            adj[static_cast<std::size_t>(c)].push_back(v);
        }
    std::vector<int> dist(static_cast<std::size_t>(nv), -1);
    std::vector<int> queue{from};
    dist[static_cast<std::size_t>(from)] = 0;
    long long sum = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int v = queue[head];
        sum += dist[static_cast<std::size_t>(v)];
        for (int w : adj[static_cast<std::size_t>(v)])
            if (dist[static_cast<std::size_t>(w)] < 0) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                queue.push_back(w);
            }
    }
    detail::check_internal(queue.size() == static_cast<std::size_t>(nv), "distance_sum: tree not connected");
    return sum;
}

} // namespace mlham
