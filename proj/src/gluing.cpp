#include "mlham/gluing.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>

namespace mlham {

namespace {

BitWord splice(std::initializer_list<const BitWord*> parts) {
    BitWord out;
    for (const BitWord* p : parts) out.append(*p);
    return out;
}

BitWord lit(std::string_view s) { return BitWord::parse(s); }

} // namespace

GluingCycle gluing_cycle(const BitWord& x) {
    detail::check_arg(is_pullable(x), "gluing_cycle: word is not pullable");
    GluingCycle g;
    g.x = x;

    const Triple y{x, 0, 0};
    const Triple z{pull(x), 0, 0};
    std::array<Triple, 7> fy; // f^0(y) .. f^6(y)
    fy[0] = y;
    for (int i = 1; i <= 6; ++i) fy[i] = factor_next(fy[i - 1]);
    const Triple fz = factor_next(z);

    g.ring = {fy[0], fy[1], fy[6], fy[5], z, fz};
    for (int i = 0; i < 6; ++i) g.ring_words[static_cast<std::size_t>(i)] = triple_encode(g.ring[static_cast<std::size_t>(i)]);

    auto [u, v] = pull_parts(x);
    const BitWord b0 = lit("0"), b1 = lit("1");
    const BitWord w110 = lit("110"), w100 = lit("100"), w101 = lit("101"), w111 = lit("111");
    const std::array<BitWord, 6> subst = {
        splice({&w110, &u, &b0, &v, &b0}), // y
        splice({&w110, &u, &b1, &v, &b0}), // f(y)
        splice({&w100, &u, &b1, &v, &b0}), // f^6(y)
        splice({&w101, &u, &b1, &v, &b0}), // f^5(y)
        splice({&w101, &u, &b0, &v, &b0}), // z
        splice({&w111, &u, &b0, &v, &b0}), // f(z)
    };
    for (int i = 0; i < 6; ++i)
        detail::check_internal(g.ring_words[static_cast<std::size_t>(i)] == subst[static_cast<std::size_t>(i)],
                               "gluing_cycle: iterate and substitution forms disagree");
    for (int i = 0; i < 6; ++i)
        detail::check_internal(
            hamming_distance(g.ring_words[static_cast<std::size_t>(i)], g.ring_words[static_cast<std::size_t>((i + 1) % 6)]) == 1,
            "gluing_cycle: ring step is not a single bit flip");

    for (int i = 0; i <= 6; ++i) g.footprint[static_cast<std::size_t>(i)] = fy[static_cast<std::size_t>(i)];
    g.footprint[7] = z;
    g.footprint[8] = fz;
    static constexpr std::array<int, 9> expected_shifts = {0, 1, 1, 2, 2, 3, 3, 0, 1};
    for (int i = 0; i < 9; ++i) {
        g.footprint_words[static_cast<std::size_t>(i)] = triple_encode(g.footprint[static_cast<std::size_t>(i)]);
        detail::check_internal(g.footprint[static_cast<std::size_t>(i)].shift == expected_shifts[static_cast<std::size_t>(i)],
                               "gluing_cycle: footprint shift sequence is off");
    }
    return g;
}

int ReductionTrace::pull_count() const {
    int c = 0;
    for (const auto& s : steps) c += s.kind == ReductionStep::Kind::Pull;
    return c;
}

std::vector<BitWord> ReductionTrace::pulled_words() const {
    std::vector<BitWord> out;
    for (const auto& s : steps)
        if (s.kind == ReductionStep::Kind::Pull) out.push_back(s.before);
    return out;
}

namespace {

// Pull on the labeled tree: the leftmost leaf (depth 2) moves up to become
// the first child of the root.
OrderedTree pull_labeled(const OrderedTree& t) {
    OrderedTree p = t;
    auto& root_kids = p.children[static_cast<std::size_t>(p.root)];
    detail::check_internal(!root_kids.empty(), "pull_labeled: root has no children");
    int a = root_kids.front();
    auto& a_kids = p.children[static_cast<std::size_t>(a)];
    detail::check_internal(!a_kids.empty(), "pull_labeled: leftmost leaf not at depth 2");
    int leaf = a_kids.front();
    detail::check_internal(p.children[static_cast<std::size_t>(leaf)].empty(), "pull_labeled: depth-2 vertex is not a leaf");
    a_kids.erase(a_kids.begin());
    root_kids.insert(root_kids.begin(), leaf);
    return p;
}

} // namespace

ReductionTrace reduce_to_star(const BitWord& x) {
    detail::check_arg(x.size() >= 2 && is_dyck(x), "reduce_to_star: input not a nonempty Dyck word");
    const int two_n = x.size();

    ReductionTrace trace;
    trace.start = x;
    trace.center = choose_center(x);

    OrderedTree t = tree_from_dyck(x);
    long long dist = distance_sum(t, trace.center);
    const long long max_pulls = dist; // each pull decreases the sum by one

    for (long long guard = 0;; ++guard) {
        detail::check_internal(guard <= max_pulls, "reduce_to_star: did not terminate");

        // (i) probe the rotations of t for one rooted at the center whose
        // leftmost leaf is deeper than 1; none means t is already the star.
        int found = -1;
        OrderedTree probe = t;
        for (int j = 0; j < two_n; ++j) {
            if (probe.root == trace.center && leftmost_leaf_depth(probe) > 1) {
                found = j;
                break;
            }
            probe = rotate_labeled(probe);
        }
        if (found < 0) break;

        for (int j = 0; j < found; ++j) {
            trace.steps.push_back({ReductionStep::Kind::Rotate, dyck_from_tree(t)});
            t = rotate_labeled(t);
        }
        // (ii) walk the root down the leftmost path until the leaf is at depth 2.
        for (int d = leftmost_leaf_depth(t); d > 2; --d) {
            trace.steps.push_back({ReductionStep::Kind::Rotate, dyck_from_tree(t)});
            t = rotate_labeled(t);
        }
        // (iii) pull.
        BitWord before = dyck_from_tree(t);
        detail::check_internal(is_pullable(before), "reduce_to_star: pull step on non-pullable word");
        trace.steps.push_back({ReductionStep::Kind::Pull, before});
        t = pull_labeled(t);

        long long next_dist = distance_sum(t, trace.center);
        detail::check_internal(next_dist < dist, "reduce_to_star: pull did not shrink distance sum");
        dist = next_dist;
    }

    trace.final_word = dyck_from_tree(t);
    // The loop only exits on a star centered at trace.center.
    BitWord star = BitWord::zeros(two_n);
    for (int i = 0; i < two_n; i += 2) star.set(i, true);
    detail::check_internal(canonical_of(trace.final_word).canonical == star,
                           "reduce_to_star: final word is not in the star class");
    return trace;
}

namespace {

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int a) {
        while (parent[static_cast<std::size_t>(a)] != a) {
            parent[static_cast<std::size_t>(a)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
            a = parent[static_cast<std::size_t>(a)];
        }
        return a;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[static_cast<std::size_t>(a)] = b;
        return true;
    }
};

BitWord star_word(int n) {
    BitWord w = BitWord::zeros(2 * n);
    for (int i = 0; i < 2 * n; i += 2) w.set(i, true);
    return w;
}

std::unordered_map<BitWord, int, BitWordHash> class_index_of(const std::vector<FactorCycle>& classes) {
    std::unordered_map<BitWord, int, BitWordHash> index;
    for (std::size_t i = 0; i < classes.size(); ++i) index.emplace(classes[i].canonical, static_cast<int>(i));
    return index;
}

} // namespace

GluingPlan build_gluing_plan(int n) {
    detail::check_arg(n >= 1, "build_gluing_plan: n must be >= 1");
    const std::vector<FactorCycle> classes = enumerate_classes(n);
    const auto index = class_index_of(classes);
    detail::check_internal(classes.front().canonical == star_word(n),
                           "build_gluing_plan: star class is not first");

    GluingPlan plan;
    plan.n = n;
    UnionFind uf(classes.size());
    std::size_t components = classes.size();
    for (const FactorCycle& cls : classes) {
        if (components == 1) break;
        ReductionTrace trace = reduce_to_star(cls.canonical);
        for (const BitWord& w : trace.pulled_words()) {
            int a = index.at(rotation_orbit(w).canonical);
            int b = index.at(rotation_orbit(pull(w)).canonical);
            if (uf.unite(a, b)) {
                plan.chosen.push_back(w);
                --components;
            }
        }
    }
    detail::check_internal(components == 1, "build_gluing_plan: classes did not all connect to the star");
    detail::check_internal(plan.chosen.size() + 1 == classes.size(),
                           "build_gluing_plan: chosen set is not a spanning tree");
    std::sort(plan.chosen.begin(), plan.chosen.end());
    plan.overrides = build_overrides(n, plan.chosen);
    return plan;
}

OverrideMap build_overrides(int n, const std::vector<BitWord>& chosen) {
    OverrideMap overrides;
    overrides.reserve(chosen.size() * 9);
    for (const BitWord& x : chosen) {
        detail::check_arg(x.size() == 2 * n, "build_overrides: word length mismatch");
        GluingCycle g = gluing_cycle(x);
        const Triple& y = g.footprint[0];
        const Triple& z = g.footprint[7];
        const Triple& fz = g.footprint[8];

        // Toggled edges: (y,f(y)), (f^6,f^5), (z,f(z)) leave the cycle;
        // (f(y),f^6), (f^5,z), (f(z),y) replace them. Everything else keeps
        // its factor neighbors.
        std::array<std::array<Triple, 2>, 9> nbrs;
        nbrs[0] = {factor_prev(y), fz};                      // y
        nbrs[1] = {g.footprint[2], g.footprint[6]};          // f(y)
        nbrs[2] = {g.footprint[1], g.footprint[3]};          // f^2(y)
        nbrs[3] = {g.footprint[2], g.footprint[4]};          // f^3(y)
        nbrs[4] = {g.footprint[3], g.footprint[5]};          // f^4(y)
        nbrs[5] = {g.footprint[4], z};                       // f^5(y)
        nbrs[6] = {g.footprint[1], factor_next(g.footprint[6])}; // f^6(y)
        nbrs[7] = {factor_prev(z), g.footprint[5]};          // z
        nbrs[8] = {factor_next(fz), y};                      // f(z)

        for (int i = 0; i < 9; ++i) {
            OverrideEntry entry;
            for (int k = 0; k < 2; ++k) {
                const Triple& nb = nbrs[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
                entry.nbr[static_cast<std::size_t>(k)] = OverrideNeighbor{triple_encode(nb), nb};
            }
            detail::check_internal(entry.nbr[0].word != entry.nbr[1].word,
                                   "build_overrides: degenerate neighbor pair");
            if (entry.nbr[1].word < entry.nbr[0].word) std::swap(entry.nbr[0], entry.nbr[1]);
            auto [it, inserted] =
                overrides.emplace(g.footprint_words[static_cast<std::size_t>(i)], std::move(entry));
            (void)it;
            detail::check_internal(inserted, "build_overrides: footprints overlap");
        }
    }
    return overrides;
}

void save_plan(const GluingPlan& plan, std::ostream& out) {
    out << "mlham-plan v1 n=" << plan.n << "\n";
    for (const BitWord& w : plan.chosen) out << w.str() << "\n";
}

GluingPlan load_plan(std::istream& in) {
    std::string header;
    detail::check_arg(static_cast<bool>(std::getline(in, header)), "plan cache: missing header");
    int n = 0;
    {
        std::istringstream hs(header);
        std::string magic, version, nfield;
        hs >> magic >> version >> nfield;
        detail::check_arg(magic == "mlham-plan" && version == "v1" && nfield.rfind("n=", 0) == 0,
                          "plan cache: bad header");
        try {
            n = std::stoi(nfield.substr(2));
        } catch (const std::exception&) {
            throw std::invalid_argument("plan cache: bad n field");
        }
        detail::check_arg(n >= 1, "plan cache: n must be >= 1");
    }

    GluingPlan plan;
    plan.n = n;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        BitWord w = BitWord::parse(line);
        detail::check_arg(w.size() == 2 * n, "plan cache: word length mismatch");
        detail::check_arg(is_pullable(w), "plan cache: word is not pullable");
        plan.chosen.push_back(std::move(w));
    }
    std::sort(plan.chosen.begin(), plan.chosen.end());
    detail::check_arg(std::adjacent_find(plan.chosen.begin(), plan.chosen.end()) == plan.chosen.end(),
                      "plan cache: duplicate word");

    const std::vector<FactorCycle> classes = enumerate_classes(n);
    detail::check_arg(plan.chosen.size() + 1 == classes.size(),
                      "plan cache: chosen count is not #classes - 1");
    const auto index = class_index_of(classes);
    UnionFind uf(classes.size());
    for (const BitWord& w : plan.chosen) {
        int a = index.at(rotation_orbit(w).canonical);
        int b = index.at(rotation_orbit(pull(w)).canonical);
        detail::check_arg(uf.unite(a, b), "plan cache: pulls do not form a spanning tree");
    }
    try {
        plan.overrides = build_overrides(n, plan.chosen);
    } catch (const std::logic_error& e) {
        throw std::invalid_argument(std::string("plan cache: ") + e.what());
    }
    return plan;
}

} // namespace mlham
