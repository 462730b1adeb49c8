#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <unordered_set>
#include <vector>

#include "canonical.hpp"
#include "poset.hpp"

namespace irank {

inline constexpr std::size_t max_enumeration_size = 7;

namespace detail {

// Down-closed subsets of p as bit masks (n <= 63).
inline std::vector<std::uint64_t> down_closed_sets(const Poset& p) {
    const std::size_t n = p.size();
    std::vector<std::uint64_t> below(n, 0);
    for (Element a = 0; a < n; ++a) {
        p.for_each_below(a, [&](Element b) { below[a] |= std::uint64_t{1} << b; });
    }
    std::vector<std::uint64_t> out;
    const auto order = linear_extension(p);
    // Decide membership in a linear extension order; an element may join only if
    // everything below it already has.
    auto walk = [&](auto&& self, std::size_t k, std::uint64_t set) -> void {
        if (k == n) {
            out.push_back(set);
            return;
        }
        const Element a = order[k];
        self(self, k + 1, set);
        const std::uint64_t strict_below = below[a] & ~(std::uint64_t{1} << a);
        if ((strict_below & set) == strict_below) {
            self(self, k + 1, set | (std::uint64_t{1} << a));
        }
    };
    walk(walk, 0, 0);
    return out;
}

// p plus one new maximal element above exactly the given down-set.
inline Poset extend_with_maximal(const Poset& p, std::uint64_t down) {
    const std::size_t n = p.size();
    BitMatrix m(n + 1);
    for (Element a = 0; a < n; ++a) {
        p.for_each_above(a, [&](Element b) { m.set(a, b); });
        if ((down >> a) & 1u) {
            m.set(a, n);
        }
    }
    m.set(n, n);
    return Poset::from_matrix(std::move(m));
}

} // namespace detail

// One representative per isomorphism class of n-element posets, in canonical
// element order and sorted by canonical form. Every (m+1)-poset arises from an
// m-poset by adding a maximal element over some down-set, so classes are grown
// level by level and deduplicated by canonical form.
inline std::vector<Poset> enumerate_posets(std::size_t n) {
    if (n == 0) {
        throw TooSmall("enumerate_posets needs n >= 1");
    }
    if (n > max_enumeration_size) {
        throw BudgetExceeded("exhaustive enumeration is limited to n <= " + std::to_string(max_enumeration_size));
    }
    std::vector<Poset> level{Poset::antichain(1)};
    for (std::size_t m = 1; m < n; ++m) {
        std::unordered_set<CanonicalForm, CanonicalFormHash> seen;
        std::vector<std::pair<CanonicalForm, Poset>> next;
        for (const auto& p : level) {
            for (std::uint64_t down : detail::down_closed_sets(p)) {
                Poset q = detail::extend_with_maximal(p, down);
                auto lab = canonical_labeling(q);
                if (seen.insert(lab.form).second) {
                    next.emplace_back(std::move(lab.form), canonical_relabel(q));
                }
            }
        }
        std::sort(next.begin(), next.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        level.clear();
        for (auto& [form, q] : next) {
            // Relabel 0..m so labels follow canonical position.
            level.push_back(Poset::from_matrix(q.relation()));
        }
    }
    return level;
}

// enumerate_posets(size - 2), each given a fresh bottom and top.
inline std::vector<Poset> enumerate_bounded_posets(std::size_t size) {
    if (size < 3) {
        throw TooSmall("bounded enumeration starts at size 3");
    }
    if (size > max_enumeration_size + 2) {
        throw BudgetExceeded("bounded enumeration is limited to size <= " + std::to_string(max_enumeration_size + 2));
    }
    std::vector<Poset> out;
    for (const auto& core : enumerate_posets(size - 2)) {
        out.push_back(add_bounds(core));
    }
    return out;
}

enum class GenModel { exhaustive, random_graph, random_kdim };

struct GenConfig {
    GenModel model = GenModel::random_graph;
    std::size_t n = 10;
    double p = 0.5;
    std::size_t k = 3;
    std::uint64_t seed = 0;
    bool add_bounds = true;
};

// Portable randomness. The engine is std::mt19937_64, whose output sequence is
// fixed by the C++ standard. Library distributions are implementation-defined,
// so they are replaced by:
//   uniform01()     : top 53 bits of one draw, scaled by 2^-53
//   below(bound)    : rejection sampling on the largest multiple of bound
//   permutation(n)  : Fisher-Yates, i from n-1 down to 1, j = below(i + 1)
class PortableRng {
public:
    explicit PortableRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform01() < p; }

    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % bound;
    }

    std::vector<std::size_t> permutation(std::size_t n) {
        std::vector<std::size_t> perm(n);
        for (std::size_t i = 0; i < n; ++i) {
            perm[i] = i;
        }
        for (std::size_t i = n; i-- > 1;) {
            std::swap(perm[i], perm[below(i + 1)]);
        }
        return perm;
    }

private:
    std::mt19937_64 engine_;
};

namespace detail {

inline void check_probability(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw RangeError("edge probability must lie in [0, 1]");
    }
}

inline Poset finish(Poset core, const GenConfig& cfg) { return cfg.add_bounds ? add_bounds(core) : core; }

} // namespace detail

// G(n, p) with every edge directed from the smaller label to the larger, then closed.
inline Poset random_graph_poset(const GenConfig& cfg) {
    detail::check_probability(cfg.p);
    PortableRng rng(cfg.seed);
    std::vector<ElementPair> edges;
    for (Element i = 0; i < cfg.n; ++i) {
        for (Element j = i + 1; j < cfg.n; ++j) {
            if (rng.bernoulli(cfg.p)) {
                edges.emplace_back(i, j);
            }
        }
    }
    return detail::finish(Poset::from_relation(cfg.n, edges), cfg);
}

// perms[t][i] is the element at position i of the t-th linear order.
inline std::vector<std::vector<std::size_t>> sample_permutations(const GenConfig& cfg) {
    PortableRng rng(cfg.seed);
    std::vector<std::vector<std::size_t>> perms;
    for (std::size_t t = 0; t < cfg.k; ++t) {
        perms.push_back(rng.permutation(cfg.n));
    }
    return perms;
}

// a <= b iff a precedes-or-equals b in every linear order.
inline Poset intersect_linear_orders(std::size_t n, const std::vector<std::vector<std::size_t>>& perms) {
    std::vector<std::vector<std::size_t>> position;
    for (const auto& perm : perms) {
        std::vector<std::size_t> pos(n);
        for (std::size_t i = 0; i < n; ++i) {
            pos[perm[i]] = i;
        }
        position.push_back(std::move(pos));
    }
    BitMatrix m(n);
    for (Element a = 0; a < n; ++a) {
        for (Element b = 0; b < n; ++b) {
            const bool below_everywhere = std::all_of(position.begin(), position.end(),
                                                      [&](const auto& pos) { return pos[a] <= pos[b]; });
            if (below_everywhere) {
                m.set(a, b);
            }
        }
    }
    return Poset::from_matrix(std::move(m));
}

inline Poset random_kdim_poset(const GenConfig& cfg) {
    if (cfg.k == 0) {
        throw RangeError("random k-dimensional model needs k >= 1");
    }
    return detail::finish(intersect_linear_orders(cfg.n, sample_permutations(cfg)), cfg);
}

inline Poset random_poset(const GenConfig& cfg) {
    switch (cfg.model) {
    case GenModel::random_graph:
        return random_graph_poset(cfg);
    case GenModel::random_kdim:
        return random_kdim_poset(cfg);
    case GenModel::exhaustive:
        break;
    }
    throw DomainError("random_poset called with the exhaustive model");
}

// `count` posets with seeds cfg.seed + i.
inline std::vector<Poset> random_corpus(GenConfig cfg, std::size_t count) {
    std::vector<Poset> out;
    out.reserve(count);
    const std::uint64_t base = cfg.seed;
    for (std::size_t i = 0; i < count; ++i) {
        cfg.seed = base + i;
        out.push_back(random_poset(cfg));
    }
    return out;
}

} // namespace irank
