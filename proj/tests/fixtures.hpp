#pragma once

// Named posets and brute-force oracles shared by the test suites. Nothing here
// calls the library algorithms it is used to check.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

#include <irank/irank.hpp>

namespace irank::test {

// BOT < x < y < TOP, BOT < z < TOP.
inline Poset n5() {
    return Poset::from_relation(5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}}, {"BOT", "x", "y", "z", "TOP"});
}

inline Poset diamond() {
    return Poset::from_relation(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}, {"BOT", "a", "b", "TOP"});
}

// Subsets of {0..k-1} ordered by inclusion; element i is the bit mask i.
inline Poset boolean_lattice(std::size_t k) {
    const std::size_t n = std::size_t{1} << k;
    std::vector<ElementPair> g;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (a != b && (a & b) == a) {
                g.emplace_back(a, b);
            }
        }
    }
    return Poset::from_relation(n, g);
}

// BOT, k pairwise incomparable atoms, TOP.
inline Poset bounded_antichain(std::size_t k) { return add_bounds(Poset::antichain(k)); }

// ---- oracles -----------------------------------------------------------------

inline bool is_partial_order(const Poset& p) {
    const std::size_t n = p.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (!p.leq(i, i)) {
            return false;
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j && p.leq(i, j) && p.leq(j, i)) {
                return false;
            }
            for (std::size_t k = 0; k < n; ++k) {
                if (p.leq(i, j) && p.leq(j, k) && !p.leq(i, k)) {
                    return false;
                }
            }
        }
    }
    return true;
}

// Largest antichain by checking every subset.
inline std::size_t brute_width(const Poset& p) {
    const std::size_t n = p.size();
    std::size_t best = 0;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        bool antichain = true;
        for (std::size_t i = 0; i < n && antichain; ++i) {
            for (std::size_t j = i + 1; j < n && antichain; ++j) {
                if ((mask >> i & 1) && (mask >> j & 1) && p.comparable(i, j)) {
                    antichain = false;
                }
            }
        }
        if (antichain) {
            best = std::max<std::size_t>(best, static_cast<std::size_t>(std::popcount(mask)));
        }
    }
    return best;
}

// Largest chain by checking every subset.
inline std::size_t brute_height(const Poset& p) {
    const std::size_t n = p.size();
    std::size_t best = 0;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        bool chain = true;
        for (std::size_t i = 0; i < n && chain; ++i) {
            for (std::size_t j = i + 1; j < n && chain; ++j) {
                if ((mask >> i & 1) && (mask >> j & 1) && !p.comparable(i, j)) {
                    chain = false;
                }
            }
        }
        if (chain) {
            best = std::max<std::size_t>(best, static_cast<std::size_t>(std::popcount(mask)));
        }
    }
    return best;
}

// Sizes of all maximal chains, found as inclusion-maximal pairwise-comparable subsets.
inline std::vector<std::size_t> brute_maximal_chain_sizes(const Poset& p) {
    const std::size_t n = p.size();
    std::vector<std::uint64_t> chains;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        bool chain = true;
        for (std::size_t i = 0; i < n && chain; ++i) {
            for (std::size_t j = i + 1; j < n && chain; ++j) {
                if ((mask >> i & 1) && (mask >> j & 1) && !p.comparable(i, j)) {
                    chain = false;
                }
            }
        }
        if (chain) {
            chains.push_back(mask);
        }
    }
    std::vector<std::size_t> sizes;
    for (auto c : chains) {
        bool maximal = std::none_of(chains.begin(), chains.end(), [&](auto d) { return d != c && (c & d) == c; });
        if (maximal) {
            sizes.push_back(static_cast<std::size_t>(std::popcount(c)));
        }
    }
    return sizes;
}

// Height of the subset {b : pred(b)} via subset enumeration.
template <typename Pred>
inline std::size_t brute_height_of(const Poset& p, Pred pred) {
    std::vector<Element> members;
    for (Element b = 0; b < p.size(); ++b) {
        if (pred(b)) {
            members.push_back(b);
        }
    }
    std::size_t best = 0;
    const std::size_t m = members.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
        bool chain = true;
        for (std::size_t i = 0; i < m && chain; ++i) {
            for (std::size_t j = i + 1; j < m && chain; ++j) {
                if ((mask >> i & 1) && (mask >> j & 1) && !p.comparable(members[i], members[j])) {
                    chain = false;
                }
            }
        }
        if (chain) {
            best = std::max<std::size_t>(best, static_cast<std::size_t>(std::popcount(mask)));
        }
    }
    return best;
}

// Definitional R+: heights of principal filters/ideals by brute force.
inline std::vector<IntInterval> brute_standard_rank(const Poset& p) {
    const long h = static_cast<long>(brute_height(p));
    std::vector<IntInterval> r;
    for (Element a = 0; a < p.size(); ++a) {
        const long up = static_cast<long>(brute_height_of(p, [&](Element b) { return p.leq(a, b); }));
        const long down = static_cast<long>(brute_height_of(p, [&](Element b) { return p.leq(b, a); }));
        r.emplace_back(up - 1, h - down);
    }
    return r;
}

// Isomorphism by trying every permutation (n <= 8).
inline bool brute_isomorphic(const Poset& p, const Poset& q) {
    if (p.size() != q.size()) {
        return false;
    }
    std::vector<std::size_t> perm(p.size());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    do {
        bool same = true;
        for (std::size_t i = 0; i < p.size() && same; ++i) {
            for (std::size_t j = 0; j < p.size() && same; ++j) {
                same = p.leq(i, j) == q.leq(perm[i], perm[j]);
            }
        }
        if (same) {
            return true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// Applies a relabeling: element i of p becomes element perm[i].
inline Poset permuted(const Poset& p, const std::vector<std::size_t>& perm) {
    BitMatrix m(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = 0; j < p.size(); ++j) {
            if (p.leq(i, j)) {
                m.set(perm[i], perm[j]);
            }
        }
    }
    return Poset::from_matrix(std::move(m));
}

// Every labeled poset on n elements (n <= 5), by filtering all strict relation matrices.
inline std::vector<Poset> all_labeled_posets(std::size_t n) {
    std::vector<ElementPair> off;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j) {
                off.emplace_back(i, j);
            }
        }
    }
    std::vector<Poset> out;
    std::vector<char> rel(n * n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << off.size()); ++mask) {
        std::fill(rel.begin(), rel.end(), 0);
        for (std::size_t i = 0; i < n; ++i) {
            rel[i * n + i] = 1;
        }
        for (std::size_t e = 0; e < off.size(); ++e) {
            if (mask >> e & 1) {
                rel[off[e].first * n + off[e].second] = 1;
            }
        }
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
            for (std::size_t j = 0; j < n && ok; ++j) {
                if (i != j && rel[i * n + j] && rel[j * n + i]) {
                    ok = false;
                }
                for (std::size_t k = 0; k < n && ok; ++k) {
                    if (rel[i * n + j] && rel[j * n + k] && !rel[i * n + k]) {
                        ok = false;
                    }
                }
            }
        }
        if (ok) {
            BitMatrix m(n);
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    m.set(i, j, rel[i * n + j]);
                }
            }
            out.push_back(Poset::from_matrix(std::move(m)));
        }
    }
    return out;
}

// Every strict interval rank function with values in [0, bound] whose endpoint maps are
// strictly monotone in the given directions along a < b:
//   lo_down: lo(a) > lo(b) (else lo(a) < lo(b)); hi_down likewise.
// Assignments are built in a linear extension and pruned against placed elements.
inline std::vector<std::vector<IntInterval>> brute_strict_rank_functions(const Poset& p, long bound, bool lo_down,
                                                                         bool hi_down) {
    const std::size_t n = p.size();
    std::vector<Element> order(n);
    std::iota(order.begin(), order.end(), Element{0});
    std::sort(order.begin(), order.end(), [&](Element a, Element b) { return p.down_count(a) < p.down_count(b); });

    std::vector<std::vector<IntInterval>> out;
    std::vector<IntInterval> value(n);
    std::vector<char> placed(n, 0);
    auto fits = [&](Element a, const IntInterval& x) {
        for (Element b = 0; b < n; ++b) {
            if (!placed[b] || b == a) {
                continue;
            }
            const IntInterval& y = value[b];
            if (p.lt(b, a)) {  // b < a
                if (lo_down ? !(y.lo() > x.lo()) : !(y.lo() < x.lo())) {
                    return false;
                }
                if (hi_down ? !(y.hi() > x.hi()) : !(y.hi() < x.hi())) {
                    return false;
                }
            } else if (p.lt(a, b)) {
                if (lo_down ? !(x.lo() > y.lo()) : !(x.lo() < y.lo())) {
                    return false;
                }
                if (hi_down ? !(x.hi() > y.hi()) : !(x.hi() < y.hi())) {
                    return false;
                }
            }
        }
        return true;
    };
    auto walk = [&](auto&& self, std::size_t k) -> void {
        if (k == n) {
            out.push_back(value);
            return;
        }
        const Element a = order[k];
        for (long lo = 0; lo <= bound; ++lo) {
            for (long hi = lo; hi <= bound; ++hi) {
                const IntInterval x(lo, hi);
                if (fits(a, x)) {
                    value[a] = x;
                    placed[a] = 1;
                    self(self, k + 1);
                    placed[a] = 0;
                }
            }
        }
    };
    walk(walk, 0);
    return out;
}

} // namespace irank::test
