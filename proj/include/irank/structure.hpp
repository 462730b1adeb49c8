#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

#include "poset.hpp"

namespace irank {

// Longest-chain data for every element.
//   up[a]   = height of the up-set of a
//   down[a] = height of the down-set of a
struct HeightProfile {
    std::vector<std::size_t> up;
    std::vector<std::size_t> down;
    std::size_t height = 0;
};

// Elements sorted so that a < b implies a precedes b.
inline std::vector<Element> linear_extension(const Poset& p) {
    std::vector<Element> order(p.size());
    std::iota(order.begin(), order.end(), Element{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](Element a, Element b) { return p.down_count(a) < p.down_count(b); });
    return order;
}

inline HeightProfile height_profile(const Poset& p) {
    const std::size_t n = p.size();
    HeightProfile h;
    h.up.assign(n, 1);
    h.down.assign(n, 1);
    const auto order = linear_extension(p);
    for (Element a : order) {
        p.for_each_below(a, [&](Element b) {
            if (b != a) {
                h.down[a] = std::max(h.down[a], h.down[b] + 1);
            }
        });
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const Element a = *it;
        p.for_each_above(a, [&](Element b) {
            if (b != a) {
                h.up[a] = std::max(h.up[a], h.up[b] + 1);
            }
        });
    }
    for (Element a = 0; a < n; ++a) {
        h.height = std::max(h.height, h.down[a]);
    }
    return h;
}

inline std::size_t height(const Poset& p) { return height_profile(p).height; }

// Longest chain inside the subset, using the parent's order.
inline std::size_t height(const SubsetView& q) {
    const Poset& p = *q.parent;
    std::vector<Element> order = q.members;
    std::stable_sort(order.begin(), order.end(),
                     [&](Element a, Element b) { return p.down_count(a) < p.down_count(b); });
    std::vector<std::size_t> best(p.size(), 0);
    std::size_t h = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        const Element a = order[i];
        std::size_t len = 1;
        for (std::size_t j = 0; j < i; ++j) {
            if (p.lt(order[j], a)) {
                len = std::max(len, best[order[j]] + 1);
            }
        }
        best[a] = len;
        h = std::max(h, len);
    }
    return h;
}

// Maximum antichain size via Dilworth: n minus a maximum matching in the
// bipartite split graph with an edge a -> b for every a < b.
inline std::size_t width(const Poset& p) {
    const std::size_t n = p.size();
    std::vector<std::ptrdiff_t> match_right(n, -1);
    std::vector<char> seen;

    auto augment = [&](auto&& self, Element a) -> bool {
        bool found = false;
        p.for_each_above(a, [&](Element b) {
            if (found || b == a || seen[b]) {
                return;
            }
            seen[b] = 1;
            if (match_right[b] < 0 || self(self, static_cast<Element>(match_right[b]))) {
                match_right[b] = static_cast<std::ptrdiff_t>(a);
                found = true;
            }
        });
        return found;
    };

    std::size_t matching = 0;
    for (Element a = 0; a < n; ++a) {
        seen.assign(n, 0);
        if (augment(augment, a)) {
            ++matching;
        }
    }
    return n - matching;
}

using Chain = std::vector<Element>;

// All maximal chains, each listed bottom to top. Exponential in general.
inline std::vector<Chain> maximal_chains(const Poset& p) {
    const auto cov = covers(p);
    std::vector<std::vector<Element>> up_covers(p.size());
    for (const auto& [a, b] : cov.pairs) {
        up_covers[a].push_back(b);
    }
    std::vector<Chain> out;
    Chain current;
    auto walk = [&](auto&& self, Element a) -> void {
        current.push_back(a);
        if (up_covers[a].empty()) {
            out.push_back(current);
        } else {
            for (Element b : up_covers[a]) {
                self(self, b);
            }
        }
        current.pop_back();
    };
    for (Element a : minimal_elements(p)) {
        walk(walk, a);
    }
    return out;
}

inline std::vector<Chain> spindle_chains(const Poset& p) {
    const std::size_t h = height(p);
    auto chains = maximal_chains(p);
    std::erase_if(chains, [&](const Chain& c) { return c.size() != h; });
    return chains;
}

// S(a) = height(up a) + height(down a) - 1: the longest chain through a.
inline std::size_t spindle_length(const Poset& p, Element a) {
    return height(upset(p, a)) + height(downset(p, a)) - 1;
}

// Elements lying on some maximum-length chain.
inline std::vector<Element> spindle_elements(const Poset& p) {
    const auto h = height_profile(p);
    std::vector<Element> out;
    for (Element a = 0; a < p.size(); ++a) {
        if (h.up[a] + h.down[a] - 1 == h.height) {
            out.push_back(a);
        }
    }
    return out;
}

// Labels rho(a) = height(up a) - 1 and checks rho(a) = rho(b) + 1 on every cover a < b.
inline bool is_graded(const Poset& p) {
    if (!top(p)) {
        throw UnboundedError("is_graded requires a top element");
    }
    const auto h = height_profile(p);
    for (const auto& [a, b] : covers(p).pairs) {
        if (h.up[a] != h.up[b] + 1) {
            return false;
        }
    }
    return true;
}

} // namespace irank
