#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <tuple>
#include <vector>

#include "poset.hpp"
#include "structure.hpp"

namespace irank {

// Relabeling-invariant encoding of a poset: the relation matrix, row-major,
// under the canonical element order. Equal forms <=> isomorphic posets.
struct CanonicalForm {
    std::size_t n = 0;
    std::vector<std::uint64_t> bits;

    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalFormHash {
    std::size_t operator()(const CanonicalForm& f) const noexcept {
        std::size_t h = std::hash<std::size_t>{}(f.n);
        for (auto w : f.bits) {
            h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};

struct CanonicalLabeling {
    CanonicalForm form;
    // order[k] is the element placed at canonical position k.
    std::vector<Element> order;
};

namespace detail {

using Partition = std::vector<std::vector<Element>>;

// Splits cells by (cell, #strict-below per cell, #strict-above per cell) until stable.
// Cell order depends only on structure, so isomorphic inputs refine identically.
inline Partition refine(const Poset& p, Partition cells) {
    const std::size_t n = p.size();
    std::vector<std::size_t> cell_of(n);
    while (true) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
            for (Element a : cells[c]) {
                cell_of[a] = c;
            }
        }
        Partition next;
        next.reserve(n);
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (cells[c].size() == 1) {
                next.push_back(cells[c]);
                continue;
            }
            std::map<std::vector<std::size_t>, std::vector<Element>> split;
            for (Element a : cells[c]) {
                std::vector<std::size_t> sig(2 * cells.size(), 0);
                p.for_each_below(a, [&](Element b) {
                    if (b != a) {
                        ++sig[cell_of[b]];
                    }
                });
                p.for_each_above(a, [&](Element b) {
                    if (b != a) {
                        ++sig[cells.size() + cell_of[b]];
                    }
                });
                split[sig].push_back(a);
            }
            for (auto& [sig, members] : split) {
                next.push_back(std::move(members));
            }
        }
        if (next.size() == cells.size()) {
            return next;
        }
        cells = std::move(next);
    }
}

// Incomparable elements with identical strict up- and down-sets; swapping them is an automorphism.
inline bool twins(const Poset& p, Element a, Element b) {
    if (p.comparable(a, b)) {
        return false;
    }
    for (Element c = 0; c < p.size(); ++c) {
        if (c == a || c == b) {
            continue;
        }
        if (p.leq(a, c) != p.leq(b, c) || p.leq(c, a) != p.leq(c, b)) {
            return false;
        }
    }
    return true;
}

inline CanonicalForm encode(const Poset& p, const std::vector<Element>& order) {
    const std::size_t n = p.size();
    CanonicalForm f{n, std::vector<std::uint64_t>((n * n + 63) / 64, 0)};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (p.leq(order[i], order[j])) {
                const std::size_t bit = i * n + j;
                // Most significant first so lexicographic word order matches bit order.
                f.bits[bit / 64] |= std::uint64_t{1} << (63 - bit % 64);
            }
        }
    }
    return f;
}

inline Partition initial_partition(const Poset& p) {
    const auto h = height_profile(p);
    const auto cov = covers(p);
    std::vector<std::size_t> in_deg(p.size(), 0), out_deg(p.size(), 0);
    for (const auto& [a, b] : cov.pairs) {
        ++out_deg[a];
        ++in_deg[b];
    }
    using Key = std::tuple<std::size_t, std::size_t, std::size_t, std::size_t, std::size_t, std::size_t>;
    std::map<Key, std::vector<Element>> cells;
    for (Element a = 0; a < p.size(); ++a) {
        cells[Key{h.down[a], h.up[a], p.down_count(a), p.up_count(a), in_deg[a], out_deg[a]}].push_back(a);
    }
    Partition out;
    for (auto& [k, members] : cells) {
        out.push_back(std::move(members));
    }
    return out;
}

} // namespace detail

// Individualization-refinement search: invariant cells (heights, degrees), refined
// by neighbour counts; the canonical form is the minimum encoding over all leaves.
// Twin elements are branched on once.
inline CanonicalLabeling canonical_labeling(const Poset& p) {
    CanonicalLabeling best;
    bool have_best = false;
    if (p.size() == 0) {
        return best;
    }

    auto search = [&](auto&& self, const detail::Partition& cells) -> void {
        auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
        if (target == cells.end()) {
            std::vector<Element> order;
            order.reserve(p.size());
            for (const auto& c : cells) {
                order.push_back(c.front());
            }
            auto form = detail::encode(p, order);
            if (!have_best || form < best.form) {
                best.form = std::move(form);
                best.order = std::move(order);
                have_best = true;
            }
            return;
        }
        const auto index = static_cast<std::size_t>(target - cells.begin());
        std::vector<Element> tried;
        for (Element v : *target) {
            bool redundant = std::any_of(tried.begin(), tried.end(),
                                         [&](Element u) { return detail::twins(p, u, v); });
            if (redundant) {
                continue;
            }
            tried.push_back(v);
            detail::Partition next;
            next.reserve(cells.size() + 1);
            next.insert(next.end(), cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(index));
            next.push_back({v});
            std::vector<Element> rest;
            for (Element u : *target) {
                if (u != v) {
                    rest.push_back(u);
                }
            }
            next.push_back(std::move(rest));
            next.insert(next.end(), cells.begin() + static_cast<std::ptrdiff_t>(index) + 1, cells.end());
            self(self, detail::refine(p, std::move(next)));
        }
    };

    search(search, detail::refine(p, detail::initial_partition(p)));
    return best;
}

inline CanonicalForm canonical_form(const Poset& p) { return canonical_labeling(p).form; }

inline bool is_isomorphic(const Poset& p, const Poset& q) {
    return p.size() == q.size() && p.relation_count() == q.relation_count() &&
           canonical_form(p) == canonical_form(q);
}

// Relabels p into canonical element order, keeping the original labels.
inline Poset canonical_relabel(const Poset& p) {
    const auto lab = canonical_labeling(p);
    const std::size_t n = p.size();
    BitMatrix m(n);
    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < n; ++i) {
        labels[i] = p.label(lab.order[i]);
        for (std::size_t j = 0; j < n; ++j) {
            if (p.leq(lab.order[i], lab.order[j])) {
                m.set(i, j);
            }
        }
    }
    return Poset::from_matrix(std::move(m), std::move(labels));
}

} // namespace irank
