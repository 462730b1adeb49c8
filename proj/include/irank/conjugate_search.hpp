#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "interval.hpp"

namespace irank {

struct ConjugateSearchOptions {
    std::optional<std::size_t> limit;
    // Largest ground set searched before BudgetExceeded is raised.
    std::size_t max_ground = 12;
};

namespace detail {

// Enumerates transitive orientations of an undirected graph by backtracking.
// Orienting x -> y forces:
//   y -> z known          => x -> z (z must be adjacent to x)
//   z -> x known          => z -> y (z must be adjacent to y)
//   z ~ y, z not ~ x      => z -> y
//   z ~ x, z not ~ y      => x -> z
class TransitiveOrientationSearch {
public:
    TransitiveOrientationSearch(const BitMatrix& adjacency, std::optional<std::size_t> limit)
        : adj_(adjacency), limit_(limit) {}

    std::vector<std::vector<ElementPair>> run() {
        BitMatrix oriented(adj_.size());
        recurse(std::move(oriented));
        return std::move(found_);
    }

private:
    bool done() const { return limit_ && found_.size() >= *limit_; }

    bool assign(BitMatrix& o, Element x, Element y) const {
        std::vector<ElementPair> queue{{x, y}};
        auto force = [&](Element a, Element b) {
            if (o.test(b, a)) {
                return false;
            }
            if (!o.test(a, b)) {
                o.set(a, b);
                queue.emplace_back(a, b);
            }
            return true;
        };
        if (o.test(y, x)) {
            return false;
        }
        if (o.test(x, y)) {
            return true;
        }
        o.set(x, y);
        const std::size_t n = adj_.size();
        while (!queue.empty()) {
            const auto [a, b] = queue.back();
            queue.pop_back();
            for (Element z = 0; z < n; ++z) {
                if (z == a || z == b) {
                    continue;
                }
                if (o.test(b, z)) {
                    if (!adj_.test(a, z) || !force(a, z)) {
                        return false;
                    }
                }
                if (o.test(z, a)) {
                    if (!adj_.test(z, b) || !force(z, b)) {
                        return false;
                    }
                }
                if (adj_.test(b, z) && !adj_.test(a, z) && !force(z, b)) {
                    return false;
                }
                if (adj_.test(a, z) && !adj_.test(b, z) && !force(a, z)) {
                    return false;
                }
            }
        }
        return true;
    }

    std::optional<ElementPair> next_free(const BitMatrix& o) const {
        const std::size_t n = adj_.size();
        for (Element i = 0; i < n; ++i) {
            for (Element j = i + 1; j < n; ++j) {
                if (adj_.test(i, j) && !o.test(i, j) && !o.test(j, i)) {
                    return ElementPair{i, j};
                }
            }
        }
        return std::nullopt;
    }

    void recurse(BitMatrix o) {
        if (done()) {
            return;
        }
        const auto edge = next_free(o);
        if (!edge) {
            std::vector<ElementPair> pairs;
            const std::size_t n = o.size();
            for (Element i = 0; i < n; ++i) {
                o.for_each_in_row(i, [&](Element j) { pairs.emplace_back(i, j); });
            }
            found_.push_back(std::move(pairs));
            return;
        }
        for (const auto& [a, b] : {*edge, ElementPair{edge->second, edge->first}}) {
            BitMatrix branch = o;
            if (assign(branch, a, b)) {
                recurse(std::move(branch));
            }
            if (done()) {
                return;
            }
        }
    }

    const BitMatrix& adj_;
    std::optional<std::size_t> limit_;
    std::vector<std::vector<ElementPair>> found_;
};

} // namespace detail

// Partial orders on all_intervals(lo_min, hi_max) whose comparability graph is the
// complement of the strong order's, i.e. the interval-overlap graph.
inline std::vector<OrderRelationTable> find_conjugates_of_strong(long lo_min, long hi_max,
                                                                 const ConjugateSearchOptions& opts = {}) {
    const auto ground = all_intervals(lo_min, hi_max);
    if (ground.size() > opts.max_ground) {
        throw BudgetExceeded("conjugate search over " + std::to_string(ground.size()) +
                             " intervals exceeds the budget of " + std::to_string(opts.max_ground));
    }
    const std::size_t n = ground.size();
    BitMatrix overlap(n);
    for (Element i = 0; i < n; ++i) {
        for (Element j = 0; j < n; ++j) {
            if (i != j && !leq_strong(ground[i], ground[j]) && !leq_strong(ground[j], ground[i])) {
                overlap.set(i, j);
            }
        }
    }
    detail::TransitiveOrientationSearch search(overlap, opts.limit);
    std::vector<OrderRelationTable> out;
    for (const auto& pairs : search.run()) {
        out.push_back(order_table_from_pairs(ground, pairs));
    }
    return out;
}

} // namespace irank
