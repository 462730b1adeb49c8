#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <vector>

#include "rank.hpp"
#include "rational.hpp"

namespace irank {

// Homomorphic image of a poset under an interval rank function: the distinct
// rank intervals ordered by an interval order, plus which source elements
// collapsed onto each interval.
struct RankPoset {
    std::vector<IntInterval> intervals;
    Poset order;
    // blocks[a] is the index in `intervals` of the source element a's rank.
    std::vector<std::size_t> blocks;

    std::size_t size() const { return intervals.size(); }

    // Source elements grouped by image element.
    std::vector<std::vector<Element>> block_members() const {
        std::vector<std::vector<Element>> out(intervals.size());
        for (Element a = 0; a < blocks.size(); ++a) {
            out[blocks[a]].push_back(a);
        }
        return out;
    }
};

// Image of `f` ordered by `order`. Intervals are listed in descending (lo, hi) order.
inline RankPoset image_of(const RankAssignment& f, IntervalOrder order) {
    std::vector<IntInterval> distinct = f.ranks;
    std::sort(distinct.begin(), distinct.end(), std::greater<>{});
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

    RankPoset img;
    img.intervals = distinct;
    img.order = interval_poset(distinct, order);
    img.blocks.reserve(f.ranks.size());
    for (const auto& x : f.ranks) {
        auto it = std::lower_bound(distinct.begin(), distinct.end(), x, std::greater<>{});
        img.blocks.push_back(static_cast<std::size_t>(it - distinct.begin()));
    }
    return img;
}

// Interval rank poset: distinct R+ values under the dual weak order.
inline RankPoset rank_image(const Poset& p) { return image_of(standard_rank(p), IntervalOrder::dual_weak); }

// Distinct conjugate ranks ordered by containment.
inline RankPoset conjugate_image(const Poset& p) { return image_of(conjugate_rank(p), IntervalOrder::subset); }

// [x, y] -> [x, 2(h-1) - y]: carries the interval rank poset onto the conjugate image.
inline IntInterval phi(const IntInterval& x, long height) {
    const long hi = 2 * (height - 1) - x.hi();
    if (hi < x.lo()) {
        throw RangeError("phi(" + x.str() + ", h=" + std::to_string(height) + ") is not an interval");
    }
    return IntInterval(x.lo(), hi);
}

// Same elements; p < q iff R+(p) >_W R+(q) strictly. Equal ranks stay incomparable.
inline Poset rank_all(const Poset& p) {
    const auto r = standard_rank(p);
    const std::size_t n = p.size();
    BitMatrix m(n);
    for (Element a = 0; a < n; ++a) {
        for (Element b = 0; b < n; ++b) {
            if (a == b || compare_strict(IntervalOrder::dual_weak, r[a], r[b])) {
                m.set(a, b);
            }
        }
    }
    return Poset::from_matrix(std::move(m), p.labels());
}

struct IterationTrace {
    // stages[k] is the image after k + 1 applications of rank_image.
    std::vector<RankPoset> stages;
    std::size_t iterations_to_chain = 0;
    // Ordered partition of the source elements, top level first.
    std::vector<std::vector<Element>> preorder_levels;

    std::size_t final_chain_size() const { return preorder_levels.size(); }
};

// Applies rank_image until the current poset is a chain. A chain input takes 0 iterations.
inline IterationTrace iterate_to_chain(const Poset& p) {
    detail::require_rankable(p);
    IterationTrace trace;
    const std::size_t n = p.size();
    std::vector<std::size_t> block_of(n);
    for (Element a = 0; a < n; ++a) {
        block_of[a] = a;
    }
    const Poset* current = &p;
    while (!is_chain(*current)) {
        if (trace.iterations_to_chain == n) {
            throw CapExceeded("no chain after " + std::to_string(n) + " iterations");
        }
        trace.stages.push_back(rank_image(*current));
        ++trace.iterations_to_chain;
        const RankPoset& stage = trace.stages.back();
        for (auto& b : block_of) {
            b = stage.blocks[b];
        }
        current = &stage.order;
    }

    // In a chain the element with k elements above it sits at level k - 1.
    const Poset& chain = *current;
    trace.preorder_levels.assign(chain.size(), {});
    for (Element a = 0; a < n; ++a) {
        trace.preorder_levels[chain.up_count(block_of[a]) - 1].push_back(a);
    }
    return trace;
}

inline std::vector<std::vector<Element>> total_preorder(const Poset& p) {
    return iterate_to_chain(p).preorder_levels;
}

// Mean of hi - lo over the standard interval ranks.
inline Rational average_rank_width(const Poset& p) {
    const auto r = standard_rank(p);
    std::int64_t total = 0;
    for (const auto& x : r.ranks) {
        total += x.width();
    }
    return Rational(total, static_cast<std::int64_t>(p.size()));
}

} // namespace irank
