#include <gtest/gtest.h>

#include <set>

#include "fixtures.hpp"

using namespace irank;

namespace {

bool overlap(const IntInterval& x, const IntInterval& y) { return !(x.hi() < y.lo() || y.hi() < x.lo()); }

// Every transitive orientation of the overlap graph on `g`, as sorted lists of
// strict pairs, found by trying all 2^E orientations.
std::set<std::vector<ElementPair>> brute_orientations(const std::vector<IntInterval>& g) {
    const std::size_t n = g.size();
    std::vector<ElementPair> edges;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (overlap(g[i], g[j])) {
                edges.emplace_back(i, j);
            }
        }
    }
    std::set<std::vector<ElementPair>> out;
    std::vector<char> rel(n * n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges.size()); ++mask) {
        std::fill(rel.begin(), rel.end(), 0);
        for (std::size_t e = 0; e < edges.size(); ++e) {
            auto [a, b] = edges[e];
            if (mask >> e & 1) {
                std::swap(a, b);
            }
            rel[a * n + b] = 1;
        }
        bool transitive = true;
        for (std::size_t a = 0; a < n && transitive; ++a) {
            for (std::size_t b = 0; b < n && transitive; ++b) {
                for (std::size_t c = 0; c < n && transitive; ++c) {
                    if (rel[a * n + b] && rel[b * n + c] && !rel[a * n + c]) {
                        transitive = false;
                    }
                }
            }
        }
        if (transitive) {
            std::vector<ElementPair> pairs;
            for (std::size_t a = 0; a < n; ++a) {
                for (std::size_t b = 0; b < n; ++b) {
                    if (rel[a * n + b]) {
                        pairs.emplace_back(a, b);
                    }
                }
            }
            out.insert(pairs);
        }
    }
    return out;
}

std::set<std::vector<ElementPair>> strict_pairs(const std::vector<OrderRelationTable>& tables) {
    std::set<std::vector<ElementPair>> out;
    for (const auto& t : tables) {
        std::vector<ElementPair> pairs;
        for (std::size_t a = 0; a < t.ground.size(); ++a) {
            for (std::size_t b = 0; b < t.ground.size(); ++b) {
                if (a != b && t.leq(a, b)) {
                    pairs.emplace_back(a, b);
                }
            }
        }
        out.insert(pairs);
    }
    return out;
}

} // namespace

TEST(ConjugateSearch, OneToTwoHasTwo) {
    const auto found = find_conjugates_of_strong(1, 2);
    ASSERT_EQ(found.size(), 2u);
    const auto strong = interval_order_table(all_intervals(1, 2), IntervalOrder::strong);
    for (const auto& c : found) {
        EXPECT_TRUE(are_conjugate(strong, c));
    }
    EXPECT_EQ(strict_pairs(found), brute_orientations(all_intervals(1, 2)));
}

TEST(ConjugateSearch, MatchesBruteForceOnSmallGrounds) {
    for (auto [lo, hi] : {std::pair{0L, 0L}, {1L, 2L}, {1L, 3L}, {0L, 2L}, {2L, 4L}}) {
        const auto ground = all_intervals(lo, hi);
        const auto found = find_conjugates_of_strong(lo, hi);
        EXPECT_EQ(strict_pairs(found), brute_orientations(ground)) << lo << ".." << hi;
        EXPECT_EQ(found.size(), strict_pairs(found).size());
        const auto strong = interval_order_table(ground, IntervalOrder::strong);
        for (const auto& c : found) {
            EXPECT_TRUE(are_conjugate(strong, c));
        }
    }
}

TEST(ConjugateSearch, SingleIntervalIsVacuous) {
    const auto found = find_conjugates_of_strong(0, 0);
    ASSERT_EQ(found.size(), 1u);
    EXPECT_EQ(found[0].order.relation_count(), 1u);
}

TEST(ConjugateSearch, OneToThreeHasFour) { EXPECT_EQ(find_conjugates_of_strong(1, 3).size(), 4u); }

TEST(ConjugateSearch, OneToFourHasNone) {
    // The overlap graph on ten intervals admits no transitive orientation.
    EXPECT_TRUE(find_conjugates_of_strong(1, 4).empty());
}

TEST(ConjugateSearch, OneToFourWitnessSubsetNotOrientable) {
    // Any conjugate on the full ground restricts to a transitive orientation of
    // the overlap graph on this subset, and the brute-force oracle finds none.
    const std::vector<IntInterval> witness{{1, 1}, {1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}, {4, 4}};
    EXPECT_TRUE(brute_orientations(witness).empty());
    // Dropping any one interval makes it orientable again: the witness is minimal.
    for (std::size_t skip = 0; skip < witness.size(); ++skip) {
        auto smaller = witness;
        smaller.erase(smaller.begin() + static_cast<long>(skip));
        EXPECT_FALSE(brute_orientations(smaller).empty()) << "without " << witness[skip];
    }
}

TEST(ConjugateSearch, LimitStopsEarly) {
    ConjugateSearchOptions opts;
    opts.limit = 1;
    EXPECT_EQ(find_conjugates_of_strong(1, 3, opts).size(), 1u);
}

TEST(ConjugateSearch, BudgetExceeded) {
    EXPECT_THROW(find_conjugates_of_strong(0, 4), BudgetExceeded);  // 15 intervals
    ConjugateSearchOptions opts;
    opts.max_ground = 15;
    EXPECT_NO_THROW(find_conjugates_of_strong(0, 4, opts));
}
