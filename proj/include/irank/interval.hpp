#pragma once

#include <compare>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "poset.hpp"

namespace irank {

// Closed interval [lo, hi] of nonnegative integers.
class IntInterval {
public:
    constexpr IntInterval() = default;

    constexpr IntInterval(long lo, long hi) : lo_(lo), hi_(hi) {
        if (lo < 0 || hi < lo) {
            throw RangeError("invalid interval [" + std::to_string(lo) + "," + std::to_string(hi) + "]");
        }
    }

    constexpr long lo() const { return lo_; }
    constexpr long hi() const { return hi_; }
    constexpr long width() const { return hi_ - lo_; }

    std::string str() const { return "[" + std::to_string(lo_) + "," + std::to_string(hi_) + "]"; }

    // Lexicographic on (lo, hi); used only for sorting and map keys.
    friend constexpr auto operator<=>(const IntInterval&, const IntInterval&) = default;

    friend std::ostream& operator<<(std::ostream& os, const IntInterval& x) { return os << x.str(); }

private:
    long lo_ = 0;
    long hi_ = 0;
};

// x <=_S y iff x ends strictly before y begins, or x == y.
constexpr bool leq_strong(const IntInterval& x, const IntInterval& y) { return x.hi() < y.lo() || x == y; }

// x is contained in y.
constexpr bool subset(const IntInterval& x, const IntInterval& y) { return x.lo() >= y.lo() && x.hi() <= y.hi(); }

// Product order on the endpoints.
constexpr bool leq_weak(const IntInterval& x, const IntInterval& y) { return x.lo() <= y.lo() && x.hi() <= y.hi(); }

enum class IntervalOrder { strong, weak, subset, dual_weak, superset };

constexpr bool compare(IntervalOrder order, const IntInterval& x, const IntInterval& y) {
    switch (order) {
    case IntervalOrder::strong:
        return leq_strong(x, y);
    case IntervalOrder::weak:
        return leq_weak(x, y);
    case IntervalOrder::subset:
        return subset(x, y);
    case IntervalOrder::dual_weak:
        return leq_weak(y, x);
    case IntervalOrder::superset:
        return subset(y, x);
    }
    return false;
}

// Strict part of the order: x below y and x != y.
constexpr bool compare_strict(IntervalOrder order, const IntInterval& x, const IntInterval& y) {
    return x != y && compare(order, x, y);
}

inline std::string_view to_string(IntervalOrder order) {
    switch (order) {
    case IntervalOrder::strong:
        return "strong";
    case IntervalOrder::weak:
        return "weak";
    case IntervalOrder::subset:
        return "subset";
    case IntervalOrder::dual_weak:
        return "dual-weak";
    case IntervalOrder::superset:
        return "superset";
    }
    return "?";
}

// All [a, b] with lo_min <= a <= b <= hi_max in lexicographic order.
inline std::vector<IntInterval> all_intervals(long lo_min, long hi_max) {
    if (lo_min < 0 || hi_max < lo_min) {
        throw RangeError("all_intervals requires 0 <= lo_min <= hi_max");
    }
    std::vector<IntInterval> out;
    for (long a = lo_min; a <= hi_max; ++a) {
        for (long b = a; b <= hi_max; ++b) {
            out.emplace_back(a, b);
        }
    }
    return out;
}

// Explicit partial order over a finite set of intervals.
struct OrderRelationTable {
    std::vector<IntInterval> ground;
    Poset order;

    bool leq(std::size_t i, std::size_t j) const { return order.leq(i, j); }
    bool comparable(std::size_t i, std::size_t j) const { return order.comparable(i, j); }
};

inline std::vector<std::string> interval_labels(const std::vector<IntInterval>& ground) {
    std::vector<std::string> labels;
    labels.reserve(ground.size());
    for (const auto& x : ground) {
        labels.push_back(x.str());
    }
    return labels;
}

inline Poset interval_poset(const std::vector<IntInterval>& ground, IntervalOrder order) {
    const std::size_t n = ground.size();
    BitMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j && ground[i] == ground[j]) {
                throw InvalidOrder("duplicate interval " + ground[i].str() + " in ground set");
            }
            if (compare(order, ground[i], ground[j])) {
                m.set(i, j);
            }
        }
    }
    return Poset::from_matrix(std::move(m), interval_labels(ground));
}

inline OrderRelationTable interval_order_table(const std::vector<IntInterval>& ground, IntervalOrder order) {
    return OrderRelationTable{ground, interval_poset(ground, order)};
}

// Builds a table from an arbitrary strict relation given as pairs of ground indices.
inline OrderRelationTable order_table_from_pairs(const std::vector<IntInterval>& ground,
                                                 const std::vector<ElementPair>& pairs) {
    return OrderRelationTable{ground, Poset::from_relation(ground.size(), pairs, interval_labels(ground))};
}

namespace detail {

inline void check_same_ground(const OrderRelationTable& a, const OrderRelationTable& b) {
    if (a.ground != b.ground) {
        throw GroundMismatch("orders are defined on different ground sets");
    }
}

} // namespace detail

// Every distinct pair is comparable in exactly one of the two orders.
inline bool are_conjugate(const OrderRelationTable& r1, const OrderRelationTable& r2) {
    detail::check_same_ground(r1, r2);
    const std::size_t n = r1.ground.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (r1.comparable(i, j) == r2.comparable(i, j)) {
                return false;
            }
        }
    }
    return true;
}

// Every distinct pair is comparable in at least one of the two orders.
inline bool are_pseudo_conjugate(const OrderRelationTable& r1, const OrderRelationTable& r2) {
    detail::check_same_ground(r1, r2);
    const std::size_t n = r1.ground.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!r1.comparable(i, j) && !r2.comparable(i, j)) {
                return false;
            }
        }
    }
    return true;
}

} // namespace irank
