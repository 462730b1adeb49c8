#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "interval.hpp"
#include "poset.hpp"
#include "structure.hpp"

namespace irank {

// Interval-valued function on the elements of a poset, with values inside [0, bound].
struct RankAssignment {
    Poset poset;
    std::vector<IntInterval> ranks;
    long bound = 0;

    const IntInterval& operator[](Element a) const { return ranks.at(a); }
};

namespace detail {

inline void require_rankable(const Poset& p) {
    if (p.size() < 2) {
        throw TooSmall("interval rank needs at least two elements");
    }
    if (!is_bounded(p)) {
        throw UnboundedError("interval rank needs a bounded poset");
    }
}

} // namespace detail

// R+(a) = [height(up a) - 1, height - height(down a)], values in [0, h-1].
inline RankAssignment standard_rank(const Poset& p) {
    detail::require_rankable(p);
    const auto h = height_profile(p);
    const auto height = static_cast<long>(h.height);
    RankAssignment r{p, {}, height - 1};
    r.ranks.reserve(p.size());
    for (Element a = 0; a < p.size(); ++a) {
        r.ranks.emplace_back(static_cast<long>(h.up[a]) - 1, height - static_cast<long>(h.down[a]));
    }
    return r;
}

// Conjugate standard rank: [height(up a) - 1, height + height(down a) - 2], values in [0, 2(h-1)].
inline RankAssignment conjugate_rank(const Poset& p) {
    detail::require_rankable(p);
    const auto h = height_profile(p);
    const auto height = static_cast<long>(h.height);
    RankAssignment r{p, {}, 2 * (height - 1)};
    r.ranks.reserve(p.size());
    for (Element a = 0; a < p.size(); ++a) {
        r.ranks.emplace_back(static_cast<long>(h.up[a]) - 1, height + static_cast<long>(h.down[a]) - 2);
    }
    return r;
}

enum class RankClass { weak, dual_weak, subset, superset, none };

inline std::string_view to_string(RankClass c) {
    switch (c) {
    case RankClass::weak:
        return "weak";
    case RankClass::dual_weak:
        return "dual-weak";
    case RankClass::subset:
        return "subset";
    case RankClass::superset:
        return "superset";
    case RankClass::none:
        return "none";
    }
    return "?";
}

// Which interval order makes f a strict interval rank function, judged by the
// direction of strict monotonicity of each endpoint map. When the poset has no
// strict pairs every class holds vacuously and dual-weak is reported.
inline RankClass classify_rank_function(const RankAssignment& f) {
    bool lo_iso = true, lo_anti = true, hi_iso = true, hi_anti = true;
    const Poset& p = f.poset;
    for (Element a = 0; a < p.size(); ++a) {
        p.for_each_above(a, [&](Element b) {
            if (b == a) {
                return;
            }
            const auto &x = f[a], &y = f[b];
            lo_iso = lo_iso && x.lo() < y.lo();
            lo_anti = lo_anti && x.lo() > y.lo();
            hi_iso = hi_iso && x.hi() < y.hi();
            hi_anti = hi_anti && x.hi() > y.hi();
        });
    }
    if (lo_anti && hi_anti) {
        return RankClass::dual_weak;
    }
    if (lo_iso && hi_iso) {
        return RankClass::weak;
    }
    if (lo_anti && hi_iso) {
        return RankClass::subset;
    }
    if (lo_iso && hi_anti) {
        return RankClass::superset;
    }
    return RankClass::none;
}

// f is a strict order homomorphism into the given interval order: a < b => f(a) strictly below f(b).
inline bool is_interval_rank_function(const RankAssignment& f, IntervalOrder order) {
    const Poset& p = f.poset;
    for (Element a = 0; a < p.size(); ++a) {
        bool ok = true;
        p.for_each_above(a, [&](Element b) {
            if (b != a && !compare_strict(order, f[a], f[b])) {
                ok = false;
            }
        });
        if (!ok) {
            return false;
        }
    }
    return true;
}

} // namespace irank
