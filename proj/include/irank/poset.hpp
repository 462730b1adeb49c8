#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bit_matrix.hpp"
#include "errors.hpp"

namespace irank {

using Element = std::size_t;
using ElementPair = std::pair<Element, Element>;

// Finite partially ordered set with a dense relation matrix.
// leq(i, j) is true iff element i <= element j. Immutable after construction.
class Poset {
public:
    Poset() = default;

    // Reflexive-transitive closure of the generator pairs.
    static Poset from_relation(std::size_t n, const std::vector<ElementPair>& generators,
                               std::vector<std::string> labels = {}) {
        BitMatrix m(n);
        for (const auto& [a, b] : generators) {
            if (a >= n || b >= n) {
                throw IndexError("relation pair (" + std::to_string(a) + ", " + std::to_string(b) +
                                 ") out of range for " + std::to_string(n) + " elements");
            }
            m.set(a, b);
        }
        for (std::size_t i = 0; i < n; ++i) {
            m.set(i, i);
        }
        m.transitive_closure();
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                if (m.test(i, j) && m.test(j, i)) {
                    throw CycleError("closure forces " + std::to_string(i) + " <= " + std::to_string(j) +
                                     " <= " + std::to_string(i));
                }
            }
        }
        return Poset(std::move(m), std::move(labels));
    }

    // Takes a relation matrix as-is and verifies the partial order axioms.
    static Poset from_matrix(BitMatrix m, std::vector<std::string> labels = {}) {
        const std::size_t n = m.size();
        for (std::size_t i = 0; i < n; ++i) {
            if (!m.test(i, i)) {
                throw InvalidOrder("relation is not reflexive at " + std::to_string(i));
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                if (m.test(i, j) && m.test(j, i)) {
                    throw CycleError("relation is not antisymmetric at (" + std::to_string(i) + ", " +
                                     std::to_string(j) + ")");
                }
            }
        }
        BitMatrix closed = m;
        closed.transitive_closure();
        if (!(closed == m)) {
            throw InvalidOrder("relation is not transitive");
        }
        return Poset(std::move(m), std::move(labels));
    }

    static Poset chain(std::size_t n) {
        std::vector<ElementPair> g;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            g.emplace_back(i, i + 1);
        }
        return from_relation(n, g);
    }

    static Poset antichain(std::size_t n) { return from_relation(n, {}); }

    std::size_t size() const { return leq_.size(); }

    bool leq(Element a, Element b) const { return leq_.test(a, b); }
    bool geq(Element a, Element b) const { return leq_.test(b, a); }
    bool lt(Element a, Element b) const { return a != b && leq_.test(a, b); }
    bool comparable(Element a, Element b) const { return leq(a, b) || leq(b, a); }

    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(Element a) const { return labels_.at(a); }

    std::optional<Element> find_label(const std::string& name) const {
        auto it = std::find(labels_.begin(), labels_.end(), name);
        if (it == labels_.end()) {
            return std::nullopt;
        }
        return static_cast<Element>(it - labels_.begin());
    }

    // Rows of the relation and of its transpose: bit j of up_row(a) is set iff a <= j,
    // bit j of down_row(a) is set iff j <= a.
    const BitMatrix& relation() const { return leq_; }
    const BitMatrix& dual_relation() const { return geq_; }

    std::size_t up_count(Element a) const { return leq_.row_count(a); }
    std::size_t down_count(Element a) const { return geq_.row_count(a); }

    // Number of pairs (a, b) with a <= b, diagonal included.
    std::size_t relation_count() const { return leq_.count(); }

    template <typename F>
    void for_each_above(Element a, F&& f) const {
        leq_.for_each_in_row(a, std::forward<F>(f));
    }

    template <typename F>
    void for_each_below(Element a, F&& f) const {
        geq_.for_each_in_row(a, std::forward<F>(f));
    }

    // Same labels, relation reversed.
    Poset dual() const { return Poset(geq_, labels_); }

    friend bool operator==(const Poset& a, const Poset& b) {
        return a.leq_ == b.leq_ && a.labels_ == b.labels_;
    }

private:
    Poset(BitMatrix m, std::vector<std::string> labels) : leq_(std::move(m)) {
        const std::size_t n = leq_.size();
        if (labels.empty()) {
            labels.reserve(n);
            for (std::size_t i = 0; i < n; ++i) {
                labels.push_back(std::to_string(i));
            }
        } else if (labels.size() != n) {
            throw IndexError("expected " + std::to_string(n) + " labels, got " + std::to_string(labels.size()));
        }
        labels_ = std::move(labels);
        geq_ = leq_.transposed();
    }

    BitMatrix leq_;
    BitMatrix geq_;
    std::vector<std::string> labels_;
};

// Transitive reduction: (lower, upper) pairs of the covering relation.
struct CoverRelation {
    std::vector<ElementPair> pairs;

    friend bool operator==(const CoverRelation&, const CoverRelation&) = default;
};

inline CoverRelation covers(const Poset& p) {
    CoverRelation out;
    const std::size_t n = p.size();
    for (Element a = 0; a < n; ++a) {
        p.for_each_above(a, [&](Element b) {
            if (b == a) {
                return;
            }
            bool between = false;
            for (Element c = 0; c < n && !between; ++c) {
                between = c != a && c != b && p.leq(a, c) && p.leq(c, b);
            }
            if (!between) {
                out.pairs.emplace_back(a, b);
            }
        });
    }
    return out;
}

// Subset of a poset's elements carrying the restricted order. Must not outlive the parent.
struct SubsetView {
    const Poset* parent = nullptr;
    std::vector<Element> members;

    std::size_t size() const { return members.size(); }

    bool contains(Element a) const { return std::binary_search(members.begin(), members.end(), a); }

    // Materialize the sub-poset; element k of the result is members[k].
    Poset restrict() const {
        const std::size_t m = members.size();
        BitMatrix rel(m);
        std::vector<std::string> labels;
        labels.reserve(m);
        for (std::size_t i = 0; i < m; ++i) {
            labels.push_back(parent->label(members[i]));
            for (std::size_t j = 0; j < m; ++j) {
                if (parent->leq(members[i], members[j])) {
                    rel.set(i, j);
                }
            }
        }
        return Poset::from_matrix(std::move(rel), std::move(labels));
    }
};

inline SubsetView whole(const Poset& p) {
    SubsetView v{&p, {}};
    v.members.resize(p.size());
    for (Element i = 0; i < p.size(); ++i) {
        v.members[i] = i;
    }
    return v;
}

inline SubsetView upset(const Poset& p, Element a) {
    SubsetView v{&p, {}};
    p.for_each_above(a, [&](Element b) { v.members.push_back(b); });
    return v;
}

inline SubsetView downset(const Poset& p, Element a) {
    SubsetView v{&p, {}};
    p.for_each_below(a, [&](Element b) { v.members.push_back(b); });
    return v;
}

inline SubsetView hourglass(const Poset& p, Element a) {
    SubsetView v{&p, {}};
    for (Element b = 0; b < p.size(); ++b) {
        if (p.comparable(a, b)) {
            v.members.push_back(b);
        }
    }
    return v;
}

inline SubsetView interval(const Poset& p, Element a, Element b) {
    if (!p.leq(a, b)) {
        throw NotComparable("interval [" + p.label(a) + ", " + p.label(b) + "] requires " + p.label(a) +
                            " <= " + p.label(b));
    }
    SubsetView v{&p, {}};
    for (Element c = 0; c < p.size(); ++c) {
        if (p.leq(a, c) && p.leq(c, b)) {
            v.members.push_back(c);
        }
    }
    return v;
}

inline std::vector<Element> minimal_elements(const Poset& p) {
    std::vector<Element> out;
    for (Element a = 0; a < p.size(); ++a) {
        if (p.down_count(a) == 1) {
            out.push_back(a);
        }
    }
    return out;
}

inline std::vector<Element> maximal_elements(const Poset& p) {
    std::vector<Element> out;
    for (Element a = 0; a < p.size(); ++a) {
        if (p.up_count(a) == 1) {
            out.push_back(a);
        }
    }
    return out;
}

inline std::optional<Element> bottom(const Poset& p) {
    for (Element a = 0; a < p.size(); ++a) {
        if (p.up_count(a) == p.size()) {
            return a;
        }
    }
    return std::nullopt;
}

inline std::optional<Element> top(const Poset& p) {
    for (Element a = 0; a < p.size(); ++a) {
        if (p.down_count(a) == p.size()) {
            return a;
        }
    }
    return std::nullopt;
}

inline bool is_bounded(const Poset& p) { return bottom(p).has_value() && top(p).has_value(); }

inline bool is_chain(const Poset& p) {
    // A chain of n elements has exactly n(n+1)/2 relation pairs.
    const std::size_t n = p.size();
    return p.relation_count() == n * (n + 1) / 2;
}

// Fresh bottom (index n) and top (index n+1), even when p is already bounded.
inline Poset add_bounds(const Poset& p) {
    const std::size_t n = p.size();
    BitMatrix m(n + 2);
    for (Element i = 0; i < n; ++i) {
        p.for_each_above(i, [&](Element j) { m.set(i, j); });
        m.set(n, i);
        m.set(i, n + 1);
    }
    m.set(n, n);
    m.set(n + 1, n + 1);
    m.set(n, n + 1);

    auto fresh = [&](std::string name) {
        while (p.find_label(name)) {
            name += "'";
        }
        return name;
    };
    std::vector<std::string> labels = p.labels();
    labels.push_back(fresh("BOT"));
    labels.push_back(fresh("TOP"));
    return Poset::from_matrix(std::move(m), std::move(labels));
}

inline Poset dual(const Poset& p) { return p.dual(); }

// Edges {a, b} with a < b index-wise and a, b comparable.
struct UndirectedGraph {
    std::size_t vertex_count = 0;
    std::vector<ElementPair> edges;
};

inline UndirectedGraph comparability_graph(const Poset& p) {
    UndirectedGraph g{p.size(), {}};
    for (Element a = 0; a < p.size(); ++a) {
        for (Element b = a + 1; b < p.size(); ++b) {
            if (p.comparable(a, b)) {
                g.edges.emplace_back(a, b);
            }
        }
    }
    return g;
}

} // namespace irank
