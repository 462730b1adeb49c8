#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <exception>
#include <map>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "rank_poset.hpp"
#include "rational.hpp"
#include "structure.hpp"

namespace irank {

struct IterationRecord {
    std::string poset_id;
    std::size_t size = 0;
    std::size_t height = 0;
    std::size_t width = 0;
    std::size_t iterations = 0;
    std::size_t final_chain_size = 0;
    // Equal to final_chain_size: a chain's height is its size.
    std::size_t final_height = 0;
    Rational avg_rank_width;
};

struct CorpusEntry {
    std::string id;
    Poset poset;
};

inline IterationRecord measure(const std::string& id, const Poset& p) {
    const auto trace = iterate_to_chain(p);
    IterationRecord r;
    r.poset_id = id;
    r.size = p.size();
    r.height = height(p);
    r.width = width(p);
    r.iterations = trace.iterations_to_chain;
    r.final_chain_size = trace.final_chain_size();
    r.final_height = trace.final_chain_size();
    r.avg_rank_width = average_rank_width(p);
    return r;
}

// One record per corpus entry, in corpus order. Entries are measured on
// `threads` workers; results do not depend on the thread count.
inline std::vector<IterationRecord> run_iteration_experiment(const std::vector<CorpusEntry>& corpus,
                                                             unsigned threads = 1) {
    std::vector<IterationRecord> out(corpus.size());
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(corpus.size())));
    if (threads <= 1) {
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            out[i] = measure(corpus[i].id, corpus[i].poset);
        }
        return out;
    }
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            try {
                for (std::size_t i = t; i < corpus.size(); i += threads) {
                    out[i] = measure(corpus[i].id, corpus[i].poset);
                }
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) {
        th.join();
    }
    for (auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return out;
}

inline std::vector<IterationRecord> run_iteration_experiment(const std::vector<Poset>& posets) {
    std::vector<CorpusEntry> corpus;
    corpus.reserve(posets.size());
    for (std::size_t i = 0; i < posets.size(); ++i) {
        corpus.push_back({std::to_string(i), posets[i]});
    }
    return run_iteration_experiment(corpus);
}

enum class GroupKey { size, height };

// Exact means of every numeric column over the records sharing a key value.
struct GroupMeans {
    std::size_t key = 0;
    std::size_t count = 0;
    Rational height;
    Rational width;
    Rational iterations;
    Rational final_chain_size;
    Rational final_height;
    Rational avg_rank_width;
};

inline std::vector<GroupMeans> aggregate_by(const std::vector<IterationRecord>& records, GroupKey key) {
    if (records.empty()) {
        throw EmptyInput("aggregate_by needs at least one record");
    }
    std::map<std::size_t, GroupMeans> groups;
    for (const auto& r : records) {
        const std::size_t k = key == GroupKey::size ? r.size : r.height;
        auto& g = groups[k];
        g.key = k;
        ++g.count;
        g.height += static_cast<std::int64_t>(r.height);
        g.width += static_cast<std::int64_t>(r.width);
        g.iterations += static_cast<std::int64_t>(r.iterations);
        g.final_chain_size += static_cast<std::int64_t>(r.final_chain_size);
        g.final_height += static_cast<std::int64_t>(r.final_height);
        g.avg_rank_width += r.avg_rank_width;
    }
    std::vector<GroupMeans> out;
    for (auto& [k, g] : groups) {
        const auto c = static_cast<std::int64_t>(g.count);
        g.height /= c;
        g.width /= c;
        g.iterations /= c;
        g.final_chain_size /= c;
        g.final_height /= c;
        g.avg_rank_width /= c;
        out.push_back(g);
    }
    return out;
}

enum class FitKind { linear, logarithmic };

inline std::string_view to_string(FitKind k) { return k == FitKind::linear ? "linear" : "log"; }

// y = a * x + b (linear) or y = a * ln(x) + b (logarithmic).
struct FitResult {
    FitKind kind = FitKind::linear;
    double a = 0.0;
    double b = 0.0;
    double r_squared = 0.0;
};

namespace detail {

inline FitResult least_squares(FitKind kind, const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size()) {
        throw DegenerateInput("x and y have different lengths");
    }
    const auto n = static_cast<double>(xs.size());
    if (xs.size() < 2 || std::all_of(xs.begin(), xs.end(), [&](double x) { return x == xs.front(); })) {
        throw DegenerateInput("least squares needs at least two distinct x values");
    }
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
        syy += (ys[i] - my) * (ys[i] - my);
    }
    FitResult f;
    f.kind = kind;
    f.a = sxy / sxx;
    f.b = my - f.a * mx;
    double ss_res = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double e = ys[i] - (f.a * xs[i] + f.b);
        ss_res += e * e;
    }
    // Constant y is fitted exactly by the flat line.
    f.r_squared = syy > 0 ? std::clamp(1.0 - ss_res / syy, 0.0, 1.0) : 1.0;
    return f;
}

} // namespace detail

inline FitResult linear_fit(const std::vector<double>& xs, const std::vector<double>& ys) {
    return detail::least_squares(FitKind::linear, xs, ys);
}

inline FitResult log_fit(const std::vector<double>& xs, const std::vector<double>& ys) {
    std::vector<double> lx;
    lx.reserve(xs.size());
    for (double x : xs) {
        if (!(x > 0)) {
            throw DomainError("log fit needs x > 0");
        }
        lx.push_back(std::log(x));
    }
    return detail::least_squares(FitKind::logarithmic, lx, ys);
}

} // namespace irank
