// irank: command-line front end for interval rank computations.
//
// Exit codes: 0 success, 1 usage error, 2 invalid input, 3 budget exceeded.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include <irank/irank.hpp>

namespace fs = std::filesystem;
using namespace irank;

namespace {

enum ExitCode { ok = 0, usage_error = 1, invalid_input = 2, budget_exceeded = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InvalidDocument("cannot open " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Write-then-rename so readers never see a partial file.
void write_file_atomic(const fs::path& path, const std::string& content) {
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) {
            throw InvalidDocument("cannot write " + tmp.string());
        }
        out << content;
    }
    fs::rename(tmp, path);
}

Poset load_poset(const std::string& file, bool matrix) {
    const auto text = read_file(file);
    return matrix ? parse_matrix(text) : parse_document(text);
}

std::string level_string(const Poset& p, const std::vector<std::vector<Element>>& levels) {
    std::string out;
    for (const auto& level : levels) {
        out += "[";
        for (std::size_t i = 0; i < level.size(); ++i) {
            out += (i ? " " : "") + p.label(level[i]);
        }
        out += "]";
    }
    return out;
}

// ---- gen -------------------------------------------------------------------

struct GenArgs {
    std::string model = "random-graph";
    std::size_t n = 0;
    double p = 0.5;
    std::size_t k = 3;
    std::uint64_t seed = 1;
    std::size_t count = 1;
    bool bounds = true;
    std::string out;
};

int cmd_gen(const GenArgs& a) {
    std::vector<Poset> posets;
    if (a.model == "exhaustive") {
        if (a.bounds) {
            if (a.n < 3) {
                throw UsageError("--n must be at least 3 for bounded exhaustive generation");
            }
            posets = enumerate_bounded_posets(a.n);
        } else {
            posets = enumerate_posets(a.n);
        }
    } else {
        GenConfig cfg;
        cfg.model = a.model == "random-kdim" ? GenModel::random_kdim : GenModel::random_graph;
        cfg.p = a.p;
        cfg.k = a.k;
        cfg.seed = a.seed;
        cfg.add_bounds = a.bounds;
        if (a.bounds) {
            if (a.n < 3) {
                throw UsageError("--n must be at least 3 with --bounds (it counts the added bounds)");
            }
            cfg.n = a.n - 2;
        } else {
            cfg.n = a.n;
        }
        if (cfg.model == GenModel::random_kdim && cfg.k == 0) {
            throw UsageError("--k must be at least 1");
        }
        if (!(a.p >= 0.0 && a.p <= 1.0)) {
            throw UsageError("--p must lie in [0, 1]");
        }
        posets = random_corpus(cfg, a.count);
    }
    fs::create_directories(a.out);
    const int digits = std::max<int>(4, static_cast<int>(std::to_string(posets.size()).size()));
    for (std::size_t i = 0; i < posets.size(); ++i) {
        std::ostringstream name;
        name << "poset_" << std::setw(digits) << std::setfill('0') << i << ".json";
        write_file_atomic(fs::path(a.out) / name.str(), format_document(posets[i]));
    }
    std::cout << "wrote " << posets.size() << " posets to " << a.out << "\n";
    return ok;
}

// ---- rank ------------------------------------------------------------------

int cmd_rank(const std::string& file, bool matrix, bool conjugate) {
    const Poset p = load_poset(file, matrix);
    const auto r = conjugate ? conjugate_rank(p) : standard_rank(p);
    const auto spindle = spindle_elements(p);
    for (Element a = 0; a < p.size(); ++a) {
        const bool on_spindle = std::binary_search(spindle.begin(), spindle.end(), a);
        std::cout << p.label(a) << " " << r[a] << " spindle=" << (on_spindle ? "true" : "false") << "\n";
    }
    return ok;
}

// ---- iterate ---------------------------------------------------------------

int cmd_iterate(const std::string& file, bool matrix, bool trace_stages, const std::string& dot_dir) {
    const Poset p = load_poset(file, matrix);
    const auto trace = iterate_to_chain(p);
    std::cout << "iterations: " << trace.iterations_to_chain << "\n";
    std::cout << "height: " << height(p) << " -> " << trace.final_chain_size() << "\n";

    if (trace_stages) {
        // Block members expressed in original element names.
        std::vector<std::vector<Element>> members(p.size());
        for (Element a = 0; a < p.size(); ++a) {
            members[a] = {a};
        }
        for (std::size_t k = 0; k < trace.stages.size(); ++k) {
            const auto& stage = trace.stages[k];
            std::vector<std::vector<Element>> next(stage.size());
            for (Element a = 0; a < stage.blocks.size(); ++a) {
                auto& dst = next[stage.blocks[a]];
                dst.insert(dst.end(), members[a].begin(), members[a].end());
            }
            std::cout << "stage " << k + 1 << ":";
            for (std::size_t i = 0; i < stage.size(); ++i) {
                std::sort(next[i].begin(), next[i].end());
                std::cout << " " << stage.intervals[i] << "{";
                for (std::size_t j = 0; j < next[i].size(); ++j) {
                    std::cout << (j ? " " : "") << p.label(next[i][j]);
                }
                std::cout << "}";
            }
            std::cout << "\n";
            members = std::move(next);
        }
    }

    const auto& chain = trace.stages.empty() ? p : trace.stages.back().order;
    std::vector<Element> top_down(chain.size());
    for (Element a = 0; a < chain.size(); ++a) {
        top_down[chain.up_count(a) - 1] = a;
    }
    std::cout << "final chain:";
    for (Element a : top_down) {
        std::cout << " " << chain.label(a);
    }
    std::cout << "\n";
    std::cout << "levels: " << level_string(p, trace.preorder_levels) << "\n";

    if (!dot_dir.empty()) {
        fs::create_directories(dot_dir);
        write_file_atomic(fs::path(dot_dir) / "stage_0.dot", format_dot(p, "stage_0"));
        for (std::size_t k = 0; k < trace.stages.size(); ++k) {
            const std::string name = "stage_" + std::to_string(k + 1);
            write_file_atomic(fs::path(dot_dir) / (name + ".dot"), format_dot(trace.stages[k].order, name));
        }
    }
    return ok;
}

// ---- conjugate-search ------------------------------------------------------

int cmd_conjugate_search(long lo, long hi, std::size_t limit, bool force, bool group_iso) {
    if (hi < lo || lo < 0) {
        throw UsageError("need 0 <= --lo <= --hi");
    }
    if (hi - lo > 3 && !force) {
        throw BudgetExceeded("--hi - --lo > 3 exceeds the default search budget; pass --force to run anyway");
    }
    ConjugateSearchOptions opts;
    if (limit > 0) {
        opts.limit = limit;
    }
    if (force) {
        opts.max_ground = SIZE_MAX;
    }
    const auto found = find_conjugates_of_strong(lo, hi, opts);
    const auto strong = interval_order_table(all_intervals(lo, hi), IntervalOrder::strong);
    for (std::size_t i = 0; i < found.size(); ++i) {
        const auto& t = found[i];
        std::cout << "order " << i + 1 << ":";
        const auto cov = covers(t.order);
        if (cov.pairs.empty()) {
            std::cout << " (no comparabilities)";
        }
        for (const auto& [a, b] : cov.pairs) {
            std::cout << " " << t.ground[a] << "<" << t.ground[b];
        }
        std::cout << "\nconjugate: " << (are_conjugate(t, strong) ? "true" : "false") << "\n";
    }
    std::cout << "found: " << found.size() << "\n";
    if (group_iso) {
        std::vector<CanonicalForm> forms;
        for (const auto& t : found) {
            forms.push_back(canonical_form(t.order));
        }
        std::sort(forms.begin(), forms.end());
        forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
        std::cout << "isomorphism classes: " << forms.size() << "\n";
    }
    return ok;
}

// ---- stats / table ---------------------------------------------------------

struct FitArgs {
    std::string kind;
    std::string y;
};

Rational pick(const GroupMeans& g, const std::string& y) {
    if (y == "iterations") {
        return g.iterations;
    }
    if (y == "final_height") {
        return g.final_height;
    }
    return g.final_chain_size;
}

void print_groups(const std::vector<IterationRecord>& records, GroupKey key) {
    const auto groups = aggregate_by(records, key);
    std::cout << (key == GroupKey::size ? "size" : "height")
              << ",count,avg_chain_size,avg_iterations,avg_final_height,avg_rank_width\n";
    for (const auto& g : groups) {
        std::cout << g.key << "," << g.count << "," << format_decimal(g.final_chain_size, 3) << ","
                  << format_decimal(g.iterations, 3) << "," << format_decimal(g.final_height, 3) << ","
                  << format_decimal(g.avg_rank_width, 3) << "\n";
    }
}

void print_fit(const std::vector<IterationRecord>& records, GroupKey key, FitArgs fit) {
    if (fit.kind.empty()) {
        return;
    }
    if (fit.y.empty()) {
        fit.y = key == GroupKey::height ? "final_height" : fit.kind == "log" ? "iterations" : "chain";
    }
    const auto groups = aggregate_by(records, key);
    std::vector<double> xs, ys;
    for (const auto& g : groups) {
        xs.push_back(static_cast<double>(g.key));
        ys.push_back(to_double(pick(g, fit.y)));
    }
    const auto f = fit.kind == "log" ? log_fit(xs, ys) : linear_fit(xs, ys);
    std::cout << std::setprecision(4) << std::fixed << "fit " << to_string(f.kind) << " (" << fit.y << "): y = " << f.a
              << (f.kind == FitKind::logarithmic ? " ln(x)" : " x") << (f.b < 0 ? " - " : " + ") << std::abs(f.b)
              << ", R^2 = " << f.r_squared << "\n";
}

int cmd_stats(const std::string& dir, const std::string& group, const std::string& csv, const FitArgs& fit,
              unsigned threads) {
    std::vector<fs::path> files;
    if (!fs::is_directory(dir)) {
        throw InvalidDocument("corpus directory " + dir + " does not exist");
    }
    for (const auto& e : fs::directory_iterator(dir)) {
        if (e.is_regular_file() && e.path().extension() == ".json") {
            files.push_back(e.path());
        }
    }
    if (files.empty()) {
        throw InvalidDocument("corpus " + dir + " contains no .json poset documents");
    }
    std::sort(files.begin(), files.end());
    std::vector<CorpusEntry> corpus;
    for (const auto& f : files) {
        corpus.push_back({f.stem().string(), parse_document(read_file(f))});
    }
    const auto records = run_iteration_experiment(corpus, threads);
    if (!csv.empty()) {
        std::ostringstream os;
        write_csv(os, records);
        write_file_atomic(csv, os.str());
    }
    const auto key = group == "height" ? GroupKey::height : GroupKey::size;
    print_groups(records, key);
    print_fit(records, key, fit);
    return ok;
}

struct TableArgs {
    bool random = false;
    std::size_t min_size = 10;
    std::size_t max_size = 25;
    std::size_t per_size = 200;
    std::string model = "random-graph";
    double p = 0.5;
    std::size_t k = 3;
    std::uint64_t seed = 1;
};

// In-memory experiment: the exhaustive bounded corpus (sizes 3-9) or a random one.
int cmd_table(const TableArgs& a, unsigned threads) {
    std::vector<CorpusEntry> corpus;
    if (!a.random) {
        for (std::size_t size = 3; size <= 9; ++size) {
            std::size_t i = 0;
            for (auto& p : enumerate_bounded_posets(size)) {
                corpus.push_back({std::to_string(size) + "_" + std::to_string(i++), std::move(p)});
            }
        }
    } else {
        if (a.min_size < 3 || a.max_size < a.min_size) {
            throw UsageError("need 3 <= --min-size <= --max-size");
        }
        GenConfig cfg;
        cfg.model = a.model == "random-kdim" ? GenModel::random_kdim : GenModel::random_graph;
        cfg.p = a.p;
        cfg.k = a.k;
        cfg.add_bounds = true;
        for (std::size_t size = a.min_size; size <= a.max_size; ++size) {
            cfg.n = size - 2;
            cfg.seed = a.seed + size * 1000003ULL;
            std::size_t i = 0;
            for (auto& p : random_corpus(cfg, a.per_size)) {
                corpus.push_back({std::to_string(size) + "_" + std::to_string(i++), std::move(p)});
            }
        }
    }
    const auto records = run_iteration_experiment(corpus, threads);
    print_groups(records, GroupKey::size);
    print_fit(records, GroupKey::size, {"linear", "chain"});
    print_fit(records, GroupKey::size, {"log", "iterations"});
    std::cout << "\n";
    print_groups(records, GroupKey::height);
    print_fit(records, GroupKey::height, {"linear", "final_height"});
    return ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Interval rank toolkit for finite posets"};
    app.require_subcommand(1);
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate poset documents");
    gen_cmd->add_option("--model", gen.model, "exhaustive | random-graph | random-kdim")
        ->check(CLI::IsMember({"exhaustive", "random-graph", "random-kdim"}));
    gen_cmd->add_option("--n", gen.n, "Size of each emitted poset (including bounds with --bounds)")->required();
    gen_cmd->add_option("--p", gen.p, "Edge probability (random-graph)");
    gen_cmd->add_option("--k", gen.k, "Number of linear orders (random-kdim)");
    gen_cmd->add_option("--seed", gen.seed, "Base seed; poset i uses seed + i");
    gen_cmd->add_option("--count", gen.count, "Number of random posets");
    gen_cmd->add_flag("--bounds,!--no-bounds", gen.bounds, "Add a fresh bottom and top (default on)");
    gen_cmd->add_option("--out", gen.out, "Output directory")->required();

    std::string input;
    bool matrix = false, conjugate = false, trace = false;
    std::string dot_dir;
    auto* rank_cmd = app.add_subcommand("rank", "Print interval ranks of a bounded poset");
    rank_cmd->add_option("file", input, "Poset document")->required();
    rank_cmd->add_flag("--conjugate", conjugate, "Conjugate standard interval rank");
    rank_cmd->add_flag("--matrix", matrix, "Input is a 0/1 relation matrix");

    auto* iter_cmd = app.add_subcommand("iterate", "Iterate the interval rank poset to a chain");
    iter_cmd->add_option("file", input, "Poset document")->required();
    iter_cmd->add_flag("--trace", trace, "Print every stage");
    iter_cmd->add_option("--dot", dot_dir, "Write one Hasse diagram per stage into this directory");
    iter_cmd->add_flag("--matrix", matrix, "Input is a 0/1 relation matrix");

    long lo = 0, hi = 0;
    std::size_t limit = 0;
    bool force = false, group_iso = false;
    auto* conj_cmd = app.add_subcommand("conjugate-search", "Find conjugates of the strong interval order");
    conj_cmd->add_option("--lo", lo, "Smallest endpoint")->required();
    conj_cmd->add_option("--hi", hi, "Largest endpoint")->required();
    conj_cmd->add_option("--limit", limit, "Stop after this many orders (0 = all)");
    conj_cmd->add_flag("--force", force, "Allow grounds beyond the default budget");
    conj_cmd->add_flag("--group-iso", group_iso, "Also count isomorphism classes");

    std::string corpus, group = "size", csv;
    FitArgs fit;
    auto* stats_cmd = app.add_subcommand("stats", "Iteration statistics over a corpus directory");
    stats_cmd->add_option("--corpus", corpus, "Directory of poset documents")->required();
    stats_cmd->add_option("--group", group, "size | height")->check(CLI::IsMember({"size", "height"}));
    stats_cmd->add_option("--csv", csv, "Write per-poset records here");
    stats_cmd->add_option("--fit", fit.kind, "linear | log")->check(CLI::IsMember({"linear", "log"}));
    stats_cmd->add_option("--y", fit.y, "Fitted column: chain | iterations | final_height")
        ->check(CLI::IsMember({"chain", "iterations", "final_height"}));
    stats_cmd->add_option("--threads", threads, "Worker threads");

    TableArgs table;
    auto* table_cmd = app.add_subcommand("table", "Run the exhaustive (sizes 3-9) or random experiment in memory");
    table_cmd->add_flag("--random", table.random, "Random corpus instead of the exhaustive one");
    table_cmd->add_option("--min-size", table.min_size, "Smallest bounded size (random)");
    table_cmd->add_option("--max-size", table.max_size, "Largest bounded size (random)");
    table_cmd->add_option("--per-size", table.per_size, "Posets per size (random)");
    table_cmd->add_option("--model", table.model, "random-graph | random-kdim")
        ->check(CLI::IsMember({"random-graph", "random-kdim"}));
    table_cmd->add_option("--p", table.p, "Edge probability (random-graph)");
    table_cmd->add_option("--k", table.k, "Number of linear orders (random-kdim)");
    table_cmd->add_option("--seed", table.seed, "Base seed");
    table_cmd->add_option("--threads", threads, "Worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : usage_error;
    }

    try {
        if (*gen_cmd) {
            return cmd_gen(gen);
        }
        if (*rank_cmd) {
            return cmd_rank(input, matrix, conjugate);
        }
        if (*iter_cmd) {
            return cmd_iterate(input, matrix, trace, dot_dir);
        }
        if (*conj_cmd) {
            return cmd_conjugate_search(lo, hi, limit, force, group_iso);
        }
        if (*stats_cmd) {
            return cmd_stats(corpus, group, csv, fit, threads);
        }
        if (*table_cmd) {
            return cmd_table(table, threads);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage_error;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return budget_exceeded;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return invalid_input;
    } catch (const fs::filesystem_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return invalid_input;
    }
    return usage_error;
}
