#pragma once

#include <cctype>
#include <cstddef>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "errors.hpp"
#include "experiments.hpp"
#include "poset.hpp"
#include "rational.hpp"

namespace irank {

class InvalidDocument : public Error {
public:
    using Error::Error;
};

// Poset document:
//   {"elements": ["BOT", "a", "TOP"], "relations": [["BOT", "a"], ["a", "TOP"]]}
// Relations are generators; the order is their reflexive-transitive closure.
inline Poset parse_document(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidDocument(std::string("malformed poset document: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("elements") || !doc["elements"].is_array()) {
        throw InvalidDocument("poset document needs an \"elements\" array");
    }
    std::vector<std::string> names;
    std::set<std::string> unique;
    for (const auto& e : doc["elements"]) {
        if (!e.is_string()) {
            throw InvalidDocument("element names must be strings");
        }
        auto name = e.get<std::string>();
        if (!unique.insert(name).second) {
            throw InvalidDocument("duplicate element name \"" + name + "\"");
        }
        names.push_back(std::move(name));
    }
    if (names.empty()) {
        throw InvalidDocument("poset document has no elements");
    }
    auto index_of = [&](const nlohmann::json& v) -> Element {
        if (!v.is_string()) {
            throw InvalidDocument("relation endpoints must be element names");
        }
        const auto name = v.get<std::string>();
        for (std::size_t i = 0; i < names.size(); ++i) {
            if (names[i] == name) {
                return i;
            }
        }
        throw InvalidDocument("relation mentions unknown element \"" + name + "\"");
    };
    std::vector<ElementPair> generators;
    if (doc.contains("relations")) {
        if (!doc["relations"].is_array()) {
            throw InvalidDocument("\"relations\" must be an array of [lower, upper] pairs");
        }
        for (const auto& r : doc["relations"]) {
            if (!r.is_array() || r.size() != 2) {
                throw InvalidDocument("each relation must be a [lower, upper] pair");
            }
            generators.emplace_back(index_of(r[0]), index_of(r[1]));
        }
    }
    try {
        return Poset::from_relation(names.size(), generators, names);
    } catch (const CycleError& e) {
        throw InvalidDocument(std::string("relations do not form a partial order: ") + e.what());
    }
}

inline Poset read_document(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_document(ss.str());
}

// Writes the cover pairs as generators.
inline std::string format_document(const Poset& p) {
    nlohmann::json doc;
    doc["elements"] = p.labels();
    auto rel = nlohmann::json::array();
    for (const auto& [a, b] : covers(p).pairs) {
        rel.push_back({p.label(a), p.label(b)});
    }
    doc["relations"] = std::move(rel);
    return doc.dump(2) + "\n";
}

// Relation matrix as rows of 0/1 characters; entry (i, j) is 1 iff i <= j.
// Whitespace between digits is ignored. Elements are named by row index.
inline Poset parse_matrix(const std::string& text) {
    std::vector<std::string> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::string digits;
        for (char c : line) {
            if (c == '0' || c == '1') {
                digits.push_back(c);
            } else if (!std::isspace(static_cast<unsigned char>(c))) {
                throw InvalidDocument(std::string("unexpected character '") + c + "' in relation matrix");
            }
        }
        if (!digits.empty()) {
            rows.push_back(std::move(digits));
        }
    }
    const std::size_t n = rows.size();
    if (n == 0) {
        throw InvalidDocument("empty relation matrix");
    }
    BitMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) {
            throw InvalidDocument("relation matrix is not square");
        }
        for (std::size_t j = 0; j < n; ++j) {
            m.set(i, j, rows[i][j] == '1');
        }
    }
    try {
        return Poset::from_matrix(std::move(m));
    } catch (const Error& e) {
        throw InvalidDocument(std::string("matrix is not a partial order: ") + e.what());
    }
}

namespace detail {

inline std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') {
            out.push_back('\\');
        }
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

} // namespace detail

// Hasse diagram: cover edges only, lower -> upper, drawn bottom to top.
inline std::string format_dot(const Poset& p, const std::string& graph_name = "poset") {
    std::ostringstream os;
    os << "digraph " << detail::dot_quote(graph_name) << " {\n";
    os << "  rankdir=BT;\n";
    for (Element a = 0; a < p.size(); ++a) {
        os << "  n" << a << " [label=" << detail::dot_quote(p.label(a)) << "];\n";
    }
    for (const auto& [a, b] : covers(p).pairs) {
        os << "  n" << a << " -> n" << b << ";\n";
    }
    os << "}\n";
    return os.str();
}

inline constexpr const char* csv_header =
    "poset_id,size,height,width,iterations,final_chain_size,final_height,avg_rank_width";

inline void write_csv(std::ostream& os, const std::vector<IterationRecord>& records) {
    os << csv_header << "\n";
    for (const auto& r : records) {
        os << r.poset_id << ',' << r.size << ',' << r.height << ',' << r.width << ',' << r.iterations << ','
           << r.final_chain_size << ',' << r.final_height << ',' << format_decimal(r.avg_rank_width, 6) << "\n";
    }
}

} // namespace irank
