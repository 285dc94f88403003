#pragma once

// Edge-list text format:
//
//   r n m
//   v_1 v_2 ... v_r      (m lines, ascending within a line,
//   ...                   lines in lexicographic order)
//
// LF line endings, single spaces. write_edge_list(read_edge_list(s)) == s for
// every canonical file.

#include "daisy/hypergraph.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace daisy {

class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline void write_edge_list(std::ostream& out, const UniformHypergraph& g)
{
    out << g.r() << ' ' << g.n() << ' ' << g.edge_count() << '\n';
    std::string line;
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        line.clear();
        auto e = g.edge(i);
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (j > 0) {
                line += ' ';
            }
            line += std::to_string(e[j]);
        }
        line += '\n';
        out << line;
    }
}

inline std::string to_edge_list(const UniformHypergraph& g)
{
    std::ostringstream out;
    write_edge_list(out, g);
    return out.str();
}

inline UniformHypergraph read_edge_list(std::istream& in)
{
    std::string line;
    if (!std::getline(in, line)) {
        throw FormatError("missing header line");
    }
    std::istringstream header(line);
    long long r = -1;
    long long n = -1;
    long long m = -1;
    std::string extra;
    if (!(header >> r >> n >> m) || (header >> extra) || r < 1 || n < r || m < 0) {
        throw FormatError("bad header '" + line + "' (expected 'r n m' with 1 <= r <= n)");
    }
    std::vector<Vertex> flat;
    flat.reserve(static_cast<std::size_t>(m) * static_cast<std::size_t>(r));
    for (long long i = 0; i < m; ++i) {
        if (!std::getline(in, line)) {
            throw FormatError("expected " + std::to_string(m) + " edges, found " + std::to_string(i));
        }
        std::istringstream row(line);
        for (long long j = 0; j < r; ++j) {
            long long v = -1;
            if (!(row >> v) || v < 0 || v >= n) {
                throw FormatError("edge line " + std::to_string(i + 2) + ": bad vertex in '" + line + "'");
            }
            flat.push_back(static_cast<Vertex>(v));
        }
        if (row >> extra) {
            throw FormatError("edge line " + std::to_string(i + 2) + " has more than r vertices");
        }
    }
    while (std::getline(in, line)) {
        if (!line.empty()) {
            throw FormatError("trailing content after " + std::to_string(m) + " edges");
        }
    }
    try {
        return UniformHypergraph::from_flat(static_cast<unsigned>(r), static_cast<unsigned>(n),
                                            std::move(flat));
    }
    catch (const std::logic_error& e) {
        throw FormatError(e.what());
    }
}

inline UniformHypergraph parse_edge_list(const std::string& text)
{
    std::istringstream in(text);
    return read_edge_list(in);
}

inline void save_edge_list(const std::string& path, const UniformHypergraph& g)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open " + path + " for writing");
    }
    write_edge_list(out, g);
}

inline UniformHypergraph load_edge_list(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    return read_edge_list(in);
}

}  // namespace daisy
