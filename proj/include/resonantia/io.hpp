#pragma once

// planar_code binary files and a plain-text adjacency format.
//
// planar_code: the 15-byte header ">>planar_code<<", then per graph one byte n
// followed, for every vertex, by its neighbors in rotation order as 1-based
// bytes and a terminating 0. Only the single-byte variant (n < 256) is handled.
//
// Text: one line "v: a b c" per vertex (0-based, rotation order); graphs are
// separated by blank lines.

#include <cstdint>
#include <fstream>
#include <iterator>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "graph.hpp"

namespace resonantia {

inline constexpr std::string_view kPlanarCodeHeader = ">>planar_code<<";

class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline std::string write_planar_code(const std::vector<FullereneGraph>& graphs) {
    std::string out(kPlanarCodeHeader);
    for (const auto& g : graphs) {
        if (g.order() >= 256) throw FormatError("planar_code writer supports n < 256 only");
        out.push_back(static_cast<char>(g.order()));
        for (Vertex v = 0; v < g.order(); ++v) {
            for (Vertex w : g.neighbors(v)) out.push_back(static_cast<char>(w + 1));
            out.push_back('\0');
        }
    }
    return out;
}

/// Parses raw neighbor lists without fullerene validation.
inline std::vector<std::vector<std::vector<Vertex>>> parse_planar_code_lists(std::string_view bytes) {
    if (bytes.substr(0, kPlanarCodeHeader.size()) != kPlanarCodeHeader)
        throw FormatError("missing >>planar_code<< header");
    std::vector<std::vector<std::vector<Vertex>>> out;
    std::size_t pos = kPlanarCodeHeader.size();
    while (pos < bytes.size()) {
        const int n = static_cast<std::uint8_t>(bytes[pos++]);
        if (n == 0) throw FormatError("two-byte planar_code entries are not supported");
        std::vector<std::vector<Vertex>> lists(n);
        for (int v = 0; v < n; ++v) {
            while (true) {
                if (pos >= bytes.size()) throw FormatError("truncated planar_code graph");
                const int w = static_cast<std::uint8_t>(bytes[pos++]);
                if (w == 0) break;
                if (w > n) throw FormatError("neighbor index out of range");
                lists[v].push_back(w - 1);
            }
        }
        out.push_back(std::move(lists));
    }
    return out;
}

inline std::vector<FullereneGraph> read_planar_code(std::string_view bytes) {
    std::vector<FullereneGraph> out;
    for (const auto& lists : parse_planar_code_lists(bytes))
        out.push_back(build_and_validate(static_cast<int>(lists.size()), lists));
    return out;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline void write_file(const std::string& path, std::string_view data) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("cannot write " + path);
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
}

inline std::vector<FullereneGraph> load_planar_code(const std::string& path) {
    return read_planar_code(read_file(path));
}

inline void save_planar_code(const std::string& path, const std::vector<FullereneGraph>& graphs) {
    write_file(path, write_planar_code(graphs));
}

inline std::string write_adjacency_text(const FullereneGraph& g) {
    std::ostringstream out;
    for (Vertex v = 0; v < g.order(); ++v) {
        const auto& r = g.neighbors(v);
        out << v << ": " << r[0] << ' ' << r[1] << ' ' << r[2] << '\n';
    }
    return out.str();
}

inline std::vector<FullereneGraph> read_adjacency_text(std::string_view text) {
    std::vector<FullereneGraph> out;
    std::vector<std::vector<Vertex>> lists;
    auto flush = [&] {
        if (lists.empty()) return;
        out.push_back(build_and_validate(static_cast<int>(lists.size()), lists));
        lists.clear();
    };
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            flush();
            continue;
        }
        const auto colon = line.find(':');
        if (colon == std::string::npos) throw FormatError("line " + std::to_string(lineno) + ": expected 'v: a b c'");
        const int v = std::stoi(line.substr(0, colon));
        if (v != static_cast<int>(lists.size()))
            throw FormatError("line " + std::to_string(lineno) + ": vertices must be listed in order");
        std::istringstream rest(line.substr(colon + 1));
        std::vector<Vertex> nbrs;
        for (int w; rest >> w;) nbrs.push_back(w);
        lists.push_back(std::move(nbrs));
    }
    flush();
    return out;
}

}  // namespace resonantia
