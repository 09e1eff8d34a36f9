#pragma once

#include <cctype>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tsb/errors.hpp"
#include "tsb/graph.hpp"

namespace tsb {

// ---------------------------------------------------------------------------
// Edge-list text format
//
//   # comment lines and blank lines are ignored
//   n=<count>          optional, declares the order explicitly
//   u v                one edge per line, 0-based indices
//
// Without the n= header the order is inferred as (largest index + 1).
// Duplicate edges collapse; self-loops are rejected. Errors carry 1-based
// line numbers.
// ---------------------------------------------------------------------------

inline Graph parse_edge_list(const std::string& text) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    long declared_n = -1;
    long max_index = -1;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool seen_content = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        // Trim surrounding whitespace (tolerates \r from CRLF input).
        auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)); };
        while (!line.empty() && is_space(line.back())) line.pop_back();
        std::size_t start = 0;
        while (start < line.size() && is_space(line[start])) ++start;
        line.erase(0, start);
        if (line.empty()) continue;

        const std::string where = "line " + std::to_string(lineno) + ": ";
        if (!seen_content && line.rfind("n=", 0) == 0) {
            seen_content = true;
            try {
                std::size_t used = 0;
                declared_n = std::stol(line.substr(2), &used);
                if (used != line.size() - 2 || declared_n < 0)
                    throw std::invalid_argument("bad");
            } catch (const std::exception&) {
                throw ParseError(where + "malformed order header '" + line + "'");
            }
            continue;
        }
        seen_content = true;
        std::istringstream ls(line);
        long u, v;
        std::string extra;
        if (!(ls >> u >> v) || (ls >> extra))
            throw ParseError(where + "expected two integers, got '" + line + "'");
        if (u < 0 || v < 0)
            throw ParseError(where + "negative vertex index");
        if (u == v)
            throw ValidationError(where + "self-loop at vertex " + std::to_string(u));
        if (declared_n >= 0 && (u >= declared_n || v >= declared_n))
            throw ParseError(where + "vertex index exceeds declared order n=" +
                             std::to_string(declared_n));
        max_index = std::max({max_index, u, v});
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    long n = declared_n >= 0 ? declared_n : max_index + 1;
    return Graph(static_cast<int>(n), std::move(edges));
}

inline std::string emit_edge_list(const Graph& g) {
    std::string out = "n=" + std::to_string(g.order()) + "\n";
    for (const auto& [u, v] : g.edges())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

// ---------------------------------------------------------------------------
// graph6 byte format
//
// Size header N(n): one byte n+63 for n <= 62; '~' plus three bytes for
// n <= 258047; '~~' plus six bytes beyond. Then the upper-triangle adjacency
// bits x(0,1) x(0,2) x(1,2) x(0,3) ... packed big-endian six per byte, each
// byte offset by 63, final group zero-padded. Emission is canonical, so
// parse/emit round trips are byte-identical.
// ---------------------------------------------------------------------------

inline Graph parse_graph6(std::string_view bytes) {
    static constexpr std::string_view kHeader = ">>graph6<<";
    if (bytes.substr(0, kHeader.size()) == kHeader) bytes.remove_prefix(kHeader.size());
    while (!bytes.empty() && (bytes.back() == '\n' || bytes.back() == '\r')) bytes.remove_suffix(1);
    if (bytes.empty()) throw ParseError("graph6: empty input");

    for (char c : bytes)
        if (static_cast<unsigned char>(c) < 63 || static_cast<unsigned char>(c) > 126)
            throw ParseError("graph6: byte outside printable range [63,126]");

    std::size_t pos = 0;
    std::uint64_t n = 0;
    auto take = [&]() -> std::uint64_t {
        if (pos >= bytes.size()) throw ParseError("graph6: truncated size header");
        return static_cast<std::uint64_t>(bytes[pos++]) - 63;
    };
    std::uint64_t b0 = take();
    if (b0 < 63) {
        n = b0;
    } else { // b0 == 63, i.e. '~'
        std::uint64_t b1 = take();
        if (b1 < 63) {
            n = (b1 << 12) | (take() << 6) | take();
        } else {
            n = 0;
            for (int i = 0; i < 6; ++i) n = (n << 6) | take();
        }
    }
    if (n > 100000000) throw ParseError("graph6: implausible order " + std::to_string(n));

    const std::uint64_t nbits = n * (n - 1) / 2;
    const std::uint64_t nbytes = (nbits + 5) / 6;
    if (bytes.size() - pos < nbytes) throw ParseError("graph6: truncated adjacency data");
    if (bytes.size() - pos > nbytes) throw ParseError("graph6: trailing data after adjacency bits");

    std::vector<std::pair<Vertex, Vertex>> edges;
    std::uint64_t bit = 0;
    for (Vertex v = 1; v < static_cast<Vertex>(n); ++v) {
        for (Vertex u = 0; u < v; ++u, ++bit) {
            std::uint64_t byte = static_cast<std::uint64_t>(bytes[pos + bit / 6]) - 63;
            if ((byte >> (5 - bit % 6)) & 1u) edges.emplace_back(u, v);
        }
    }
    // Padding bits beyond the triangle must be zero.
    for (std::uint64_t b = bit; b < nbytes * 6; ++b) {
        std::uint64_t byte = static_cast<std::uint64_t>(bytes[pos + b / 6]) - 63;
        if ((byte >> (5 - b % 6)) & 1u)
            throw ParseError("graph6: nonzero padding bits");
    }
    return Graph(static_cast<int>(n), std::move(edges));
}

inline std::string emit_graph6(const Graph& g) {
    const std::uint64_t n = static_cast<std::uint64_t>(g.order());
    std::string out;
    if (n <= 62) {
        out += static_cast<char>(n + 63);
    } else if (n <= 258047) {
        out += '~';
        out += static_cast<char>(((n >> 12) & 63) + 63);
        out += static_cast<char>(((n >> 6) & 63) + 63);
        out += static_cast<char>((n & 63) + 63);
    } else {
        out += '~';
        out += '~';
        for (int shift = 30; shift >= 0; shift -= 6)
            out += static_cast<char>(((n >> shift) & 63) + 63);
    }
    const std::uint64_t nbits = n * (n - 1) / 2;
    std::vector<std::uint8_t> groups((nbits + 5) / 6, 0);
    std::uint64_t bit = 0;
    for (Vertex v = 1; v < g.order(); ++v)
        for (Vertex u = 0; u < v; ++u, ++bit)
            if (g.has_edge(u, v)) groups[bit / 6] |= static_cast<std::uint8_t>(1u << (5 - bit % 6));
    for (auto gbyte : groups) out += static_cast<char>(gbyte + 63);
    return out;
}

} // namespace tsb
