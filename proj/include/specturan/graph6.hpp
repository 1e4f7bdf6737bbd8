#pragma once

// graph6: ASCII line format for undirected graphs. Header encodes the order
// (one byte for n <= 62, '~' plus three bytes up to n = 258047), body packs
// the upper-triangle bits column by column (x(0,1), x(0,2), x(1,2),
// x(0,3), ...) into 6-bit groups, most significant bit first, each group
// offset by 63 into the printable range.

#include <string>

#include "graph.hpp"

namespace specturan {

inline std::string to_graph6(const Graph& g) {
    const int n = g.order();
    if (n > 258047) throw std::invalid_argument("to_graph6: order exceeds format limit");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    }
    int acc = 0, nbits = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
    return out;
}

inline Graph parse_graph6(const std::string& line) {
    std::size_t pos = 0;
    // Optional header emitted by some tools.
    const std::string hdr = ">>graph6<<";
    if (line.rfind(hdr, 0) == 0) pos = hdr.size();

    auto byte = [&](std::size_t i) -> int {
        if (i >= line.size()) throw std::invalid_argument("parse_graph6: truncated line");
        int c = static_cast<unsigned char>(line[i]);
        if (c < 63 || c > 126) throw std::invalid_argument("parse_graph6: byte outside printable range");
        return c - 63;
    };

    long long n;
    if (line.size() <= pos) throw std::invalid_argument("parse_graph6: empty line");
    if (line[pos] == '~') {
        if (pos + 3 < line.size() && line[pos + 1] == '~')
            throw std::invalid_argument("parse_graph6: order exceeds supported range");
        n = (static_cast<long long>(byte(pos + 1)) << 12) | (byte(pos + 2) << 6) | byte(pos + 3);
        pos += 4;
    } else {
        n = byte(pos);
        pos += 1;
    }
    if (n > Graph::kMaxOrder) throw std::invalid_argument("parse_graph6: order exceeds limit");

    Graph g(static_cast<int>(n));
    long long bits_needed = n * (n - 1) / 2;
    long long bytes_needed = (bits_needed + 5) / 6;
    if (static_cast<long long>(line.size() - pos) != bytes_needed)
        throw std::invalid_argument("parse_graph6: body length mismatch");

    int acc = 0, nbits = 0;
    std::size_t at = pos;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            if (nbits == 0) {
                acc = byte(at++);
                nbits = 6;
            }
            if ((acc >> (nbits - 1)) & 1) g.add_edge(u, v);
            --nbits;
        }
    }
    if (nbits > 0 && (acc & ((1 << nbits) - 1)) != 0)
        throw std::invalid_argument("parse_graph6: nonzero padding bits");
    return g;
}

}  // namespace specturan
