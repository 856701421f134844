#include "mbd/graph_io.hpp"

#include <sstream>

namespace mbd {

namespace {

void append_bits(std::string& out, int& acc, int& filled, bool bit) {
    acc = (acc << 1) | (bit ? 1 : 0);
    if (++filled == 6) {
        out += static_cast<char>(acc + 63);
        acc = 0;
        filled = 0;
    }
}

}  // namespace

std::string write_graph6(const Graph& g) {
    const int n = g.n();
    std::string out;
    if (n <= 62) {
        out += static_cast<char>(n + 63);
    } else {
        out += '~';
        out += static_cast<char>(((n >> 12) & 63) + 63);
        out += static_cast<char>(((n >> 6) & 63) + 63);
        out += static_cast<char>((n & 63) + 63);
    }
    int acc = 0, filled = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) append_bits(out, acc, filled, g.adjacent(i, j));
    if (filled > 0) out += static_cast<char>((acc << (6 - filled)) + 63);
    return out;
}

Graph parse_graph6(const std::string& text) {
    // Strip one optional header and trailing newline.
    std::string s = text;
    if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    if (s.empty()) throw GraphFormatError("graph6: empty input");

    std::size_t pos = 0;
    auto take = [&]() -> int {
        if (pos >= s.size())
            throw GraphFormatError("graph6: truncated at byte " + std::to_string(pos));
        unsigned char c = static_cast<unsigned char>(s[pos]);
        if (c < 63 || c > 126)
            throw GraphFormatError("graph6: invalid byte " + std::to_string(static_cast<int>(c)) +
                                   " at position " + std::to_string(pos));
        ++pos;
        return c - 63;
    };

    long long n;
    if (s[0] != '~') {
        n = take();
    } else {
        ++pos;
        if (pos < s.size() && s[pos] == '~')
            throw GraphFormatError("graph6: 8-byte vertex counts not supported");
        long long a = take(), b = take(), c = take();
        n = (a << 12) | (b << 6) | c;
    }
    if (n > VertexSet::kMaxVertices)
        throw GraphFormatError("graph6: " + std::to_string(n) + " vertices exceeds width limit of " +
                               std::to_string(VertexSet::kMaxVertices));

    const long long nbits = n * (n - 1) / 2;
    const std::size_t need = static_cast<std::size_t>((nbits + 5) / 6);
    if (s.size() - pos != need)
        throw GraphFormatError("graph6: expected " + std::to_string(need) + " data bytes, got " +
                               std::to_string(s.size() - pos));

    std::vector<Edge> es;
    int acc = 0, left = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            if (left == 0) {
                acc = take();
                left = 6;
            }
            if ((acc >> (left - 1)) & 1) es.emplace_back(i, j);
            --left;
        }
    if (left > 0 && (acc & ((1 << left) - 1)) != 0)
        throw GraphFormatError("graph6: nonzero padding bits at position " + std::to_string(pos - 1));
    return Graph::from_edges(static_cast<int>(n), es);
}

Graph parse_edge_list(const std::string& text, int n) {
    std::istringstream in(text);
    std::string line;
    std::vector<Edge> es;
    int maxv = -1;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        long long u, v;
        if (!(ls >> u)) continue;  // blank line
        if (!(ls >> v))
            throw GraphFormatError("edge list: line " + std::to_string(lineno) +
                                   ": expected two vertex ids");
        std::string extra;
        if (ls >> extra)
            throw GraphFormatError("edge list: line " + std::to_string(lineno) + ": trailing token '" +
                                   extra + "'");
        if (u < 0 || v < 0 || u >= VertexSet::kMaxVertices || v >= VertexSet::kMaxVertices)
            throw GraphFormatError("edge list: line " + std::to_string(lineno) + ": vertex id out of range");
        if (u == v)
            throw GraphFormatError("edge list: line " + std::to_string(lineno) + ": loop at vertex " +
                                   std::to_string(u));
        es.emplace_back(static_cast<int>(u), static_cast<int>(v));
        maxv = std::max(maxv, static_cast<int>(std::max(u, v)));
    }
    int count = std::max(n, maxv + 1);
    if (count < 0) count = 0;
    return Graph::from_edges(count, es);
}

std::string write_edge_list(const Graph& g) {
    std::string out;
    for (auto [u, v] : g.edges()) {
        out += std::to_string(u);
        out += ' ';
        out += std::to_string(v);
        out += '\n';
    }
    return out;
}

}  // namespace mbd
