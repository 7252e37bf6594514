#include "kempe/graph6.hpp"

#include <cstdint>

#include "kempe/errors.hpp"

namespace kempe {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

// Reads the size field (1, 4, or 8 bytes) and advances pos.
std::int64_t read_size(std::string_view s, std::size_t& pos) {
    if (pos >= s.size()) throw ParseError("graph6: missing size field", pos);
    unsigned char c = static_cast<unsigned char>(s[pos]);
    if (c < 63 || c > 126) throw ParseError("graph6: size byte out of range 63..126", pos);
    if (c < 126) {
        ++pos;
        return c - 63;
    }
    int extra = 3;
    ++pos;
    if (pos < s.size() && static_cast<unsigned char>(s[pos]) == 126) {
        extra = 6;
        ++pos;
    }
    std::int64_t n = 0;
    for (int i = 0; i < extra; ++i, ++pos) {
        if (pos >= s.size()) throw ParseError("graph6: truncated size field", pos);
        unsigned char b = static_cast<unsigned char>(s[pos]);
        if (b < 63 || b > 126) throw ParseError("graph6: size byte out of range 63..126", pos);
        n = (n << 6) | (b - 63);
    }
    return n;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    std::size_t pos = 0;
    if (text.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();

    std::int64_t n64 = read_size(text, pos);
    if (n64 > 100000) throw ParseError("graph6: vertex count too large", pos);
    const int n = static_cast<int>(n64);

    const std::size_t bits_needed = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t bytes_needed = (bits_needed + 5) / 6;
    if (text.size() - pos < bytes_needed)
        throw ParseError("graph6: body shorter than " + std::to_string(bytes_needed) + " bytes",
                         text.size());
    // allow a trailing newline, nothing else
    std::size_t end = pos + bytes_needed;
    for (std::size_t i = end; i < text.size(); ++i)
        if (text[i] != '\n' && text[i] != '\r')
            throw ParseError("graph6: trailing garbage after body", i);

    Graph g(n);
    std::size_t bit = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row, ++bit) {
            std::size_t byte_idx = pos + bit / 6;
            unsigned char c = static_cast<unsigned char>(text[byte_idx]);
            if (c < 63 || c > 126)
                throw ParseError("graph6: body byte out of range 63..126", byte_idx);
            unsigned int group = c - 63;
            if ((group >> (5 - bit % 6)) & 1u) g.add_edge(row, col);
        }
    }
    // padding bits must be zero for a canonical encoding; tolerate them on
    // input but reject non-printable bytes (checked above)
    return g;
}

std::string encode_graph6(const Graph& g) {
    const int n = g.vertex_count();
    std::string out;
    if (n < 63) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((static_cast<long long>(n) >> shift) & 63) + 63));
    }
    unsigned int group = 0;
    int filled = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            group = (group << 1) | (g.has_edge(row, col) ? 1u : 0u);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + 63));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
    return out;
}

std::vector<Graph> parse_graph6_lines(std::string_view text) {
    std::vector<Graph> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t nl = text.find('\n', start);
        std::string_view line =
            text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
        if (line.substr(0, kHeader.size()) == kHeader)
            out.push_back(parse_graph6(line));
        else if (!line.empty() && line.front() != '>')
            out.push_back(parse_graph6(line));
        if (nl == std::string_view::npos) break;
        start = nl + 1;
    }
    return out;
}

}  // namespace kempe
