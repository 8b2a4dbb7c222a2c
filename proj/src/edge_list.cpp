#include "kdom/edge_list.hpp"

#include <charconv>
#include <set>
#include <vector>

#include "kdom/error.hpp"

namespace kdom {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

// Splits a line into unsigned decimal fields; false on any other token.
bool read_fields(std::string_view line, std::vector<std::uint64_t>& out) {
    out.clear();
    std::size_t i = 0;
    while (i < line.size()) {
        if (is_space(line[i])) {
            ++i;
            continue;
        }
        std::uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
        if (ec != std::errc{} || ptr == line.data() + i) return false;
        std::size_t consumed = static_cast<std::size_t>(ptr - (line.data() + i));
        i += consumed;
        if (i < line.size() && !is_space(line[i])) return false;
        out.push_back(value);
    }
    return true;
}

}  // namespace

Graph parse_edge_list(std::string_view text, BuildOptions options) {
    bool have_header = false;
    std::uint64_t n = 0;
    std::uint64_t m = 0;
    std::size_t header_line = 0;
    std::vector<Edge> edges;
    std::set<Edge> seen;
    std::vector<std::uint64_t> fields;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        std::size_t first = 0;
        while (first < line.size() && is_space(line[first])) ++first;
        if (first == line.size() || line[first] == '#') continue;

        if (!read_fields(line, fields) || fields.size() != 2) {
            throw Error(ErrorCode::ParseError, "expected two non-negative integers", line_no);
        }
        if (!have_header) {
            have_header = true;
            header_line = line_no;
            n = fields[0];
            m = fields[1];
            if (n > kInfinity) throw Error(ErrorCode::ParseError, "vertex count too large", line_no);
            continue;
        }
        if (edges.size() == m) {
            throw Error(ErrorCode::CountMismatch, "more than the declared " + std::to_string(m) + " edges", line_no);
        }
        if (fields[0] >= n || fields[1] >= n) {
            throw Error(ErrorCode::IndexOutOfRange, "vertex index not in [0, " + std::to_string(n) + ")", line_no);
        }
        Edge e{static_cast<Vertex>(fields[0]), static_cast<Vertex>(fields[1])};
        Edge key{std::min(e.u, e.v), std::max(e.u, e.v)};
        if (options.strict && (e.u == e.v || !seen.insert(key).second)) {
            throw Error(ErrorCode::SimplenessViolation, e.u == e.v ? "self-loop" : "repeated edge", line_no);
        }
        edges.push_back(e);
    }
    if (!have_header) throw Error(ErrorCode::ParseError, "missing \"n m\" header", line_no == 0 ? 1 : line_no);
    if (edges.size() != m) {
        throw Error(ErrorCode::CountMismatch,
                    "header declares " + std::to_string(m) + " edges, found " + std::to_string(edges.size()),
                    header_line);
    }
    return Graph::from_edge_list(n, edges, options);
}

std::string serialize_edge_list(const Graph& g) {
    std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
    for (const Edge& e : g.edges()) {
        out += std::to_string(e.u);
        out += ' ';
        out += std::to_string(e.v);
        out += '\n';
    }
    return out;
}

}  // namespace kdom
