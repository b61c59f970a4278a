#include "domset/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <tuple>
#include <vector>

namespace domset {
namespace {

struct RawEdge {
    std::uint64_t u;
    std::uint64_t v;
    std::size_t line;
};

std::string_view trim(std::string_view s) {
    const auto ws = " \t\r\f\v";
    auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

std::vector<std::string_view> tokenize(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

bool to_uint(std::string_view tok, std::uint64_t& out) {
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
    return ec == std::errc{} && ptr == tok.data() + tok.size();
}

template <typename F>
void for_each_line(std::string_view text, F&& f) {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        auto line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        ++line_no;
        f(trim(line), line_no);
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
}

[[noreturn]] void fail(const std::string& msg, std::size_t line) {
    throw ParseError(line ? msg + " at line " + std::to_string(line) : msg, line);
}

Graph build(std::uint64_t n, std::vector<RawEdge>& raw) {
    if (n == 0) fail("empty graph", 0);
    for (const auto& e : raw) {
        if (e.u == 0 || e.v == 0 || e.u > n || e.v > n) fail("vertex id out of range", e.line);
        if (e.u == e.v) fail("self-loop", e.line);
    }
    std::vector<RawEdge> sorted = raw;
    std::sort(sorted.begin(), sorted.end(), [](const RawEdge& a, const RawEdge& b) {
        return std::tuple(std::min(a.u, a.v), std::max(a.u, a.v), a.line) <
               std::tuple(std::min(b.u, b.v), std::max(b.u, b.v), b.line);
    });
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        const auto& a = sorted[i - 1];
        const auto& b = sorted[i];
        if (std::min(a.u, a.v) == std::min(b.u, b.v) && std::max(a.u, a.v) == std::max(b.u, b.v))
            fail("duplicate edge", b.line);
    }
    std::vector<Edge> edges;
    edges.reserve(raw.size());
    for (const auto& e : raw)
        edges.emplace_back(static_cast<Vertex>(e.u - 1), static_cast<Vertex>(e.v - 1));
    return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

Graph parse_edge_list(std::string_view text) {
    struct DataLine {
        std::uint64_t a, b;
        std::size_t line;
    };
    std::vector<DataLine> data;
    for_each_line(text, [&](std::string_view line, std::size_t no) {
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = trim(line.substr(0, hash));
        if (line.empty()) return;
        auto toks = tokenize(line);
        std::uint64_t a = 0, b = 0;
        if (toks.size() != 2 || !to_uint(toks[0], a) || !to_uint(toks[1], b)) fail("malformed line", no);
        data.push_back({a, b, no});
    });
    if (data.empty()) fail("empty graph", 0);

    std::uint64_t n = 0;
    std::size_t first_edge = 0;
    auto fits_header = [&] {
        const auto& h = data.front();
        if (h.a == 0 || data.size() - 1 != h.b) return false;
        return std::all_of(data.begin() + 1, data.end(), [&](const DataLine& d) { return d.a <= h.a && d.b <= h.a; });
    };
    if (fits_header()) {
        n = data.front().a;
        first_edge = 1;
    } else {
        for (const auto& d : data) n = std::max({n, d.a, d.b});
    }
    std::vector<RawEdge> raw;
    raw.reserve(data.size());
    for (std::size_t i = first_edge; i < data.size(); ++i) raw.push_back({data[i].a, data[i].b, data[i].line});
    return build(n, raw);
}

Graph parse_dimacs(std::string_view text) {
    bool have_problem = false;
    std::uint64_t n = 0;
    std::vector<RawEdge> raw;
    for_each_line(text, [&](std::string_view line, std::size_t no) {
        if (line.empty()) return;
        auto toks = tokenize(line);
        if (toks[0] == "c") return;
        if (toks[0] == "p") {
            std::uint64_t m = 0;
            if (have_problem) fail("second problem line", no);
            if (toks.size() != 4 || !to_uint(toks[2], n) || !to_uint(toks[3], m))
                fail("malformed problem line", no);
            have_problem = true;
            return;
        }
        if (toks[0] == "e") {
            if (!have_problem) fail("edge before problem line", no);
            std::uint64_t u = 0, v = 0;
            if (toks.size() != 3 || !to_uint(toks[1], u) || !to_uint(toks[2], v)) fail("malformed line", no);
            raw.push_back({u, v, no});
            return;
        }
        fail("malformed line", no);
    });
    if (!have_problem) fail("missing problem line", 0);
    return build(n, raw);
}

GraphFormat detect(std::string_view text) {
    GraphFormat found = GraphFormat::kEdgeList;
    bool done = false;
    for_each_line(text, [&](std::string_view line, std::size_t) {
        if (done || line.empty() || line.front() == '#') return;
        auto toks = tokenize(line);
        if (toks[0] == "c" || toks[0] == "p") found = GraphFormat::kDimacs;
        done = true;
    });
    return found;
}

} // namespace

std::optional<GraphFormat> parse_format_name(std::string_view name) {
    if (name == "auto") return GraphFormat::kAuto;
    if (name == "edgelist" || name == "edge-list") return GraphFormat::kEdgeList;
    if (name == "dimacs") return GraphFormat::kDimacs;
    return std::nullopt;
}

Graph parse_graph(std::string_view text, GraphFormat format) {
    if (format == GraphFormat::kAuto) format = detect(text);
    return format == GraphFormat::kDimacs ? parse_dimacs(text) : parse_edge_list(text);
}

Graph read_graph_file(const std::filesystem::path& path, GraphFormat format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path.string(), 0);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str(), format);
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (auto [u, v] : g.edges()) out << g.label(u) << ' ' << g.label(v) << '\n';
    return out.str();
}

std::string to_dimacs(const Graph& g) {
    std::ostringstream out;
    out << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (auto [u, v] : g.edges()) out << "e " << g.label(u) << ' ' << g.label(v) << '\n';
    return out.str();
}

} // namespace domset
