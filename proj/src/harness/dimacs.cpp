#include "rvis/harness/dimacs.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace rvis {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

long long parse_count(std::string_view field, std::size_t line_no, const char* what) {
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size()) {
        throw ParseError(std::string("malformed ") + what + " '" + std::string(field) + "'", line_no);
    }
    return value;
}

}  // namespace

DimacsInstance parse_dimacs(std::string_view text) {
    DimacsInstance out;
    std::optional<Vertex> n;
    long long declared_edges = 0;
    std::size_t edge_lines = 0;
    std::vector<Edge> edges;
    std::vector<std::pair<Vertex, Rational>> weight_lines;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        const auto fields = split_fields(line);
        if (fields.empty() || fields[0] == "c") continue;

        const std::string_view tag = fields[0];
        if (tag == "p") {
            if (n) throw ParseError("second problem line", line_no);
            if (fields.size() != 4 || (fields[1] != "edge" && fields[1] != "col")) {
                throw ParseError("expected 'p edge <n> <m>'", line_no);
            }
            const long long nv = parse_count(fields[2], line_no, "vertex count");
            declared_edges = parse_count(fields[3], line_no, "edge count");
            if (nv < 0 || nv > std::numeric_limits<Vertex>::max() || declared_edges < 0) {
                throw ParseError("counts out of range", line_no);
            }
            n = static_cast<Vertex>(nv);
            continue;
        }
        if (!n) throw ParseError("'" + std::string(tag) + "' line before the problem line", line_no);

        auto endpoint = [&](std::string_view field) {
            const long long v = parse_count(field, line_no, "vertex id");
            if (v < 1 || v > *n) {
                throw ParseError("vertex " + std::string(field) + " outside 1.." + std::to_string(*n), line_no);
            }
            return static_cast<Vertex>(v - 1);
        };

        if (tag == "e") {
            if (fields.size() != 3) throw ParseError("expected 'e <u> <v>'", line_no);
            const Vertex u = endpoint(fields[1]);
            const Vertex v = endpoint(fields[2]);
            if (u == v) throw ParseError("self-loop on vertex " + std::string(fields[1]), line_no);
            edges.emplace_back(u, v);
            ++edge_lines;
        } else if (tag == "w") {
            if (fields.size() != 3) throw ParseError("expected 'w <v> <p>/<q>'", line_no);
            const Vertex v = endpoint(fields[1]);
            try {
                weight_lines.emplace_back(v, parse_rational(fields[2]));
            } catch (const std::invalid_argument& e) {
                throw ParseError(e.what(), line_no);
            }
            if (weight_lines.back().second < 0) throw ParseError("negative weight", line_no);
        } else {
            throw ParseError("unknown line type '" + std::string(tag) + "'", line_no);
        }
    }
    if (!n) throw ParseError("missing problem line 'p edge <n> <m>'", line_no);
    if (static_cast<long long>(edge_lines) != declared_edges) {
        out.warnings.push_back("problem line declares " + std::to_string(declared_edges) + " edges but " +
                               std::to_string(edge_lines) + " edge lines were read");
    }
    out.graph = build_graph(*n, edges);
    if (!weight_lines.empty()) {
        std::vector<Rational> w(*n, Rational(1));
        for (auto& [v, value] : weight_lines) w[v] = std::move(value);
        out.weights = VertexWeights(std::move(w));
    }
    return out;
}

std::string write_dimacs(const Graph& g, const VertexWeights* w, std::string_view comment) {
    std::ostringstream out;
    if (!comment.empty()) out << "c " << comment << '\n';
    out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
    if (w != nullptr && !w->is_unit()) {
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            const Rational& x = (*w)[v];
            out << "w " << v + 1 << ' ' << numerator(x) << '/' << denominator(x) << '\n';
        }
    }
    return out.str();
}

DimacsInstance read_dimacs_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_dimacs(buffer.str());
}

void write_dimacs_file(const std::string& path, const Graph& g, const VertexWeights* w, std::string_view comment) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << write_dimacs(g, w, comment);
}

}  // namespace rvis
