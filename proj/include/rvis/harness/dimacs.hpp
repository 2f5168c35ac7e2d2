#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rvis/graph.hpp"

namespace rvis {

class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t line)
        : std::invalid_argument("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

struct DimacsInstance {
    Graph graph;
    /// Present when the text carried at least one `w` line; unlisted vertices default to weight 1.
    std::optional<VertexWeights> weights;
    std::vector<std::string> warnings;
};

/// Reads `p edge n m`, `e u v` (1-indexed) and the weight extension `w v p/q`. Comment lines start
/// with `c`; blank lines are skipped. Duplicate edges collapse. A mismatch between m and the number of
/// `e` lines only produces a warning. Throws ParseError naming the offending line.
DimacsInstance parse_dimacs(std::string_view text);

/// Inverse of parse_dimacs. Weight lines are written only for a non-unit weight vector.
std::string write_dimacs(const Graph& g, const VertexWeights* w = nullptr, std::string_view comment = {});

DimacsInstance read_dimacs_file(const std::string& path);
void write_dimacs_file(const std::string& path, const Graph& g, const VertexWeights* w = nullptr,
                       std::string_view comment = {});

}  // namespace rvis
