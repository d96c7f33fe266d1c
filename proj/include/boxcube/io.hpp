#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "boxcube/box.hpp"
#include "boxcube/cube.hpp"
#include "boxcube/graph.hpp"
#include "boxcube/interval.hpp"
#include "boxcube/oracle.hpp"

namespace boxcube::io {

using Json = nlohmann::json;

/// Malformed input: bad syntax, a missing or mistyped field, or a value
/// that violates a representation invariant. The message names the field
/// path or the line and column.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Canonical documents. Object keys are emitted sorted, rationals in lowest
// terms, edges as sorted [u, v] pairs with u < v.
Json to_json(const Graph& g);
Json to_json(const IntervalRepresentation& rep);
Json to_json(const BoxRepresentation& rep);
Json to_json(const CubeRepresentation& rep);
Json to_json(const VertexOrdering& f);
Json to_json(const OracleResult& result);

/// Cube with side 1 and anchors a/side as [num, den] pairs.
Json to_json_normalized(const CubeRepresentation& rep);

Graph graph_from_json(const Json& j);
IntervalRepresentation intervals_from_json(const Json& j);
BoxRepresentation boxes_from_json(const Json& j);
/// Accepts both the integer and the normalized cube form; the normalized
/// form is rescaled by the lcm of the anchor denominators.
CubeRepresentation cubes_from_json(const Json& j);
VertexOrdering ordering_from_json(const Json& j);
OracleResult oracle_result_from_json(const Json& j);

/// Single-line compact dump followed by a newline.
std::string canonical_text(const Json& j);

Json parse_text(const std::string& text, const std::string& source = "<input>");
Json read_json_file(const std::filesystem::path& path);

/// Plain edge list: first token n, then whitespace-separated pairs "u v".
/// Lines starting with '#' are comments.
Graph graph_from_edge_list(const std::string& text);

/// JSON graph document, or an edge list if the first non-blank character is
/// not '{'.
Graph read_graph_file(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);

/// Writes to a sibling temporary file, then renames over `path`.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace boxcube::io
