#include "gpcalc/presentation.hpp"

#include <fstream>
#include <sstream>

#include "gpcalc/errors.hpp"

namespace gpcalc {
namespace {

std::vector<std::string> tokens_of(std::string_view line) {
  std::istringstream in{std::string(line)};
  std::vector<std::string> out;
  for (std::string token; in >> token;) out.push_back(token);
  return out;
}

VertexGroupSpec parse_group(std::string const& text, std::size_t line) {
  if (text == "Z") return VertexGroupSpec::infinite_cyclic();
  if (text.rfind("Z/", 0) == 0 && text.size() > 2 &&
      text.find_first_not_of("0123456789", 2) == std::string::npos) {
    Integer n(text.substr(2));
    if (n >= 2) return VertexGroupSpec::finite_cyclic(n);
  }
  throw SyntaxError(line, "bad group spec '" + text + "' (expected Z or Z/n, n >= 2)");
}

}  // namespace

GraphProduct parse_presentation(std::string_view text) {
  SimplicialGraph graph;
  std::vector<VertexGroupSpec> groups;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    auto tokens = tokens_of(line);
    if (tokens.empty()) continue;

    if (tokens[0] == "vertex") {
      if (tokens.size() != 3)
        throw SyntaxError(line_no, "expected 'vertex <name> <group>'");
      if (graph.find(tokens[1]))
        throw SyntaxError(line_no, "duplicate vertex " + tokens[1]);
      if (graph.size() >= kMaxVertices)
        throw SyntaxError(line_no, "too many vertices (at most " +
                                       std::to_string(kMaxVertices) + ")");
      auto group = parse_group(tokens[2], line_no);
      graph.add_vertex(tokens[1]);
      groups.push_back(group);
    } else if (tokens[0] == "edge") {
      if (tokens.size() != 3) throw SyntaxError(line_no, "expected 'edge <u> <v>'");
      auto u = graph.find(tokens[1]);
      if (!u) throw SyntaxError(line_no, "unknown vertex " + tokens[1]);
      auto v = graph.find(tokens[2]);
      if (!v) throw SyntaxError(line_no, "unknown vertex " + tokens[2]);
      if (*u == *v) throw SyntaxError(line_no, "loop at vertex " + tokens[1]);
      if (graph.adjacent(*u, *v))
        throw SyntaxError(line_no, "duplicate edge " + tokens[1] + " " + tokens[2]);
      graph.add_edge(*u, *v);
    } else {
      throw SyntaxError(line_no, "unknown declaration '" + tokens[0] + "'");
    }
  }
  return GraphProduct(std::move(graph), std::move(groups));
}

std::string format_presentation(GraphProduct const& gp) {
  auto const& graph = gp.graph();
  std::string out;
  for (VertexId v = 0; v < gp.size(); ++v)
    out += "vertex " + graph.name(v) + " " + gp.group(v).to_string() + "\n";
  for (auto [u, v] : graph.edges())
    out += "edge " + graph.name(u) + " " + graph.name(v) + "\n";
  return out;
}

GraphProduct load_presentation(std::string const& path) {
  std::ifstream in(path);
  if (!in) throw DomainError(ErrorKind::Precondition, "cannot open " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_presentation(text.str());
}

}  // namespace gpcalc
