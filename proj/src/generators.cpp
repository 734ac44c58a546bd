#include <string>

#include "orientdp/error.hpp"
#include "orientdp/graph.hpp"

namespace orientdp {

Family parse_family(std::string_view name) {
  if (name == "path") return Family::Path;
  if (name == "cycle") return Family::Cycle;
  if (name == "complete") return Family::Complete;
  if (name == "grid") return Family::Grid;
  if (name == "book") return Family::Book;
  throw Error(ErrorCode::InvalidArgument, "unknown family '" + std::string(name) + "'");
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::Path: return "path";
    case Family::Cycle: return "cycle";
    case Family::Complete: return "complete";
    case Family::Grid: return "grid";
    case Family::Book: return "book";
  }
  return "?";
}

UndirectedGraph generate(Family family, std::size_t p) {
  const std::size_t minimum =
      (family == Family::Cycle || family == Family::Complete) ? 3 : 1;
  if (p < minimum) {
    throw Error(ErrorCode::InvalidArgument,
                std::string(family_name(family)) + " needs parameter >= " +
                    std::to_string(minimum));
  }
  std::vector<Edge> edges;
  std::size_t n = 0;
  switch (family) {
    case Family::Path:
      n = p;
      for (Vertex v = 0; v + 1 < p; ++v) edges.push_back({v, v + 1});
      break;
    case Family::Cycle:
      n = p;
      for (Vertex v = 0; v < p; ++v) edges.push_back({v, static_cast<Vertex>((v + 1) % p)});
      break;
    case Family::Complete:
      n = p;
      for (Vertex a = 0; a < p; ++a) {
        for (Vertex b = a + 1; b < p; ++b) edges.push_back({a, b});
      }
      break;
    case Family::Grid: {
      n = p * p;
      auto id = [p](std::size_t r, std::size_t c) { return static_cast<Vertex>(r * p + c); };
      for (std::size_t r = 0; r < p; ++r) {
        for (std::size_t c = 0; c < p; ++c) {
          if (c + 1 < p) edges.push_back({id(r, c), id(r, c + 1)});
          if (r + 1 < p) edges.push_back({id(r, c), id(r + 1, c)});
        }
      }
      break;
    }
    case Family::Book:
      n = p + 2;
      edges.push_back({0, 1});
      for (Vertex apex = 2; apex < n; ++apex) {
        edges.push_back({0, apex});
        edges.push_back({1, apex});
      }
      break;
  }
  return UndirectedGraph(n, std::move(edges));
}

}  // namespace orientdp
