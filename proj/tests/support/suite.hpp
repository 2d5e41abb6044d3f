#pragma once

#include <string>
#include <vector>

#include "graphcodes/graph.hpp"

namespace suite {

struct Named {
  std::string name;
  graphcodes::Graph graph;
};

inline graphcodes::Graph two_triangles() {
  const auto k3 = graphcodes::family::complete(3);
  return graphcodes::disjoint_union(k3, k3);
}

/// The reference graph collection: paths P_2..P_5 (by vertex count), C_3..C_8,
/// K_4, K_5, K_{2,2}, K_{2,3}, K_{3,3}, K_{2,2,2}, parallel(2,2,2),
/// parallel(2,3) and two disjoint triangles.
inline std::vector<Named> graphs() {
  using namespace graphcodes::family;
  std::vector<Named> out;
  for (int n = 2; n <= 5; ++n) out.push_back({"P" + std::to_string(n), path(n)});
  for (int n = 3; n <= 8; ++n) out.push_back({"C" + std::to_string(n), cycle(n)});
  out.push_back({"K4", complete(4)});
  out.push_back({"K5", complete(5)});
  out.push_back({"K22", complete_bipartite(2, 2)});
  out.push_back({"K23", complete_bipartite(2, 3)});
  out.push_back({"K33", complete_bipartite(3, 3)});
  const std::vector<int> k222 = {2, 2, 2};
  out.push_back({"K222", complete_multipartite(k222)});
  out.push_back({"par222", parallel_composition(k222)});
  const std::vector<int> p23 = {2, 3};
  out.push_back({"par23", parallel_composition(p23)});
  out.push_back({"2K3", two_triangles()});
  return out;
}

}  // namespace suite
