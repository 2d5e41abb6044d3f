#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graphcodes/codes.hpp"
#include "graphcodes/eulerian3.hpp"
#include "graphcodes/graph.hpp"
#include "graphcodes/toric.hpp"
#include "graphcodes_cli/report.hpp"

namespace graphcodes::cli {

struct VerifyOptions {
  std::uint64_t budget = kDefaultBudget;
  std::uint64_t torus_cap = kDefaultTorusCap;
  std::uint64_t monomial_cap = kDefaultMonomialCap;
  std::uint64_t subset_cap = kDefaultSubsetCap;
  std::string graph_name;
  /// Path lengths when the graph is known to be a parallel composition.
  std::optional<std::vector<int>> parallel_lengths;
};

/// Structural facts verify uses to decide which closed forms apply.
struct Shape {
  GraphSummary summary;
  bool connected = false;
  /// Independent classes of a connected complete multipartite graph (r >= 2).
  std::optional<std::vector<int>> multipartite_parts;
  std::optional<int> even_cycle_half;
  /// Colour class sizes of a connected bipartite graph.
  std::optional<std::pair<int, int>> bipartite_parts;
};

Shape recognize(const Graph& g);

/// Brute force against every applicable closed form for d = 0..d_max.
VerifyReport verify(const Graph& g, int q, int d_max, const VerifyOptions& opts = {});

}  // namespace graphcodes::cli
