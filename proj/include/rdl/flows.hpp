#pragma once

// Uniform-capacity bipartite max-flow with its weighted vertex cover, and the
// flow finder on totally coloured graphs.

#include <cstdint>
#include <optional>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "rdl/colorings.hpp"
#include "rdl/graph_families.hpp"

namespace rdl {

struct CapacitatedBipartite {
  std::vector<int> X;
  std::vector<int> Y;
  std::vector<std::pair<int, int>> edges;  // (x, y)
  std::int64_t r = 1;
  std::int64_t s = 1;

  /// Throws on overlapping sides, unknown endpoints, duplicates or r, s < 1.
  void validate() const;
};

struct FlowEdge {
  int u;
  int v;
  std::int64_t f;
  friend bool operator==(const FlowEdge&, const FlowEdge&) = default;
};

struct FlowCertificate {
  std::int64_t D = 0;
  std::vector<FlowEdge> h;  // positive entries only, sorted by (u, v)
  VertexSet Z;
};

FlowCertificate mfmc(const CapacitatedBipartite& g);

/// Checks every certificate invariant against g; returns an empty string when valid.
std::string check_certificate(const CapacitatedBipartite& g, const FlowCertificate& c);

nlohmann::json to_json(const FlowCertificate& c);
FlowCertificate certificate_from_json(const nlohmann::json& j);

struct ColoredDegreeProfile {
  std::vector<int> degrees;  // d_1 <= ... <= d_|R|
  PLFunction g = PLFunction::linear(0.0);
};

/// Blue degrees (towards blue vertices, along blue host edges) of the red vertices.
ColoredDegreeProfile colored_degree_profile(const TwoColoring& chi, const std::vector<Color>& vertex_colors,
                                            const FiniteGraph* host = nullptr);

struct FindflowOptions {
  Rational epsilon{1, 10};
  /// Defaults to gamma*epsilon/100 with gamma = (1-f)/(1+lambda/(1-f)).
  std::optional<double> eta;
  /// Host graph on [n]; complete when absent.
  const FiniteGraph* host = nullptr;
};

struct FindflowResult {
  int t = 0;
  Color color = Color::Blue;
  std::vector<FlowEdge> h;
  std::int64_t D = 0;
  Rational value{0};
  bool degenerate = false;
  double eta = 0.0;
  long long n_threshold = 0;
  ColoredDegreeProfile profile;
};

FindflowResult findflow(const TwoColoring& chi, const std::vector<Color>& vertex_colors, int r, int s,
                        const FindflowOptions& opt = {});

/// Re-derives the three output conditions on (t, C, h); empty string when they hold.
std::string check_findflow(const TwoColoring& chi, const std::vector<Color>& vertex_colors, int r, int s,
                           const FindflowResult& res, const FiniteGraph* host = nullptr);

}  // namespace rdl
