#pragma once

// Greedy W-structures and the alternating embedding of an H-prefix into the
// colour-C edges of a shaded colouring.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rdl/colorings.hpp"
#include "rdl/graph_families.hpp"

namespace rdl {

struct WComponent {
  enum class Kind : std::uint8_t { Isolated, Piece };
  Kind kind = Kind::Isolated;
  std::vector<int> X;  // r vertices of the opposite colour (pieces only)
  std::vector<int> Y;  // s vertices of colour C; the single vertex when isolated
  int shade = 0;       // C-side shade index j
  int x_shade = 0;     // opposite-colour shade of X (pieces only)

  [[nodiscard]] std::vector<int> vertices() const;
};

struct WStructure {
  Color color = Color::Red;
  int r = 1;
  int s = 1;
  std::vector<WComponent> components;  // ordered by smallest vertex

  [[nodiscard]] std::size_t vertex_count() const;
  /// |V(W)| / n.
  [[nodiscard]] Rational density(int n) const;
};

/// Colour of each vertex under the shading, with X read as red.
std::vector<Color> shading_vertex_colors(const Shading& sh);

struct BuildWOptions {
  int window = 12;  // candidates scanned after the first vertex of a piece
};

WStructure build_W(const TwoColoring& chi, const Shading& sh, int r, int s, const BuildWOptions& opt = {});
WStructure build_W(const TwoColoring& chi, const Shading& sh, int r, int s, Color c, const BuildWOptions& opt = {});

/// Empty string when every structural invariant of W holds.
std::string check_W(const TwoColoring& chi, const Shading& sh, const WStructure& w);

struct HPrefixSpec {
  GraphFamily family = GraphFamily::path_power(1);
  int size = 0;
  std::vector<int> psi;             // proper colouring into [a]
  std::vector<VertexSet> templates; // doubly independent I_i
  int a = 2;
  int b = 1;
};

/// Empty string when psi is proper and every template satisfies |I| = r,
/// |N(I)| <= s, I and N(I) independent and psi(N(I)) = a.
std::string check_spec(const HPrefixSpec& spec, int r, int s);

struct EmbedStats {
  int steps = 0;
  int vertex_steps = 0;
  int component_steps = 0;
  int pieces_placed = 0;
  int isolated_placed = 0;
  int max_tset = 0;
  bool tset_bound_ok = true;
  int progress_violations = 0;
};

struct EmbeddingState {
  Color color = Color::Red;
  std::vector<int> phi;          // H vertex -> host vertex, -1 when undefined
  std::vector<int> component;    // H vertex -> component id
  std::vector<int> kappa;        // component id -> shade index
  std::vector<char> consumed;    // per W component
  std::vector<int> used_templates;
  bool incomplete = false;
  std::string incomplete_reason;
  EmbedStats stats;

  [[nodiscard]] VertexSet image() const;
};

EmbeddingState embed(const TwoColoring& chi, const Shading& sh, const WStructure& w, const HPrefixSpec& spec,
                     int budget);

struct EmbedReport {
  bool injective = true;
  bool edge_colors = true;
  bool progress = true;
  bool consumed_in_image = true;
  bool tset_bound = true;
  Rational image_density{0};
  std::string failure;
  [[nodiscard]] bool passed() const { return injective && edge_colors && progress && consumed_in_image && tset_bound; }
};

EmbedReport verify_embedding(const EmbeddingState& st, const TwoColoring& chi, const Shading& sh,
                             const HPrefixSpec& spec, const WStructure& w);

nlohmann::json to_json(const EmbeddingState& st);

/// Hand-built a-good instance with a = 2 and one shade per colour, H = copies
/// of K_{1,2} with the two leaves as templates, W = the planted pieces.
///  variant 1: red clique R1 reservoir, pieces with X in B2 and Y in R1.
///  variant 2: red R2, blue clique B1, every R2-B1 edge red (exercises kappa = a).
/// The H-prefix has 2*pieces + 1 + spare copies and the reservoir hosts exactly
/// the copies not used by pieces, so a full run defines all of H.
struct PlantedInstance {
  TwoColoring chi = TwoColoring::constant(0, Color::Red);
  Shading shading;
  HPrefixSpec spec;
  WStructure w;
  int r = 2;
  int s = 1;
};

PlantedInstance make_planted(int variant, int pieces, int spare, std::uint64_t seed);

}  // namespace rdl
