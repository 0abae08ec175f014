#pragma once

// Two-colourings of complete graphs on [n], the left-to-right adversary,
// prefix densities and the finite shade assignment.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rdl/graph_families.hpp"
#include "rdl/lipschitz.hpp"

namespace rdl {

enum class Color : std::uint8_t { Red, Blue };

inline Color other(Color c) { return c == Color::Red ? Color::Blue : Color::Red; }
char color_char(Color c);
Color color_from_char(char ch);

struct LeftmostEndpoint {
  std::vector<Color> vertex_colors;
};
struct Modular {
  int a;
};
struct ExplicitColoring {
  /// Row-major upper triangle, n(n-1)/2 entries.
  std::vector<Color> upper;
};

class TwoColoring {
 public:
  using Rule = std::variant<LeftmostEndpoint, Modular, ExplicitColoring>;

  static TwoColoring leftmost(std::vector<Color> vertex_colors);
  static TwoColoring modular(int a, int n);
  static TwoColoring explicit_upper(int n, std::vector<Color> upper);
  /// Every edge gets colour c.
  static TwoColoring constant(int n, Color c);

  [[nodiscard]] int size() const { return n_; }
  [[nodiscard]] const Rule& rule() const { return rule_; }
  [[nodiscard]] Color color(int u, int v) const;

  /// Same colouring with every edge listed explicitly.
  [[nodiscard]] TwoColoring to_explicit() const;
  /// Explicit copy with one edge recoloured.
  [[nodiscard]] TwoColoring with_edge(int u, int v, Color c) const;

  /// Equal when every edge has the same colour, whatever the rules.
  friend bool operator==(const TwoColoring& a, const TwoColoring& b);

 private:
  TwoColoring(int n, Rule r) : n_(n), rule_(std::move(r)) {}
  int n_ = 0;
  Rule rule_;
};

/// "n rule" header, then the RB payload on the next line.
void write_coloring(std::ostream& out, const TwoColoring& chi);
TwoColoring read_coloring(std::istream& in);

/// Thm-2.1 colouring: uv red iff (a-1) | (v-u).
TwoColoring clique_coloring(int a, int n);

struct AdversaryInstance {
  int s = 1;
  int r = 1;
  int n = 0;
  std::vector<Color> vertex_colors;
  std::vector<int> red_positions;   // 1-based positions r_1, r_2, ...
  std::vector<int> blue_positions;  // b_1, b_2, ...
  std::vector<int> alpha;           // alpha[i-1] = alpha_i, for every i where it exists
  std::vector<int> beta;
  int blocks = 0;                   // j with alpha_j, beta_j defined and alpha_j + beta_j <= n
  std::vector<int> phi;             // phi[k-1] = 1-based vertex placed at slot k

  [[nodiscard]] TwoColoring coloring() const { return TwoColoring::leftmost(vertex_colors); }
  [[nodiscard]] GammaParam gamma() const;
};

/// Number of red vertices among the first m, floor((m + g(m))/2).
int adversary_red_count(const PLFunction& g, int m);

AdversaryInstance adversary(int s, int r, const PLFunction& g, int n);

struct AdversaryCheck {
  bool red_counts = true;
  bool alpha_minimal = true;
  bool beta_minimal = true;
  bool alpha_increasing = true;
  bool beta_increasing = true;
  bool phi_bijective = true;
  bool phi_blocks = true;
  /// Bound chain failures at i >= from_index, and below it.
  int chain_violations = 0;
  int chain_violations_early = 0;
  int chain_checked = 0;
  [[nodiscard]] bool structural_ok() const {
    return red_counts && alpha_minimal && beta_minimal && alpha_increasing && beta_increasing && phi_bijective &&
           phi_blocks;
  }
};

AdversaryCheck check_adversary(const AdversaryInstance& inst, const PLFunction& g, int chain_from = 50);

struct DensityReport {
  std::vector<std::pair<int, Rational>> checkpoints;
  Rational max_ratio{0};
};

DensityReport density(const VertexSet& s, int n, const std::vector<int>& checkpoints);

struct Shade {
  enum class Kind : std::uint8_t { R, B, X };
  Kind kind = Kind::X;
  int index = 0;  // 1..a for R/B

  static Shade x() { return {}; }
  static Shade of(Color c, int i) { return {c == Color::Red ? Kind::R : Kind::B, i}; }
  [[nodiscard]] bool is_x() const { return kind == Kind::X; }
  [[nodiscard]] Color color() const { return kind == Kind::B ? Color::Blue : Color::Red; }
  [[nodiscard]] std::string str() const;
  friend bool operator==(const Shade&, const Shade&) = default;
};

struct Shading {
  int a = 0;
  std::vector<Shade> shade;
  int min_count = 0;
  Rational theta{0};
  int rounds = 0;

  [[nodiscard]] VertexSet members(Shade s) const;
  [[nodiscard]] int nonempty_shades(Color c) const;
};

Shading a_good_shading(const TwoColoring& chi, int a, Rational theta, int min_count);

struct ShadingReport {
  bool passed = true;
  std::optional<int> min_found;  // unset when every check was vacuous
  int checks = 0;
  std::string failure;
};

ShadingReport verify_shading(const TwoColoring& chi, const Shading& sh, int sample_size, int subset_cap,
                             std::uint64_t seed);

struct EmbeddingDensity {
  Rational value{0};
  Color color = Color::Red;
  bool found = false;
  std::vector<int> map;  // H vertex -> host vertex
};

/// max over injective C-monochromatic maps of prefix(family, h_size) of
/// max_m |image n [m]|/m.
EmbeddingDensity max_embedding_density_bruteforce(const TwoColoring& chi, const GraphFamily& family, int h_size);
EmbeddingDensity max_embedding_density_bruteforce(const TwoColoring& chi, const GraphFamily& family, int h_size,
                                                  Color c);

/// max_m |S n [m]|/m for a set of host vertices.
Rational prefix_density(const VertexSet& image);

}  // namespace rdl
