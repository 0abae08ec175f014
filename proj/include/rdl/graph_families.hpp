#pragma once

// Finite prefixes of locally finite infinite graphs, independent-set
// expansion and the forest cut.

#include <boost/rational.hpp>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "rdl/lipschitz.hpp"

namespace rdl {

using Rational = boost::rational<std::int64_t>;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<int>;

VertexSet make_vertex_set(std::vector<int> members);

class FiniteGraph {
 public:
  FiniteGraph() = default;
  explicit FiniteGraph(int n);
  FiniteGraph(int n, const std::vector<std::pair<int, int>>& edges);

  void add_edge(int u, int v);

  [[nodiscard]] int size() const { return static_cast<int>(adj_.size()); }
  [[nodiscard]] const std::vector<int>& neighbors(int v) const { return adj_.at(static_cast<std::size_t>(v)); }
  [[nodiscard]] bool has_edge(int u, int v) const;
  [[nodiscard]] std::vector<std::pair<int, int>> edges() const;
  [[nodiscard]] std::size_t edge_count() const;
  [[nodiscard]] int max_degree() const;

  /// Subgraph induced on vertices 0..k-1.
  [[nodiscard]] FiniteGraph induced_prefix(int k) const;
  [[nodiscard]] bool is_acyclic() const;
  /// Component id per vertex, ids assigned in order of smallest member.
  [[nodiscard]] std::vector<int> components() const;

  friend bool operator==(const FiniteGraph&, const FiniteGraph&) = default;

 private:
  std::vector<std::vector<int>> adj_;
};

/// Plain edge-list text: "n m" then m lines "u v" (0-based).
FiniteGraph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const FiniteGraph& g);

bool is_independent(const FiniteGraph& g, const VertexSet& s);
/// N(S) = (union of N(v), v in S) minus S.
VertexSet neighborhood(const FiniteGraph& g, const VertexSet& s);

FiniteGraph complete_graph(int n);
FiniteGraph complete_bipartite(int a, int b);
FiniteGraph cycle_graph(int n);
FiniteGraph path_graph(int n);
/// K_{r+s} minus the edges of an r-clique on vertices 0..r-1.
FiniteGraph clique_complement_factor(int r, int s);

struct PathPower { int k; };
struct KAryTree { int k; };
struct Grid { int d; };
struct OmegaFactor { FiniteGraph factor; };
struct ExplicitForest { FiniteGraph forest; };
struct Explicit { FiniteGraph graph; };

/// Generator of growing prefixes of an infinite (or finite explicit) graph in
/// its canonical vertex order.
class GraphFamily {
 public:
  using Kind = std::variant<PathPower, KAryTree, Grid, OmegaFactor, ExplicitForest, Explicit>;

  static GraphFamily path_power(int k);
  static GraphFamily kary_tree(int k);
  static GraphFamily grid(int d);
  static GraphFamily omega_factor(FiniteGraph f);
  static GraphFamily explicit_forest(FiniteGraph f);
  static GraphFamily explicit_graph(FiniteGraph g);

  /// Parses "pathpower:k", "karytree:k", "grid:d"; file-backed kinds are built by callers.
  static GraphFamily parse(const std::string& spec);

  [[nodiscard]] const Kind& kind() const { return kind_; }
  [[nodiscard]] std::string name() const;
  /// Vertex count for finite explicit kinds.
  [[nodiscard]] std::optional<int> vertex_limit() const;

  [[nodiscard]] FiniteGraph prefix(int n) const;
  /// A prefix size containing every neighbour (in the infinite graph) of
  /// vertices 0..n-1.
  [[nodiscard]] int closure_size(int n) const;

 private:
  explicit GraphFamily(Kind k) : kind_(std::move(k)) {}
  Kind kind_;
};

/// Coordinates of the first n points of Z^d in the canonical grid order.
std::vector<std::vector<int>> grid_coordinates(int d, int n);

/// min |N(I)| over independent I of size n inside the prefix whose
/// neighbourhood in the infinite graph stays inside the prefix. Throws when
/// no optimum keeps N(I) off the prefix's boundary ring.
int mu_bruteforce(const GraphFamily& family, int n, int prefix_size);

struct MuWitness {
  int value;
  VertexSet set;
};
MuWitness mu_bruteforce_witness(const GraphFamily& family, int n, int prefix_size);

Rational min_expansion(const FiniteGraph& f);
std::vector<VertexSet> doubly_independent_sets(const FiniteGraph& f);
Rational expansion_ratio(const FiniteGraph& g, const VertexSet& s);

Rational default_treecut_delta(Rational lambda, Rational lambda_prime);

struct TreecutResult {
  VertexSet subset;
  Rational delta;
  Rational bound_size;  // M = 2 / delta
  bool delta_condition_holds;  // delta + lambda/(1-2 delta(1+lambda)) < lambda'
};

/// Bounded-size subset I' of I with |N(I')| <= lambda'|I'|, |I'| <= 2/delta.
TreecutResult treecut(const FiniteGraph& forest, const VertexSet& independent, Rational lambda,
                      Rational lambda_prime, std::optional<Rational> delta = std::nullopt);

std::string to_string(const Rational& r);
Rational parse_rational(const std::string& s);

}  // namespace rdl
