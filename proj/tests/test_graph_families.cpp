#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "rdl/graph_families.hpp"

using namespace rdl;

namespace {

// min |N(I)| over independent n-sets drawn from `cand`, neighbourhoods taken in g.
int brute_min_neighbourhood(const FiniteGraph& g, const std::vector<int>& cand, int n) {
  int best = 1 << 30;
  std::vector<int> pick;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (static_cast<int>(pick.size()) == n) {
      best = std::min(best, static_cast<int>(neighborhood(g, make_vertex_set(pick)).size()));
      return;
    }
    for (std::size_t i = from; i < cand.size(); ++i) {
      const int v = cand[i];
      bool ok = true;
      for (int u : pick) ok = ok && !g.has_edge(u, v);
      if (!ok) continue;
      pick.push_back(v);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  return best;
}

// Neighbours of grid points computed straight from coordinates.
int grid_brute(int n, int R) {
  std::vector<std::pair<int, int>> pts;
  for (int x = -R; x <= R; ++x)
    for (int y = -R; y <= R; ++y) pts.emplace_back(x, y);
  auto adj = [](std::pair<int, int> a, std::pair<int, int> b) { return std::abs(a.first - b.first) + std::abs(a.second - b.second) == 1; };
  int best = 1 << 30;
  std::vector<std::pair<int, int>> pick;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (static_cast<int>(pick.size()) == n) {
      std::set<std::pair<int, int>> N;
      for (auto p : pick)
        for (auto d : {std::pair{1, 0}, std::pair{-1, 0}, std::pair{0, 1}, std::pair{0, -1}}) N.insert({p.first + d.first, p.second + d.second});
      best = std::min(best, static_cast<int>(N.size()));
      return;
    }
    for (std::size_t i = from; i < pts.size(); ++i) {
      bool ok = true;
      for (auto q : pick) ok = ok && !adj(q, pts[i]);
      if (!ok) continue;
      pick.push_back(pts[i]);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  return best;
}

FiniteGraph random_forest(std::mt19937_64& rng, int n) {
  FiniteGraph f(n);
  std::bernoulli_distribution attach(0.85);
  for (int v = 1; v < n; ++v)
    if (attach(rng)) f.add_edge(v, std::uniform_int_distribution<int>(0, v - 1)(rng));
  return f;
}

}  // namespace

TEST_CASE("family prefixes") {
  const auto p = GraphFamily::path_power(1).prefix(3);
  CHECK(p.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
  const auto t = GraphFamily::kary_tree(2).prefix(7);
  CHECK(t.edge_count() == 6);
  CHECK(t.is_acyclic());
  CHECK(t.neighbors(0) == std::vector<int>{1, 2});
  CHECK(t.neighbors(1) == std::vector<int>{0, 3, 4});
  const auto g = GraphFamily::grid(2).prefix(9);
  CHECK(g.edge_count() == 12);
  const auto sq = GraphFamily::path_power(2).prefix(5);
  CHECK(sq.edge_count() == 7);
  const auto om = GraphFamily::omega_factor(complete_bipartite(1, 2)).prefix(7);
  CHECK(om.edge_count() == 4);
}

TEST_CASE("prefix monotonicity") {
  const std::vector<GraphFamily> fams{GraphFamily::path_power(1), GraphFamily::path_power(3), GraphFamily::kary_tree(2),
                                      GraphFamily::kary_tree(3),  GraphFamily::grid(1),       GraphFamily::grid(2),
                                      GraphFamily::grid(3),       GraphFamily::omega_factor(cycle_graph(5))};
  for (const auto& f : fams) {
    for (int n = 1; n <= 64; ++n) CHECK(f.prefix(n) == f.prefix(n + 1).induced_prefix(n));
  }
}

TEST_CASE("grid order expands L-infinity boxes") {
  const auto c = grid_coordinates(2, 9);
  for (const auto& pt : c) {
    CHECK(std::abs(pt[0]) <= 1);
    CHECK(std::abs(pt[1]) <= 1);
  }
  CHECK(c.front() == std::vector<int>{0, 0});
  const auto c3 = grid_coordinates(3, 27);
  std::set<std::vector<int>> uniq(c3.begin(), c3.end());
  CHECK(uniq.size() == 27);
}

TEST_CASE("family parsing and closure sizes") {
  CHECK(GraphFamily::parse("pathpower:2").name() == "pathpower:2");
  CHECK(GraphFamily::parse("karytree:3").name() == "karytree:3");
  CHECK(GraphFamily::parse("grid:2").name() == "grid:2");
  CHECK_THROWS_AS(GraphFamily::parse("torus:2"), Error);
  CHECK_THROWS_AS(GraphFamily::parse("pathpower:0"), Error);
  for (const auto& f : {GraphFamily::path_power(2), GraphFamily::kary_tree(2), GraphFamily::grid(2)}) {
    for (int n = 1; n <= 20; ++n) {
      const int c = f.closure_size(n);
      const auto big = f.prefix(c + 40);
      for (int v = 0; v < n; ++v)
        for (int u : big.neighbors(v)) CHECK(u < c);
    }
  }
}

TEST_CASE("edge list round trip") {
  const auto g = cycle_graph(6);
  std::stringstream ss;
  write_edge_list(ss, g);
  CHECK(read_edge_list(ss) == g);
  std::stringstream bad("3 1\n0 5\n");
  CHECK_THROWS_AS(read_edge_list(bad), Error);
  std::stringstream loop("3 1\n1 1\n");
  CHECK_THROWS_AS(read_edge_list(loop), Error);
}

TEST_CASE("mu examples") {
  CHECK(mu_bruteforce(GraphFamily::kary_tree(2), 2, 31) == 4);
  CHECK(mu_bruteforce(GraphFamily::path_power(1), 3, 16) == 3);
  // two leaves of one star share their centre
  CHECK(mu_bruteforce(GraphFamily::omega_factor(complete_bipartite(1, 2)), 2, 12) == 1);
  CHECK_THROWS_AS(mu_bruteforce(GraphFamily::path_power(1), 3, 5), Error);
}

TEST_CASE("mu on k-ary trees equals kn") {
  for (int k : {2, 3})
    for (int n = 1; n <= 5; ++n) {
      const int size = k == 2 ? 63 : 121;
      CHECK(mu_bruteforce(GraphFamily::kary_tree(k), n, size) == k * n);
    }
}

TEST_CASE("mu on path powers against a plain enumeration") {
  for (int k : {1, 2})
    for (int n = 1; n <= 6; ++n) {
      const auto fam = GraphFamily::path_power(k);
      const int size = (k + 1) * n + 2 * k;
      const auto big = fam.prefix(size + k);
      std::vector<int> cand;
      for (int v = 0; v < size - k; ++v) cand.push_back(v);
      CHECK(mu_bruteforce(fam, n, size) == brute_min_neighbourhood(big, cand, n));
    }
  for (int n = 1; n <= 8; ++n) CHECK(mu_bruteforce(GraphFamily::path_power(1), n, 2 * n + 2) == n);
}

TEST_CASE("mu on the square grid") {
  for (int n = 1; n <= 4; ++n) CHECK(mu_bruteforce(GraphFamily::grid(2), n, 81) == grid_brute(n, 3));
  for (int n = 1; n <= 6; ++n) CHECK(mu_bruteforce(GraphFamily::grid(2), n, 81) >= n);
}

TEST_CASE("mu on copies of a clique complement") {
  for (int r = 1; r <= 3; ++r)
    for (int s = 1; s <= 3; ++s)
      for (int n = 1; n <= 6; ++n) {
        const auto fam = GraphFamily::omega_factor(clique_complement_factor(r, s));
        const int want = s * ((n + r - 1) / r);
        CHECK(mu_bruteforce(fam, n, (r + s) * (n + 1)) == want);
      }
}

TEST_CASE("minimum expansion") {
  CHECK(min_expansion(complete_bipartite(2, 3)) == Rational(2, 3));
  CHECK(min_expansion(complete_graph(3)) == Rational(2));
  CHECK(min_expansion(complete_graph(2)) == Rational(1));
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b) CHECK(min_expansion(complete_bipartite(a, b)) <= Rational(1));
  CHECK(min_expansion(cycle_graph(6)) <= Rational(1));
  CHECK(min_expansion(path_graph(5)) <= Rational(1));
}

TEST_CASE("doubly independent sets") {
  const auto star = doubly_independent_sets(complete_bipartite(1, 2));
  CHECK(std::find(star.begin(), star.end(), VertexSet{1, 2}) != star.end());
  CHECK(doubly_independent_sets(complete_graph(3)).empty());
  const auto c5 = doubly_independent_sets(cycle_graph(5));
  for (int v = 0; v < 5; ++v) CHECK(std::find(c5.begin(), c5.end(), VertexSet{v}) != c5.end());
  // brute force on C6
  const auto g = cycle_graph(6);
  std::vector<VertexSet> want;
  for (int mask = 1; mask < 64; ++mask) {
    VertexSet s;
    for (int v = 0; v < 6; ++v)
      if (mask >> v & 1) s.push_back(v);
    if (is_independent(g, s) && is_independent(g, neighborhood(g, s))) want.push_back(s);
  }
  std::sort(want.begin(), want.end(), [](const VertexSet& a, const VertexSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  CHECK(doubly_independent_sets(g) == want);
}

TEST_CASE("expansion ratio") {
  CHECK(expansion_ratio(path_graph(4), {0}) == Rational(1));
  CHECK(expansion_ratio(complete_bipartite(2, 3), {0, 1}) == Rational(3, 2));
  CHECK_THROWS_AS(expansion_ratio(path_graph(3), {0, 1}), Error);
  // checkerboard of a 4x4 block inside a large grid window
  const int size = 121;
  const auto coords = grid_coordinates(2, size);
  const auto g = GraphFamily::grid(2).prefix(size);
  std::map<std::vector<int>, int> id;
  for (int v = 0; v < size; ++v) id[coords[static_cast<std::size_t>(v)]] = v;
  VertexSet I;
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y)
      if ((x + y) % 2 == 0) I.push_back(id.at({x - 2, y - 2}));
  I = make_vertex_set(I);
  const Rational ratio = expansion_ratio(g, I);
  CHECK(ratio == Rational(2));
  CHECK(ratio <= Rational(7, 2));
}

TEST_CASE("treecut examples") {
  const auto star = complete_bipartite(1, 3);
  const auto r1 = treecut(star, {1, 2, 3}, Rational(1, 3), Rational(1, 2), Rational(1, 4));
  CHECK(!r1.subset.empty());
  CHECK(r1.subset.size() <= 8);
  CHECK(Rational(static_cast<std::int64_t>(neighborhood(star, r1.subset).size())) <=
        Rational(1, 2) * static_cast<std::int64_t>(r1.subset.size()));

  const auto path = path_graph(5);
  const auto r2 = treecut(path, {0, 2, 4}, Rational(2, 3), Rational(1));
  CHECK(!r2.subset.empty());
  CHECK(neighborhood(path, r2.subset).size() <= r2.subset.size());

  const auto edge = path_graph(2);
  const auto r3 = treecut(edge, {0}, Rational(1), Rational(2));
  CHECK(r3.subset == VertexSet{0});

  CHECK_THROWS_AS(treecut(cycle_graph(4), {0, 2}, Rational(1), Rational(2)), Error);
  CHECK_THROWS_AS(treecut(path, {0, 1}, Rational(1), Rational(2)), Error);
  CHECK_THROWS_AS(treecut(path, {1, 3}, Rational(1), Rational(2)), Error);  // |N(I)| = 3 > 2
}

TEST_CASE("treecut on random forests") {
  std::mt19937_64 rng(2024);
  int runs = 0;
  while (runs < 200) {
    const int n = std::uniform_int_distribution<int>(2, 40)(rng);
    const auto f = random_forest(rng, n);
    VertexSet I;
    for (int v = 0; v < n; ++v) {
      bool ok = std::bernoulli_distribution(0.5)(rng);
      for (int u : I) ok = ok && !f.has_edge(u, v);
      if (ok) I.push_back(v);
    }
    if (I.empty()) continue;
    const Rational lam(static_cast<std::int64_t>(neighborhood(f, I).size()), static_cast<std::int64_t>(I.size()));
    const Rational lamp = lam + Rational(1, 2);
    const auto res = treecut(f, I, lam, lamp);
    ++runs;
    CHECK(!res.subset.empty());
    CHECK(std::includes(I.begin(), I.end(), res.subset.begin(), res.subset.end()));
    CHECK(Rational(static_cast<std::int64_t>(res.subset.size())) <= res.bound_size);
    CHECK(Rational(static_cast<std::int64_t>(neighborhood(f, res.subset).size())) <=
          lamp * static_cast<std::int64_t>(res.subset.size()));
    CHECK(res.delta_condition_holds);
  }
}
