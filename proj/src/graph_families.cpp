#include "rdl/graph_families.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

namespace rdl {

VertexSet make_vertex_set(std::vector<int> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return members;
}

FiniteGraph::FiniteGraph(int n) {
  if (n < 0) throw Error("graph size must be nonnegative");
  adj_.resize(static_cast<std::size_t>(n));
}

FiniteGraph::FiniteGraph(int n, const std::vector<std::pair<int, int>>& edges) : FiniteGraph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void FiniteGraph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= size() || v >= size())
    throw Error("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
  if (u == v) throw Error("self-loop at " + std::to_string(u));
  auto insert = [](std::vector<int>& a, int x) {
    auto it = std::lower_bound(a.begin(), a.end(), x);
    if (it == a.end() || *it != x) a.insert(it, x);
  };
  insert(adj_[static_cast<std::size_t>(u)], v);
  insert(adj_[static_cast<std::size_t>(v)], u);
}

bool FiniteGraph::has_edge(int u, int v) const {
  if (u < 0 || u >= size()) return false;
  const auto& a = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(a.begin(), a.end(), v);
}

std::vector<std::pair<int, int>> FiniteGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < size(); ++u)
    for (int v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::size_t FiniteGraph::edge_count() const {
  std::size_t deg = 0;
  for (const auto& a : adj_) deg += a.size();
  return deg / 2;
}

int FiniteGraph::max_degree() const {
  std::size_t m = 0;
  for (const auto& a : adj_) m = std::max(m, a.size());
  return static_cast<int>(m);
}

FiniteGraph FiniteGraph::induced_prefix(int k) const {
  if (k < 0 || k > size()) throw Error("induced_prefix: size out of range");
  FiniteGraph g(k);
  for (int u = 0; u < k; ++u)
    for (int v : neighbors(u))
      if (u < v && v < k) g.add_edge(u, v);
  return g;
}

std::vector<int> FiniteGraph::components() const {
  std::vector<int> comp(adj_.size(), -1);
  int next = 0;
  for (int s = 0; s < size(); ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    std::vector<int> stack{s};
    comp[static_cast<std::size_t>(s)] = next;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : neighbors(u))
        if (comp[static_cast<std::size_t>(v)] < 0) {
          comp[static_cast<std::size_t>(v)] = next;
          stack.push_back(v);
        }
    }
    ++next;
  }
  return comp;
}

bool FiniteGraph::is_acyclic() const {
  auto comp = components();
  int ncomp = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  return edge_count() + static_cast<std::size_t>(ncomp) == adj_.size();
}

FiniteGraph read_edge_list(std::istream& in) {
  long long n = -1, m = -1;
  if (!(in >> n >> m) || n < 0 || m < 0) throw Error("edge list: bad header, expected \"n m\"");
  FiniteGraph g(static_cast<int>(n));
  for (long long i = 0; i < m; ++i) {
    int u, v;
    if (!(in >> u >> v)) throw Error("edge list: expected " + std::to_string(m) + " edges, got " + std::to_string(i));
    g.add_edge(u, v);
  }
  return g;
}

void write_edge_list(std::ostream& out, const FiniteGraph& g) {
  auto es = g.edges();
  out << g.size() << ' ' << es.size() << '\n';
  for (auto [u, v] : es) out << u << ' ' << v << '\n';
}

bool is_independent(const FiniteGraph& g, const VertexSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (g.has_edge(s[i], s[j])) return false;
  return true;
}

VertexSet neighborhood(const FiniteGraph& g, const VertexSet& s) {
  std::vector<int> out;
  for (int v : s) {
    if (v < 0 || v >= g.size()) throw Error("vertex " + std::to_string(v) + " out of range");
    for (int w : g.neighbors(v)) out.push_back(w);
  }
  out = make_vertex_set(std::move(out));
  VertexSet ss = make_vertex_set(s);
  VertexSet res;
  std::set_difference(out.begin(), out.end(), ss.begin(), ss.end(), std::back_inserter(res));
  return res;
}

FiniteGraph complete_graph(int n) {
  FiniteGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

FiniteGraph complete_bipartite(int a, int b) {
  FiniteGraph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
  return g;
}

FiniteGraph cycle_graph(int n) {
  if (n < 3) throw Error("cycle needs at least 3 vertices");
  FiniteGraph g(n);
  for (int u = 0; u < n; ++u) g.add_edge(u, (u + 1) % n);
  return g;
}

FiniteGraph path_graph(int n) {
  FiniteGraph g(n);
  for (int u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
  return g;
}

FiniteGraph clique_complement_factor(int r, int s) {
  if (r < 1 || s < 1) throw Error("clique_complement_factor: r, s must be positive");
  FiniteGraph g(r + s);
  for (int u = 0; u < r + s; ++u)
    for (int v = u + 1; v < r + s; ++v)
      if (v >= r) g.add_edge(u, v);
  return g;
}

// ---------------------------------------------------------------------------

GraphFamily GraphFamily::path_power(int k) {
  if (k < 1) throw Error("pathpower: k must be >= 1");
  return GraphFamily(PathPower{k});
}
GraphFamily GraphFamily::kary_tree(int k) {
  if (k < 1) throw Error("karytree: k must be >= 1");
  return GraphFamily(KAryTree{k});
}
GraphFamily GraphFamily::grid(int d) {
  if (d < 1) throw Error("grid: d must be >= 1");
  return GraphFamily(Grid{d});
}
GraphFamily GraphFamily::omega_factor(FiniteGraph f) {
  if (f.size() == 0) throw Error("omega: factor graph is empty");
  return GraphFamily(OmegaFactor{std::move(f)});
}
GraphFamily GraphFamily::explicit_forest(FiniteGraph f) {
  if (!f.is_acyclic()) throw Error("forest: input graph has a cycle");
  return GraphFamily(ExplicitForest{std::move(f)});
}
GraphFamily GraphFamily::explicit_graph(FiniteGraph g) { return GraphFamily(Explicit{std::move(g)}); }

GraphFamily GraphFamily::parse(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw Error("family spec needs kind:param, got '" + spec + "'");
  std::string kind = spec.substr(0, colon), arg = spec.substr(colon + 1);
  int k = 0;
  try {
    std::size_t used = 0;
    k = std::stoi(arg, &used);
    if (used != arg.size()) throw Error("");
  } catch (const std::exception&) {
    throw Error("family spec '" + spec + "': parameter must be an integer");
  }
  if (kind == "pathpower") return path_power(k);
  if (kind == "karytree") return kary_tree(k);
  if (kind == "grid") return grid(k);
  throw Error("unknown family kind '" + kind + "'");
}

std::string GraphFamily::name() const {
  return std::visit(
      [](const auto& k) -> std::string {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, PathPower>) return "pathpower:" + std::to_string(k.k);
        else if constexpr (std::is_same_v<T, KAryTree>) return "karytree:" + std::to_string(k.k);
        else if constexpr (std::is_same_v<T, Grid>) return "grid:" + std::to_string(k.d);
        else if constexpr (std::is_same_v<T, OmegaFactor>) return "omega(" + std::to_string(k.factor.size()) + ")";
        else if constexpr (std::is_same_v<T, ExplicitForest>) return "forest(" + std::to_string(k.forest.size()) + ")";
        else return "explicit(" + std::to_string(k.graph.size()) + ")";
      },
      kind_);
}

std::optional<int> GraphFamily::vertex_limit() const {
  if (auto* f = std::get_if<ExplicitForest>(&kind_)) return f->forest.size();
  if (auto* g = std::get_if<Explicit>(&kind_)) return g->graph.size();
  return std::nullopt;
}

namespace {

int linf(const std::vector<int>& c) {
  int m = 0;
  for (int x : c) m = std::max(m, std::abs(x));
  return m;
}

long long ipow(long long b, int e) {
  long long r = 1;
  for (int i = 0; i < e; ++i) {
    r *= b;
    if (r > (1LL << 40)) throw Error("grid prefix too large");
  }
  return r;
}

}  // namespace

std::vector<std::vector<int>> grid_coordinates(int d, int n) {
  if (d < 1) throw Error("grid: d must be >= 1");
  if (n <= 0) return {};
  int R = 0;
  while (ipow(2 * R + 1, d) < n) ++R;
  const long long total = ipow(2 * R + 1, d);
  std::vector<std::vector<int>> pts;
  pts.reserve(static_cast<std::size_t>(total));
  std::vector<int> c(static_cast<std::size_t>(d), -R);
  for (long long i = 0; i < total; ++i) {
    pts.push_back(c);
    for (int a = d - 1; a >= 0; --a) {
      if (++c[static_cast<std::size_t>(a)] <= R) break;
      c[static_cast<std::size_t>(a)] = -R;
    }
  }
  std::stable_sort(pts.begin(), pts.end(), [](const auto& x, const auto& y) {
    int nx = linf(x), ny = linf(y);
    return nx != ny ? nx < ny : x < y;
  });
  pts.resize(static_cast<std::size_t>(n));
  return pts;
}

FiniteGraph GraphFamily::prefix(int n) const {
  if (n < 0) throw Error("prefix size must be nonnegative");
  return std::visit(
      [n](const auto& k) -> FiniteGraph {
        using T = std::decay_t<decltype(k)>;
        FiniteGraph g(n);
        if constexpr (std::is_same_v<T, PathPower>) {
          for (int u = 0; u < n; ++u)
            for (int v = u + 1; v <= u + k.k && v < n; ++v) g.add_edge(u, v);
        } else if constexpr (std::is_same_v<T, KAryTree>) {
          for (int v = 1; v < n; ++v) g.add_edge(v, (v - 1) / k.k);
        } else if constexpr (std::is_same_v<T, Grid>) {
          auto pts = grid_coordinates(k.d, n);
          std::map<std::vector<int>, int> index;
          for (int i = 0; i < n; ++i) index.emplace(pts[static_cast<std::size_t>(i)], i);
          for (int i = 0; i < n; ++i) {
            auto c = pts[static_cast<std::size_t>(i)];
            for (std::size_t a = 0; a < c.size(); ++a) {
              c[a] += 1;
              auto it = index.find(c);
              if (it != index.end()) g.add_edge(i, it->second);
              c[a] -= 1;
            }
          }
        } else if constexpr (std::is_same_v<T, OmegaFactor>) {
          const int f = k.factor.size();
          for (auto [u, v] : k.factor.edges())
            for (int base = 0; base < n; base += f)
              if (base + u < n && base + v < n) g.add_edge(base + u, base + v);
        } else if constexpr (std::is_same_v<T, ExplicitForest>) {
          if (n > k.forest.size())
            throw Error("prefix of size " + std::to_string(n) + " exceeds forest size " + std::to_string(k.forest.size()));
          g = k.forest.induced_prefix(n);
        } else {
          if (n > k.graph.size())
            throw Error("prefix of size " + std::to_string(n) + " exceeds graph size " + std::to_string(k.graph.size()));
          g = k.graph.induced_prefix(n);
        }
        return g;
      },
      kind_);
}

int GraphFamily::closure_size(int n) const {
  if (n <= 0) return 0;
  return std::visit(
      [n](const auto& k) -> int {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, PathPower>) return n + k.k;
        else if constexpr (std::is_same_v<T, KAryTree>) return k.k * n + 1;
        else if constexpr (std::is_same_v<T, Grid>) {
          auto pts = grid_coordinates(k.d, n);
          int R = linf(pts.back());
          return static_cast<int>(ipow(2 * R + 3, k.d));
        } else if constexpr (std::is_same_v<T, OmegaFactor>) {
          const int f = k.factor.size();
          return (n + f - 1) / f * f;
        } else if constexpr (std::is_same_v<T, ExplicitForest>) {
          if (n > k.forest.size()) throw Error("prefix exceeds forest size");
          return k.forest.size();
        } else {
          if (n > k.graph.size()) throw Error("prefix exceeds graph size");
          return k.graph.size();
        }
      },
      kind_);
}

// ---------------------------------------------------------------------------

namespace {

struct Bits {
  std::vector<std::uint64_t> w;
  explicit Bits(int n) : w(static_cast<std::size_t>((n + 63) / 64), 0) {}
  bool test(int i) const { return (w[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1U; }
  bool set(int i) {
    auto& word = w[static_cast<std::size_t>(i) >> 6];
    std::uint64_t m = std::uint64_t{1} << (i & 63);
    bool was = word & m;
    word |= m;
    return !was;
  }
};

struct MuSearch {
  const FiniteGraph& g;
  std::vector<int> cand;
  std::vector<char> ring;
  int n;
  int best_any = std::numeric_limits<int>::max();
  int best_clean = std::numeric_limits<int>::max();
  VertexSet best_clean_set;
  std::vector<int> chosen;

  void dfs(std::size_t idx, const Bits& blocked, const Bits& nbr, int nsize, bool touches_ring) {
    if (nsize > best_any) return;
    if (static_cast<int>(chosen.size()) == n) {
      if (nsize < best_any) best_any = nsize;
      if (!touches_ring && nsize < best_clean) {
        best_clean = nsize;
        best_clean_set = chosen;
      }
      return;
    }
    if (nsize == best_any && best_clean == best_any) return;
    if (cand.size() - idx < static_cast<std::size_t>(n) - chosen.size()) return;
    for (std::size_t i = idx; i < cand.size(); ++i) {
      if (cand.size() - i < static_cast<std::size_t>(n) - chosen.size()) break;
      int v = cand[i];
      if (blocked.test(v)) continue;
      Bits b2 = blocked, n2 = nbr;
      int ns = nsize;
      bool tr = touches_ring;
      for (int w : g.neighbors(v)) {
        b2.set(w);
        if (n2.set(w)) {
          ++ns;
          if (ring[static_cast<std::size_t>(w)]) tr = true;
        }
      }
      if (ns > best_any) continue;
      chosen.push_back(v);
      dfs(i + 1, b2, n2, ns, tr);
      chosen.pop_back();
    }
  }
};

}  // namespace

MuWitness mu_bruteforce_witness(const GraphFamily& family, int n, int prefix_size) {
  if (n < 1) throw Error("mu: n must be >= 1");
  if (prefix_size < n) throw Error("mu: prefix smaller than n");
  if (auto lim = family.vertex_limit(); lim && prefix_size > *lim) prefix_size = *lim;
  const int M = family.closure_size(prefix_size);
  FiniteGraph g = family.prefix(M);

  MuSearch s{g, {}, std::vector<char>(static_cast<std::size_t>(M), 0), n, std::numeric_limits<int>::max(),
             std::numeric_limits<int>::max(), {}, {}};
  for (int v = 0; v < prefix_size; ++v) {
    bool inside = true;
    for (int w : g.neighbors(v))
      if (w >= prefix_size) inside = false;
    if (inside) s.cand.push_back(v);
    else s.ring[static_cast<std::size_t>(v)] = 1;
  }
  if (static_cast<int>(s.cand.size()) < n)
    throw Error("mu: prefix of size " + std::to_string(prefix_size) + " too small for n=" + std::to_string(n));
  Bits blocked(M), nbr(M);
  s.dfs(0, blocked, nbr, 0, false);
  if (s.best_any == std::numeric_limits<int>::max())
    throw Error("mu: no independent set of size " + std::to_string(n) + " inside prefix " + std::to_string(prefix_size));
  if (s.best_clean != s.best_any)
    throw Error("mu: every optimum for n=" + std::to_string(n) + " touches the prefix boundary at size " +
                std::to_string(prefix_size) + "; enlarge the prefix");
  return {s.best_clean, make_vertex_set(s.best_clean_set)};
}

int mu_bruteforce(const GraphFamily& family, int n, int prefix_size) {
  return mu_bruteforce_witness(family, n, prefix_size).value;
}

namespace {

template <class Fn>
void for_each_independent(const FiniteGraph& f, Fn&& fn) {
  if (f.size() > 30) throw Error("graph too large for subset enumeration");
  std::vector<int> cur;
  std::vector<int> blocked(static_cast<std::size_t>(f.size()), 0);
  auto rec = [&](auto&& self, int v) -> void {
    if (v == f.size()) {
      if (!cur.empty()) fn(cur);
      return;
    }
    self(self, v + 1);
    if (blocked[static_cast<std::size_t>(v)]) return;
    cur.push_back(v);
    for (int w : f.neighbors(v)) ++blocked[static_cast<std::size_t>(w)];
    self(self, v + 1);
    for (int w : f.neighbors(v)) --blocked[static_cast<std::size_t>(w)];
    cur.pop_back();
  };
  rec(rec, 0);
}

}  // namespace

Rational min_expansion(const FiniteGraph& f) {
  if (f.size() == 0) throw Error("min_expansion: empty graph");
  std::optional<Rational> best;
  for_each_independent(f, [&](const std::vector<int>& s) {
    Rational r(static_cast<std::int64_t>(neighborhood(f, s).size()), static_cast<std::int64_t>(s.size()));
    if (!best || r < *best) best = r;
  });
  return *best;
}

std::vector<VertexSet> doubly_independent_sets(const FiniteGraph& f) {
  std::vector<VertexSet> out;
  for_each_independent(f, [&](const std::vector<int>& s) {
    if (is_independent(f, neighborhood(f, s))) out.push_back(s);
  });
  std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

Rational expansion_ratio(const FiniteGraph& g, const VertexSet& s) {
  VertexSet ss = make_vertex_set(s);
  if (ss.empty()) throw Error("expansion_ratio: empty set");
  if (!is_independent(g, ss)) throw Error("expansion_ratio: set is not independent");
  return Rational(static_cast<std::int64_t>(neighborhood(g, ss).size()), static_cast<std::int64_t>(ss.size()));
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational parse_rational(const std::string& s) {
  auto fail = [&]() -> Rational { throw Error("cannot parse rational '" + s + "'"); };
  try {
    auto slash = s.find('/');
    if (slash != std::string::npos) {
      std::size_t u1 = 0, u2 = 0;
      std::string a = s.substr(0, slash), b = s.substr(slash + 1);
      long long num = std::stoll(a, &u1), den = std::stoll(b, &u2);
      if (u1 != a.size() || u2 != b.size() || den == 0) return fail();
      return Rational(num, den);
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
      std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
      if (fp.empty() || fp.size() > 15 || fp.find_first_not_of("0123456789") != std::string::npos) return fail();
      bool neg = !ip.empty() && ip[0] == '-';
      std::size_t u = 0;
      long long whole = ip.empty() || ip == "-" ? 0 : std::stoll(ip, &u);
      if (!(ip.empty() || ip == "-") && u != ip.size()) return fail();
      long long den = 1;
      for (std::size_t i = 0; i < fp.size(); ++i) den *= 10;
      long long frac = std::stoll(fp);
      long long num = std::llabs(whole) * den + frac;
      return Rational(neg ? -num : num, den);
    }
    std::size_t u = 0;
    long long v = std::stoll(s, &u);
    if (u != s.size()) return fail();
    return Rational(v);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    return fail();
  }
}

}  // namespace rdl
