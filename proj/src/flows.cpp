#include "rdl/flows.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <map>
#include <set>

namespace rdl {

void CapacitatedBipartite::validate() const {
  if (r < 1 || s < 1) throw Error("bipartite network: capacities r, s must be >= 1");
  std::set<int> xs(X.begin(), X.end()), ys(Y.begin(), Y.end());
  if (xs.size() != X.size() || ys.size() != Y.size()) throw Error("bipartite network: repeated vertex");
  for (int x : X)
    if (ys.count(x)) throw Error("bipartite network: vertex " + std::to_string(x) + " on both sides");
  std::set<std::pair<int, int>> seen;
  for (auto [x, y] : edges) {
    if (!xs.count(x) || !ys.count(y))
      throw Error("bipartite network: edge (" + std::to_string(x) + "," + std::to_string(y) + ") not in X x Y");
    if (!seen.insert({x, y}).second)
      throw Error("bipartite network: duplicate edge (" + std::to_string(x) + "," + std::to_string(y) + ")");
  }
}

namespace {

struct Network {
  struct Arc {
    int to;
    std::int64_t cap;
  };
  std::vector<Arc> arcs;
  std::vector<std::vector<int>> out;

  explicit Network(int n) : out(static_cast<std::size_t>(n)) {}
  int add(int u, int v, std::int64_t c) {
    arcs.push_back({v, c});
    out[static_cast<std::size_t>(u)].push_back(static_cast<int>(arcs.size()) - 1);
    arcs.push_back({u, 0});
    out[static_cast<std::size_t>(v)].push_back(static_cast<int>(arcs.size()) - 1);
    return static_cast<int>(arcs.size()) - 2;
  }

  // Edmonds-Karp; returns flow value.
  std::int64_t maxflow(int src, int dst) {
    std::int64_t total = 0;
    const auto n = out.size();
    for (;;) {
      std::vector<int> via(n, -1);
      std::vector<char> seen(n, 0);
      std::deque<int> q{src};
      seen[static_cast<std::size_t>(src)] = 1;
      while (!q.empty() && !seen[static_cast<std::size_t>(dst)]) {
        int u = q.front();
        q.pop_front();
        for (int a : out[static_cast<std::size_t>(u)]) {
          int v = arcs[static_cast<std::size_t>(a)].to;
          if (arcs[static_cast<std::size_t>(a)].cap > 0 && !seen[static_cast<std::size_t>(v)]) {
            seen[static_cast<std::size_t>(v)] = 1;
            via[static_cast<std::size_t>(v)] = a;
            q.push_back(v);
          }
        }
      }
      if (!seen[static_cast<std::size_t>(dst)]) return total;
      std::int64_t push = std::numeric_limits<std::int64_t>::max();
      for (int v = dst; v != src; v = arcs[static_cast<std::size_t>(via[static_cast<std::size_t>(v)] ^ 1)].to)
        push = std::min(push, arcs[static_cast<std::size_t>(via[static_cast<std::size_t>(v)])].cap);
      for (int v = dst; v != src; v = arcs[static_cast<std::size_t>(via[static_cast<std::size_t>(v)] ^ 1)].to) {
        arcs[static_cast<std::size_t>(via[static_cast<std::size_t>(v)])].cap -= push;
        arcs[static_cast<std::size_t>(via[static_cast<std::size_t>(v)] ^ 1)].cap += push;
      }
      total += push;
    }
  }

  std::vector<char> reachable(int src) const {
    std::vector<char> seen(out.size(), 0);
    std::deque<int> q{src};
    seen[static_cast<std::size_t>(src)] = 1;
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (int a : out[static_cast<std::size_t>(u)]) {
        int v = arcs[static_cast<std::size_t>(a)].to;
        if (arcs[static_cast<std::size_t>(a)].cap > 0 && !seen[static_cast<std::size_t>(v)]) {
          seen[static_cast<std::size_t>(v)] = 1;
          q.push_back(v);
        }
      }
    }
    return seen;
  }
};

}  // namespace

FlowCertificate mfmc(const CapacitatedBipartite& g) {
  g.validate();
  const int nx = static_cast<int>(g.X.size()), ny = static_cast<int>(g.Y.size());
  const int src = nx + ny, dst = nx + ny + 1;
  std::map<int, int> xi, yi;
  for (int i = 0; i < nx; ++i) xi[g.X[static_cast<std::size_t>(i)]] = i;
  for (int j = 0; j < ny; ++j) yi[g.Y[static_cast<std::size_t>(j)]] = nx + j;

  Network net(nx + ny + 2);
  for (int i = 0; i < nx; ++i) net.add(src, i, g.r);
  for (int j = 0; j < ny; ++j) net.add(nx + j, dst, g.s);
  const std::int64_t big = g.r + g.s;  // exceeds any feasible edge flow
  std::vector<int> arc_of(g.edges.size());
  for (std::size_t e = 0; e < g.edges.size(); ++e)
    arc_of[e] = net.add(xi[g.edges[e].first], yi[g.edges[e].second], big);

  FlowCertificate cert;
  cert.D = net.maxflow(src, dst);
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const std::int64_t f = net.arcs[static_cast<std::size_t>(arc_of[e] ^ 1)].cap;
    if (f > 0) cert.h.push_back({g.edges[e].first, g.edges[e].second, f});
  }
  std::sort(cert.h.begin(), cert.h.end(), [](const FlowEdge& a, const FlowEdge& b) {
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  });

  // Source side C1 of the minimum cut; Z = (C2 n X) u (C1 n Y).
  const auto c1 = net.reachable(src);
  std::vector<int> z;
  for (int i = 0; i < nx; ++i)
    if (!c1[static_cast<std::size_t>(i)]) z.push_back(g.X[static_cast<std::size_t>(i)]);
  for (int j = 0; j < ny; ++j)
    if (c1[static_cast<std::size_t>(nx + j)]) z.push_back(g.Y[static_cast<std::size_t>(j)]);
  cert.Z = make_vertex_set(std::move(z));
  return cert;
}

std::string check_certificate(const CapacitatedBipartite& g, const FlowCertificate& c) {
  std::set<int> xs(g.X.begin(), g.X.end()), ys(g.Y.begin(), g.Y.end());
  std::set<std::pair<int, int>> es(g.edges.begin(), g.edges.end());
  std::map<int, std::int64_t> load;
  std::int64_t total = 0;
  for (const auto& e : c.h) {
    if (!es.count({e.u, e.v})) return "flow on non-edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
    if (e.f < 0) return "negative flow";
    load[e.u] += e.f;
    load[e.v] += e.f;
    total += e.f;
  }
  if (total != c.D) return "sum of flows " + std::to_string(total) + " != D " + std::to_string(c.D);
  for (auto [v, l] : load) {
    if (xs.count(v) && l > g.r) return "X vertex " + std::to_string(v) + " over capacity";
    if (ys.count(v) && l > g.s) return "Y vertex " + std::to_string(v) + " over capacity";
  }
  std::set<int> z(c.Z.begin(), c.Z.end());
  for (auto [x, y] : g.edges)
    if (!z.count(x) && !z.count(y)) return "edge (" + std::to_string(x) + "," + std::to_string(y) + ") uncovered";
  std::int64_t w = 0;
  for (int v : c.Z) {
    if (xs.count(v)) w += g.r;
    else if (ys.count(v)) w += g.s;
    else return "cover vertex " + std::to_string(v) + " not in the network";
  }
  if (w != c.D) return "cover weight " + std::to_string(w) + " != D " + std::to_string(c.D);
  return {};
}

nlohmann::json to_json(const FlowCertificate& c) {
  nlohmann::json h = nlohmann::json::array();
  for (const auto& e : c.h) h.push_back({e.u, e.v, e.f});
  return {{"D", c.D}, {"h", h}, {"Z", c.Z}};
}

FlowCertificate certificate_from_json(const nlohmann::json& j) {
  FlowCertificate c;
  try {
    c.D = j.at("D").get<std::int64_t>();
    for (const auto& e : j.at("h")) c.h.push_back({e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<std::int64_t>()});
    c.Z = make_vertex_set(j.at("Z").get<std::vector<int>>());
  } catch (const nlohmann::json::exception& ex) {
    throw Error(std::string("flow certificate JSON: ") + ex.what());
  }
  return c;
}

// ---------------------------------------------------------------------------

namespace {

bool host_edge(const FiniteGraph* host, int u, int v) { return host == nullptr || host->has_edge(u, v); }

}  // namespace

ColoredDegreeProfile colored_degree_profile(const TwoColoring& chi, const std::vector<Color>& vc,
                                            const FiniteGraph* host) {
  const int n = chi.size();
  if (static_cast<int>(vc.size()) != n) throw Error("vertex colour list does not match colouring size");
  ColoredDegreeProfile p;
  for (int v = 0; v < n; ++v) {
    if (vc[static_cast<std::size_t>(v)] != Color::Red) continue;
    int d = 0;
    for (int w = 0; w < n; ++w)
      if (w != v && vc[static_cast<std::size_t>(w)] == Color::Blue && host_edge(host, v, w) &&
          chi.color(v, w) == Color::Blue)
        ++d;
    p.degrees.push_back(d);
  }
  std::sort(p.degrees.begin(), p.degrees.end());
  std::vector<double> xs{0.0}, ys{0.0};
  for (std::size_t k = 0; k < p.degrees.size(); ++k) {
    xs.push_back(static_cast<double>(k + 1));
    ys.push_back(p.degrees[k]);
  }
  p.g = PLFunction::general(std::move(xs), std::move(ys), 0.0);
  return p;
}

FindflowResult findflow(const TwoColoring& chi, const std::vector<Color>& vc, int r, int s,
                        const FindflowOptions& opt) {
  const int n = chi.size();
  if (n < 1) throw Error("findflow: empty colouring");
  if (r < 1 || s < 1) throw Error("findflow: r and s must be >= 1");
  if (static_cast<int>(vc.size()) != n) throw Error("findflow: vertex colour list does not match colouring size");
  if (!(opt.epsilon > 0)) throw Error("findflow: epsilon must be positive");
  if (opt.host && opt.host->size() != n) throw Error("findflow: host graph size mismatch");

  FindflowResult res;
  const double lambda = static_cast<double>(s) / r;
  const double eps = boost::rational_cast<double>(opt.epsilon);
  const double f = f_closed(lambda).lower;
  const double gamma_w = (1.0 - f) / (1.0 + lambda / (1.0 - f));
  res.eta = opt.eta ? *opt.eta : gamma_w * eps / 100.0;
  res.n_threshold = static_cast<long long>(std::ceil(100.0 / (gamma_w * lambda * eps)));

  // Closed-neighbourhood degree against (1 - eta) n.
  for (int v = 0; v < n; ++v) {
    const int deg = opt.host ? static_cast<int>(opt.host->neighbors(v).size()) + 1 : n;
    if (deg < (1.0 - res.eta) * n)
      throw Error("findflow: vertex " + std::to_string(v) + " has degree " + std::to_string(deg - 1) +
                  ", below (1 - eta) n");
  }
  res.profile = colored_degree_profile(chi, vc, opt.host);

  std::vector<int> R, B;
  for (int v = 0; v < n; ++v) (vc[static_cast<std::size_t>(v)] == Color::Red ? R : B).push_back(v);
  if (R.empty() || B.empty()) {
    res.t = n;
    res.color = R.empty() ? Color::Blue : Color::Red;
    res.value = 1;
    res.degenerate = true;
    return res;
  }

  bool have = false;
  for (int t = 1; t <= n; ++t) {
    for (Color C : {Color::Blue, Color::Red}) {
      // X = C vertices (capacity r), Y = opposite vertices in [t] (capacity s), C-coloured edges.
      CapacitatedBipartite net;
      net.r = r;
      net.s = s;
      const auto& side_x = C == Color::Blue ? B : R;
      const auto& side_y = C == Color::Blue ? R : B;
      net.X = side_x;
      std::int64_t c_in_t = 0;
      for (int v : side_x)
        if (v < t) ++c_in_t;
      for (int v : side_y)
        if (v < t) net.Y.push_back(v);
      for (int x : net.X)
        for (int y : net.Y)
          if (host_edge(opt.host, x, y) && chi.color(x, y) == C) net.edges.emplace_back(x, y);
      FlowCertificate cert = mfmc(net);
      const Rational value = Rational(c_in_t, t) + Rational(cert.D, static_cast<std::int64_t>(s) * t);
      if (!have || value > res.value) {
        have = true;
        res.t = t;
        res.color = C;
        res.h = cert.h;
        res.D = cert.D;
        res.value = value;
      }
    }
  }
  return res;
}

std::string check_findflow(const TwoColoring& chi, const std::vector<Color>& vc, int r, int s,
                           const FindflowResult& res, const FiniteGraph* host) {
  const int n = chi.size();
  if (res.t < 1 || res.t > n) return "t outside [1, n]";
  std::vector<std::int64_t> load(static_cast<std::size_t>(n), 0);
  std::set<std::pair<int, int>> seen;
  for (const auto& e : res.h) {
    if (e.f <= 0) continue;
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n || e.u == e.v) return "flow on invalid pair";
    if (!host_edge(host, e.u, e.v)) return "flow on a non-edge of the host";
    if (!seen.insert({std::min(e.u, e.v), std::max(e.u, e.v)}).second) return "edge listed twice";
    if (chi.color(e.u, e.v) != res.color) return "flow on an edge of the wrong colour";
    if (vc[static_cast<std::size_t>(e.u)] == vc[static_cast<std::size_t>(e.v)]) return "flow between equal vertex colours";
    load[static_cast<std::size_t>(e.u)] += e.f;
    load[static_cast<std::size_t>(e.v)] += e.f;
  }
  std::int64_t c_in_t = 0, into = 0;
  for (int v = 0; v < n; ++v) {
    const bool isC = vc[static_cast<std::size_t>(v)] == res.color;
    if (load[static_cast<std::size_t>(v)] > (isC ? r : s)) return "capacity exceeded at vertex " + std::to_string(v);
    if (v < res.t) {
      if (isC) ++c_in_t;
      else into += load[static_cast<std::size_t>(v)];
    }
  }
  const Rational value = Rational(c_in_t, res.t) + Rational(into, static_cast<std::int64_t>(s) * res.t);
  if (value < res.value) return "reported value " + to_string(res.value) + " exceeds recomputed " + to_string(value);
  return {};
}

}  // namespace rdl
