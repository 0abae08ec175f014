#include <algorithm>
#include <map>
#include <numeric>

#include "rdl/graph_families.hpp"

namespace rdl {

namespace {

Rational lambda_double_prime(Rational lambda, Rational delta) {
  return lambda / (Rational(1) - 2 * delta * (1 + lambda));
}

bool delta_ok(Rational lambda, Rational lambda_prime, Rational delta) {
  if (Rational(1) - 2 * delta * (1 + lambda) <= 0) return false;
  return delta + lambda_double_prime(lambda, delta) < lambda_prime;
}

}  // namespace

Rational default_treecut_delta(Rational lambda, Rational lambda_prime) {
  if (lambda_prime <= lambda) throw Error("treecut: need lambda' > lambda");
  Rational d = std::min(Rational(1, 4), (lambda_prime - lambda) / (8 * (1 + lambda)));
  for (int i = 0; i < 40 && !delta_ok(lambda, lambda_prime, d); ++i) d /= 2;
  return d;
}

TreecutResult treecut(const FiniteGraph& forest, const VertexSet& independent, Rational lambda,
                      Rational lambda_prime, std::optional<Rational> delta_opt) {
  const VertexSet I = make_vertex_set(independent);
  if (I.empty()) throw Error("treecut: I is empty");
  if (!forest.is_acyclic()) throw Error("treecut: graph is not a forest");
  for (int v : I)
    if (v < 0 || v >= forest.size()) throw Error("treecut: vertex " + std::to_string(v) + " out of range");
  if (!is_independent(forest, I)) throw Error("treecut: I is not independent");
  const VertexSet J = neighborhood(forest, I);
  const auto nI = static_cast<std::int64_t>(I.size()), nJ = static_cast<std::int64_t>(J.size());
  if (Rational(nJ) > lambda * nI)
    throw Error("treecut: |N(I)| <= lambda|I| fails: " + std::to_string(nJ) + " > " + to_string(lambda) + " * " +
                std::to_string(nI));
  if (lambda_prime <= lambda) throw Error("treecut: lambda' > lambda fails");

  const Rational delta = delta_opt ? *delta_opt : default_treecut_delta(lambda, lambda_prime);
  if (delta <= 0) throw Error("treecut: delta must be positive");
  if (Rational(1) - 2 * delta * (1 + lambda) <= 0)
    throw Error("treecut: 1 - 2 delta (1 + lambda) > 0 fails for delta = " + to_string(delta));

  TreecutResult res;
  res.delta = delta;
  res.bound_size = 2 / delta;
  res.delta_condition_holds = delta_ok(lambda, lambda_prime, delta);

  // Local forest F on I u J with I-J edges only.
  std::vector<int> verts;
  std::set_union(I.begin(), I.end(), J.begin(), J.end(), std::back_inserter(verts));
  const int n = static_cast<int>(verts.size());
  std::map<int, int> local;
  for (int i = 0; i < n; ++i) local[verts[static_cast<std::size_t>(i)]] = i;
  std::vector<char> inI(static_cast<std::size_t>(n), 0);
  for (int v : I) inI[static_cast<std::size_t>(local[v])] = 1;
  FiniteGraph F(n);
  for (int v : I)
    for (int w : forest.neighbors(v)) F.add_edge(local[v], local[w]);

  // Root each component at its smallest I vertex; every component contains one.
  std::vector<int> parent(static_cast<std::size_t>(n), -2), order;
  order.reserve(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) {
    if (!inI[static_cast<std::size_t>(r)] || parent[static_cast<std::size_t>(r)] != -2) continue;
    parent[static_cast<std::size_t>(r)] = -1;
    std::size_t head = order.size();
    order.push_back(r);
    while (head < order.size()) {
      int u = order[head++];
      for (int w : F.neighbors(u))
        if (parent[static_cast<std::size_t>(w)] == -2) {
          parent[static_cast<std::size_t>(w)] = u;
          order.push_back(w);
        }
    }
  }

  // S: repeatedly cut a minimal vertex whose remaining subtree reaches 1/delta.
  std::vector<std::int64_t> sub(static_cast<std::size_t>(n), 1);
  std::vector<char> inS(static_cast<std::size_t>(n), 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int v = *it;
    if (Rational(sub[static_cast<std::size_t>(v)]) * delta >= 1) {
      inS[static_cast<std::size_t>(v)] = 1;
      continue;
    }
    if (int p = parent[static_cast<std::size_t>(v)]; p >= 0) sub[static_cast<std::size_t>(p)] += sub[static_cast<std::size_t>(v)];
  }

  std::vector<char> inX = inS;
  for (int v = 0; v < n; ++v)
    if (inS[static_cast<std::size_t>(v)] && !inI[static_cast<std::size_t>(v)] && parent[static_cast<std::size_t>(v)] >= 0)
      inX[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])] = 1;

  // Components of F after deleting a vertex mask.
  auto comps = [&](const std::vector<char>& removed, const std::vector<int>& within) {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(static_cast<std::size_t>(n), 0), allowed(static_cast<std::size_t>(n), 0);
    for (int v : within) allowed[static_cast<std::size_t>(v)] = !removed[static_cast<std::size_t>(v)];
    for (int s : within) {
      if (!allowed[static_cast<std::size_t>(s)] || seen[static_cast<std::size_t>(s)]) continue;
      std::vector<int> c{s}, st{s};
      seen[static_cast<std::size_t>(s)] = 1;
      while (!st.empty()) {
        int u = st.back();
        st.pop_back();
        for (int w : F.neighbors(u))
          if (allowed[static_cast<std::size_t>(w)] && !seen[static_cast<std::size_t>(w)]) {
            seen[static_cast<std::size_t>(w)] = 1;
            c.push_back(w);
            st.push_back(w);
          }
      }
      std::sort(c.begin(), c.end());
      out.push_back(std::move(c));
    }
    return out;
  };
  auto count_I = [&](const std::vector<int>& c) {
    return static_cast<std::int64_t>(std::count_if(c.begin(), c.end(), [&](int v) { return inI[static_cast<std::size_t>(v)]; }));
  };

  std::vector<int> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 0);
  std::vector<char> removeXI(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) removeXI[static_cast<std::size_t>(v)] = inX[static_cast<std::size_t>(v)] && inI[static_cast<std::size_t>(v)];

  const std::vector<int>* best = nullptr;
  Rational best_ratio;
  auto components = comps(removeXI, all);
  for (const auto& c : components) {
    const std::int64_t ci = count_I(c);
    if (ci == 0) continue;
    Rational r(static_cast<std::int64_t>(c.size()) - ci, ci);
    if (!best || r < best_ratio) {
      best = &c;
      best_ratio = r;
    }
  }
  if (!best) throw Error("treecut: every vertex of I was cut; decrease delta");

  std::vector<int> chosen;
  if (Rational(count_I(*best)) <= res.bound_size) {
    for (int v : *best)
      if (inI[static_cast<std::size_t>(v)]) chosen.push_back(v);
  } else {
    int hub = -1;
    for (int v : *best)
      if (inX[static_cast<std::size_t>(v)] && !inI[static_cast<std::size_t>(v)]) {
        if (hub >= 0) throw Error("treecut: component holds two cut vertices of N(I)");
        hub = v;
      }
    if (hub < 0) throw Error("treecut: oversized component without a cut vertex of N(I)");
    std::vector<char> removed(static_cast<std::size_t>(n), 0);
    removed[static_cast<std::size_t>(hub)] = 1;
    auto parts = comps(removed, *best);
    // Ascending ratio: the prefix then never exceeds the overall ratio.
    std::stable_sort(parts.begin(), parts.end(), [&](const auto& a, const auto& b) {
      std::int64_t ai = count_I(a), bi = count_I(b);
      std::int64_t aj = static_cast<std::int64_t>(a.size()) - ai, bj = static_cast<std::int64_t>(b.size()) - bi;
      if (ai == 0 || bi == 0) return ai != 0 && bi == 0;
      return Rational(aj, ai) < Rational(bj, bi);
    });
    std::int64_t acc = 0;
    for (const auto& p : parts) {
      for (int v : p)
        if (inI[static_cast<std::size_t>(v)]) chosen.push_back(v);
      acc += count_I(p);
      if (Rational(acc) * delta >= 1) break;
    }
  }

  for (int v : chosen) res.subset.push_back(verts[static_cast<std::size_t>(v)]);
  res.subset = make_vertex_set(std::move(res.subset));

  const auto sz = static_cast<std::int64_t>(res.subset.size());
  const auto nb = static_cast<std::int64_t>(neighborhood(forest, res.subset).size());
  if (Rational(sz) > res.bound_size || Rational(nb) > lambda_prime * sz) {
    std::string why = "treecut: result violates ";
    why += Rational(sz) > res.bound_size ? "|I'| <= 2/delta" : "|N(I')| <= lambda'|I'|";
    if (!res.delta_condition_holds)
      why += "; delta + lambda/(1 - 2 delta (1 + lambda)) < lambda' fails for delta = " + to_string(delta);
    throw Error(why);
  }
  return res;
}

}  // namespace rdl
