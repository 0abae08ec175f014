#include "rdl/embedder.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

namespace rdl {

std::vector<int> WComponent::vertices() const {
  std::vector<int> v = X;
  v.insert(v.end(), Y.begin(), Y.end());
  std::sort(v.begin(), v.end());
  return v;
}

std::size_t WStructure::vertex_count() const {
  std::size_t k = 0;
  for (const auto& c : components) k += c.X.size() + c.Y.size();
  return k;
}

Rational WStructure::density(int n) const {
  if (n <= 0) return Rational(0);
  return Rational(static_cast<std::int64_t>(vertex_count()), n);
}

std::vector<Color> shading_vertex_colors(const Shading& sh) {
  std::vector<Color> out;
  out.reserve(sh.shade.size());
  for (const auto& s : sh.shade) out.push_back(s.is_x() ? Color::Red : s.color());
  return out;
}

namespace {

bool all_colored(const TwoColoring& chi, int v, const std::vector<int>& others, Color c) {
  for (int w : others)
    if (chi.color(v, w) != c) return false;
  return true;
}

// First K^C_{r,s} with X inside xs and Y inside ys, searched in a bounded window.
std::optional<WComponent> find_piece(const TwoColoring& chi, const std::vector<int>& xs, const std::vector<int>& ys,
                                     int r, int s, Color c, int window) {
  for (std::size_t i0 = 0; i0 + static_cast<std::size_t>(r) <= xs.size(); ++i0) {
    const int x0 = xs[i0];
    std::vector<int> ycand;
    for (int y : ys)
      if (chi.color(x0, y) == c) {
        ycand.push_back(y);
        if (static_cast<int>(ycand.size()) >= window + s) break;
      }
    if (static_cast<int>(ycand.size()) < s) continue;
    const std::size_t xend = std::min(xs.size(), i0 + 1 + static_cast<std::size_t>(window));
    std::vector<int> chosen{x0};
    std::optional<WComponent> found;
    auto rec = [&](auto&& self, std::size_t from, const std::vector<int>& common) -> bool {
      if (static_cast<int>(common.size()) < s) return false;
      if (static_cast<int>(chosen.size()) == r) {
        WComponent w;
        w.kind = WComponent::Kind::Piece;
        w.X = chosen;
        w.Y.assign(common.begin(), common.begin() + s);
        found = w;
        return true;
      }
      for (std::size_t k = from; k < xend; ++k) {
        std::vector<int> next;
        for (int y : common)
          if (chi.color(xs[k], y) == c) next.push_back(y);
        chosen.push_back(xs[k]);
        if (self(self, k + 1, next)) return true;
        chosen.pop_back();
      }
      return false;
    };
    if (rec(rec, i0 + 1, ycand)) return found;
  }
  return std::nullopt;
}

}  // namespace

WStructure build_W(const TwoColoring& chi, const Shading& sh, int r, int s, Color c, const BuildWOptions& opt) {
  if (r < 1 || s < 1) throw Error("build_W: r and s must be >= 1");
  if (static_cast<int>(sh.shade.size()) != chi.size()) throw Error("build_W: shading size does not match colouring");
  WStructure w;
  w.color = c;
  w.r = r;
  w.s = s;
  const int n = chi.size();
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  for (int q = 1; q <= sh.a; ++q) {
    for (int p = 1; p <= sh.a; ++p) {
      for (;;) {
        std::vector<int> xs, ys;
        for (int v = 0; v < n; ++v) {
          if (used[static_cast<std::size_t>(v)]) continue;
          if (sh.shade[static_cast<std::size_t>(v)] == Shade::of(other(c), p)) xs.push_back(v);
          if (sh.shade[static_cast<std::size_t>(v)] == Shade::of(c, q)) ys.push_back(v);
        }
        auto piece = find_piece(chi, xs, ys, r, s, c, opt.window);
        if (!piece) break;
        piece->shade = q;
        piece->x_shade = p;
        for (int v : piece->vertices()) used[static_cast<std::size_t>(v)] = 1;
        w.components.push_back(*piece);
      }
    }
  }
  for (int v = 0; v < n; ++v) {
    const Shade& sv = sh.shade[static_cast<std::size_t>(v)];
    if (used[static_cast<std::size_t>(v)] || sv.is_x() || sv.color() != c) continue;
    WComponent iso;
    iso.Y = {v};
    iso.shade = sv.index;
    w.components.push_back(iso);
  }
  std::sort(w.components.begin(), w.components.end(),
            [](const WComponent& a, const WComponent& b) { return a.vertices().front() < b.vertices().front(); });
  return w;
}

WStructure build_W(const TwoColoring& chi, const Shading& sh, int r, int s, const BuildWOptions& opt) {
  WStructure red = build_W(chi, sh, r, s, Color::Red, opt);
  WStructure blue = build_W(chi, sh, r, s, Color::Blue, opt);
  return blue.vertex_count() > red.vertex_count() ? blue : red;
}

std::string check_W(const TwoColoring& chi, const Shading& sh, const WStructure& w) {
  const int n = chi.size();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  const Color c = w.color;
  for (std::size_t k = 0; k < w.components.size(); ++k) {
    const auto& comp = w.components[k];
    const std::string id = "component " + std::to_string(k);
    for (int v : comp.vertices()) {
      if (v < 0 || v >= n) return id + ": vertex out of range";
      if (seen[static_cast<std::size_t>(v)]) return id + ": vertex " + std::to_string(v) + " reused";
      seen[static_cast<std::size_t>(v)] = 1;
    }
    for (int y : comp.Y)
      if (!(sh.shade[static_cast<std::size_t>(y)] == Shade::of(c, comp.shade))) return id + ": Y vertex off its shade";
    if (comp.kind == WComponent::Kind::Isolated) {
      if (comp.Y.size() != 1 || !comp.X.empty()) return id + ": isolated component must hold one vertex";
      continue;
    }
    if (static_cast<int>(comp.X.size()) != w.r || static_cast<int>(comp.Y.size()) != w.s)
      return id + ": piece sides do not have sizes r, s";
    for (int x : comp.X) {
      if (!(sh.shade[static_cast<std::size_t>(x)] == Shade::of(other(c), comp.x_shade)))
        return id + ": X vertex off its shade";
      if (!all_colored(chi, x, comp.Y, c)) return id + ": piece edge of the wrong colour";
    }
  }
  return {};
}

std::string check_spec(const HPrefixSpec& spec, int r, int s) {
  if (spec.a < 2) return "a must be >= 2";
  if (spec.b < 1 || spec.b > spec.a) return "b must lie in [1, a]";
  const FiniteGraph h = spec.family.prefix(spec.size);
  if (static_cast<int>(spec.psi.size()) != spec.size) return "psi has the wrong length";
  for (int v = 0; v < spec.size; ++v) {
    const int p = spec.psi[static_cast<std::size_t>(v)];
    if (p < 1 || p > spec.a) return "psi(" + std::to_string(v) + ") outside [1, a]";
    for (int u : h.neighbors(v))
      if (spec.psi[static_cast<std::size_t>(u)] == p) return "psi is not proper on edge (" + std::to_string(v) + "," + std::to_string(u) + ")";
  }
  for (std::size_t i = 0; i < spec.templates.size(); ++i) {
    const VertexSet I = make_vertex_set(spec.templates[i]);
    const std::string id = "template " + std::to_string(i);
    for (int v : I)
      if (v < 0 || v >= spec.size) return id + ": vertex out of range";
    if (static_cast<int>(I.size()) != r) return id + ": |I| != r";
    if (!is_independent(h, I)) return id + ": I not independent";
    const VertexSet N = neighborhood(h, I);
    if (static_cast<int>(N.size()) > s) return id + ": |N(I)| > s";
    if (!is_independent(h, N)) return id + ": N(I) not independent";
    for (int u : N)
      if (spec.psi[static_cast<std::size_t>(u)] != spec.a) return id + ": psi(N(I)) != a";
  }
  return {};
}

VertexSet EmbeddingState::image() const {
  std::vector<int> v;
  for (int x : phi)
    if (x >= 0) v.push_back(x);
  return make_vertex_set(std::move(v));
}

namespace {

// Three progress conditions; returns number of violated (defined, undefined) neighbour pairs.
int progress_violations(const FiniteGraph& h, const std::vector<int>& phi, const std::vector<int>& comp,
                        const std::vector<int>& kappa, const std::vector<int>& psi, const Shading& sh, Color c,
                        int a) {
  int bad = 0;
  for (int v = 0; v < h.size(); ++v) {
    const int x = phi[static_cast<std::size_t>(v)];
    if (x < 0) continue;
    const Shade sx = sh.shade[static_cast<std::size_t>(x)];
    const int k = kappa[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])];
    const int pv = psi[static_cast<std::size_t>(v)];
    for (int u : h.neighbors(v)) {
      if (phi[static_cast<std::size_t>(u)] >= 0) continue;
      bool ok;
      if (k != a) ok = sx == Shade::of(c, k);
      else if (pv == a) ok = sx == Shade::of(c, a);
      else ok = sx == Shade::of(other(c), pv) && psi[static_cast<std::size_t>(u)] < pv;
      bad += !ok;
    }
  }
  return bad;
}

long long tset_bound(int delta, int a) {
  if (delta <= 1) return a;
  long long b = 1;
  for (int i = 0; i < a; ++i) {
    b *= delta;
    if (b > (1LL << 40)) return b;
  }
  return b;
}

}  // namespace

EmbeddingState embed(const TwoColoring& chi, const Shading& sh, const WStructure& w, const HPrefixSpec& spec,
                     int budget) {
  if (budget < 0) throw Error("embed: budget must be nonnegative");
  if (auto why = check_spec(spec, w.r, w.s); !why.empty()) throw Error("embed: " + why);
  if (spec.a != sh.a) throw Error("embed: spec.a must equal the shading's a");
  if (static_cast<int>(sh.shade.size()) != chi.size()) throw Error("embed: shading size does not match colouring");
  if (auto why = check_W(chi, sh, w); !why.empty()) throw Error("embed: W inconsistent with shading: " + why);

  const int n = chi.size();
  const int a = spec.a;
  const Color C = w.color;
  const FiniteGraph h = spec.family.prefix(spec.size);
  const auto& psi = spec.psi;

  EmbeddingState st;
  st.color = C;
  st.phi.assign(static_cast<std::size_t>(spec.size), -1);
  st.component = h.components();
  const int ncomp = st.component.empty() ? 0 : *std::max_element(st.component.begin(), st.component.end()) + 1;
  st.consumed.assign(w.components.size(), 0);

  // S_j sizes and the b heaviest indices.
  std::vector<std::int64_t> S(static_cast<std::size_t>(a) + 1, 0);
  for (const auto& comp : w.components)
    if (comp.shade >= 1 && comp.shade <= a) S[static_cast<std::size_t>(comp.shade)] += static_cast<std::int64_t>(comp.X.size() + comp.Y.size());
  std::vector<int> order(static_cast<std::size_t>(a));
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return S[static_cast<std::size_t>(x)] > S[static_cast<std::size_t>(y)]; });
  std::vector<int> Jp;
  for (int k = 0; k < spec.b; ++k)
    if (S[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])] > 0) Jp.push_back(order[static_cast<std::size_t>(k)]);
  std::sort(Jp.begin(), Jp.end());
  if (Jp.empty()) {
    int fallback = 1;
    for (int j = 1; j <= a; ++j)
      if (!sh.members(Shade::of(C, j)).empty()) {
        fallback = j;
        break;
      }
    Jp.push_back(fallback);
  }

  // Pairwise disjoint templates, greedy by index.
  std::vector<VertexSet> tmpl;
  std::vector<VertexSet> tmpl_n;
  {
    std::vector<char> taken(static_cast<std::size_t>(spec.size), 0);
    for (const auto& raw : spec.templates) {
      VertexSet I = make_vertex_set(raw);
      VertexSet N = neighborhood(h, I);
      bool clash = false;
      for (int v : I) clash |= taken[static_cast<std::size_t>(v)] != 0;
      for (int v : N) clash |= taken[static_cast<std::size_t>(v)] != 0;
      if (clash) continue;
      for (int v : I) taken[static_cast<std::size_t>(v)] = 1;
      for (int v : N) taken[static_cast<std::size_t>(v)] = 1;
      tmpl.push_back(I);
      tmpl_n.push_back(N);
    }
  }

  // kappa: round-robin over J' for components holding templates, in component order.
  st.kappa.assign(static_cast<std::size_t>(ncomp), Jp.front());
  {
    std::vector<char> has(static_cast<std::size_t>(ncomp), 0);
    for (const auto& I : tmpl) has[static_cast<std::size_t>(st.component[static_cast<std::size_t>(I.front())])] = 1;
    std::size_t rr = 0;
    for (int cidx = 0; cidx < ncomp; ++cidx)
      if (has[static_cast<std::size_t>(cidx)]) st.kappa[static_cast<std::size_t>(cidx)] = Jp[rr++ % Jp.size()];
  }

  std::vector<char> used(static_cast<std::size_t>(n), 0), reserved(static_cast<std::size_t>(n), 0);
  std::vector<int> iso_of(static_cast<std::size_t>(n), -1);
  for (std::size_t k = 0; k < w.components.size(); ++k) {
    const auto& comp = w.components[k];
    if (comp.kind == WComponent::Kind::Piece)
      for (int v : comp.vertices()) reserved[static_cast<std::size_t>(v)] = 1;
    else
      iso_of[static_cast<std::size_t>(comp.Y.front())] = static_cast<int>(k);
  }
  std::vector<char> tmpl_used(tmpl.size(), 0);
  const long long tbound = tset_bound(h.max_degree(), a);

  auto assign = [&](int hv, int x) {
    st.phi[static_cast<std::size_t>(hv)] = x;
    used[static_cast<std::size_t>(x)] = 1;
    if (int k = iso_of[static_cast<std::size_t>(x)]; k >= 0) st.consumed[static_cast<std::size_t>(k)] = 1;
  };
  auto free_host = [&](Shade target, int hv) -> int {
    std::vector<int> nbr_images;
    for (int u : h.neighbors(hv))
      if (st.phi[static_cast<std::size_t>(u)] >= 0) nbr_images.push_back(st.phi[static_cast<std::size_t>(u)]);
    for (int x = 0; x < n; ++x) {
      if (used[static_cast<std::size_t>(x)] || reserved[static_cast<std::size_t>(x)]) continue;
      if (!(sh.shade[static_cast<std::size_t>(x)] == target)) continue;
      if (all_colored(chi, x, nbr_images, C)) return x;
    }
    return -1;
  };

  // Define the image of the least undefined vertex (and, when kappa = a, its T-set).
  auto op_vertex = [&](int v) -> bool {
    const int k = st.kappa[static_cast<std::size_t>(st.component[static_cast<std::size_t>(v)])];
    if (k != a) {
      const int x = free_host(Shade::of(C, k), v);
      if (x < 0) {
        st.incomplete_reason = "no free host in shade " + Shade::of(C, k).str() + " for H vertex " + std::to_string(v);
        return false;
      }
      assign(v, x);
      return true;
    }
    std::vector<int> T{v};
    std::vector<char> inT(static_cast<std::size_t>(spec.size), 0);
    inT[static_cast<std::size_t>(v)] = 1;
    for (std::size_t q = 0; q < T.size(); ++q)
      for (int u : h.neighbors(T[q]))
        if (!inT[static_cast<std::size_t>(u)] && psi[static_cast<std::size_t>(u)] > psi[static_cast<std::size_t>(T[q])]) {
          inT[static_cast<std::size_t>(u)] = 1;
          T.push_back(u);
        }
    st.stats.max_tset = std::max(st.stats.max_tset, static_cast<int>(T.size()));
    if (static_cast<long long>(T.size()) > tbound) st.stats.tset_bound_ok = false;
    std::stable_sort(T.begin(), T.end(), [&](int x, int y) {
      return psi[static_cast<std::size_t>(x)] != psi[static_cast<std::size_t>(y)]
                 ? psi[static_cast<std::size_t>(x)] > psi[static_cast<std::size_t>(y)]
                 : x < y;
    });
    for (int u : T) {
      if (st.phi[static_cast<std::size_t>(u)] >= 0) continue;
      const int pu = psi[static_cast<std::size_t>(u)];
      const Shade target = pu == a ? Shade::of(C, a) : Shade::of(other(C), pu);
      const int x = free_host(target, u);
      if (x < 0) {
        st.incomplete_reason = "no free host in shade " + target.str() + " for H vertex " + std::to_string(u);
        return false;
      }
      assign(u, x);
    }
    return true;
  };

  auto untouched = [&](int hv) {
    if (st.phi[static_cast<std::size_t>(hv)] >= 0) return false;
    for (int u : h.neighbors(hv))
      if (st.phi[static_cast<std::size_t>(u)] >= 0) return false;
    return true;
  };
  // H vertex with psi = a in a kappa = j component, itself and its neighbours undefined.
  auto pick_anchor = [&](int j, const std::set<int>& avoid) -> int {
    int fallback = -1;
    std::vector<char> in_tmpl(static_cast<std::size_t>(spec.size), 0);
    for (std::size_t t = 0; t < tmpl.size(); ++t)
      if (!tmpl_used[t]) {
        for (int v : tmpl[t]) in_tmpl[static_cast<std::size_t>(v)] = 1;
        for (int v : tmpl_n[t]) in_tmpl[static_cast<std::size_t>(v)] = 1;
      }
    for (int v = 0; v < spec.size; ++v) {
      if (psi[static_cast<std::size_t>(v)] != a || avoid.count(v)) continue;
      if (st.kappa[static_cast<std::size_t>(st.component[static_cast<std::size_t>(v)])] != j) continue;
      if (!untouched(v)) continue;
      if (!in_tmpl[static_cast<std::size_t>(v)]) return v;
      if (fallback < 0) fallback = v;
    }
    return fallback;
  };

  std::vector<int> queue;
  for (std::size_t k = 0; k < w.components.size(); ++k)
    if (std::find(Jp.begin(), Jp.end(), w.components[k].shade) != Jp.end()) queue.push_back(static_cast<int>(k));
  std::size_t qpos = 0;

  // Add the next W component that can be placed.
  auto op_component = [&]() -> bool {
    while (qpos < queue.size()) {
      const int k = queue[qpos++];
      if (st.consumed[static_cast<std::size_t>(k)]) continue;
      const auto& comp = w.components[static_cast<std::size_t>(k)];
      const int j = comp.shade;
      std::vector<std::pair<int, int>> plan;
      std::set<int> planned;
      std::vector<int> leftovers;
      int t_used = -1;
      if (comp.kind == WComponent::Kind::Piece) {
        for (std::size_t t = 0; t < tmpl.size() && t_used < 0; ++t) {
          if (tmpl_used[t]) continue;
          if (st.kappa[static_cast<std::size_t>(st.component[static_cast<std::size_t>(tmpl[t].front())])] != j) continue;
          bool ok = true;
          for (int v : tmpl[t]) ok = ok && untouched(v);
          for (int v : tmpl_n[t]) ok = ok && untouched(v);
          if (ok) t_used = static_cast<int>(t);
        }
        if (t_used < 0) continue;
        const auto& I = tmpl[static_cast<std::size_t>(t_used)];
        const auto& N = tmpl_n[static_cast<std::size_t>(t_used)];
        for (std::size_t q = 0; q < I.size(); ++q) plan.emplace_back(I[q], comp.X[q]);
        for (std::size_t q = 0; q < N.size(); ++q) plan.emplace_back(N[q], comp.Y[q]);
        for (auto [hv, x] : plan) planned.insert(hv);
        for (std::size_t q = N.size(); q < comp.Y.size(); ++q) leftovers.push_back(comp.Y[q]);
      } else {
        leftovers.push_back(comp.Y.front());
      }
      bool ok = true;
      for (int x : leftovers) {
        // the anchor must also avoid neighbours of vertices planned in this step
        std::set<int> avoid = planned;
        for (int hv : planned)
          for (int u : h.neighbors(hv)) avoid.insert(u);
        const int hv = pick_anchor(j, avoid);
        if (hv < 0) {
          ok = false;
          break;
        }
        plan.emplace_back(hv, x);
        planned.insert(hv);
      }
      if (!ok) continue;
      for (auto [hv, x] : plan) {
        st.phi[static_cast<std::size_t>(hv)] = x;
        used[static_cast<std::size_t>(x)] = 1;
      }
      if (t_used >= 0) {
        tmpl_used[static_cast<std::size_t>(t_used)] = 1;
        st.used_templates.push_back(t_used);
        ++st.stats.pieces_placed;
      } else {
        ++st.stats.isolated_placed;
      }
      st.consumed[static_cast<std::size_t>(k)] = 1;
      return true;
    }
    return false;
  };

  auto least_undefined = [&]() {
    for (int v = 0; v < spec.size; ++v)
      if (st.phi[static_cast<std::size_t>(v)] < 0) return v;
    return -1;
  };

  while (st.stats.steps < budget) {
    bool progressed = false;
    if (op_component()) {
      ++st.stats.steps;
      ++st.stats.component_steps;
      progressed = true;
      st.stats.progress_violations += progress_violations(h, st.phi, st.component, st.kappa, psi, sh, C, a);
    }
    if (st.stats.steps >= budget) break;
    if (int v = least_undefined(); v >= 0) {
      if (!op_vertex(v)) {
        st.incomplete = true;
        break;
      }
      ++st.stats.steps;
      ++st.stats.vertex_steps;
      progressed = true;
      st.stats.progress_violations += progress_violations(h, st.phi, st.component, st.kappa, psi, sh, C, a);
    }
    if (!progressed) break;
  }
  return st;
}

EmbedReport verify_embedding(const EmbeddingState& st, const TwoColoring& chi, const Shading& sh,
                             const HPrefixSpec& spec, const WStructure& w) {
  EmbedReport rep;
  const int n = chi.size();
  auto fail = [&](bool& flag, const std::string& why) {
    if (flag && rep.failure.empty()) rep.failure = why;
    flag = false;
  };
  if (static_cast<int>(st.phi.size()) != spec.size) {
    fail(rep.injective, "state size does not match the H-prefix");
    return rep;
  }
  const FiniteGraph h = spec.family.prefix(spec.size);
  std::set<int> seen;
  for (int v = 0; v < spec.size; ++v) {
    const int x = st.phi[static_cast<std::size_t>(v)];
    if (x < 0) continue;
    if (x >= n) fail(rep.injective, "image of " + std::to_string(v) + " out of range");
    else if (!seen.insert(x).second) fail(rep.injective, "host vertex " + std::to_string(x) + " used twice");
  }
  if (rep.injective) {
    for (auto [u, v] : h.edges()) {
      const int x = st.phi[static_cast<std::size_t>(u)], y = st.phi[static_cast<std::size_t>(v)];
      if (x >= 0 && y >= 0 && chi.color(x, y) != st.color)
        fail(rep.edge_colors, "H edge (" + std::to_string(u) + "," + std::to_string(v) + ") maps to a " +
                                  (st.color == Color::Red ? "blue" : "red") + " edge");
    }
    const bool sizes_ok = static_cast<int>(st.component.size()) == spec.size &&
                          static_cast<int>(sh.shade.size()) == n;
    if (!sizes_ok || st.stats.progress_violations != 0 ||
        progress_violations(h, st.phi, st.component, st.kappa, spec.psi, sh, st.color, spec.a) != 0)
      fail(rep.progress, "progress condition violated");
  }
  if (st.consumed.size() != w.components.size()) {
    fail(rep.consumed_in_image, "consumed flags do not match W");
  } else {
    for (std::size_t k = 0; k < w.components.size(); ++k) {
      if (!st.consumed[k]) continue;
      for (int v : w.components[k].vertices())
        if (!seen.count(v)) {
          fail(rep.consumed_in_image, "consumed component " + std::to_string(k) + " not inside the image");
          break;
        }
    }
  }
  if (!st.stats.tset_bound_ok) fail(rep.tset_bound, "T-set exceeded its degree bound");
  rep.image_density = prefix_density(st.image());
  return rep;
}

nlohmann::json to_json(const EmbeddingState& st) {
  nlohmann::json pairs = nlohmann::json::array();
  for (std::size_t v = 0; v < st.phi.size(); ++v)
    if (st.phi[v] >= 0) pairs.push_back({static_cast<int>(v), st.phi[v]});
  std::vector<int> consumed;
  for (std::size_t k = 0; k < st.consumed.size(); ++k)
    if (st.consumed[k]) consumed.push_back(static_cast<int>(k));
  return {{"pairs", pairs}, {"color", std::string(1, color_char(st.color))}, {"consumed_components", consumed}};
}

// ---------------------------------------------------------------------------

PlantedInstance make_planted(int variant, int pieces, int spare, std::uint64_t seed) {
  if (variant != 1 && variant != 2) throw Error("planted variant must be 1 or 2");
  if (pieces < 0 || spare < 0) throw Error("planted sizes must be nonnegative");
  std::mt19937_64 rng(seed);
  // Enough copies that pieces always find a fresh template, and a reservoir
  // that exactly hosts every copy not used by a piece.
  const int copies = 2 * pieces + 1 + spare;
  const int free_copies = copies - pieces;
  const int reservoir = variant == 1 ? 3 * free_copies : free_copies;
  PlantedInstance pi;
  pi.r = 2;
  pi.s = 1;

  // Class layout before shuffling: piece X pairs, piece Y, reservoir, and
  // (variant 2) the blue leaf supply.
  const int leaf_supply = variant == 2 ? 2 * free_copies : 0;
  const int n = 3 * pieces + reservoir + leaf_supply;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  enum Cls { PX, PY, RES, LEAF };
  std::vector<Cls> cls(static_cast<std::size_t>(n));
  std::vector<int> owner(static_cast<std::size_t>(n), -1);
  int idx = 0;
  for (int p = 0; p < pieces; ++p)
    for (int q = 0; q < 2; ++q) {
      cls[static_cast<std::size_t>(perm[static_cast<std::size_t>(idx)])] = PX;
      owner[static_cast<std::size_t>(perm[static_cast<std::size_t>(idx++)])] = p;
    }
  for (int p = 0; p < pieces; ++p) {
    cls[static_cast<std::size_t>(perm[static_cast<std::size_t>(idx)])] = PY;
    owner[static_cast<std::size_t>(perm[static_cast<std::size_t>(idx++)])] = p;
  }
  for (int q = 0; q < reservoir; ++q) cls[static_cast<std::size_t>(perm[static_cast<std::size_t>(idx++)])] = RES;
  for (int q = 0; q < leaf_supply; ++q) cls[static_cast<std::size_t>(perm[static_cast<std::size_t>(idx++)])] = LEAF;

  const int a = 2;
  auto red_side = [&](int v) { return cls[static_cast<std::size_t>(v)] == PY || cls[static_cast<std::size_t>(v)] == RES; };
  std::bernoulli_distribution coin(0.5);
  std::vector<Color> up;
  up.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(std::max(n - 1, 0)) / 2);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      const bool ru = red_side(u), rv = red_side(v);
      Color c;
      if (ru && rv) {
        c = variant == 1 ? Color::Red : (coin(rng) ? Color::Red : Color::Blue);
      } else if (!ru && !rv) {
        c = variant == 1 ? (coin(rng) ? Color::Red : Color::Blue) : Color::Blue;
      } else {
        const int x = ru ? v : u, y = ru ? u : v;
        const bool own = cls[static_cast<std::size_t>(x)] == PX && cls[static_cast<std::size_t>(y)] == PY &&
                         owner[static_cast<std::size_t>(x)] == owner[static_cast<std::size_t>(y)];
        if (variant == 2) c = Color::Red;
        else c = own ? Color::Red : (coin(rng) ? Color::Red : Color::Blue);
      }
      up.push_back(c);
    }
  pi.chi = TwoColoring::explicit_upper(n, std::move(up));

  Shading& sh = pi.shading;
  sh.a = a;
  sh.min_count = 1;
  sh.theta = Rational(1, 4);
  sh.rounds = 1;
  sh.shade.resize(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    const bool rs = red_side(v);
    if (variant == 1) sh.shade[static_cast<std::size_t>(v)] = rs ? Shade::of(Color::Red, 1) : Shade::of(Color::Blue, 2);
    else sh.shade[static_cast<std::size_t>(v)] = rs ? Shade::of(Color::Red, 2) : Shade::of(Color::Blue, 1);
  }

  // H = copies of K_{1,2}: leaves 3c, 3c+1 (psi 1), centre 3c+2 (psi a).
  pi.spec.family = GraphFamily::omega_factor(clique_complement_factor(2, 1));
  pi.spec.size = 3 * copies;
  pi.spec.a = a;
  pi.spec.b = 1;
  for (int c = 0; c < copies; ++c) {
    pi.spec.psi.insert(pi.spec.psi.end(), {1, 1, a});
    pi.spec.templates.push_back({3 * c, 3 * c + 1});
  }

  WStructure& w = pi.w;
  w.color = Color::Red;
  w.r = 2;
  w.s = 1;
  const int yshade = variant == 1 ? 1 : 2;
  const int xshade = variant == 1 ? 2 : 1;
  std::vector<WComponent> comps(static_cast<std::size_t>(pieces));
  for (int v = 0; v < n; ++v) {
    const Cls k = cls[static_cast<std::size_t>(v)];
    if (k == PX || k == PY) {
      auto& comp = comps[static_cast<std::size_t>(owner[static_cast<std::size_t>(v)])];
      comp.kind = WComponent::Kind::Piece;
      comp.shade = yshade;
      comp.x_shade = xshade;
      (k == PX ? comp.X : comp.Y).push_back(v);
    }
  }
  w.components = comps;
  std::sort(w.components.begin(), w.components.end(),
            [](const WComponent& x, const WComponent& y) { return x.vertices().front() < y.vertices().front(); });
  return pi;
}

}  // namespace rdl
