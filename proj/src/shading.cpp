#include <algorithm>
#include <random>

#include "rdl/colorings.hpp"

namespace rdl {

std::string Shade::str() const {
  if (kind == Kind::X) return "X";
  return std::string(1, kind == Kind::R ? 'R' : 'B') + std::to_string(index);
}

VertexSet Shading::members(Shade s) const {
  VertexSet out;
  for (std::size_t v = 0; v < shade.size(); ++v)
    if (shade[v] == s) out.push_back(static_cast<int>(v));
  return out;
}

int Shading::nonempty_shades(Color c) const {
  int k = 0;
  for (int i = 1; i <= a; ++i)
    if (!members(Shade::of(c, i)).empty()) ++k;
  return k;
}

Shading a_good_shading(const TwoColoring& chi, int a, Rational theta, int min_count) {
  if (a < 2) throw Error("a_good_shading: a must be >= 2");
  if (!(theta > 0 && theta < Rational(1, 2))) throw Error("a_good_shading: theta must lie in (0, 1/2)");
  if (min_count < 1) throw Error("a_good_shading: min_count must be >= 1");

  const int n = chi.size();
  Shading sh;
  sh.a = a;
  sh.min_count = min_count;
  sh.theta = theta;
  sh.shade.assign(static_cast<std::size_t>(n), Shade::x());
  std::vector<char> assigned(static_cast<std::size_t>(n), 0);
  int next_index[2] = {1, 1};
  auto cidx = [](Color c) { return c == Color::Red ? 0 : 1; };

  for (;;) {
    std::vector<int> V;
    for (int v = 0; v < n; ++v)
      if (!assigned[static_cast<std::size_t>(v)]) V.push_back(v);
    if (static_cast<int>(V.size()) < min_count) break;  // leftovers stay X

    const auto m = static_cast<std::int64_t>(V.size());
    const Rational frac = theta * m;
    const std::int64_t need = std::max<std::int64_t>(
        min_count, frac.numerator() / frac.denominator() + (frac.numerator() % frac.denominator() != 0));

    // Basic colouring: every vertex takes the colour keeping the larger
    // running common neighbourhood; K counts the steps that stayed above `need`.
    std::vector<char> inP(static_cast<std::size_t>(n), 0);
    for (int v : V) inP[static_cast<std::size_t>(v)] = 1;
    std::int64_t psize = m;
    std::vector<Color> c(static_cast<std::size_t>(n), Color::Red);
    std::size_t K = 0;
    bool within = true;
    std::vector<char> PK;
    for (std::size_t j = 0; j < V.size(); ++j) {
      const int v = V[j];
      std::int64_t cnt[2] = {0, 0};
      for (int w : V)
        if (w != v && inP[static_cast<std::size_t>(w)]) ++cnt[cidx(chi.color(v, w))];
      const Color pick = cnt[1] > cnt[0] ? Color::Blue : Color::Red;
      c[static_cast<std::size_t>(v)] = pick;
      if (inP[static_cast<std::size_t>(v)]) {
        inP[static_cast<std::size_t>(v)] = 0;
        --psize;
      }
      for (int w : V)
        if (w != v && inP[static_cast<std::size_t>(w)] && chi.color(v, w) != pick) {
          inP[static_cast<std::size_t>(w)] = 0;
          --psize;
        }
      if (within && psize >= need) {
        K = j + 1;
        PK = inP;
      } else {
        within = false;
      }
    }
    if (K == 0) {
      for (int v : V) assigned[static_cast<std::size_t>(v)] = 1;  // shade stays X
      break;
    }

    std::int64_t dom[2] = {0, 0};
    for (int v : V)
      if (PK[static_cast<std::size_t>(v)]) ++dom[cidx(c[static_cast<std::size_t>(v)])];
    const Color C = dom[1] > dom[0] ? Color::Blue : Color::Red;
    const int i = next_index[cidx(C)]++;
    ++sh.rounds;
    for (int v : V)
      if (c[static_cast<std::size_t>(v)] == C) {
        sh.shade[static_cast<std::size_t>(v)] = Shade::of(C, i);
        assigned[static_cast<std::size_t>(v)] = 1;
      }
    if (i == a - 1) {
      for (int v : V)
        if (!assigned[static_cast<std::size_t>(v)]) {
          sh.shade[static_cast<std::size_t>(v)] = Shade::of(other(C), a);
          assigned[static_cast<std::size_t>(v)] = 1;
        }
      break;
    }
  }
  return sh;
}

ShadingReport verify_shading(const TwoColoring& chi, const Shading& sh, int sample_size, int subset_cap,
                             std::uint64_t seed) {
  if (static_cast<int>(sh.shade.size()) != chi.size()) throw Error("verify_shading: size mismatch");
  if (subset_cap < 1) throw Error("verify_shading: subset_cap must be >= 1");
  ShadingReport rep;
  std::mt19937_64 rng(seed);

  auto common = [&](const std::vector<int>& S, const VertexSet& target, Color C) {
    int k = 0;
    for (int w : target) {
      if (std::find(S.begin(), S.end(), w) != S.end()) continue;
      bool all = true;
      for (int v : S)
        if (chi.color(v, w) != C) {
          all = false;
          break;
        }
      k += all;
    }
    return k;
  };
  auto run = [&](const VertexSet& source, const VertexSet& target, Color C, const std::string& what) {
    if (source.empty() || target.empty()) return;
    std::vector<std::vector<int>> subsets;
    for (int v : source) subsets.push_back({v});
    const int cap = std::min<int>(subset_cap, static_cast<int>(source.size()));
    if (cap >= 2) {
      std::vector<int> pool = source;
      for (int t = 0; t < sample_size; ++t) {
        std::uniform_int_distribution<int> size_d(2, cap);
        const int k = size_d(rng);
        for (int q = 0; q < k; ++q) {
          std::uniform_int_distribution<std::size_t> pick(static_cast<std::size_t>(q), pool.size() - 1);
          std::swap(pool[static_cast<std::size_t>(q)], pool[pick(rng)]);
        }
        subsets.emplace_back(pool.begin(), pool.begin() + k);
      }
    }
    for (const auto& S : subsets) {
      const int got = common(S, target, C);
      ++rep.checks;
      if (!rep.min_found || got < *rep.min_found) rep.min_found = got;
      if (got < sh.min_count && rep.passed) {
        rep.passed = false;
        rep.failure = what + ": subset of size " + std::to_string(S.size()) + " starting at vertex " +
                      std::to_string(S.front()) + " has " + std::to_string(got) + " common neighbours";
      }
    }
  };

  for (Color C : {Color::Red, Color::Blue}) {
    for (int i = 1; i <= sh.a - 1; ++i) {
      const VertexSet Ci = sh.members(Shade::of(C, i));
      run(Ci, Ci, C, "shade " + Shade::of(C, i).str());
      // Later shades reach the opposite shade of index i through colour C.
      VertexSet src = sh.members(Shade::of(C, sh.a));
      for (int j = i + 1; j <= sh.a - 1; ++j) {
        VertexSet more = sh.members(Shade::of(other(C), j));
        src.insert(src.end(), more.begin(), more.end());
      }
      run(make_vertex_set(src), sh.members(Shade::of(other(C), i)), C,
          "later shades into " + Shade::of(other(C), i).str());
    }
  }
  return rep;
}

}  // namespace rdl
