#include "rdl/colorings.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>

namespace rdl {

char color_char(Color c) { return c == Color::Red ? 'R' : 'B'; }

Color color_from_char(char ch) {
  if (ch == 'R') return Color::Red;
  if (ch == 'B') return Color::Blue;
  throw Error(std::string("colour must be R or B, got '") + ch + "'");
}

namespace {

std::size_t upper_index(int n, int u, int v) {
  // row u, column v > u
  const auto uu = static_cast<std::size_t>(u), nn = static_cast<std::size_t>(n);
  return uu * nn - uu * (uu + 1) / 2 + static_cast<std::size_t>(v - u - 1);
}

}  // namespace

TwoColoring TwoColoring::leftmost(std::vector<Color> vertex_colors) {
  const int n = static_cast<int>(vertex_colors.size());
  return TwoColoring(n, LeftmostEndpoint{std::move(vertex_colors)});
}

TwoColoring TwoColoring::modular(int a, int n) {
  if (a < 2) throw Error("modular colouring needs a >= 2");
  if (n < 0) throw Error("colouring size must be nonnegative");
  return TwoColoring(n, Modular{a});
}

TwoColoring TwoColoring::explicit_upper(int n, std::vector<Color> upper) {
  if (n < 0) throw Error("colouring size must be nonnegative");
  const auto want = static_cast<std::size_t>(n) * static_cast<std::size_t>(std::max(n - 1, 0)) / 2;
  if (upper.size() != want)
    throw Error("explicit colouring needs " + std::to_string(want) + " entries, got " + std::to_string(upper.size()));
  return TwoColoring(n, ExplicitColoring{std::move(upper)});
}

TwoColoring TwoColoring::constant(int n, Color c) {
  const auto m = static_cast<std::size_t>(n) * static_cast<std::size_t>(std::max(n - 1, 0)) / 2;
  return explicit_upper(n, std::vector<Color>(m, c));
}

Color TwoColoring::color(int u, int v) const {
  if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_)
    throw Error("no edge (" + std::to_string(u) + "," + std::to_string(v) + ") in colouring of size " +
                std::to_string(n_));
  if (u > v) std::swap(u, v);
  if (auto* l = std::get_if<LeftmostEndpoint>(&rule_)) return l->vertex_colors[static_cast<std::size_t>(u)];
  if (auto* m = std::get_if<Modular>(&rule_)) return (v - u) % (m->a - 1) == 0 ? Color::Red : Color::Blue;
  return std::get<ExplicitColoring>(rule_).upper[upper_index(n_, u, v)];
}

TwoColoring TwoColoring::to_explicit() const {
  std::vector<Color> up;
  up.reserve(static_cast<std::size_t>(n_) * static_cast<std::size_t>(std::max(n_ - 1, 0)) / 2);
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v) up.push_back(color(u, v));
  return explicit_upper(n_, std::move(up));
}

TwoColoring TwoColoring::with_edge(int u, int v, Color c) const {
  TwoColoring e = to_explicit();
  if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_) throw Error("with_edge: edge out of range");
  if (u > v) std::swap(u, v);
  std::get<ExplicitColoring>(e.rule_).upper[upper_index(n_, u, v)] = c;
  return e;
}

bool operator==(const TwoColoring& a, const TwoColoring& b) {
  if (a.n_ != b.n_) return false;
  if (a.rule_.index() != b.rule_.index()) {
    for (int u = 0; u < a.n_; ++u)
      for (int v = u + 1; v < a.n_; ++v)
        if (a.color(u, v) != b.color(u, v)) return false;
    return true;
  }
  if (auto* l = std::get_if<LeftmostEndpoint>(&a.rule_))
    return l->vertex_colors == std::get<LeftmostEndpoint>(b.rule_).vertex_colors;
  if (auto* m = std::get_if<Modular>(&a.rule_)) return m->a == std::get<Modular>(b.rule_).a;
  return std::get<ExplicitColoring>(a.rule_).upper == std::get<ExplicitColoring>(b.rule_).upper;
}

void write_coloring(std::ostream& out, const TwoColoring& chi) {
  out << chi.size() << ' ';
  if (auto* l = std::get_if<LeftmostEndpoint>(&chi.rule())) {
    out << "leftmost\n";
    for (Color c : l->vertex_colors) out << color_char(c);
  } else if (auto* m = std::get_if<Modular>(&chi.rule())) {
    out << "modular:" << m->a;
  } else {
    out << "explicit\n";
    for (Color c : std::get<ExplicitColoring>(chi.rule()).upper) out << color_char(c);
  }
  out << '\n';
}

TwoColoring read_coloring(std::istream& in) {
  int n = -1;
  std::string rule;
  if (!(in >> n >> rule) || n < 0) throw Error("colouring: bad header, expected \"n rule\"");
  auto read_payload = [&](std::size_t len) {
    std::vector<Color> out;
    out.reserve(len);
    std::string tok;
    if (len > 0 && !(in >> tok)) throw Error("colouring: missing RB payload");
    if (tok.size() != len)
      throw Error("colouring: payload has " + std::to_string(tok.size()) + " characters, expected " +
                  std::to_string(len));
    for (char ch : tok) out.push_back(color_from_char(ch));
    return out;
  };
  if (rule == "leftmost") return TwoColoring::leftmost(read_payload(static_cast<std::size_t>(n)));
  if (rule.rfind("modular:", 0) == 0) {
    int a = 0;
    try {
      a = std::stoi(rule.substr(8));
    } catch (const std::exception&) {
      throw Error("colouring: bad modular parameter in '" + rule + "'");
    }
    return TwoColoring::modular(a, n);
  }
  if (rule == "explicit") {
    const auto len = static_cast<std::size_t>(n) * static_cast<std::size_t>(std::max(n - 1, 0)) / 2;
    return TwoColoring::explicit_upper(n, read_payload(len));
  }
  throw Error("colouring: unknown rule '" + rule + "'");
}

TwoColoring clique_coloring(int a, int n) { return TwoColoring::modular(a, n); }

// ---------------------------------------------------------------------------
// Adversary

GammaParam AdversaryInstance::gamma() const {
  return GammaParam::from_lambda(static_cast<double>(s) / static_cast<double>(r));
}

int adversary_red_count(const PLFunction& g, int m) {
  if (m <= 0) return 0;
  const double v = (m + g(static_cast<double>(m))) / 2.0;
  return static_cast<int>(std::floor(v + 1e-9));
}

AdversaryInstance adversary(int s, int r, const PLFunction& g, int n) {
  if (s < 1 || r < 1) throw Error("adversary: s and r must be positive");
  if (n < 4) throw Error("adversary: n must be >= 4");
  if (!g.is_lipschitz()) throw Error("adversary: g is not 1-Lipschitz");
  if (g(0.0) != 0.0) throw Error("adversary: g(0) must be 0");

  AdversaryInstance inst;
  inst.s = s;
  inst.r = r;
  inst.n = n;
  int prev = 0;
  for (int m = 1; m <= n; ++m) {
    const int cur = adversary_red_count(g, m);
    const int inc = cur - prev;
    if (inc != 0 && inc != 1)
      throw Error("adversary: red count jumps by " + std::to_string(inc) + " at m=" + std::to_string(m));
    inst.vertex_colors.push_back(inc == 1 ? Color::Red : Color::Blue);
    (inc == 1 ? inst.red_positions : inst.blue_positions).push_back(m);
    prev = cur;
  }

  const auto& R = inst.red_positions;
  const auto& B = inst.blue_positions;
  // Others to the left of the k-th (1-based) vertex of a colour at position p: p - k.
  auto feasible = [&](const std::vector<int>& pos, int k, int i) {
    const long long left = pos[static_cast<std::size_t>(k - 1)] - k;
    return static_cast<long long>(r) * left <= static_cast<long long>(s) * (k - i);
  };
  for (int i = 1, k = 1;; ++i) {
    k = std::max(k, i);
    while (k <= static_cast<int>(R.size()) && !feasible(R, k, i)) ++k;
    if (k > static_cast<int>(R.size())) break;
    inst.alpha.push_back(k);
  }
  for (int i = 1, k = 1;; ++i) {
    k = std::max(k, i);
    while (k <= static_cast<int>(B.size()) && !feasible(B, k, i)) ++k;
    if (k > static_cast<int>(B.size())) break;
    inst.beta.push_back(k);
  }
  const auto common = std::min(inst.alpha.size(), inst.beta.size());
  while (static_cast<std::size_t>(inst.blocks) < common &&
         inst.alpha[static_cast<std::size_t>(inst.blocks)] + inst.beta[static_cast<std::size_t>(inst.blocks)] <= n)
    ++inst.blocks;

  // phi: each block [alpha_j + beta_j] receives r_1..r_alpha_j and b_1..b_beta_j.
  std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
  int pa = 0, pb = 0;
  auto take_block = [&](int upto_a, int upto_b) {
    std::vector<int> block;
    for (; pa < upto_a; ++pa) block.push_back(R[static_cast<std::size_t>(pa)]);
    for (; pb < upto_b; ++pb) block.push_back(B[static_cast<std::size_t>(pb)]);
    std::sort(block.begin(), block.end());
    for (int v : block) {
      inst.phi.push_back(v);
      used[static_cast<std::size_t>(v)] = 1;
    }
  };
  for (int j = 0; j < inst.blocks; ++j) take_block(inst.alpha[static_cast<std::size_t>(j)], inst.beta[static_cast<std::size_t>(j)]);
  for (int v = 1; v <= n; ++v)
    if (!used[static_cast<std::size_t>(v)]) inst.phi.push_back(v);
  return inst;
}

AdversaryCheck check_adversary(const AdversaryInstance& inst, const PLFunction& g, int chain_from) {
  AdversaryCheck ck;
  const int n = inst.n;
  int red = 0;
  for (int m = 1; m <= n; ++m) {
    if (inst.vertex_colors[static_cast<std::size_t>(m - 1)] == Color::Red) ++red;
    // exact rule re-derived independently from the stored colours
    const double v = (m + g(static_cast<double>(m))) / 2.0;
    if (red != static_cast<int>(std::floor(v + 1e-9))) ck.red_counts = false;
  }

  const double lambda = static_cast<double>(inst.s) / inst.r;
  // others[c][k-1]: vertices of the other colour left of the k-th vertex of colour c,
  // rebuilt from the colour sequence rather than the stored positions.
  std::vector<int> others[2];
  {
    int cnt_c[2] = {0, 0};
    for (int p = 1; p <= n; ++p) {
      const int c = inst.vertex_colors[static_cast<std::size_t>(p - 1)] == Color::Red ? 0 : 1;
      others[c].push_back(cnt_c[1 - c]);
      ++cnt_c[c];
    }
  }
  auto ok = [&](Color c, int k, int i) {
    const auto& o = others[c == Color::Red ? 0 : 1];
    if (k < 1 || k > static_cast<int>(o.size())) return false;
    return static_cast<long long>(inst.r) * o[static_cast<std::size_t>(k - 1)] <=
           static_cast<long long>(inst.s) * (k - i);
  };
  auto scan = [&](Color c, const std::vector<int>& arr, bool& minimal, bool& increasing) {
    const int total = static_cast<int>(others[c == Color::Red ? 0 : 1].size());
    for (std::size_t j = 0; j <= arr.size(); ++j) {
      const int i = static_cast<int>(j) + 1;
      if (j == arr.size()) {
        // the list must stop only where no index works
        for (int k = 1; k <= total && minimal; ++k)
          if (ok(c, k, i)) minimal = false;
        break;
      }
      const int v = arr[j];
      if (!ok(c, v, i)) minimal = false;
      for (int k = 1; k < v && minimal; ++k)
        if (ok(c, k, i)) minimal = false;
      if (j > 0 && arr[j] <= arr[j - 1]) increasing = false;
    }
  };
  scan(Color::Red, inst.alpha, ck.alpha_minimal, ck.alpha_increasing);
  scan(Color::Blue, inst.beta, ck.beta_minimal, ck.beta_increasing);

  std::size_t blocks = 0;
  while (blocks < std::min(inst.alpha.size(), inst.beta.size()) && inst.alpha[blocks] + inst.beta[blocks] <= n) ++blocks;
  if (static_cast<int>(blocks) != inst.blocks) ck.phi_blocks = false;

  std::vector<int> sorted = inst.phi;
  std::sort(sorted.begin(), sorted.end());
  for (int k = 0; k < n; ++k)
    if (static_cast<int>(sorted.size()) != n || sorted[static_cast<std::size_t>(k)] != k + 1) ck.phi_bijective = false;
  if (ck.phi_bijective && ck.phi_blocks) {
    for (std::size_t j = 0; j < blocks; ++j) {
      const int len = inst.alpha[j] + inst.beta[j];
      std::vector<int> got(inst.phi.begin(), inst.phi.begin() + len);
      std::vector<int> want(inst.red_positions.begin(), inst.red_positions.begin() + inst.alpha[j]);
      want.insert(want.end(), inst.blue_positions.begin(), inst.blue_positions.begin() + inst.beta[j]);
      std::sort(got.begin(), got.end());
      std::sort(want.begin(), want.end());
      if (got != want) ck.phi_blocks = false;
    }
  }

  const GammaParam p = GammaParam::from_lambda(lambda);
  const double gm = p.gamma();
  const std::size_t longest = std::max(inst.alpha.size(), inst.beta.size());
  for (std::size_t j = 0; j < longest; ++j) {
    const int i = static_cast<int>(j) + 1;
    const double w = 2.0 / (1.0 + lambda) * (lambda * i + 2.0 * lambda + 2.0);
    bool bad = false;
    if (j < inst.alpha.size()) {
      const double zp = gamma_crossing(g, p, w, Sign::Plus).value();
      bad |= inst.alpha[j] > (1.0 - gm) * zp / 2.0 + w / 2.0 + 1e-9;
    }
    if (j < inst.beta.size()) {
      const double zm = gamma_crossing(g, p, w, Sign::Minus).value();
      bad |= inst.beta[j] > (1.0 - gm) * zm / 2.0 + w / 2.0 + 2.0 + 1e-9;
    }
    if (i >= chain_from) {
      ++ck.chain_checked;
      if (bad) ++ck.chain_violations;
    } else if (bad) {
      ++ck.chain_violations_early;
    }
  }
  return ck;
}

// ---------------------------------------------------------------------------

DensityReport density(const VertexSet& s, int n, const std::vector<int>& checkpoints) {
  VertexSet ss = make_vertex_set(s);
  DensityReport rep;
  for (int m : checkpoints) {
    if (m < 1 || m > n) throw Error("density: checkpoint " + std::to_string(m) + " outside [1, n]");
    auto c = std::lower_bound(ss.begin(), ss.end(), m) - ss.begin();
    Rational q(static_cast<std::int64_t>(c), m);
    rep.checkpoints.emplace_back(m, q);
    rep.max_ratio = std::max(rep.max_ratio, q);
  }
  return rep;
}

Rational prefix_density(const VertexSet& image) {
  VertexSet s = make_vertex_set(image);
  Rational best(0);
  for (std::size_t j = 0; j < s.size(); ++j)
    best = std::max(best, Rational(static_cast<std::int64_t>(j + 1), s[j] + 1));
  return best;
}

EmbeddingDensity max_embedding_density_bruteforce(const TwoColoring& chi, const GraphFamily& family, int h_size,
                                                  Color c) {
  const int n = chi.size();
  if (n > 14) throw Error("bruteforce embedding limited to colourings on at most 14 vertices");
  if (h_size < 1 || h_size > n) throw Error("bruteforce embedding: need 1 <= h_size <= n");
  const FiniteGraph h = family.prefix(h_size);
  EmbeddingDensity best;
  best.color = c;
  std::vector<int> map(static_cast<std::size_t>(h_size), -1);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  bool done = false;
  auto rec = [&](auto&& self, int k) -> void {
    if (done) return;
    if (k == h_size) {
      Rational d = prefix_density(VertexSet(map.begin(), map.end()));
      if (!best.found || d > best.value) {
        best.value = d;
        best.found = true;
        best.map = map;
        if (d == Rational(1)) done = true;
      }
      return;
    }
    for (int x = 0; x < n && !done; ++x) {
      if (used[static_cast<std::size_t>(x)]) continue;
      bool okc = true;
      for (int w : h.neighbors(k))
        if (w < k && chi.color(map[static_cast<std::size_t>(w)], x) != c) {
          okc = false;
          break;
        }
      if (!okc) continue;
      used[static_cast<std::size_t>(x)] = 1;
      map[static_cast<std::size_t>(k)] = x;
      self(self, k + 1);
      used[static_cast<std::size_t>(x)] = 0;
    }
    map[static_cast<std::size_t>(k)] = -1;
  };
  rec(rec, 0);
  return best;
}

EmbeddingDensity max_embedding_density_bruteforce(const TwoColoring& chi, const GraphFamily& family, int h_size) {
  EmbeddingDensity red = max_embedding_density_bruteforce(chi, family, h_size, Color::Red);
  EmbeddingDensity blue = max_embedding_density_bruteforce(chi, family, h_size, Color::Blue);
  return (blue.found && (!red.found || blue.value > red.value)) ? blue : red;
}

}  // namespace rdl
