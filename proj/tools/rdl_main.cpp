// rdl: command-line front end writing reproducible CSV / JSON artifacts.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "rdl/colorings.hpp"
#include "rdl/embedder.hpp"
#include "rdl/flows.hpp"
#include "rdl/graph_families.hpp"
#include "rdl/lipschitz.hpp"

using nlohmann::json;
using namespace rdl;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kVerifyFailed = 2;

struct Global {
  std::uint64_t seed = 1;
  std::string out = "-";
  double tolerance = 1e-9;
};

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

std::string num(const Rational& r) { return num(boost::rational_cast<double>(r)); }

// 9 significant digits for every floating value inside a JSON document.
json round9(const json& j) {
  if (j.is_number_float()) return std::stod(num(j.get<double>()));
  if (j.is_object()) {
    json o = json::object();
    for (auto it = j.begin(); it != j.end(); ++it) o[it.key()] = round9(it.value());
    return o;
  }
  if (j.is_array()) {
    json a = json::array();
    for (const auto& e : j) a.push_back(round9(e));
    return a;
  }
  return j;
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (path != "-") {
      file_.open(path);
      if (!file_) throw Error("cannot open output file " + path);
    }
  }
  std::ostream& os() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

json meta(const std::string& command, const json& config, const Global& g) {
  return {{"command", command}, {"config", config}, {"seed", g.seed}, {"version", RDL_VERSION}};
}

void write_json(const Global& g, const std::string& command, const json& config, json body) {
  body["meta"] = meta(command, config, g);
  Output out(g.out);
  out.os() << round9(body).dump(2) << "\n";
}

void write_csv_header(std::ostream& os, const Global& g, const std::string& command, const json& config) {
  os << "# command: " << command << "\n";
  os << "# config: " << config.dump() << "\n";
  os << "# seed: " << g.seed << "\n";
  os << "# version: " << RDL_VERSION << "\n";
}

FiniteGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open graph file " + path);
  return read_edge_list(in);
}

GraphFamily load_family(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (kind == "omega") return GraphFamily::omega_factor(load_graph(arg));
  if (kind == "forest") return GraphFamily::explicit_forest(load_graph(arg));
  if (kind == "explicit") return GraphFamily::explicit_graph(load_graph(arg));
  return GraphFamily::parse(spec);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

// file path, or modular:a:n, clique:a:n, constant:R|B:n, random:n.
TwoColoring load_coloring(const std::string& spec, std::uint64_t seed) {
  const auto parts = split(spec, ':');
  if (parts.size() == 3 && (parts[0] == "modular" || parts[0] == "clique")) {
    const int a = std::stoi(parts[1]), n = std::stoi(parts[2]);
    return parts[0] == "modular" ? TwoColoring::modular(a, n) : clique_coloring(a, n);
  }
  if (parts.size() == 3 && parts[0] == "constant") return TwoColoring::constant(std::stoi(parts[2]), color_from_char(parts[1].at(0)));
  if (parts.size() == 2 && parts[0] == "random") {
    const int n = std::stoi(parts[1]);
    if (n < 0) throw Error("random colouring needs n >= 0");
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(0.5);
    std::vector<Color> up;
    for (long long k = 0; k < static_cast<long long>(n) * (n - 1) / 2; ++k) up.push_back(coin(rng) ? Color::Red : Color::Blue);
    return TwoColoring::explicit_upper(n, std::move(up));
  }
  std::ifstream in(spec);
  if (!in) throw Error("cannot open colouring " + spec);
  return read_coloring(in);
}

std::vector<Color> parse_vertex_colors(const std::string& s) {
  std::vector<Color> out;
  for (char ch : s) out.push_back(color_from_char(ch));
  return out;
}

// "x:y,x:y,..." breakpoints with tail slope, or g(x) = gamma x. The origin is
// added when the list starts after it.
PLFunction make_g(const std::string& points, double tail, double gamma) {
  if (points.empty()) return PLFunction::linear(gamma);
  std::vector<double> xs, ys;
  for (const auto& p : split(points, ',')) {
    const auto xy = split(p, ':');
    if (xy.size() != 2) throw Error("bad breakpoint '" + p + "', expected x:y");
    xs.push_back(std::stod(xy[0]));
    ys.push_back(std::stod(xy[1]));
  }
  if (xs.front() > 0) {
    xs.insert(xs.begin(), 0.0);
    ys.insert(ys.begin(), 0.0);
  }
  return PLFunction::lipschitz(std::move(xs), std::move(ys), tail);
}

json vertex_set_json(const VertexSet& s) { return json(std::vector<int>(s.begin(), s.end())); }

// ---------------------------------------------------------------------------

int cmd_f_eval(const Global& g, double lambda) {
  const FBounds b = f_closed(lambda);
  json config{{"lambda", lambda}};
  Output out(g.out);
  write_csv_header(out.os(), g, "f-eval", config);
  out.os() << "lambda,lower,upper,exact\n";
  out.os() << num(lambda) << "," << num(b.lower) << "," << num(b.upper) << "," << (b.exact ? num(*b.exact) : "")
           << "\n";
  return kOk;
}

int cmd_fig1(const Global& g) {
  json config{{"x_min", 0}, {"x_max", 3}, {"step", 0.01}};
  Output out(g.out);
  write_csv_header(out.os(), g, "fig1", config);
  out.os() << "x,lower,upper,exact\n";
  for (int i = 0; i <= 300; ++i) {
    const double x = i / 100.0;
    const FBounds b = f_closed(x);
    out.os() << num(x) << "," << num(b.lower) << "," << num(b.upper) << "," << (b.exact ? num(*b.exact) : "")
             << "\n";
  }
  return kOk;
}

int cmd_mu(const Global& g, const std::string& family_spec, int n, int prefix) {
  const GraphFamily fam = load_family(family_spec);
  int size = prefix > 0 ? prefix : fam.closure_size(n);
  std::optional<MuWitness> w;
  std::string last_error;
  for (int attempt = 0; attempt < 6 && !w; ++attempt) {
    if (auto lim = fam.vertex_limit()) size = std::min(size, *lim);
    try {
      w = mu_bruteforce_witness(fam, n, size);
    } catch (const Error& e) {
      last_error = e.what();
      if (prefix > 0 || (fam.vertex_limit() && size == *fam.vertex_limit())) break;
      size = fam.closure_size(size);
    }
  }
  if (!w) throw Error("mu: " + last_error);
  json config{{"family", family_spec}, {"n", n}, {"prefix", size}};
  write_json(g, "mu", config, {{"family", fam.name()}, {"n", n}, {"mu", w->value}, {"prefix", size}, {"witness", vertex_set_json(w->set)}});
  return kOk;
}

int cmd_adversary(const Global& g, int s, int r, int n, const std::string& points, double tail, double gamma) {
  const PLFunction fn = make_g(points, tail, gamma);
  const AdversaryInstance inst = adversary(s, r, fn, n);
  const AdversaryCheck chk = check_adversary(inst, fn);
  std::string colors;
  for (Color c : inst.vertex_colors) colors.push_back(color_char(c));
  json config{{"s", s}, {"r", r}, {"n", n}, {"g_points", points}, {"g_tail", tail}, {"gamma", gamma}};
  json check{{"red_counts", chk.red_counts},       {"alpha_minimal", chk.alpha_minimal},
             {"beta_minimal", chk.beta_minimal},   {"alpha_increasing", chk.alpha_increasing},
             {"beta_increasing", chk.beta_increasing}, {"phi_bijective", chk.phi_bijective},
             {"phi_blocks", chk.phi_blocks},       {"chain_checked", chk.chain_checked},
             {"chain_violations", chk.chain_violations}, {"structural_ok", chk.structural_ok()}};
  write_json(g, "adversary", config,
             {{"vertex_colors", colors}, {"alpha", inst.alpha}, {"beta", inst.beta}, {"phi", inst.phi}, {"blocks", inst.blocks}, {"check", check}});
  return chk.structural_ok() && chk.chain_violations == 0 ? kOk : kVerifyFailed;
}

CapacitatedBipartite load_bipartite(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open fixture " + path);
  long long nx, ny, m;
  CapacitatedBipartite g;
  if (!(in >> nx >> ny >> m >> g.r >> g.s)) throw Error("fixture header must be 'nx ny m r s'");
  if (nx < 0 || ny < 0 || m < 0) throw Error("fixture sizes must be nonnegative");
  for (int x = 0; x < nx; ++x) g.X.push_back(x);
  for (int y = 0; y < ny; ++y) g.Y.push_back(static_cast<int>(nx) + y);
  for (long long k = 0; k < m; ++k) {
    int x, y;
    if (!(in >> x >> y)) throw Error("fixture truncated at edge " + std::to_string(k));
    g.edges.emplace_back(x, static_cast<int>(nx) + y);
  }
  g.validate();
  return g;
}

int cmd_mfmc(const Global& g, const std::string& path) {
  const CapacitatedBipartite bg = load_bipartite(path);
  const FlowCertificate cert = mfmc(bg);
  const std::string why = check_certificate(bg, cert);
  json body = to_json(cert);
  body["valid"] = why.empty();
  if (!why.empty()) body["failure"] = why;
  write_json(g, "mfmc", {{"fixture", path}, {"r", bg.r}, {"s", bg.s}}, body);
  return why.empty() ? kOk : kVerifyFailed;
}

int cmd_findflow(const Global& g, const std::string& coloring, const std::string& vcolors, int r, int s,
                 const std::string& eps) {
  const TwoColoring chi = load_coloring(coloring, g.seed);
  std::vector<Color> vc = parse_vertex_colors(vcolors);
  if (vcolors.empty()) {
    std::mt19937_64 rng(g.seed ^ 0x9e3779b97f4a7c15ULL);
    std::bernoulli_distribution coin(0.5);
    for (int v = 0; v < chi.size(); ++v) vc.push_back(coin(rng) ? Color::Red : Color::Blue);
  }
  FindflowOptions opt;
  opt.epsilon = parse_rational(eps);
  const FindflowResult res = findflow(chi, vc, r, s, opt);
  const std::string why = check_findflow(chi, vc, r, s, res);
  json h = json::array();
  for (const auto& e : res.h) h.push_back({e.u, e.v, e.f});
  std::string vcs;
  for (Color c : vc) vcs.push_back(color_char(c));
  json body{{"t", res.t},
            {"color", std::string(1, color_char(res.color))},
            {"D", res.D},
            {"value", to_string(res.value)},
            {"value_decimal", boost::rational_cast<double>(res.value)},
            {"degenerate", res.degenerate},
            {"eta", res.eta},
            {"n_threshold", res.n_threshold},
            {"h", h},
            {"valid", why.empty()}};
  if (!why.empty()) body["failure"] = why;
  write_json(g, "findflow", {{"coloring", coloring}, {"vertex_colors", vcs}, {"r", r}, {"s", s}, {"epsilon", eps}}, body);
  return why.empty() ? kOk : kVerifyFailed;
}

int cmd_shade(const Global& g, const std::string& coloring, int a, const std::string& theta, int min_count,
              int samples, int cap) {
  const TwoColoring chi = load_coloring(coloring, g.seed);
  const Shading sh = a_good_shading(chi, a, parse_rational(theta), min_count);
  const ShadingReport rep = verify_shading(chi, sh, samples, cap, g.seed);
  json shades = json::array();
  for (const auto& s : sh.shade) shades.push_back(s.str());
  json body{{"a", sh.a}, {"rounds", sh.rounds}, {"shades", shades}, {"passed", rep.passed}, {"checks", rep.checks}};
  body["min_common"] = rep.min_found ? json(*rep.min_found) : json(nullptr);
  if (!rep.passed) body["failure"] = rep.failure;
  write_json(g, "shade",
             {{"coloring", coloring}, {"a", a}, {"theta", theta}, {"min_count", min_count}, {"samples", samples}, {"cap", cap}},
             body);
  return rep.passed ? kOk : kVerifyFailed;
}

int cmd_embed(const Global& g, int variant, int pieces, int spare, int budget) {
  const PlantedInstance pi = make_planted(variant, pieces, spare, g.seed);
  const EmbeddingState st = embed(pi.chi, pi.shading, pi.w, pi.spec, budget);
  const EmbedReport rep = verify_embedding(st, pi.chi, pi.shading, pi.spec, pi.w);
  json body = to_json(st);
  body["incomplete"] = st.incomplete;
  if (st.incomplete) body["incomplete_reason"] = st.incomplete_reason;
  body["stats"] = {{"steps", st.stats.steps},
                   {"pieces_placed", st.stats.pieces_placed},
                   {"host_vertices_used", st.image().size()},
                   {"max_tset", st.stats.max_tset}};
  body["report"] = {{"passed", rep.passed()},
                    {"image_density", to_string(rep.image_density)},
                    {"w_density", to_string(pi.w.density(pi.chi.size()))}};
  if (!rep.passed()) body["report"]["failure"] = rep.failure;
  write_json(g, "embed", {{"variant", variant}, {"pieces", pieces}, {"spare", spare}, {"budget", budget}}, body);
  return rep.passed() ? kOk : kVerifyFailed;
}

int cmd_treecut(const Global& g, const std::string& forest_path, const std::string& indep, const std::string& lambda,
                const std::string& lambda_prime, const std::string& delta) {
  const FiniteGraph f = load_graph(forest_path);
  std::vector<int> I;
  for (const auto& t : split(indep, ',')) I.push_back(std::stoi(t));
  std::optional<Rational> d;
  if (!delta.empty()) d = parse_rational(delta);
  const TreecutResult res = treecut(f, make_vertex_set(I), parse_rational(lambda), parse_rational(lambda_prime), d);
  const VertexSet N = neighborhood(f, res.subset);
  json body{{"subset", vertex_set_json(res.subset)},
            {"neighbourhood", vertex_set_json(N)},
            {"delta", to_string(res.delta)},
            {"bound_size", to_string(res.bound_size)},
            {"delta_condition_holds", res.delta_condition_holds}};
  write_json(g, "treecut",
             {{"forest", forest_path}, {"independent", indep}, {"lambda", lambda}, {"lambda_prime", lambda_prime}, {"delta", delta}},
             body);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ramsey upper density toolkit"};
  app.require_subcommand(1);
  Global g;
  app.add_option("--seed", g.seed, "random seed (RDL_SEED overrides)");
  app.add_option("--out", g.out, "output file, '-' for stdout");
  app.add_option("--tolerance", g.tolerance, "numeric tolerance");
  app.set_version_flag("--version", RDL_VERSION);

  double lambda = 1.0;
  auto* f_eval = app.add_subcommand("f-eval", "bounds on f(lambda)");
  f_eval->add_option("--lambda", lambda)->required();

  auto* fig1 = app.add_subcommand("fig1", "CSV of the bounds on f over [0, 3]");

  std::string family;
  int n = 0, prefix = 0;
  auto* mu = app.add_subcommand("mu", "independent-set expansion by exhaustive search");
  mu->add_option("--family", family, "pathpower:k | karytree:k | grid:d | omega:FILE | forest:FILE | explicit:FILE")->required();
  mu->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  mu->add_option("--prefix", prefix, "prefix size; grown automatically when omitted");

  int s = 1, r = 1;
  std::string points;
  double tail = 0.0, gamma = 0.0;
  auto* adv = app.add_subcommand("adversary", "left-to-right adversarial colouring");
  adv->add_option("--s", s)->check(CLI::PositiveNumber);
  adv->add_option("--r", r)->check(CLI::PositiveNumber);
  adv->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
  adv->add_option("--g-points", points, "breakpoints x:y,x:y,...");
  adv->add_option("--g-tail", tail, "slope after the last breakpoint");
  adv->add_option("--gamma", gamma, "g(x) = gamma x when no breakpoints are given");

  std::string fixture;
  auto* mf = app.add_subcommand("mfmc", "max flow and weighted vertex cover");
  mf->add_option("fixture", fixture, "'nx ny m r s' then m lines 'x y'")->required();

  std::string coloring, vcolors, eps = "1/10";
  auto* ff = app.add_subcommand("findflow", "coloured flow finder");
  ff->add_option("--coloring", coloring, "file, modular:a:n, clique:a:n, constant:R:n or random:n")->required();
  ff->add_option("--vertex-colors", vcolors, "R/B string; random from the seed when omitted");
  ff->add_option("--r", r)->check(CLI::PositiveNumber);
  ff->add_option("--s", s)->check(CLI::PositiveNumber);
  ff->add_option("--epsilon", eps);

  int a = 2, min_count = 1, samples = 200, cap = 4;
  std::string theta = "1/4";
  auto* sh = app.add_subcommand("shade", "finite a-good shading");
  sh->add_option("--coloring", coloring)->required();
  sh->add_option("--a", a);
  sh->add_option("--theta", theta);
  sh->add_option("--min-count", min_count);
  sh->add_option("--samples", samples);
  sh->add_option("--cap", cap);

  int variant = 1, pieces = 3, spare = 2, budget = 100000;
  auto* em = app.add_subcommand("embed", "embedding run on a planted instance");
  em->add_option("--variant", variant)->check(CLI::Range(1, 2));
  em->add_option("--pieces", pieces)->check(CLI::NonNegativeNumber);
  em->add_option("--spare", spare)->check(CLI::NonNegativeNumber);
  em->add_option("--budget", budget)->check(CLI::NonNegativeNumber);

  std::string forest, indep, lam = "1", lamp = "2", delta;
  auto* tc = app.add_subcommand("treecut", "bounded expanding subset of an independent set in a forest");
  tc->add_option("--forest", forest, "edge-list file")->required();
  tc->add_option("--independent", indep, "comma-separated vertices")->required();
  tc->add_option("--lambda", lam);
  tc->add_option("--lambda-prime", lamp);
  tc->add_option("--delta", delta);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  if (const char* env = std::getenv("RDL_SEED")) {
    try {
      g.seed = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "RDL_SEED must be a nonnegative integer\n";
      return kUsage;
    }
  }

  try {
    if (*f_eval) return cmd_f_eval(g, lambda);
    if (*fig1) return cmd_fig1(g);
    if (*mu) return cmd_mu(g, family, n, prefix);
    if (*adv) return cmd_adversary(g, s, r, n, points, tail, gamma);
    if (*mf) return cmd_mfmc(g, fixture);
    if (*ff) return cmd_findflow(g, coloring, vcolors, r, s, eps);
    if (*sh) return cmd_shade(g, coloring, a, theta, min_count, samples, cap);
    if (*em) return cmd_embed(g, variant, pieces, spare, budget);
    if (*tc) return cmd_treecut(g, forest, indep, lam, lamp, delta);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  std::cerr << app.help();
  return kUsage;
}
