#pragma once

// alcove-cells command line: cell, alcove, verify, atlas, certificate.
// run_cli is the whole program minus process plumbing so tests can drive it
// in-process.

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "alcove_cells.hpp"

namespace alcove_cells::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

inline constexpr const char* kBfsBoundEnv = "ALCOVE_CELLS_BFS_BOUND";

/// Raised for bad command lines; maps to exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct RunConfig {
  int n = 0;
  std::int64_t p = 0;
  std::string weight;
  std::string shifted;
  std::optional<std::int64_t> box;
  std::int64_t index_bound = 3;
  std::optional<std::size_t> bfs_bound;
  std::string format = "human";
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::string suite;
};

namespace detail {

inline std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto stop = text.find(',', start);
    out.push_back(text.substr(start, stop == std::string::npos ? std::string::npos : stop - start));
    if (stop == std::string::npos) break;
    start = stop + 1;
  }
  return out;
}

inline std::int64_t parse_int_entry(const std::string& tok, std::size_t pos, const char* flag) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(tok, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (tok.empty() || used != tok.size()) {
    throw UsageError(std::string(flag) + ": entry " + std::to_string(pos) + " '" + tok + "' is not an integer");
  }
  return v;
}

inline void check_arity(std::size_t got, int n, const char* flag) {
  if (got != static_cast<std::size_t>(n)) {
    throw UsageError(std::string(flag) + ": expected " + std::to_string(n) + " entries, got " + std::to_string(got));
  }
}

/// The input point and its JSON echo.
struct Input {
  ShiftedPoint point;
  Json echo;
};

inline Input read_point(const RunConfig& c) {
  if (c.weight.empty() == c.shifted.empty()) throw UsageError("give exactly one of --weight or --shifted");
  Input in;
  if (!c.weight.empty()) {
    const auto toks = split_commas(c.weight);
    check_arity(toks.size(), c.n, "--weight");
    std::vector<std::int64_t> w;
    for (std::size_t k = 0; k < toks.size(); ++k) w.push_back(parse_int_entry(toks[k], k + 1, "--weight"));
    in.point = ShiftedPoint::from_weight(w);
    in.echo = {{"weight", w}};
  } else {
    const auto toks = split_commas(c.shifted);
    check_arity(toks.size(), c.n, "--shifted");
    std::vector<Rational> x;
    Json echo = Json::array();
    for (std::size_t k = 0; k < toks.size(); ++k) {
      try {
        x.push_back(parse_rational(toks[k]));
      } catch (const ParseError& e) {
        throw UsageError("--shifted: entry " + std::to_string(k + 1) + ": " + e.what());
      }
      echo.push_back(to_string(x.back()));
    }
    in.point = ShiftedPoint(std::move(x));
    in.echo = {{"shifted", echo}};
  }
  return in;
}

inline std::size_t bfs_bound(const RunConfig& c) {
  if (c.bfs_bound) return *c.bfs_bound;
  if (const char* env = std::getenv(kBfsBoundEnv); env && *env) {
    const std::string s(env);
    if (s.find_first_not_of("0123456789") != std::string::npos) {
      throw UsageError(std::string(kBfsBoundEnv) + " must be a positive integer, got '" + s + "'");
    }
    return static_cast<std::size_t>(std::stoull(s));
  }
  return kDefaultBfsBound;
}

inline Json root_json(const RootA& r) { return Json::array({r.i, r.j}); }

inline Json roots_json(std::span<const RootA> roots) {
  Json out = Json::array();
  for (const auto& r : roots) out.push_back(root_json(r));
  return out;
}

inline Json rationals_json(const ShiftedPoint& pt) {
  Json out = Json::array();
  for (const auto& x : pt.coords()) out.push_back(to_string(x));
  return out;
}

inline Json ints_json(const ShiftedPoint& pt) {
  Json out = Json::array();
  for (const auto& x : pt.coords()) out.push_back(to_int(x));
  return out;
}

inline std::string roots_header(int n) {
  std::string s;
  for (const auto& r : positive_roots(n)) s += (s.empty() ? "" : " ") + to_string(r);
  return s;
}

inline std::string index_row(std::span<const std::int64_t> v) {
  std::string s;
  for (auto x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

inline std::string semicolons(const ShiftedPoint& pt) {
  std::string s;
  for (const auto& x : pt.coords()) s += (s.empty() ? "" : ";") + to_string(x);
  return s;
}

inline std::string basis_text(std::span<const RootA> roots) { return roots.empty() ? "{}" : to_string(roots); }


// ---- cell ----

inline int cmd_cell(const RunConfig& c, std::ostream& out) {
  const auto in = read_point(c);
  const auto& pt = in.point;
  const auto pred = tilting_support(pt, c.p);
  const auto g = gamma(pt, c.p);

  // good bases whose partition is maximal among all good bases in Gamma
  std::vector<GoodBasis> bases = enumerate_good_bases(g);
  std::vector<Partition> parts;
  for (const auto& b : bases) parts.push_back(partition_of_basis(b.roots(), c.n));
  std::vector<RootSet> attaining;
  for (std::size_t k = 0; k < bases.size(); ++k) {
    bool maximal = true;
    for (std::size_t l = 0; l < bases.size() && maximal; ++l)
      if (parts[l] != parts[k] && dominance_leq(parts[k], parts[l])) maximal = false;
    if (maximal) attaining.push_back(bases[k].roots());
  }
  const auto cell = pred.orbit.partition;
  const char* backing = pred.theorem_backed ? "theorem" : "conjecture";

  if (c.format == "json") {
    Json goods = Json::array();
    for (const auto& b : attaining) goods.push_back(roots_json(b));
    Json doc = {{"n", c.n},           {"p", c.p},           {"input", in.echo},
                {"gamma", roots_json(g)}, {"good_bases", goods}, {"s", pred.partition.parts()},
                {"cell", cell.parts()}, {"orbit_dim", pred.orbit.dim}, {"backing", backing}};
    out << doc.dump(2) << "\n";
  } else if (c.format == "csv") {
    out << "n,p,shifted,s,cell,orbit_dim,backing\n";
    out << c.n << "," << c.p << "," << semicolons(pt) << "," << to_string(pred.partition) << "," << to_string(cell)
        << "," << pred.orbit.dim << "," << backing << "\n";
  } else {
    out << "lambda + rho    " << to_string(pt) << "   (n = " << c.n << ", p = " << c.p << ")\n";
    out << "Gamma           " << basis_text(g) << "\n";
    out << "good bases      ";
    for (std::size_t k = 0; k < attaining.size(); ++k) out << (k ? "  " : "") << basis_text(attaining[k]);
    out << "\n";
    out << "s(lambda)       " << to_string(pred.partition) << "\n";
    out << "cell            " << to_string(cell) << "\n";
    out << "orbit dim       " << pred.orbit.dim << "\n";
    out << "backing         " << backing << "-backed";
    if (pred.warning) out << "   (" << *pred.warning << ")";
    out << "\n";
  }
  return kExitOk;
}

// ---- alcove ----

inline int cmd_alcove(const RunConfig& c, std::ostream& out) {
  const auto in = read_point(c);
  const auto& pt = in.point;
  const auto a = alcove_of(pt, c.p);
  const auto f = facette_of(pt, c.p);
  const auto walls = upper_walls(a);
  const auto stab = stabilizer_subroot_system(pt, c.p);
  const auto d = d_partition(pt, c.p);

  if (c.format == "json") {
    Json face = Json::array();
    const auto roots = positive_roots(c.n);
    for (std::size_t k = 0; k < roots.size(); ++k) {
      face.push_back({{"root", root_json(roots[k])}, {"wall", f.data()[k].wall}, {"index", f.data()[k].index}});
    }
    Json up = Json::array();
    for (const auto& w : walls) up.push_back({{"root", root_json(w.root)}, {"index", w.index}});
    Json doc = {{"n", c.n},
                {"p", c.p},
                {"input", in.echo},
                {"point", rationals_json(pt)},
                {"alcove", a.indices()},
                {"facette", face},
                {"walls", roots_json(f.wall_roots())},
                {"upper_walls", up},
                {"stabilizer_system", roots_json(stab)},
                {"d", d.parts()}};
    out << doc.dump(2) << "\n";
  } else if (c.format == "csv") {
    out << "root,alcove_index,on_wall,facette_index\n";
    const auto roots = positive_roots(c.n);
    for (std::size_t k = 0; k < roots.size(); ++k) {
      out << roots[k].i << "-" << roots[k].j << "," << a.indices()[k] << "," << (f.data()[k].wall ? 1 : 0) << ","
          << f.data()[k].index << "\n";
    }
  } else {
    out << "lambda + rho    " << to_string(pt) << "   (n = " << c.n << ", p = " << c.p << ")\n";
    out << "roots           " << roots_header(c.n) << "\n";
    out << "alcove          " << index_row(a.indices()) << "\n";
    out << "walls           ";
    const auto wr = f.wall_roots();
    if (wr.empty()) out << "none";
    for (std::size_t k = 0; k < wr.size(); ++k) out << (k ? " " : "") << to_string(wr[k]) << "=" << f.at(wr[k]).index;
    out << "\n";
    out << "upper walls     ";
    if (walls.empty()) out << "none";
    for (std::size_t k = 0; k < walls.size(); ++k) out << (k ? " " : "") << to_string(walls[k].root) << "=" << walls[k].index;
    out << "\n";
    out << "stabilizer      " << basis_text(stab) << "\n";
    out << "d(lambda)       " << to_string(d) << "\n";
  }
  return kExitOk;
}

// ---- verify ----

inline int cmd_verify(const RunConfig& c, std::ostream& out) {
  SweepConfig s;
  s.n = c.n;
  s.p = c.p;
  s.box = c.box.value_or(0);
  s.index_bound = c.index_bound;
  s.bfs_bound = bfs_bound(c);
  s.samples = c.samples;
  s.seed = c.seed;
  const auto r = run_sweep(c.suite, s);
  if (c.format == "json") {
    Json doc = {{"suite", r.suite},
                {"n", c.n},
                {"p", c.p},
                {"cases", r.cases},
                {"failures", r.failures},
                {"first_failure", r.first_failure ? Json(*r.first_failure) : Json(nullptr)},
                {"notes", r.notes},
                {"passed", r.passed()}};
    out << doc.dump(2) << "\n";
  } else if (c.format == "csv") {
    out << "suite,n,p,cases,failures,passed\n";
    out << r.suite << "," << c.n << "," << c.p << "," << r.cases << "," << r.failures << "," << (r.passed() ? 1 : 0) << "\n";
  } else {
    out << r.suite << ": " << (r.passed() ? "PASS" : "FAIL") << ", " << r.cases << " cases, " << r.failures
        << " failures\n";
    if (r.first_failure) out << "first failure: " << *r.first_failure << "\n";
    for (const auto& note : r.notes) out << "note: " << note << "\n";
  }
  return r.passed() ? kExitOk : kExitFailed;
}

// ---- atlas ----

inline int cmd_atlas(const RunConfig& c, std::ostream& out) {
  check_rank(c.n);
  const std::int64_t box = c.box.value_or(2 * c.p);
  struct Entry {
    Partition cell;
    std::vector<std::vector<std::int64_t>> weights;
  };
  std::vector<Entry> entries;
  for (const auto& cell : partitions_of(c.n + 1)) {
    Entry e{cell, {}};
    for (const auto& pt : enumerate_cell(cell, c.p, box)) {
      std::vector<std::int64_t> w;
      for (const auto& x : pt.coords()) w.push_back(to_int(x) - 1);
      e.weights.push_back(std::move(w));
    }
    entries.push_back(std::move(e));
  }
  auto key = [](const Partition& a) {
    std::string s;
    for (int x : a.parts()) s += (s.empty() ? "" : ",") + std::to_string(x);
    return s;
  };
  if (c.format == "json") {
    Json cells = Json::object();
    for (const auto& e : entries) {
      cells[key(e.cell)] = {{"partition", e.cell.parts()},
                            {"count", e.weights.size()},
                            {"orbit_dim", orbit_label(e.cell).dim},
                            {"weights", e.weights}};
    }
    Json doc = {{"n", c.n}, {"p", c.p}, {"box", box}, {"cells", cells}};
    out << doc.dump(2) << "\n";
  } else if (c.format == "csv") {
    out << "weight,cell,orbit_dim\n";
    for (const auto& e : entries) {
      for (const auto& w : e.weights) {
        std::string ws;
        for (auto x : w) ws += (ws.empty() ? "" : ";") + std::to_string(x);
        out << ws << "," << to_string(e.cell) << "," << orbit_label(e.cell).dim << "\n";
      }
    }
  } else {
    out << "weights lambda in [0, " << box - 1 << "]^" << c.n << "   (p = " << c.p << ")\n";
    for (const auto& e : entries) {
      out << "cell " << to_string(e.cell) << "   orbit dim " << orbit_label(e.cell).dim << "   " << e.weights.size()
          << " weights\n";
      for (const auto& w : e.weights) {
        out << "  (";
        for (std::size_t k = 0; k < w.size(); ++k) out << (k ? "," : "") << w[k];
        out << ")\n";
      }
    }
  }
  return kExitOk;
}

// ---- certificate ----

inline int cmd_certificate(const RunConfig& c, std::ostream& out) {
  const auto in = read_point(c);
  const auto cert = upper_bound_certificate(in.point, c.p);
  if (c.format == "json") {
    Json legs = Json::array();
    for (const auto& l : cert.legs) {
      legs.push_back({{"basis", roots_json(l.basis.roots())},
                      {"pi", l.basis_partition.parts()},
                      {"mu", rationals_json(l.mu)},
                      {"mu_prime", ints_json(l.lattice_point)},
                      {"d", l.d.parts()},
                      {"mu_alcove", l.mu_alcove.indices()}});
    }
    Json doc = {{"n", c.n},
                {"p", c.p},
                {"input", in.echo},
                {"alcove", cert.alcove.indices()},
                {"legs", legs},
                {"s", cert.s.parts()},
                {"orbit", cert.orbit.partition.parts()},
                {"orbit_dim", cert.orbit.dim}};
    out << doc.dump(2) << "\n";
  } else if (c.format == "csv") {
    out << "basis,pi,mu,mu_prime,d,mu_alcove\n";
    for (const auto& l : cert.legs) {
      std::string roots;
      for (const auto& r : l.basis.roots()) roots += (roots.empty() ? "" : ";") + std::to_string(r.i) + "-" + std::to_string(r.j);
      out << roots << "," << to_string(l.basis_partition) << "," << semicolons(l.mu) << "," << semicolons(l.lattice_point)
          << "," << to_string(l.d) << "," << index_row(l.mu_alcove.indices()) << "\n";
    }
  } else {
    out << "lambda + rho    " << to_string(cert.point) << "   (n = " << c.n << ", p = " << c.p << ")\n";
    out << "roots           " << roots_header(c.n) << "\n";
    out << "C(lambda)       " << index_row(cert.alcove.indices()) << "\n";
    for (const auto& l : cert.legs) {
      out << "basis " << basis_text(l.basis.roots()) << "   pi " << to_string(l.basis_partition) << "\n";
      out << "  mu            " << to_string(l.mu) << "\n";
      out << "  C(mu)         " << index_row(l.mu_alcove.indices()) << "\n";
      out << "  mu'           " << to_string(l.lattice_point) << "\n";
      out << "  d(mu')        " << to_string(l.d) << "\n";
    }
    out << "s(lambda)       " << to_string(cert.s) << "\n";
    out << "orbit           " << to_string(cert.orbit.partition) << "   dim " << cert.orbit.dim << "\n";
  }
  return kExitOk;
}

inline void validate(const RunConfig& c) {
  if (c.n < 1) throw UsageError("--n must be >= 1");
  if (c.p < 1) throw UsageError("--p must be >= 1");
  if (c.box && *c.box < 1) throw UsageError("--box must be >= 1");
  if (c.index_bound < 1) throw UsageError("--index-bound must be >= 1");
}

}  // namespace detail

/// Runs one command line (without the program name). Never throws.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weight cells, alcoves and support-variety predictions for SL_{n+1}", "alcove-cells"};
  app.require_subcommand(1);
  RunConfig c;

  auto common = [&](CLI::App* sub, bool point) {
    sub->add_option("--n", c.n, "rank n of A_n")->required();
    sub->add_option("--p", c.p, "characteristic p")->required();
    if (point) {
      sub->add_option("--weight", c.weight, "lambda in fundamental coordinates, e.g. 5,5");
      sub->add_option("--shifted", c.shifted, "lambda + rho with rational entries, e.g. 9/2,1/2");
    }
    sub->add_option("--box", c.box, "coordinate bound");
    sub->add_option("--index-bound", c.index_bound, "largest alcove index in weak-order sweeps");
    sub->add_option("--bfs-bound", c.bfs_bound, "cap on visited states in searches");
    sub->add_option("--format", c.format, "output format")->check(CLI::IsMember({"human", "json", "csv"}));
    sub->add_option("--seed", c.seed, "seed for sampled sweeps");
    sub->add_option("--samples", c.samples, "sample count (0 = exhaustive)");
  };

  auto* cell = app.add_subcommand("cell", "weight cell and predicted tilting support");
  common(cell, true);
  auto* alcove = app.add_subcommand("alcove", "alcove, facette, walls and stabilizer of a point");
  common(alcove, true);
  auto* verify = app.add_subcommand("verify", "run a property sweep");
  common(verify, false);
  verify->add_option("suite", c.suite, "lclosure | weak-order | good-sup | reduction | mu | lattice | all")
      ->required()
      ->check(CLI::IsMember(sweep_suites()));
  auto* atlas = app.add_subcommand("atlas", "all weight cells inside a box");
  common(atlas, false);
  auto* certificate = app.add_subcommand("certificate", "upper-bound certificate for a weight");
  common(certificate, true);

  std::vector<std::string> storage{"alcove-cells"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, er;
    const int code = app.exit(e, o, er);
    out << o.str();
    err << er.str();
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    detail::validate(c);
    if (*cell) return detail::cmd_cell(c, out);
    if (*alcove) return detail::cmd_alcove(c, out);
    if (*verify) return detail::cmd_verify(c, out);
    if (*atlas) return detail::cmd_atlas(c, out);
    if (*certificate) return detail::cmd_certificate(c, out);
  } catch (const InvariantViolation& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailed;
  }
  return kExitUsage;
}

}  // namespace alcove_cells::cli
