#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "schurext/classical.hpp"
#include "schurext/extstruct.hpp"
#include "schurext/verify.hpp"

using namespace schurext;
using json = nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  u32 p = 2;
  u32 n = 0;
  u32 max_i = 4;
  u32 resolution_length = 6;
  u32 max_label = 2;
  u32 max_degree = 4;
  std::string source, target, coeff, functor, group, side = "raw", format = "json", out, suite;
  bool quiet = false;
};

constexpr u32 kMaxFunctorDegree = 5;

void note(const Config& c, const std::string& msg) {
  if (!c.quiet) std::cerr << "schurext: " << msg << "\n";
}

FExpr parse_arg(const std::string& what, const std::string& text) {
  if (text.empty()) throw UsageError("--" + what + " is required");
  try {
    return parse_functor(text);
  } catch (const ParseError& e) {
    throw UsageError("cannot parse --" + what + " '" + text + "': " + e.what());
  }
}

u32 slot_degree(const FExpr& f, u32 p, const std::string& what) {
  auto md = multidegree(f, p);
  if (!md) throw UsageError("--" + what + " is not homogeneous in each variable");
  u32 d = 0;
  for (u32 x : *md) d = std::max(d, x);
  auto tot = total_degree(f, p);
  if (tot && *tot > kMaxFunctorDegree)
    throw UsageError("--" + what + " has degree " + std::to_string(*tot) + "; degrees above " +
                     std::to_string(kMaxFunctorDegree) + " need Schur algebras too large for this tool");
  return d;
}

std::string csv_line(std::initializer_list<std::string> xs) {
  std::string s;
  for (auto& x : xs) s += (s.empty() ? "" : ",") + x;
  return s + "\n";
}

std::string quote(const std::string& s) { return "\"" + s + "\""; }

// ---------------- ext ----------------

json cmd_ext(const Config& c, std::string& csv) {
  auto src = parse_arg("source", c.source), tgt = parse_arg("target", c.target);
  u32 ds = slot_degree(src, c.p, "source"), dt = slot_degree(tgt, c.p, "target");
  if (arity(src) != arity(tgt)) throw UsageError("--source and --target have different numbers of variables");
  if (c.max_i + 1 > c.resolution_length)
    throw UsageError("--max-i " + std::to_string(c.max_i) + " needs --resolution-length at least " +
                     std::to_string(c.max_i + 1));
  u32 n = c.n ? c.n : std::max({ds, dt, 1u});
  if (n < std::max(ds, dt)) throw UsageError("--n must be at least the degree of each variable");

  std::vector<std::size_t> dims(c.max_i + 1, 0);
  if (multidegree(src, c.p) == multidegree(tgt, c.p)) {
    note(c, "building modules over the Schur algebra");
    Module ms = to_module(src, n, c.p), mt = to_module(tgt, n, c.p);
    note(c, "resolving " + print_functor(src) + " through degree " + std::to_string(c.resolution_length));
    Resolution r = resolve(ms, c.resolution_length);
    dims = ext(r, mt, c.max_i).dims;
  } else {
    note(c, "degrees differ; Ext vanishes");
  }
  json j;
  j["schema"] = 1;
  j["kind"] = "ext";
  j["p"] = c.p;
  j["source"] = print_functor(src);
  j["target"] = print_functor(tgt);
  j["n"] = n;
  j["max_i"] = c.max_i;
  j["dims"] = dims;
  csv = "cohdeg,dim\n";
  for (std::size_t i = 0; i < dims.size(); ++i) csv += csv_line({std::to_string(i), std::to_string(dims[i])});
  return j;
}

// ---------------- group-cohomology ----------------

json table_json(const HopfTable& t) {
  json j;
  j["kind"] = t.kind;
  j["cells"] = json::array();
  for (auto& c : t.cells) {
    if (!c.dim) continue;
    j["cells"].push_back({{"cohdeg", c.cohdeg},
                          {"i", c.i},
                          {"j", c.j},
                          {"internal", {c.deg_i, c.deg_j}},
                          {"total_internal", c.deg_i + c.deg_j},
                          {"dim", c.dim}});
  }
  j["skipped"] = json::array();
  for (auto& s : t.skipped) j["skipped"].push_back({{"i", s.i}, {"j", s.j}, {"functor_degree", s.functor_degree}});
  return j;
}

json cmd_group_cohomology(const Config& c, std::string& csv) {
  auto fam = parse_arg("coeff", c.coeff);
  if (c.side != "raw" && c.p == 2)
    throw UsageError("the orthogonal/symplectic split needs 2 to be invertible; use -p odd or --side raw");
  std::vector<HopfTable> tables;
  note(c, "computing Ext cells of " + print_functor(fam));
  if (c.side == "raw") {
    tables.push_back(star_pipeline(fam, c.p, c.max_i, c.max_label, c.max_degree));
  } else {
    auto split = classical_split(fam, c.p, c.max_i, c.max_label, c.max_degree);
    tables.push_back(c.side == "orth" ? split.orth : split.symp);
  }
  json j;
  j["schema"] = 1;
  j["kind"] = "group-cohomology";
  j["p"] = c.p;
  j["coeff"] = print_functor(fam);
  j["side"] = c.side;
  j["max_i"] = c.max_i;
  j["max_label"] = c.max_label;
  j["max_degree"] = c.max_degree;
  if (c.side == "raw")
    j["identification"] = "cells are Ext^*(E^i#, E^j); no group side";
  else
    j["identification"] = std::string("stable H^*(") + (c.side == "orth" ? "O" : "Sp") +
                          ", E) = Ext^*(Gamma^*(" + (c.side == "orth" ? "S2" : "L2") +
                          "), E), read off the " + (c.side == "orth" ? "+1" : "-1") +
                          " eigenspace of the signed duality on Ext^*(E^i#, E^j)";
  json t = table_json(tables[0]);
  j["cells"] = t["cells"];
  j["skipped"] = t["skipped"];
  csv = "cohdeg,i,j,deg_i,deg_j,dim\n";
  for (auto& cell : tables[0].cells)
    if (cell.dim)
      csv += csv_line({std::to_string(cell.cohdeg), std::to_string(cell.i), std::to_string(cell.j),
                       std::to_string(cell.deg_i), std::to_string(cell.deg_j), std::to_string(cell.dim)});
  return j;
}

// ---------------- invariants ----------------

// Splits a box product into one factor per group factor, when the slots line up.
std::optional<std::vector<FExpr>> box_factors(const FExpr& f, const GroupSpec& g) {
  std::vector<FExpr> leaves;
  std::function<void(const FExpr&)> walk = [&](const FExpr& e) {
    if (e->kind == FKind::Box) {
      for (auto& k : e->kids) walk(k);
    } else {
      leaves.push_back(e);
    }
  };
  walk(f);
  std::vector<FExpr> out;
  std::size_t at = 0;
  for (auto kind : g.factors) {
    FExpr part;
    std::size_t need = slot_count(kind), have = 0;
    while (have < need && at < leaves.size()) {
      have += arity(leaves[at]);
      part = part ? fx::box(part, leaves[at]) : leaves[at];
      ++at;
    }
    if (have != need) return std::nullopt;
    out.push_back(part);
  }
  return out;
}

json cmd_invariants(const Config& c, std::string& csv) {
  if (c.group.empty()) throw UsageError("--group is required");
  GroupSpec g;
  try {
    g = parse_group(c.group);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  auto f = parse_arg("functor", c.functor);
  if (arity(f) != slot_count(g))
    throw UsageError("--functor has " + std::to_string(arity(f)) + " variables but " + group_name(g) + " needs " +
                     std::to_string(slot_count(g)));
  slot_degree(f, c.p, "functor");
  if (c.n == 0) throw UsageError("--n is required");
  note(c, "computing invariants and the comparison map");
  Matrix inv = invariants(f, g, c.n, c.p);
  Phi0 ph = phi0(g, f, c.n, c.p);
  std::size_t r = rank(ph.images);
  bool stable = in_stable_range(g, f, c.n, c.p);

  json j;
  j["schema"] = 1;
  j["kind"] = "invariants";
  j["p"] = c.p;
  j["group"] = group_name(g);
  j["functor"] = print_functor(f);
  j["n"] = c.n;
  j["hom_dim"] = ph.hom.dim();
  j["invariant_dim"] = inv.rows();
  j["phi0_rank"] = r;
  j["equal"] = ph.hom.dim() == inv.rows() && r == inv.rows();
  j["stable_range"] = stable;
  if (!stable) j["flag"] = "outside stable range";
  if (g.factors.size() > 1) {
    if (auto parts = box_factors(f, g)) {
      json fd = json::array();
      std::size_t prod = 1;
      for (std::size_t k = 0; k < parts->size(); ++k) {
        std::size_t d = invariants((*parts)[k], GroupSpec{{g.factors[k]}}, c.n, c.p).rows();
        prod *= d;
        fd.push_back({{"group", kind_name(g.factors[k])}, {"functor", print_functor((*parts)[k])}, {"dim", d}});
      }
      j["factors"] = fd;
      j["factor_product"] = prod;
    }
  }
  if (total_degree(f, c.p) == 2u) {
    auto labels = basis_labels(f, evaluation_dims(g, c.n));
    json gens = json::array();
    for (std::size_t k = 0; k < inv.rows(); ++k) {
      json terms = json::array();
      for (std::size_t b = 0; b < inv.cols(); ++b)
        if (inv.at(k, b)) terms.push_back({{"coeff", inv.at(k, b)}, {"basis", labels[b]}});
      gens.push_back(terms);
    }
    j["generators"] = gens;
  }
  csv = "group,functor,n,hom_dim,invariant_dim,phi0_rank,equal,stable_range\n";
  csv += csv_line({group_name(g), quote(print_functor(f)), std::to_string(c.n), std::to_string(ph.hom.dim()),
                   std::to_string(inv.rows()), std::to_string(r), j["equal"].get<bool>() ? "true" : "false",
                   stable ? "true" : "false"});
  return j;
}

// ---------------- verify ----------------

json cmd_verify(const Config& c, std::string& csv, bool& all_ok) {
  std::vector<std::string> names;
  if (c.suite == "all")
    names = suite_names();
  else if (has_suite(c.suite))
    names = {c.suite};
  else {
    std::string known;
    for (auto& n : suite_names()) known += " " + n;
    throw UsageError("unknown suite '" + c.suite + "' (known:" + known + ", all)");
  }
  json j;
  j["schema"] = 1;
  j["kind"] = "verify";
  j["suites"] = json::array();
  csv = "suite,passed,failed,ok\n";
  all_ok = true;
  for (auto& name : names) {
    note(c, "running suite " + name);
    auto rep = run_suite(name, [&](const std::string& m) { note(c, "  " + m); });
    note(c, name + ": " + std::to_string(rep.passed) + " passed, " + std::to_string(rep.failed) + " failed in " +
                std::to_string(rep.seconds) + "s");
    json s;
    s["name"] = name;
    s["passed"] = rep.passed;
    s["failed"] = rep.failed;
    s["ok"] = rep.ok();
    s["failures"] = json::array();
    for (auto& ch : rep.checks)
      if (!ch.ok) s["failures"].push_back({{"check", ch.name}, {"detail", ch.detail}});
    j["suites"].push_back(s);
    all_ok = all_ok && rep.ok();
    csv += csv_line({name, std::to_string(rep.passed), std::to_string(rep.failed), rep.ok() ? "true" : "false"});
  }
  j["ok"] = all_ok;
  return j;
}

void emit(const Config& c, const json& j, const std::string& csv) {
  std::string text = c.format == "csv" ? csv : j.dump(2) + "\n";
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + c.out);
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  Config c;
  CLI::App app{"Ext groups of strict polynomial functors and invariants of classical groups"};
  app.require_subcommand(1);
  app.add_flag("-q,--quiet", c.quiet, "No progress messages on stderr");

  auto common = [&](CLI::App* s) {
    s->add_option("-p", c.p, "Prime characteristic")->required()->check([](const std::string& v) {
      try {
        return is_prime(static_cast<u32>(std::stoul(v))) ? std::string() : v + " is not prime";
      } catch (...) {
        return v + " is not a number";
      }
    });
    s->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    s->add_option("--out", c.out, "Write output to this file");
  };

  auto* ext_cmd = app.add_subcommand("ext", "Ext^i_P(source, target)");
  common(ext_cmd);
  ext_cmd->add_option("--source", c.source, "Source functor")->required();
  ext_cmd->add_option("--target", c.target, "Target functor")->required();
  ext_cmd->add_option("--max-i", c.max_i, "Highest cohomological degree")->check(CLI::Range(0u, 12u));
  ext_cmd->add_option("--resolution-length", c.resolution_length, "Number of resolution terms to compute")
      ->check(CLI::Range(1u, 14u));
  ext_cmd->add_option("--n", c.n, "Dimension of the evaluation space (default: the degree)");

  auto* gc_cmd = app.add_subcommand("group-cohomology", "Stable classical group cohomology from a functor family");
  common(gc_cmd);
  gc_cmd->add_option("--coeff", c.coeff, "Graded family such as S*(T1)")->required();
  gc_cmd->add_option("--side", c.side, "orth, symp or raw")->check(CLI::IsMember({"orth", "symp", "raw"}));
  gc_cmd->add_option("--max-i", c.max_i, "Highest cohomological degree")->check(CLI::Range(0u, 8u));
  gc_cmd->add_option("--max-label", c.max_label, "Highest component label")->check(CLI::Range(0u, 6u));
  gc_cmd->add_option("--max-degree", c.max_degree, "Skip cells of higher functor degree")->check(CLI::Range(0u, 5u));

  auto* inv_cmd = app.add_subcommand("invariants", "Invariants of a classical group against Hom from Gamma");
  common(inv_cmd);
  inv_cmd->add_option("--group", c.group, "GL, Sp, O or a product such as GLxSp")->required();
  inv_cmd->add_option("--functor", c.functor, "Functor adapted to the group")->required();
  inv_cmd->add_option("--n", c.n, "Rank n of the group")->required()->check(CLI::Range(1u, 4u));

  auto* ver_cmd = app.add_subcommand("verify", "Run a verification suite");
  ver_cmd->add_option("suite", c.suite, "Suite name or 'all'")->required();
  ver_cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  ver_cmd->add_option("--out", c.out, "Write output to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    std::string csv;
    json j;
    int code = 0;
    if (*ext_cmd) {
      j = cmd_ext(c, csv);
    } else if (*gc_cmd) {
      j = cmd_group_cohomology(c, csv);
    } else if (*inv_cmd) {
      j = cmd_invariants(c, csv);
    } else {
      bool ok = false;
      j = cmd_verify(c, csv, ok);
      code = ok ? 0 : 1;
    }
    emit(c, j, csv);
    return code;
  } catch (const UsageError& e) {
    std::cerr << "schurext: error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "schurext: error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "schurext: failed: " << e.what() << "\n";
    return 1;
  }
}
