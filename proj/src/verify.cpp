#include "schurext/verify.hpp"

#include <chrono>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "schurext/classical.hpp"
#include "schurext/extstruct.hpp"
#include "schurext/gamma.hpp"
#include "schurext/law.hpp"
#include "schurext/multiset.hpp"

namespace schurext {

std::vector<CatalogEntry> classical_catalog() {
  std::vector<CatalogEntry> out;
  for (const char* g : {"Sp", "O"})
    for (const char* f : {"K1", "L2", "S2", "G2", "X2", "T1", "S2(I*K2)", "L2(I*K2)", "X3", "L4", "S4", "G4", "X4",
                          "L2*L2", "S2*S2", "G2*L2", "S2*X2", "G3*I", "L3*I", "S2(L2)", "L2(S2)", "G2(S2)"})
      out.push_back({g, f});
  for (const char* f : {"K1[box]K1", "gl", "X2[box]X2", "S2[box]G2", "L2[box]L2", "G2[box]S2", "gl*gl",
                        "(I*K2)[box](I*K2)", "S2[box]S2", "T1[box]T1", "L2[box]X2", "I[box]X2"})
    out.push_back({"GL", f});
  out.push_back({"GLxSp", "gl[box]L2"});
  out.push_back({"GLxSp", "gl[box]X2"});
  out.push_back({"GLxO", "gl[box]S2"});
  out.push_back({"SpxO", "L2[box]S2"});
  out.push_back({"SpxSp", "L2[box]X2"});
  return out;
}

namespace {

class Recorder {
 public:
  explicit Recorder(SuiteReport& r) : r_(r) {}
  void check(bool ok, const std::string& name, const std::string& detail = {}) {
    (ok ? r_.passed : r_.failed)++;
    r_.checks.push_back({name, ok, detail});
  }

 private:
  SuiteReport& r_;
};

template <class T>
std::string join(const std::vector<T>& v) {
  std::ostringstream s;
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
  return s.str();
}

bool has_o(const std::string& group) { return group.find('O') != std::string::npos; }

bool catalog_applies(const CatalogEntry& e, u32 p) {
  if (p == 2 && has_o(e.group)) return false;
  auto d = total_degree(parse_functor(e.functor), p);
  return d && *d <= 4;
}

void yoneda(Recorder& rec, const Progress& progress) {
  for (u32 p : {2u, 3u, 5u})
    for (u32 d = 1; d <= 3; ++d) {
      if (progress) progress("yoneda p=" + std::to_string(p) + " d=" + std::to_string(d));
      std::vector<std::string> fs;
      std::string ds = std::to_string(d);
      for (const char* fam : {"S", "L", "G", "X"}) fs.push_back(fam + ds);
      for (u32 a = 1; a < d; ++a) fs.push_back("G" + std::to_string(a) + "*S" + std::to_string(d - a));
      if (d == p) {
        fs.push_back("T1");
        fs.push_back("I*T1");
      }
      for (u32 n : {d, d + 1}) {
        auto proj = parse_functor("G" + ds + "(I*K" + std::to_string(n) + ")");
        for (auto& f : fs) {
          auto F = parse_functor(f);
          if (total_degree(F, p) != d) continue;
          std::size_t hom = nat_transformations(proj, F, p).dim();
          std::size_t dim = eval_dim(F, {n});
          rec.check(hom == dim, "hom(P^" + ds + "_k" + std::to_string(n) + ", " + f + ") p=" + std::to_string(p),
                    std::to_string(hom) + " vs " + std::to_string(dim));
        }
      }
    }
}

void key_lemma(Recorder& rec, const Progress& progress) {
  for (u32 p : {2u, 3u, 5u})
    for (u32 d = 1; d <= 3; ++d) {
      if (progress) progress("key-lemma p=" + std::to_string(p) + " d=" + std::to_string(d));
      for (u32 dx = 1; dx <= 2; ++dx)
        for (u32 dz = 1; dz <= 2; ++dz)
          for (u32 dy = d; dy <= d + 1; ++dy) {
            std::size_t r = gamma_compose_rank(dx, dy, dz, d, p);
            std::size_t want = binomial(dx * dz + d - 1, d);
            rec.check(r == want,
                      "surjective d=" + std::to_string(d) + " X=" + std::to_string(dx) + " Y=" + std::to_string(dy) +
                          " Z=" + std::to_string(dz) + " p=" + std::to_string(p),
                      std::to_string(r) + " vs " + std::to_string(want));
          }
    }
  for (u32 p : {2u, 3u, 5u}) {
    std::size_t r = gamma_compose_rank(2, 1, 2, 2, p);
    rec.check(r <= 9, "rank Y < d witness p=" + std::to_string(p), "rank " + std::to_string(r) + " of 10");
  }
}

void twist_ext(Recorder& rec, const Progress& progress) {
  for (auto [p, top, want] : std::vector<std::tuple<u32, u32, std::vector<std::size_t>>>{{2, 2, {1, 0, 1}},
                                                                                          {3, 4, {1, 0, 1, 0, 1}}}) {
    if (progress) progress("twist-ext p=" + std::to_string(p));
    Module t = to_module(parse_functor("T1"), p, p);
    auto got = ext_dims(t, t, top);
    rec.check(got == want, "Ext(T1,T1) p=" + std::to_string(p), join(got));
  }
}

void degree0(Recorder& rec, const Progress& progress) {
  for (u32 p : {2u, 3u, 5u})
    for (const auto& e : classical_catalog()) {
      if (!catalog_applies(e, p)) continue;
      auto g = parse_group(e.group);
      auto f = parse_functor(e.functor);
      for (u32 n = 1; n <= 3; ++n) {
        if (!in_stable_range(g, f, n, p)) continue;
        if (progress) progress("degree0 " + e.group + " " + e.functor + " n=" + std::to_string(n));
        Phi0 ph = phi0(g, f, n, p);
        Matrix inv = invariants(f, g, n, p);
        std::size_t r = rank(ph.images);
        bool inside = rank(Matrix::vstack(inv, ph.images.transpose())) == inv.rows();
        std::string name = e.group + " " + e.functor + " n=" + std::to_string(n) + " p=" + std::to_string(p);
        rec.check(ph.hom.dim() == inv.rows() && r == ph.hom.dim() && inside, name,
                  "hom " + std::to_string(ph.hom.dim()) + " inv " + std::to_string(inv.rows()) + " rank " +
                      std::to_string(r));
      }
    }
}

void contraction_suite(Recorder& rec, const Progress& progress) {
  auto spans = [](const Matrix& a, const Matrix& b) {
    std::size_t r = rank(a);
    return r == rank(b) && r == rank(Matrix::vstack(a, b));
  };
  for (u32 p : {2u, 3u, 5u})
    for (u32 n = 1; n <= 2; ++n) {
      if (progress) progress("contractions p=" + std::to_string(p) + " n=" + std::to_string(n));
      std::string at = " n=" + std::to_string(n) + " p=" + std::to_string(p);
      for (u32 k = 1; k <= 2; ++k)
        for (u32 l = 1; l <= 2; ++l) {
          Matrix c = contractions(GroupKind::GL, k, l, n, p);
          Matrix inv = invariants(contraction_functor(GroupKind::GL, k, l), parse_group("GL"), n, p);
          rec.check(spans(c, inv) && rank(c) == k * l, "GL k=" + std::to_string(k) + " l=" + std::to_string(l) + at,
                    "dim " + std::to_string(inv.rows()));
        }
      for (u32 k = 1; k <= 3; ++k) {
        Matrix c = contractions(GroupKind::Sp, k, 0, n, p);
        Matrix inv = invariants(contraction_functor(GroupKind::Sp, k, 0), parse_group("Sp"), n, p);
        rec.check(spans(c, inv) && rank(c) == binomial(k, 2), "Sp k=" + std::to_string(k) + at,
                  "dim " + std::to_string(inv.rows()));
      }
      for (u32 k = 1; k <= 2 && p > 2; ++k) {
        Matrix c = contractions(GroupKind::O, k, 0, n, p);
        Matrix inv = invariants(contraction_functor(GroupKind::O, k, 0), parse_group("O"), n, p);
        rec.check(spans(c, inv) && rank(c) == binomial(k, 2) + k, "O k=" + std::to_string(k) + at,
                  "dim " + std::to_string(inv.rows()));
      }
    }
}

void stabilization(Recorder& rec, const Progress& progress) {
  for (u32 p : {2u, 3u, 5u})
    for (const auto& e : classical_catalog()) {
      if (!catalog_applies(e, p)) continue;
      auto g = parse_group(e.group);
      auto f = parse_functor(e.functor);
      std::vector<u32> ns;
      for (u32 n = 1; n <= 3; ++n)
        if (in_stable_range(g, f, n, p)) ns.push_back(n);
      if (progress) progress("stabilization " + e.group + " " + e.functor + " p=" + std::to_string(p));
      std::map<u32, std::size_t> dims;
      for (u32 n : ns) dims[n] = invariants(f, g, n, p).rows();
      for (std::size_t a = 0; a < ns.size(); ++a)
        for (std::size_t b = a; b < ns.size(); ++b) {
          Matrix s = stabilization_map(g, f, ns[a], ns[b], p);
          bool ok = dims[ns[a]] == dims[ns[b]] && s.rows() == s.cols() && rank(s) == s.rows();
          rec.check(ok,
                    e.group + " " + e.functor + " (" + std::to_string(ns[a]) + "," + std::to_string(ns[b]) +
                        ") p=" + std::to_string(p),
                    "dims " + std::to_string(dims[ns[a]]) + "," + std::to_string(dims[ns[b]]) + " rank " +
                        std::to_string(rank(s)));
        }
    }
}

bool squares_to_one(const std::vector<Matrix>& ms, u32 p) {
  for (auto& m : ms)
    if (!(m * m == Matrix::identity(m.rows(), p))) return false;
  return true;
}

void involution(Recorder& rec, const Progress& progress) {
  for (u32 p : {2u, 3u})
    for (const char* g : {"X2", "S2", "L2", "G2"}) {
      if (progress) progress(std::string("involution theta ") + g + " p=" + std::to_string(p));
      auto t = theta_involution(1, parse_functor(g), p, 3);
      rec.check(squares_to_one(t.theta, p), std::string("theta^2 = 1 on Ext(G1(X2), ") + g + ") p=" + std::to_string(p),
                join(t.dims));
    }
  {
    auto t = theta_involution(2, parse_functor("X4"), 3, 1);
    rec.check(squares_to_one(t.theta, 3), "theta^2 = 1 on Ext(G2(X2), X4) p=3", join(t.dims));
  }
  for (auto [p, n] : std::vector<std::pair<u32, u32>>{{2, 2}, {3, 3}}) {
    if (progress) progress("involution twist p=" + std::to_string(p));
    auto tt = theta_tilde(to_module(parse_functor("T1"), n, p), 4);
    bool id = true;
    std::vector<std::size_t> dims;
    for (auto& m : tt) {
      id = id && m == Matrix::identity(m.rows(), p);
      dims.push_back(m.rows());
    }
    rec.check(id, "duality is the identity on Ext(T1#, T1) p=" + std::to_string(p), join(dims));
  }
  // diagonal cells of the star families, and pairs of off-diagonal cells
  u32 p = 3;
  for (const char* fam : {"S*(I)", "L*(I)", "G*(I)"})
    for (u32 d = 1; d <= 3; ++d) {
      if (progress) progress(std::string("involution ") + fam + " label " + std::to_string(d));
      auto comps = family_components(parse_functor(fam), d);
      Module m = to_module(comps.back().second, d, p);
      auto tt = theta_tilde(m, 3);
      rec.check(squares_to_one(tt, p), std::string("duality squares to 1 on ") + fam + " label " + std::to_string(d));
    }
  for (auto [a, b] : std::vector<std::pair<const char*, const char*>>{{"S2", "X2"}, {"L2", "G2"}, {"S3", "G2*I"}}) {
    Module ma = to_module(parse_functor(a), 3, p), mb = to_module(parse_functor(b), 3, p);
    auto ab = theta_tilde(ma, mb, 3), ba = theta_tilde(mb, ma, 3);
    bool ok = true;
    for (u32 i = 0; i <= 3; ++i) ok = ok && ba[i] * ab[i] == Matrix::identity(ab[i].cols(), p);
    rec.check(ok, std::string("duality pair ") + a + "/" + b + " composes to 1");
  }
}

std::vector<std::size_t> cell_dims(const HopfTable& t, u32 i, u32 j) {
  std::vector<std::size_t> out(t.max_i + 1, 0);
  for (auto& c : t.cells)
    if (c.i == i && c.j == j) out[c.cohdeg] = c.dim;
  return out;
}

std::set<u32> internal_sums(const HopfTable& t, u32 i, u32 j) {
  std::set<u32> out;
  for (auto& c : t.cells)
    if (c.i == i && c.j == j && c.dim) out.insert(c.deg_i + c.deg_j);
  return out;
}

void calcul_p3(Recorder& rec, const Progress& progress) {
  const std::vector<std::size_t> gens{1, 0, 1, 0, 1}, zero(5, 0);
  if (progress) progress("calcul-p3 S*(T1)");
  auto s = classical_split(parse_functor("S*(T1)"), 3, 4, 1, 4);
  rec.check(cell_dims(s.orth, 1, 1) == gens, "S*(T1): orthogonal cell (1,1)", join(cell_dims(s.orth, 1, 1)));
  rec.check(cell_dims(s.symp, 1, 1) == zero, "S*(T1): symplectic cell (1,1) vanishes", join(cell_dims(s.symp, 1, 1)));
  rec.check(internal_sums(s.orth, 1, 1) == std::set<u32>{4}, "S*(T1): internal degree 4");
  if (progress) progress("calcul-p3 L*(T1)");
  auto l = classical_split(parse_functor("L*(T1)"), 3, 4, 1, 4);
  rec.check(cell_dims(l.symp, 1, 1) == gens, "L*(T1): symplectic cell (1,1)", join(cell_dims(l.symp, 1, 1)));
  rec.check(cell_dims(l.orth, 1, 1) == zero, "L*(T1): orthogonal cell (1,1) vanishes", join(cell_dims(l.orth, 1, 1)));
  rec.check(internal_sums(l.symp, 1, 1) == std::set<u32>{2}, "L*(T1): internal degree 2");
  bool refused = false;
  try {
    classical_split(parse_functor("S*(T1)"), 2, 2, 1, 4);
  } catch (const std::invalid_argument&) {
    refused = true;
  }
  rec.check(refused, "p = 2 is refused");
}

void hopf_section(Recorder& rec, const Progress& progress) {
  struct Case {
    const char *fg, *f1, *f2;
  };
  std::vector<Case> cases{{"L2", "L2", "L2"}, {"L2", "X2", "L2"}, {"L2", "K1", "X2"}, {"L2", "X2*X2", "K1"},
                          {"S2", "S2", "S2"}, {"S2", "X2", "S2"}, {"S2", "S2", "K1"}, {"S2", "X2", "X2"},
                          {"gl", "gl", "gl"}, {"gl", "K1[box]K1", "gl"}, {"gl", "X2[box]X2", "K1[box]K1"}};
  for (u32 p : {3u, 5u})
    for (auto c : cases) {
      std::string name = std::string(c.fg) + ": " + c.f1 + " (x) " + c.f2 + " p=" + std::to_string(p);
      if (progress) progress("hopf-section " + name);
      auto r = cup_coproduct(parse_functor(c.fg), parse_functor(c.f1), parse_functor(c.f2), p);
      bool ok = r.dim_x * r.dim_y > 0 && r.section && r.counit && r.cup_rank == r.dim_x * r.dim_y;
      rec.check(ok, name,
                "dims " + std::to_string(r.dim_x) + "x" + std::to_string(r.dim_y) + " -> " + std::to_string(r.dim_z) +
                    " rank " + std::to_string(r.cup_rank));
    }
  struct Adj {
    const char *f, *g;
    u32 p;
  };
  for (auto a : std::vector<Adj>{{"X2", "I[box]I", 3}, {"S2", "I[box]I", 3}, {"L2", "I[box]I", 3},
                                 {"G2", "I[box]I", 5}, {"X3", "S2[box]I", 3}, {"G3", "L2[box]I", 3}}) {
    if (progress) progress(std::string("hopf-section adjunction ") + a.f);
    auto d = sum_diag_adjunction(parse_functor(a.f), parse_functor(a.g), a.p, 3);
    rec.check(d.two_variable == d.one_variable,
              std::string("sum-diagonal adjunction ") + a.f + " / " + a.g + " p=" + std::to_string(a.p),
              join(d.two_variable));
  }
}

void hopf_axiom(Recorder& rec, const Progress& progress) {
  for (u32 p : {2u, 3u, 5u}) {
    if (progress) progress("hopf-axiom p=" + std::to_string(p));
    std::string at = " p=" + std::to_string(p);
    rec.check(exponential_swap_square('S', true, p, 2, 2, 4).commutes, "S doubled grading commutes" + at);
    rec.check(exponential_swap_square('G', true, p, 2, 2, 4).commutes, "G doubled grading commutes" + at);
    rec.check(exponential_swap_square('L', false, p, 3, 2, 4).commutes, "L natural grading commutes" + at);
    if (p > 2)
      rec.check(!exponential_swap_square('G', false, p, 2, 2, 4).commutes, "G natural grading fails" + at);
  }
}

using SuiteFn = void (*)(Recorder&, const Progress&);

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
  static const std::vector<std::pair<std::string, SuiteFn>> s{
      {"yoneda", yoneda},           {"key-lemma", key_lemma},       {"twist-ext", twist_ext},
      {"degree0", degree0},         {"contractions", contraction_suite}, {"stabilization", stabilization},
      {"involution", involution},   {"calcul-p3", calcul_p3},       {"hopf-section", hopf_section},
      {"hopf-axiom", hopf_axiom}};
  return s;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (auto& [k, f] : suites()) n.push_back(k);
    return n;
  }();
  return names;
}

bool has_suite(const std::string& name) {
  for (auto& n : suite_names())
    if (n == name) return true;
  return false;
}

SuiteReport run_suite(const std::string& name, const Progress& progress) {
  for (auto& [k, f] : suites()) {
    if (k != name) continue;
    SuiteReport r;
    r.suite = name;
    Recorder rec(r);
    auto t0 = std::chrono::steady_clock::now();
    try {
      f(rec, progress);
    } catch (const std::exception& e) {
      rec.check(false, "uncaught exception", e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
  }
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace schurext
