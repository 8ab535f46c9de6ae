#include "schurext/functor.hpp"

#include <cctype>
#include <numeric>

#include "schurext/multiset.hpp"

namespace schurext {

bool FunctorExpr::operator==(const FunctorExpr& o) const {
  if (kind != o.kind || param != o.param || labels != o.labels || kids.size() != o.kids.size()) return false;
  for (std::size_t i = 0; i < kids.size(); ++i)
    if (!(*kids[i] == *o.kids[i])) return false;
  return true;
}

namespace {

FExpr make(FKind k, u32 param = 0, std::vector<FExpr> kids = {}) {
  auto e = std::make_shared<FunctorExpr>();
  e->kind = k;
  e->param = param;
  e->kids = std::move(kids);
  return e;
}

void validate(const FExpr& f);

}  // namespace

namespace fx {
FExpr identity() { return make(FKind::Identity); }
FExpr constant(u32 m) { return make(FKind::Constant, m); }
FExpr gamma(u32 d) { return make(FKind::Gamma, d); }
FExpr sym(u32 d) { return make(FKind::Sym, d); }
FExpr wedge(u32 d) { return make(FKind::Wedge, d); }
FExpr tpow(u32 d) { return make(FKind::TensorPow, d); }
FExpr twist(u32 r) { return make(FKind::Twist, r); }
FExpr compose(FExpr outer, FExpr inner) {
  auto e = make(FKind::Compose, 0, {std::move(outer), std::move(inner)});
  validate(e);
  return e;
}
FExpr tensor(FExpr a, FExpr b) {
  auto e = make(FKind::TensorProd, 0, {std::move(a), std::move(b)});
  validate(e);
  return e;
}
FExpr dsum(FExpr a, FExpr b) {
  auto e = make(FKind::DirectSum, 0, {std::move(a), std::move(b)});
  validate(e);
  return e;
}
FExpr sharp(FExpr a) { return make(FKind::Sharp, 0, {std::move(a)}); }
FExpr gl() { return make(FKind::Gl); }
FExpr box(FExpr a, FExpr b) { return make(FKind::Box, 0, {std::move(a), std::move(b)}); }
FExpr star(char family, FExpr inner) {
  if (family != 'S' && family != 'L' && family != 'G') throw std::invalid_argument("unknown family");
  auto e = make(FKind::Star, static_cast<u32>(family), {std::move(inner)});
  validate(e);
  return e;
}
FExpr graded(std::vector<u32> labels, std::vector<FExpr> parts) {
  if (labels.size() != parts.size() || parts.empty()) throw std::invalid_argument("graded family needs matching labels");
  auto e = std::make_shared<FunctorExpr>();
  e->kind = FKind::Graded;
  e->labels = std::move(labels);
  e->kids = std::move(parts);
  validate(e);
  return e;
}
FExpr sum_pre(FExpr f) {
  auto e = make(FKind::SumPre, 0, {std::move(f)});
  validate(e);
  return e;
}
FExpr diag(FExpr g) {
  auto e = make(FKind::Diag, 0, {std::move(g)});
  validate(e);
  return e;
}
}  // namespace fx

std::size_t arity(const FExpr& f) {
  switch (f->kind) {
    case FKind::Gl: return 2;
    case FKind::Compose: return arity(f->kids[1]);
    case FKind::TensorProd:
    case FKind::DirectSum:
    case FKind::Sharp:
    case FKind::Star:
    case FKind::Graded: return arity(f->kids[0]);
    case FKind::Box: return arity(f->kids[0]) + arity(f->kids[1]);
    case FKind::SumPre: return 2;
    case FKind::Diag: return 1;
    default: return 1;
  }
}

std::vector<bool> variance(const FExpr& f) {
  switch (f->kind) {
    case FKind::Gl: return {true, false};
    case FKind::Compose: return variance(f->kids[1]);
    case FKind::TensorProd:
    case FKind::DirectSum:
    case FKind::Sharp:
    case FKind::Star:
    case FKind::Graded: return variance(f->kids[0]);
    case FKind::Box: {
      auto a = variance(f->kids[0]), b = variance(f->kids[1]);
      a.insert(a.end(), b.begin(), b.end());
      return a;
    }
    case FKind::SumPre: return {false, false};
    default: return {false};
  }
}

namespace {

void validate(const FExpr& f) {
  switch (f->kind) {
    case FKind::Compose:
      if (arity(f->kids[0]) != 1) throw std::invalid_argument("outer functor of a composite must have one variable");
      break;
    case FKind::TensorProd:
    case FKind::DirectSum:
      if (arity(f->kids[0]) != arity(f->kids[1])) throw std::invalid_argument("operands have different numbers of variables");
      break;
    case FKind::Graded:
      for (auto& k : f->kids)
        if (arity(k) != arity(f->kids[0])) throw std::invalid_argument("graded parts have different numbers of variables");
      break;
    case FKind::SumPre:
      if (arity(f->kids[0]) != 1) throw std::invalid_argument("sum() needs a one-variable functor");
      break;
    case FKind::Diag:
      if (arity(f->kids[0]) != 2) throw std::invalid_argument("diag() needs a two-variable functor");
      break;
    default: break;
  }
}

u32 twist_degree(u32 p, u32 r) {
  if (p == 0) throw std::invalid_argument("Frobenius twist needs positive characteristic");
  u32 q = 1;
  for (u32 i = 0; i < r; ++i) q *= p;
  return q;
}

}  // namespace

std::optional<std::vector<u32>> multidegree(const FExpr& f, u32 p) {
  using V = std::vector<u32>;
  switch (f->kind) {
    case FKind::Identity: return V{1};
    case FKind::Constant: return V{0};
    case FKind::Gamma:
    case FKind::Sym:
    case FKind::Wedge:
    case FKind::TensorPow: return V{f->param};
    case FKind::Twist: return V{twist_degree(p, f->param)};
    case FKind::Compose: {
      auto outer = total_degree(f->kids[0], p);
      auto inner = multidegree(f->kids[1], p);
      if (!outer || !inner) return std::nullopt;
      for (auto& x : *inner) x *= *outer;
      return inner;
    }
    case FKind::TensorProd: {
      auto a = multidegree(f->kids[0], p), b = multidegree(f->kids[1], p);
      if (!a || !b) return std::nullopt;
      for (std::size_t i = 0; i < a->size(); ++i) (*a)[i] += (*b)[i];
      return a;
    }
    case FKind::DirectSum: {
      auto a = multidegree(f->kids[0], p), b = multidegree(f->kids[1], p);
      if (!a || !b || *a != *b) return std::nullopt;
      return a;
    }
    case FKind::Sharp: return multidegree(f->kids[0], p);
    case FKind::Gl: return V{1, 1};
    case FKind::Box: {
      auto a = multidegree(f->kids[0], p), b = multidegree(f->kids[1], p);
      if (!a || !b) return std::nullopt;
      a->insert(a->end(), b->begin(), b->end());
      return a;
    }
    case FKind::Diag: {
      auto t = total_degree(f->kids[0], p);
      if (!t) return std::nullopt;
      return V{*t};
    }
    default: return std::nullopt;
  }
}

std::optional<u32> total_degree(const FExpr& f, u32 p) {
  switch (f->kind) {
    case FKind::SumPre: return total_degree(f->kids[0], p);
    case FKind::Compose: {
      auto a = total_degree(f->kids[0], p), b = total_degree(f->kids[1], p);
      if (!a || !b) return std::nullopt;
      return *a * *b;
    }
    case FKind::TensorProd:
    case FKind::Box: {
      auto a = total_degree(f->kids[0], p), b = total_degree(f->kids[1], p);
      if (!a || !b) return std::nullopt;
      return *a + *b;
    }
    case FKind::DirectSum: {
      auto a = total_degree(f->kids[0], p), b = total_degree(f->kids[1], p);
      if (!a || !b || *a != *b) return std::nullopt;
      return a;
    }
    case FKind::Sharp: return total_degree(f->kids[0], p);
    case FKind::Diag: return total_degree(f->kids[0], p);
    default: {
      auto m = multidegree(f, p);
      if (!m) return std::nullopt;
      return std::accumulate(m->begin(), m->end(), 0u);
    }
  }
}

std::size_t eval_dim(const FExpr& f, const std::vector<u32>& dims) {
  if (dims.size() != arity(f)) throw std::invalid_argument("arity mismatch in evaluation");
  u32 n = dims[0];
  switch (f->kind) {
    case FKind::Identity: return n;
    case FKind::Constant: return f->param;
    case FKind::Gamma:
    case FKind::Sym: return binomial(n + f->param - 1, f->param);
    case FKind::Wedge: return binomial(n, f->param);
    case FKind::TensorPow: {
      std::size_t r = 1;
      for (u32 i = 0; i < f->param; ++i) r *= n;
      return r;
    }
    case FKind::Twist: return n;
    case FKind::Compose: return eval_dim(f->kids[0], {static_cast<u32>(eval_dim(f->kids[1], dims))});
    case FKind::TensorProd: return eval_dim(f->kids[0], dims) * eval_dim(f->kids[1], dims);
    case FKind::DirectSum: return eval_dim(f->kids[0], dims) + eval_dim(f->kids[1], dims);
    case FKind::Sharp: return eval_dim(f->kids[0], dims);
    case FKind::Gl: return (std::size_t)dims[0] * dims[1];
    case FKind::Box: {
      std::size_t k = arity(f->kids[0]);
      std::vector<u32> a(dims.begin(), dims.begin() + k), b(dims.begin() + k, dims.end());
      return eval_dim(f->kids[0], a) * eval_dim(f->kids[1], b);
    }
    case FKind::SumPre: return eval_dim(f->kids[0], {dims[0] + dims[1]});
    case FKind::Diag: return eval_dim(f->kids[0], {n, n});
    case FKind::Graded: {
      std::size_t s = 0;
      for (auto& k : f->kids) s += eval_dim(k, dims);
      return s;
    }
    case FKind::Star: throw std::invalid_argument("a graded family has no single evaluation; take components first");
  }
  return 0;
}

namespace {

std::string join_idx(const std::vector<u32>& v) {
  std::string s;
  for (u32 x : v) s += std::to_string(x);
  return s;
}

}  // namespace

std::vector<std::string> basis_labels(const FExpr& f, const std::vector<u32>& dims) {
  std::vector<std::string> out;
  u32 n = dims[0];
  auto sub = [&](std::size_t k, const std::vector<std::string>& inner, const std::string& open,
                 const std::string& close) {
    for (auto& s : inner) out.push_back(open + s + close);
    (void)k;
  };
  switch (f->kind) {
    case FKind::Identity:
    case FKind::Twist:
      for (u32 i = 0; i < n; ++i) out.push_back("e" + std::to_string(i));
      break;
    case FKind::Constant:
      for (u32 i = 0; i < f->param; ++i) out.push_back("c" + std::to_string(i));
      break;
    case FKind::Gamma:
    case FKind::Sym: {
      MultisetIndex idx(n, f->param);
      std::string tag = f->kind == FKind::Gamma ? "g" : "s";
      for (auto& m : idx.all()) out.push_back(tag + join_idx(m));
      break;
    }
    case FKind::Wedge:
      for (auto& s : subsets(n, f->param)) out.push_back("w" + join_idx(s));
      break;
    case FKind::TensorPow: {
      std::size_t total = eval_dim(f, dims);
      for (std::size_t i = 0; i < total; ++i) {
        std::vector<u32> w(f->param);
        std::size_t x = i;
        for (u32 s = f->param; s-- > 0;) w[s] = x % n, x /= n;
        out.push_back("t" + join_idx(w));
      }
      break;
    }
    case FKind::Compose: {
      auto inner = basis_labels(f->kids[1], dims);
      auto outer = basis_labels(f->kids[0], {static_cast<u32>(inner.size())});
      sub(0, outer, "", "");
      break;
    }
    case FKind::TensorProd:
    case FKind::Box: {
      std::vector<u32> a = dims, b = dims;
      if (f->kind == FKind::Box) {
        std::size_t k = arity(f->kids[0]);
        a.assign(dims.begin(), dims.begin() + k);
        b.assign(dims.begin() + k, dims.end());
      }
      auto la = basis_labels(f->kids[0], a), lb = basis_labels(f->kids[1], b);
      for (auto& x : la)
        for (auto& y : lb) out.push_back(x + "|" + y);
      break;
    }
    case FKind::DirectSum: {
      auto la = basis_labels(f->kids[0], dims), lb = basis_labels(f->kids[1], dims);
      sub(0, la, "L:", "");
      sub(0, lb, "R:", "");
      break;
    }
    case FKind::Sharp: sub(0, basis_labels(f->kids[0], dims), "#", ""); break;
    case FKind::Gl:
      for (u32 w = 0; w < dims[1]; ++w)
        for (u32 v = 0; v < dims[0]; ++v) out.push_back("E" + std::to_string(w) + std::to_string(v));
      break;
    case FKind::SumPre: out = basis_labels(f->kids[0], {dims[0] + dims[1]}); break;
    case FKind::Diag: out = basis_labels(f->kids[0], {n, n}); break;
    case FKind::Graded:
      for (std::size_t i = 0; i < f->kids.size(); ++i)
        sub(0, basis_labels(f->kids[i], dims), std::to_string(f->labels[i]) + ":", "");
      break;
    case FKind::Star: throw std::invalid_argument("a graded family has no single evaluation; take components first");
  }
  return out;
}

std::vector<std::pair<u32, FExpr>> family_components(const FExpr& f, u32 max_label) {
  std::vector<std::pair<u32, FExpr>> out;
  if (f->kind == FKind::Star) {
    for (u32 d = 0; d <= max_label; ++d) {
      if (d == 0) {
        out.emplace_back(0, fx::constant(1));
        continue;
      }
      FExpr outer = f->param == 'S' ? fx::sym(d) : f->param == 'L' ? fx::wedge(d) : fx::gamma(d);
      out.emplace_back(d, fx::compose(outer, f->kids[0]));
    }
  } else if (f->kind == FKind::Graded) {
    for (std::size_t i = 0; i < f->kids.size(); ++i)
      if (f->labels[i] <= max_label) out.emplace_back(f->labels[i], f->kids[i]);
  } else {
    throw std::invalid_argument("not a graded family");
  }
  return out;
}

// ---------------- printing ----------------

namespace {

// Precedence levels: 1 direct sum, 2 tensor, 3 box, 4 composition, 5 primary.
bool is_atom(const FExpr& f) {
  switch (f->kind) {
    case FKind::Identity:
    case FKind::Constant:
    case FKind::Gamma:
    case FKind::Sym:
    case FKind::Wedge:
    case FKind::TensorPow:
    case FKind::Twist:
    case FKind::Gl: return true;
    default: return false;
  }
}

int level(const FExpr& f) {
  switch (f->kind) {
    case FKind::DirectSum: return 1;
    case FKind::TensorProd: return 2;
    case FKind::Box: return 3;
    case FKind::Compose: return is_atom(f->kids[0]) ? 5 : 4;
    default: return 5;
  }
}

std::string print_at(const FExpr& f, int min_level) {
  std::string s = print_functor(f);
  return level(f) < min_level ? "(" + s + ")" : s;
}

}  // namespace

std::string print_functor(const FExpr& f) {
  auto num = [&](const char* tag) { return std::string(tag) + std::to_string(f->param); };
  switch (f->kind) {
    case FKind::Identity: return "I";
    case FKind::Constant: return num("K");
    case FKind::Gamma: return num("G");
    case FKind::Sym: return num("S");
    case FKind::Wedge: return num("L");
    case FKind::TensorPow: return num("X");
    case FKind::Twist: return num("T");
    case FKind::Gl: return "gl";
    case FKind::Compose:
      if (is_atom(f->kids[0])) return print_functor(f->kids[0]) + "(" + print_functor(f->kids[1]) + ")";
      return print_at(f->kids[0], 4) + "(.)" + print_at(f->kids[1], 5);
    case FKind::TensorProd: return print_at(f->kids[0], 2) + "*" + print_at(f->kids[1], 3);
    case FKind::DirectSum: return print_at(f->kids[0], 1) + "[+]" + print_at(f->kids[1], 2);
    case FKind::Box: return print_at(f->kids[0], 3) + "[box]" + print_at(f->kids[1], 4);
    case FKind::Sharp: return "#" + print_at(f->kids[0], 5);
    case FKind::Star: return std::string(1, static_cast<char>(f->param)) + "*(" + print_functor(f->kids[0]) + ")";
    case FKind::SumPre: return "sum(" + print_functor(f->kids[0]) + ")";
    case FKind::Diag: return "diag(" + print_functor(f->kids[0]) + ")";
    case FKind::Graded: {
      std::string s = "graded[";
      for (std::size_t i = 0; i < f->kids.size(); ++i)
        s += (i ? "," : "") + std::to_string(f->labels[i]) + ":" + print_functor(f->kids[i]);
      return s + "]";
    }
  }
  return "?";
}

// ---------------- parsing ----------------

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  FExpr parse() {
    FExpr e = sum();
    skip();
    if (i_ != s_.size()) throw ParseError("unexpected '" + std::string(1, s_[i_]) + "'", i_);
    return e;
  }

 private:
  const std::string& s_;
  std::size_t i_ = 0;

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool peek(const char* tok) {
    skip();
    return s_.compare(i_, std::char_traits<char>::length(tok), tok) == 0;
  }
  bool eat(const char* tok) {
    if (!peek(tok)) return false;
    i_ += std::char_traits<char>::length(tok);
    return true;
  }
  void expect(const char* tok) {
    if (!eat(tok)) throw ParseError(std::string("expected '") + tok + "'", i_);
  }
  template <class F>
  FExpr wrap(std::size_t at, F&& build) {
    try {
      return build();
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), at);
    }
  }

  FExpr sum() {
    FExpr a = tens();
    while (true) {
      std::size_t at = i_;
      if (!eat("[+]")) return a;
      FExpr b = tens();
      a = wrap(at, [&] { return fx::dsum(a, b); });
    }
  }
  FExpr tens() {
    FExpr a = boxe();
    while (true) {
      std::size_t at = i_;
      if (!eat("*")) return a;
      FExpr b = boxe();
      a = wrap(at, [&] { return fx::tensor(a, b); });
    }
  }
  FExpr boxe() {
    FExpr a = comp();
    while (eat("[box]")) a = fx::box(a, comp());
    return a;
  }
  FExpr comp() {
    FExpr a = unary();
    while (true) {
      std::size_t at = i_;
      if (!eat("(.)")) return a;
      FExpr b = unary();
      a = wrap(at, [&] { return fx::compose(a, b); });
    }
  }
  FExpr unary() {
    if (eat("#")) return fx::sharp(unary());
    FExpr a = primary();
    while (true) {
      skip();
      std::size_t at = i_;
      if (peek("(.)") || !eat("(")) return a;
      FExpr arg = sum();
      expect(")");
      a = wrap(at, [&] { return fx::compose(a, arg); });
    }
  }
  u32 number() {
    skip();
    std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) throw ParseError("expected a number", start);
    if (i_ - start > 6) throw ParseError("number too large", start);
    return static_cast<u32>(std::stoul(s_.substr(start, i_ - start)));
  }
  FExpr primary() {
    skip();
    std::size_t at = i_;
    if (i_ >= s_.size()) throw ParseError("unexpected end of expression", at);
    if (eat("(")) {
      if (peek(".)")) throw ParseError("missing left operand of composition", at);
      FExpr e = sum();
      expect(")");
      return e;
    }
    if (eat("sum(")) {
      FExpr e = sum();
      expect(")");
      return wrap(at, [&] { return fx::sum_pre(e); });
    }
    if (eat("diag(")) {
      FExpr e = sum();
      expect(")");
      return wrap(at, [&] { return fx::diag(e); });
    }
    if (eat("graded[")) {
      std::vector<u32> labels;
      std::vector<FExpr> parts;
      do {
        labels.push_back(number());
        expect(":");
        parts.push_back(sum());
      } while (eat(","));
      expect("]");
      return wrap(at, [&] { return fx::graded(labels, parts); });
    }
    if (eat("gl")) return fx::gl();
    char c = s_[i_];
    if ((c == 'S' || c == 'L' || c == 'G') && i_ + 1 < s_.size() && s_[i_ + 1] == '*') {
      i_ += 2;
      expect("(");
      FExpr inner = sum();
      expect(")");
      return wrap(at, [&] { return fx::star(c, inner); });
    }
    ++i_;
    switch (c) {
      case 'I': return fx::identity();
      case 'K': return fx::constant(number());
      case 'G': return fx::gamma(number());
      case 'S': return fx::sym(number());
      case 'L': return fx::wedge(number());
      case 'X': return fx::tpow(number());
      case 'T': return fx::twist(number());
      default: throw ParseError("unknown functor symbol '" + std::string(1, c) + "'", at);
    }
  }
};

}  // namespace

FExpr parse_functor(const std::string& text) { return Parser(text).parse(); }

}  // namespace schurext
