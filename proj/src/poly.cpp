#include "incgeo/poly.hpp"

#include <algorithm>
#include <cctype>

namespace incgeo {

void MultiPoly::add_term(const Exponents& e, Elt c) {
  if (e.size() != n_) throw Error("monomial arity mismatch");
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(e, c);
  if (!fresh) {
    it->second = f_->add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

void MultiPoly::add_quadratic(std::size_t i, std::size_t j, Elt c) {
  Exponents e(n_, 0);
  ++e[i];
  ++e[j];
  add_term(e, c);
}

Elt MultiPoly::eval(std::span<const Elt> x) const {
  if (x.size() != n_) throw Error("point arity mismatch");
  const Field& F = *f_;
  Elt s = 0;
  for (const auto& [e, c] : terms_) {
    Elt t = c;
    for (std::size_t i = 0; i < n_ && t; ++i)
      if (e[i]) t = F.mul(t, F.pow(x[i], e[i]));
    s = F.add(s, t);
  }
  return s;
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  auto deg = [](const Exponents& e) {
    std::uint32_t d = 0;
    for (auto x : e) d += x;
    return d;
  };
  std::uint32_t d0 = deg(terms_.begin()->first);
  return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) { return deg(t.first) == d0; });
}

std::uint32_t MultiPoly::degree() const {
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) {
    std::uint32_t s = 0;
    for (auto x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

std::string coefficient_prefix(const Field& F, Elt c) {
  if (c == 1) return "";
  if (c == F.minus_one()) return "-";
  return F.format(c) + "*";
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<std::vector<std::uint32_t>, const std::pair<const Exponents, Elt>*>> order;
  for (const auto& t : terms_) {
    std::vector<std::uint32_t> vars;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::uint32_t k = 0; k < t.first[i]; ++k) vars.push_back(static_cast<std::uint32_t>(i));
    order.emplace_back(std::move(vars), &t);
  }
  std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::string out;
  bool first = true;
  for (const auto& [vars, t] : order) {
    const Exponents& e = t->first;
    Elt c = t->second;
    std::string mono;
    for (std::size_t i = 0; i < n_; ++i) {
      if (!e[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += "x_" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    std::string term;
    if (mono.empty()) {
      term = f_->format(c);
    } else {
      term = coefficient_prefix(*f_, c) + mono;
    }
    if (!first && term[0] != '-') out += "+";
    out += term;
    first = false;
  }
  return out;
}

namespace {

struct Parser {
  const FieldPtr& f;
  std::size_t n;
  const std::string& s;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw Error("polynomial parse error at position " + std::to_string(pos) + ": " + what);
  }
  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool peek(char c) {
    skip();
    return pos < s.size() && s[pos] == c;
  }
  std::uint64_t number() {
    skip();
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) fail("expected a number");
    std::uint64_t v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + static_cast<std::uint64_t>(s[pos++] - '0');
      if (v > (1ull << 40)) fail("number too large");
    }
    return v;
  }
  std::uint64_t power() {
    if (peek('^')) {
      ++pos;
      return number();
    }
    return 1;
  }
  // One factor multiplied into (exps, coeff).
  void factor(Exponents& e, Elt& c) {
    skip();
    if (pos >= s.size()) fail("unexpected end");
    char ch = s[pos];
    if (ch == 'x') {
      ++pos;
      if (peek('_')) ++pos;
      std::uint64_t i = number();
      if (i < 1 || i > n) fail("variable index out of range");
      e[i - 1] += static_cast<std::uint32_t>(power());
    } else if (ch == 'Z') {
      ++pos;
      if (!peek('(')) fail("expected (");
      ++pos;
      std::uint64_t q = number();
      if (!peek(')')) fail("expected )");
      ++pos;
      auto sub = Field::of_order(q);
      if (f->p() != sub->p() || f->degree() % sub->degree()) fail("Z(q) not a subfield");
      Elt z = embed_subfield(*sub, sub->primitive(), *f);
      c = f->mul(c, f->pow(z, power()));
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::uint64_t v = number();
      Elt b = f->from_int(static_cast<std::int64_t>(v % f->p()));
      c = f->mul(c, f->pow(b, power()));
    } else if (ch == '(') {
      fail("parentheses are not supported");
    } else {
      fail(std::string("unexpected character '") + ch + "'");
    }
  }
  MultiPoly parse() {
    MultiPoly poly(f, n);
    skip();
    if (pos == s.size()) fail("empty polynomial");
    while (true) {
      skip();
      Elt c = 1;
      if (peek('+')) {
        ++pos;
      } else if (peek('-')) {
        ++pos;
        c = f->minus_one();
      }
      Exponents e(n, 0);
      factor(e, c);
      while (peek('*')) {
        ++pos;
        factor(e, c);
      }
      poly.add_term(e, c);
      skip();
      if (pos == s.size()) break;
      if (!peek('+') && !peek('-')) fail("expected + or -");
    }
    return poly;
  }
};

}  // namespace

MultiPoly MultiPoly::parse(const FieldPtr& f, std::size_t nvars, const std::string& text) {
  std::string t = text;
  // Accept "p = 0" equations.
  if (auto eq = t.find('='); eq != std::string::npos) {
    std::string rhs = t.substr(eq + 1);
    if (rhs.find_first_not_of(" 0") != std::string::npos) throw Error("equation right-hand side must be 0");
    t = t.substr(0, eq);
  }
  Parser p{f, nvars, t};
  return p.parse();
}

}  // namespace incgeo
