#include "idiag/polynomial.hpp"

#include <cctype>
#include <limits>
#include <optional>
#include <utility>

#include "idiag/error.hpp"

namespace idiag {

Polynomial::Polynomial(std::size_t dim) : dim_(dim) {
  if (dim == 0) throw Error(ErrorCode::DimensionMismatch, "polynomial dimension must be positive");
}

Polynomial Polynomial::constant(std::size_t dim, const Rational& c) {
  Polynomial p(dim);
  p.add_term(Monomial(dim, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t dim, std::size_t index) {
  Monomial e(dim, 0);
  e.at(index) = 1;
  return monomial(e, 1);
}

Polynomial Polynomial::monomial(const Monomial& exponent, const Rational& c) {
  Polynomial p(exponent.size());
  p.add_term(exponent, c);
  return p;
}

void Polynomial::add_term(const Monomial& exponent, const Rational& c) {
  if (exponent.size() != dim_) throw Error(ErrorCode::DimensionMismatch, "exponent length differs from dimension");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

namespace {

void require_same_dim(const Polynomial& p, const Polynomial& q) {
  if (p.dim() != q.dim())
    throw Error(ErrorCode::DimensionMismatch,
                "polynomials in " + std::to_string(p.dim()) + " and " + std::to_string(q.dim()) + " variables");
}

}  // namespace

Polynomial poly_add(const Polynomial& p, const Polynomial& q) {
  require_same_dim(p, q);
  Polynomial r = p;
  for (const auto& [e, c] : q.terms()) r.add_term(e, c);
  return r;
}

Polynomial poly_sub(const Polynomial& p, const Polynomial& q) {
  require_same_dim(p, q);
  Polynomial r = p;
  for (const auto& [e, c] : q.terms()) r.add_term(e, -c);
  return r;
}

Polynomial poly_mul(const Polynomial& p, const Polynomial& q) {
  require_same_dim(p, q);
  Polynomial r(p.dim());
  Monomial e(p.dim());
  for (const auto& [ep, cp] : p.terms()) {
    for (const auto& [eq, cq] : q.terms()) {
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ep[k] + eq[k];
      r.add_term(e, cp * cq);
    }
  }
  return r;
}

Polynomial poly_pow(const Polynomial& p, std::uint32_t e) {
  Polynomial result = Polynomial::constant(p.dim(), 1);
  Polynomial base = p;
  while (e) {
    if (e & 1u) result = poly_mul(result, base);
    e >>= 1;
    if (e) base = poly_mul(base, base);
  }
  return result;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::size_t dim) : text_(text), dim_(dim) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::SyntaxError, what + " at position " + std::to_string(pos_), pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::optional<char> peek() {
    skip_ws();
    if (pos_ >= text_.size()) return std::nullopt;
    return text_[pos_];
  }

  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Polynomial expr() {
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    Polynomial acc = term();
    if (negate) acc = poly_sub(Polynomial(dim_), acc);
    while (true) {
      if (accept('+')) acc = poly_add(acc, term());
      else if (accept('-')) acc = poly_sub(acc, term());
      else return acc;
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (accept('*')) acc = poly_mul(acc, factor());
    return acc;
  }

  Polynomial factor() {
    Polynomial b = base();
    if (!accept('^')) return b;
    auto c = peek();
    if (c == '-') throw Error(ErrorCode::NegativeExponent, "negative exponent at position " + std::to_string(pos_), pos_);
    if (!c || !std::isdigit(static_cast<unsigned char>(*c))) fail("expected exponent");
    const std::size_t at = pos_;
    std::string d = digits();
    if (d.size() > 9) throw Error(ErrorCode::SyntaxError, "exponent too large at position " + std::to_string(at), at);
    return poly_pow(b, static_cast<std::uint32_t>(std::stoul(d)));
  }

  Polynomial base() {
    auto c = peek();
    if (!c) fail("unexpected end of input");
    if (*c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(*c))) {
      std::string num = digits();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected denominator");
        std::string den = digits();
        mpz_class d(den, 10);
        if (d == 0) fail("zero denominator");
        Rational q(mpz_class(num, 10), d);
        q.canonicalize();
        return Polynomial::constant(dim_, q);
      }
      return Polynomial::constant(dim_, Rational(mpz_class(num, 10)));
    }
    if (std::isalpha(static_cast<unsigned char>(*c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      std::size_t index = 0;
      bool ok = name.size() >= 2 && name[0] == 'z' && name[1] != '0';
      for (std::size_t i = 1; ok && i < name.size(); ++i) {
        ok = std::isdigit(static_cast<unsigned char>(name[i])) != 0;
        if (ok && index <= dim_) index = index * 10 + static_cast<std::size_t>(name[i] - '0');
      }
      if (!ok || index == 0 || index > dim_)
        throw Error(ErrorCode::UnknownVariable,
                    "unknown variable '" + std::string(name) + "' at position " + std::to_string(start) +
                        " (expected z1..z" + std::to_string(dim_) + ")",
                    start);
      return Polynomial::variable(dim_, index - 1);
    }
    fail("unexpected '" + std::string(1, *c) + "'");
  }

  std::string_view text_;
  std::size_t dim_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, std::size_t dim) { return Parser(text, dim).parse(); }

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool negative = c < 0;
    const Rational magnitude = abs(c);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;

    std::string mono;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "z" + std::to_string(k + 1);
      if (e[k] > 1) mono += "^" + std::to_string(e[k]);
    }
    if (mono.empty()) out += to_string(magnitude);
    else if (magnitude == 1) out += mono;
    else out += to_string(magnitude) + "*" + mono;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << to_string(p); }

Polynomial substitute_linear(const Polynomial& p, const linalg::Matrix& m) {
  const std::size_t n = p.dim();
  if (m.size() != n)
    throw Error(ErrorCode::DimensionMismatch, "matrix has " + std::to_string(m.size()) + " rows, expected " + std::to_string(n));
  for (const auto& row : m)
    if (row.size() != n) throw Error(ErrorCode::DimensionMismatch, "matrix is not square");
  if (linalg::determinant(m) == 0) throw Error(ErrorCode::SingularMatrix, "substitution matrix is singular");

  std::vector<Polynomial> images;
  images.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial li(n);
    for (std::size_t j = 0; j < n; ++j) li.add_term(Polynomial::variable(n, j).terms().begin()->first, m[i][j]);
    images.push_back(std::move(li));
  }
  // powers[i][e] = images[i]^e, filled lazily
  std::vector<std::vector<Polynomial>> powers(n);
  auto power = [&](std::size_t i, std::uint32_t e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial::constant(n, 1));
    while (cache.size() <= e) cache.push_back(poly_mul(cache.back(), images[i]));
    return cache[e];
  };

  Polynomial result(n);
  for (const auto& [e, c] : p.terms()) {
    Polynomial term = Polynomial::constant(n, c);
    for (std::size_t i = 0; i < n; ++i)
      if (e[i]) term = poly_mul(term, power(i, e[i]));
    result = poly_add(result, term);
  }
  return result;
}

std::vector<Point> support_of(const Polynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "the zero polynomial has no support");
  std::vector<Point> out;
  out.reserve(p.terms().size());
  for (const auto& [e, c] : p.terms()) {
    Vector v(e.size());
    for (std::size_t k = 0; k < e.size(); ++k) v[k] = e[k];
    out.emplace_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Rational index_of(const Polynomial& p, const Weight& a) {
  if (a.dim() != p.dim()) throw Error(ErrorCode::DimensionMismatch, "weight and polynomial dimensions differ");
  std::optional<Rational> best;
  for (const auto& point : support_of(p)) {
    Rational v = dot(a.values(), point.coords());
    if (!best || v < *best) best = std::move(v);
  }
  return *best;
}

SingularityInput::SingularityInput(std::size_t dim, std::vector<Polynomial> polys)
    : dim_(dim), polys_(std::move(polys)) {
  if (polys_.empty()) throw Error(ErrorCode::EmptyInput, "a singularity needs at least one polynomial");
  for (std::size_t i = 0; i < polys_.size(); ++i) {
    if (polys_[i].dim() != dim_)
      throw Error(ErrorCode::DimensionMismatch, "polynomial " + std::to_string(i + 1) + " has the wrong dimension");
    if (polys_[i].is_zero())
      throw Error(ErrorCode::ZeroPolynomial, "polynomial " + std::to_string(i + 1) + " is zero");
  }
}

SingularityInput parse_input(std::size_t dim, const std::vector<std::string>& texts) {
  std::vector<Polynomial> polys;
  polys.reserve(texts.size());
  for (const auto& t : texts) polys.push_back(parse_polynomial(t, dim));
  return SingularityInput(dim, std::move(polys));
}

SingularityInput substitute_linear(const SingularityInput& u, const linalg::Matrix& m) {
  std::vector<Polynomial> out;
  out.reserve(u.polys().size());
  for (const auto& p : u.polys()) out.push_back(substitute_linear(p, m));
  return SingularityInput(u.dim(), std::move(out));
}

Diagram diagram_of_input(const SingularityInput& u) {
  std::vector<Point> all;
  for (const auto& p : u.polys()) {
    auto s = support_of(p);
    all.insert(all.end(), s.begin(), s.end());
  }
  return canonicalize(u.dim(), std::move(all));
}

}  // namespace idiag
