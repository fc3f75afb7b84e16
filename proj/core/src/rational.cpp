#include "idiag/rational.hpp"

#include <cctype>
#include <cstddef>

#include "idiag/error.hpp"

namespace idiag {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::NegativeCoordinate: return "NegativeCoordinate";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::PositiveDirection: return "PositiveDirection";
    case ErrorCode::NonpositiveWeight: return "NonpositiveWeight";
    case ErrorCode::NonpositiveScale: return "NonpositiveScale";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::NegativeExponent: return "NegativeExponent";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::InfeasibleAssignment: return "InfeasibleAssignment";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::Unbounded: return "Unbounded";
    case ErrorCode::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message,
             std::optional<std::size_t> position)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      position_(position) {}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  std::string_view body = s;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den)))
    throw Error(ErrorCode::SyntaxError, "malformed rational '" + std::string(text) + "'");

  std::string normalized(s.front() == '+' ? s.substr(1) : s);
  Rational q;
  if (slash != std::string_view::npos) {
    mpz_class d(std::string(den), 10);
    if (d == 0) throw Error(ErrorCode::SyntaxError, "zero denominator in '" + std::string(text) + "'");
  }
  if (q.set_str(normalized, 10) != 0)
    throw Error(ErrorCode::SyntaxError, "malformed rational '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Rational dot(const Vector& a, const Vector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) s += a[i] * b[i];
  return s;
}

std::string to_string(const Vector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  return out + ")";
}

Vector parse_vector(std::string_view text) {
  Vector out;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    out.push_back(parse_rational(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace idiag
