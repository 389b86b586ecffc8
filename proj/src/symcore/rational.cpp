#include "bicomplex/symcore/rational.hpp"

#include <cctype>

#include "bicomplex/errors.hpp"

namespace bicomplex::symcore {

Rational::Rational(long numerator, long denominator)
    : value_(numerator, denominator) {
  if (denominator == 0) {
    throw Error(ErrorCode::InvalidArgument, "rational with zero denominator");
  }
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  value_.canonicalize();
}

namespace {

bool is_integer_literal(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

mpz_class to_mpz(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1")
                                      : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) ||
      den.front() == '-' || den.front() == '+') {
    throw Error(ErrorCode::InvalidArgument,
                "not a rational literal: '" + std::string(text) + "'");
  }
  mpz_class d = to_mpz(den);
  if (d == 0) {
    throw Error(ErrorCode::InvalidArgument,
                "zero denominator in '" + std::string(text) + "'");
  }
  return Rational(mpq_class(to_mpz(num), d));
}

std::string Rational::str() const {
  if (is_integer()) return numerator();
  return numerator() + "/" + denominator();
}

std::string Rational::fraction_str() const {
  return numerator() + "/" + denominator();
}

Rational& Rational::operator+=(const Rational& other) {
  value_ += other.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  value_ -= other.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  value_ *= other.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.is_zero()) {
    throw Error(ErrorCode::InvalidArgument, "division by zero");
  }
  value_ /= other.value_;
  return *this;
}

}  // namespace bicomplex::symcore
