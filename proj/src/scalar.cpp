#include "trapezoids/scalar.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>

namespace trapezoids {

std::string_view to_string(NumericMode mode) {
  return mode == NumericMode::exact ? "exact" : "float";
}

NumericMode parse_mode(std::string_view text) {
  if (text == "exact") return NumericMode::exact;
  if (text == "float" || text == "approximate") return NumericMode::approximate;
  throw PreconditionError("unknown numeric mode '" + std::string(text) + "'");
}

Scalar Scalar::exact(mpq_class q) {
  q.canonicalize();
  return Scalar(std::move(q), false);
}

Scalar Scalar::exact(long num, long den) {
  if (den == 0) throw PreconditionError("zero denominator");
  return exact(mpq_class(num, den));
}

Scalar Scalar::approx(double v) {
  if (!std::isfinite(v)) throw PreconditionError("non-finite floating value");
  return Scalar(v, false);
}

namespace {

mpq_class parse_decimal(std::string_view text) {
  // [sign] digits [. digits] [e [sign] digits]
  std::string s(text);
  std::size_t epos = s.find_first_of("eE");
  long exponent = 0;
  if (epos != std::string::npos) {
    const std::string e = s.substr(epos + 1);
    auto [ptr, ec] = std::from_chars(e.data() + (e[0] == '+' ? 1 : 0), e.data() + e.size(), exponent);
    if (ec != std::errc() || ptr != e.data() + e.size()) throw PreconditionError("bad number '" + s + "'");
    s.resize(epos);
  }
  bool negative = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    negative = s[0] == '-';
    s.erase(0, 1);
  }
  std::string digits;
  long frac_len = 0;
  bool seen_dot = false;
  for (char ch : s) {
    if (ch == '.' && !seen_dot) {
      seen_dot = true;
    } else if (ch >= '0' && ch <= '9') {
      digits.push_back(ch);
      if (seen_dot) ++frac_len;
    } else {
      throw PreconditionError("bad number '" + std::string(text) + "'");
    }
  }
  if (digits.empty()) throw PreconditionError("bad number '" + std::string(text) + "'");
  mpz_class num(digits, 10);
  if (negative) num = -num;
  const long scale = exponent - frac_len;
  mpz_class pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
  mpq_class q = scale < 0 ? mpq_class(num, pow10) : mpq_class(num * pow10);
  q.canonicalize();
  return q;
}

mpq_class parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return parse_decimal(text);
  const mpq_class num = parse_decimal(text.substr(0, slash));
  const mpq_class den = parse_decimal(text.substr(slash + 1));
  if (den == 0) throw PreconditionError("zero denominator in '" + std::string(text) + "'");
  mpq_class q = num / den;
  q.canonicalize();
  return q;
}

}  // namespace

Scalar Scalar::parse(std::string_view text, NumericMode mode) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty()) throw PreconditionError("empty number");
  const mpq_class q = parse_rational(text);
  if (mode == NumericMode::exact) return exact(q);
  if (text.find('/') == std::string_view::npos) return approx(std::stod(std::string(text)));
  return approx(q.get_d());
}

const mpq_class& Scalar::rational() const {
  if (!is_exact()) throw ModeMismatch("exact value requested from a floating scalar");
  return std::get<mpq_class>(value_);
}

double Scalar::to_double() const {
  return is_exact() ? std::get<mpq_class>(value_).get_d() : std::get<double>(value_);
}

int Scalar::sign() const {
  if (is_exact()) return sgn(std::get<mpq_class>(value_));
  const double v = std::get<double>(value_);
  if (std::abs(v) <= kTolerance) return 0;
  return v < 0 ? -1 : 1;
}

Scalar Scalar::abs() const {
  if (is_exact()) return Scalar(mpq_class(::abs(std::get<mpq_class>(value_))), literal_);
  return Scalar(std::abs(std::get<double>(value_)), literal_);
}

Scalar Scalar::in_mode(NumericMode mode) const {
  if (mode == NumericMode::exact) {
    if (!is_exact()) throw ModeMismatch("cannot convert a floating scalar to exact");
    return Scalar(value_, false);
  }
  return Scalar(to_double(), false);
}

std::string Scalar::str() const {
  if (is_exact()) return std::get<mpq_class>(value_).get_str();
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, std::get<double>(value_));
  return std::string(buf, ptr);
}

bool Scalar::unify(const Scalar& rhs, double& lhs_d, double& rhs_d) const {
  const bool lhs_exact = is_exact();
  const bool rhs_exact = rhs.is_exact();
  if (lhs_exact && rhs_exact) return false;
  if (lhs_exact && !literal_) throw ModeMismatch("exact and floating scalars mixed");
  if (rhs_exact && !rhs.literal_) throw ModeMismatch("exact and floating scalars mixed");
  lhs_d = to_double();
  rhs_d = rhs.to_double();
  return true;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  double l = 0, r = 0;
  if (unify(rhs, l, r)) {
    value_ = l + r;
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(rhs.value_);
  }
  literal_ = literal_ && rhs.literal_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  double l = 0, r = 0;
  if (unify(rhs, l, r)) {
    value_ = l - r;
  } else {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(rhs.value_);
  }
  literal_ = literal_ && rhs.literal_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  double l = 0, r = 0;
  if (unify(rhs, l, r)) {
    value_ = l * r;
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(rhs.value_);
  }
  literal_ = literal_ && rhs.literal_;
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  double l = 0, r = 0;
  if (unify(rhs, l, r)) {
    if (r == 0.0) throw PreconditionError("division by zero");
    value_ = l / r;
  } else {
    const auto& d = std::get<mpq_class>(rhs.value_);
    if (d == 0) throw PreconditionError("division by zero");
    std::get<mpq_class>(value_) /= d;
  }
  literal_ = literal_ && rhs.literal_;
  return *this;
}

Scalar Scalar::operator-() const {
  if (is_exact()) return Scalar(mpq_class(-std::get<mpq_class>(value_)), literal_);
  return Scalar(-std::get<double>(value_), literal_);
}

bool operator==(const Scalar& lhs, const Scalar& rhs) {
  double l = 0, r = 0;
  if (!lhs.unify(rhs, l, r)) return std::get<mpq_class>(lhs.value_) == std::get<mpq_class>(rhs.value_);
  const double scale = std::max({1.0, std::abs(l), std::abs(r)});
  return std::abs(l - r) <= kTolerance * scale;
}

bool operator<(const Scalar& lhs, const Scalar& rhs) {
  double l = 0, r = 0;
  if (!lhs.unify(rhs, l, r)) return std::get<mpq_class>(lhs.value_) < std::get<mpq_class>(rhs.value_);
  return l < r && !(lhs == rhs);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

void ModeTracker::observe(const Scalar& s) {
  if (s.is_literal()) return;
  if (!mode_) {
    mode_ = s.mode();
  } else if (*mode_ != s.mode()) {
    throw ModeMismatch("dataset mixes exact and floating values");
  }
}

}  // namespace trapezoids
