#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "trapezoids/errors.hpp"

namespace trapezoids {

enum class NumericMode { exact, approximate };

/// Relative tolerance used for every comparison in approximate mode.
inline constexpr double kTolerance = 1e-9;

std::string_view to_string(NumericMode mode);
NumericMode parse_mode(std::string_view text);

/// A real number carried either as an exact rational or as a double.
///
/// Values built from integer literals (`Scalar(2)`) are mode-neutral: they
/// adopt the mode of whatever they are combined with. Values read from data
/// carry a definite mode, and combining an exact value with an approximate
/// one throws ModeMismatch.
///
/// In approximate mode `==` is the tolerance relation
/// |x - y| <= kTolerance * max(1, |x|, |y|), which is not transitive.
class Scalar {
 public:
  Scalar() : value_(mpq_class(0)), literal_(true) {}
  Scalar(int v) : value_(mpq_class(v)), literal_(true) {}  // NOLINT(implicit)
  Scalar(long v) : value_(mpq_class(v)), literal_(true) {}  // NOLINT(implicit)

  static Scalar exact(mpq_class q);
  static Scalar exact(long num, long den = 1);
  static Scalar approx(double v);

  /// Parses "p/q", an integer, or a decimal literal into the given mode.
  static Scalar parse(std::string_view text, NumericMode mode);

  [[nodiscard]] bool is_literal() const { return literal_; }
  [[nodiscard]] bool is_exact() const { return value_.index() == 0; }
  [[nodiscard]] NumericMode mode() const {
    return is_exact() ? NumericMode::exact : NumericMode::approximate;
  }

  /// Exact value; throws ModeMismatch for approximate scalars.
  [[nodiscard]] const mpq_class& rational() const;
  [[nodiscard]] double to_double() const;

  /// Sign under the mode's equality (approximate values within the tolerance
  /// of zero have sign 0).
  [[nodiscard]] int sign() const;
  [[nodiscard]] bool is_zero() const { return sign() == 0; }

  [[nodiscard]] Scalar abs() const;
  [[nodiscard]] Scalar in_mode(NumericMode mode) const;

  /// "p/q" (or "p") for exact values, shortest round-trip decimal otherwise.
  [[nodiscard]] std::string str() const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& lhs, const Scalar& rhs);
  friend bool operator!=(const Scalar& lhs, const Scalar& rhs) { return !(lhs == rhs); }
  /// Strict order consistent with `==`: false whenever the values compare equal.
  friend bool operator<(const Scalar& lhs, const Scalar& rhs);
  friend bool operator>(const Scalar& lhs, const Scalar& rhs) { return rhs < lhs; }
  friend bool operator<=(const Scalar& lhs, const Scalar& rhs) { return !(rhs < lhs); }
  friend bool operator>=(const Scalar& lhs, const Scalar& rhs) { return !(lhs < rhs); }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

 private:
  Scalar(std::variant<mpq_class, double> v, bool literal)
      : value_(std::move(v)), literal_(literal) {}

  // Brings *this and rhs to a common representation; returns false when the
  // result should stay exact.
  bool unify(const Scalar& rhs, double& lhs_d, double& rhs_d) const;

  std::variant<mpq_class, double> value_;
  bool literal_ = false;
};

/// Mode shared by a collection of scalars; literals are ignored. Throws
/// ModeMismatch if both definite modes occur.
class ModeTracker {
 public:
  void observe(const Scalar& s);
  [[nodiscard]] NumericMode mode() const { return mode_.value_or(NumericMode::exact); }
  [[nodiscard]] bool decided() const { return mode_.has_value(); }

 private:
  std::optional<NumericMode> mode_;
};

}  // namespace trapezoids
