#pragma once

// Exact integers, rationals and integer polynomials in one variable q.

#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace lozenge {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Raised when an argument lies outside an operation's domain. `clause()`
/// names the violated condition.
class DomainError : public std::invalid_argument {
 public:
  DomainError(std::string clause, const std::string& detail)
      : std::invalid_argument(clause + ": " + detail), clause_(std::move(clause)) {}

  const std::string& clause() const noexcept { return clause_; }

 private:
  std::string clause_;
};

/// A quotient that should have been exact left a remainder. Always a bug in
/// the caller's formula, never a recoverable condition.
class InexactDivision : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Dense polynomial with integer coefficients; coefficient i multiplies q^i.
class QPolynomial {
 public:
  QPolynomial() = default;
  QPolynomial(Integer constant);  // NOLINT: implicit by design of the ring
  QPolynomial(long constant) : QPolynomial(Integer(constant)) {}  // NOLINT
  explicit QPolynomial(std::vector<Integer> coefficients);

  static QPolynomial monomial(Integer coefficient, std::size_t exponent);
  static QPolynomial q_power(std::size_t exponent) { return monomial(Integer(1), exponent); }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  /// Exponent of the lowest nonzero term; 0 for the zero polynomial.
  std::size_t valuation() const noexcept;
  const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }
  Integer coefficient(std::size_t exponent) const;
  const Integer& leading() const;

  /// Multiply by q^k.
  QPolynomial shifted(std::size_t k) const;
  /// Divide by q^k; the low k coefficients must be zero.
  QPolynomial unshifted(std::size_t k) const;

  QPolynomial& operator+=(const QPolynomial& rhs);
  QPolynomial& operator-=(const QPolynomial& rhs);
  QPolynomial& operator*=(const QPolynomial& rhs);

  friend QPolynomial operator+(QPolynomial lhs, const QPolynomial& rhs) { return lhs += rhs; }
  friend QPolynomial operator-(QPolynomial lhs, const QPolynomial& rhs) { return lhs -= rhs; }
  friend QPolynomial operator*(const QPolynomial& lhs, const QPolynomial& rhs);
  friend QPolynomial operator-(QPolynomial p);
  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

  friend std::ostream& operator<<(std::ostream& os, const QPolynomial& p);

 private:
  void trim();

  std::vector<Integer> coeffs_;
};

/// [n]_q = 1 + q + ... + q^(n-1).
QPolynomial q_int(long n);

QPolynomial poly_add(const QPolynomial& p, const QPolynomial& r);
QPolynomial poly_sub(const QPolynomial& p, const QPolynomial& r);
QPolynomial poly_mul(const QPolynomial& p, const QPolynomial& r);

/// Quotient p / d. Throws InexactDivision when the remainder is nonzero.
QPolynomial poly_div_exact(const QPolynomial& p, const QPolynomial& d);

/// p * [n]_q in linear time (running window sum).
QPolynomial mul_q_int(const QPolynomial& p, long n);
/// p / [n]_q in linear time; throws InexactDivision on a nonzero remainder.
QPolynomial div_q_int_exact(const QPolynomial& p, long n);

/// gcd of the coefficients, nonnegative; 0 for the zero polynomial.
Integer content(const QPolynomial& p);
/// Greatest common divisor over Z[q], normalized to a positive leading
/// coefficient.
QPolynomial poly_gcd(const QPolynomial& p, const QPolynomial& r);

Rational evaluate(const QPolynomial& p, const Rational& at);
Integer evaluate_at_one(const QPolynomial& p);

/// q^shift * numerator / denominator, kept in lowest terms: no common
/// polynomial factor, no factor of q in either part, positive leading
/// denominator coefficient.
class QLaurentRatio {
 public:
  QLaurentRatio() : QLaurentRatio(0, QPolynomial(1), QPolynomial(1)) {}
  QLaurentRatio(long shift, QPolynomial numerator, QPolynomial denominator);

  long shift() const noexcept { return shift_; }
  const QPolynomial& numerator() const noexcept { return num_; }
  const QPolynomial& denominator() const noexcept { return den_; }

  /// Throws DomainError when the point is a pole.
  Rational evaluate(const Rational& at) const;

  /// True iff lhs * denominator == q^shift * numerator * rhs, i.e. lhs / rhs
  /// equals this ratio, checked without dividing.
  bool satisfied_by(const QPolynomial& lhs, const QPolynomial& rhs) const;

  friend bool operator==(const QLaurentRatio& l, const QLaurentRatio& r);

 private:
  long shift_;
  QPolynomial num_;
  QPolynomial den_;
};

std::string to_string(const Rational& r);

}  // namespace lozenge
