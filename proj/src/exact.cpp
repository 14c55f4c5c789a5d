#include "lozenge/exact.hpp"

#include <algorithm>
#include <utility>

namespace lozenge {

QPolynomial::QPolynomial(Integer constant) {
  if (constant != 0) coeffs_.push_back(std::move(constant));
}

QPolynomial::QPolynomial(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

QPolynomial QPolynomial::monomial(Integer coefficient, std::size_t exponent) {
  QPolynomial p;
  if (coefficient == 0) return p;
  p.coeffs_.assign(exponent + 1, Integer(0));
  p.coeffs_[exponent] = std::move(coefficient);
  return p;
}

void QPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::size_t QPolynomial::valuation() const noexcept {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return i;
  return 0;
}

Integer QPolynomial::coefficient(std::size_t exponent) const {
  return exponent < coeffs_.size() ? coeffs_[exponent] : Integer(0);
}

const Integer& QPolynomial::leading() const {
  if (coeffs_.empty()) throw DomainError("zero polynomial", "no leading coefficient");
  return coeffs_.back();
}

QPolynomial QPolynomial::shifted(std::size_t k) const {
  if (is_zero() || k == 0) return *this;
  QPolynomial p;
  p.coeffs_.reserve(coeffs_.size() + k);
  p.coeffs_.assign(k, Integer(0));
  p.coeffs_.insert(p.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return p;
}

QPolynomial QPolynomial::unshifted(std::size_t k) const {
  if (is_zero() || k == 0) return *this;
  if (valuation() < k) throw InexactDivision("unshift: polynomial not divisible by q^k");
  return QPolynomial(std::vector<Integer>(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end()));
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

QPolynomial& QPolynomial::operator*=(const QPolynomial& rhs) { return *this = *this * rhs; }

QPolynomial operator*(const QPolynomial& lhs, const QPolynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Integer> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return QPolynomial(std::move(out));
}

QPolynomial operator-(QPolynomial p) {
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

std::ostream& operator<<(std::ostream& os, const QPolynomial& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
    const Integer& c = p.coeffs_[i];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    if (i == 0 || mag != 1) os << mag;
    if (i > 0) os << (mag != 1 ? "*q" : "q");
    if (i > 1) os << "^" << i;
  }
  return os;
}

QPolynomial q_int(long n) {
  if (n <= 0) throw DomainError("q_int", "n must be positive, got " + std::to_string(n));
  return QPolynomial(std::vector<Integer>(static_cast<std::size_t>(n), Integer(1)));
}

QPolynomial poly_add(const QPolynomial& p, const QPolynomial& r) { return p + r; }
QPolynomial poly_sub(const QPolynomial& p, const QPolynomial& r) { return p - r; }
QPolynomial poly_mul(const QPolynomial& p, const QPolynomial& r) { return p * r; }

namespace {

// Schoolbook long division; the divisor's leading coefficient must divide
// every intermediate leading coefficient, otherwise the quotient is not in
// Z[q] and the division is reported inexact.
std::pair<std::vector<Integer>, std::vector<Integer>> divide(std::vector<Integer> rem,
                                                             const std::vector<Integer>& d) {
  const std::size_t dn = d.size();
  if (rem.size() < dn) return {{}, std::move(rem)};
  std::vector<Integer> quot(rem.size() - dn + 1);
  const Integer& lead = d.back();
  for (std::size_t k = quot.size(); k-- > 0;) {
    Integer& top = rem[k + dn - 1];
    if (top == 0) continue;
    Integer qk, r;
    boost::multiprecision::divide_qr(top, lead, qk, r);
    if (r != 0) throw InexactDivision("inexact division: leading coefficient does not divide");
    for (std::size_t j = 0; j < dn; ++j) rem[k + j] -= qk * d[j];
    quot[k] = std::move(qk);
  }
  return {std::move(quot), std::move(rem)};
}

QPolynomial primitive_part(const QPolynomial& p) {
  if (p.is_zero()) return p;
  Integer g = content(p);
  std::vector<Integer> c = p.coefficients();
  if (p.leading() < 0) g = -g;
  for (auto& x : c) x /= g;
  return QPolynomial(std::move(c));
}

// lc(d)^(deg p - deg d + 1) * p mod d.
QPolynomial pseudo_remainder(const QPolynomial& p, const QPolynomial& d) {
  if (p.degree() < d.degree()) return p;
  Integer scale = pow(d.leading(), static_cast<unsigned>(p.degree() - d.degree() + 1));
  std::vector<Integer> c = p.coefficients();
  for (auto& x : c) x *= scale;
  return QPolynomial(divide(std::move(c), d.coefficients()).second);
}

}  // namespace

QPolynomial poly_div_exact(const QPolynomial& p, const QPolynomial& d) {
  if (d.is_zero()) throw DomainError("division by zero", "divisor polynomial is zero");
  if (p.is_zero()) return {};
  // Strip common powers of q first; the dent products carry many.
  const std::size_t vd = d.valuation();
  if (p.valuation() < vd) throw InexactDivision("inexact division: q-adic valuation too small");
  const QPolynomial pp = p.unshifted(vd);
  const QPolynomial dd = d.unshifted(vd);
  auto [quot, rem] = divide(pp.coefficients(), dd.coefficients());
  for (const auto& r : rem)
    if (r != 0) throw InexactDivision("inexact division: nonzero remainder");
  return QPolynomial(std::move(quot));
}

QPolynomial mul_q_int(const QPolynomial& p, long n) {
  if (n <= 0) throw DomainError("q_int", "n must be positive, got " + std::to_string(n));
  if (p.is_zero()) return p;
  const auto& c = p.coefficients();
  const std::size_t len = static_cast<std::size_t>(n);
  std::vector<Integer> out(c.size() + len - 1);
  Integer window = 0;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < c.size()) window += c[i];
    if (i >= len) window -= c[i - len];
    out[i] = window;
  }
  return QPolynomial(std::move(out));
}

QPolynomial div_q_int_exact(const QPolynomial& p, long n) {
  if (n <= 0) throw DomainError("q_int", "n must be positive, got " + std::to_string(n));
  if (p.is_zero() || n == 1) return p;
  // p / [n]_q = p (1 - q) / (1 - q^n).
  const auto& c = p.coefficients();
  const std::size_t len = static_cast<std::size_t>(n);
  if (c.size() < len) throw InexactDivision("inexact division by [n]_q: degree too small");
  std::vector<Integer> diff(c.size() + 1);
  for (std::size_t i = 0; i < c.size(); ++i) {
    diff[i] += c[i];
    diff[i + 1] -= c[i];
  }
  // Divide by 1 - q^n: out[i] = diff[i] + out[i-n].
  std::vector<Integer> out(diff.size() - len);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = i >= len ? diff[i] + out[i - len] : diff[i];
  // Remainder terms: diff[i] + out[i-n] must vanish for i >= out.size().
  for (std::size_t i = out.size(); i < diff.size(); ++i) {
    Integer r = diff[i];
    if (i >= len && i - len < out.size()) r += out[i - len];
    if (r != 0) throw InexactDivision("inexact division by [n]_q: nonzero remainder");
  }
  return QPolynomial(std::move(out));
}

Integer content(const QPolynomial& p) {
  Integer g = 0;
  for (const auto& c : p.coefficients()) {
    g = gcd(g, c);
    if (g == 1) break;
  }
  return abs(g);
}

QPolynomial poly_gcd(const QPolynomial& p, const QPolynomial& r) {
  if (p.is_zero()) return primitive_part(r) * QPolynomial(content(r));
  if (r.is_zero()) return primitive_part(p) * QPolynomial(content(p));
  const Integer g = gcd(content(p), content(r));
  QPolynomial a = primitive_part(p);
  QPolynomial b = primitive_part(r);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    QPolynomial rem = pseudo_remainder(a, b);
    a = std::move(b);
    b = primitive_part(rem);
  }
  return primitive_part(a) * QPolynomial(g);
}

Rational evaluate(const QPolynomial& p, const Rational& at) {
  Rational acc = 0;
  const auto& c = p.coefficients();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * at + Rational(c[i]);
  return acc;
}

Integer evaluate_at_one(const QPolynomial& p) {
  Integer s = 0;
  for (const auto& c : p.coefficients()) s += c;
  return s;
}

QLaurentRatio::QLaurentRatio(long shift, QPolynomial numerator, QPolynomial denominator)
    : shift_(shift), num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw DomainError("zero denominator", "QLaurentRatio denominator is zero");
  if (num_.is_zero()) {
    shift_ = 0;
    den_ = QPolynomial(1);
    return;
  }
  const std::size_t vn = num_.valuation();
  const std::size_t vd = den_.valuation();
  num_ = num_.unshifted(vn);
  den_ = den_.unshifted(vd);
  shift_ += static_cast<long>(vn) - static_cast<long>(vd);

  QPolynomial g = poly_gcd(num_, den_);
  if (den_.leading() < 0) g = -g;
  if (g != QPolynomial(1)) {
    num_ = poly_div_exact(num_, g);
    den_ = poly_div_exact(den_, g);
  }
}

Rational QLaurentRatio::evaluate(const Rational& at) const {
  const Rational d = lozenge::evaluate(den_, at);
  if (d == 0) throw DomainError("pole", "denominator vanishes at evaluation point");
  Rational v = lozenge::evaluate(num_, at) / d;
  if (shift_ != 0) {
    if (at == 0) throw DomainError("pole", "negative power of q at q = 0");
    Rational base = shift_ > 0 ? at : Rational(1) / at;
    for (long i = 0; i < std::abs(shift_); ++i) v *= base;
  }
  return v;
}

bool QLaurentRatio::satisfied_by(const QPolynomial& lhs, const QPolynomial& rhs) const {
  // lhs * den == q^shift * num * rhs
  QPolynomial left = lhs * den_;
  QPolynomial right = num_ * rhs;
  if (shift_ >= 0) right = right.shifted(static_cast<std::size_t>(shift_));
  else left = left.shifted(static_cast<std::size_t>(-shift_));
  return left == right;
}

bool operator==(const QLaurentRatio& l, const QLaurentRatio& r) {
  QPolynomial left = l.num_ * r.den_;
  QPolynomial right = r.num_ * l.den_;
  const long m = std::min(l.shift_, r.shift_);
  left = left.shifted(static_cast<std::size_t>(l.shift_ - m));
  right = right.shifted(static_cast<std::size_t>(r.shift_ - m));
  return left == right;
}

std::string to_string(const Rational& r) {
  const Integer n = boost::multiprecision::numerator(r);
  const Integer d = boost::multiprecision::denominator(r);
  return d == 1 ? n.str() : n.str() + "/" + d.str();
}

}  // namespace lozenge
