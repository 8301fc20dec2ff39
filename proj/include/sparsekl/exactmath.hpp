#pragma once

// Exact integer combinatorics and dense integer polynomials. Everything here
// is arbitrary precision; no floating point appears anywhere in the library.

#include <boost/multiprecision/cpp_int.hpp>

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sparsekl {

using Integer = boost::multiprecision::cpp_int;

// Bad user input (ranges, malformed families, unsatisfiable preconditions).
struct validation_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A configured resource cap was exceeded; the computation was refused.
struct cap_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An internal mathematical invariant failed; signals a bug, not bad input.
struct invariant_error : std::logic_error {
  using std::logic_error::logic_error;
};

// Product of the integers lo..hi inclusive; 1 on an empty range.
inline Integer product_range(long lo, long hi) {
  Integer p = 1;
  for (long j = lo; j <= hi; ++j) p *= j;
  return p;
}

inline Integer factorial(long n) {
  if (n < 0) throw validation_error("factorial: negative argument");
  return product_range(2, n);
}

// x(x-1)...(x-n+1); empty product for n = 0.
inline Integer falling_factorial(const Integer& x, long n) {
  if (n < 0) throw validation_error("falling_factorial: negative length");
  Integer p = 1;
  for (long j = 0; j < n; ++j) p *= x - j;
  return p;
}

inline Integer binomial(long n, long k) {
  if (n < 0) throw validation_error("binomial: negative n");
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Integer num = 1;
  for (long j = 1; j <= k; ++j) {
    num *= n - k + j;
    num /= j;  // exact at every step: num is C(n-k+j, j) * j! / j!
  }
  return num;
}

// Exact division with a loud failure on a nonzero remainder. Every closed
// form in the library funnels its final division through here.
inline Integer exact_div(const Integer& num, const Integer& den) {
  if (den == 0) throw invariant_error("exact_div: zero divisor");
  Integer q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0)
    throw invariant_error("exact_div: nonzero remainder " + r.str() + " for " +
                          num.str() + " / " + den.str());
  return q;
}

// Dense univariate polynomial over Z, coefficients stored low-to-high with
// trailing zeros trimmed; the empty vector is the zero polynomial.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<Integer> coeffs) : coeffs_(coeffs) { normalize(); }
  explicit IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

  static IntPolynomial constant(Integer c) {
    IntPolynomial p;
    p.coeffs_.push_back(std::move(c));
    p.normalize();
    return p;
  }
  static IntPolynomial one() { return constant(1); }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero

  const Integer& coeff(int i) const {
    static const Integer zero = 0;
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return zero;
    return coeffs_[static_cast<std::size_t>(i)];
  }
  const std::vector<Integer>& coeffs() const { return coeffs_; }

  Integer operator()(const Integer& x) const {
    Integer v = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * x + *it;
    return v;
  }

  friend IntPolynomial operator+(const IntPolynomial& p, const IntPolynomial& q) {
    std::vector<Integer> c(std::max(p.coeffs_.size(), q.coeffs_.size()), Integer(0));
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) c[i] += p.coeffs_[i];
    for (std::size_t i = 0; i < q.coeffs_.size(); ++i) c[i] += q.coeffs_[i];
    return IntPolynomial(std::move(c));
  }
  friend IntPolynomial operator-(const IntPolynomial& p, const IntPolynomial& q) {
    std::vector<Integer> c(std::max(p.coeffs_.size(), q.coeffs_.size()), Integer(0));
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) c[i] += p.coeffs_[i];
    for (std::size_t i = 0; i < q.coeffs_.size(); ++i) c[i] -= q.coeffs_[i];
    return IntPolynomial(std::move(c));
  }
  friend IntPolynomial operator*(const IntPolynomial& p, const IntPolynomial& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<Integer> c(p.coeffs_.size() + q.coeffs_.size() - 1, Integer(0));
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < q.coeffs_.size(); ++j) c[i + j] += p.coeffs_[i] * q.coeffs_[j];
    return IntPolynomial(std::move(c));
  }
  friend IntPolynomial operator*(const Integer& s, const IntPolynomial& p) {
    std::vector<Integer> c = p.coeffs_;
    for (auto& x : c) x *= s;
    return IntPolynomial(std::move(c));
  }
  IntPolynomial& operator+=(const IntPolynomial& q) { return *this = *this + q; }

  friend bool operator==(const IntPolynomial& p, const IntPolynomial& q) {
    return p.coeffs_ == q.coeffs_;
  }

  std::string str() const {
    std::string out = "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (i) out += ", ";
      out += coeffs_[i].str();
    }
    return out + "]";
  }

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  std::vector<Integer> coeffs_;
};

// t^d * p(1/t): coefficient of t^k moves to t^(d-k). Requires deg p <= d.
inline IntPolynomial reciprocal_shift(const IntPolynomial& p, int d) {
  if (d < 0) throw validation_error("reciprocal_shift: negative degree");
  if (p.degree() > d) throw validation_error("reciprocal_shift: deg p exceeds d");
  std::vector<Integer> c(static_cast<std::size_t>(d) + 1, Integer(0));
  for (int k = 0; k <= p.degree(); ++k) c[static_cast<std::size_t>(d - k)] = p.coeff(k);
  return IntPolynomial(std::move(c));
}

}  // namespace sparsekl
