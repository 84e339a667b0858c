#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_N).
//
// A value of order N is stored in the power basis {1, z, ..., z^(phi(N)-1)}
// of Q[x]/Phi_N(x) as an integer numerator vector over one positive common
// denominator, gcd-normalised, so that two values of the same order are equal
// exactly when their stored vectors are equal. Values of different orders are
// lifted to the lcm order before they are combined or compared.

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "sgp/error.hpp"

namespace sgp {

using Integer = mpz_class;
using Rational = mpq_class;

namespace detail {
struct CycloModulus;
}

/// Coefficients of the N-th cyclotomic polynomial, constant term first,
/// obtained by dividing x^N - 1 by Phi_d for every proper divisor d of N.
std::vector<Integer> cyclotomic_polynomial(int order);

/// Euler totient, read off as deg Phi_N.
int totient(int order);

class Cyclotomic {
 public:
  /// Zero of Q.
  Cyclotomic();
  Cyclotomic(long value);  // NOLINT(google-explicit-constructor)
  explicit Cyclotomic(const Rational& value, int order = 1);

  /// zeta_N^k with k reduced mod N.
  static Cyclotomic zeta(int order, long k);

  /// Builds sum_k weights[k] * zeta_N^k from an exponent vector of length N.
  static Cyclotomic from_exponents(int order, std::span<const Integer> weights);

  int order() const noexcept { return order_; }
  /// Power-basis coordinates, length phi(order).
  std::vector<Rational> coeffs() const;
  Rational coeff(std::size_t k) const;

  bool is_zero() const noexcept;
  bool is_rational() const noexcept;

  /// The value as a rational integer, or nullopt when it is irrational or has
  /// a nontrivial denominator.
  std::optional<Integer> as_integer() const;
  std::optional<Rational> as_rational() const;

  /// Re-expresses this value in Q(zeta_M); M must be a multiple of order().
  Cyclotomic lift(int target_order) const;

  /// Complex embedding zeta_N -> exp(2 pi i / N). Validation only.
  std::complex<double> approx() const;

  /// Complex conjugate, computed as zeta^k -> zeta^(N-k) before reduction.
  Cyclotomic conj() const;

  /// Canonical text: `zN^k` monomials with integer or rational coefficients;
  /// rational values print as plain numbers.
  std::string to_string() const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& rhs);
  Cyclotomic& operator-=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const Cyclotomic& rhs);

  friend Cyclotomic operator+(Cyclotomic lhs, const Cyclotomic& rhs) { return lhs += rhs; }
  friend Cyclotomic operator-(Cyclotomic lhs, const Cyclotomic& rhs) { return lhs -= rhs; }
  friend Cyclotomic operator*(Cyclotomic lhs, const Cyclotomic& rhs) { return lhs *= rhs; }
  friend bool operator==(const Cyclotomic& lhs, const Cyclotomic& rhs);

  /// Divides by a nonzero rational.
  Cyclotomic divided_by(const Rational& q) const;

  friend class CyclotomicSum;

 private:
  Cyclotomic(int order, const detail::CycloModulus* modulus);
  void normalize();
  static void reduce_into(const detail::CycloModulus& m, std::vector<Integer>& raw,
                          std::vector<Integer>& out);

  int order_ = 1;
  const detail::CycloModulus* modulus_ = nullptr;
  Integer den_ = 1;
  std::vector<Integer> num_;
};

/// Accumulates sum_i w_i * x_i * y_i without reducing after every term.
/// All operands are lifted to a fixed target order supplied up front.
class CyclotomicSum {
 public:
  explicit CyclotomicSum(int order);
  void add_product(const Cyclotomic& x, const Cyclotomic& y, long weight = 1);
  /// Adds weight * x * conj(y).
  void add_conj_product(const Cyclotomic& x, const Cyclotomic& y, long weight = 1);
  void add(const Cyclotomic& x, long weight = 1);
  Cyclotomic result() const;

 private:
  void rescale_to(const Integer& den);
  void accumulate(const Cyclotomic& x, const Cyclotomic& y, long weight, bool conjugate);

  int order_;
  const detail::CycloModulus* modulus_;
  Integer den_ = 1;
  std::vector<Integer> raw_;
};

int lcm_order(int a, int b);

}  // namespace sgp
