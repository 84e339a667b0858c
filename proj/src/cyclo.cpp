#include "sgp/cyclo.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace sgp {

namespace detail {

struct CycloModulus {
  int order = 1;
  int degree = 1;                                   // phi(order)
  std::vector<Integer> poly;                        // Phi_N, constant term first, monic
  std::vector<std::pair<int, Integer>> low_terms;   // nonzero coefficients below x^degree
  std::vector<std::complex<double>> roots;          // exp(2 pi i k / N), k < degree
};

}  // namespace detail

namespace {

using detail::CycloModulus;

std::vector<Integer> divide_exact_monic(std::vector<Integer> dividend,
                                        const std::vector<Integer>& divisor) {
  const std::size_t dd = divisor.size() - 1;
  const std::size_t nd = dividend.size() - 1;
  std::vector<Integer> quotient(nd - dd + 1);
  for (std::size_t k = nd + 1; k-- > dd;) {
    const Integer c = dividend[k];
    quotient[k - dd] = c;
    if (sgn(c) == 0) continue;
    for (std::size_t i = 0; i <= dd; ++i) dividend[k - dd + i] -= c * divisor[i];
  }
  for (std::size_t i = 0; i < dd; ++i) {
    if (sgn(dividend[i]) != 0) throw InternalConsistencyError("cyclotomic division left a remainder");
  }
  return quotient;
}

const CycloModulus& modulus_for(int order) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<const CycloModulus>> cache;
  if (order < 1) throw InvalidOrder("cyclotomic order must be positive, got " + std::to_string(order));
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(order); it != cache.end()) return *it->second;
  }

  // x^N - 1 divided by every Phi_d with d | N, d < N.
  std::vector<Integer> poly(order + 1);
  poly[0] = -1;
  poly[order] = 1;
  for (int d = 1; d < order; ++d) {
    if (order % d == 0) poly = divide_exact_monic(std::move(poly), modulus_for(d).poly);
  }

  auto m = std::make_unique<CycloModulus>();
  m->order = order;
  m->degree = static_cast<int>(poly.size()) - 1;
  for (int i = 0; i < m->degree; ++i) {
    if (sgn(poly[i]) != 0) m->low_terms.emplace_back(i, poly[i]);
  }
  m->poly = std::move(poly);
  const double two_pi = 2.0 * std::acos(-1.0);
  for (int k = 0; k < m->degree; ++k) {
    const double t = two_pi * static_cast<double>(k) / static_cast<double>(order);
    m->roots.emplace_back(std::cos(t), std::sin(t));
  }

  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.emplace(order, std::move(m));
  return *it->second;
}

Integer gcd_of(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer lcm_of(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

long floor_mod(long k, long n) {
  long r = k % n;
  return r < 0 ? r + n : r;
}

}  // namespace

std::vector<Integer> cyclotomic_polynomial(int order) { return modulus_for(order).poly; }

int totient(int order) { return modulus_for(order).degree; }

int lcm_order(int a, int b) { return std::lcm(a, b); }

Cyclotomic::Cyclotomic() : Cyclotomic(1, &modulus_for(1)) {}

Cyclotomic::Cyclotomic(long value) : Cyclotomic() { num_[0] = value; }

Cyclotomic::Cyclotomic(const Rational& value, int order) : Cyclotomic(order, &modulus_for(order)) {
  num_[0] = value.get_num();
  den_ = value.get_den();
}

Cyclotomic::Cyclotomic(int order, const detail::CycloModulus* modulus)
    : order_(order), modulus_(modulus), num_(modulus->degree) {}

Cyclotomic Cyclotomic::zeta(int order, long k) {
  const auto& m = modulus_for(order);
  std::vector<Integer> raw(order);
  raw[floor_mod(k, order)] = 1;
  Cyclotomic out(order, &m);
  reduce_into(m, raw, out.num_);
  return out;
}

Cyclotomic Cyclotomic::from_exponents(int order, std::span<const Integer> weights) {
  const auto& m = modulus_for(order);
  std::vector<Integer> raw(order);
  for (std::size_t k = 0; k < weights.size(); ++k) raw[k % order] += weights[k];
  Cyclotomic out(order, &m);
  reduce_into(m, raw, out.num_);
  out.normalize();
  return out;
}

void Cyclotomic::reduce_into(const CycloModulus& m, std::vector<Integer>& raw,
                             std::vector<Integer>& out) {
  const int n = m.order;
  const int phi = m.degree;
  std::size_t len = raw.size();
  if (len > static_cast<std::size_t>(n)) {
    for (std::size_t k = n; k < len; ++k) {
      if (sgn(raw[k]) != 0) raw[k % n] += raw[k];
    }
    len = n;
  }
  // x^phi = -sum low_terms; eliminate from the top down.
  for (std::size_t d = len; d-- > static_cast<std::size_t>(phi);) {
    if (sgn(raw[d]) == 0) continue;
    const std::size_t base = d - phi;
    for (const auto& [i, p] : m.low_terms) {
      mpz_submul(raw[base + i].get_mpz_t(), raw[d].get_mpz_t(), p.get_mpz_t());
    }
  }
  out.resize(phi);
  for (int k = 0; k < phi; ++k) {
    if (static_cast<std::size_t>(k) < len) {
      out[k].swap(raw[k]);
    } else {
      out[k] = 0;
    }
  }
}

void Cyclotomic::normalize() {
  if (den_ == 1) return;
  if (sgn(den_) < 0) {
    den_ = -den_;
    for (auto& c : num_) c = -c;
  }
  Integer g = den_;
  for (const auto& c : num_) {
    if (g == 1) break;
    if (sgn(c) != 0) g = gcd_of(g, c);
  }
  if (is_zero()) g = den_;
  if (g != 1) {
    den_ /= g;
    for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
}

std::vector<Rational> Cyclotomic::coeffs() const {
  std::vector<Rational> out;
  out.reserve(num_.size());
  for (std::size_t k = 0; k < num_.size(); ++k) out.push_back(coeff(k));
  return out;
}

Rational Cyclotomic::coeff(std::size_t k) const {
  Rational q(num_.at(k), den_);
  q.canonicalize();
  return q;
}

bool Cyclotomic::is_zero() const noexcept {
  for (const auto& c : num_) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

bool Cyclotomic::is_rational() const noexcept {
  for (std::size_t k = 1; k < num_.size(); ++k) {
    if (sgn(num_[k]) != 0) return false;
  }
  return true;
}

std::optional<Integer> Cyclotomic::as_integer() const {
  if (!is_rational() || den_ != 1) return std::nullopt;
  return num_[0];
}

std::optional<Rational> Cyclotomic::as_rational() const {
  if (!is_rational()) return std::nullopt;
  return coeff(0);
}

Cyclotomic Cyclotomic::lift(int target_order) const {
  if (target_order < 1) throw InvalidOrder("lift target must be positive");
  if (target_order == order_) return *this;
  if (target_order % order_ != 0) {
    throw InvalidLift("cannot lift order " + std::to_string(order_) + " to " +
                      std::to_string(target_order));
  }
  const auto& m = modulus_for(target_order);
  Cyclotomic out(target_order, &m);
  out.den_ = den_;
  if (is_rational()) {
    out.num_[0] = num_[0];
    return out;
  }
  const int step = target_order / order_;
  std::vector<Integer> raw(target_order);
  for (std::size_t k = 0; k < num_.size(); ++k) raw[k * step] = num_[k];
  reduce_into(m, raw, out.num_);
  out.normalize();
  return out;
}

std::complex<double> Cyclotomic::approx() const {
  std::complex<double> z{0.0, 0.0};
  for (std::size_t k = 0; k < num_.size(); ++k) {
    if (sgn(num_[k]) == 0) continue;
    z += coeff(k).get_d() * modulus_->roots[k];
  }
  return z;
}

Cyclotomic Cyclotomic::conj() const {
  if (is_rational()) return *this;
  std::vector<Integer> raw(order_);
  for (std::size_t k = 0; k < num_.size(); ++k) raw[floor_mod(-static_cast<long>(k), order_)] = num_[k];
  Cyclotomic out(order_, modulus_);
  out.den_ = den_;
  reduce_into(*modulus_, raw, out.num_);
  return out;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& c : out.num_) c = -c;
  return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
  if (rhs.order_ != order_) {
    const int target = lcm_order(order_, rhs.order_);
    if (target != order_) *this = lift(target);
    if (target != rhs.order_) return *this += rhs.lift(target);
  }
  if (den_ == rhs.den_) {
    for (std::size_t k = 0; k < num_.size(); ++k) num_[k] += rhs.num_[k];
  } else {
    const Integer l = lcm_of(den_, rhs.den_);
    const Integer fl = l / den_;
    const Integer fr = l / rhs.den_;
    for (std::size_t k = 0; k < num_.size(); ++k) {
      num_[k] *= fl;
      mpz_addmul(num_[k].get_mpz_t(), rhs.num_[k].get_mpz_t(), fr.get_mpz_t());
    }
    den_ = l;
  }
  normalize();
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) { return *this += -rhs; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) {
  if (rhs.order_ != order_) {
    const int target = lcm_order(order_, rhs.order_);
    if (target != order_) *this = lift(target);
    if (target != rhs.order_) return *this *= rhs.lift(target);
  }
  if (rhs.is_rational()) {
    for (auto& c : num_) c *= rhs.num_[0];
    den_ *= rhs.den_;
    normalize();
    return *this;
  }
  if (is_rational()) {
    Integer s = num_[0];
    Integer d = den_ * rhs.den_;
    *this = rhs;
    for (auto& c : num_) c *= s;
    den_ = std::move(d);
    normalize();
    return *this;
  }
  const std::size_t phi = num_.size();
  std::vector<Integer> raw(2 * phi - 1);
  for (std::size_t i = 0; i < phi; ++i) {
    if (sgn(num_[i]) == 0) continue;
    for (std::size_t j = 0; j < phi; ++j) {
      if (sgn(rhs.num_[j]) == 0) continue;
      mpz_addmul(raw[i + j].get_mpz_t(), num_[i].get_mpz_t(), rhs.num_[j].get_mpz_t());
    }
  }
  den_ *= rhs.den_;
  reduce_into(*modulus_, raw, num_);
  normalize();
  return *this;
}

Cyclotomic Cyclotomic::divided_by(const Rational& q) const {
  if (sgn(q) == 0) throw DomainError("division of a cyclotomic by zero");
  return *this * Cyclotomic(Rational(q.get_den(), q.get_num()));
}

bool operator==(const Cyclotomic& lhs, const Cyclotomic& rhs) {
  if (lhs.order_ != rhs.order_) {
    const int target = lcm_order(lhs.order_, rhs.order_);
    return lhs.lift(target) == rhs.lift(target);
  }
  return lhs.den_ == rhs.den_ && lhs.num_ == rhs.num_;
}

std::string Cyclotomic::to_string() const {
  if (is_rational()) return coeff(0).get_str();
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < num_.size(); ++k) {
    if (sgn(num_[k]) == 0) continue;
    Rational c = coeff(k);
    const bool negative = sgn(c) < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      out << c.get_str();
      continue;
    }
    if (c != 1) out << c.get_str() << '*';
    out << 'z' << order_;
    if (k != 1) out << '^' << k;
  }
  return out.str();
}

CyclotomicSum::CyclotomicSum(int order)
    : order_(order), modulus_(&modulus_for(order)), raw_(2 * modulus_->degree - 1) {}

void CyclotomicSum::rescale_to(const Integer& den) {
  const Integer l = lcm_of(den_, den);
  if (l != den_) {
    const Integer f = l / den_;
    for (auto& c : raw_) {
      if (sgn(c) != 0) c *= f;
    }
    den_ = l;
  }
}

void CyclotomicSum::add_product(const Cyclotomic& x, const Cyclotomic& y, long weight) {
  accumulate(x, y, weight, false);
}

void CyclotomicSum::add_conj_product(const Cyclotomic& x, const Cyclotomic& y, long weight) {
  accumulate(x, y, weight, !y.is_rational());
}

void CyclotomicSum::accumulate(const Cyclotomic& x, const Cyclotomic& y, long weight, bool conjugate) {
  if (x.order() != order_) return accumulate(x.lift(order_), y, weight, conjugate);
  if (y.order() != order_) return accumulate(x, y.lift(order_), weight, conjugate);
  const Integer term_den = x.den_ * y.den_;
  rescale_to(term_den);
  Integer scale = weight;
  if (term_den != den_) scale *= den_ / term_den;
  Integer xs;
  const std::size_t phi = x.num_.size();
  // conj(z^j) = z^(N-j); exponents past the degree are folded by reduce_into
  if (conjugate && raw_.size() < phi + order_) raw_.resize(phi + order_);
  for (std::size_t i = 0; i < phi; ++i) {
    if (sgn(x.num_[i]) == 0) continue;
    xs = x.num_[i] * scale;
    for (std::size_t j = 0; j < phi; ++j) {
      if (sgn(y.num_[j]) == 0) continue;
      const std::size_t k = conjugate && j ? i + order_ - j : i + j;
      mpz_addmul(raw_[k].get_mpz_t(), xs.get_mpz_t(), y.num_[j].get_mpz_t());
    }
  }
}

void CyclotomicSum::add(const Cyclotomic& x, long weight) { add_product(x, Cyclotomic(1L), weight); }

Cyclotomic CyclotomicSum::result() const {
  std::vector<Integer> raw = raw_;
  Cyclotomic out(order_, modulus_);
  out.den_ = den_;
  Cyclotomic::reduce_into(*modulus_, raw, out.num_);
  out.normalize();
  return out;
}

}  // namespace sgp
