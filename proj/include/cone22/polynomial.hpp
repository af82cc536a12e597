// Dense univariate polynomials over a field scalar. Only what the root
// machinery needs: division, gcd, Yun square-free decomposition, Sturm
// chains. Intended for the exact rational backend; degrees here never
// exceed four.
#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cone22/numeric.hpp"

namespace cone22 {

// Coefficients in ascending degree order; trailing zeros are trimmed so the
// leading coefficient of a nonzero polynomial is nonzero. The zero
// polynomial has empty storage and degree -1.
template <class T>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<T> ascending) : c_(std::move(ascending)) { trim(); }

  static Poly constant(T v) { return Poly(std::vector<T>{std::move(v)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const T& leading() const {
    if (c_.empty()) throw std::logic_error("Poly::leading on zero polynomial");
    return c_.back();
  }
  const std::vector<T>& coeffs() const { return c_; }
  T coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(k)] : T(0);
  }

  T eval(const T& x) const {
    T acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Poly derivative() const {
    std::vector<T> d;
    for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(T(static_cast<int>(k)) * c_[k]);
    return Poly(std::move(d));
  }

  Poly monic() const {
    if (is_zero()) return *this;
    std::vector<T> d = c_;
    const T lead = c_.back();
    for (auto& v : d) v = v / lead;
    return Poly(std::move(d));
  }

  friend Poly operator+(const Poly& p, const Poly& q) {
    std::vector<T> r(std::max(p.c_.size(), q.c_.size()), T(0));
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = p.coeff(static_cast<int>(k)) + q.coeff(static_cast<int>(k));
    return Poly(std::move(r));
  }
  friend Poly operator-(const Poly& p, const Poly& q) {
    std::vector<T> r(std::max(p.c_.size(), q.c_.size()), T(0));
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = p.coeff(static_cast<int>(k)) - q.coeff(static_cast<int>(k));
    return Poly(std::move(r));
  }
  friend Poly operator*(const Poly& p, const Poly& q) {
    if (p.is_zero() || q.is_zero()) return Poly();
    std::vector<T> r(p.c_.size() + q.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < p.c_.size(); ++i)
      for (std::size_t j = 0; j < q.c_.size(); ++j) r[i + j] += p.c_[i] * q.c_[j];
    return Poly(std::move(r));
  }

  // Euclidean division: returns (quotient, remainder) with deg r < deg d.
  std::pair<Poly, Poly> divmod(const Poly& d) const {
    if (d.is_zero()) throw std::invalid_argument("Poly::divmod: division by zero polynomial");
    std::vector<T> rem = c_;
    std::vector<T> quo(c_.size() > d.c_.size() ? c_.size() - d.c_.size() + 1 : 1, T(0));
    while (static_cast<int>(rem.size()) - 1 >= d.degree() && !rem.empty()) {
      const T f = rem.back() / d.leading();
      const std::size_t shift = rem.size() - d.c_.size();
      quo[shift] = f;
      for (std::size_t k = 0; k < d.c_.size(); ++k) rem[shift + k] -= f * d.c_[k];
      // The leading entry is now exactly zero for the rational backend; force
      // the cancellation for the floating one.
      rem.pop_back();
      while (!rem.empty() && rem.back() == T(0)) rem.pop_back();
    }
    return {Poly(std::move(quo)), Poly(std::move(rem))};
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
  }
  std::vector<T> c_;
};

// Monic gcd by the Euclidean algorithm.
template <class T>
Poly<T> poly_gcd(Poly<T> p, Poly<T> q) {
  while (!q.is_zero()) {
    auto r = p.divmod(q).second;
    p = std::move(q);
    q = std::move(r);
  }
  return p.monic();
}

// Yun's square-free decomposition: returns (factor, multiplicity) pairs with
// each factor monic and square-free, so that the input is a constant times
// the product of factor^multiplicity.
template <class T>
std::vector<std::pair<Poly<T>, int>> square_free_decomposition(const Poly<T>& f) {
  std::vector<std::pair<Poly<T>, int>> out;
  if (f.degree() < 1) return out;
  const Poly<T> fp = f.derivative();
  Poly<T> g = poly_gcd(f, fp);
  // w may not be rescaled inside the loop: z = y - w' must stay exact.
  Poly<T> w = f.divmod(g).first;
  Poly<T> y = fp.divmod(g).first;
  Poly<T> z = y - w.derivative();
  int i = 1;
  while (w.degree() > 0) {
    Poly<T> h = poly_gcd(w, z);
    if (h.degree() > 0) out.emplace_back(h, i);
    w = w.divmod(h).first;
    y = z.divmod(h).first;
    z = y - w.derivative();
    ++i;
  }
  return out;
}

// Number of distinct real roots of a square-free polynomial, by the sign
// variation difference of its Sturm chain at -inf and +inf.
template <class T>
int count_real_roots_sturm(const Poly<T>& f) {
  if (f.degree() < 1) return 0;
  std::vector<Poly<T>> chain{f, f.derivative()};
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    auto rem = chain[chain.size() - 2].divmod(chain.back()).second;
    std::vector<T> neg = rem.coeffs();
    for (auto& v : neg) v = -v;
    chain.push_back(Poly<T>(std::move(neg)));
  }
  if (chain.back().is_zero()) chain.pop_back();

  auto variations = [&](bool at_plus_infinity) {
    int count = 0;
    int prev = 0;
    for (const auto& p : chain) {
      int s = sign_of(p.leading());
      if (!at_plus_infinity && p.degree() % 2 == 1) s = -s;
      if (s != 0 && prev != 0 && s != prev) ++count;
      if (s != 0) prev = s;
    }
    return count;
  };
  return variations(false) - variations(true);
}

}  // namespace cone22
