// Minimal exterior algebra over named 1-form symbols with numeric
// coefficients. No exterior derivative: only pointwise algebraic identities
// (wedge products, Cartan-lemma extractions, substitution residuals) are
// supported. Symbols are opaque labels like "w1", "w2", "pi2_0"; 2-form
// storage is canonical on lexicographically ordered symbol pairs.
#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cone22/numeric.hpp"

namespace cone22 {

template <class T>
class OneForm {
 public:
  OneForm() = default;

  static OneForm symbol(const std::string& name) {
    OneForm f;
    f.coeffs_[name] = T(1);
    return f;
  }

  T coeff(const std::string& name) const {
    auto it = coeffs_.find(name);
    return it == coeffs_.end() ? T(0) : it->second;
  }

  const std::map<std::string, T>& coeffs() const { return coeffs_; }

  bool is_zero_form() const { return coeffs_.empty(); }

  OneForm& add_term(const std::string& name, const T& value) {
    auto it = coeffs_.find(name);
    const T next = (it == coeffs_.end() ? T(0) : it->second) + value;
    if (next == T(0)) {
      if (it != coeffs_.end()) coeffs_.erase(it);
    } else {
      coeffs_[name] = next;
    }
    return *this;
  }

  friend OneForm operator+(const OneForm& f, const OneForm& g) {
    OneForm r = f;
    for (const auto& [name, v] : g.coeffs_) r.add_term(name, v);
    return r;
  }
  friend OneForm operator-(const OneForm& f, const OneForm& g) {
    OneForm r = f;
    for (const auto& [name, v] : g.coeffs_) r.add_term(name, -v);
    return r;
  }
  friend OneForm operator-(const OneForm& f) {
    OneForm r;
    for (const auto& [name, v] : f.coeffs_) r.coeffs_[name] = -v;
    return r;
  }
  friend OneForm operator*(const T& s, const OneForm& f) {
    OneForm r;
    if (s == T(0)) return r;
    for (const auto& [name, v] : f.coeffs_) r.coeffs_[name] = s * v;
    return r;
  }
  friend bool operator==(const OneForm& f, const OneForm& g) { return f.coeffs_ == g.coeffs_; }

 private:
  std::map<std::string, T> coeffs_;  // zero coefficients never stored
};

template <class T>
class TwoForm {
 public:
  TwoForm() = default;

  // Signed accessor: coeff(b, a) = -coeff(a, b), coeff(a, a) = 0.
  T coeff(const std::string& a, const std::string& b) const {
    if (a == b) return T(0);
    const bool flip = b < a;
    auto it = coeffs_.find(flip ? std::make_pair(b, a) : std::make_pair(a, b));
    if (it == coeffs_.end()) return T(0);
    return flip ? T(-it->second) : it->second;
  }

  TwoForm& add_term(const std::string& a, const std::string& b, const T& value) {
    if (a == b || value == T(0)) return *this;
    const bool flip = b < a;
    const auto key = flip ? std::make_pair(b, a) : std::make_pair(a, b);
    const T signed_value = flip ? T(-value) : value;
    auto it = coeffs_.find(key);
    const T next = (it == coeffs_.end() ? T(0) : it->second) + signed_value;
    if (next == T(0)) {
      if (it != coeffs_.end()) coeffs_.erase(it);
    } else {
      coeffs_[key] = next;
    }
    return *this;
  }

  const std::map<std::pair<std::string, std::string>, T>& coeffs() const { return coeffs_; }

  bool is_zero_form() const { return coeffs_.empty(); }

  friend TwoForm operator+(const TwoForm& f, const TwoForm& g) {
    TwoForm r = f;
    for (const auto& [key, v] : g.coeffs_) r.add_term(key.first, key.second, v);
    return r;
  }
  friend TwoForm operator-(const TwoForm& f, const TwoForm& g) {
    TwoForm r = f;
    for (const auto& [key, v] : g.coeffs_) r.add_term(key.first, key.second, -v);
    return r;
  }
  friend TwoForm operator*(const T& s, const TwoForm& f) {
    TwoForm r;
    for (const auto& [key, v] : f.coeffs_) r.add_term(key.first, key.second, s * v);
    return r;
  }
  friend bool operator==(const TwoForm& f, const TwoForm& g) { return f.coeffs_ == g.coeffs_; }

 private:
  std::map<std::pair<std::string, std::string>, T> coeffs_;  // keys ordered first < second
};

// Bilinear alternating product.
template <class T>
TwoForm<T> wedge(const OneForm<T>& f, const OneForm<T>& g) {
  TwoForm<T> r;
  for (const auto& [fa, fv] : f.coeffs())
    for (const auto& [gb, gv] : g.coeffs()) r.add_term(fa, gb, fv * gv);
  return r;
}

// Residual of w2 ^ theta + w3 ^ eta with theta = l22 w2 + l23 w3 and
// eta = l32 w2 + l33 w3: equals (l23 - l32) w2 ^ w3, zero iff the mixed
// coefficients agree, which is what Cartan's lemma forces.
template <class T>
TwoForm<T> cartan_substitution_residual(const T& l22, const T& l23, const T& l32, const T& l33) {
  const auto w2 = OneForm<T>::symbol("w2");
  const auto w3 = OneForm<T>::symbol("w3");
  const OneForm<T> theta = l22 * w2 + l23 * w3;
  const OneForm<T> eta = l32 * w2 + l33 * w3;
  return wedge(w2, theta) + wedge(w3, eta);
}

template <class T>
struct CartanResult {
  bool consistent = false;
  std::vector<std::vector<T>> lambda;  // symmetric when consistent
  std::string reason;
};

// Cartan's lemma in its algebraic form: given sum_a w_a ^ theta_a = 0 with
// the w_a independent and the theta_a spanned by the same basis, extract the
// symmetric coefficient matrix theta_a = lambda_ab w_b. Inconsistent when a
// theta falls outside the basis span or the matrix fails symmetry.
template <class T>
CartanResult<T> cartan_lemma_solve(const std::vector<std::pair<std::string, OneForm<T>>>& equation) {
  CartanResult<T> out;
  const std::size_t n = equation.size();
  if (n == 0) {
    out.reason = "empty equation";
    return out;
  }
  std::vector<std::string> basis;
  for (const auto& [name, theta] : equation) {
    (void)theta;
    basis.push_back(name);
  }

  out.lambda.assign(n, std::vector<T>(n, T(0)));
  for (std::size_t a = 0; a < n; ++a) {
    const auto& theta = equation[a].second;
    for (const auto& [name, v] : theta.coeffs()) {
      auto it = std::find(basis.begin(), basis.end(), name);
      if (it == basis.end()) {
        out.lambda.clear();
        out.reason = "term " + name + " lies outside the declared basis";
        return out;
      }
      out.lambda[a][static_cast<std::size_t>(it - basis.begin())] = v;
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (out.lambda[a][b] != out.lambda[b][a]) {
        out.reason = "coefficient matrix is not symmetric at (" + basis[a] + ", " + basis[b] + ")";
        out.lambda.clear();
        return out;
      }
  out.consistent = true;
  return out;
}

// The two exterior compatibility equations of the reduced third-order jet:
//   dh22-line:  Dh22 ^ w2 + (-omega10 + h22 h33 w1 - 2 a1 w2 - 2 b1 w3) ^ w3,
//   dh33-line:  (-omega10 + h22 h33 w1 - 2 a1 w2 - 2 b1 w3) ^ w2 + Dh33 ^ w3.
// Supplying the standard solution
//   Dh22 = h222 w2 + h223 w3, Dh33 = h233 w2 + h333 w3,
//   omega10 = h22 h33 w1 - (h223 + 2 a1) w2 - (h233 + 2 b1) w3
// makes both residuals vanish identically.
template <class T>
std::pair<TwoForm<T>, TwoForm<T>> jet_compatibility_residual(const OneForm<T>& dh22,
                                                             const OneForm<T>& dh33,
                                                             const OneForm<T>& omega10,
                                                             const T& h22, const T& h33,
                                                             const T& a1, const T& b1) {
  const auto w1 = OneForm<T>::symbol("w1");
  const auto w2 = OneForm<T>::symbol("w2");
  const auto w3 = OneForm<T>::symbol("w3");
  const OneForm<T> mid = -omega10 + (h22 * h33) * w1 + (T(-2) * a1) * w2 + (T(-2) * b1) * w3;
  return {wedge(dh22, w2) + wedge(mid, w3), wedge(mid, w2) + wedge(dh33, w3)};
}

// Same residuals with the three 1-forms built from the given third-order
// coefficients (h222, h223, h233, h333).
template <class T>
std::pair<TwoForm<T>, TwoForm<T>> jet_compatibility_residual(const T& h22, const T& h33,
                                                             const T& a1, const T& b1,
                                                             const std::array<T, 4>& h3) {
  const auto w1 = OneForm<T>::symbol("w1");
  const auto w2 = OneForm<T>::symbol("w2");
  const auto w3 = OneForm<T>::symbol("w3");
  const OneForm<T> dh22 = h3[0] * w2 + h3[1] * w3;
  const OneForm<T> dh33 = h3[2] * w2 + h3[3] * w3;
  const OneForm<T> omega10 =
      (h22 * h33) * w1 + (-(h3[1] + T(2) * a1)) * w2 + (-(h3[2] + T(2) * b1)) * w3;
  return jet_compatibility_residual(dh22, dh33, omega10, h22, h33, a1, b1);
}

}  // namespace cone22
