// Projective parameter values: a finite scalar or the point at infinity.
// Infinity is a first-class tag, never a large float stand-in.
#pragma once

#include <optional>
#include <ostream>
#include <stdexcept>
#include <utility>

#include "cone22/numeric.hpp"

namespace cone22 {

template <class T>
class Projective {
 public:
  Projective() = default;
  static Projective finite(T v) { return Projective(std::move(v), false); }
  static Projective infinity() { return Projective(T(0), true); }

  bool is_infinite() const { return infinite_; }
  const T& value() const {
    if (infinite_) throw std::logic_error("Projective: value() of infinity");
    return value_;
  }

  // Homogeneous coordinates (x : y); finite v is (v : 1), infinity is (1 : 0).
  std::pair<T, T> homogeneous() const {
    return infinite_ ? std::pair<T, T>(T(1), T(0)) : std::pair<T, T>(value_, T(1));
  }

  friend bool operator==(const Projective& a, const Projective& b) {
    if (a.infinite_ != b.infinite_) return false;
    return a.infinite_ || a.value_ == b.value_;
  }
  friend bool operator!=(const Projective& a, const Projective& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const Projective& p) {
    if (p.infinite_) return os << "inf";
    return os << p.value_;
  }

 private:
  Projective(T v, bool inf) : value_(std::move(v)), infinite_(inf) {}
  T value_{};
  bool infinite_ = false;
};

namespace detail {
template <class T>
T homog_det(const std::pair<T, T>& p, const std::pair<T, T>& q) {
  return p.first * q.second - q.first * p.second;
}
}  // namespace detail

// Cross-ratio (a, b; c, d) = ((a-c)(b-d)) / ((a-d)(b-c)), evaluated on
// homogeneous coordinates so any argument may be infinite. Returns a
// projective value: infinity when the denominator vanishes.
template <class T>
Projective<T> cross_ratio(const Projective<T>& a, const Projective<T>& b,
                          const Projective<T>& c, const Projective<T>& d) {
  using detail::homog_det;
  const auto ha = a.homogeneous(), hb = b.homogeneous(), hc = c.homogeneous(),
             hd = d.homogeneous();
  const T num = homog_det(ha, hc) * homog_det(hb, hd);
  const T den = homog_det(ha, hd) * homog_det(hb, hc);
  if (den == T(0)) {
    if (num == T(0)) throw std::domain_error("cross_ratio: indeterminate (coincident points)");
    return Projective<T>::infinity();
  }
  return Projective<T>::finite(num / den);
}

}  // namespace cone22
