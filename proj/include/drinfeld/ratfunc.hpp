#pragma once

#include <string>
#include <utility>

#include "drinfeld/error.hpp"
#include "drinfeld/poly.hpp"

namespace drinfeld {

/// Element of k = F_q(T): num/den with den monic and gcd(num, den) = 1.
class RatFunc {
 public:
  explicit RatFunc(const Poly& num) : num_(num), den_(num.one()) {}

  RatFunc(const Poly& num, const Poly& den) : num_(num), den_(den) {
    require(!den.is_zero(), ErrorKind::Domain, "rational function with zero denominator");
    normalize();
  }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    require(!b.is_zero(), ErrorKind::Domain, "rational division by zero");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
  }
  RatFunc operator-() const { return RatFunc(-num_, den_); }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
  }

 private:
  void normalize() {
    if (num_.is_zero()) {
      den_ = num_.one();
      return;
    }
    Poly g = gcd(num_, den_);
    num_ = num_ / g;
    den_ = den_ / g;
    const Fe l = den_.lead();
    const Fe li = den_.F().inv(l);
    num_ = num_.scaled(li);
    den_ = den_.scaled(li);
  }

  Poly num_;
  Poly den_;
};

}  // namespace drinfeld
