#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "drinfeld/error.hpp"

namespace drinfeld {

/// Element of a finite field, stored as a code.
///
/// The code of an element of F_p is its residue. The code of an element of an
/// extension B[y]/(f) is sum_j d_j * |B|^j where d_j are the codes of its
/// coordinates over B. Flattened down a tower, the code is therefore the
/// base-p digit string of the coordinates over the prime field, so addition is
/// always digit-wise mod p.
struct Fe {
  std::uint64_t code = 0;

  friend constexpr bool operator==(Fe, Fe) = default;
  friend constexpr auto operator<=>(Fe, Fe) = default;
};

class FiniteField;
using FieldPtr = std::shared_ptr<const FiniteField>;

/// F_p, or an extension B[y]/(f) of another FiniteField B.
///
/// Fields are immutable after construction and shared between the
/// polynomials that live over them.
class FiniteField {
 public:
  static FieldPtr prime(std::uint64_t p) {
    require(p >= 2 && p < (std::uint64_t{1} << 31), ErrorKind::Domain,
            "characteristic out of range");
    for (std::uint64_t d = 2; d * d <= p; ++d)
      require(p % d != 0, ErrorKind::Domain,
              "characteristic " + std::to_string(p) + " is not prime");
    return FieldPtr(new FiniteField(p));
  }

  /// `modulus` holds ascending coefficients over `base`; it must be monic of
  /// degree >= 1. Irreducibility is the caller's responsibility (see
  /// make_extension in factor.hpp, which checks it).
  static FieldPtr extension(FieldPtr base, std::vector<Fe> modulus,
                            std::string symbol) {
    require(base != nullptr, ErrorKind::Domain, "null base field");
    require(modulus.size() >= 2 && modulus.back() == base->one(),
            ErrorKind::Domain, "extension modulus must be monic of degree >= 1");
    for (Fe c : modulus)
      require(c.code < base->size(), ErrorKind::Domain,
              "modulus coefficient outside base field");
    return FieldPtr(
        new FiniteField(std::move(base), std::move(modulus), std::move(symbol)));
  }

  bool is_prime() const { return base_ == nullptr; }
  std::uint64_t characteristic() const { return p_; }
  std::uint64_t size() const { return size_; }
  /// Degree over the immediate base (1 for a prime field).
  int degree() const { return degree_; }
  /// Degree over F_p.
  int absolute_degree() const { return abs_degree_; }
  const FieldPtr& base() const { return base_; }
  const std::vector<Fe>& modulus() const { return modulus_; }
  const std::string& symbol() const { return symbol_; }

  static constexpr Fe zero() { return Fe{0}; }
  static constexpr Fe one() { return Fe{1}; }

  bool contains(Fe a) const { return a.code < size_; }

  /// Image of an integer under Z -> F_p -> this field.
  Fe from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += static_cast<long long>(p_);
    return Fe{static_cast<std::uint64_t>(r)};
  }

  /// Coordinates over the immediate base, length degree().
  std::vector<Fe> digits(Fe a) const {
    std::vector<Fe> d(static_cast<std::size_t>(degree_));
    if (is_prime()) {
      d[0] = a;
      return d;
    }
    const std::uint64_t b = base_->size();
    for (auto& x : d) {
      x = Fe{a.code % b};
      a.code /= b;
    }
    return d;
  }

  Fe from_digits(const std::vector<Fe>& d) const {
    if (is_prime()) return d.empty() ? zero() : d[0];
    const std::uint64_t b = base_->size();
    std::uint64_t code = 0;
    for (std::size_t i = d.size(); i-- > 0;) {
      if (i >= static_cast<std::size_t>(degree_)) {
        require(d[i] == zero(), ErrorKind::Domain, "too many digits");
        continue;
      }
      code = code * b + d[i].code;
    }
    return Fe{code};
  }

  Fe add(Fe a, Fe b) const {
    if (is_prime()) {
      std::uint64_t s = a.code + b.code;
      return Fe{s >= p_ ? s - p_ : s};
    }
    if (p_ == 2) return Fe{a.code ^ b.code};
    std::uint64_t r = 0, place = 1, x = a.code, y = b.code;
    for (int i = 0; i < abs_degree_; ++i) {
      std::uint64_t d = x % p_ + y % p_;
      if (d >= p_) d -= p_;
      r += d * place;
      place *= p_;
      x /= p_;
      y /= p_;
    }
    return Fe{r};
  }

  Fe neg(Fe a) const {
    if (is_prime()) return Fe{a.code == 0 ? 0 : p_ - a.code};
    if (p_ == 2) return a;
    std::uint64_t r = 0, place = 1, x = a.code;
    for (int i = 0; i < abs_degree_; ++i) {
      std::uint64_t d = x % p_;
      r += (d == 0 ? 0 : p_ - d) * place;
      place *= p_;
      x /= p_;
    }
    return Fe{r};
  }

  Fe sub(Fe a, Fe b) const { return add(a, neg(b)); }

  Fe mul(Fe a, Fe b) const {
    if (a.code == 0 || b.code == 0) return zero();
    if (is_prime()) return Fe{(a.code * b.code) % p_};
    if (!log_.empty()) {
      const std::uint64_t n = size_ - 1;
      return Fe{exp_[(log_[a.code] + log_[b.code]) % n]};
    }
    return mul_slow(a, b);
  }

  Fe pow(Fe a, std::uint64_t e) const {
    Fe r = one();
    while (e != 0) {
      if (e & 1U) r = mul(r, a);
      a = mul(a, a);
      e >>= 1U;
    }
    return r;
  }

  Fe inv(Fe a) const {
    require(a.code != 0, ErrorKind::Domain, "inverse of zero");
    if (!log_.empty()) {
      const std::uint64_t n = size_ - 1;
      return Fe{exp_[(n - log_[a.code]) % n]};
    }
    return pow(a, size_ - 2);
  }

  Fe div(Fe a, Fe b) const { return mul(a, inv(b)); }

  /// Inverse of the absolute Frobenius x -> x^p.
  Fe pth_root(Fe a) const { return pow(a, size_ / p_); }

  /// a^(|base|^k), the k-th power of the relative Frobenius over the base.
  Fe frobenius(Fe a, int k) const {
    if (is_prime()) return a;
    const std::uint64_t q = base_->size();
    for (int i = 0; i < k % degree_; ++i) a = pow(a, q);
    return a;
  }

  /// Square root, if one exists.
  std::optional<Fe> sqrt(Fe a) const {
    if (a.code == 0) return zero();
    if (p_ == 2) return pow(a, size_ / 2);
    const std::uint64_t n = size_ - 1;
    if (pow(a, n / 2) != one()) return std::nullopt;
    // Tonelli-Shanks.
    std::uint64_t q = n;
    int s = 0;
    while ((q & 1U) == 0) {
      q >>= 1U;
      ++s;
    }
    Fe z = one();
    for (std::uint64_t c = 2; c < size_; ++c) {
      if (pow(Fe{c}, n / 2) != one()) {
        z = Fe{c};
        break;
      }
    }
    int m = s;
    Fe c = pow(z, q);
    Fe t = pow(a, q);
    Fe r = pow(a, (q + 1) / 2);
    while (t != one()) {
      int i = 0;
      Fe t2 = t;
      while (t2 != one()) {
        t2 = mul(t2, t2);
        ++i;
      }
      Fe b = c;
      for (int j = 0; j < m - i - 1; ++j) b = mul(b, b);
      m = i;
      c = mul(b, b);
      t = mul(t, c);
      r = mul(r, b);
    }
    return r;
  }

  /// Structural equality: same characteristic and same tower of moduli.
  bool same_as(const FiniteField& o) const {
    if (this == &o) return true;
    if (p_ != o.p_ || degree_ != o.degree_ || is_prime() != o.is_prime())
      return false;
    if (is_prime()) return true;
    return modulus_ == o.modulus_ && base_->same_as(*o.base_);
  }

  std::string to_string(Fe a) const {
    if (is_prime()) return std::to_string(a.code);
    if (a.code == 0) return "0";
    const auto d = digits(a);
    std::string out;
    for (int i = degree_ - 1; i >= 0; --i) {
      const Fe c = d[static_cast<std::size_t>(i)];
      if (c.code == 0) continue;
      if (!out.empty()) out += "+";
      std::string cs = base_->to_string(c);
      const bool wrap = !base_->is_prime() && cs.find('+') != std::string::npos;
      if (wrap) cs = "(" + cs + ")";
      if (i == 0) {
        out += cs;
        continue;
      }
      if (c != one()) out += cs + "*";
      out += symbol_;
      if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
  }

 private:
  explicit FiniteField(std::uint64_t p)
      : p_(p), size_(p), degree_(1), abs_degree_(1) {}

  FiniteField(FieldPtr base, std::vector<Fe> modulus, std::string symbol)
      : p_(base->p_),
        degree_(static_cast<int>(modulus.size()) - 1),
        abs_degree_(base->abs_degree_ * degree_),
        base_(std::move(base)),
        modulus_(std::move(modulus)),
        symbol_(std::move(symbol)) {
    size_ = 1;
    for (int i = 0; i < degree_; ++i) {
      require(size_ <= (std::uint64_t{1} << 62) / base_->size(),
              ErrorKind::Domain, "field too large");
      size_ *= base_->size();
    }
    if (size_ <= kTableLimit) build_tables();
  }

  static constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 16;

  Fe mul_slow(Fe a, Fe b) const {
    const auto da = digits(a);
    const auto db = digits(b);
    const auto d = static_cast<std::size_t>(degree_);
    std::vector<Fe> prod(2 * d - 1, zero());
    for (std::size_t i = 0; i < d; ++i) {
      if (da[i].code == 0) continue;
      for (std::size_t j = 0; j < d; ++j)
        prod[i + j] = base_->add(prod[i + j], base_->mul(da[i], db[j]));
    }
    for (std::size_t k = prod.size(); k-- > d;) {
      const Fe t = prod[k];
      if (t.code == 0) continue;
      for (std::size_t j = 0; j < d; ++j)
        prod[k - d + j] = base_->sub(prod[k - d + j], base_->mul(t, modulus_[j]));
      prod[k] = zero();
    }
    prod.resize(d);
    return from_digits(prod);
  }

  Fe pow_slow(Fe a, std::uint64_t e) const {
    Fe r = one();
    while (e != 0) {
      if (e & 1U) r = mul_slow(r, a);
      a = mul_slow(a, a);
      e >>= 1U;
    }
    return r;
  }

  void build_tables() {
    const std::uint64_t n = size_ - 1;
    std::vector<std::uint64_t> primes;
    std::uint64_t m = n;
    for (std::uint64_t d = 2; d * d <= m; ++d) {
      if (m % d != 0) continue;
      primes.push_back(d);
      while (m % d == 0) m /= d;
    }
    if (m > 1) primes.push_back(m);

    std::uint64_t gen = 0;
    for (std::uint64_t c = 1; c < size_ && gen == 0; ++c) {
      bool ok = true;
      for (auto r : primes) {
        if (pow_slow(Fe{c}, n / r) == one()) {
          ok = false;
          break;
        }
      }
      if (ok) gen = c;
    }
    require(gen != 0, ErrorKind::Domain,
            "extension modulus is not irreducible (no multiplicative generator)");

    exp_.assign(n, 0);
    log_.assign(size_, 0);
    Fe x = one();
    for (std::uint64_t i = 0; i < n; ++i) {
      exp_[i] = static_cast<std::uint32_t>(x.code);
      log_[x.code] = static_cast<std::uint32_t>(i);
      x = mul_slow(x, Fe{gen});
    }
  }

  std::uint64_t p_;
  std::uint64_t size_ = 0;
  int degree_;
  int abs_degree_;
  FieldPtr base_;
  std::vector<Fe> modulus_;
  std::string symbol_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
};

}  // namespace drinfeld
