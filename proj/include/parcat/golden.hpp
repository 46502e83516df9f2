#pragma once

#include <boost/rational.hpp>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace parcat {

// a + b*phi with phi^2 = phi + 1. Integers are the b = 0 slice.
class Golden {
 public:
  constexpr Golden() = default;
  constexpr Golden(std::int64_t a) : a_(a) {}  // NOLINT: implicit from integers on purpose
  constexpr Golden(std::int64_t a, std::int64_t b) : a_(a), b_(b) {}
  static constexpr Golden phi() { return {0, 1}; }

  std::int64_t a() const { return a_; }
  std::int64_t b() const { return b_; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_integer() const { return b_ == 0; }
  // -1, 0 or 1, decided exactly.
  int sign() const;
  // (a+b*phi)' = a + b - b*phi; the product with the conjugate is the norm.
  Golden conjugate() const { return {a_ + b_, -b_}; }
  std::int64_t norm() const { return a_ * a_ + a_ * b_ - b_ * b_; }

  Golden operator-() const { return {-a_, -b_}; }
  Golden& operator+=(const Golden& o) { a_ += o.a_; b_ += o.b_; return *this; }
  Golden& operator-=(const Golden& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
  friend Golden operator+(Golden x, const Golden& y) { return x += y; }
  friend Golden operator-(Golden x, const Golden& y) { return x -= y; }
  friend Golden operator*(const Golden& x, const Golden& y) {
    return {x.a_ * y.a_ + x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_ + x.b_ * y.b_};
  }
  Golden& operator*=(const Golden& o) { return *this = *this * o; }

  friend bool operator==(const Golden&, const Golden&) = default;
  // Real-number order.
  friend std::strong_ordering operator<=>(const Golden& x, const Golden& y) {
    const int s = (x - y).sign();
    return s < 0 ? std::strong_ordering::less : s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  double approx() const;
  std::size_t hash() const { return static_cast<std::size_t>(a_) * 0x9E3779B97F4A7C15ULL ^ static_cast<std::size_t>(b_); }

 private:
  std::int64_t a_ = 0;
  std::int64_t b_ = 0;
};

// "0", "3", "-2p", "1+1p", "2-3p"; parse also accepts "phi" and "1+phi".
std::string to_string(const Golden& x);
Golden parse_golden(std::string_view text);

// The field Q(phi), used for solving linear systems exactly.
class GoldenFraction {
 public:
  using Q = boost::rational<std::int64_t>;
  GoldenFraction() = default;
  GoldenFraction(const Golden& g) : p_(g.a()), q_(g.b()) {}  // NOLINT
  GoldenFraction(Q p, Q q) : p_(p), q_(q) {}

  const Q& p() const { return p_; }
  const Q& q() const { return q_; }
  bool is_zero() const { return p_ == Q(0) && q_ == Q(0); }
  bool is_integer() const { return q_ == Q(0) && p_.denominator() == 1; }
  int sign() const;

  friend GoldenFraction operator+(const GoldenFraction& x, const GoldenFraction& y) { return {x.p_ + y.p_, x.q_ + y.q_}; }
  friend GoldenFraction operator-(const GoldenFraction& x, const GoldenFraction& y) { return {x.p_ - y.p_, x.q_ - y.q_}; }
  friend GoldenFraction operator*(const GoldenFraction& x, const GoldenFraction& y) {
    return {x.p_ * y.p_ + x.q_ * y.q_, x.p_ * y.q_ + x.q_ * y.p_ + x.q_ * y.q_};
  }
  friend GoldenFraction operator/(const GoldenFraction& x, const GoldenFraction& y);
  friend bool operator==(const GoldenFraction&, const GoldenFraction&) = default;

 private:
  Q p_{0};
  Q q_{0};
};

std::string to_string(const GoldenFraction& x);

}  // namespace parcat
