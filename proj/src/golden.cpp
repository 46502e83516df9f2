#include "parcat/golden.hpp"

#include <cctype>
#include <cmath>
#include <string>

#include "parcat/errors.hpp"

namespace parcat {

namespace {

// Sign of x + y*sqrt(5).
int sign_sqrt5(std::int64_t x, std::int64_t y) {
  const int sx = (x > 0) - (x < 0), sy = (y > 0) - (y < 0);
  if (sx == 0) return sy;
  if (sy == 0 || sx == sy) return sx;
  // opposite signs: compare x^2 with 5 y^2
  const __int128 lhs = static_cast<__int128>(x) * x, rhs = static_cast<__int128>(5) * y * y;
  if (lhs == rhs) return 0;
  return lhs > rhs ? sx : sy;
}

template <class Q>
int sign_q_sqrt5(const Q& x, const Q& y) {
  const Q zero(0);
  const int sx = (x > zero) - (x < zero), sy = (y > zero) - (y < zero);
  if (sx == 0) return sy;
  if (sy == 0 || sx == sy) return sx;
  const Q lhs = x * x, rhs = Q(5) * y * y;
  if (lhs == rhs) return 0;
  return lhs > rhs ? sx : sy;
}

}  // namespace

int Golden::sign() const { return sign_sqrt5(2 * a_ + b_, b_); }

double Golden::approx() const { return static_cast<double>(a_) + static_cast<double>(b_) * (1.0 + std::sqrt(5.0)) / 2.0; }

std::string to_string(const Golden& x) {
  if (x.b() == 0) return std::to_string(x.a());
  if (x.a() == 0) return std::to_string(x.b()) + "p";
  return std::to_string(x.a()) + (x.b() > 0 ? "+" : "") + std::to_string(x.b()) + "p";
}

Golden parse_golden(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw InvalidInput("empty ring literal");
  std::int64_t a = 0, b = 0;
  std::size_t i = 0;
  while (i < s.size()) {
    int sgn = 1;
    if (s[i] == '+' || s[i] == '-') {
      sgn = s[i] == '-' ? -1 : 1;
      ++i;
    }
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    std::int64_t coef = 1;
    const bool has_digits = j > i;
    if (has_digits) coef = std::stoll(s.substr(i, j - i));
    i = j;
    if (s.compare(i, 3, "phi") == 0) {
      b += sgn * coef;
      i += 3;
    } else if (i < s.size() && s[i] == 'p') {
      b += sgn * coef;
      ++i;
    } else {
      if (!has_digits) throw InvalidInput("bad ring literal: " + std::string(text));
      a += sgn * coef;
    }
    if (i < s.size() && s[i] != '+' && s[i] != '-') throw InvalidInput("bad ring literal: " + std::string(text));
  }
  return {a, b};
}

int GoldenFraction::sign() const { return sign_q_sqrt5(Q(2) * p_ + q_, q_); }

GoldenFraction operator/(const GoldenFraction& x, const GoldenFraction& y) {
  if (y.is_zero()) throw InvalidInput("division by zero in Q(phi)");
  using Q = GoldenFraction::Q;
  // 1/(p+q phi) = (p+q - q phi)/(p^2+pq-q^2)
  const Q n = y.p_ * y.p_ + y.p_ * y.q_ - y.q_ * y.q_;
  const GoldenFraction inv{(y.p_ + y.q_) / n, -y.q_ / n};
  return x * inv;
}

std::string to_string(const GoldenFraction& x) {
  auto q = [](const GoldenFraction::Q& v) {
    return v.denominator() == 1 ? std::to_string(v.numerator())
                                : std::to_string(v.numerator()) + "/" + std::to_string(v.denominator());
  };
  const GoldenFraction::Q zero(0);
  if (x.q() == zero) return q(x.p());
  if (x.p() == zero) return q(x.q()) + "p";
  return q(x.p()) + (x.q() > zero ? "+" : "") + q(x.q()) + "p";
}

}  // namespace parcat
