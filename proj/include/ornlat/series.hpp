#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "ornlat/errors.hpp"

namespace ornlat {

using BigInt = boost::multiprecision::cpp_int;

// Truncated power series with exact integer coefficients: c[0] + c[1] y + ...
// up to and including y^order. Arithmetic never silently changes the order.
class BigIntSeries {
public:
  BigIntSeries() = default;
  explicit BigIntSeries(int order) : c_(order + 1, 0) {}
  BigIntSeries(int order, std::vector<BigInt> coeffs) : c_(std::move(coeffs)) {
    c_.resize(order + 1, 0);
  }

  int order() const { return int(c_.size()) - 1; }
  const BigInt& operator[](int k) const { return c_[k]; }
  BigInt& operator[](int k) { return c_[k]; }

  static BigIntSeries constant(int order, BigInt value) {
    BigIntSeries s(order);
    s.c_[0] = std::move(value);
    return s;
  }

  friend BigIntSeries operator+(const BigIntSeries& a, const BigIntSeries& b) {
    check(a, b);
    BigIntSeries s(a.order());
    for (int k = 0; k <= a.order(); ++k) s.c_[k] = a.c_[k] + b.c_[k];
    return s;
  }
  friend BigIntSeries operator-(const BigIntSeries& a, const BigIntSeries& b) {
    check(a, b);
    BigIntSeries s(a.order());
    for (int k = 0; k <= a.order(); ++k) s.c_[k] = a.c_[k] - b.c_[k];
    return s;
  }
  friend BigIntSeries operator*(const BigIntSeries& a, const BigIntSeries& b) {
    check(a, b);
    BigIntSeries s(a.order());
    for (int i = 0; i <= a.order(); ++i) {
      if (a.c_[i] == 0) continue;
      for (int j = 0; i + j <= a.order(); ++j) s.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return s;
  }
  friend BigIntSeries operator*(const BigInt& k, const BigIntSeries& a) {
    BigIntSeries s(a.order());
    for (int i = 0; i <= a.order(); ++i) s.c_[i] = k * a.c_[i];
    return s;
  }
  BigIntSeries shift_up() const {  // multiply by y
    BigIntSeries s(order());
    for (int k = 1; k <= order(); ++k) s.c_[k] = c_[k - 1];
    return s;
  }

  bool operator==(const BigIntSeries& b) const { return c_ == b.c_; }

private:
  static void check(const BigIntSeries& a, const BigIntSeries& b) {
    if (a.order() != b.order()) throw Error("series: truncation orders differ");
  }
  std::vector<BigInt> c_;
};

BigInt factorial(int n);
BigInt binomial(int n, int k);
BigInt catalan_number(int n);
BigInt odd_double_factorial(int k);  // (2k-1)!! = (2k)! / (2^k k!)

BigIntSeries catalan_series(int order);

}  // namespace ornlat
