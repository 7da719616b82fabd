#pragma once

#include <complex>
#include <optional>
#include <string>

#include "qmod/rational.hpp"

namespace qmod {

// Element of Q(i): re + im*i with exact rational parts.
struct GaussianRational {
  Rational re = 0;
  Rational im = 0;

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  GaussianRational(long r) : re(r) {}  // NOLINT(google-explicit-constructor)

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  GaussianRational conj() const { return {re, -im}; }

  // |z|^2, always an exact nonnegative rational.
  Rational norm2() const { return re * re + im * im; }

  // |z| when it is rational (norm2 a perfect square), otherwise nullopt.
  std::optional<Rational> modulus() const { return exact_sqrt(norm2()); }

  std::complex<double> to_complex() const { return {to_double(re), to_double(im)}; }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  // Division by a nonzero Gaussian rational (exact).
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b);
};

std::string gaussian_to_string(const GaussianRational& z);

}  // namespace qmod
