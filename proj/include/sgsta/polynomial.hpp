#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace sgsta {

// Real polynomial with coefficients in ascending order of power.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<double> coefficients);
  Polynomial(std::initializer_list<double> coefficients)
      : Polynomial(std::vector<double>(coefficients)) {}

  double operator()(double x) const;
  Polynomial derivative() const;

  // Coefficients of p(x0 + s) as a polynomial in s.
  Polynomial shifted(double x0) const;

  // p(s) / s^k. The k lowest coefficients must already be zero up to
  // `tol` (relative to the largest coefficient); they are discarded.
  Polynomial divided_by_power(std::size_t k, double tol = 1e-9) const;

  std::size_t degree() const { return coefficients_.empty() ? 0 : coefficients_.size() - 1; }
  double coefficient(std::size_t k) const { return k < coefficients_.size() ? coefficients_[k] : 0.0; }
  const std::vector<double>& coefficients() const { return coefficients_; }

 private:
  std::vector<double> coefficients_;
};

}  // namespace sgsta
