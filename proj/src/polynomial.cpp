#include "sgsta/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "sgsta/errors.hpp"

namespace sgsta {

Polynomial::Polynomial(std::vector<double> coefficients) : coefficients_(std::move(coefficients)) {}

double Polynomial::operator()(double x) const {
  double acc = 0.0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coefficients_.size() <= 1) return Polynomial({0.0});
  std::vector<double> d(coefficients_.size() - 1);
  for (std::size_t k = 1; k < coefficients_.size(); ++k) d[k - 1] = static_cast<double>(k) * coefficients_[k];
  return Polynomial(std::move(d));
}

Polynomial Polynomial::shifted(double x0) const {
  // Repeated synthetic division by (x - x0) yields the Taylor coefficients.
  std::vector<double> c = coefficients_;
  const std::size_t n = c.size();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    for (std::size_t j = n - 1; j > k; --j) c[j - 1] += x0 * c[j];
  }
  return Polynomial(std::move(c));
}

Polynomial Polynomial::divided_by_power(std::size_t k, double tol) const {
  double scale = 0.0;
  for (double c : coefficients_) scale = std::max(scale, std::abs(c));
  for (std::size_t j = 0; j < std::min(k, coefficients_.size()); ++j) {
    if (std::abs(coefficients_[j]) > tol * std::max(scale, 1.0)) {
      throw InputError("polynomial does not vanish to the requested order");
    }
  }
  if (k >= coefficients_.size()) return Polynomial({0.0});
  return Polynomial(std::vector<double>(coefficients_.begin() + static_cast<std::ptrdiff_t>(k), coefficients_.end()));
}

}  // namespace sgsta
