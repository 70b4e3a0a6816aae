#pragma once

#include <optional>
#include <string>
#include <vector>

#include "deformata/exactalg/poly.hpp"

namespace deformata::defquant {

using exactalg::Scalar;

// Element of k[h]/(h^{N+1}): N+1 scalar coefficients, index i holding h^i.
class HSeries {
 public:
  HSeries() : coeffs_(1, Scalar(0)) {}
  HSeries(std::size_t order, std::vector<Scalar> coeffs);
  static HSeries constant(std::size_t order, const Scalar& c);
  // exp(lambda*h) truncated at h^order.
  static HSeries exp_of(std::size_t order, const Scalar& lambda);

  std::size_t order() const { return coeffs_.size() - 1; }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  const Scalar& operator[](std::size_t i) const { return coeffs_[i]; }

  bool is_zero() const;
  // Smallest i with a nonzero coefficient.
  std::optional<std::size_t> valuation() const;

  HSeries truncated(std::size_t order) const;
  // Requires a nonzero constant term.
  HSeries inverse() const;
  // Negative exponents go through inverse().
  HSeries pow(long long e) const;

  friend HSeries operator+(const HSeries& a, const HSeries& b);
  friend HSeries operator-(const HSeries& a, const HSeries& b);
  friend HSeries operator*(const HSeries& a, const HSeries& b);
  friend bool operator==(const HSeries& a, const HSeries& b) = default;

 private:
  std::vector<Scalar> coeffs_;
};

std::string to_string(const HSeries& s);

}  // namespace deformata::defquant
