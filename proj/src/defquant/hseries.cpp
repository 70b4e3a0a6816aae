#include "deformata/defquant/hseries.hpp"

#include <algorithm>

#include "deformata/errors.hpp"

namespace deformata::defquant {

HSeries::HSeries(std::size_t order, std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() > order + 1) {
    for (std::size_t i = order + 1; i < coeffs_.size(); ++i) {
      if (coeffs_[i] != 0) throw InputError("series has terms beyond the truncation order");
    }
  }
  coeffs_.resize(order + 1, Scalar(0));
}

HSeries HSeries::constant(std::size_t order, const Scalar& c) {
  std::vector<Scalar> v(order + 1, Scalar(0));
  v[0] = c;
  return HSeries(order, std::move(v));
}

HSeries HSeries::exp_of(std::size_t order, const Scalar& lambda) {
  std::vector<Scalar> v(order + 1);
  Scalar term = 1;
  for (std::size_t k = 0; k <= order; ++k) {
    v[k] = term;
    term = term * lambda / static_cast<long>(k + 1);
  }
  return HSeries(order, std::move(v));
}

bool HSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Scalar& c) { return c == 0; });
}

std::optional<std::size_t> HSeries::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return i;
  }
  return std::nullopt;
}

HSeries HSeries::truncated(std::size_t order) const {
  std::vector<Scalar> v(order + 1, Scalar(0));
  for (std::size_t i = 0; i <= std::min(order, this->order()); ++i) v[i] = coeffs_[i];
  return HSeries(order, std::move(v));
}

HSeries HSeries::inverse() const {
  if (coeffs_[0] == 0) throw InputError("series with zero constant term is not invertible");
  const std::size_t n = order();
  std::vector<Scalar> inv(n + 1, Scalar(0));
  inv[0] = 1 / coeffs_[0];
  for (std::size_t k = 1; k <= n; ++k) {
    Scalar acc = 0;
    for (std::size_t i = 1; i <= k; ++i) acc += coeffs_[i] * inv[k - i];
    inv[k] = -acc * inv[0];
  }
  return HSeries(n, std::move(inv));
}

HSeries HSeries::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  HSeries result = constant(order(), 1);
  HSeries base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

HSeries operator+(const HSeries& a, const HSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<Scalar> v(n + 1);
  for (std::size_t i = 0; i <= n; ++i) v[i] = a[i] + b[i];
  return HSeries(n, std::move(v));
}

HSeries operator-(const HSeries& a, const HSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<Scalar> v(n + 1);
  for (std::size_t i = 0; i <= n; ++i) v[i] = a[i] - b[i];
  return HSeries(n, std::move(v));
}

HSeries operator*(const HSeries& a, const HSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<Scalar> v(n + 1, Scalar(0));
  for (std::size_t i = 0; i <= n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j <= n; ++j) v[i + j] += a[i] * b[j];
  }
  return HSeries(n, std::move(v));
}

std::string to_string(const HSeries& s) {
  std::string out;
  for (std::size_t i = 0; i <= s.order(); ++i) {
    const Scalar& c = s[i];
    if (c == 0) continue;
    Scalar mag = abs(c);
    std::string body;
    std::string hp = i == 0 ? "" : (i == 1 ? "h" : "h^" + std::to_string(i));
    if (hp.empty()) {
      body = exactalg::to_string(mag);
    } else if (mag == 1) {
      body = hp;
    } else {
      body = exactalg::to_string(mag) + "*" + hp;
    }
    if (out.empty()) {
      out = c < 0 ? "-" + body : body;
    } else {
      out += c < 0 ? " - " : " + ";
      out += body;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace deformata::defquant
