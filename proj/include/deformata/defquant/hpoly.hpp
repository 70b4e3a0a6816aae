#pragma once

#include <optional>
#include <string>
#include <vector>

#include "deformata/defquant/hseries.hpp"
#include "deformata/exactalg/poly.hpp"

namespace deformata::defquant {

using exactalg::Exponents;
using exactalg::Poly;
using exactalg::VarList;

/// Truncated h-series with polynomial coefficients: an element of A/h^{N+1}A
/// written in the normal-form monomial basis of its algebra.
class HPoly {
 public:
  HPoly();
  HPoly(std::shared_ptr<const VarList> vars, std::size_t order);
  // Every coefficient is re-embedded into `vars`.
  HPoly(std::shared_ptr<const VarList> vars, std::size_t order, std::vector<Poly> coeffs);
  static HPoly lift(const Poly& p, std::shared_ptr<const VarList> vars, std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  const VarList& variables() const { return *vars_; }
  const std::shared_ptr<const VarList>& shared_variables() const { return vars_; }
  const std::vector<Poly>& coeffs() const { return coeffs_; }
  const Poly& operator[](std::size_t k) const { return coeffs_[k]; }

  bool is_zero() const;
  // Smallest k with a nonzero h^k coefficient.
  std::optional<std::size_t> valuation() const;
  int total_degree() const;

  void add_term(std::size_t hpow, const Exponents& e, const exactalg::Scalar& c);
  // this += c * h^shift * other (terms beyond the order are dropped)
  void add_shifted(const HPoly& other, std::size_t shift, const exactalg::Scalar& c = 1);

  HPoly truncated(std::size_t order) const;
  HPoly scaled(const exactalg::Scalar& c) const;
  HPoly scaled(const HSeries& s) const;
  HPoly shifted(std::size_t k) const;

  HPoly operator-() const;
  HPoly& operator+=(const HPoly& o);
  HPoly& operator-=(const HPoly& o);
  friend HPoly operator+(HPoly a, const HPoly& b) { return a += b; }
  friend HPoly operator-(HPoly a, const HPoly& b) { return a -= b; }
  friend bool operator==(const HPoly& a, const HPoly& b);
  friend bool operator!=(const HPoly& a, const HPoly& b) { return !(a == b); }

 private:
  std::shared_ptr<const VarList> vars_;
  std::vector<Poly> coeffs_;
};

std::string to_string(const HPoly& p);

}  // namespace deformata::defquant
