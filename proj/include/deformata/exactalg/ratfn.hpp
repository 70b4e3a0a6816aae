#pragma once

#include <optional>
#include <string>

#include "deformata/exactalg/poly.hpp"

namespace deformata::exactalg {

// Multivariate division by a single divisor in lex order: a = q*b + r.
struct DivisionResult {
  Poly quotient;
  Poly remainder;
};
DivisionResult divide(const Poly& a, const Poly& b);

// Throws InputError unless b divides a.
Poly divide_exact(const Poly& a, const Poly& b);

// Monic greatest common divisor (lex-leading coefficient 1); gcd(0, 0) = 0.
// Primitive-part pseudo-remainder sequence on the first occurring variable,
// recursing into contents.
Poly gcd(const Poly& a, const Poly& b);

/// Element of the rational function field Q(x_1, ..., x_n).
///
/// Always reduced: gcd(num, den) = 1 and the lex-leading coefficient of `den` is 1,
/// so equal fractions have identical representations.
class RatFn {
 public:
  RatFn();
  explicit RatFn(const Poly& p);
  // Throws InputError when den is zero.
  RatFn(const Poly& num, const Poly& den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const VarList& variables() const { return num_.variables(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_.is_constant(); }
  // deg(num) - deg(den); meaningless for zero.
  int degree() const { return num_.total_degree() - den_.total_degree(); }

  RatFn operator-() const;
  friend RatFn operator+(const RatFn& a, const RatFn& b);
  friend RatFn operator-(const RatFn& a, const RatFn& b);
  friend RatFn operator*(const RatFn& a, const RatFn& b);
  friend RatFn operator/(const RatFn& a, const RatFn& b);
  RatFn& operator+=(const RatFn& o) { return *this = *this + o; }
  RatFn& operator-=(const RatFn& o) { return *this = *this - o; }
  RatFn& operator*=(const RatFn& o) { return *this = *this * o; }

  RatFn derivative(std::size_t var) const;
  RatFn with_variables(const std::shared_ptr<const VarList>& target) const;
  // nullopt when the denominator vanishes at the point.
  std::optional<Scalar> evaluate(std::span<const Scalar> point) const;

  friend bool operator==(const RatFn& a, const RatFn& b);
  friend bool operator!=(const RatFn& a, const RatFn& b) { return !(a == b); }

 private:
  struct Reduced {};
  RatFn(Poly num, Poly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}

  Poly num_;
  Poly den_;
};

RatFn ratfn_normalize(const Poly& num, const Poly& den);

std::string to_string(const RatFn& f);

}  // namespace deformata::exactalg
