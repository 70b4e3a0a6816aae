#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace deformata::exactalg {

// Exact rationals; gmp keeps them canonical (coprime, positive denominator, 0 == 0/1).
using Scalar = mpq_class;

std::string to_string(const Scalar& s);

using Exponents = std::vector<std::uint32_t>;
using VarList = std::vector<std::string>;

// Union of two variable lists: the order of `a`, followed by the new symbols of `b`.
VarList merge_variables(const VarList& a, const VarList& b);

/// Sparse multivariate polynomial over Q.
///
/// Terms are keyed by exponent vectors, one entry per declared variable, and kept in
/// lexicographic order of the exponent vectors (declared variable order). No stored
/// coefficient is zero. Binary operations between polynomials over different variable
/// lists first re-embed both operands into the merged list.
class Poly {
 public:
  using TermMap = std::map<Exponents, Scalar>;

  Poly();
  explicit Poly(VarList vars);
  Poly(std::shared_ptr<const VarList> vars, TermMap terms);

  static Poly constant(VarList vars, const Scalar& c);
  static Poly variable(VarList vars, std::string_view name);
  static Poly monomial(VarList vars, Exponents e, const Scalar& c = 1);

  const VarList& variables() const { return *vars_; }
  const std::shared_ptr<const VarList>& shared_variables() const { return vars_; }
  std::size_t nvars() const { return vars_->size(); }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  Scalar constant_term() const;
  Scalar coefficient(const Exponents& e) const;

  // -1 for the zero polynomial.
  int total_degree() const;
  std::uint32_t degree_in(std::size_t var) const;

  // Lexicographically largest term. Precondition: nonzero.
  const TermMap::value_type& leading() const { return *terms_.rbegin(); }

  // Re-embeds into `target`, which must contain every variable occurring in this polynomial.
  Poly with_variables(const std::shared_ptr<const VarList>& target) const;
  Poly with_variables(const VarList& target) const;

  void add_term(const Exponents& e, const Scalar& c);

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);

  Poly scaled(const Scalar& c) const;
  Poly times_monomial(const Exponents& e, const Scalar& c) const;
  // Negative exponents are rejected with InputError.
  Poly pow(long long e) const;
  Poly derivative(std::size_t var) const;
  Scalar evaluate(std::span<const Scalar> point) const;
  // Leading coefficient made 1; zero stays zero.
  Poly monic() const;

  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

 private:
  std::shared_ptr<const VarList> vars_;
  TermMap terms_;
};

// Both operands embedded into the merged variable list.
std::pair<Poly, Poly> align(const Poly& a, const Poly& b);

// All exponent vectors of total degree <= d over n variables, ordered by degree then lex.
std::vector<Exponents> monomials_up_to(std::size_t n, std::uint32_t d);

std::string to_string(const Poly& p);

}  // namespace deformata::exactalg
