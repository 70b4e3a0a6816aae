#pragma once

#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "deformata/defquant/hpoly.hpp"
#include "deformata/defquant/hseries.hpp"

namespace deformata::defquant {

using GeneratorPair = std::pair<std::size_t, std::size_t>;

// f*g = sum over multi-indices a of h^|a|/a! (d_p^a f)(d_q^a g), one (q, p) =
// (position, momentum) pair per entry.
struct MoyalPresentation {
  std::vector<GeneratorPair> pairs;
};

// x_i x_j = q_ij x_j x_i, stored for i < j only; q_ij = 1 mod h.
struct QuantumPolyPresentation {
  std::map<GeneratorPair, HSeries> q;
};

// x_j x_i - x_i x_j = h [x_j, x_i], brackets stored for i < j as linear polynomials.
struct LiePresentation {
  std::map<GeneratorPair, Poly> brackets;
};

// x_j * x_i -> rules[(j, i)] for j > i; the h^0 part of every rule is x_i x_j.
struct RewritingPresentation {
  std::map<GeneratorPair, HPoly> rules;
  // Present when the algebra is homogeneous with deg(h) = 1 (e.g. a Rees algebra).
  std::optional<std::vector<int>> degrees;
};

using Presentation =
    std::variant<MoyalPresentation, QuantumPolyPresentation, LiePresentation, RewritingPresentation>;

// Authoring forms, keyed by variable names.
struct QRelation {
  std::string left, right;  // left*right = q * right*left
  HSeries q;
};
struct LieBracket {
  std::string left, right;  // [left, right] = value
  Poly value;
};
struct RewriteRule {
  std::string upper, lower;  // upper*lower -> rhs, upper declared after lower
  HPoly rhs;
};

/// N-th order quantum deformation of Q[x_1..x_n] presented by a star product.
///
/// Elements are HPoly in the basis of normal-form monomials (variables in ascending
/// declared order). The descriptor is immutable and cheap to copy; rewriting products
/// are memoized internally behind a mutex.
class DeformAlgebra {
 public:
  static DeformAlgebra moyal(VarList vars, const std::vector<std::pair<std::string, std::string>>& pairs,
                             std::size_t order);
  static DeformAlgebra quantum(VarList vars, const std::vector<QRelation>& relations, std::size_t order);
  static DeformAlgebra lie(VarList vars, const std::vector<LieBracket>& brackets, std::size_t order);
  static DeformAlgebra rewriting(VarList vars, const std::vector<RewriteRule>& rules, std::size_t order,
                                 std::optional<std::vector<int>> degrees = std::nullopt);

  const VarList& variables() const;
  const std::shared_ptr<const VarList>& shared_variables() const;
  std::size_t nvars() const;
  std::size_t order() const;
  const Presentation& presentation() const;
  std::string kind_name() const;
  std::size_t index_of(const std::string& var) const;

  HPoly zero() const;
  HPoly one() const;
  HPoly generator(std::size_t i) const;
  HPoly lift(const Poly& p) const;
  // Same variables and truncation order.
  bool owns(const HPoly& p) const;

  // Normal form of x_j * x_i for j > i.
  const HPoly& swap_rule(std::size_t j, std::size_t i) const;

  // Star product of two normal-form monomials, truncated at h^order.
  HPoly star_monomials(const Exponents& a, const Exponents& b, std::size_t order) const;

  friend bool operator==(const DeformAlgebra& a, const DeformAlgebra& b);

 private:
  struct Impl;
  explicit DeformAlgebra(std::shared_ptr<Impl> impl);
  HPoly right_multiply_generator(const Exponents& m, std::size_t gen, std::size_t order) const;

  std::shared_ptr<Impl> impl_;
};

// Throws InputError when a or b does not belong to alg.
HPoly star(const DeformAlgebra& alg, const HPoly& a, const HPoly& b);
HPoly commutator(const DeformAlgebra& alg, const HPoly& a, const HPoly& b);
HPoly star_power(const DeformAlgebra& alg, const HPoly& a, std::size_t k);

struct OreWitness {
  HPoly s_left;     // s^{N+1}
  HPoly a_left;     // sum_j s^{N-j} ad(s)^j(a)
  bool certified;   // s_left * a == a_left * s, recomputed
};

// Left Ore witness for a regular s (nonzero h^0 part); PreconditionError otherwise.
OreWitness ore_witness(const DeformAlgebra& alg, const HPoly& s, const HPoly& a);

// Reduces a word in the generators by applying swap rules at randomly chosen
// descents until every word is sorted. Independent of star(); used to test
// confluence of the rewriting system.
HPoly reduce_word(const DeformAlgebra& alg, const std::vector<std::size_t>& word, std::mt19937_64& rng);

}  // namespace deformata::defquant
