#pragma once

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "deformata/defquant/algebra.hpp"
#include "deformata/hopfact/hopf.hpp"

namespace deformata::hopfact {

using defquant::DeformAlgebra;
using defquant::HPoly;
using exactalg::Poly;

// Image of one generator under one basis element of H.
struct GeneratorRule {
  std::string hopf_label;
  std::string generator;
  HPoly image;
};

/// Action of a finite-dimensional Hopf algebra on a deformation algebra, given on
/// generators and extended to normal-form monomials through the coproduct:
/// h.(m' x_j) = sum (h1.m') * (h2.x_j) - h * h.Rest, where m' * x_j = m + h*Rest.
///
/// Basis elements without explicit rules are filled in from products e_i e_j = c e_k of
/// basis elements already known; the unit acts as the identity unless given. Whether
/// the extension is well defined is what module_algebra_check decides.
class HopfAction {
 public:
  HopfAction(HopfAlgebra h, DeformAlgebra alg, const std::vector<GeneratorRule>& rules);
  // h.f = eps(h) f
  static HopfAction trivial(HopfAlgebra h, DeformAlgebra alg);

  const HopfAlgebra& hopf() const;
  const DeformAlgebra& algebra() const;
  const HPoly& generator_image(std::size_t basis, std::size_t gen) const;
  // Basis elements whose action came from explicit rules.
  const std::vector<bool>& specified() const;

  // Normal-form monomial under a basis element, memoized.
  HPoly act_monomial(std::size_t basis, const exactalg::Exponents& m) const;
  // The same extension computed in A0 from the h^0 parts of the generator images.
  Poly act_monomial_classical(std::size_t basis, const exactalg::Exponents& m) const;

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

HPoly act_basis(const HopfAction& a, std::size_t basis, const HPoly& f);
HPoly act(const HopfAction& a, const Vec& h, const HPoly& f);
// Action on A0, independent of the star product.
Poly act_classical(const HopfAction& a, const Vec& h, const Poly& f);

// 2 * (largest total degree of a defining relation).
std::uint32_t default_degree_bound(const DeformAlgebra& alg);

// Random element with 1 to 3 terms, small integer coefficients, polynomial degree
// at most max_deg and arbitrary h-powers.
HPoly random_element(const DeformAlgebra& alg, std::uint32_t max_deg, std::mt19937_64& rng);

struct ActionFailure {
  std::string kind;                     // "relation", "product", "composition", "unit"
  std::vector<std::string> hopf;        // basis labels involved
  std::vector<HPoly> inputs;
  HPoly lhs;
  HPoly rhs;
};

struct ModuleAlgebraReport {
  std::size_t trials = 0;
  std::uint32_t max_deg = 0;
  std::vector<ActionFailure> failures;
  bool passed() const { return failures.empty(); }
};

// (i) every basis h on every relation x_j x_i = NF(x_j * x_i), (ii) h.(u*v) =
// sum (h1.u)*(h2.v) on random pairs, (iii) (e_i e_j).u = e_i.(e_j.u), (iv) h.1 = eps(h).
ModuleAlgebraReport module_algebra_check(const HopfAction& a, std::size_t trials, std::uint32_t max_deg,
                                         std::mt19937_64& rng);

enum class Level { ModH, Full };
std::string to_string(Level l);

struct InvariantReport {
  Level level = Level::ModH;
  std::uint32_t degree_bound = 0;
  // Q-basis of invariants of degree <= d (for Full this includes h-multiples).
  std::vector<HPoly> basis;
  // Basis of the h^0 parts: the invariants of A0 that lift to order N.
  std::vector<Poly> leading;
};
InvariantReport invariants(const HopfAction& a, std::uint32_t d, Level level);

// x in H with x.m in hA (ModH) or x.m = 0 (Full) for every normal-form monomial of degree <= d.
Subspace annihilator(const HopfAction& a, std::uint32_t d, Level level);

struct InnerFaithfulReport {
  std::uint32_t degree_bound = 0;
  Level level = Level::ModH;
  Subspace annihilator;
  Subspace hopf_ideal;
  // The annihilator at degree d + 2 equals the one at d.
  bool stable = false;
  bool inner_faithful() const { return hopf_ideal.is_zero(); }
};
InnerFaithfulReport inner_faithful(const HopfAction& a, std::uint32_t d, Level level);

enum class GroupVerdict { Group, NotGroup, Inconclusive };
std::string to_string(GroupVerdict v);

struct FactorReport {
  GroupVerdict verdict = GroupVerdict::Inconclusive;
  InnerFaithfulReport ideal;
  Quotient quotient;
  GrouplikeReport grouplikes;  // in quotient coordinates
  std::vector<std::string> group_labels;
  std::vector<std::vector<std::size_t>> cayley;  // filled for Group
};
// Quotients H by the largest Hopf ideal inside the annihilator; "group" iff the quotient
// is spanned by its grouplikes.
FactorReport factors_through_group(const HopfAction& a, std::uint32_t d, Level level);

}  // namespace deformata::hopfact
