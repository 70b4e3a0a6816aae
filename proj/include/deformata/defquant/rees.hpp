#pragma once

#include <vector>

#include "deformata/defquant/algebra.hpp"

namespace deformata::defquant {

// upper*lower - lower*upper = commutator, with `upper` declared after `lower`.
// Terms of `commutator` denote normal-ordered words.
struct FilteredRelation {
  std::size_t upper = 0;
  std::size_t lower = 0;
  Poly commutator;

  friend bool operator==(const FilteredRelation&, const FilteredRelation&) = default;
};

/// Z+-filtered algebra given by generators with degrees and commutation relations.
class FilteredPresentation {
 public:
  FilteredPresentation() = default;
  // Relations may name the pair in either order; they are normalized to upper > lower
  // and sorted. Throws InputError if a commutator term has filtration degree >= that of
  // the pair (the associated graded algebra would not be commutative).
  FilteredPresentation(VarList vars, std::vector<int> degrees, std::vector<FilteredRelation> relations);

  const VarList& variables() const { return vars_; }
  const std::vector<int>& degrees() const { return degrees_; }
  const std::vector<FilteredRelation>& relations() const { return relations_; }
  // Weighted degree of a monomial.
  int degree_of(const Exponents& e) const;

  friend bool operator==(const FilteredPresentation&, const FilteredPresentation&) = default;

 private:
  VarList vars_;
  std::vector<int> degrees_;
  std::vector<FilteredRelation> relations_;
};

// Homogenized Rees deformation: x_j*x_i -> x_i*x_j + sum_terms h^{drop} * term, where
// drop is the filtration-degree drop of the term; truncated at h^order.
DeformAlgebra rees_of_filtered(const FilteredPresentation& f, std::size_t order);

// Sets h = 1 in every rule of a homogeneous rewriting algebra; InputError otherwise.
FilteredPresentation dehomogenize(const DeformAlgebra& alg);

}  // namespace deformata::defquant
