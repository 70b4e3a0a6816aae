#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "deformata/defquant/algebra.hpp"
#include "deformata/exactalg/ratfn.hpp"

namespace deformata::poisson {

using defquant::DeformAlgebra;
using defquant::GeneratorPair;
using defquant::HPoly;
using exactalg::Exponents;
using exactalg::Poly;
using exactalg::RatFn;
using exactalg::Scalar;
using exactalg::VarList;

/// Bracket on Q[x_1..x_n] given on generator pairs and extended as a biderivation:
/// {f,g} = sum_{i<j} {x_i,x_j} (d_i f d_j g - d_j f d_i g).
class PoissonStructure {
 public:
  PoissonStructure() = default;
  // Pairs may be named in either order; antisymmetry is applied on storage.
  PoissonStructure(VarList vars, std::map<GeneratorPair, Poly> brackets, int depth = 1);
  static PoissonStructure from_named(VarList vars, const std::vector<std::tuple<std::string, std::string, Poly>>& br,
                                     int depth = 1);

  const VarList& variables() const { return *vars_; }
  const std::shared_ptr<const VarList>& shared_variables() const { return vars_; }
  std::size_t nvars() const { return vars_->size(); }
  int depth() const { return depth_; }
  // Stored brackets, i < j, nonzero only.
  const std::map<GeneratorPair, Poly>& brackets() const { return brackets_; }
  // {x_i, x_j} for any i, j.
  Poly generator_bracket(std::size_t i, std::size_t j) const;
  Poly generator(std::size_t i) const;

  friend bool operator==(const PoissonStructure&, const PoissonStructure&);

 private:
  std::shared_ptr<const VarList> vars_ = std::make_shared<const VarList>();
  std::map<GeneratorPair, Poly> brackets_;
  int depth_ = 1;
};

struct InducedBracket {
  PoissonStructure structure;
  // h-adic valuation of [x_i, x_j] per pair i < j (nullopt: commute through the order).
  std::map<GeneratorPair, std::optional<std::size_t>> valuations;
};

// Depth m = minimal valuation of generator commutators; bracket = their h^m coefficients.
// InputError when every generator pair commutes through the truncation order.
InducedBracket induced_bracket_report(const DeformAlgebra& alg);
PoissonStructure induced_bracket(const DeformAlgebra& alg);

// h^depth coefficient of [a, b] for arbitrary lifts; equals bracket_poly on the h^0 parts.
Poly lifted_bracket(const DeformAlgebra& alg, std::size_t depth, const HPoly& a, const HPoly& b);

Poly bracket_poly(const PoissonStructure& p, const Poly& f, const Poly& g);
RatFn bracket_rat(const PoissonStructure& p, const RatFn& f, const RatFn& g);
// {f,{g,h}} + {g,{h,f}} + {h,{f,g}}
Poly jacobi_defect(const PoissonStructure& p, const Poly& f, const Poly& g, const Poly& h);

struct CenterReport {
  std::uint32_t degree_bound = 0;
  std::vector<Poly> basis;
  bool trivial = false;
  // Every basis element re-checked against {f, x_i} = 0.
  bool certified = false;
};

// Degree-bounded polynomial Poisson center: nullspace of f -> ({f, x_i})_i on the
// coefficient space of polynomials of degree <= d. Evidence only; says nothing about
// the center of the fraction field beyond that bound.
CenterReport polynomial_center(const PoissonStructure& p, std::uint32_t d);

struct Centrality {
  bool central = false;
  std::optional<std::size_t> witness_generator;
  RatFn witness_bracket;  // {f, x_i} at the first generator where it is nonzero
};

// {f, x_i} = 0 for every generator; sufficient for centrality in Q(A0) because the
// bracket is a biderivation.
Centrality is_central_rat(const PoissonStructure& p, const RatFn& f);

}  // namespace deformata::poisson
