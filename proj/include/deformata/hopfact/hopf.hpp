#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "deformata/exactalg/matrix.hpp"

namespace deformata::hopfact {

using exactalg::Scalar;
using Vec = std::vector<Scalar>;

// One term c * e_left (x) e_right of a coproduct.
struct TensorTerm {
  std::size_t left;
  std::size_t right;
  Scalar coeff;
};

/// Finite-dimensional Hopf algebra given by structure tensors on a labelled basis.
///
/// e_i e_j = sum_k mul[i][j][k] e_k, Delta(e_k) = comul[k], S(e_k) = sum_l antipode[k][l] e_l.
/// The constructor only checks shapes; hopf_verify checks the axioms.
class HopfAlgebra {
 public:
  HopfAlgebra() = default;
  HopfAlgebra(std::vector<std::string> labels, std::vector<std::vector<Vec>> mul, Vec unit,
              std::vector<std::vector<TensorTerm>> comul, Vec counit, std::vector<Vec> antipode);

  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<std::size_t> index_of(const std::string& label) const;

  const Vec& product(std::size_t i, std::size_t j) const { return mul_[i][j]; }
  const Vec& unit() const { return unit_; }
  const std::vector<TensorTerm>& coproduct(std::size_t k) const { return comul_[k]; }
  const Vec& counit() const { return counit_; }
  const Vec& antipode_of(std::size_t k) const { return antipode_[k]; }
  // Index of the basis element equal to the unit, if the unit is a basis vector.
  std::optional<std::size_t> unit_index() const;

  Vec basis_vector(std::size_t i) const;
  Vec multiply(const Vec& a, const Vec& b) const;
  Scalar counit(const Vec& a) const;
  Vec antipode(const Vec& a) const;
  // Row-major d x d coefficient grid of Delta(a).
  std::vector<Scalar> comultiply(const Vec& a) const;

  friend bool operator==(const HopfAlgebra&, const HopfAlgebra&);

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<Vec>> mul_;
  Vec unit_;
  std::vector<std::vector<TensorTerm>> comul_;
  Vec counit_;
  std::vector<Vec> antipode_;
};

struct AxiomCheck {
  std::string axiom;
  bool passed = true;
  // Basis labels of the first failing input, e.g. {"a", "g", "a"}.
  std::vector<std::string> witness;
};

struct HopfReport {
  std::vector<AxiomCheck> checks;
  bool passed() const;
};

HopfReport hopf_verify(const HopfAlgebra& h);

// Basis {1, g, a, ga}: g^2 = 1, a^2 = 0, ga = -ag, Delta(a) = a(x)1 + g(x)a, S(a) = -ga.
HopfAlgebra sweedler();
// table[i][j] = index of g_i g_j. InputError unless the table is a group.
HopfAlgebra group_algebra(const std::vector<std::vector<std::size_t>>& table,
                          std::vector<std::string> labels = {});
// Z/n with labels 1, g, g2, ..., g<n-1>.
HopfAlgebra cyclic_group_algebra(std::size_t n);

/// Subspace of a coordinate space, kept as a reduced row echelon basis.
class Subspace {
 public:
  Subspace() = default;
  Subspace(std::size_t ambient, const std::vector<Vec>& spanning);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  bool is_zero() const { return basis_.empty(); }
  const std::vector<Vec>& basis() const { return basis_; }
  bool contains(const Vec& v) const;
  // v minus its projection along the echelon basis; zero iff v is in the subspace.
  Vec reduce(const Vec& v) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  std::size_t ambient_ = 0;
  std::vector<Vec> basis_;
  std::vector<std::size_t> pivots_;
};

// Jacobson radical: x with Tr(L_{x e_j}) = 0 for every basis e_j.
Subspace radical(const HopfAlgebra& h);
// I, I^2, I^3, ... up to and including the first zero power (or the first repeat).
std::vector<Subspace> ideal_powers(const HopfAlgebra& h, const Subspace& ideal);
bool is_nilpotent(const HopfAlgebra& h, const Subspace& ideal);

struct HopfIdealCheck {
  bool is_hopf_ideal = true;
  std::string failed_condition;  // "left ideal", "right ideal", "counit", "coideal", "antipode"
  std::vector<std::string> witness;
};
HopfIdealCheck check_hopf_ideal(const HopfAlgebra& h, const Subspace& j);

// Largest subspace of j that is a Hopf ideal, by the refinement
// J' = {x in J : e_i x e_j in J, eps(x) = 0, Delta(x) in J(x)H + H(x)J, S(x) in J}.
Subspace largest_hopf_ideal(const HopfAlgebra& h, const Subspace& j);

struct Quotient {
  HopfAlgebra algebra;
  // Basis indices of h kept as the quotient basis (greedy in basis order).
  std::vector<std::size_t> kept;
};
// Requires a Hopf ideal; InputError otherwise.
Quotient quotient(const HopfAlgebra& h, const Subspace& j);

// Associated graded Hopf algebra of the radical filtration. PreconditionError when
// the radical is not a Hopf ideal.
HopfAlgebra gr_radical_hopf(const HopfAlgebra& h);

struct GrouplikeReport {
  std::vector<Vec> elements;
  // false when some dual multiplication operator has an eigenvalue outside Q, so
  // grouplikes over an extension field may have been missed.
  bool complete = true;
};
// Grouplikes are the characters of the dual algebra; each is read off from the
// rational joint eigenvalues of the dual left multiplications and re-verified.
GrouplikeReport grouplikes(const HopfAlgebra& h);

std::string element_to_string(const HopfAlgebra& h, const Vec& v);

}  // namespace deformata::hopfact
