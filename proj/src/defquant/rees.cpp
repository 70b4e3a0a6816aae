#include "deformata/defquant/rees.hpp"

#include <algorithm>

#include "deformata/errors.hpp"

namespace deformata::defquant {

using exactalg::Scalar;

FilteredPresentation::FilteredPresentation(VarList vars, std::vector<int> degrees,
                                           std::vector<FilteredRelation> relations)
    : vars_(std::move(vars)), degrees_(std::move(degrees)) {
  if (degrees_.size() != vars_.size()) throw InputError("one filtration degree per generator is required");
  for (int d : degrees_) {
    if (d < 0) throw InputError("filtration degrees must be non-negative");
  }
  auto shared = std::make_shared<const VarList>(vars_);
  for (auto r : relations) {
    if (r.upper >= vars_.size() || r.lower >= vars_.size() || r.upper == r.lower) {
      throw InputError("relation refers to an invalid generator pair");
    }
    r.commutator = r.commutator.with_variables(shared);
    if (r.upper < r.lower) {
      std::swap(r.upper, r.lower);
      r.commutator = -r.commutator;
    }
    const int lhs = degrees_[r.upper] + degrees_[r.lower];
    for (const auto& [e, c] : r.commutator.terms()) {
      if (degree_of(e) >= lhs) {
        throw InputError("filtration violation in relation for " + vars_[r.upper] + "*" + vars_[r.lower] +
                         ": a term has degree " + std::to_string(degree_of(e)) + " >= " + std::to_string(lhs));
      }
    }
    for (const auto& existing : relations_) {
      if (existing.upper == r.upper && existing.lower == r.lower) {
        throw InputError("duplicate relation for " + vars_[r.upper] + "*" + vars_[r.lower]);
      }
    }
    if (!r.commutator.is_zero()) relations_.push_back(std::move(r));
  }
  std::sort(relations_.begin(), relations_.end(), [](const auto& a, const auto& b) {
    return std::pair(a.upper, a.lower) < std::pair(b.upper, b.lower);
  });
}

int FilteredPresentation::degree_of(const Exponents& e) const {
  int d = 0;
  for (std::size_t i = 0; i < e.size(); ++i) d += degrees_[i] * static_cast<int>(e[i]);
  return d;
}

DeformAlgebra rees_of_filtered(const FilteredPresentation& f, std::size_t order) {
  auto vars = std::make_shared<const VarList>(f.variables());
  const std::size_t n = vars->size();
  std::vector<RewriteRule> rules;
  for (const auto& r : f.relations()) {
    HPoly rhs(vars, order);
    Exponents e(n, 0);
    e[r.upper] = 1;
    e[r.lower] = 1;
    rhs.add_term(0, e, 1);
    const int lhs = f.degrees()[r.upper] + f.degrees()[r.lower];
    for (const auto& [te, c] : r.commutator.terms()) {
      rhs.add_term(static_cast<std::size_t>(lhs - f.degree_of(te)), te, c);
    }
    rules.push_back({f.variables()[r.upper], f.variables()[r.lower], std::move(rhs)});
  }
  return DeformAlgebra::rewriting(f.variables(), rules, order, f.degrees());
}

FilteredPresentation dehomogenize(const DeformAlgebra& alg) {
  const auto* rp = std::get_if<RewritingPresentation>(&alg.presentation());
  if (rp == nullptr || !rp->degrees) throw InputError("dehomogenize needs a graded rewriting algebra");
  const auto& deg = *rp->degrees;
  auto weight = [&](const Exponents& e) {
    int d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) d += deg[i] * static_cast<int>(e[i]);
    return d;
  };
  std::vector<FilteredRelation> rels;
  for (const auto& [key, rule] : rp->rules) {
    const auto [j, i] = key;
    const int lhs = deg[j] + deg[i];
    Poly comm(alg.shared_variables(), {});
    for (std::size_t t = 1; t <= rule.order(); ++t) {
      for (const auto& [e, c] : rule[t].terms()) {
        if (weight(e) + static_cast<int>(t) != lhs) {
          throw InputError("rule for " + alg.variables()[j] + "*" + alg.variables()[i] +
                           " is not homogeneous with deg(h) = 1");
        }
        comm.add_term(e, c);
      }
    }
    if (!comm.is_zero()) rels.push_back({j, i, std::move(comm)});
  }
  return FilteredPresentation(alg.variables(), deg, std::move(rels));
}

}  // namespace deformata::defquant
