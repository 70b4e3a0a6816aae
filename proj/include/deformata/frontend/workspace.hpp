#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "deformata/defquant/algebra.hpp"
#include "deformata/defquant/rees.hpp"
#include "deformata/frontend/parse.hpp"
#include "deformata/hopfact/action.hpp"
#include "deformata/poisson/poisson.hpp"

namespace deformata::frontend {

using defquant::DeformAlgebra;
using defquant::FilteredPresentation;
using hopfact::HopfAction;
using hopfact::HopfAlgebra;
using poisson::PoissonStructure;

struct AlgebraEntry {
  DeformAlgebra algebra;
  // Kept for `kind = filtered` blocks, which build the Rees algebra.
  std::optional<FilteredPresentation> filtered;
};

struct BuildOptions {
  std::optional<std::size_t> order;       // overrides every algebra's `order`
  std::optional<std::string> default_hopf;  // for action blocks without `hopf`
};

/// Typed objects built from one or more documents sharing a single namespace.
struct Workspace {
  std::map<std::string, AlgebraEntry> algebras;
  std::map<std::string, PoissonStructure> poissons;
  std::map<std::string, HopfAlgebra> hopfs;
  std::map<std::string, HopfAction> actions;

  // The named object, or the only one when name is empty. InputError otherwise.
  const AlgebraEntry& algebra(const std::string& name = {}) const;
  const PoissonStructure& poisson(const std::string& name = {}) const;
  const HopfAlgebra& hopf(const std::string& name = {}) const;
  const HopfAction& action(const std::string& name = {}) const;
};

// "sweedler" or "cyclic:N"; nullopt for other names.
std::optional<HopfAlgebra> builtin_hopf(const std::string& name);

// Blocks are built in order of kind (algebra, poisson, hopf, action) so references
// may point forward. Semantic errors carry the offending position.
Workspace build(const std::vector<Document>& docs, const BuildOptions& opts = {});
Workspace build(const Document& doc, const BuildOptions& opts = {});

}  // namespace deformata::frontend
