#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "deformata/exactalg/matrix.hpp"
#include "deformata/hopfact/action.hpp"
#include "deformata/poisson/poisson.hpp"

namespace deformata::galois {

using exactalg::Poly;
using exactalg::RatFn;
using exactalg::RatFnMatrix;
using hopfact::HopfAction;
using poisson::PoissonStructure;
using Subset = std::vector<std::size_t>;  // sorted column indices, 0-based

/// Coaction components of elements of A0: entry (v, i) = rho_i(v) = h_i . v, computed
/// with the action reduced mod h.
struct CoactionMatrix {
  std::vector<Poly> elements;
  RatFnMatrix entries;
};

CoactionMatrix coaction_rows(const HopfAction& a, const std::vector<Poly>& elements);

struct GaloisBasis {
  std::vector<Poly> basis;  // v_1..v_r
  CoactionMatrix matrix;    // rows rho(v_i)
  std::size_t rank = 0;
  std::uint32_t degree_bound = 0;
};

// 2 * (largest relation degree) + 2.
std::uint32_t default_galois_degree(const HopfAction& a);

// Greedy scan of normal-form monomials (degree, then lex) keeping rows that raise the
// rank over Q(A0). InputError "increase degree bound" when the rank after degree d - 1
// differs from the rank after degree d.
GaloisBasis galois_basis(const HopfAction& a, std::optional<std::uint32_t> d = std::nullopt);

enum class ChartMode { Global, Neighbor };

struct PluckerChart {
  std::size_t r = 0;
  Subset I;
  ChartMode mode = ChartMode::Global;
  std::map<Subset, RatFn> minors;  // every r-subset
  std::map<Subset, RatFn> ratios;  // J -> Delta_J / Delta_I over the chart's J
};

// Without an explicit I: among nonzero minors, one of largest total degree, ties to
// the lexicographically smallest subset. Global mode uses every r-subset J; Neighbor
// mode only those with |J n I| = r - 1 (and J = I). InputError when B is rank
// deficient or the explicit minor vanishes.
PluckerChart plucker_ratios(const CoactionMatrix& b, ChartMode mode = ChartMode::Global,
                            std::optional<Subset> I = std::nullopt);

struct DefinedOverK {
  bool defined = true;
  std::vector<std::pair<Subset, RatFn>> non_constant;
};
DefinedOverK defined_over_k(const PluckerChart& chart);

// 1-based "{1,3}" rendering of a subset.
std::string subset_to_string(const Subset& s);

struct PoiscomFailure {
  std::size_t basis = 0;
  Poly probe;
  Poly lhs;  // rho_i({a0, f})
  Poly rhs;  // {a0, rho_i(f)}
};

struct PoiscomReport {
  std::string certification;  // how a0 was certified as a liftable invariant
  std::size_t checks = 0;
  std::vector<PoiscomFailure> failures;
  bool passed() const { return failures.empty(); }
};

// PreconditionError unless the canonical lift of a0 is invariant at full order.
void require_liftable_invariant(const HopfAction& a, const Poly& a0);

PoiscomReport poiscom_check(const HopfAction& a, const PoissonStructure& p, const Poly& a0,
                            const std::vector<Poly>& probes);

struct Eq3Entry {
  Subset J;
  RatFn direct;          // bracket_rat(a0, p_IJ)
  RatFn minor_identity;  // (Delta_I {a0,Delta_J} - Delta_J {a0,Delta_I}) / Delta_I^2
  bool trace_identity;   // {a0, Delta_J} = Tr(C) Delta_J
};

struct Eq3Report {
  std::string certification;
  GaloisBasis basis;
  PluckerChart chart;
  // {a0, b_ij} = sum_m c_im b_mj holds for C = R_I B_I^{-1}.
  bool c_matrix_consistent = false;
  RatFn trace_c;
  std::vector<Eq3Entry> entries;
  bool passed() const;
};

Eq3Report eq3_check(const HopfAction& a, const PoissonStructure& p, const Poly& a0,
                    std::optional<std::uint32_t> d = std::nullopt);

struct CenterCheckEntry {
  Subset J;
  RatFn ratio;
  poisson::Centrality centrality;
};

struct PluckerCenterReport {
  // false when the chart came from an action that failed module_algebra_check
  bool source_verified = true;
  std::vector<CenterCheckEntry> entries;  // non-constant ratios only
  bool all_central() const;
};

PluckerCenterReport plucker_center_check(const PluckerChart& chart, const PoissonStructure& p,
                                         bool source_verified = true);

}  // namespace deformata::galois
