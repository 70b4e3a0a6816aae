#include "deformata/galois/galois.hpp"

#include <algorithm>

#include "deformata/errors.hpp"

namespace deformata::galois {

namespace {

std::vector<Subset> subsets(std::size_t d, std::size_t r) {
  std::vector<Subset> out;
  Subset cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == r) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i + (r - cur.size()) <= d; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

RatFn minor(const RatFnMatrix& m, const Subset& cols) { return exactalg::determinant(m.select_columns(cols)); }

std::size_t overlap(const Subset& a, const Subset& b) {
  std::size_t n = 0;
  for (auto x : a) n += std::count(b.begin(), b.end(), x);
  return n;
}

}  // namespace

CoactionMatrix coaction_rows(const HopfAction& a, const std::vector<Poly>& elements) {
  const auto& H = a.hopf();
  CoactionMatrix out;
  out.entries = RatFnMatrix(0, H.dim());
  for (const auto& f : elements) {
    std::vector<RatFn> row;
    for (std::size_t i = 0; i < H.dim(); ++i) row.emplace_back(hopfact::act_classical(a, H.basis_vector(i), f));
    out.entries.append_row(row);
    out.elements.push_back(f.with_variables(a.algebra().shared_variables()));
  }
  return out;
}

std::uint32_t default_galois_degree(const HopfAction& a) {
  return hopfact::default_degree_bound(a.algebra()) + 2;
}

GaloisBasis galois_basis(const HopfAction& a, std::optional<std::uint32_t> d_opt) {
  const std::uint32_t d = d_opt.value_or(default_galois_degree(a));
  const auto& A = a.algebra();
  const std::size_t full = a.hopf().dim();
  GaloisBasis out;
  out.degree_bound = d;
  out.matrix.entries = RatFnMatrix(0, full);
  std::optional<std::size_t> rank_below;
  for (const auto& e : exactalg::monomials_up_to(A.nvars(), d)) {
    std::uint32_t deg = 0;
    for (auto x : e) deg += x;
    if (deg == d && !rank_below) rank_below = out.rank;
    if (out.rank == full) break;
    Poly m(A.shared_variables(), {{e, exactalg::Scalar(1)}});
    CoactionMatrix row = coaction_rows(a, {m});
    RatFnMatrix trial = out.matrix.entries;
    trial.append_row(row.entries.row(0));
    if (exactalg::rank_function_field(trial) > out.rank) {
      out.matrix.entries = std::move(trial);
      out.matrix.elements.push_back(m);
      out.basis.push_back(m);
      ++out.rank;
    }
  }
  // Full rank cannot grow further, so it is stable by definition.
  if (out.rank < full && rank_below && *rank_below != out.rank) {
    throw InputError("galois rank grew from " + std::to_string(*rank_below) + " to " +
                     std::to_string(out.rank) + " at degree " + std::to_string(d) + "; increase degree bound");
  }
  return out;
}

PluckerChart plucker_ratios(const CoactionMatrix& b, ChartMode mode, std::optional<Subset> I) {
  const std::size_t r = b.entries.rows(), d = b.entries.cols();
  if (r == 0 || exactalg::rank_function_field(b.entries) != r) {
    throw InputError("coaction matrix is not of full row rank");
  }
  PluckerChart chart;
  chart.r = r;
  chart.mode = mode;
  for (const auto& s : subsets(d, r)) chart.minors.emplace(s, minor(b.entries, s));
  if (I) {
    std::sort(I->begin(), I->end());
    auto it = chart.minors.find(*I);
    if (it == chart.minors.end()) throw InputError("chart subset must have exactly r distinct columns in range");
    if (it->second.is_zero()) throw InputError("chosen minor " + subset_to_string(*I) + " vanishes");
    chart.I = *I;
  } else {
    int best = -1;
    for (const auto& [s, m] : chart.minors) {
      if (m.is_zero()) continue;
      const int deg = std::max(m.num().total_degree(), 0) + std::max(m.den().total_degree(), 0);
      if (deg > best) {
        best = deg;
        chart.I = s;
      }
    }
  }
  const RatFn& dI = chart.minors.at(chart.I);
  for (const auto& [s, m] : chart.minors) {
    if (mode == ChartMode::Neighbor && s != chart.I && overlap(s, chart.I) + 1 != r) continue;
    chart.ratios.emplace(s, m / dI);
  }
  return chart;
}

DefinedOverK defined_over_k(const PluckerChart& chart) {
  DefinedOverK out;
  for (const auto& [s, ratio] : chart.ratios) {
    if (!ratio.is_constant()) out.non_constant.emplace_back(s, ratio);
  }
  out.defined = out.non_constant.empty();
  return out;
}

std::string subset_to_string(const Subset& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i] + 1);
  return out + "}";
}

void require_liftable_invariant(const HopfAction& a, const Poly& a0) {
  const auto& H = a.hopf();
  const auto lift = a.algebra().lift(a0.with_variables(a.algebra().shared_variables()));
  for (std::size_t i = 0; i < H.dim(); ++i) {
    if (hopfact::act_basis(a, i, lift) != lift.scaled(H.counit()[i])) {
      throw PreconditionError("a0 = " + exactalg::to_string(a0) + " is not invariant at order " +
                              std::to_string(a.algebra().order()) + " under '" + H.labels()[i] + "'");
    }
  }
}

namespace {
std::string certification_text(const HopfAction& a) {
  return "canonical lift invariant at order " + std::to_string(a.algebra().order());
}
}  // namespace

PoiscomReport poiscom_check(const HopfAction& a, const PoissonStructure& p, const Poly& a0,
                            const std::vector<Poly>& probes) {
  require_liftable_invariant(a, a0);
  const auto& H = a.hopf();
  PoiscomReport rep;
  rep.certification = certification_text(a);
  for (const auto& f : probes) {
    const Poly br = poisson::bracket_poly(p, a0, f);
    for (std::size_t i = 0; i < H.dim(); ++i) {
      const auto e = H.basis_vector(i);
      Poly lhs = hopfact::act_classical(a, e, br);
      Poly rhs = poisson::bracket_poly(p, a0, hopfact::act_classical(a, e, f));
      ++rep.checks;
      if (lhs != rhs) rep.failures.push_back({i, f, lhs, rhs});
    }
  }
  return rep;
}

bool Eq3Report::passed() const {
  if (!c_matrix_consistent) return false;
  return std::all_of(entries.begin(), entries.end(), [](const Eq3Entry& e) {
    return e.direct.is_zero() && e.minor_identity.is_zero() && e.trace_identity;
  });
}

Eq3Report eq3_check(const HopfAction& a, const PoissonStructure& p, const Poly& a0,
                    std::optional<std::uint32_t> d) {
  require_liftable_invariant(a, a0);
  Eq3Report rep;
  rep.certification = certification_text(a);
  rep.basis = galois_basis(a, d);
  rep.chart = plucker_ratios(rep.basis.matrix);
  const RatFnMatrix& B = rep.basis.matrix.entries;
  const std::size_t r = B.rows(), dim = B.cols();
  const RatFn A0(a0.with_variables(p.shared_variables()));
  auto br = [&](const RatFn& f) { return poisson::bracket_rat(p, A0, f); };

  // R = {a0, B} entrywise; C = R_I B_I^{-1}.
  RatFnMatrix R(r, dim);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < dim; ++j) R(i, j) = br(B(i, j));
  }
  const RatFnMatrix BI = B.select_columns(rep.chart.I);
  const RatFnMatrix RI = R.select_columns(rep.chart.I);
  RatFnMatrix C(r, r);
  for (std::size_t i = 0; i < r; ++i) {
    auto row = exactalg::solve_left(BI, RI.row(i));
    for (std::size_t m = 0; m < r; ++m) C(i, m) = row[m];
  }
  rep.c_matrix_consistent = exactalg::multiply(C, B) == R;
  RatFn tr;
  for (std::size_t i = 0; i < r; ++i) tr += C(i, i);
  rep.trace_c = tr;

  const RatFn& dI = rep.chart.minors.at(rep.chart.I);
  const RatFn bI = br(dI);
  for (const auto& [J, ratio] : rep.chart.ratios) {
    const RatFn& dJ = rep.chart.minors.at(J);
    Eq3Entry e;
    e.J = J;
    e.direct = br(ratio);
    e.minor_identity = (dI * br(dJ) - dJ * bI) / (dI * dI);
    e.trace_identity = br(dJ) == tr * dJ;
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

bool PluckerCenterReport::all_central() const {
  return std::all_of(entries.begin(), entries.end(), [](const CenterCheckEntry& e) { return e.centrality.central; });
}

PluckerCenterReport plucker_center_check(const PluckerChart& chart, const PoissonStructure& p, bool source_verified) {
  PluckerCenterReport rep;
  rep.source_verified = source_verified;
  for (const auto& [J, ratio] : chart.ratios) {
    if (ratio.is_constant()) continue;
    rep.entries.push_back({J, ratio, poisson::is_central_rat(p, ratio)});
  }
  return rep;
}

}  // namespace deformata::galois
