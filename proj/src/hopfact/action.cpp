#include "deformata/hopfact/action.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>

#include "deformata/errors.hpp"

namespace deformata::hopfact {

using exactalg::Exponents;
using exactalg::ScalarMatrix;

namespace {

// Raised while completing the action table when a needed basis element is still unknown.
struct MissingAction {
  std::size_t basis;
};

Exponents unit_exp(std::size_t n, std::size_t i) {
  Exponents e(n, 0);
  e[i] = 1;
  return e;
}

}  // namespace

struct HopfAction::Impl {
  HopfAlgebra h;
  DeformAlgebra alg;
  std::vector<std::vector<std::optional<HPoly>>> gen;  // [basis][generator]
  std::vector<bool> specified;
  mutable std::mutex mu;
  mutable std::map<std::pair<std::size_t, Exponents>, HPoly> memo;
  mutable std::map<std::pair<std::size_t, Exponents>, Poly> memo_classical;

  Impl(HopfAlgebra hh, DeformAlgebra aa) : h(std::move(hh)), alg(std::move(aa)) {}

  const HPoly& image(std::size_t i, std::size_t j) const {
    if (!gen[i][j]) throw MissingAction{i};
    return *gen[i][j];
  }

  HPoly monomial(std::size_t i, const Exponents& m) const {
    {
      std::lock_guard lock(mu);
      auto it = memo.find({i, m});
      if (it != memo.end()) return it->second;
    }
    const std::size_t n = alg.nvars();
    std::size_t last = n, total = 0;
    for (std::size_t v = 0; v < n; ++v) {
      total += m[v];
      if (m[v] > 0) last = v;
    }
    HPoly result = alg.zero();
    if (total == 0) {
      result = alg.one().scaled(h.counit()[i]);
    } else if (total == 1) {
      result = image(i, last);
    } else {
      Exponents head = m;
      --head[last];
      for (const auto& t : h.coproduct(i)) {
        result += star(alg, monomial(t.left, head), image(t.right, last)).scaled(t.coeff);
      }
      HPoly rest = alg.star_monomials(head, unit_exp(n, last), alg.order());
      rest.add_term(0, m, -1);
      if (!rest.is_zero()) {
        if (!rest[0].is_zero()) throw PreconditionError("star product is not flat on a normal-form monomial");
        result -= apply(i, rest);
      }
    }
    std::lock_guard lock(mu);
    memo.emplace(std::pair{i, m}, result);
    return result;
  }

  HPoly apply(std::size_t i, const HPoly& f) const {
    HPoly out = alg.zero();
    for (std::size_t k = 0; k <= f.order(); ++k) {
      for (const auto& [e, c] : f[k].terms()) out.add_shifted(monomial(i, e), k, c);
    }
    return out;
  }

  Poly classical(std::size_t i, const Exponents& m) const {
    {
      std::lock_guard lock(mu);
      auto it = memo_classical.find({i, m});
      if (it != memo_classical.end()) return it->second;
    }
    const std::size_t n = alg.nvars();
    std::size_t last = n, total = 0;
    for (std::size_t v = 0; v < n; ++v) {
      total += m[v];
      if (m[v] > 0) last = v;
    }
    Poly result(alg.shared_variables(), {});
    if (total == 0) {
      result.add_term(Exponents(n, 0), h.counit()[i]);
    } else if (total == 1) {
      result = image(i, last)[0];
    } else {
      Exponents head = m;
      --head[last];
      for (const auto& t : h.coproduct(i)) {
        result += (classical(t.left, head) * image(t.right, last)[0]).scaled(t.coeff);
      }
    }
    std::lock_guard lock(mu);
    memo_classical.emplace(std::pair{i, m}, result);
    return result;
  }

  void complete() {
    const std::size_t d = h.dim(), n = alg.nvars();
    auto known = [&](std::size_t k) { return gen[k][0].has_value() || n == 0; };
    bool progress = true;
    while (progress) {
      progress = false;
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
          if (!known(i) || !known(j)) continue;
          const Vec& p = h.product(i, j);
          std::optional<std::size_t> k;
          std::size_t nonzero = 0;
          for (std::size_t t = 0; t < d; ++t) {
            if (p[t] != 0) {
              k = t;
              ++nonzero;
            }
          }
          if (nonzero != 1 || known(*k)) continue;
          try {
            std::vector<std::optional<HPoly>> imgs(n);
            for (std::size_t v = 0; v < n; ++v) {
              imgs[v] = apply(i, image(j, v)).scaled(1 / p[*k]);
            }
            gen[*k] = std::move(imgs);
            progress = true;
          } catch (const MissingAction&) {
          }
        }
      }
    }
    for (std::size_t k = 0; k < d; ++k) {
      if (!known(k)) {
        throw InputError("action of basis element '" + h.labels()[k] + "' is not determined by the given rules");
      }
    }
  }
};

HopfAction::HopfAction(HopfAlgebra h, DeformAlgebra alg, const std::vector<GeneratorRule>& rules)
    : impl_(std::make_shared<Impl>(std::move(h), std::move(alg))) {
  auto& I = *impl_;
  const std::size_t d = I.h.dim(), n = I.alg.nvars();
  I.gen.assign(d, std::vector<std::optional<HPoly>>(n));
  I.specified.assign(d, false);
  for (const auto& r : rules) {
    auto bi = I.h.index_of(r.hopf_label);
    if (!bi) throw InputError("unknown Hopf basis element '" + r.hopf_label + "'");
    const std::size_t gi = I.alg.index_of(r.generator);
    HPoly img = r.image;
    if (img.variables() != I.alg.variables()) {
      std::vector<Poly> cs;
      for (const auto& c : img.coeffs()) cs.push_back(c.with_variables(I.alg.shared_variables()));
      img = HPoly(I.alg.shared_variables(), img.order(), std::move(cs));
    }
    img = img.truncated(I.alg.order());
    if (I.gen[*bi][gi]) throw InputError("duplicate rule for " + r.hopf_label + " . " + r.generator);
    I.gen[*bi][gi] = std::move(img);
    I.specified[*bi] = true;
  }
  for (std::size_t b = 0; b < d; ++b) {
    if (!I.specified[b]) continue;
    for (std::size_t v = 0; v < n; ++v) {
      if (!I.gen[b][v]) {
        throw InputError("rules for '" + I.h.labels()[b] + "' do not cover generator '" + I.alg.variables()[v] + "'");
      }
    }
  }
  if (auto u = I.h.unit_index(); u && !I.specified[*u]) {
    for (std::size_t v = 0; v < n; ++v) I.gen[*u][v] = I.alg.generator(v);
  }
  I.complete();
}

HopfAction HopfAction::trivial(HopfAlgebra h, DeformAlgebra alg) {
  std::vector<GeneratorRule> rules;
  for (std::size_t b = 0; b < h.dim(); ++b) {
    for (std::size_t v = 0; v < alg.nvars(); ++v) {
      rules.push_back({h.labels()[b], alg.variables()[v], alg.generator(v).scaled(h.counit()[b])});
    }
  }
  return HopfAction(std::move(h), std::move(alg), rules);
}

const HopfAlgebra& HopfAction::hopf() const { return impl_->h; }
const DeformAlgebra& HopfAction::algebra() const { return impl_->alg; }
const HPoly& HopfAction::generator_image(std::size_t basis, std::size_t gen) const {
  return impl_->image(basis, gen);
}
const std::vector<bool>& HopfAction::specified() const { return impl_->specified; }

HPoly HopfAction::act_monomial(std::size_t basis, const Exponents& m) const { return impl_->monomial(basis, m); }

Poly HopfAction::act_monomial_classical(std::size_t basis, const Exponents& m) const {
  return impl_->classical(basis, m);
}

HPoly act_basis(const HopfAction& a, std::size_t basis, const HPoly& f) {
  if (!a.algebra().owns(f)) throw InputError("act: element does not belong to the algebra");
  HPoly out = a.algebra().zero();
  for (std::size_t k = 0; k <= f.order(); ++k) {
    for (const auto& [e, c] : f[k].terms()) out.add_shifted(a.act_monomial(basis, e), k, c);
  }
  return out;
}

HPoly act(const HopfAction& a, const Vec& h, const HPoly& f) {
  HPoly out = a.algebra().zero();
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (h[i] != 0) out += act_basis(a, i, f).scaled(h[i]);
  }
  return out;
}

Poly act_classical(const HopfAction& a, const Vec& h, const Poly& f_in) {
  const Poly f = f_in.with_variables(a.algebra().shared_variables());
  Poly out(a.algebra().shared_variables(), {});
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (h[i] == 0) continue;
    for (const auto& [e, c] : f.terms()) out += a.act_monomial_classical(i, e).scaled(c * h[i]);
  }
  return out;
}

std::uint32_t default_degree_bound(const DeformAlgebra& alg) {
  int deg = 2;
  if (const auto* r = std::get_if<defquant::RewritingPresentation>(&alg.presentation())) {
    for (const auto& [k, rule] : r->rules) deg = std::max(deg, rule.total_degree());
  }
  return static_cast<std::uint32_t>(2 * deg);
}

HPoly random_element(const DeformAlgebra& alg, std::uint32_t max_deg, std::mt19937_64& rng) {
  const std::size_t n = alg.nvars();
  HPoly out = alg.zero();
  const int nterms = std::uniform_int_distribution<int>(1, 3)(rng);
  for (int t = 0; t < nterms; ++t) {
    Exponents e(n, 0);
    const auto deg = std::uniform_int_distribution<std::uint32_t>(0, max_deg)(rng);
    for (std::uint32_t k = 0; k < deg && n > 0; ++k) ++e[std::uniform_int_distribution<std::size_t>(0, n - 1)(rng)];
    const std::size_t hp = std::bernoulli_distribution(0.5)(rng)
                               ? 0
                               : std::uniform_int_distribution<std::size_t>(0, alg.order())(rng);
    int c = std::uniform_int_distribution<int>(1, 3)(rng);
    if (std::bernoulli_distribution(0.5)(rng)) c = -c;
    out.add_term(hp, e, c);
  }
  return out;
}

ModuleAlgebraReport module_algebra_check(const HopfAction& a, std::size_t trials, std::uint32_t max_deg,
                                         std::mt19937_64& rng) {
  const auto& H = a.hopf();
  const auto& A = a.algebra();
  const std::size_t d = H.dim(), n = A.nvars();
  ModuleAlgebraReport rep;
  rep.trials = trials;
  rep.max_deg = max_deg;
  auto coproduct_side = [&](std::size_t i, const HPoly& u, const HPoly& v) {
    HPoly s = A.zero();
    for (const auto& t : H.coproduct(i)) {
      s += star(A, act_basis(a, t.left, u), act_basis(a, t.right, v)).scaled(t.coeff);
    }
    return s;
  };

  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      const HPoly xj = A.generator(j), xi = A.generator(i);
      const HPoly nf = star(A, xj, xi);
      for (std::size_t b = 0; b < d; ++b) {
        HPoly lhs = coproduct_side(b, xj, xi);
        HPoly rhs = act_basis(a, b, nf);
        if (lhs != rhs) rep.failures.push_back({"relation", {H.labels()[b]}, {xj, xi}, lhs, rhs});
      }
    }
  }

  for (std::size_t b = 0; b < d; ++b) {
    HPoly lhs = act_basis(a, b, A.one());
    HPoly rhs = A.one().scaled(H.counit()[b]);
    if (lhs != rhs) rep.failures.push_back({"unit", {H.labels()[b]}, {A.one()}, lhs, rhs});
  }

  for (std::size_t t = 0; t < trials; ++t) {
    const HPoly u = random_element(A, max_deg, rng);
    const HPoly v = random_element(A, max_deg, rng);
    const HPoly uv = star(A, u, v);
    bool failed = false;
    for (std::size_t b = 0; b < d && !failed; ++b) {
      HPoly lhs = act_basis(a, b, uv);
      HPoly rhs = coproduct_side(b, u, v);
      if (lhs != rhs) {
        rep.failures.push_back({"product", {H.labels()[b]}, {u, v}, lhs, rhs});
        failed = true;
      }
    }
    if (failed) break;
  }

  const std::size_t comp_trials = std::min<std::size_t>(trials, 3);
  for (std::size_t t = 0; t < comp_trials; ++t) {
    const HPoly u = random_element(A, max_deg, rng);
    bool failed = false;
    for (std::size_t i = 0; i < d && !failed; ++i) {
      for (std::size_t j = 0; j < d && !failed; ++j) {
        HPoly lhs = act(a, H.product(i, j), u);
        HPoly rhs = act_basis(a, i, act_basis(a, j, u));
        if (lhs != rhs) {
          rep.failures.push_back({"composition", {H.labels()[i], H.labels()[j]}, {u}, lhs, rhs});
          failed = true;
        }
      }
    }
    if (failed) break;
  }
  return rep;
}

std::string to_string(Level l) { return l == Level::ModH ? "mod-h" : "full"; }

InvariantReport invariants(const HopfAction& a, std::uint32_t d, Level level) {
  const auto& H = a.hopf();
  const auto& A = a.algebra();
  const auto monos = exactalg::monomials_up_to(A.nvars(), d);
  const std::size_t hmax = level == Level::Full ? A.order() : 0;
  // Unknown (k, m): coefficient of h^k m.
  std::vector<std::pair<std::size_t, std::size_t>> unknowns;
  for (std::size_t k = 0; k <= hmax; ++k) {
    for (std::size_t m = 0; m < monos.size(); ++m) unknowns.emplace_back(k, m);
  }
  std::map<std::tuple<std::size_t, std::size_t, Exponents>, std::size_t> row_of;
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> cols(unknowns.size());
  auto put = [&](std::size_t col, std::size_t b, std::size_t hp, const Exponents& e, const Scalar& c) {
    auto [it, ins] = row_of.try_emplace({b, hp, e}, row_of.size());
    cols[col].emplace_back(it->second, c);
  };
  for (std::size_t u = 0; u < unknowns.size(); ++u) {
    const auto [k, mi] = unknowns[u];
    for (std::size_t b = 0; b < H.dim(); ++b) {
      if (level == Level::Full) {
        HPoly w = A.zero();
        w.add_shifted(a.act_monomial(b, monos[mi]), k);
        w.add_term(k, monos[mi], -H.counit()[b]);
        for (std::size_t t = 0; t <= w.order(); ++t) {
          for (const auto& [e, c] : w[t].terms()) put(u, b, t, e, c);
        }
      } else {
        Poly w = a.act_monomial_classical(b, monos[mi]);
        w.add_term(monos[mi], -H.counit()[b]);
        for (const auto& [e, c] : w.terms()) put(u, b, 0, e, c);
      }
    }
  }
  ScalarMatrix sys(row_of.size(), unknowns.size(), Scalar(0));
  for (std::size_t u = 0; u < unknowns.size(); ++u) {
    for (const auto& [r, c] : cols[u]) sys(r, u) += c;
  }
  InvariantReport rep;
  rep.level = level;
  rep.degree_bound = d;
  std::vector<Vec> lead_rows;
  for (const auto& v : exactalg::nullspace_scalar(sys)) {
    HPoly f(A.shared_variables(), hmax);
    Vec lead(monos.size(), Scalar(0));
    for (std::size_t u = 0; u < unknowns.size(); ++u) {
      if (v[u] == 0) continue;
      f.add_term(unknowns[u].first, monos[unknowns[u].second], v[u]);
      if (unknowns[u].first == 0) lead[unknowns[u].second] = v[u];
    }
    rep.basis.push_back(std::move(f));
    lead_rows.push_back(std::move(lead));
  }
  for (const auto& r : exactalg::row_basis(lead_rows, monos.size())) {
    Poly p(A.shared_variables(), {});
    for (std::size_t m = 0; m < monos.size(); ++m) p.add_term(monos[m], r[m]);
    rep.leading.push_back(std::move(p));
  }
  return rep;
}

Subspace annihilator(const HopfAction& a, std::uint32_t d, Level level) {
  const auto& H = a.hopf();
  const auto monos = exactalg::monomials_up_to(a.algebra().nvars(), d);
  std::map<std::tuple<std::size_t, std::size_t, Exponents>, std::size_t> row_of;
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> cols(H.dim());
  for (std::size_t b = 0; b < H.dim(); ++b) {
    for (std::size_t mi = 0; mi < monos.size(); ++mi) {
      if (level == Level::Full) {
        const HPoly w = a.act_monomial(b, monos[mi]);
        for (std::size_t t = 0; t <= w.order(); ++t) {
          for (const auto& [e, c] : w[t].terms()) {
            auto [it, ins] = row_of.try_emplace({mi, t, e}, row_of.size());
            cols[b].emplace_back(it->second, c);
          }
        }
      } else {
        const Poly w = a.act_monomial_classical(b, monos[mi]);
        for (const auto& [e, c] : w.terms()) {
          auto [it, ins] = row_of.try_emplace({mi, 0, e}, row_of.size());
          cols[b].emplace_back(it->second, c);
        }
      }
    }
  }
  ScalarMatrix sys(row_of.size(), H.dim(), Scalar(0));
  for (std::size_t b = 0; b < H.dim(); ++b) {
    for (const auto& [r, c] : cols[b]) sys(r, b) += c;
  }
  return Subspace(H.dim(), exactalg::nullspace_scalar(sys));
}

InnerFaithfulReport inner_faithful(const HopfAction& a, std::uint32_t d, Level level) {
  InnerFaithfulReport rep;
  rep.degree_bound = d;
  rep.level = level;
  rep.annihilator = annihilator(a, d, level);
  rep.stable = annihilator(a, d + 2, level) == rep.annihilator;
  rep.hopf_ideal = largest_hopf_ideal(a.hopf(), rep.annihilator);
  return rep;
}

std::string to_string(GroupVerdict v) {
  switch (v) {
    case GroupVerdict::Group:
      return "group";
    case GroupVerdict::NotGroup:
      return "not a group action";
    case GroupVerdict::Inconclusive:
      break;
  }
  return "inconclusive";
}

FactorReport factors_through_group(const HopfAction& a, std::uint32_t d, Level level) {
  FactorReport rep;
  rep.ideal = inner_faithful(a, d, level);
  rep.quotient = quotient(a.hopf(), rep.ideal.hopf_ideal);
  const HopfAlgebra& Q = rep.quotient.algebra;
  rep.grouplikes = grouplikes(Q);
  const auto& G = rep.grouplikes.elements;
  if (G.size() == Q.dim()) {
    rep.verdict = GroupVerdict::Group;
    for (const auto& g : G) rep.group_labels.push_back(element_to_string(Q, g));
    rep.cayley.assign(G.size(), std::vector<std::size_t>(G.size()));
    for (std::size_t i = 0; i < G.size(); ++i) {
      for (std::size_t j = 0; j < G.size(); ++j) {
        const Vec p = Q.multiply(G[i], G[j]);
        auto it = std::find(G.begin(), G.end(), p);
        if (it == G.end()) throw PreconditionError("grouplikes are not closed under multiplication");
        rep.cayley[i][j] = static_cast<std::size_t>(it - G.begin());
      }
    }
  } else {
    rep.verdict = rep.grouplikes.complete ? GroupVerdict::NotGroup : GroupVerdict::Inconclusive;
  }
  return rep;
}

}  // namespace deformata::hopfact
