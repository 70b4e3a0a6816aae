#include "deformata/poisson/poisson.hpp"

#include <algorithm>

#include "deformata/errors.hpp"
#include "deformata/exactalg/matrix.hpp"

namespace deformata::poisson {

PoissonStructure::PoissonStructure(VarList vars, std::map<GeneratorPair, Poly> brackets, int depth)
    : vars_(std::make_shared<const VarList>(std::move(vars))), depth_(depth) {
  for (auto& [key, value] : brackets) {
    auto [i, j] = key;
    if (i >= nvars() || j >= nvars()) throw InputError("bracket refers to an unknown generator");
    Poly v = value.with_variables(vars_);
    if (i == j) {
      if (!v.is_zero()) throw InputError("antisymmetry violated: {x,x} != 0");
      continue;
    }
    GeneratorPair k = i < j ? key : GeneratorPair{j, i};
    Poly stored = i < j ? v : -v;
    auto [it, inserted] = brackets_.try_emplace(k, stored);
    if (!inserted && it->second != stored) throw InputError("conflicting values for the same bracket pair");
  }
  std::erase_if(brackets_, [](const auto& kv) { return kv.second.is_zero(); });
}

PoissonStructure PoissonStructure::from_named(VarList vars,
                                              const std::vector<std::tuple<std::string, std::string, Poly>>& br,
                                              int depth) {
  std::map<GeneratorPair, Poly> m;
  auto index = [&](const std::string& s) {
    auto it = std::find(vars.begin(), vars.end(), s);
    if (it == vars.end()) throw InputError("unknown variable '" + s + "'");
    return static_cast<std::size_t>(it - vars.begin());
  };
  auto shared = std::make_shared<const VarList>(vars);
  for (const auto& [a, b, v] : br) {
    std::size_t i = index(a), j = index(b);
    if (i == j) {
      if (!v.is_zero()) throw InputError("antisymmetry violated: {" + a + "," + a + "} != 0");
      continue;
    }
    GeneratorPair k = i < j ? GeneratorPair{i, j} : GeneratorPair{j, i};
    Poly stored = i < j ? v.with_variables(shared) : -v.with_variables(shared);
    if (m.count(k)) throw InputError("duplicate bracket for {" + a + "," + b + "}");
    m.emplace(k, stored);
  }
  return PoissonStructure(std::move(vars), std::move(m), depth);
}

Poly PoissonStructure::generator_bracket(std::size_t i, std::size_t j) const {
  if (i == j) return Poly(vars_, {});
  auto it = brackets_.find(i < j ? GeneratorPair{i, j} : GeneratorPair{j, i});
  if (it == brackets_.end()) return Poly(vars_, {});
  return i < j ? it->second : -it->second;
}

Poly PoissonStructure::generator(std::size_t i) const {
  Exponents e(nvars(), 0);
  e[i] = 1;
  return Poly(vars_, {{e, Scalar(1)}});
}

bool operator==(const PoissonStructure& a, const PoissonStructure& b) {
  return a.variables() == b.variables() && a.depth_ == b.depth_ && a.brackets_ == b.brackets_;
}

InducedBracket induced_bracket_report(const DeformAlgebra& alg) {
  const std::size_t n = alg.nvars();
  std::map<GeneratorPair, HPoly> comms;
  InducedBracket out;
  std::optional<std::size_t> depth;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      HPoly c = defquant::commutator(alg, alg.generator(i), alg.generator(j));
      auto v = c.valuation();
      out.valuations[{i, j}] = v;
      if (v && (!depth || *v < *depth)) depth = v;
      comms.emplace(GeneratorPair{i, j}, std::move(c));
    }
  }
  if (!depth) {
    throw InputError("no bracket at order <= " + std::to_string(alg.order()) + ": all generators commute");
  }
  std::map<GeneratorPair, Poly> br;
  for (const auto& [k, c] : comms) br.emplace(k, c[*depth]);
  out.structure = PoissonStructure(alg.variables(), std::move(br), static_cast<int>(*depth));
  return out;
}

PoissonStructure induced_bracket(const DeformAlgebra& alg) { return induced_bracket_report(alg).structure; }

Poly lifted_bracket(const DeformAlgebra& alg, std::size_t depth, const HPoly& a, const HPoly& b) {
  HPoly c = defquant::commutator(alg, a, b);
  if (depth > c.order()) throw InputError("depth exceeds the truncation order");
  return c[depth];
}

Poly bracket_poly(const PoissonStructure& p, const Poly& f_in, const Poly& g_in) {
  const Poly f = f_in.with_variables(p.shared_variables());
  const Poly g = g_in.with_variables(p.shared_variables());
  Poly out(p.shared_variables(), {});
  if (f.is_constant() || g.is_constant()) return out;
  const std::size_t n = p.nvars();
  std::vector<Poly> df(n), dg(n);
  for (std::size_t i = 0; i < n; ++i) {
    df[i] = f.derivative(i);
    dg[i] = g.derivative(i);
  }
  for (const auto& [key, b] : p.brackets()) {
    const auto [i, j] = key;
    Poly t = df[i] * dg[j] - df[j] * dg[i];
    if (!t.is_zero()) out += b * t;
  }
  return out;
}

RatFn bracket_rat(const PoissonStructure& p, const RatFn& f_in, const RatFn& g_in) {
  const RatFn f = f_in.with_variables(p.shared_variables());
  const RatFn g = g_in.with_variables(p.shared_variables());
  if (f.is_constant() || g.is_constant()) return RatFn(Poly(p.shared_variables(), {}));
  if (f.is_polynomial() && g.is_polynomial()) {
    const Scalar s = 1 / (f.den().constant_term() * g.den().constant_term());
    return RatFn(bracket_poly(p, f.num(), g.num()).scaled(s));
  }
  // f = a/b, g = c/d: d_i f = (a_i b - a b_i)/b^2, so the bracket has denominator b^2 d^2.
  const Poly &a = f.num(), &b = f.den(), &c = g.num(), &d = g.den();
  const std::size_t n = p.nvars();
  std::vector<Poly> nf(n), ng(n);
  for (std::size_t i = 0; i < n; ++i) {
    nf[i] = a.derivative(i) * b - a * b.derivative(i);
    ng[i] = c.derivative(i) * d - c * d.derivative(i);
  }
  Poly num(p.shared_variables(), {});
  for (const auto& [key, br] : p.brackets()) {
    const auto [i, j] = key;
    Poly t = nf[i] * ng[j] - nf[j] * ng[i];
    if (!t.is_zero()) num += br * t;
  }
  return RatFn(num, b * b * d * d);
}

Poly jacobi_defect(const PoissonStructure& p, const Poly& f, const Poly& g, const Poly& h) {
  return bracket_poly(p, f, bracket_poly(p, g, h)) + bracket_poly(p, g, bracket_poly(p, h, f)) +
         bracket_poly(p, h, bracket_poly(p, f, g));
}

CenterReport polynomial_center(const PoissonStructure& p, std::uint32_t d) {
  const std::size_t n = p.nvars();
  const auto monos = exactalg::monomials_up_to(n, d);
  // Row index per (generator, result monomial).
  std::map<std::pair<std::size_t, Exponents>, std::size_t> row_of;
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> columns(monos.size());
  for (std::size_t k = 0; k < monos.size(); ++k) {
    Poly m(p.shared_variables(), {{monos[k], Scalar(1)}});
    for (std::size_t i = 0; i < n; ++i) {
      Poly b = bracket_poly(p, m, p.generator(i));
      for (const auto& [e, c] : b.terms()) {
        auto [it, inserted] = row_of.try_emplace({i, e}, row_of.size());
        columns[k].emplace_back(it->second, c);
      }
    }
  }
  exactalg::ScalarMatrix sys(row_of.size(), monos.size(), Scalar(0));
  for (std::size_t k = 0; k < monos.size(); ++k) {
    for (const auto& [r, c] : columns[k]) sys(r, k) = c;
  }
  CenterReport rep;
  rep.degree_bound = d;
  for (const auto& v : exactalg::nullspace_scalar(sys)) {
    Poly f(p.shared_variables(), {});
    for (std::size_t k = 0; k < monos.size(); ++k) f.add_term(monos[k], v[k]);
    rep.basis.push_back(std::move(f));
  }
  rep.trivial = std::all_of(rep.basis.begin(), rep.basis.end(), [](const Poly& f) { return f.is_constant(); });
  rep.certified = std::all_of(rep.basis.begin(), rep.basis.end(), [&](const Poly& f) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!bracket_poly(p, f, p.generator(i)).is_zero()) return false;
    }
    return true;
  });
  return rep;
}

Centrality is_central_rat(const PoissonStructure& p, const RatFn& f) {
  Centrality out;
  for (std::size_t i = 0; i < p.nvars(); ++i) {
    RatFn b = bracket_rat(p, f, RatFn(p.generator(i)));
    if (!b.is_zero()) {
      out.witness_generator = i;
      out.witness_bracket = b;
      return out;
    }
  }
  out.central = true;
  return out;
}

}  // namespace deformata::poisson
