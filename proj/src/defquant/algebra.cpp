#include "deformata/defquant/algebra.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <tuple>

#include "deformata/errors.hpp"

namespace deformata::defquant {

using exactalg::Scalar;

struct DeformAlgebra::Impl {
  std::shared_ptr<const VarList> vars;
  std::size_t order = 0;
  Presentation pres;
  std::map<GeneratorPair, HPoly> rules;
  std::map<GeneratorPair, HSeries> q_swap;  // quantum: (j, i) -> q_ji for j > i

  mutable std::mutex mu;
  mutable std::map<std::tuple<Exponents, std::size_t, std::size_t>, HPoly> cache;
};

namespace {

std::size_t find_var(const VarList& vars, const std::string& name) {
  auto it = std::find(vars.begin(), vars.end(), name);
  if (it == vars.end()) throw InputError("unknown variable '" + name + "'");
  return static_cast<std::size_t>(it - vars.begin());
}

void check_vars(const VarList& vars) {
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (v == "h") throw InputError("'h' is reserved for the deformation parameter");
    if (!seen.insert(v).second) throw InputError("duplicate variable '" + v + "'");
  }
}

Scalar falling(std::uint32_t n, std::uint32_t k) {
  Scalar r = 1;
  for (std::uint32_t i = 0; i < k; ++i) r *= static_cast<long>(n - i);
  return r;
}

Scalar factorial(std::uint32_t k) { return falling(k, k); }

Exponents unit_exponent(std::size_t n, std::size_t i) {
  Exponents e(n, 0);
  e[i] = 1;
  return e;
}

}  // namespace

DeformAlgebra::DeformAlgebra(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}

DeformAlgebra DeformAlgebra::moyal(VarList vars, const std::vector<std::pair<std::string, std::string>>& pairs,
                                   std::size_t order) {
  check_vars(vars);
  auto impl = std::make_shared<Impl>();
  impl->vars = std::make_shared<const VarList>(std::move(vars));
  impl->order = order;
  MoyalPresentation m;
  std::set<std::size_t> used;
  for (const auto& [q, p] : pairs) {
    std::size_t qi = find_var(*impl->vars, q), pi = find_var(*impl->vars, p);
    if (qi == pi || !used.insert(qi).second || !used.insert(pi).second) {
      throw InputError("Moyal pairs must be disjoint");
    }
    m.pairs.emplace_back(qi, pi);
  }
  impl->pres = std::move(m);
  DeformAlgebra alg(impl);
  const std::size_t n = alg.nvars();
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      impl->rules[{j, i}] = alg.star_monomials(unit_exponent(n, j), unit_exponent(n, i), order);
    }
  }
  return alg;
}

DeformAlgebra DeformAlgebra::quantum(VarList vars, const std::vector<QRelation>& relations, std::size_t order) {
  check_vars(vars);
  auto impl = std::make_shared<Impl>();
  impl->vars = std::make_shared<const VarList>(std::move(vars));
  impl->order = order;
  QuantumPolyPresentation qp;
  for (const auto& r : relations) {
    std::size_t a = find_var(*impl->vars, r.left), b = find_var(*impl->vars, r.right);
    if (a == b) throw InputError("q-relation between a variable and itself");
    HSeries q = r.q.truncated(order);
    if (q[0] != 1) throw InputError("q must be 1 modulo h for a quantum deformation");
    GeneratorPair key = a < b ? GeneratorPair{a, b} : GeneratorPair{b, a};
    if (qp.q.count(key)) throw InputError("duplicate q-relation for " + r.left + ", " + r.right);
    qp.q[key] = a < b ? q : q.inverse();
  }
  const std::size_t n = impl->vars->size();
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      auto it = qp.q.find({i, j});
      impl->q_swap[{j, i}] = it == qp.q.end() ? HSeries::constant(order, 1) : it->second.inverse();
    }
  }
  impl->pres = std::move(qp);
  DeformAlgebra alg(impl);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      impl->rules[{j, i}] = alg.star_monomials(unit_exponent(n, j), unit_exponent(n, i), order);
    }
  }
  return alg;
}

DeformAlgebra DeformAlgebra::lie(VarList vars, const std::vector<LieBracket>& brackets, std::size_t order) {
  check_vars(vars);
  auto impl = std::make_shared<Impl>();
  impl->vars = std::make_shared<const VarList>(std::move(vars));
  impl->order = order;
  const std::size_t n = impl->vars->size();
  LiePresentation lp;
  for (const auto& b : brackets) {
    std::size_t a = find_var(*impl->vars, b.left), c = find_var(*impl->vars, b.right);
    Poly v = b.value.with_variables(impl->vars);
    if (v.total_degree() > 1 || v.constant_term() != 0) {
      throw InputError("Lie bracket values must be linear combinations of generators");
    }
    if (a == c) {
      if (!v.is_zero()) throw InputError("antisymmetry violated: [" + b.left + "," + b.left + "] != 0");
      continue;
    }
    GeneratorPair key = a < c ? GeneratorPair{a, c} : GeneratorPair{c, a};
    Poly stored = a < c ? v : -v;
    auto [it, inserted] = lp.brackets.try_emplace(key, stored);
    if (!inserted && it->second != stored) {
      throw InputError("antisymmetry violated for [" + b.left + "," + b.right + "]");
    }
  }
  auto bracket = [&](std::size_t i, std::size_t j) -> Poly {
    if (i == j) return Poly(impl->vars, {});
    auto it = lp.brackets.find(i < j ? GeneratorPair{i, j} : GeneratorPair{j, i});
    if (it == lp.brackets.end()) return Poly(impl->vars, {});
    return i < j ? it->second : -it->second;
  };
  auto bracket_linear = [&](const Poly& u, const Poly& w) {
    Poly out(impl->vars, {});
    for (const auto& [eu, cu] : u.terms()) {
      std::size_t a = static_cast<std::size_t>(std::find(eu.begin(), eu.end(), 1u) - eu.begin());
      for (const auto& [ew, cw] : w.terms()) {
        std::size_t b = static_cast<std::size_t>(std::find(ew.begin(), ew.end(), 1u) - ew.begin());
        out += bracket(a, b).scaled(cu * cw);
      }
    }
    return out;
  };
  auto gen = [&](std::size_t i) { return Poly(impl->vars, {{unit_exponent(n, i), Scalar(1)}}); };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        Poly jac = bracket_linear(gen(i), bracket(j, k)) + bracket_linear(gen(j), bracket(k, i)) +
                   bracket_linear(gen(k), bracket(i, j));
        if (!jac.is_zero()) {
          throw InputError("Jacobi identity fails on (" + (*impl->vars)[i] + ", " + (*impl->vars)[j] + ", " +
                           (*impl->vars)[k] + ")");
        }
      }
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      HPoly rule(impl->vars, order);
      Exponents e(n, 0);
      e[i] = 1;
      e[j] = 1;
      rule.add_term(0, e, 1);
      if (order >= 1) {
        const Poly b = bracket(j, i);
        for (const auto& [be, bc] : b.terms()) rule.add_term(1, be, bc);
      }
      impl->rules[{j, i}] = std::move(rule);
    }
  }
  impl->pres = std::move(lp);
  return DeformAlgebra(impl);
}

DeformAlgebra DeformAlgebra::rewriting(VarList vars, const std::vector<RewriteRule>& rules, std::size_t order,
                                       std::optional<std::vector<int>> degrees) {
  check_vars(vars);
  auto impl = std::make_shared<Impl>();
  impl->vars = std::make_shared<const VarList>(std::move(vars));
  impl->order = order;
  const std::size_t n = impl->vars->size();
  if (degrees) {
    if (degrees->size() != n) throw InputError("one degree per variable is required");
    for (int d : *degrees) {
      if (d < 0) throw InputError("filtration degrees must be non-negative");
    }
  }
  RewritingPresentation rp;
  rp.degrees = std::move(degrees);
  for (const auto& r : rules) {
    std::size_t j = find_var(*impl->vars, r.upper), i = find_var(*impl->vars, r.lower);
    if (j <= i) throw InputError("rewrite rule " + r.upper + "*" + r.lower + " is not a descent in declared order");
    if (rp.rules.count({j, i})) throw InputError("duplicate rewrite rule for " + r.upper + "*" + r.lower);
    HPoly rhs = HPoly(impl->vars, order, r.rhs.coeffs());
    Exponents e(n, 0);
    e[i] = 1;
    e[j] = 1;
    if (rhs[0] != Poly(impl->vars, {{e, Scalar(1)}})) {
      throw InputError("rule for " + r.upper + "*" + r.lower + " must reduce to " + r.lower + "*" + r.upper +
                       " modulo h");
    }
    rp.rules[{j, i}] = std::move(rhs);
  }
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      auto it = rp.rules.find({j, i});
      if (it != rp.rules.end()) {
        impl->rules[{j, i}] = it->second;
        continue;
      }
      HPoly rule(impl->vars, order);
      Exponents e(n, 0);
      e[i] = 1;
      e[j] = 1;
      rule.add_term(0, e, 1);
      impl->rules[{j, i}] = rule;
      rp.rules[{j, i}] = std::move(rule);
    }
  }
  impl->pres = std::move(rp);
  return DeformAlgebra(impl);
}

const VarList& DeformAlgebra::variables() const { return *impl_->vars; }
const std::shared_ptr<const VarList>& DeformAlgebra::shared_variables() const { return impl_->vars; }
std::size_t DeformAlgebra::nvars() const { return impl_->vars->size(); }
std::size_t DeformAlgebra::order() const { return impl_->order; }
const Presentation& DeformAlgebra::presentation() const { return impl_->pres; }

std::string DeformAlgebra::kind_name() const {
  switch (impl_->pres.index()) {
    case 0: return "moyal";
    case 1: return "quantum";
    case 2: return "lie";
    default: return "rewriting";
  }
}

std::size_t DeformAlgebra::index_of(const std::string& var) const { return find_var(*impl_->vars, var); }

HPoly DeformAlgebra::zero() const { return HPoly(impl_->vars, impl_->order); }

HPoly DeformAlgebra::one() const {
  HPoly r = zero();
  r.add_term(0, Exponents(nvars(), 0), 1);
  return r;
}

HPoly DeformAlgebra::generator(std::size_t i) const {
  HPoly r = zero();
  r.add_term(0, unit_exponent(nvars(), i), 1);
  return r;
}

HPoly DeformAlgebra::lift(const Poly& p) const { return HPoly::lift(p, impl_->vars, impl_->order); }

bool DeformAlgebra::owns(const HPoly& p) const {
  return p.order() == order() && (p.shared_variables() == impl_->vars || p.variables() == variables());
}

const HPoly& DeformAlgebra::swap_rule(std::size_t j, std::size_t i) const {
  auto it = impl_->rules.find({j, i});
  if (it == impl_->rules.end()) throw InputError("swap rule requested for a non-descent pair");
  return it->second;
}

bool operator==(const DeformAlgebra& a, const DeformAlgebra& b) {
  if (a.impl_ == b.impl_) return true;
  if (a.variables() != b.variables() || a.order() != b.order()) return false;
  if (a.impl_->pres.index() != b.impl_->pres.index()) return false;
  if (a.impl_->rules != b.impl_->rules) return false;
  if (const auto* ra = std::get_if<RewritingPresentation>(&a.impl_->pres)) {
    return ra->degrees == std::get<RewritingPresentation>(b.impl_->pres).degrees;
  }
  return true;
}

HPoly DeformAlgebra::right_multiply_generator(const Exponents& m, std::size_t gen, std::size_t order) const {
  const std::size_t n = nvars();
  std::size_t last = n;
  for (std::size_t v = n; v-- > 0;) {
    if (m[v] > 0) {
      last = v;
      break;
    }
  }
  if (last == n || last <= gen) {
    HPoly r(impl_->vars, order);
    Exponents e = m;
    ++e[gen];
    r.add_term(0, e, 1);
    return r;
  }
  auto key = std::make_tuple(m, gen, order);
  {
    std::lock_guard lock(impl_->mu);
    auto it = impl_->cache.find(key);
    if (it != impl_->cache.end()) return it->second;
  }
  Exponents rest = m;
  --rest[last];
  const HPoly& rule = swap_rule(last, gen);
  HPoly result(impl_->vars, order);
  for (std::size_t t = 0; t <= std::min(order, rule.order()); ++t) {
    for (const auto& [w, c] : rule[t].terms()) {
      HPoly cur(impl_->vars, order - t);
      cur.add_term(0, rest, 1);
      for (std::size_t v = 0; v < n; ++v) {
        for (std::uint32_t k = 0; k < w[v]; ++k) {
          HPoly next(impl_->vars, cur.order());
          for (std::size_t s = 0; s <= cur.order(); ++s) {
            for (const auto& [e, ce] : cur[s].terms()) {
              next.add_shifted(right_multiply_generator(e, v, cur.order() - s), s, ce);
            }
          }
          cur = std::move(next);
        }
      }
      result.add_shifted(cur, t, c);
    }
  }
  std::lock_guard lock(impl_->mu);
  impl_->cache.emplace(key, result);
  return result;
}

HPoly DeformAlgebra::star_monomials(const Exponents& a, const Exponents& b, std::size_t order) const {
  const std::size_t n = nvars();
  HPoly result(impl_->vars, order);
  if (const auto* m = std::get_if<MoyalPresentation>(&impl_->pres)) {
    // Enumerate multi-indices over pairs with |alpha| <= order.
    std::vector<std::uint32_t> alpha(m->pairs.size(), 0);
    auto rec = [&](auto&& self, std::size_t k, std::size_t used) -> void {
      if (k == m->pairs.size()) {
        Scalar c = 1;
        Exponents e(n);
        for (std::size_t v = 0; v < n; ++v) e[v] = a[v] + b[v];
        for (std::size_t p = 0; p < alpha.size(); ++p) {
          const auto [q, mom] = m->pairs[p];
          if (alpha[p] > a[mom] || alpha[p] > b[q]) return;
          c *= falling(a[mom], alpha[p]) * falling(b[q], alpha[p]) / factorial(alpha[p]);
          e[mom] -= alpha[p];
          e[q] -= alpha[p];
        }
        result.add_term(used, e, c);
        return;
      }
      for (std::uint32_t x = 0; used + x <= order; ++x) {
        alpha[k] = x;
        self(self, k + 1, used + x);
      }
      alpha[k] = 0;
    };
    rec(rec, 0, 0);
    return result;
  }
  if (std::holds_alternative<QuantumPolyPresentation>(impl_->pres)) {
    HSeries coeff = HSeries::constant(order, 1);
    for (std::size_t j = 0; j < n; ++j) {
      if (a[j] == 0) continue;
      for (std::size_t i = 0; i < j; ++i) {
        if (b[i] == 0) continue;
        coeff = coeff * impl_->q_swap.at({j, i}).truncated(order).pow(static_cast<long long>(a[j]) * b[i]);
      }
    }
    Exponents e(n);
    for (std::size_t v = 0; v < n; ++v) e[v] = a[v] + b[v];
    for (std::size_t k = 0; k <= order; ++k) result.add_term(k, e, coeff[k]);
    return result;
  }
  // Rewriting presentations: right-multiply by the generators of b in ascending order.
  result.add_term(0, a, 1);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::uint32_t k = 0; k < b[v]; ++k) {
      HPoly next(impl_->vars, order);
      for (std::size_t s = 0; s <= order; ++s) {
        for (const auto& [e, c] : result[s].terms()) {
          next.add_shifted(right_multiply_generator(e, v, order - s), s, c);
        }
      }
      result = std::move(next);
    }
  }
  return result;
}

HPoly star(const DeformAlgebra& alg, const HPoly& a, const HPoly& b) {
  if (!alg.owns(a) || !alg.owns(b)) throw InputError("star: operand does not belong to the algebra");
  const std::size_t n = alg.order();
  HPoly result = alg.zero();
  for (std::size_t t1 = 0; t1 <= n; ++t1) {
    for (const auto& [ea, ca] : a[t1].terms()) {
      for (std::size_t t2 = 0; t1 + t2 <= n; ++t2) {
        for (const auto& [eb, cb] : b[t2].terms()) {
          result.add_shifted(alg.star_monomials(ea, eb, n - t1 - t2), t1 + t2, ca * cb);
        }
      }
    }
  }
  return result;
}

HPoly commutator(const DeformAlgebra& alg, const HPoly& a, const HPoly& b) {
  return star(alg, a, b) - star(alg, b, a);
}

HPoly star_power(const DeformAlgebra& alg, const HPoly& a, std::size_t k) {
  HPoly r = alg.one();
  for (std::size_t i = 0; i < k; ++i) r = star(alg, r, a);
  return r;
}

OreWitness ore_witness(const DeformAlgebra& alg, const HPoly& s, const HPoly& a) {
  if (!alg.owns(s) || !alg.owns(a)) throw InputError("ore_witness: operand does not belong to the algebra");
  if (s[0].is_zero()) throw PreconditionError("not a regular element: s lies in hA");
  const std::size_t n = alg.order();
  std::vector<HPoly> powers{alg.one()};
  for (std::size_t k = 1; k <= n + 1; ++k) powers.push_back(star(alg, powers.back(), s));
  HPoly ad = a;
  HPoly a_left = alg.zero();
  for (std::size_t j = 0; j <= n; ++j) {
    a_left += star(alg, powers[n - j], ad);
    ad = commutator(alg, s, ad);
  }
  OreWitness w{powers[n + 1], a_left, false};
  w.certified = star(alg, w.s_left, a) == star(alg, w.a_left, s);
  return w;
}

HPoly reduce_word(const DeformAlgebra& alg, const std::vector<std::size_t>& word, std::mt19937_64& rng) {
  using Key = std::pair<std::size_t, std::vector<std::size_t>>;  // (h power, word)
  const std::size_t n = alg.nvars();
  std::map<Key, Scalar> terms;
  for (auto g : word) {
    if (g >= n) throw InputError("reduce_word: generator index out of range");
  }
  terms[{0, word}] = 1;
  auto descents = [](const std::vector<std::size_t>& w) {
    std::vector<std::size_t> d;
    for (std::size_t p = 0; p + 1 < w.size(); ++p) {
      if (w[p] > w[p + 1]) d.push_back(p);
    }
    return d;
  };
  for (;;) {
    std::vector<Key> unsorted;
    for (const auto& [k, c] : terms) {
      if (!descents(k.second).empty()) unsorted.push_back(k);
    }
    if (unsorted.empty()) break;
    const Key pick = unsorted[std::uniform_int_distribution<std::size_t>(0, unsorted.size() - 1)(rng)];
    const Scalar c = terms[pick];
    terms.erase(pick);
    auto d = descents(pick.second);
    const std::size_t p = d[std::uniform_int_distribution<std::size_t>(0, d.size() - 1)(rng)];
    const auto& w = pick.second;
    const HPoly& rule = alg.swap_rule(w[p], w[p + 1]);
    for (std::size_t t = 0; t <= rule.order() && pick.first + t <= alg.order(); ++t) {
      for (const auto& [e, rc] : rule[t].terms()) {
        std::vector<std::size_t> nw(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p));
        for (std::size_t v = 0; v < n; ++v) nw.insert(nw.end(), e[v], v);
        nw.insert(nw.end(), w.begin() + static_cast<std::ptrdiff_t>(p + 2), w.end());
        Key k{pick.first + t, std::move(nw)};
        Scalar& slot = terms[k];
        slot += c * rc;
        if (slot == 0) terms.erase(k);
      }
    }
  }
  HPoly out = alg.zero();
  for (const auto& [k, c] : terms) {
    Exponents e(n, 0);
    for (auto g : k.second) ++e[g];
    out.add_term(k.first, e, c);
  }
  return out;
}

}  // namespace deformata::defquant
