#include "deformata/exactalg/ratfn.hpp"

#include <algorithm>
#include <limits>

#include "deformata/errors.hpp"

namespace deformata::exactalg {

namespace {

bool divides(const Exponents& small, const Exponents& big) {
  for (std::size_t i = 0; i < small.size(); ++i) {
    if (small[i] > big[i]) return false;
  }
  return true;
}

Poly unit_like(const Poly& p) { return Poly::constant(p.variables(), 1).with_variables(p.shared_variables()); }

// gcd of a monomial with an arbitrary nonzero polynomial: componentwise minimum exponent.
Poly monomial_gcd(const Poly& mono, const Poly& other) {
  Exponents e = mono.leading().first;
  for (const auto& [oe, c] : other.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(e[i], oe[i]);
  }
  Poly r(mono.shared_variables(), {});
  r.add_term(e, 1);
  return r;
}

std::size_t first_variable(const Poly& a, const Poly& b) {
  std::size_t best = a.nvars();
  for (const Poly* p : {&a, &b}) {
    for (const auto& [e, c] : p->terms()) {
      for (std::size_t i = 0; i < std::min(best, e.size()); ++i) {
        if (e[i] > 0) {
          best = i;
          break;
        }
      }
    }
  }
  return best;
}

// Coefficients of p viewed as a univariate polynomial in variable v.
std::map<std::uint32_t, Poly> coefficients_in(const Poly& p, std::size_t v) {
  std::map<std::uint32_t, Poly> out;
  for (const auto& [e, c] : p.terms()) {
    Exponents ne = e;
    ne[v] = 0;
    auto [it, inserted] = out.try_emplace(e[v], Poly(p.shared_variables(), {}));
    it->second.add_term(ne, c);
  }
  return out;
}

Poly leading_coefficient_in(const Poly& p, std::size_t v) {
  std::uint32_t d = p.degree_in(v);
  Poly out(p.shared_variables(), {});
  for (const auto& [e, c] : p.terms()) {
    if (e[v] != d) continue;
    Exponents ne = e;
    ne[v] = 0;
    out.add_term(ne, c);
  }
  return out;
}

Poly power_of_variable(const Poly& like, std::size_t v, std::uint32_t k) {
  Exponents e(like.nvars(), 0);
  e[v] = k;
  Poly r(like.shared_variables(), {});
  r.add_term(e, 1);
  return r;
}

Poly gcd_aligned(const Poly& a, const Poly& b);

Poly content_in(const Poly& p, std::size_t v) {
  Poly g(p.shared_variables(), {});
  for (const auto& [k, c] : coefficients_in(p, v)) {
    g = gcd_aligned(g, c);
    if (g.is_constant() && !g.is_zero()) break;
  }
  return g;
}

Poly primitive_part_in(const Poly& p, std::size_t v) {
  if (p.is_zero()) return p;
  return divide_exact(p, content_in(p, v)).monic();
}

// lc(b)^k * a reduced modulo b as univariate polynomials in v.
Poly pseudo_remainder(const Poly& a, const Poly& b, std::size_t v) {
  Poly r = a;
  const std::uint32_t db = b.degree_in(v);
  const Poly lcb = leading_coefficient_in(b, v);
  while (!r.is_zero() && r.degree_in(v) >= db) {
    const std::uint32_t dr = r.degree_in(v);
    Poly lcr = leading_coefficient_in(r, v);
    r = lcb * r - lcr * power_of_variable(b, v, dr - db) * b;
  }
  return r;
}

Poly gcd_aligned(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return unit_like(a);
  if (a.is_monomial()) return monomial_gcd(a, b);
  if (b.is_monomial()) return monomial_gcd(b, a);

  const std::size_t v = first_variable(a, b);
  if (a.degree_in(v) == 0) return gcd_aligned(a, content_in(b, v));
  if (b.degree_in(v) == 0) return gcd_aligned(content_in(a, v), b);

  const Poly ca = content_in(a, v);
  const Poly cb = content_in(b, v);
  const Poly c = gcd_aligned(ca, cb);
  Poly pa = divide_exact(a, ca).monic();
  Poly pb = divide_exact(b, cb).monic();
  if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);

  Poly g;
  for (;;) {
    Poly r = pseudo_remainder(pa, pb, v);
    if (r.is_zero()) {
      g = pb;
      break;
    }
    if (r.degree_in(v) == 0) {
      g = unit_like(a);
      break;
    }
    pa = std::move(pb);
    pb = primitive_part_in(r, v);
  }
  return (c * primitive_part_in(g, v)).monic();
}

}  // namespace

DivisionResult divide(const Poly& a_in, const Poly& b_in) {
  if (b_in.is_zero()) throw InputError("division by the zero polynomial");
  auto [a, b] = align(a_in, b_in);
  Poly q(a.shared_variables(), {});
  Poly r(a.shared_variables(), {});
  Poly p = a;
  const auto& [lbe, lbc] = b.leading();
  while (!p.is_zero()) {
    const Exponents lte = p.leading().first;
    const Scalar ltc = p.leading().second;
    if (divides(lbe, lte)) {
      Exponents te = lte;
      for (std::size_t i = 0; i < te.size(); ++i) te[i] -= lbe[i];
      Scalar tc = ltc / lbc;
      q.add_term(te, tc);
      for (const auto& [be, bc] : b.terms()) {
        Exponents e = be;
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += te[i];
        p.add_term(e, -bc * tc);
      }
    } else {
      r.add_term(lte, ltc);
      p.add_term(lte, -ltc);
    }
  }
  return {std::move(q), std::move(r)};
}

Poly divide_exact(const Poly& a, const Poly& b) {
  if (b.is_constant()) {
    if (b.is_zero()) throw InputError("division by the zero polynomial");
    auto [x, y] = align(a, b);
    return x.scaled(1 / y.constant_term());
  }
  auto res = divide(a, b);
  if (!res.remainder.is_zero()) throw InputError("polynomial division is not exact");
  return std::move(res.quotient);
}

Poly gcd(const Poly& a, const Poly& b) {
  auto [x, y] = align(a, b);
  return gcd_aligned(x, y);
}

RatFn ratfn_normalize(const Poly& num, const Poly& den) { return RatFn(num, den); }

RatFn::RatFn() : num_(), den_(Poly::constant({}, 1)) {}

RatFn::RatFn(const Poly& p) : num_(p), den_(unit_like(p)) {}

RatFn::RatFn(const Poly& num_in, const Poly& den_in) {
  if (den_in.is_zero()) throw InputError("zero denominator");
  auto [num, den] = align(num_in, den_in);
  if (num.is_zero()) {
    num_ = num;
    den_ = unit_like(num);
    return;
  }
  if (!den.is_constant()) {
    Poly g = gcd(num, den);
    if (!g.is_constant()) {
      num = divide_exact(num, g);
      den = divide_exact(den, g);
    }
  }
  Scalar lc = den.leading().second;
  if (lc != 1) {
    num = num.scaled(1 / lc);
    den = den.scaled(1 / lc);
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

RatFn RatFn::operator-() const { return RatFn(-num_, den_, Reduced{}); }

RatFn operator+(const RatFn& a, const RatFn& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RatFn(a.num_ + b.num_, a.den_);
  return RatFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFn operator-(const RatFn& a, const RatFn& b) { return a + (-b); }

RatFn operator*(const RatFn& a, const RatFn& b) {
  if (a.is_zero() || b.is_zero()) {
    auto [x, y] = align(a.num_, b.num_);
    return RatFn(Poly(x.shared_variables(), {}));
  }
  if (a.is_polynomial() && b.is_polynomial()) return RatFn(a.num_ * b.num_);
  return RatFn(a.num_ * b.num_, a.den_ * b.den_);
}

RatFn operator/(const RatFn& a, const RatFn& b) {
  if (b.is_zero()) throw InputError("division by zero rational function");
  return RatFn(a.num_ * b.den_, a.den_ * b.num_);
}

RatFn RatFn::derivative(std::size_t var) const {
  if (den_.is_constant()) return RatFn(num_.derivative(var).scaled(1 / den_.constant_term()));
  return RatFn(num_.derivative(var) * den_ - num_ * den_.derivative(var), den_ * den_);
}

RatFn RatFn::with_variables(const std::shared_ptr<const VarList>& target) const {
  return RatFn(num_.with_variables(target), den_.with_variables(target), Reduced{});
}

std::optional<Scalar> RatFn::evaluate(std::span<const Scalar> point) const {
  Poly n = num_, d = den_;
  Scalar dv = d.evaluate(point);
  if (dv == 0) return std::nullopt;
  return n.evaluate(point) / dv;
}

bool operator==(const RatFn& a, const RatFn& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

std::string to_string(const RatFn& f) {
  if (f.den().is_constant()) return to_string(f.num());
  std::string n = to_string(f.num());
  if (f.num().size() > 1) n = "(" + n + ")";
  std::string d = to_string(f.den());
  bool bare = f.den().is_monomial() && d.find('*') == std::string::npos && d.find('^') == std::string::npos;
  if (!bare) d = "(" + d + ")";
  return n + "/" + d;
}

}  // namespace deformata::exactalg
