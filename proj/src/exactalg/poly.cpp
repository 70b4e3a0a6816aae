#include "deformata/exactalg/poly.hpp"

#include <algorithm>
#include <sstream>

#include "deformata/errors.hpp"

namespace deformata::exactalg {

std::string to_string(const Scalar& s) { return s.get_str(); }

VarList merge_variables(const VarList& a, const VarList& b) {
  VarList out = a;
  for (const auto& v : b) {
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
  return out;
}

namespace {

const std::shared_ptr<const VarList>& empty_vars() {
  static const auto empty = std::make_shared<const VarList>();
  return empty;
}

bool same_vars(const std::shared_ptr<const VarList>& a, const std::shared_ptr<const VarList>& b) {
  return a == b || *a == *b;
}

}  // namespace

Poly::Poly() : vars_(empty_vars()) {}

Poly::Poly(VarList vars) : vars_(std::make_shared<const VarList>(std::move(vars))) {}

Poly::Poly(std::shared_ptr<const VarList> vars, TermMap terms)
    : vars_(std::move(vars)), terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& t) { return t.second == 0; });
  for (const auto& [e, c] : terms_) {
    if (e.size() != vars_->size()) throw InputError("exponent vector length does not match variable count");
  }
}

Poly Poly::constant(VarList vars, const Scalar& c) {
  Poly p(std::move(vars));
  p.add_term(Exponents(p.nvars(), 0), c);
  return p;
}

Poly Poly::variable(VarList vars, std::string_view name) {
  auto it = std::find(vars.begin(), vars.end(), name);
  if (it == vars.end()) throw InputError("unknown variable '" + std::string(name) + "'");
  Exponents e(vars.size(), 0);
  e[static_cast<std::size_t>(it - vars.begin())] = 1;
  return monomial(std::move(vars), std::move(e));
}

Poly Poly::monomial(VarList vars, Exponents e, const Scalar& c) {
  Poly p(std::move(vars));
  if (e.size() != p.nvars()) throw InputError("exponent vector length does not match variable count");
  p.add_term(e, c);
  return p;
}

bool Poly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
}

Scalar Poly::constant_term() const { return coefficient(Exponents(nvars(), 0)); }

Scalar Poly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar(0) : it->second;
}

int Poly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (auto x : e) s += static_cast<int>(x);
    d = std::max(d, s);
  }
  return d;
}

std::uint32_t Poly::degree_in(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

Poly Poly::with_variables(const std::shared_ptr<const VarList>& target) const {
  if (same_vars(vars_, target)) return Poly(target, terms_);
  std::vector<std::size_t> where(nvars());
  for (std::size_t i = 0; i < nvars(); ++i) {
    auto it = std::find(target->begin(), target->end(), (*vars_)[i]);
    where[i] = it == target->end() ? target->size() : static_cast<std::size_t>(it - target->begin());
  }
  TermMap out;
  for (const auto& [e, c] : terms_) {
    Exponents ne(target->size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (where[i] == target->size()) throw InputError("variable '" + (*vars_)[i] + "' is not in the target variable list");
      ne[where[i]] = e[i];
    }
    out.emplace(std::move(ne), c);
  }
  Poly p;
  p.vars_ = target;
  p.terms_ = std::move(out);
  return p;
}

Poly Poly::with_variables(const VarList& target) const {
  return with_variables(std::make_shared<const VarList>(target));
}

std::pair<Poly, Poly> align(const Poly& a, const Poly& b) {
  if (same_vars(a.shared_variables(), b.shared_variables())) {
    return {a, b.with_variables(a.shared_variables())};
  }
  auto merged = std::make_shared<const VarList>(merge_variables(a.variables(), b.variables()));
  return {a.with_variables(merged), b.with_variables(merged)};
}

void Poly::add_term(const Exponents& e, const Scalar& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (!same_vars(vars_, o.vars_)) {
    auto [a, b] = align(*this, o);
    *this = std::move(a);
    return *this += b;
  }
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (!same_vars(vars_, o.vars_)) {
    auto [a, b] = align(*this, o);
    *this = std::move(a);
    return *this -= b;
  }
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (!same_vars(a.vars_, b.vars_)) {
    auto [x, y] = align(a, b);
    return x * y;
  }
  Poly r;
  r.vars_ = a.vars_;
  Exponents e(a.nvars());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly Poly::scaled(const Scalar& c) const {
  if (c == 0) return Poly(vars_, {});
  Poly r = *this;
  for (auto& [e, v] : r.terms_) v *= c;
  return r;
}

Poly Poly::times_monomial(const Exponents& m, const Scalar& c) const {
  Poly r(vars_, {});
  if (c == 0) return r;
  for (const auto& [e, v] : terms_) {
    Exponents ne = e;
    for (std::size_t i = 0; i < ne.size(); ++i) ne[i] += m[i];
    r.terms_.emplace_hint(r.terms_.end(), std::move(ne), v * c);
  }
  return r;
}

Poly Poly::pow(long long e) const {
  if (e < 0) throw InputError("negative exponent in polynomial power");
  Poly result = Poly(vars_, {{Exponents(nvars(), 0), Scalar(1)}});
  Poly base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Poly Poly::derivative(std::size_t var) const {
  Poly r(vars_, {});
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents ne = e;
    --ne[var];
    r.add_term(ne, c * e[var]);
  }
  return r;
}

Scalar Poly::evaluate(std::span<const Scalar> point) const {
  if (point.size() != nvars()) throw InputError("evaluation point has wrong dimension");
  Scalar total = 0;
  for (const auto& [e, c] : terms_) {
    Scalar t = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (std::uint32_t k = 0; k < e[i]; ++k) t *= point[i];
    }
    total += t;
  }
  return total;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Scalar lc = leading().second;
  if (lc == 1) return *this;
  return scaled(1 / lc);
}

bool operator==(const Poly& a, const Poly& b) {
  if (same_vars(a.vars_, b.vars_)) return a.terms_ == b.terms_;
  auto [x, y] = align(a, b);
  return x.terms_ == y.terms_;
}

std::vector<Exponents> monomials_up_to(std::size_t n, std::uint32_t d) {
  std::vector<Exponents> out;
  Exponents e(n, 0);
  for (std::uint32_t deg = 0; deg <= d; ++deg) {
    std::vector<Exponents> layer;
    // Enumerate compositions of deg into n parts.
    auto rec = [&](auto&& self, std::size_t i, std::uint32_t left) -> void {
      if (i + 1 == n) {
        e[i] = left;
        layer.push_back(e);
        return;
      }
      for (std::uint32_t k = 0; k <= left; ++k) {
        e[i] = k;
        self(self, i + 1, left - k);
      }
    };
    if (n == 0) {
      if (deg == 0) out.emplace_back();
      continue;
    }
    rec(rec, 0, deg);
    std::sort(layer.begin(), layer.end());
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

namespace {

std::string monomial_string(const VarList& vars, const Exponents& e) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += vars[i];
    if (e[i] > 1) s += '^' + std::to_string(e[i]);
  }
  return s;
}

}  // namespace

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono = monomial_string(p.variables(), e);
    bool negative = c < 0;
    Scalar mag = abs(c);
    std::string body;
    if (mono.empty()) {
      body = to_string(mag);
    } else if (mag == 1) {
      body = mono;
    } else {
      body = to_string(mag) + "*" + mono;
    }
    if (first) {
      out = negative ? "-" + body : body;
      first = false;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

}  // namespace deformata::exactalg
