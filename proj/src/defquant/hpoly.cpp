#include "deformata/defquant/hpoly.hpp"

#include <algorithm>

#include "deformata/errors.hpp"

namespace deformata::defquant {

using exactalg::Scalar;

namespace {

void require_same(const HPoly& a, const HPoly& b) {
  if (a.shared_variables() != b.shared_variables() && a.variables() != b.variables()) {
    throw InputError("h-polynomials over different variable lists");
  }
}

}  // namespace

HPoly::HPoly() : vars_(std::make_shared<const VarList>()), coeffs_(1, Poly()) {}

HPoly::HPoly(std::shared_ptr<const VarList> vars, std::size_t order)
    : vars_(std::move(vars)), coeffs_(order + 1, Poly(vars_, {})) {}

HPoly::HPoly(std::shared_ptr<const VarList> vars, std::size_t order, std::vector<Poly> coeffs)
    : vars_(std::move(vars)) {
  coeffs_.reserve(order + 1);
  for (std::size_t k = 0; k <= order; ++k) {
    coeffs_.push_back(k < coeffs.size() ? coeffs[k].with_variables(vars_) : Poly(vars_, {}));
  }
}

HPoly HPoly::lift(const Poly& p, std::shared_ptr<const VarList> vars, std::size_t order) {
  return HPoly(std::move(vars), order, {p});
}

bool HPoly::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Poly& p) { return p.is_zero(); });
}

std::optional<std::size_t> HPoly::valuation() const {
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (!coeffs_[k].is_zero()) return k;
  }
  return std::nullopt;
}

int HPoly::total_degree() const {
  int d = -1;
  for (const auto& c : coeffs_) d = std::max(d, c.total_degree());
  return d;
}

void HPoly::add_term(std::size_t hpow, const Exponents& e, const Scalar& c) {
  if (hpow > order()) return;
  coeffs_[hpow].add_term(e, c);
}

void HPoly::add_shifted(const HPoly& other, std::size_t shift, const Scalar& c) {
  if (c == 0) return;
  for (std::size_t k = 0; k <= other.order() && k + shift <= order(); ++k) {
    for (const auto& [e, v] : other.coeffs_[k].terms()) coeffs_[k + shift].add_term(e, v * c);
  }
}

HPoly HPoly::truncated(std::size_t order) const {
  std::vector<Poly> c(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(std::min(order, this->order()) + 1));
  return HPoly(vars_, order, std::move(c));
}

HPoly HPoly::scaled(const Scalar& c) const {
  HPoly r = *this;
  for (auto& p : r.coeffs_) p = p.scaled(c);
  return r;
}

HPoly HPoly::scaled(const HSeries& s) const {
  HPoly r(vars_, order());
  for (std::size_t i = 0; i <= s.order(); ++i) {
    if (s[i] == 0) continue;
    for (std::size_t k = 0; k + i <= order(); ++k) r.coeffs_[k + i] += coeffs_[k].scaled(s[i]);
  }
  return r;
}

HPoly HPoly::shifted(std::size_t k) const {
  HPoly r(vars_, order());
  r.add_shifted(*this, k);
  return r;
}

HPoly HPoly::operator-() const { return scaled(Scalar(-1)); }

HPoly& HPoly::operator+=(const HPoly& o) {
  require_same(*this, o);
  if (o.order() < order()) coeffs_.resize(o.order() + 1);
  for (std::size_t k = 0; k <= order(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

HPoly& HPoly::operator-=(const HPoly& o) {
  require_same(*this, o);
  if (o.order() < order()) coeffs_.resize(o.order() + 1);
  for (std::size_t k = 0; k <= order(); ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

bool operator==(const HPoly& a, const HPoly& b) {
  if (a.order() != b.order()) return false;
  for (std::size_t k = 0; k <= a.order(); ++k) {
    if (a.coeffs_[k] != b.coeffs_[k]) return false;
  }
  return true;
}

std::string to_string(const HPoly& p) {
  std::string out;
  for (std::size_t k = 0; k <= p.order(); ++k) {
    const Poly& c = p[k];
    for (auto it = c.terms().rbegin(); it != c.terms().rend(); ++it) {
      const auto& [e, v] = *it;
      std::vector<std::string> parts;
      Scalar mag = abs(v);
      std::string mono;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += '*';
        mono += p.variables()[i];
        if (e[i] > 1) mono += '^' + std::to_string(e[i]);
      }
      if (mag != 1 || (k == 0 && mono.empty())) parts.push_back(exactalg::to_string(mag));
      if (k == 1) parts.push_back("h");
      if (k > 1) parts.push_back("h^" + std::to_string(k));
      if (!mono.empty()) parts.push_back(mono);
      std::string body;
      for (const auto& s : parts) body += (body.empty() ? "" : "*") + s;
      if (out.empty()) {
        out = v < 0 ? "-" + body : body;
      } else {
        out += v < 0 ? " - " : " + ";
        out += body;
      }
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace deformata::defquant
