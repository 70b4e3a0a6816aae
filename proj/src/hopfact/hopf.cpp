#include "deformata/hopfact/hopf.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "deformata/errors.hpp"

namespace deformata::hopfact {

namespace {

using exactalg::ScalarMatrix;
using Grid = std::vector<Scalar>;  // d x d, row-major

bool is_zero_vec(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& c) { return c == 0; });
}

void axpy(Vec& y, const Scalar& a, const Vec& x) {
  if (a == 0) return;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (x[i] != 0) y[i] += a * x[i];
  }
}

std::vector<TensorTerm> canonical_terms(std::vector<TensorTerm> terms) {
  std::map<std::pair<std::size_t, std::size_t>, Scalar> acc;
  for (auto& t : terms) acc[{t.left, t.right}] += t.coeff;
  std::vector<TensorTerm> out;
  for (auto& [k, c] : acc) {
    if (c != 0) out.push_back({k.first, k.second, c});
  }
  return out;
}

// Gauss-Jordan inverse of a square invertible scalar matrix.
ScalarMatrix invert(const ScalarMatrix& m) {
  const std::size_t n = m.rows();
  ScalarMatrix a = m;
  ScalarMatrix inv(n, n, Scalar(0));
  for (std::size_t i = 0; i < n; ++i) inv(i, i) = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) throw PreconditionError("singular change of basis");
    a.swap_rows(p, c);
    inv.swap_rows(p, c);
    const Scalar s = 1 / a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) *= s;
      inv(c, j) *= s;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a(r, c) == 0) continue;
      const Scalar f = a(r, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= f * a(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

// Row vector v times matrix m.
Vec times(const Vec& v, const ScalarMatrix& m) {
  Vec out(m.cols(), Scalar(0));
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[i] * m(i, j);
  }
  return out;
}

// (P (x) P) applied to a d x d grid, where P is the projection along the subspace.
Grid project_both(const Subspace& j, const Grid& t, std::size_t d) {
  Grid g = t;
  for (std::size_t b = 0; b < d; ++b) {
    Vec col(d);
    for (std::size_t a = 0; a < d; ++a) col[a] = g[a * d + b];
    col = j.reduce(col);
    for (std::size_t a = 0; a < d; ++a) g[a * d + b] = col[a];
  }
  for (std::size_t a = 0; a < d; ++a) {
    Vec row(g.begin() + static_cast<std::ptrdiff_t>(a * d), g.begin() + static_cast<std::ptrdiff_t>((a + 1) * d));
    row = j.reduce(row);
    std::copy(row.begin(), row.end(), g.begin() + static_cast<std::ptrdiff_t>(a * d));
  }
  return g;
}

// Characteristic polynomial coefficients c_0..c_n (c_n = 1) by Faddeev-LeVerrier.
Vec charpoly(const ScalarMatrix& a) {
  const std::size_t n = a.rows();
  Vec c(n + 1, Scalar(0));
  c[n] = 1;
  ScalarMatrix m(n, n, Scalar(0));
  for (std::size_t k = 1; k <= n; ++k) {
    ScalarMatrix next(n, n, Scalar(0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t l = 0; l < n; ++l) {
        if (a(i, l) == 0) continue;
        for (std::size_t j = 0; j < n; ++j) next(i, j) += a(i, l) * m(l, j);
      }
      next(i, i) += c[n - k + 1];
    }
    m = std::move(next);
    Scalar tr = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t l = 0; l < n; ++l) tr += a(i, l) * m(l, i);
    }
    c[n - k] = -tr / static_cast<long>(k);
  }
  return c;
}

std::optional<std::vector<mpz_class>> divisors(mpz_class v) {
  v = abs(v);
  if (v > mpz_class("1000000000000")) return std::nullopt;
  std::vector<mpz_class> out;
  for (mpz_class i = 1; i * i <= v; ++i) {
    if (v % i == 0) {
      out.push_back(i);
      if (i * i != v) out.push_back(v / i);
    }
  }
  return out;
}

struct RootScan {
  std::vector<Scalar> roots;  // distinct rational roots
  bool splits = false;        // every root (with multiplicity) is rational
  bool scanned = true;        // false when the divisor enumeration was too large
};

RootScan rational_roots(Vec c) {
  RootScan out;
  while (c.size() > 1 && c.back() == 0) c.pop_back();
  std::size_t deg = c.size() - 1;
  // Strip the zero roots first.
  std::size_t lo = 0;
  while (lo < c.size() && c[lo] == 0) ++lo;
  if (lo > 0) out.roots.push_back(0);
  c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(lo));
  deg -= lo;
  auto horner = [](const Vec& p, const Scalar& x) {
    Scalar acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
  };
  auto deflate = [](const Vec& p, const Scalar& x) {
    Vec q(p.size() - 1, Scalar(0));
    Scalar carry = 0;
    for (std::size_t i = p.size(); i-- > 1;) {
      carry = carry * x + p[i];
      q[i - 1] = carry;
    }
    return q;
  };
  if (deg > 0) {
    mpz_class l = 1;
    for (const auto& x : c) l = lcm(l, x.get_den());
    const mpz_class a0 = mpz_class(c.front() * l);
    const mpz_class an = mpz_class(c.back() * l);
    auto dp = divisors(a0), dq = divisors(an);
    if (!dp || !dq) {
      out.scanned = false;
      return out;
    }
    std::set<Scalar> cands;
    for (const auto& p : *dp) {
      for (const auto& q : *dq) {
        Scalar r(p, q);
        r.canonicalize();
        cands.insert(r);
        cands.insert(-r);
      }
    }
    for (const auto& r : cands) {
      if (c.size() <= 1) break;
      if (horner(c, r) != 0) continue;
      out.roots.push_back(r);
      while (c.size() > 1 && horner(c, r) == 0) c = deflate(c, r);
    }
  }
  out.splits = c.size() == 1;
  std::sort(out.roots.begin(), out.roots.end());
  return out;
}

}  // namespace

HopfAlgebra::HopfAlgebra(std::vector<std::string> labels, std::vector<std::vector<Vec>> mul, Vec unit,
                         std::vector<std::vector<TensorTerm>> comul, Vec counit, std::vector<Vec> antipode)
    : labels_(std::move(labels)),
      mul_(std::move(mul)),
      unit_(std::move(unit)),
      counit_(std::move(counit)),
      antipode_(std::move(antipode)) {
  const std::size_t d = labels_.size();
  if (d == 0) throw InputError("a Hopf algebra needs a nonempty basis");
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    if (l.empty() || !seen.insert(l).second) throw InputError("basis labels must be nonempty and distinct");
  }
  if (mul_.size() != d) throw InputError("multiplication tensor has the wrong dimension");
  for (const auto& row : mul_) {
    if (row.size() != d) throw InputError("multiplication tensor has the wrong dimension");
    for (const auto& v : row) {
      if (v.size() != d) throw InputError("multiplication tensor has the wrong dimension");
    }
  }
  if (unit_.size() != d) throw InputError("unit vector has the wrong dimension");
  if (counit_.size() != d) throw InputError("counit vector has the wrong dimension");
  if (comul.size() != d) throw InputError("comultiplication tensor has the wrong dimension");
  for (auto& terms : comul) {
    for (const auto& t : terms) {
      if (t.left >= d || t.right >= d) throw InputError("comultiplication refers to an unknown basis element");
    }
    comul_.push_back(canonical_terms(std::move(terms)));
  }
  if (antipode_.size() != d) throw InputError("antipode matrix has the wrong dimension");
  for (const auto& v : antipode_) {
    if (v.size() != d) throw InputError("antipode matrix has the wrong dimension");
  }
}

std::optional<std::size_t> HopfAlgebra::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

std::optional<std::size_t> HopfAlgebra::unit_index() const {
  for (std::size_t i = 0; i < dim(); ++i) {
    if (unit_ == basis_vector(i)) return i;
  }
  return std::nullopt;
}

Vec HopfAlgebra::basis_vector(std::size_t i) const {
  Vec v(dim(), Scalar(0));
  v[i] = 1;
  return v;
}

Vec HopfAlgebra::multiply(const Vec& a, const Vec& b) const {
  Vec out(dim(), Scalar(0));
  for (std::size_t i = 0; i < dim(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (b[j] != 0) axpy(out, a[i] * b[j], mul_[i][j]);
    }
  }
  return out;
}

Scalar HopfAlgebra::counit(const Vec& a) const {
  Scalar s = 0;
  for (std::size_t i = 0; i < dim(); ++i) s += a[i] * counit_[i];
  return s;
}

Vec HopfAlgebra::antipode(const Vec& a) const {
  Vec out(dim(), Scalar(0));
  for (std::size_t i = 0; i < dim(); ++i) axpy(out, a[i], antipode_[i]);
  return out;
}

std::vector<Scalar> HopfAlgebra::comultiply(const Vec& a) const {
  const std::size_t d = dim();
  std::vector<Scalar> g(d * d, Scalar(0));
  for (std::size_t k = 0; k < d; ++k) {
    if (a[k] == 0) continue;
    for (const auto& t : comul_[k]) g[t.left * d + t.right] += a[k] * t.coeff;
  }
  return g;
}

bool operator==(const HopfAlgebra& a, const HopfAlgebra& b) {
  if (a.labels_ != b.labels_ || a.mul_ != b.mul_ || a.unit_ != b.unit_ || a.counit_ != b.counit_ ||
      a.antipode_ != b.antipode_ || a.comul_.size() != b.comul_.size()) {
    return false;
  }
  for (std::size_t k = 0; k < a.comul_.size(); ++k) {
    const auto &x = a.comul_[k], &y = b.comul_[k];
    if (x.size() != y.size()) return false;
    for (std::size_t t = 0; t < x.size(); ++t) {
      if (x[t].left != y[t].left || x[t].right != y[t].right || x[t].coeff != y[t].coeff) return false;
    }
  }
  return true;
}

bool HopfReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.passed; });
}

HopfReport hopf_verify(const HopfAlgebra& h) {
  const std::size_t d = h.dim();
  const auto& L = h.labels();
  HopfReport rep;
  auto e = [&](std::size_t i) { return h.basis_vector(i); };

  AxiomCheck assoc{"associativity", true, {}};
  for (std::size_t i = 0; i < d && assoc.passed; ++i) {
    for (std::size_t j = 0; j < d && assoc.passed; ++j) {
      for (std::size_t k = 0; k < d && assoc.passed; ++k) {
        if (h.multiply(h.product(i, j), e(k)) != h.multiply(e(i), h.product(j, k))) {
          assoc.passed = false;
          assoc.witness = {L[i], L[j], L[k]};
        }
      }
    }
  }
  rep.checks.push_back(assoc);

  AxiomCheck unit{"unit", true, {}};
  for (std::size_t i = 0; i < d && unit.passed; ++i) {
    if (h.multiply(h.unit(), e(i)) != e(i) || h.multiply(e(i), h.unit()) != e(i)) {
      unit.passed = false;
      unit.witness = {L[i]};
    }
  }
  rep.checks.push_back(unit);

  AxiomCheck coassoc{"coassociativity", true, {}};
  for (std::size_t k = 0; k < d && coassoc.passed; ++k) {
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Scalar> lhs, rhs;
    for (const auto& t : h.coproduct(k)) {
      for (const auto& u : h.coproduct(t.left)) lhs[{u.left, u.right, t.right}] += t.coeff * u.coeff;
      for (const auto& u : h.coproduct(t.right)) rhs[{t.left, u.left, u.right}] += t.coeff * u.coeff;
    }
    std::erase_if(lhs, [](const auto& kv) { return kv.second == 0; });
    std::erase_if(rhs, [](const auto& kv) { return kv.second == 0; });
    if (lhs != rhs) {
      coassoc.passed = false;
      coassoc.witness = {L[k]};
    }
  }
  rep.checks.push_back(coassoc);

  AxiomCheck counit{"counit", true, {}};
  for (std::size_t k = 0; k < d && counit.passed; ++k) {
    Vec left(d, Scalar(0)), right(d, Scalar(0));
    for (const auto& t : h.coproduct(k)) {
      left[t.right] += t.coeff * h.counit()[t.left];
      right[t.left] += t.coeff * h.counit()[t.right];
    }
    if (left != e(k) || right != e(k)) {
      counit.passed = false;
      counit.witness = {L[k]};
    }
  }
  rep.checks.push_back(counit);

  AxiomCheck dmult{"comultiplication multiplicative", true, {}};
  {
    Grid uu(d * d, Scalar(0));
    for (std::size_t a = 0; a < d; ++a) {
      for (std::size_t b = 0; b < d; ++b) uu[a * d + b] = h.unit()[a] * h.unit()[b];
    }
    if (h.comultiply(h.unit()) != uu) {
      dmult.passed = false;
      dmult.witness = {"unit"};
    }
  }
  for (std::size_t i = 0; i < d && dmult.passed; ++i) {
    for (std::size_t j = 0; j < d && dmult.passed; ++j) {
      Grid lhs = h.comultiply(h.product(i, j));
      Grid rhs(d * d, Scalar(0));
      for (const auto& s : h.coproduct(i)) {
        for (const auto& t : h.coproduct(j)) {
          const Vec& l = h.product(s.left, t.left);
          const Vec& r = h.product(s.right, t.right);
          const Scalar c = s.coeff * t.coeff;
          for (std::size_t a = 0; a < d; ++a) {
            if (l[a] == 0) continue;
            for (std::size_t b = 0; b < d; ++b) {
              if (r[b] != 0) rhs[a * d + b] += c * l[a] * r[b];
            }
          }
        }
      }
      if (lhs != rhs) {
        dmult.passed = false;
        dmult.witness = {L[i], L[j]};
      }
    }
  }
  rep.checks.push_back(dmult);

  AxiomCheck emult{"counit multiplicative", true, {}};
  if (h.counit(h.unit()) != 1) {
    emult.passed = false;
    emult.witness = {"unit"};
  }
  for (std::size_t i = 0; i < d && emult.passed; ++i) {
    for (std::size_t j = 0; j < d && emult.passed; ++j) {
      if (h.counit(h.product(i, j)) != h.counit()[i] * h.counit()[j]) {
        emult.passed = false;
        emult.witness = {L[i], L[j]};
      }
    }
  }
  rep.checks.push_back(emult);

  AxiomCheck anti{"antipode", true, {}};
  for (std::size_t k = 0; k < d && anti.passed; ++k) {
    Vec left(d, Scalar(0)), right(d, Scalar(0));
    for (const auto& t : h.coproduct(k)) {
      axpy(left, t.coeff, h.multiply(h.antipode_of(t.left), e(t.right)));
      axpy(right, t.coeff, h.multiply(e(t.left), h.antipode_of(t.right)));
    }
    Vec target(d, Scalar(0));
    axpy(target, h.counit()[k], h.unit());
    if (left != target || right != target) {
      anti.passed = false;
      anti.witness = {L[k]};
    }
  }
  rep.checks.push_back(anti);
  return rep;
}

HopfAlgebra sweedler() {
  // Basis index of g^i a^j is i + 2j.
  const std::size_t d = 4;
  std::vector<std::vector<Vec>> mul(d, std::vector<Vec>(d, Vec(d, Scalar(0))));
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        for (int l = 0; l < 2; ++l) {
          if (j + l >= 2) continue;
          const int sign = (j * k) % 2 == 0 ? 1 : -1;
          mul[i + 2 * j][k + 2 * l][(i + k) % 2 + 2 * (j + l)] = sign;
        }
      }
    }
  }
  std::vector<std::vector<TensorTerm>> comul = {
      {{0, 0, 1}},
      {{1, 1, 1}},
      {{2, 0, 1}, {1, 2, 1}},
      {{3, 1, 1}, {0, 3, 1}},
  };
  std::vector<Vec> s = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}};
  return HopfAlgebra({"1", "g", "a", "ga"}, std::move(mul), {1, 0, 0, 0}, std::move(comul), {1, 1, 0, 0},
                     std::move(s));
}

HopfAlgebra group_algebra(const std::vector<std::vector<std::size_t>>& table, std::vector<std::string> labels) {
  const std::size_t n = table.size();
  if (n == 0) throw InputError("group table is empty");
  for (const auto& row : table) {
    if (row.size() != n) throw InputError("group table is not square");
    for (auto v : row) {
      if (v >= n) throw InputError("group table entry out of range");
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (table[table[a][b]][c] != table[a][table[b][c]]) {
          throw InputError("group table is not associative at (" + std::to_string(a) + ", " + std::to_string(b) +
                           ", " + std::to_string(c) + ")");
        }
      }
    }
  }
  std::optional<std::size_t> id;
  for (std::size_t e = 0; e < n && !id; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = table[e][a] == a && table[a][e] == a;
    if (ok) id = e;
  }
  if (!id) throw InputError("group table has no identity element");
  std::vector<std::size_t> inv(n);
  for (std::size_t a = 0; a < n; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < n && !found; ++b) {
      if (table[a][b] == *id && table[b][a] == *id) {
        inv[a] = b;
        found = true;
      }
    }
    if (!found) throw InputError("group table element " + std::to_string(a) + " has no inverse");
  }
  if (labels.empty()) {
    for (std::size_t a = 0; a < n; ++a) labels.push_back(a == *id ? "1" : "g" + std::to_string(a));
  }
  if (labels.size() != n) throw InputError("one label per group element is required");
  std::vector<std::vector<Vec>> mul(n, std::vector<Vec>(n, Vec(n, Scalar(0))));
  std::vector<std::vector<TensorTerm>> comul(n);
  std::vector<Vec> s(n, Vec(n, Scalar(0)));
  Vec unit(n, Scalar(0)), counit(n, Scalar(1));
  unit[*id] = 1;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) mul[a][b][table[a][b]] = 1;
    comul[a] = {{a, a, 1}};
    s[a][inv[a]] = 1;
  }
  return HopfAlgebra(std::move(labels), std::move(mul), std::move(unit), std::move(comul), std::move(counit),
                     std::move(s));
}

HopfAlgebra cyclic_group_algebra(std::size_t n) {
  if (n == 0) throw InputError("cyclic group order must be positive");
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) table[a][b] = (a + b) % n;
    labels.push_back(a == 0 ? "1" : a == 1 ? "g" : "g" + std::to_string(a));
  }
  return group_algebra(table, labels);
}

Subspace::Subspace(std::size_t ambient, const std::vector<Vec>& spanning) : ambient_(ambient) {
  for (const auto& v : spanning) {
    if (v.size() != ambient) throw InputError("subspace vector has the wrong dimension");
  }
  basis_ = exactalg::row_basis(spanning, ambient);
  for (const auto& r : basis_) {
    std::size_t p = 0;
    while (r[p] == 0) ++p;
    pivots_.push_back(p);
  }
}

Vec Subspace::reduce(const Vec& v) const {
  Vec out = v;
  for (std::size_t t = 0; t < basis_.size(); ++t) {
    if (out[pivots_[t]] != 0) axpy(out, -out[pivots_[t]], basis_[t]);
  }
  return out;
}

bool Subspace::contains(const Vec& v) const { return is_zero_vec(reduce(v)); }

Subspace radical(const HopfAlgebra& h) {
  const std::size_t d = h.dim();
  Vec tr(d, Scalar(0));  // tr[l] = Tr(L_{e_l})
  for (std::size_t l = 0; l < d; ++l) {
    for (std::size_t k = 0; k < d; ++k) tr[l] += h.product(l, k)[k];
  }
  ScalarMatrix form(d, d, Scalar(0));
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < d; ++i) {
      const Vec& p = h.product(i, j);
      for (std::size_t l = 0; l < d; ++l) form(j, i) += p[l] * tr[l];
    }
  }
  return Subspace(d, exactalg::nullspace_scalar(form));
}

std::vector<Subspace> ideal_powers(const HopfAlgebra& h, const Subspace& ideal) {
  std::vector<Subspace> out{ideal};
  while (!out.back().is_zero()) {
    std::vector<Vec> span;
    for (const auto& u : out.back().basis()) {
      for (const auto& v : ideal.basis()) span.push_back(h.multiply(u, v));
    }
    Subspace next(h.dim(), span);
    if (next == out.back()) break;
    out.push_back(std::move(next));
  }
  return out;
}

bool is_nilpotent(const HopfAlgebra& h, const Subspace& ideal) { return ideal_powers(h, ideal).back().is_zero(); }

HopfIdealCheck check_hopf_ideal(const HopfAlgebra& h, const Subspace& j) {
  const std::size_t d = h.dim();
  HopfIdealCheck out;
  auto fail = [&](std::string cond, std::vector<std::string> w) {
    out.is_hopf_ideal = false;
    out.failed_condition = std::move(cond);
    out.witness = std::move(w);
    return out;
  };
  for (const auto& b : j.basis()) {
    const std::string bs = element_to_string(h, b);
    for (std::size_t i = 0; i < d; ++i) {
      if (!j.contains(h.multiply(h.basis_vector(i), b))) return fail("left ideal", {h.labels()[i], bs});
      if (!j.contains(h.multiply(b, h.basis_vector(i)))) return fail("right ideal", {bs, h.labels()[i]});
    }
    if (h.counit(b) != 0) return fail("counit", {bs});
    if (!is_zero_vec(project_both(j, h.comultiply(b), d))) return fail("coideal", {bs});
    if (!j.contains(h.antipode(b))) return fail("antipode", {bs});
  }
  return out;
}

Subspace largest_hopf_ideal(const HopfAlgebra& h, const Subspace& start) {
  const std::size_t d = h.dim();
  Subspace cur = start;
  while (!cur.is_zero()) {
    const auto& B = cur.basis();
    const std::size_t r = B.size();
    // Each constraint is a linear functional of the coefficient vector c (x = sum c_t B_t).
    std::vector<std::vector<Vec>> cols(r);
    for (std::size_t t = 0; t < r; ++t) {
      Vec eqs;
      for (std::size_t i = 0; i < d; ++i) {
        const Vec left = h.multiply(h.basis_vector(i), B[t]);
        for (std::size_t k = 0; k < d; ++k) {
          const Vec v = cur.reduce(h.multiply(left, h.basis_vector(k)));
          eqs.insert(eqs.end(), v.begin(), v.end());
        }
      }
      eqs.push_back(h.counit(B[t]));
      const Grid g = project_both(cur, h.comultiply(B[t]), d);
      eqs.insert(eqs.end(), g.begin(), g.end());
      const Vec s = cur.reduce(h.antipode(B[t]));
      eqs.insert(eqs.end(), s.begin(), s.end());
      cols[t].push_back(std::move(eqs));
    }
    const std::size_t neq = cols[0][0].size();
    ScalarMatrix sys(neq, r, Scalar(0));
    for (std::size_t t = 0; t < r; ++t) {
      for (std::size_t q = 0; q < neq; ++q) sys(q, t) = cols[t][0][q];
    }
    std::vector<Vec> next;
    for (const auto& c : exactalg::nullspace_scalar(sys)) {
      Vec x(d, Scalar(0));
      for (std::size_t t = 0; t < r; ++t) axpy(x, c[t], B[t]);
      next.push_back(std::move(x));
    }
    Subspace refined(d, next);
    if (refined.dim() == cur.dim()) break;
    cur = std::move(refined);
  }
  return cur;
}

Quotient quotient(const HopfAlgebra& h, const Subspace& j) {
  if (!check_hopf_ideal(h, j).is_hopf_ideal) throw InputError("quotient requires a Hopf ideal");
  const std::size_t d = h.dim();
  Quotient out;
  std::vector<Vec> span = j.basis();
  Subspace acc(d, span);
  for (std::size_t i = 0; i < d; ++i) {
    const Vec e = h.basis_vector(i);
    if (acc.contains(e)) continue;
    out.kept.push_back(i);
    span.push_back(e);
    acc = Subspace(d, span);
  }
  // Rows: ideal basis, then the kept basis vectors; coordinates are taken from the tail.
  ScalarMatrix basis(d, d, Scalar(0));
  std::size_t row = 0;
  for (const auto& b : j.basis()) {
    for (std::size_t c = 0; c < d; ++c) basis(row, c) = b[c];
    ++row;
  }
  for (auto i : out.kept) basis(row++, i) = 1;
  const ScalarMatrix inv = invert(basis);
  const std::size_t off = j.dim();
  const std::size_t q = out.kept.size();
  auto coords = [&](const Vec& v) {
    Vec full = times(v, inv);
    return Vec(full.begin() + static_cast<std::ptrdiff_t>(off), full.end());
  };
  std::vector<std::string> labels;
  std::vector<std::vector<Vec>> mul(q, std::vector<Vec>(q));
  std::vector<std::vector<TensorTerm>> comul(q);
  Vec counit(q);
  std::vector<Vec> anti(q);
  for (std::size_t a = 0; a < q; ++a) {
    const std::size_t ia = out.kept[a];
    labels.push_back(h.labels()[ia]);
    for (std::size_t b = 0; b < q; ++b) mul[a][b] = coords(h.product(ia, out.kept[b]));
    for (const auto& t : h.coproduct(ia)) {
      const Vec l = coords(h.basis_vector(t.left));
      const Vec r = coords(h.basis_vector(t.right));
      for (std::size_t x = 0; x < q; ++x) {
        if (l[x] == 0) continue;
        for (std::size_t y = 0; y < q; ++y) {
          if (r[y] != 0) comul[a].push_back({x, y, t.coeff * l[x] * r[y]});
        }
      }
    }
    counit[a] = h.counit()[ia];
    anti[a] = coords(h.antipode_of(ia));
  }
  out.algebra = HopfAlgebra(std::move(labels), std::move(mul), coords(h.unit()), std::move(comul),
                            std::move(counit), std::move(anti));
  return out;
}

HopfAlgebra gr_radical_hopf(const HopfAlgebra& h) {
  const std::size_t d = h.dim();
  const Subspace rad = radical(h);
  if (rad.is_zero()) return h;
  const auto check = check_hopf_ideal(h, rad);
  if (!check.is_hopf_ideal) {
    std::string w;
    for (const auto& s : check.witness) w += (w.empty() ? "" : ", ") + s;
    throw PreconditionError("radical is not a Hopf ideal: " + check.failed_condition + " fails at " + w);
  }
  auto powers = ideal_powers(h, rad);
  if (!powers.back().is_zero()) throw PreconditionError("radical is not nilpotent");
  // Filtration F_0 = H, F_m = I^m; an adapted basis takes complements level by level.
  std::vector<Subspace> filt{Subspace(d, [&] {
    std::vector<Vec> all;
    for (std::size_t i = 0; i < d; ++i) all.push_back(h.basis_vector(i));
    return all;
  }())};
  filt.insert(filt.end(), powers.begin(), powers.end());
  std::vector<Vec> adapted;
  std::vector<std::size_t> degree;
  std::vector<std::string> labels;
  for (std::size_t m = 0; m + 1 < filt.size(); ++m) {
    std::vector<Vec> span = filt[m + 1].basis();
    Subspace acc(d, span);
    std::vector<Vec> cands;
    if (m == 0) {
      for (std::size_t i = 0; i < d; ++i) cands.push_back(h.basis_vector(i));
    } else {
      cands = filt[m].basis();
    }
    for (const auto& v : cands) {
      if (acc.contains(v)) continue;
      span.push_back(v);
      acc = Subspace(d, span);
      adapted.push_back(v);
      degree.push_back(m);
      std::optional<std::size_t> std_index;
      for (std::size_t i = 0; i < d; ++i) {
        if (v == h.basis_vector(i)) std_index = i;
      }
      labels.push_back(std_index ? h.labels()[*std_index] : "b" + std::to_string(adapted.size() - 1));
    }
  }
  ScalarMatrix basis(d, d, Scalar(0));
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) basis(r, c) = adapted[r][c];
  }
  const ScalarMatrix inv = invert(basis);
  auto coords_at = [&](const Vec& v, std::size_t deg) {
    Vec c = times(v, inv);
    for (std::size_t t = 0; t < d; ++t) {
      if (degree[t] != deg) c[t] = 0;
    }
    return c;
  };
  std::vector<std::vector<Vec>> mul(d, std::vector<Vec>(d));
  std::vector<std::vector<TensorTerm>> comul(d);
  Vec counit(d, Scalar(0));
  std::vector<Vec> anti(d);
  for (std::size_t s = 0; s < d; ++s) {
    for (std::size_t t = 0; t < d; ++t) {
      mul[s][t] = coords_at(h.multiply(adapted[s], adapted[t]), degree[s] + degree[t]);
    }
    const Grid g = h.comultiply(adapted[s]);
    // Change basis on both tensor factors, keeping the total degree.
    Grid half(d * d, Scalar(0));
    for (std::size_t a = 0; a < d; ++a) {
      Vec row(g.begin() + static_cast<std::ptrdiff_t>(a * d), g.begin() + static_cast<std::ptrdiff_t>((a + 1) * d));
      row = times(row, inv);
      std::copy(row.begin(), row.end(), half.begin() + static_cast<std::ptrdiff_t>(a * d));
    }
    for (std::size_t y = 0; y < d; ++y) {
      Vec col(d);
      for (std::size_t a = 0; a < d; ++a) col[a] = half[a * d + y];
      col = times(col, inv);
      for (std::size_t x = 0; x < d; ++x) {
        if (col[x] != 0 && degree[x] + degree[y] == degree[s]) comul[s].push_back({x, y, col[x]});
      }
    }
    if (degree[s] == 0) counit[s] = h.counit(adapted[s]);
    anti[s] = coords_at(h.antipode(adapted[s]), degree[s]);
  }
  return HopfAlgebra(std::move(labels), std::move(mul), coords_at(h.unit(), 0), std::move(comul),
                     std::move(counit), std::move(anti));
}

GrouplikeReport grouplikes(const HopfAlgebra& h) {
  const std::size_t d = h.dim();
  // (M_a x)_b = sum_k [coefficient of e_a (x) e_b in Delta(e_k)] x_k; a grouplike x
  // satisfies M_a x = x_a x for every a.
  std::vector<ScalarMatrix> ops(d, ScalarMatrix(d, d, Scalar(0)));
  for (std::size_t k = 0; k < d; ++k) {
    for (const auto& t : h.coproduct(k)) ops[t.left](t.right, k) += t.coeff;
  }
  GrouplikeReport out;
  struct Branch {
    std::vector<Vec> space;  // spanning columns
    Vec eig;
  };
  std::vector<Vec> full;
  for (std::size_t i = 0; i < d; ++i) full.push_back(h.basis_vector(i));
  std::vector<Branch> branches{{full, {}}};
  for (std::size_t a = 0; a < d && !branches.empty(); ++a) {
    const RootScan rs = rational_roots(charpoly(ops[a]));
    if (!rs.scanned || !rs.splits) out.complete = false;
    std::vector<Branch> next;
    for (const auto& br : branches) {
      for (const auto& lambda : rs.roots) {
        // Restrict (M_a - lambda) to the branch space and take its kernel.
        const std::size_t r = br.space.size();
        ScalarMatrix sys(d, r, Scalar(0));
        for (std::size_t t = 0; t < r; ++t) {
          for (std::size_t b = 0; b < d; ++b) {
            Scalar v = -lambda * br.space[t][b];
            for (std::size_t k = 0; k < d; ++k) v += ops[a](b, k) * br.space[t][k];
            sys(b, t) = v;
          }
        }
        std::vector<Vec> kernel;
        for (const auto& c : exactalg::nullspace_scalar(sys)) {
          Vec x(d, Scalar(0));
          for (std::size_t t = 0; t < r; ++t) axpy(x, c[t], br.space[t]);
          kernel.push_back(std::move(x));
        }
        if (kernel.empty()) continue;
        Vec eig = br.eig;
        eig.push_back(lambda);
        next.push_back({std::move(kernel), std::move(eig)});
      }
    }
    branches = std::move(next);
  }
  for (const auto& br : branches) {
    const Vec& x = br.eig;
    if (h.counit(x) != 1) continue;
    Grid xx(d * d);
    for (std::size_t a = 0; a < d; ++a) {
      for (std::size_t b = 0; b < d; ++b) xx[a * d + b] = x[a] * x[b];
    }
    if (h.comultiply(x) == xx) out.elements.push_back(x);
  }
  std::sort(out.elements.begin(), out.elements.end(), [](const Vec& a, const Vec& b) {
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  return out;
}

std::string element_to_string(const HopfAlgebra& h, const Vec& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    const bool neg = v[i] < 0;
    const Scalar mag = neg ? Scalar(-v[i]) : v[i];
    const std::string& label = h.labels()[i];
    std::string term;
    if (label == "1") {
      term = exactalg::to_string(mag);
    } else if (mag == 1) {
      term = label;
    } else {
      term = exactalg::to_string(mag) + "*" + label;
    }
    if (out.empty()) {
      out = neg ? "-" + term : term;
    } else {
      out += (neg ? " - " : " + ") + term;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace deformata::hopfact
