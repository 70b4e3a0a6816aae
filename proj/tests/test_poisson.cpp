#include <doctest.h>

#include "deformata/frontend/paper.hpp"
#include "deformata/poisson/poisson.hpp"
#include "support.hpp"

using namespace deformata;
using namespace deformata::poisson;
using testsupport::P;
using testsupport::R;

namespace {

const VarList XY{"x", "y"};
const VarList XYZ{"x", "y", "z"};

PoissonStructure sec3() { return frontend::load_corpus({"sec3.poi"}).poisson(); }

// Log-canonical oracle: {x_i, x_j} = l_ij x_i x_j gives
// {x^a, x^b} = (sum_ij a_i b_j l_ij) x^{a+b}.
Poly log_canonical_oracle(const std::vector<std::vector<Scalar>>& l, const Poly& f, const Poly& g) {
  Poly out(f.shared_variables(), {});
  for (const auto& [a, ca] : f.terms()) {
    for (const auto& [b, cb] : g.terms()) {
      Scalar s = 0;
      for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) s += Scalar(a[i]) * Scalar(b[j]) * l[i][j];
      }
      Exponents e(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) e[i] = a[i] + b[i];
      out.add_term(e, s * ca * cb);
    }
  }
  return out;
}

PoissonStructure log_canonical(const std::vector<std::vector<Scalar>>& l, const VarList& v) {
  std::map<defquant::GeneratorPair, Poly> br;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      Exponents e(v.size(), 0);
      e[i] = e[j] = 1;
      Poly p(testsupport::vars(v), {});
      p.add_term(e, l[i][j]);
      br[{i, j}] = p;
    }
  }
  return PoissonStructure(v, br);
}

std::vector<std::vector<Scalar>> random_skew(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-3, 3);
  std::vector<std::vector<Scalar>> l(n, std::vector<Scalar>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      l[i][j] = d(rng);
      l[j][i] = -l[i][j];
    }
  }
  return l;
}

}  // namespace

TEST_CASE("moyal: {x^2, y} = -2x at depth 1") {
  const auto A = defquant::DeformAlgebra::moyal(XY, {{"x", "y"}}, 2);
  const auto rep = induced_bracket_report(A);
  CHECK(rep.structure.depth() == 1);
  CHECK(rep.structure.generator_bracket(0, 1) == P("-1", XY));
  CHECK(bracket_poly(rep.structure, P("x^2", XY), P("y", XY)) == P("-2*x", XY));
}

TEST_CASE("sec3: induced bracket of the quantum algebra matches the written one") {
  const auto ws = frontend::load_corpus({"sec3.alg", "sec3.poi"});
  const auto ind = induced_bracket(ws.algebra().algebra);
  CHECK(ind.depth() == 1);
  CHECK(ind.brackets() == ws.poisson().brackets());
  CHECK(ind.generator_bracket(0, 1) == P("x*y", XYZ));
  CHECK(ind.generator_bracket(1, 2) == P("-y*z", XYZ));
}

TEST_CASE("sec3: {x^a y^b z^c, x} = -(b + c) x^{a+1} y^b z^c") {
  const auto p = sec3();
  for (std::uint32_t a = 0; a <= 3; ++a) {
    for (std::uint32_t b = 0; b <= 3; ++b) {
      for (std::uint32_t c = 0; c <= 3; ++c) {
        Poly m(p.shared_variables(), {}), want(p.shared_variables(), {});
        m.add_term({a, b, c}, 1);
        want.add_term({a + 1, b, c}, -Scalar(b + c));
        CHECK(bracket_poly(p, m, P("x", XYZ)) == want);
      }
    }
  }
}

TEST_CASE("sec3: xy/z is central, x is not") {
  const auto p = sec3();
  const RatFn f = R("x*y/z", XYZ);
  CHECK(bracket_rat(p, f, R("x", XYZ)).is_zero());
  CHECK(bracket_rat(p, f, R("x^2", XYZ)).is_zero());
  CHECK(is_central_rat(p, f).central);
  const auto c = is_central_rat(p, R("x", XYZ));
  CHECK_FALSE(c.central);
  REQUIRE(c.witness_generator);
  CHECK(*c.witness_generator == 1);
  CHECK(c.witness_bracket == R("x*y", XYZ));
  CHECK(jacobi_defect(p, P("x", XYZ), P("y", XYZ), P("z", XYZ)).is_zero());
}

TEST_CASE("center: sec3 at d = 8 and Moyal at d = 5 are the constants") {
  const auto c = polynomial_center(sec3(), 8);
  CHECK(c.trivial);
  CHECK(c.certified);
  REQUIRE(c.basis.size() == 1);
  CHECK(c.basis[0] == P("1", XYZ));

  const auto A = defquant::DeformAlgebra::moyal(XY, {{"x", "y"}}, 1);
  const auto m = polynomial_center(induced_bracket(A), 5);
  CHECK(m.trivial);
  CHECK(m.basis.size() == 1);

  // The zero bracket: every monomial of degree <= 2.
  const auto zero = PoissonStructure(XY, {});
  CHECK(polynomial_center(zero, 2).basis.size() == 6);
}

TEST_CASE("depth: q = 1 + h^2 gives depth 2") {
  const auto ws = frontend::load_corpus({"depth2.alg"});
  const auto rep = induced_bracket_report(ws.algebra().algebra);
  CHECK(rep.structure.depth() == 2);
  CHECK(rep.structure.generator_bracket(0, 1) == P("x*y", XY));
  CHECK(rep.valuations.at({0, 1}) == std::optional<std::size_t>(2));
  const auto flat = defquant::DeformAlgebra::quantum(XY, {{"x", "y", defquant::HSeries::constant(2, 1)}}, 2);
  CHECK_THROWS_AS(induced_bracket(flat), InputError);
}

TEST_CASE("property: log-canonical brackets match the exponent oracle") {
  for (auto seed : testsupport::seeds()) {
    std::mt19937_64 rng(seed);
    for (int t = 0; t < 10; ++t) {
      const auto l = random_skew(3, rng);
      const auto p = log_canonical(l, XYZ);
      const Poly f = testsupport::random_poly(XYZ, 3, rng), g = testsupport::random_poly(XYZ, 3, rng);
      CHECK(bracket_poly(p, f, g) == log_canonical_oracle(l, f, g));
      CHECK(jacobi_defect(p, f, g, testsupport::random_poly(XYZ, 2, rng)).is_zero());
    }
  }
}

TEST_CASE("property: Jacobi, Leibniz and antisymmetry on the corpus brackets") {
  auto ws = frontend::load_corpus({"sec3.alg", "sec3.poi", "moyal.alg", "sl2.alg", "depth2.alg", "weyl.alg", "z3.alg"});
  std::vector<PoissonStructure> all{ws.poisson()};
  for (const auto& [name, e] : ws.algebras) all.push_back(induced_bracket(e.algebra));
  for (auto seed : testsupport::seeds()) {
    std::mt19937_64 rng(seed);
    for (const auto& p : all) {
      for (int t = 0; t < 5; ++t) {
        const Poly f = testsupport::random_poly(p.variables(), 2, rng), g = testsupport::random_poly(p.variables(), 2, rng),
                   k = testsupport::random_poly(p.variables(), 2, rng);
        INFO("seed " << seed << ": " << to_string(f) << " | " << to_string(g) << " | " << to_string(k));
        CHECK(jacobi_defect(p, f, g, k).is_zero());
        CHECK(bracket_poly(p, f, g * k) == bracket_poly(p, f, g) * k + g * bracket_poly(p, f, k));
        CHECK(bracket_poly(p, f, g) == -bracket_poly(p, g, f));
      }
    }
  }
}

TEST_CASE("property: bracket_rat restricts to bracket_poly and obeys the quotient rule") {
  const auto p = sec3();
  for (auto seed : testsupport::seeds()) {
    std::mt19937_64 rng(seed);
    for (int t = 0; t < 8; ++t) {
      const Poly f = testsupport::random_poly(XYZ, 2, rng), g = testsupport::random_nonzero_poly(XYZ, 2, rng),
                 k = testsupport::random_poly(XYZ, 2, rng);
      CHECK(bracket_rat(p, RatFn(f), RatFn(k)) == RatFn(bracket_poly(p, f, k)));
      const RatFn lhs = bracket_rat(p, RatFn(f, g), RatFn(k));
      const RatFn rhs(bracket_poly(p, f, k) * g - f * bracket_poly(p, g, k), g * g);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("property: the induced bracket does not depend on the lifts") {
  const auto ws = frontend::load_corpus({"sec3.alg", "moyal.alg", "sl2.alg", "depth2.alg"});
  for (auto seed : testsupport::seeds()) {
    std::mt19937_64 rng(seed);
    for (const auto& [name, e] : ws.algebras) {
      const auto& A = e.algebra;
      const auto p = induced_bracket(A);
      const auto m = static_cast<std::size_t>(p.depth());
      for (int t = 0; t < 5; ++t) {
        const Poly f = testsupport::random_poly(A.variables(), 2, rng), g = testsupport::random_poly(A.variables(), 2, rng);
        HPoly a = A.lift(f), b = A.lift(g);
        for (std::size_t k = 1; k <= A.order(); ++k) {
          a.add_shifted(A.lift(testsupport::random_poly(A.variables(), 2, rng)), k);
          b.add_shifted(A.lift(testsupport::random_poly(A.variables(), 2, rng)), k);
        }
        INFO(name << " seed " << seed);
        CHECK(lifted_bracket(A, m, a, b) == bracket_poly(p, f, g));
        // Below the depth every commutator vanishes.
        const HPoly c = defquant::commutator(A, a, b);
        for (std::size_t k = 0; k < m; ++k) CHECK(c[k].is_zero());
      }
    }
  }
}
