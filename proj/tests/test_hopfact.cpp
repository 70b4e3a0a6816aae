#include <doctest.h>

#include <algorithm>

#include "deformata/frontend/paper.hpp"
#include "deformata/hopfact/action.hpp"
#include "support.hpp"

using namespace deformata;
using namespace deformata::hopfact;
using exactalg::VarList;
using testsupport::P;

namespace {

const VarList XYZ{"x", "y", "z"};

Vec e(std::size_t d, std::size_t i) {
  Vec v(d, 0);
  v[i] = 1;
  return v;
}

DeformAlgebra sec3_algebra(std::size_t order) {
  return frontend::load_corpus({"sec3.alg"}, {.order = order}).algebra().algebra;
}

HPoly H(const DeformAlgebra& A, const std::string& text) {
  return frontend::eval_hpoly(frontend::parse_expression(text), A.shared_variables(), A.order());
}

// g: x, y, -z; a: 0, 0, a_z.
HopfAction sweedler_action(const DeformAlgebra& A, const std::string& a_z) {
  return HopfAction(sweedler(), A,
                    {{"g", "x", H(A, "x")}, {"g", "y", H(A, "y")}, {"g", "z", H(A, "-z")},
                     {"a", "x", A.zero()}, {"a", "y", A.zero()}, {"a", "z", H(A, a_z)}});
}

HopfAction z2_action(const DeformAlgebra& A) {
  return HopfAction(cyclic_group_algebra(2), A, {{"g", "x", H(A, "x")}, {"g", "y", H(A, "y")}, {"g", "z", H(A, "-z")}});
}

// Every corpus action, built at order N.
std::vector<std::pair<std::string, HopfAction>> corpus_actions(std::size_t N) {
  std::vector<std::pair<std::string, HopfAction>> out;
  for (const auto& files : std::vector<std::vector<std::string>>{{"sec3.alg", "sec3.act"}, {"sec3.alg", "z2.act"},
                                                                  {"z3.alg", "z3.act"}}) {
    const auto ws = frontend::load_corpus(files, {.order = N});
    for (const auto& [name, a] : ws.actions) out.emplace_back(name, a);
  }
  return out;
}

bool is_group_algebra(const HopfAlgebra& h) { return grouplikes(h).elements.size() == h.dim(); }

// Nondegeneracy of the trace form (u, v) -> Tr(L_{uv}).
bool trace_form_nondegenerate(const HopfAlgebra& h) {
  const std::size_t d = h.dim();
  exactalg::ScalarMatrix t(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const Vec uv = h.multiply(e(d, i), e(d, j));
      Scalar tr = 0;
      for (std::size_t k = 0; k < d; ++k) tr += h.multiply(uv, e(d, k))[k];
      t(i, j) = tr;
    }
  }
  return exactalg::determinant(t) != 0;
}

}  // namespace

TEST_CASE("sweedler: axioms, products and the antipode on a") {
  const auto h = sweedler();
  CHECK(h.dim() == 4);
  CHECK(hopf_verify(h).passed());
  CHECK(h.multiply(e(4, 3), e(4, 2)) == Vec(4, 0));
  CHECK(h.multiply(e(4, 2), e(4, 1)) == Vec{0, 0, 0, -1});  // a g = -ga
  CHECK(h.counit(e(4, 3)) == 0);
  CHECK(h.antipode(e(4, 2)) == Vec{0, 0, 0, -1});
  // m(S (x) id) Delta(a) = S(a) 1 + S(g) a = -ga + ga = 0 = eps(a).
  const auto grid = h.comultiply(e(4, 2));
  Vec sum(4, 0);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      if (grid[i * 4 + j] == 0) continue;
      const Vec t = h.multiply(h.antipode(e(4, i)), e(4, j));
      for (std::size_t k = 0; k < 4; ++k) sum[k] += grid[i * 4 + j] * t[k];
    }
  }
  CHECK(sum == Vec(4, 0));
}

TEST_CASE("sweedler: Delta(a) = a (x) a is rejected with a witness") {
  const auto s = sweedler();
  std::vector<std::vector<Vec>> mul(4);
  std::vector<std::vector<TensorTerm>> comul;
  std::vector<Vec> anti;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) mul[i].push_back(s.product(i, j));
    comul.push_back(s.coproduct(i));
    anti.push_back(s.antipode_of(i));
  }
  comul[2] = {{2, 2, 1}};
  const HopfAlgebra bad(s.labels(), mul, s.unit(), comul, s.counit(), anti);
  const auto rep = hopf_verify(bad);
  CHECK_FALSE(rep.passed());
  const auto failed = std::find_if(rep.checks.begin(), rep.checks.end(), [](const AxiomCheck& c) { return !c.passed; });
  REQUIRE(failed != rep.checks.end());
  CHECK_FALSE(failed->witness.empty());
}

TEST_CASE("group algebras") {
  CHECK(hopf_verify(cyclic_group_algebra(2)).passed());
  const auto z3 = cyclic_group_algebra(3);
  CHECK(z3.dim() == 3);
  CHECK(z3.antipode(e(3, 1)) == e(3, 2));
  CHECK(z3.antipode(z3.antipode(e(3, 1))) == e(3, 1));
  CHECK(grouplikes(z3).elements.size() == 3);
  CHECK_THROWS_AS(group_algebra({{1, 0}, {0, 0}}), InputError);
  CHECK_THROWS_AS(group_algebra({{0, 1}, {1, 1}}), InputError);
}

TEST_CASE("radical and grouplikes of Sweedler") {
  const auto h = sweedler();
  const auto rad = radical(h);
  CHECK(rad == Subspace(4, {e(4, 2), e(4, 3)}));
  const auto pw = ideal_powers(h, rad);
  REQUIRE(pw.size() == 2);
  CHECK(pw[1].is_zero());
  CHECK(is_nilpotent(h, rad));
  CHECK(check_hopf_ideal(h, rad).is_hopf_ideal);
  CHECK(radical(cyclic_group_algebra(2)).is_zero());

  const auto g = grouplikes(h);
  CHECK(g.complete);
  REQUIRE(g.elements.size() == 2);
  CHECK(std::find(g.elements.begin(), g.elements.end(), e(4, 0)) != g.elements.end());
  CHECK(std::find(g.elements.begin(), g.elements.end(), e(4, 1)) != g.elements.end());
}

TEST_CASE("gr of the radical filtration") {
  const auto gr = gr_radical_hopf(sweedler());
  CHECK(hopf_verify(gr).passed());
  CHECK(gr == sweedler());
  CHECK(gr_radical_hopf(cyclic_group_algebra(3)) == cyclic_group_algebra(3));
}

TEST_CASE("sec3 action: a.z = xy, a.(z*z) = 0, h.1 = eps(h)") {
  const auto A = sec3_algebra(3);
  const auto act3 = frontend::load_corpus({"sec3.alg", "sec3.act"}).action();
  CHECK(act(act3, e(4, 2), H(A, "z")) == H(A, "x*y"));
  CHECK(act(act3, e(4, 2), defquant::star(A, H(A, "z"), H(A, "z"))).is_zero());
  for (std::size_t i = 0; i < 4; ++i) CHECK(act_basis(act3, i, A.one()) == A.one().scaled(sweedler().counit()[i]));
}

TEST_CASE("module_algebra_check: sec3 passes at N = 3, max_deg 6; a.z = x^2 fails on a relation") {
  const auto A = sec3_algebra(3);
  std::mt19937_64 rng(1);
  CHECK(module_algebra_check(sweedler_action(A, "x*y"), 20, 6, rng).passed());
  const auto bad = module_algebra_check(sweedler_action(A, "x^2"), 20, 6, rng);
  REQUIRE_FALSE(bad.passed());
  CHECK(bad.failures.front().kind == "relation");
  CHECK(module_algebra_check(HopfAction::trivial(sweedler(), A), 10, 4, rng).passed());
  // The other skew-primitive orientation, Delta(a) = 1 (x) a + a (x) g, also passes:
  // a kills x and y and g fixes them, so the two extensions agree on every relation.
  const auto s = sweedler();
  std::vector<std::vector<Vec>> mul(4);
  std::vector<std::vector<TensorTerm>> comul;
  std::vector<Vec> anti;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) mul[i].push_back(s.product(i, j));
    anti.push_back(s.antipode_of(i));
  }
  comul = {{{0, 0, 1}}, {{1, 1, 1}}, {{0, 2, 1}, {2, 1, 1}}, {{1, 3, 1}, {3, 0, 1}}};
  anti[2] = {0, 0, 0, 1};
  anti[3] = {0, 0, -1, 0};
  const HopfAlgebra flipped(s.labels(), mul, s.unit(), comul, s.counit(), anti);
  REQUIRE(hopf_verify(flipped).passed());
  const HopfAction fa(flipped, A,
                      {{"g", "x", H(A, "x")}, {"g", "y", H(A, "y")}, {"g", "z", H(A, "-z")},
                       {"a", "x", A.zero()}, {"a", "y", A.zero()}, {"a", "z", H(A, "x*y")}});
  CHECK(module_algebra_check(fa, 20, 6, rng).passed());
}

TEST_CASE("invariants of the sec3 action") {
  const auto A = sec3_algebra(2);
  const auto a = sweedler_action(A, "x*y");
  const auto mod = invariants(a, 2, Level::ModH);
  CHECK(mod.leading.size() == 7);
  for (const char* f : {"1", "x", "y", "x^2", "x*y", "y^2", "z^2"}) {
    for (std::size_t i = 0; i < 4; ++i) CHECK(act_classical(a, e(4, i), P(f, XYZ)) == P(f, XYZ).scaled(sweedler().counit()[i]));
  }
  for (const auto& f : mod.leading) {
    for (std::size_t i = 0; i < 4; ++i) CHECK(act_classical(a, e(4, i), f) == f.scaled(sweedler().counit()[i]));
  }
  const auto full = invariants(a, 1, Level::Full);
  CHECK(full.leading.size() == 3);
  for (const auto& f : full.basis) {
    for (std::size_t i = 0; i < 4; ++i) CHECK(act(a, e(4, i), f) == f.scaled(sweedler().counit()[i]));
  }
  CHECK(invariants(HopfAction::trivial(sweedler(), A), 1, Level::ModH).leading.size() == 4);
}

TEST_CASE("annihilators") {
  const auto A = sec3_algebra(2);
  for (auto level : {Level::ModH, Level::Full}) {
    // a.m has z-degree one less than m and is nonzero only for odd z-degree, so g fixes it:
    // a - ga kills everything, yet span{a - ga} is not a coideal.
    const Subspace ann = annihilator(sweedler_action(A, "x*y"), 4, level);
    CHECK(ann == Subspace(4, {Vec{0, 0, 1, -1}}));
    CHECK_FALSE(check_hopf_ideal(sweedler(), ann).is_hopf_ideal);
    CHECK(annihilator(sweedler_action(A, "x*y"), 1, level) == ann);
    CHECK(annihilator(sweedler_action(A, "0"), 2, level) == Subspace(4, {e(4, 2), e(4, 3)}));
    CHECK(annihilator(z2_action(A), 2, level).is_zero());
  }
}

TEST_CASE("factors_through_group and inner_faithful") {
  const auto A = sec3_algebra(3);
  for (auto level : {Level::ModH, Level::Full}) {
    INFO(to_string(level));
    const auto s = sweedler_action(A, "x*y");
    CHECK(factors_through_group(s, 4, level).verdict == GroupVerdict::NotGroup);
    CHECK(inner_faithful(s, 4, level).inner_faithful());

    const auto zero = sweedler_action(A, "0");
    const auto f = factors_through_group(zero, 4, level);
    CHECK(f.verdict == GroupVerdict::Group);
    CHECK(f.group_labels.size() == 2);
    const auto inf = inner_faithful(zero, 4, level);
    CHECK_FALSE(inf.inner_faithful());
    CHECK(inf.hopf_ideal == Subspace(4, {e(4, 2), e(4, 3)}));

    const auto triv = factors_through_group(HopfAction::trivial(sweedler(), A), 4, level);
    CHECK(triv.verdict == GroupVerdict::Group);
    CHECK(triv.group_labels.size() == 1);

    const auto tz2 = inner_faithful(HopfAction::trivial(cyclic_group_algebra(2), A), 4, level);
    CHECK_FALSE(tz2.inner_faithful());
    CHECK(tz2.hopf_ideal == Subspace(2, {Vec{1, -1}}));
  }
}

TEST_CASE("property: constructed Hopf algebras pass verify and gr passes verify") {
  std::vector<HopfAlgebra> hs{sweedler()};
  for (std::size_t n = 1; n <= 5; ++n) hs.push_back(cyclic_group_algebra(n));
  hs.push_back(group_algebra({{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}));
  for (const auto& h : hs) {
    CHECK(hopf_verify(h).passed());
    const auto rad = radical(h);
    CHECK(is_nilpotent(h, rad));
    CHECK(hopf_verify(gr_radical_hopf(h)).passed());
    CHECK(trace_form_nondegenerate(quotient(h, rad).algebra));
  }
}

TEST_CASE("property: module_algebra_check on every corpus action") {
  for (auto seed : testsupport::seeds()) {
    std::mt19937_64 rng(seed);
    for (const auto& [name, a] : corpus_actions(2)) {
      INFO(name << " seed " << seed);
      CHECK(module_algebra_check(a, 5, 4, rng).passed());
    }
  }
}

TEST_CASE("property: (hk).u = h.(k.u) and reduction mod h commutes with the action") {
  for (auto seed : testsupport::seeds()) {
    std::mt19937_64 rng(seed);
    for (const auto& [name, a] : corpus_actions(2)) {
      const auto& h = a.hopf();
      for (int t = 0; t < 3; ++t) {
        const HPoly u = random_element(a.algebra(), 3, rng);
        INFO(name << " seed " << seed << ": " << to_string(u));
        for (std::size_t i = 0; i < h.dim(); ++i) {
          CHECK(act_basis(a, i, u)[0] == act_classical(a, e(h.dim(), i), u[0]));
          for (std::size_t j = 0; j < h.dim(); ++j) {
            CHECK(act(a, h.multiply(e(h.dim(), i), e(h.dim(), j)), u) == act_basis(a, i, act_basis(a, j, u)));
          }
        }
      }
    }
  }
}

TEST_CASE("property: inner-faithful mod h implies inner-faithful; converse for group algebras") {
  auto actions = corpus_actions(2);
  const auto A = sec3_algebra(2);
  actions.emplace_back("sweedler a->0", sweedler_action(A, "0"));
  actions.emplace_back("trivial z2", HopfAction::trivial(cyclic_group_algebra(2), A));
  for (const auto& [name, a] : actions) {
    INFO(name);
    const std::uint32_t d = default_degree_bound(a.algebra());
    const bool mod = inner_faithful(a, d, Level::ModH).inner_faithful();
    const bool full = inner_faithful(a, d, Level::Full).inner_faithful();
    if (mod) CHECK(full);
    if (is_group_algebra(a.hopf())) {
      CHECK(mod == full);
      CHECK(factors_through_group(a, d, Level::Full).verdict == GroupVerdict::Group);
    }
  }
}
