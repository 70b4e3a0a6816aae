#include "deformata/frontend/paper.hpp"

#include <random>
#include <sstream>

#include "deformata/frontend/corpus.hpp"
#include "deformata/galois/galois.hpp"

namespace deformata::frontend {

Workspace load_corpus(const std::vector<std::string>& files, const BuildOptions& opts) {
  std::vector<Document> docs;
  for (const auto& f : files) docs.push_back(parse(corpus_file(f)));
  return build(docs, opts);
}

namespace {

Poly poly(const std::string& text, const VarList& vars) {
  return eval_poly(parse_expression(text), std::make_shared<const VarList>(vars));
}

RatFn ratfn(const std::string& text, const VarList& vars) {
  return eval_ratfn(parse_expression(text), std::make_shared<const VarList>(vars));
}

// Checks every listed bracket {left, right} = value.
bool brackets_match(const PoissonStructure& p, const std::vector<std::tuple<std::string, std::string, std::string>>& want,
                    std::string& detail) {
  const VarList& v = p.variables();
  auto idx = [&](const std::string& s) { return static_cast<std::size_t>(std::find(v.begin(), v.end(), s) - v.begin()); };
  bool ok = true;
  for (const auto& [l, r, val] : want) {
    const Poly got = p.generator_bracket(idx(l), idx(r));
    detail += "{" + l + "," + r + "} = " + exactalg::to_string(got) + "; ";
    ok = ok && got == poly(val, v);
  }
  return ok;
}

}  // namespace

std::vector<PaperCheck> verify_paper(std::uint64_t seed, std::uint32_t center_degree) {
  std::vector<PaperCheck> out;
  auto run = [&](std::string id, std::string claim, auto&& body) {
    PaperCheck c{std::move(id), std::move(claim), false, {}};
    try {
      c.passed = body(c.detail);
    } catch (const std::exception& e) {
      c.detail += std::string("error: ") + e.what();
    }
    out.push_back(std::move(c));
  };
  std::mt19937_64 rng(seed);

  run("ex2.1", "Moyal: depth 1 and {y,x} = 1", [&](std::string& d) {
    const auto ws = load_corpus({"moyal.alg"});
    const auto rep = poisson::induced_bracket_report(ws.algebra().algebra);
    d = "depth " + std::to_string(rep.structure.depth()) + "; ";
    return rep.structure.depth() == 1 && brackets_match(rep.structure, {{"y", "x", "1"}}, d);
  });

  run("ex2.3", "sl2: induced bracket is the Lie bracket", [&](std::string& d) {
    const auto ws = load_corpus({"sl2.alg"});
    const auto p = poisson::induced_bracket(ws.algebra().algebra);
    return p.depth() == 1 && brackets_match(p, {{"H", "e", "2*e"}, {"H", "f", "-2*f"}, {"e", "f", "H"}}, d);
  });

  run("rem4.depth", "q = 1 + h^2 gives depth 2 and bracket xy", [&](std::string& d) {
    const auto ws = load_corpus({"depth2.alg"});
    const auto p = poisson::induced_bracket(ws.algebra().algebra);
    d = "depth " + std::to_string(p.depth()) + "; ";
    return p.depth() == 2 && brackets_match(p, {{"x", "y", "x*y"}}, d);
  });

  run("rees", "rees(Weyl) has [y,x] = h and dehomogenizes back to Weyl", [&](std::string& d) {
    const auto ws = load_corpus({"weyl.alg", "moyal.alg"});
    const auto& weyl = ws.algebras.at("weyl");
    const auto& R = weyl.algebra;
    const auto comm = defquant::commutator(R, R.generator(1), R.generator(0));
    const auto moy = ws.algebras.at("moyal").algebra;
    const auto mc = defquant::commutator(moy, moy.generator(1), moy.generator(0));
    d = "[y,x] = " + defquant::to_string(comm);
    const bool back = defquant::dehomogenize(R) == *weyl.filtered;
    d += back ? "; dehomogenize restores Weyl" : "; dehomogenize differs";
    return comm == mc && back;
  });

  const auto sec3 = load_corpus({"sec3.alg", "sec3.act"});
  const auto& A = sec3.algebra().algebra;
  const auto& act = sec3.action();
  std::optional<PoissonStructure> P;

  run("ex3.bracket", "{x,y} = xy, {z,y} = yz, {x,z} = xz", [&](std::string& d) {
    P = poisson::induced_bracket(A);
    return P->depth() == 1 && brackets_match(*P, {{"x", "y", "x*y"}, {"z", "y", "y*z"}, {"x", "z", "x*z"}}, d);
  });
  if (!P) return out;

  run("ex3.center", "Poisson center of A0 trivial (bounded degree)", [&](std::string& d) {
    const auto c = poisson::polynomial_center(*P, center_degree);
    d = "degree <= " + std::to_string(center_degree) + ", dim " + std::to_string(c.basis.size());
    return c.trivial && c.certified;
  });

  run("ex3.central", "xy/z is Poisson central in Q(A0)", [&](std::string& d) {
    const auto c = poisson::is_central_rat(*P, ratfn("x*y/z", P->variables()));
    d = c.central ? "{xy/z, -} = 0" : "bracket " + exactalg::to_string(c.witness_bracket);
    return c.central;
  });

  run("ex3.action", "the Sweedler action is well defined", [&](std::string& d) {
    const bool hopf_ok = hopfact::hopf_verify(act.hopf()).passed();
    const auto rep = hopfact::module_algebra_check(act, 20, 6, rng);
    d = "N = " + std::to_string(A.order()) + ", max_deg 6, " + std::to_string(rep.failures.size()) + " failures";
    return hopf_ok && rep.passed();
  });

  run("ex3.factors", "no factorization through a group, even mod h", [&](std::string& d) {
    const std::uint32_t deg = hopfact::default_degree_bound(A);
    bool ok = true;
    for (auto level : {hopfact::Level::Full, hopfact::Level::ModH}) {
      const auto f = hopfact::factors_through_group(act, deg, level);
      d += hopfact::to_string(level) + ": " + hopfact::to_string(f.verdict) + "; ";
      ok = ok && f.verdict == hopfact::GroupVerdict::NotGroup;
    }
    return ok;
  });

  run("ex3.inner", "the action is inner-faithful", [&](std::string& d) {
    const auto r = hopfact::inner_faithful(act, hopfact::default_degree_bound(A), hopfact::Level::Full);
    d = "annihilator dim " + std::to_string(r.annihilator.dim()) + (r.stable ? ", stable" : ", not stable");
    return r.inner_faithful() && r.stable;
  });

  run("sec4.plucker", "r = 2, ratio -2z/(xy) non-constant and Poisson central", [&](std::string& d) {
    const auto basis = galois::galois_basis(act);
    const auto chart = galois::plucker_ratios(basis.matrix);
    const auto want = ratfn("-2*z/(x*y)", A.variables());
    bool found = false;
    for (const auto& [J, r] : chart.ratios) found = found || r == want;
    const auto dk = galois::defined_over_k(chart);
    const auto cc = galois::plucker_center_check(chart, *P);
    d = "r = " + std::to_string(basis.rank) + ", I = " + galois::subset_to_string(chart.I) +
        (dk.defined ? ", defined over k" : ", not defined over k");
    return basis.rank == 2 && found && !dk.defined && cc.all_central() && !cc.entries.empty();
  });

  run("sec4.groups", "Z/2 and Z/3 actions are defined over k", [&](std::string& d) {
    bool ok = true;
    for (auto files : {std::vector<std::string>{"sec3.alg", "z2.act"}, std::vector<std::string>{"z3.alg", "z3.act"}}) {
      const auto ws = load_corpus(files);
      const auto chart = galois::plucker_ratios(galois::galois_basis(ws.action()).matrix);
      const bool def = galois::defined_over_k(chart).defined;
      d += ws.actions.begin()->first + (def ? ": defined; " : ": not defined; ");
      ok = ok && def;
    }
    return ok;
  });

  run("sec4.poiscom", "rho_i({x, f}) = {x, rho_i(f)} for f in {x, y, z}", [&](std::string& d) {
    const auto& v = A.variables();
    const auto rep = galois::poiscom_check(act, *P, poly("x", v), {poly("x", v), poly("y", v), poly("z", v)});
    d = std::to_string(rep.checks) + " checks, " + std::to_string(rep.failures.size()) + " failures";
    return rep.passed();
  });

  run("sec4.eq3", "Eq. (3) for a0 in {x, y}, all routes agreeing", [&](std::string& d) {
    bool ok = true;
    for (const char* a0 : {"x", "y"}) {
      const auto rep = galois::eq3_check(act, *P, poly(a0, A.variables()));
      d += std::string(a0) + ": Tr C = " + exactalg::to_string(rep.trace_c) + (rep.passed() ? " ok; " : " FAILED; ");
      ok = ok && rep.passed();
    }
    return ok;
  });

  return out;
}

}  // namespace deformata::frontend
