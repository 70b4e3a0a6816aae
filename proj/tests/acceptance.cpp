// Acceptance criteria, one PASS/FAIL line each. Exit status 1 if any criterion fails.
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "deformata/frontend/cli.hpp"
#include "deformata/frontend/corpus.hpp"
#include "deformata/frontend/paper.hpp"
#include "deformata/frontend/report.hpp"
#include "deformata/galois/galois.hpp"
#include "support.hpp"

using namespace deformata;
using namespace deformata::frontend;
using defquant::HSeries;
using exactalg::Exponents;
using testsupport::P;
using testsupport::R;

namespace {

const std::string kCorpus = DEFORMATA_CORPUS_DIR;
const VarList XY{"x", "y"};
const VarList XYZ{"x", "y", "z"};

std::string path(const std::string& f) { return kCorpus + "/" + f; }

struct CliRun {
  int code;
  Json json;
  std::string text;
};

CliRun cli(std::vector<std::string> args) {
  std::istringstream in;
  std::ostringstream out, err, text_out, text_err;
  run_cli(args, in, text_out, text_err);
  args.push_back("--json");
  const int code = run_cli(args, in, out, err);
  return {code, Json::parse(out.str()), text_out.str()};
}

// Collects failure descriptions; a criterion passes when none were recorded.
class Criterion {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++count_;
  }
  bool passed() const { return count_ == 0; }
  std::string summary() const {
    std::string s;
    for (const auto& f : failures_) s += "\n    " + f;
    if (count_ > failures_.size()) s += "\n    ... " + std::to_string(count_ - failures_.size()) + " more";
    return s;
  }

 private:
  std::vector<std::string> failures_;
  std::size_t count_ = 0;
};

HPoly H(const DeformAlgebra& A, const std::string& text) {
  return eval_hpoly(parse_expression(text), A.shared_variables(), A.order());
}

std::string str(const HPoly& p) { return defquant::to_string(p); }
std::string str(const Poly& p) { return exactalg::to_string(p); }

HPoly random_hpoly(const DeformAlgebra& A, std::uint32_t deg, std::mt19937_64& rng) {
  std::vector<Poly> c;
  std::uniform_int_distribution<int> coin(0, 1);
  for (std::size_t k = 0; k <= A.order(); ++k) {
    c.push_back(k == 0 || coin(rng) ? testsupport::random_poly(A.variables(), deg, rng) : Poly(A.shared_variables(), {}));
  }
  return HPoly(A.shared_variables(), A.order(), c);
}

void moyal_reproduction(Criterion& c) {
  const auto r = cli({"bracket", "--alg", path("moyal.alg")});
  c.expect(r.code == 0, "bracket exit " + std::to_string(r.code));
  c.expect(r.json["bounds"]["N"] == 2, "N != 2");
  c.expect(r.json["result"]["depth"] == 1, "depth " + r.json["result"]["depth"].dump());
  const auto& b = r.json["result"]["brackets"];
  c.expect(b.size() == 1 && b[0]["left"] == "x" && b[0]["right"] == "y" && b[0]["value"] == "-1",
           "brackets " + b.dump());
  const auto p = poisson::induced_bracket(load_corpus({"moyal.alg"}).algebra().algebra);
  c.expect(p.generator_bracket(1, 0) == P("1", XY), "{y,x} = " + str(p.generator_bracket(1, 0)));
}

void quantum_reproduction(Criterion& c) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> size(2, 4), entry(-3, 3), form(0, 1);
  const VarList all{"x1", "x2", "x3", "x4"};
  for (int t = 0; t < 10; ++t) {
    const std::size_t n = size(rng);
    const VarList v(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(n));
    std::vector<std::vector<int>> l(n, std::vector<int>(n, 0));
    std::vector<defquant::QRelation> rel;
    bool nonzero = false;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        l[i][j] = entry(rng);
        if (!nonzero && i == n - 2 && j == n - 1 && l[i][j] == 0) l[i][j] = 1;  // depth 1 needs one nonzero entry
        nonzero = nonzero || l[i][j] != 0;
        l[j][i] = -l[i][j];
        // q = exp(lambda h) or 1 + lambda h: both have lambda as the h-coefficient.
        rel.push_back({v[i], v[j], form(rng) ? HSeries::exp_of(3, l[i][j]) : HSeries(3, {1, l[i][j]})});
      }
    }
    const auto A = DeformAlgebra::quantum(v, rel, 3);
    const auto p = poisson::induced_bracket(A);
    c.expect(p.depth() == 1, "trial " + std::to_string(t) + ": depth " + std::to_string(p.depth()));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Exponents e(n, 0);
        ++e[i];
        ++e[j];
        Poly want(A.shared_variables(), {});
        if (i != j) want.add_term(e, l[i][j]);
        c.expect(p.generator_bracket(i, j) == want, "trial " + std::to_string(t) + ": {" + v[i] + "," + v[j] +
                                                        "} = " + str(p.generator_bracket(i, j)) + ", want " + str(want));
      }
    }
  }
}

void enveloping_reproduction(Criterion& c) {
  // sl2 from the corpus, and so(3): [x,y] = z, [y,z] = x, [z,x] = y.
  const auto sl2 = load_corpus({"sl2.alg"}).algebra().algebra;
  const VarList s{"e", "f", "H"};
  const std::vector<std::tuple<std::size_t, std::size_t, std::string>> sl2_table{
      {2, 0, "2*e"}, {2, 1, "-2*f"}, {0, 1, "H"}, {0, 2, "-2*e"}, {1, 2, "2*f"}, {1, 0, "-H"}};
  const auto p = poisson::induced_bracket(sl2);
  c.expect(p.depth() == 1, "sl2 depth");
  for (const auto& [i, j, want] : sl2_table) {
    c.expect(p.generator_bracket(i, j) == P(want, s), "sl2 {" + s[i] + "," + s[j] + "} = " + str(p.generator_bracket(i, j)));
  }
  const auto so3 =
      DeformAlgebra::lie(XYZ, {{"x", "y", P("z", XYZ)}, {"y", "z", P("x", XYZ)}, {"z", "x", P("y", XYZ)}}, 2);
  const auto q = poisson::induced_bracket(so3);
  c.expect(q.generator_bracket(0, 1) == P("z", XYZ) && q.generator_bracket(1, 2) == P("x", XYZ) &&
               q.generator_bracket(2, 0) == P("y", XYZ),
           "so3 brackets");
}

void sec3_poisson(Criterion& c) {
  const auto b = cli({"bracket", "--alg", path("sec3.alg")});
  const Json want = Json::array({{{"left", "x"}, {"right", "y"}, {"value", "x*y"}},
                                 {{"left", "x"}, {"right", "z"}, {"value", "x*z"}},
                                 {{"left", "y"}, {"right", "z"}, {"value", "-y*z"}}});
  c.expect(b.code == 0 && b.json["result"]["brackets"] == want, "brackets " + b.json["result"]["brackets"].dump());
  c.expect(b.json["result"]["depth"] == 1, "depth");

  const auto t0 = std::chrono::steady_clock::now();
  const auto z = cli({"center", "--alg", path("sec3.alg"), "--poisson", path("sec3.poi"), "--max-deg", "8"});
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() / 2;
  c.expect(z.code == 0, "center exit " + std::to_string(z.code));
  c.expect(z.text.find("center trivial up to degree 8") != std::string::npos, "center: " + z.text);
  c.expect(secs <= 120, "center took " + std::to_string(secs) + " s");

  const auto k = cli({"central", "--alg", path("sec3.alg"), "--poisson", path("sec3.poi"), "--elem", "x*y/z"});
  c.expect(k.code == 0 && k.text.find("central = true") != std::string::npos, "central: " + k.text);
}

void sec3_hopf(Criterion& c) {
  const std::vector<std::string> in{"--alg", path("sec3.alg"), "--action", path("sec3.act")};
  auto with = [&](std::vector<std::string> head, std::vector<std::string> tail = {}) {
    head.insert(head.end(), in.begin(), in.end());
    head.insert(head.end(), tail.begin(), tail.end());
    return cli(head);
  };
  const auto ca = with({"check-action"}, {"--order", "3", "--max-deg", "6"});
  c.expect(ca.code == 0 && ca.json["status"] == "pass", "check-action " + ca.json["status"].dump());
  c.expect(ca.json["bounds"]["N"] == 3 && ca.json["bounds"]["max_deg"] == 6, "check-action bounds");
  const auto f = with({"factors"});
  for (const char* level : {"full", "mod-h"}) {
    c.expect(f.json["result"][level]["verdict"] == "not a group action",
             std::string("factors ") + level + ": " + f.json["result"][level]["verdict"].dump());
  }
  const auto i = with({"inner-faithful"});
  for (const char* level : {"full", "mod-h"}) {
    c.expect(i.json["result"][level]["inner_faithful"] == true, std::string("inner-faithful ") + level);
  }
  c.expect(f.code == 0 && i.code == 0, "exit codes");
}

void ore_identity(Criterion& c) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::size_t> order(1, 4);
  for (int t = 0; t < 50; ++t) {
    const std::size_t N = order(rng);
    const auto A = t % 2 == 0 ? DeformAlgebra::moyal(XY, {{"x", "y"}}, N)
                              : DeformAlgebra::quantum(XY, {{"x", "y", HSeries::exp_of(N, 1)}}, N);
    HPoly s = random_hpoly(A, 2, rng);
    if (s[0].is_zero()) s += A.one();
    const HPoly a = random_hpoly(A, 2, rng);
    // s^{N+1} * a  vs  (sum_j s^{N-j} * ad(s)^j a) * s
    HPoly lhs = A.one();
    for (std::size_t k = 0; k <= N; ++k) lhs = defquant::star(A, lhs, s);
    lhs = defquant::star(A, lhs, a);
    HPoly ad = a, sum = A.zero();
    for (std::size_t j = 0; j <= N; ++j) {
      HPoly pw = A.one();
      for (std::size_t k = 0; k < N - j; ++k) pw = defquant::star(A, pw, s);
      sum += defquant::star(A, pw, ad);
      ad = defquant::star(A, s, ad) - defquant::star(A, ad, s);
    }
    const HPoly rhs = defquant::star(A, sum, s);
    c.expect(lhs == rhs, A.kind_name() + " N=" + std::to_string(N) + " s=" + str(s) + " a=" + str(a));
    const auto w = defquant::ore_witness(A, s, a);
    c.expect(w.certified && w.a_left == sum, "ore_witness disagrees for s=" + str(s) + " a=" + str(a));
  }
}

void jacobi_property(Criterion& c) {
  std::mt19937_64 rng(1);
  std::vector<std::string> files;
  for (const auto& [name, text] : corpus()) {
    if (name.ends_with(".alg")) files.push_back(name);
  }
  for (const auto& file : files) {
    const auto ws = load_corpus({file});
    for (const auto& [name, e] : ws.algebras) {
      if (e.algebra.order() < 2) continue;
      const auto p = poisson::induced_bracket(e.algebra);
      const std::size_t n = p.nvars();
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          for (std::size_t k = 0; k < n; ++k) {
            c.expect(poisson::jacobi_defect(p, p.generator(i), p.generator(j), p.generator(k)).is_zero(),
                     name + ": generators " + std::to_string(i) + std::to_string(j) + std::to_string(k));
          }
        }
      }
      for (int t = 0; t < 10; ++t) {
        const Poly f = testsupport::random_poly(p.variables(), 3, rng), g = testsupport::random_poly(p.variables(), 3, rng),
                   h = testsupport::random_poly(p.variables(), 3, rng);
        c.expect(poisson::jacobi_defect(p, f, g, h).is_zero(), name + ": " + str(f) + " | " + str(g) + " | " + str(h));
      }
    }
  }
}

void galois_dichotomy(Criterion& c) {
  for (const auto& [alg, act] : std::vector<std::pair<std::string, std::string>>{{"sec3.alg", "z2.act"}, {"z3.alg", "z3.act"}}) {
    const auto a = load_corpus({alg, act}).action();
    const auto chart = galois::plucker_ratios(galois::galois_basis(a).matrix);
    c.expect(galois::defined_over_k(chart).defined, act + ": not defined over k");
  }
  const auto ws = load_corpus({"sec3.alg", "sec3.poi", "sec3.act"});
  const auto b = galois::galois_basis(ws.action());
  c.expect(b.rank == 2, "r = " + std::to_string(b.rank));
  const auto chart = galois::plucker_ratios(b.matrix);
  bool found = false;
  for (const auto& [J, ratio] : chart.ratios) found = found || ratio == R("-2*z/(x*y)", XYZ);
  c.expect(found, "ratio -2z/(xy) missing");
  c.expect(!galois::defined_over_k(chart).defined, "sec3 defined over k");
  const auto cc = galois::plucker_center_check(chart, ws.poisson());
  c.expect(!cc.entries.empty() && cc.all_central(), "ratios not certified central");

  const auto cl = cli({"plucker", "--alg", path("sec3.alg"), "--poisson", path("sec3.poi"), "--action", path("sec3.act")});
  c.expect(cl.code == 0 && cl.text.find("defined over k = false") != std::string::npos, "plucker CLI: " + cl.text);
}

void poiscom_instance(Criterion& c) {
  const auto ws = load_corpus({"sec3.alg", "sec3.poi", "sec3.act"});
  const auto rep = galois::poiscom_check(ws.action(), ws.poisson(), P("x", XYZ), {P("x", XYZ), P("y", XYZ), P("z", XYZ)});
  c.expect(rep.passed() && rep.checks == 12, "poiscom a0 = x: " + std::to_string(rep.failures.size()) + " failures");
  for (const char* a0 : {"x", "y"}) {
    const auto e = galois::eq3_check(ws.action(), ws.poisson(), P(a0, XYZ));
    c.expect(e.passed(), std::string("eq3 a0 = ") + a0);
    for (const auto& en : e.entries) {
      c.expect(en.direct == en.minor_identity && en.trace_identity,
               std::string("eq3 routes disagree, a0 = ") + a0 + ", J = " + galois::subset_to_string(en.J));
    }
  }
}

void depth_remark(Criterion& c) {
  const auto r = cli({"bracket", "--alg", path("depth2.alg")});
  c.expect(r.json["result"]["depth"] == 2, "depth " + r.json["result"]["depth"].dump());
  c.expect(r.json["result"]["brackets"] == Json::array({{{"left", "x"}, {"right", "y"}, {"value", "x*y"}}}),
           "brackets " + r.json["result"]["brackets"].dump());
}

void rees_round_trip(Criterion& c) {
  const auto e = load_corpus({"weyl.alg"}).algebra();
  const auto& R = e.algebra;
  const auto M = DeformAlgebra::moyal(XY, {{"x", "y"}}, R.order());
  const HPoly cr = defquant::commutator(R, R.generator(1), R.generator(0));
  c.expect(cr == H(R, "h"), "[y,x] = " + str(cr));
  c.expect(cr == defquant::commutator(M, M.generator(1), M.generator(0)), "Moyal differs");
  c.expect(e.filtered && defquant::dehomogenize(R) == *e.filtered, "dehomogenize does not restore Weyl");
  const auto cl = cli({"rees", "--alg", path("weyl.alg")});
  c.expect(cl.code == 0, "rees exit " + std::to_string(cl.code));
}

void property_suites(Criterion& c) {
  const auto ws = load_corpus({"sec3.alg", "moyal.alg", "sl2.alg", "weyl.alg", "depth2.alg", "z3.alg", "sec3.act", "z2.act",
                               "z3.act", "sweedler.hopf"});
  for (auto seed : testsupport::seeds()) {
    std::mt19937_64 rng(seed);
    const std::string tag = "seed " + std::to_string(seed) + ": ";
    for (const auto& [name, e] : ws.algebras) {
      const auto& A = e.algebra;
      const auto p = poisson::induced_bracket(A);
      for (int t = 0; t < 5; ++t) {
        const HPoly a = random_hpoly(A, 2, rng), b = random_hpoly(A, 2, rng), d = random_hpoly(A, 2, rng);
        const HPoly ab = defquant::star(A, a, b);
        const std::string w = tag + name + " " + str(a) + " | " + str(b) + " | " + str(d);
        c.expect(defquant::star(A, ab, d) == defquant::star(A, a, defquant::star(A, b, d)), "associativity " + w);
        c.expect(ab[0] == a[0] * b[0], "flatness " + w);
        // Lift independence: the depth coefficient sees only the h^0 parts.
        c.expect(poisson::lifted_bracket(A, p.depth(), a, b) == poisson::bracket_poly(p, a[0], b[0]), "lift " + w);
        c.expect(poisson::bracket_poly(p, a[0], b[0] * d[0]) ==
                     poisson::bracket_poly(p, a[0], b[0]) * d[0] + b[0] * poisson::bracket_poly(p, a[0], d[0]),
                 "Leibniz " + w);
        std::uniform_int_distribution<std::size_t> gen(0, A.nvars() - 1);
        std::vector<std::size_t> word(5);
        for (auto& g : word) g = gen(rng);
        std::mt19937_64 s1(seed + 1), s2(seed + 2);
        c.expect(defquant::reduce_word(A, word, s1) == defquant::reduce_word(A, word, s2), "confluence " + w);
      }
    }
    for (const auto& [name, h] : ws.hopfs) c.expect(hopfact::hopf_verify(h).passed(), tag + "Hopf axioms " + name);
    for (const auto& [name, a] : ws.actions) {
      c.expect(hopfact::hopf_verify(a.hopf()).passed(), tag + "Hopf axioms of " + name);
      const auto rep = hopfact::module_algebra_check(a, 5, 4, rng);
      c.expect(rep.passed(), tag + "module-algebra " + name +
                                 (rep.passed() ? "" : ": " + rep.failures[0].kind + " " + str(rep.failures[0].lhs) +
                                                          " != " + str(rep.failures[0].rhs)));
    }
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria{
      {"1 Moyal reproduction", moyal_reproduction},
      {"2 Quantum-polynomial reproduction", quantum_reproduction},
      {"3 Enveloping reproduction", enveloping_reproduction},
      {"4 Sec. 3 counterexample, Poisson side", sec3_poisson},
      {"5 Sec. 3 counterexample, Hopf side", sec3_hopf},
      {"6 Ore identity", ore_identity},
      {"7 Jacobi property", jacobi_property},
      {"8 Galois/Pluecker dichotomy", galois_dichotomy},
      {"9 Lemma (poiscom) instance and Eq. (3)", poiscom_instance},
      {"10 Depth remark", depth_remark},
      {"11 Rees round trip", rees_round_trip},
      {"12 Property suites", property_suites},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Criterion c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      run(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", secs);
    std::cout << (c.passed() ? "PASS " : "FAIL ") << name << " (" << buf << " s)" << (c.passed() ? "" : c.summary())
              << std::endl;
    if (!c.passed()) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
