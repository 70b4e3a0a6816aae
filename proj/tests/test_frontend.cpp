#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "deformata/frontend/cli.hpp"
#include "deformata/frontend/corpus.hpp"
#include "deformata/frontend/paper.hpp"
#include "deformata/frontend/print.hpp"
#include "deformata/frontend/report.hpp"
#include "support.hpp"

using namespace deformata;
using namespace deformata::frontend;
using testsupport::P;

namespace {

const std::string kCorpus = DEFORMATA_CORPUS_DIR;

std::string path(const std::string& file) { return kCorpus + "/" + file; }

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(const std::vector<std::string>& args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

Json cli_json(std::vector<std::string> args) {
  args.push_back("--json");
  return Json::parse(cli(args).out);
}

ParseError parse_error(std::string_view text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("no parse error for: " << text);
  return ParseError(0, 0, "");
}

Workspace build_text(const std::string& text) { return build(parse(text)); }

}  // namespace

TEST_CASE("parse: positions of syntax and semantic errors") {
  const auto e1 = parse_error("algebra a {\n  kind = moyal\n  vars = [x, y\n}\n");
  CHECK(e1.line() == 4);
  const auto e2 = parse_error("algebra a {\n  vars = [x,, y]\n}");
  CHECK(e2.line() == 2);
  CHECK(e2.col() == 13);
  CHECK(parse_error("algebra a { k = 1 k = 2 }").col() == 19);
  CHECK(parse_error("algebra a { } algebra a { }").line() == 1);

  try {
    build_text("algebra a {\n  kind = moyal\n  vars = [x, h]\n  pairs = [[x, h]]\n}");
    FAIL("h accepted as a variable");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(build_text("algebra a { kind = moyal vars = [x, y] pairs = [[x, y]] colour = 1 }"), ParseError);
  CHECK_THROWS_AS(build_text("algebra a { kind = moyal vars = [x, y] pairs = [[x, z]] }"), ParseError);
  CHECK_THROWS_AS(build_text("action b { hopf = sweedler rules = [] }"), ParseError);
}

TEST_CASE("parse: expressions, series and the division rule") {
  CHECK(eval_series(parse_expression("1 + h + 1/2*h^2"), 2) == defquant::HSeries::exp_of(2, 1));
  CHECK(eval_series(parse_expression("exp(h)"), 3) == defquant::HSeries::exp_of(3, 1));
  CHECK(eval_series(parse_expression("exp(-2*h)"), 3) == defquant::HSeries::exp_of(3, -2));
  CHECK_THROWS_AS(eval_series(parse_expression("exp(1 + h)"), 2), InputError);

  const VarList xy{"x", "y"};
  const auto v = testsupport::vars(xy);
  CHECK(eval_poly(parse_expression("-x^2"), v) == P("-1*x*x", xy));
  CHECK(eval_poly(parse_expression("(x + y)^2 - 2*x*y"), v) == P("x^2 + y^2", xy));
  CHECK(eval_poly(parse_expression("x/2"), v) == P("1/2*x", xy));
  CHECK_THROWS_AS(eval_poly(parse_expression("x/y"), v), InputError);
  CHECK_THROWS_AS(eval_poly(parse_expression("x/0"), v), InputError);
  CHECK_THROWS_AS(eval_poly(parse_expression("h*x"), v), InputError);
  CHECK_THROWS_AS(eval_poly(parse_expression("z"), v), InputError);
  CHECK(eval_ratfn(parse_expression("x*y/(x*y^2)"), v) == testsupport::R("1/y", xy));
  CHECK(eval_hpoly(parse_expression("x*y + h*x - h^3"), v, 2) == [&] {
    defquant::HPoly p(v, 2);
    p.add_term(0, {1, 1}, 1);
    p.add_term(1, {1, 0}, 1);
    return p;
  }());
  CHECK(eval_nat(parse_expression("12")) == 12);
  CHECK_THROWS_AS(eval_nat(parse_expression("-1")), InputError);
}

TEST_CASE("print: expressions keep their meaning and use minimal parentheses") {
  for (const char* t : {"x - (y - z)", "-(x + y)^2", "2*x^3/3", "(x*y)^2", "-x^2", "x - -y", "exp(-h/2)"}) {
    const Expr e = parse_expression(t);
    INFO(t << " -> " << expr_to_string(e));
    CHECK(parse_expression(expr_to_string(e)) == e);
  }
  CHECK(expr_to_string(parse_expression("((x)) + (y*z)")) == "x + y*z");
  CHECK(expr_to_string(parse_expression("x - (y - z)")) == "x - (y - z)");
}

TEST_CASE("print: parse(print(parse(t))) = parse(t) for every corpus file") {
  for (const auto& [name, text] : corpus()) {
    INFO(name);
    const Document d = parse(text);
    const std::string printed = print_document(d);
    CHECK(parse(printed) == d);
    CHECK(print_document(parse(printed)) == printed);
  }
}

TEST_CASE("print: typed printers rebuild equal objects") {
  const auto ws = load_corpus({"sec3.alg", "sec3.poi", "sec3.act", "sweedler.hopf", "moyal.alg", "sl2.alg", "weyl.alg",
                               "depth2.alg", "z3.alg", "z3.act"});
  for (const auto& [name, a] : ws.algebras) {
    INFO(name);
    const auto back = build_text(print_algebra(name, a));
    CHECK(back.algebra(name).algebra == a.algebra);
    CHECK(back.algebra(name).filtered == a.filtered);
  }
  CHECK(build_text(print_poisson("p", ws.poisson())).poisson("p") == ws.poisson());
  CHECK(build_text(print_hopf("sw2", ws.hopf())).hopf("sw2") == ws.hopf());
  for (const auto& [name, act] : ws.actions) {
    INFO(name);
    const std::string alg_name = name == "sec3act" ? "sec3" : "cyc3";
    const std::string text = print_algebra(alg_name, ws.algebra(alg_name)) + "\n" + print_hopf("H", act.hopf()) + "\n" +
                             print_action(name, act, alg_name, "H");
    const auto back = build_text(text);
    CHECK(back.action(name).hopf() == act.hopf());
    CHECK(print_action(name, back.action(name), alg_name, "H") == print_action(name, act, alg_name, "H"));
  }
}

TEST_CASE("report: schema, digest and promotion of unexplained failures") {
  Report r;
  r.command = "x";
  r.status = Status::Fail;
  const Json j = r.to_json();
  CHECK(j["status"] == "error");
  CHECK(j["schema"] == 1);
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CHECK(exit_code(Status::Pass) == 0);
  CHECK(exit_code(Status::Fail) == 1);
  CHECK(exit_code(Status::Error) == 2);
  CHECK(exit_code(Status::Inconclusive) == 3);
}

TEST_CASE("cli: bracket, central, center") {
  const auto b = cli({"bracket", "--alg", path("moyal.alg")});
  CHECK(b.code == 0);
  CHECK(b.out.find("{x,y} = -1") != std::string::npos);

  CHECK(cli({"central", "--alg", path("sec3.alg"), "--poisson", path("sec3.poi"), "--elem", "x*y/z"}).code == 0);
  const auto nc = cli({"central", "--alg", path("sec3.alg"), "--elem", "x"});
  CHECK(nc.code == 1);
  CHECK(nc.out.find("{x, y} = x*y") != std::string::npos);

  const auto c = cli({"center", "--alg", path("sec3.alg"), "--max-deg", "4"});
  CHECK(c.code == 0);
  CHECK(c.out.find("center trivial up to degree 4") != std::string::npos);
}

TEST_CASE("cli: a mutated action fails check-action with a relation witness") {
  std::string act(corpus_file("sec3.act"));
  act.replace(act.find("[a, z, x*y]"), 11, "[a, z, x^2]");
  const auto r = cli({"check-action", "--alg", path("sec3.alg"), "--action", "-", "--json"}, act);
  CHECK(r.code == 1);
  const Json j = Json::parse(r.out);
  CHECK(j["status"] == "fail");
  REQUIRE_FALSE(j["findings"].empty());
  CHECK(j["findings"][0]["kind"] == "relation");
  CHECK(cli({"check-action", "--alg", path("sec3.alg"), "--action", path("sec3.act")}).code == 0);
}

TEST_CASE("cli: JSON reports are deterministic apart from timing") {
  const std::vector<std::string> args{"plucker", "--alg", path("sec3.alg"), "--poisson", path("sec3.poi"), "--action",
                                      path("sec3.act")};
  Json a = cli_json(args), b = cli_json(args);
  for (const char* key : {"schema", "command", "inputs_digest", "status", "bounds", "result", "findings", "timing_ms"}) {
    CHECK(a.contains(key));
  }
  CHECK(a["inputs_digest"].get<std::string>().size() == 64);
  a.erase("timing_ms");
  b.erase("timing_ms");
  CHECK(a == b);
}

TEST_CASE("cli: --seed wins over DEFORMATA_SEED, which replaces the default") {
  const char* saved = std::getenv("DEFORMATA_SEED");
  const std::string saved_value = saved ? saved : "";
  const std::vector<std::string> args{"jacobi", "--alg", path("sec3.alg")};
  unsetenv("DEFORMATA_SEED");
  const Json def = cli_json(args);
  auto with_seed = args;
  with_seed.insert(with_seed.end(), {"--seed", "5"});
  const Json flag5 = cli_json(with_seed);
  setenv("DEFORMATA_SEED", "5", 1);
  const Json env5 = cli_json(args);
  auto flag1 = args;
  flag1.insert(flag1.end(), {"--seed", "1"});
  const Json env5_flag1 = cli_json(flag1);
  setenv("DEFORMATA_SEED", "oops", 1);
  const auto bad = cli(args);
  if (saved) {
    setenv("DEFORMATA_SEED", saved_value.c_str(), 1);
  } else {
    unsetenv("DEFORMATA_SEED");
  }
  CHECK(def["bounds"]["seed"] == 1);
  CHECK(flag5["bounds"]["seed"] == 5);
  CHECK(env5["bounds"]["seed"] == 5);
  CHECK(env5_flag1["bounds"]["seed"] == 1);
  CHECK(env5["inputs_digest"] == flag5["inputs_digest"]);
  CHECK(def["inputs_digest"] != flag5["inputs_digest"]);
  CHECK(env5_flag1["inputs_digest"] == def["inputs_digest"]);
  CHECK(bad.code == 2);
}

TEST_CASE("cli: exit codes") {
  CHECK(cli({"bracket", "--alg", path("missing.alg")}).code == 2);
  CHECK(cli({"bracket", "--alg", "-"}, "algebra a { kind = moyal vars = [x, y] pairs = [[x, y]] order = }").code == 2);
  CHECK(cli({"no-such-command"}).code == 2);
  CHECK(cli({"--help"}).code == 0);
  CHECK(cli({"check-hopf", "--hopf", path("sweedler.hopf")}).code == 0);
  CHECK(cli({"factors", "--alg", path("sec3.alg"), "--action", path("sec3.act")}).code == 0);
  // Both stdin inputs cannot be read from one stream.
  CHECK(cli({"check-action", "--alg", "-", "--action", "-"}, std::string(corpus_file("sec3.alg"))).code == 2);
}
