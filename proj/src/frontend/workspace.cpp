#include "deformata/frontend/workspace.hpp"

#include <algorithm>
#include <set>

namespace deformata::frontend {

namespace {

using exactalg::Scalar;
using hopfact::Vec;

[[noreturn]] void fail(const Value& v, const std::string& msg) { throw ParseError(v.line, v.col, msg); }

const std::vector<Value>& list(const Value& v, const char* what) {
  if (v.kind != Value::Kind::List) fail(v, std::string("expected a list for ") + what);
  return v.items;
}

const std::vector<Value>& tuple(const Value& v, std::size_t n, const char* what) {
  const auto& items = list(v, what);
  if (items.size() != n) fail(v, std::string("expected ") + std::to_string(n) + " entries in " + what);
  return items;
}

const Expr& expr(const Value& v) {
  if (v.kind != Value::Kind::Expr) fail(v, "expected an expression");
  return v.expr;
}

std::string label(const Value& v) {
  if (v.kind == Value::Kind::String) return v.text;
  auto l = v.as_label();
  if (!l) fail(v, "expected a name");
  return *l;
}

std::string identifier(const Value& v) {
  if (v.kind != Value::Kind::Expr || v.expr.kind != Expr::Kind::Symbol) fail(v, "expected an identifier");
  return v.expr.name;
}

std::string field_label(const Block& b, const char* key) { return label(b.require(key)); }

// Variable list: distinct identifiers other than h.
VarList variables(const Block& b) {
  VarList vars;
  for (const auto& v : list(b.require("vars"), "vars")) {
    std::string name = identifier(v);
    if (name == "h") fail(v, "'h' is reserved for the deformation parameter and cannot be a variable");
    if (std::find(vars.begin(), vars.end(), name) != vars.end()) fail(v, "duplicate variable '" + name + "'");
    vars.push_back(std::move(name));
  }
  if (vars.empty()) fail(b.require("vars"), "at least one variable is required");
  return vars;
}

std::string variable_ref(const Value& v, const VarList& vars) {
  std::string name = identifier(v);
  if (std::find(vars.begin(), vars.end(), name) == vars.end()) fail(v, "unknown identifier '" + name + "'");
  return name;
}

int integer(const Value& v) {
  const Scalar s = eval_scalar(expr(v));
  if (s.get_den() != 1 || abs(s) > 1000000) fail(v, "expected an integer");
  return static_cast<int>(s.get_num().get_si());
}

std::size_t order_of(const Block& b, const BuildOptions& opts) {
  if (opts.order) return *opts.order;
  if (const Value* v = b.find("order")) return eval_nat(expr(*v));
  return 2;
}

template <class F>
auto located(const Block& b, F&& f) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const InputError& e) {
    throw ParseError(b.line, b.col, b.kind + " '" + b.name + "': " + e.what());
  }
}

void check_keys(const Block& b, std::initializer_list<const char*> allowed) {
  for (const auto& e : b.entries) {
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* k) { return e.key == k; })) {
      throw ParseError(e.line, e.col, "unknown field '" + e.key + "' in " + b.kind + " '" + b.name + "'");
    }
  }
}

AlgebraEntry build_algebra(const Block& b, const BuildOptions& opts) {
  const std::string kind = field_label(b, "kind");
  const VarList vars = variables(b);
  auto shared = std::make_shared<const VarList>(vars);
  const std::size_t order = order_of(b, opts);
  return located(b, [&]() -> AlgebraEntry {
    if (kind == "moyal") {
      check_keys(b, {"kind", "vars", "order", "pairs"});
      std::vector<std::pair<std::string, std::string>> pairs;
      for (const auto& p : list(b.require("pairs"), "pairs")) {
        const auto& t = tuple(p, 2, "a (q, p) pair");
        pairs.emplace_back(variable_ref(t[0], vars), variable_ref(t[1], vars));
      }
      return {DeformAlgebra::moyal(vars, pairs, order), std::nullopt};
    }
    if (kind == "quantum") {
      check_keys(b, {"kind", "vars", "order", "q"});
      std::vector<defquant::QRelation> rel;
      for (const auto& r : list(b.require("q"), "q")) {
        const auto& t = tuple(r, 3, "a q-relation [x, y, q]");
        rel.push_back({variable_ref(t[0], vars), variable_ref(t[1], vars), eval_series(expr(t[2]), order)});
      }
      return {DeformAlgebra::quantum(vars, rel, order), std::nullopt};
    }
    if (kind == "lie") {
      check_keys(b, {"kind", "vars", "order", "brackets"});
      std::vector<defquant::LieBracket> br;
      for (const auto& r : list(b.require("brackets"), "brackets")) {
        const auto& t = tuple(r, 3, "a bracket [x, y, value]");
        br.push_back({variable_ref(t[0], vars), variable_ref(t[1], vars), eval_poly(expr(t[2]), shared)});
      }
      return {DeformAlgebra::lie(vars, br, order), std::nullopt};
    }
    if (kind == "rewriting") {
      check_keys(b, {"kind", "vars", "order", "rules", "degrees"});
      std::vector<defquant::RewriteRule> rules;
      for (const auto& r : list(b.require("rules"), "rules")) {
        const auto& t = tuple(r, 3, "a rule [upper, lower, rhs]");
        rules.push_back({variable_ref(t[0], vars), variable_ref(t[1], vars), eval_hpoly(expr(t[2]), shared, order)});
      }
      std::optional<std::vector<int>> degrees;
      if (const Value* d = b.find("degrees")) {
        degrees.emplace(vars.size(), 0);
        std::set<std::string> seen;
        for (const auto& e : list(*d, "degrees")) {
          const auto& t = tuple(e, 2, "a degree [x, n]");
          const std::string v = variable_ref(t[0], vars);
          if (!seen.insert(v).second) fail(t[0], "duplicate degree for '" + v + "'");
          (*degrees)[static_cast<std::size_t>(std::find(vars.begin(), vars.end(), v) - vars.begin())] = integer(t[1]);
        }
        if (seen.size() != vars.size()) fail(*d, "every variable needs a degree");
      }
      return {DeformAlgebra::rewriting(vars, rules, order, degrees), std::nullopt};
    }
    if (kind == "filtered") {
      check_keys(b, {"kind", "vars", "order", "degrees", "relations"});
      std::vector<int> degrees(vars.size(), 0);
      std::set<std::string> seen;
      const Value& dv = b.require("degrees");
      for (const auto& e : list(dv, "degrees")) {
        const auto& t = tuple(e, 2, "a degree [x, n]");
        const std::string v = variable_ref(t[0], vars);
        if (!seen.insert(v).second) fail(t[0], "duplicate degree for '" + v + "'");
        const int n = integer(t[1]);
        if (n < 0) fail(t[1], "filtration degrees must be nonnegative");
        degrees[static_cast<std::size_t>(std::find(vars.begin(), vars.end(), v) - vars.begin())] = n;
      }
      if (seen.size() != vars.size()) fail(dv, "every variable needs a degree");
      std::vector<defquant::FilteredRelation> rel;
      if (const Value* rv = b.find("relations")) {
        for (const auto& r : list(*rv, "relations")) {
          const auto& t = tuple(r, 3, "a relation [upper, lower, commutator]");
          auto idx = [&](const Value& v) {
            return static_cast<std::size_t>(std::find(vars.begin(), vars.end(), variable_ref(v, vars)) - vars.begin());
          };
          rel.push_back({idx(t[0]), idx(t[1]), eval_poly(expr(t[2]), shared)});
        }
      }
      FilteredPresentation f(vars, degrees, rel);
      return {defquant::rees_of_filtered(f, order), f};
    }
    fail(b.require("kind"), "unknown algebra kind '" + kind + "' (moyal, quantum, lie, rewriting, filtered)");
  });
}

PoissonStructure build_poisson(const Block& b) {
  check_keys(b, {"vars", "brackets", "depth"});
  const VarList vars = variables(b);
  auto shared = std::make_shared<const VarList>(vars);
  std::vector<std::tuple<std::string, std::string, Poly>> br;
  if (const Value* v = b.find("brackets")) {
    for (const auto& r : list(*v, "brackets")) {
      const auto& t = tuple(r, 3, "a bracket [x, y, value]");
      br.emplace_back(variable_ref(t[0], vars), variable_ref(t[1], vars), eval_poly(expr(t[2]), shared));
    }
  }
  int depth = 1;
  if (const Value* d = b.find("depth")) {
    depth = integer(*d);
    if (depth < 1) fail(*d, "depth must be positive");
  }
  return located(b, [&] { return PoissonStructure::from_named(vars, br, depth); });
}

Vec vector_of(const Value& v, std::size_t dim) {
  const auto& items = list(v, "a coordinate vector");
  if (items.size() != dim) fail(v, "expected " + std::to_string(dim) + " coordinates");
  Vec out;
  for (const auto& x : items) out.push_back(eval_scalar(expr(x)));
  return out;
}

HopfAlgebra build_tensors(const Block& b) {
  check_keys(b, {"kind", "basis", "unit", "counit", "mul", "comul", "antipode"});
  std::vector<std::string> labels;
  for (const auto& v : list(b.require("basis"), "basis")) {
    std::string l = label(v);
    if (std::find(labels.begin(), labels.end(), l) != labels.end()) fail(v, "duplicate basis label '" + l + "'");
    labels.push_back(std::move(l));
  }
  const std::size_t d = labels.size();
  if (d == 0) fail(b.require("basis"), "the basis is empty");
  auto index = [&](const Value& v) {
    const std::string l = label(v);
    auto it = std::find(labels.begin(), labels.end(), l);
    if (it == labels.end()) fail(v, "unknown basis label '" + l + "'");
    return static_cast<std::size_t>(it - labels.begin());
  };

  std::vector<std::vector<Vec>> mul(d, std::vector<Vec>(d, Vec(d, Scalar(0))));
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& e : list(b.require("mul"), "mul")) {
    const auto& t = tuple(e, 3, "a product [left, right, coordinates]");
    const std::size_t i = index(t[0]), j = index(t[1]);
    if (!seen.insert({i, j}).second) fail(e, "duplicate product entry");
    mul[i][j] = vector_of(t[2], d);
  }
  std::vector<std::vector<hopfact::TensorTerm>> comul(d);
  std::vector<bool> have(d, false);
  for (const auto& e : list(b.require("comul"), "comul")) {
    const auto& t = tuple(e, 2, "a coproduct [element, terms]");
    const std::size_t k = index(t[0]);
    if (have[k]) fail(e, "duplicate coproduct entry");
    have[k] = true;
    for (const auto& term : list(t[1], "coproduct terms")) {
      const auto& u = tuple(term, 3, "a tensor term [left, right, coefficient]");
      comul[k].push_back({index(u[0]), index(u[1]), eval_scalar(expr(u[2]))});
    }
  }
  std::vector<Vec> antipode;
  const auto& rows = list(b.require("antipode"), "antipode");
  if (rows.size() != d) fail(b.require("antipode"), "expected one antipode row per basis element");
  for (const auto& r : rows) antipode.push_back(vector_of(r, d));
  return located(b, [&] {
    return HopfAlgebra(labels, mul, vector_of(b.require("unit"), d), comul, vector_of(b.require("counit"), d),
                       antipode);
  });
}

HopfAlgebra build_hopf(const Block& b) {
  const std::string kind = field_label(b, "kind");
  if (kind == "sweedler") {
    check_keys(b, {"kind"});
    return hopfact::sweedler();
  }
  if (kind == "cyclic") {
    check_keys(b, {"kind", "n"});
    const std::size_t n = eval_nat(expr(b.require("n")));
    if (n == 0) fail(b.require("n"), "the group order must be positive");
    return hopfact::cyclic_group_algebra(n);
  }
  if (kind == "group") {
    check_keys(b, {"kind", "labels", "table"});
    std::vector<std::string> labels;
    for (const auto& v : list(b.require("labels"), "labels")) labels.push_back(label(v));
    std::vector<std::vector<std::size_t>> table;
    for (const auto& row : list(b.require("table"), "table")) {
      auto& out = table.emplace_back();
      for (const auto& v : list(row, "a table row")) {
        auto it = std::find(labels.begin(), labels.end(), label(v));
        if (it == labels.end()) fail(v, "unknown group element '" + label(v) + "'");
        out.push_back(static_cast<std::size_t>(it - labels.begin()));
      }
    }
    return located(b, [&] { return hopfact::group_algebra(table, labels); });
  }
  if (kind == "tensors") return build_tensors(b);
  fail(b.require("kind"), "unknown hopf kind '" + kind + "' (sweedler, cyclic, group, tensors)");
}

template <class M>
const typename M::mapped_type& pick(const M& m, const std::string& name, const char* what) {
  if (name.empty()) {
    if (m.size() == 1) return m.begin()->second;
    throw InputError(std::string(m.empty() ? "no " : "several ") + what + " blocks loaded; name one");
  }
  auto it = m.find(name);
  if (it == m.end()) throw InputError(std::string("no ") + what + " named '" + name + "'");
  return it->second;
}

}  // namespace

const AlgebraEntry& Workspace::algebra(const std::string& name) const { return pick(algebras, name, "algebra"); }
const PoissonStructure& Workspace::poisson(const std::string& name) const { return pick(poissons, name, "poisson"); }
const HopfAlgebra& Workspace::hopf(const std::string& name) const { return pick(hopfs, name, "hopf"); }
const HopfAction& Workspace::action(const std::string& name) const { return pick(actions, name, "action"); }

std::optional<HopfAlgebra> builtin_hopf(const std::string& name) {
  if (name == "sweedler") return hopfact::sweedler();
  if (name.rfind("cyclic:", 0) == 0) {
    const std::string n = name.substr(7);
    if (n.empty() || n.size() > 4 || !std::all_of(n.begin(), n.end(), ::isdigit) || std::stoul(n) == 0) {
      throw InputError("bad cyclic group order in '" + name + "'");
    }
    return hopfact::cyclic_group_algebra(std::stoul(n));
  }
  return std::nullopt;
}

Workspace build(const std::vector<Document>& docs, const BuildOptions& opts) {
  Workspace ws;
  std::vector<const Block*> blocks;
  std::set<std::string> names;
  for (const auto& d : docs) {
    for (const auto& b : d.blocks) {
      if (!names.insert(b.name).second) throw ParseError(b.line, b.col, "duplicate block name '" + b.name + "'");
      blocks.push_back(&b);
    }
  }
  for (const Block* b : blocks) {
    if (b->kind == "algebra") ws.algebras.emplace(b->name, build_algebra(*b, opts));
    if (b->kind == "poisson") ws.poissons.emplace(b->name, build_poisson(*b));
    if (b->kind == "hopf") ws.hopfs.emplace(b->name, build_hopf(*b));
  }
  for (const Block* b : blocks) {
    if (b->kind != "action") continue;
    check_keys(*b, {"algebra", "hopf", "rules"});
    const AlgebraEntry* alg = nullptr;
    if (const Value* v = b->find("algebra")) {
      auto it = ws.algebras.find(label(*v));
      if (it == ws.algebras.end()) fail(*v, "unknown algebra '" + label(*v) + "'");
      alg = &it->second;
    } else if (ws.algebras.size() == 1) {
      alg = &ws.algebras.begin()->second;
    } else {
      throw ParseError(b->line, b->col, "action '" + b->name + "' must name its algebra");
    }
    std::optional<HopfAlgebra> H;
    std::string hname;
    const Value* hv = b->find("hopf");
    if (hv) {
      hname = label(*hv);
    } else if (opts.default_hopf) {
      hname = *opts.default_hopf;
    } else if (ws.hopfs.size() == 1) {
      hname = ws.hopfs.begin()->first;
    } else {
      throw ParseError(b->line, b->col, "action '" + b->name + "' must name its hopf algebra");
    }
    if (auto it = ws.hopfs.find(hname); it != ws.hopfs.end()) {
      H = it->second;
    } else {
      H = located(*b, [&] { return builtin_hopf(hname); });
    }
    if (!H) {
      if (hv) fail(*hv, "unknown hopf algebra '" + hname + "'");
      throw ParseError(b->line, b->col, "unknown hopf algebra '" + hname + "'");
    }
    const DeformAlgebra& A = alg->algebra;
    std::vector<hopfact::GeneratorRule> rules;
    if (const Value* rv = b->find("rules")) {
      for (const auto& r : list(*rv, "rules")) {
        const auto& t = tuple(r, 3, "a rule [hopf element, generator, image]");
        rules.push_back({label(t[0]), identifier(t[1]), eval_hpoly(expr(t[2]), A.shared_variables(), A.order())});
      }
    }
    ws.actions.emplace(b->name, located(*b, [&] { return HopfAction(*H, A, rules); }));
  }
  return ws;
}

Workspace build(const Document& doc, const BuildOptions& opts) { return build(std::vector<Document>{doc}, opts); }

}  // namespace deformata::frontend
