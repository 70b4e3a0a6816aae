#include "deformata/frontend/print.hpp"

#include <cctype>
#include <sstream>

namespace deformata::frontend {

namespace {

int level(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
      return 1;
    case Expr::Kind::Mul:
    case Expr::Kind::Div:
      return 2;
    case Expr::Kind::Neg:
      return 3;
    case Expr::Kind::Pow:
      return 4;
    default:
      return 5;
  }
}

std::string wrapped(const Expr& e, int min_level) {
  std::string s = expr_to_string(e);
  return level(e) < min_level ? "(" + s + ")" : s;
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

bool is_natural(const std::string& s) {
  return !s.empty() && s.find_first_not_of("0123456789") == std::string::npos;
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string label_text(const std::string& s) { return is_identifier(s) || is_natural(s) ? s : quoted(s); }

std::string scalar_text(const Scalar& s) { return s.get_str(); }

std::string vec_text(const hopfact::Vec& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + scalar_text(v[i]);
  return out + "]";
}

std::string var_list(const VarList& vars) {
  std::string out = "[";
  for (std::size_t i = 0; i < vars.size(); ++i) out += (i ? ", " : "") + vars[i];
  return out + "]";
}

std::string triple(const std::string& a, const std::string& b, const std::string& c) {
  return "[" + a + ", " + b + ", " + c + "]";
}

// Lists of entries one per line, for the longer fields.
std::string rows(const std::vector<std::string>& items) {
  if (items.empty()) return "[]";
  std::string out = "[\n";
  for (std::size_t i = 0; i < items.size(); ++i) out += "    " + items[i] + (i + 1 < items.size() ? ",\n" : "\n");
  return out + "  ]";
}

}  // namespace

std::string expr_to_string(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Number:
      return e.number.get_str();
    case Expr::Kind::Symbol:
      return e.name;
    case Expr::Kind::Neg:
      return "-" + wrapped(e.args[0], 3);
    case Expr::Kind::Add:
      return wrapped(e.args[0], 1) + " + " + wrapped(e.args[1], 2);
    case Expr::Kind::Sub:
      return wrapped(e.args[0], 1) + " - " + wrapped(e.args[1], 2);
    case Expr::Kind::Mul:
      return wrapped(e.args[0], 2) + "*" + wrapped(e.args[1], 3);
    case Expr::Kind::Div:
      return wrapped(e.args[0], 2) + "/" + wrapped(e.args[1], 3);
    case Expr::Kind::Pow:
      return wrapped(e.args[0], 5) + "^" + e.number.get_str();
    case Expr::Kind::Call:
      return e.name + "(" + expr_to_string(e.args[0]) + ")";
  }
  return "";
}

std::string value_to_string(const Value& v) {
  switch (v.kind) {
    case Value::Kind::Expr:
      return expr_to_string(v.expr);
    case Value::Kind::String:
      return quoted(v.text);
    case Value::Kind::List: {
      std::string out = "[";
      for (std::size_t i = 0; i < v.items.size(); ++i) out += (i ? ", " : "") + value_to_string(v.items[i]);
      return out + "]";
    }
  }
  return "";
}

std::string print_document(const Document& doc) {
  std::ostringstream out;
  for (std::size_t i = 0; i < doc.blocks.size(); ++i) {
    const Block& b = doc.blocks[i];
    if (i) out << "\n";
    out << b.kind << " " << b.name << " {\n";
    for (const auto& e : b.entries) out << "  " << e.key << " = " << value_to_string(e.value) << "\n";
    out << "}\n";
  }
  return out.str();
}

std::string print_algebra(const std::string& name, const AlgebraEntry& a) {
  const DeformAlgebra& A = a.algebra;
  const VarList& vars = A.variables();
  std::ostringstream out;
  out << "algebra " << name << " {\n";
  if (a.filtered) {
    const auto& f = *a.filtered;
    std::vector<std::string> deg, rel;
    for (std::size_t i = 0; i < vars.size(); ++i) deg.push_back("[" + vars[i] + ", " + std::to_string(f.degrees()[i]) + "]");
    for (const auto& r : f.relations()) {
      rel.push_back(triple(vars[r.upper], vars[r.lower], exactalg::to_string(r.commutator.with_variables(A.shared_variables()))));
    }
    out << "  kind = filtered\n  vars = " << var_list(vars) << "\n  order = " << A.order() << "\n";
    out << "  degrees = " << rows(deg) << "\n  relations = " << rows(rel) << "\n}\n";
    return out.str();
  }
  out << "  kind = " << A.kind_name() << "\n  vars = " << var_list(vars) << "\n  order = " << A.order() << "\n";
  const auto& pres = A.presentation();
  if (const auto* m = std::get_if<defquant::MoyalPresentation>(&pres)) {
    std::vector<std::string> items;
    for (auto [q, p] : m->pairs) items.push_back("[" + vars[q] + ", " + vars[p] + "]");
    out << "  pairs = " << rows(items) << "\n";
  } else if (const auto* q = std::get_if<defquant::QuantumPolyPresentation>(&pres)) {
    std::vector<std::string> items;
    for (const auto& [ij, s] : q->q) items.push_back(triple(vars[ij.first], vars[ij.second], defquant::to_string(s)));
    out << "  q = " << rows(items) << "\n";
  } else if (const auto* l = std::get_if<defquant::LiePresentation>(&pres)) {
    std::vector<std::string> items;
    for (const auto& [ij, p] : l->brackets) {
      items.push_back(triple(vars[ij.first], vars[ij.second], exactalg::to_string(p.with_variables(A.shared_variables()))));
    }
    out << "  brackets = " << rows(items) << "\n";
  } else {
    const auto& r = std::get<defquant::RewritingPresentation>(pres);
    std::vector<std::string> items;
    for (const auto& [ji, rhs] : r.rules) {
      exactalg::Exponents e(vars.size(), 0);
      ++e[ji.first];
      ++e[ji.second];
      if (rhs == A.lift(Poly(A.shared_variables(), {{e, Scalar(1)}}))) continue;
      items.push_back(triple(vars[ji.first], vars[ji.second], defquant::to_string(rhs)));
    }
    out << "  rules = " << rows(items) << "\n";
    if (r.degrees) {
      std::vector<std::string> deg;
      for (std::size_t i = 0; i < vars.size(); ++i) deg.push_back("[" + vars[i] + ", " + std::to_string((*r.degrees)[i]) + "]");
      out << "  degrees = " << rows(deg) << "\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string print_poisson(const std::string& name, const PoissonStructure& p) {
  const VarList& vars = p.variables();
  std::vector<std::string> items;
  for (const auto& [ij, v] : p.brackets()) items.push_back(triple(vars[ij.first], vars[ij.second], exactalg::to_string(v)));
  std::ostringstream out;
  out << "poisson " << name << " {\n  vars = " << var_list(vars) << "\n  brackets = " << rows(items) << "\n";
  if (p.depth() != 1) out << "  depth = " << p.depth() << "\n";
  out << "}\n";
  return out.str();
}

std::string print_hopf(const std::string& name, const HopfAlgebra& h) {
  const auto& labels = h.labels();
  const std::size_t d = h.dim();
  std::vector<std::string> basis, mul, comul, antipode;
  for (const auto& l : labels) basis.push_back(label_text(l));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const auto& v = h.product(i, j);
      if (std::all_of(v.begin(), v.end(), [](const Scalar& c) { return c == 0; })) continue;
      mul.push_back(triple(label_text(labels[i]), label_text(labels[j]), vec_text(v)));
    }
  }
  for (std::size_t k = 0; k < d; ++k) {
    std::string terms = "[";
    bool first = true;
    for (const auto& t : h.coproduct(k)) {
      terms += (first ? "" : ", ") + triple(label_text(labels[t.left]), label_text(labels[t.right]), scalar_text(t.coeff));
      first = false;
    }
    comul.push_back("[" + label_text(labels[k]) + ", " + terms + "]]");
    antipode.push_back(vec_text(h.antipode_of(k)));
  }
  std::string blist = "[";
  for (std::size_t i = 0; i < basis.size(); ++i) blist += (i ? ", " : "") + basis[i];
  blist += "]";
  std::ostringstream out;
  out << "hopf " << name << " {\n  kind = tensors\n  basis = " << blist << "\n  unit = " << vec_text(h.unit())
      << "\n  counit = " << vec_text(h.counit()) << "\n  mul = " << rows(mul) << "\n  comul = " << rows(comul)
      << "\n  antipode = " << rows(antipode) << "\n}\n";
  return out.str();
}

std::string print_action(const std::string& name, const HopfAction& a, const std::string& algebra_name,
                         const std::string& hopf_name) {
  const auto& H = a.hopf();
  const auto& vars = a.algebra().variables();
  std::vector<std::string> rules;
  for (std::size_t b = 0; b < H.dim(); ++b) {
    if (!a.specified()[b]) continue;
    for (std::size_t v = 0; v < vars.size(); ++v) {
      rules.push_back(triple(label_text(H.labels()[b]), vars[v], defquant::to_string(a.generator_image(b, v))));
    }
  }
  std::ostringstream out;
  out << "action " << name << " {\n  algebra = " << algebra_name << "\n  hopf = " << label_text(hopf_name)
      << "\n  rules = " << rows(rules) << "\n}\n";
  return out.str();
}

}  // namespace deformata::frontend
