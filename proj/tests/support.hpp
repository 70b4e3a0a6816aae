#pragma once

#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "deformata/frontend/parse.hpp"

namespace testsupport {

using deformata::exactalg::Poly;
using deformata::exactalg::RatFn;
using deformata::exactalg::Scalar;
using deformata::exactalg::VarList;

inline std::shared_ptr<const VarList> vars(VarList v) { return std::make_shared<const VarList>(std::move(v)); }

inline Poly P(const std::string& text, const VarList& v) {
  return deformata::frontend::eval_poly(deformata::frontend::parse_expression(text), vars(v));
}

inline RatFn R(const std::string& text, const VarList& v) {
  return deformata::frontend::eval_ratfn(deformata::frontend::parse_expression(text), vars(v));
}

// Seed 1 plus five alternatives; DEFORMATA_SEED replaces the list with one seed.
inline std::vector<std::uint64_t> seeds() {
  if (const char* s = std::getenv("DEFORMATA_SEED")) return {std::stoull(s)};
  return {1, 2, 17, 1009, 65537, 4242424242ULL};
}

// 1 to `terms` terms, coefficients in [-4, 4] \ {0}, total degree <= deg.
inline Poly random_poly(const VarList& v, std::uint32_t deg, std::mt19937_64& rng, int terms = 3) {
  auto shared = vars(v);
  const auto monos = deformata::exactalg::monomials_up_to(v.size(), deg);
  std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
  std::uniform_int_distribution<int> coeff(-4, 4), count(1, terms);
  Poly p(shared, {});
  for (int t = count(rng); t > 0; --t) {
    int c = coeff(rng);
    p.add_term(monos[pick(rng)], c == 0 ? 1 : c);
  }
  return p;
}

inline Poly random_nonzero_poly(const VarList& v, std::uint32_t deg, std::mt19937_64& rng) {
  for (;;) {
    Poly p = random_poly(v, deg, rng);
    if (!p.is_zero()) return p;
  }
}

}  // namespace testsupport
