#pragma once

#include <string>

#include "deformata/frontend/parse.hpp"
#include "deformata/frontend/workspace.hpp"

namespace deformata::frontend {

std::string value_to_string(const Value& v);
// Canonical layout: one entry per line, blocks separated by a blank line.
std::string print_document(const Document& doc);

// Typed printers; build(parse(text)) recovers an equal object.
std::string print_algebra(const std::string& name, const AlgebraEntry& a);
std::string print_poisson(const std::string& name, const PoissonStructure& p);
// Always in `kind = tensors` form.
std::string print_hopf(const std::string& name, const HopfAlgebra& h);
std::string print_action(const std::string& name, const HopfAction& a, const std::string& algebra_name,
                         const std::string& hopf_name);

}  // namespace deformata::frontend
