#pragma once

#include <string>

#include "superlax/op.hpp"

namespace superlax {

// Deterministic canonical text forms. Two equal values always print to the
// same bytes; parse(to_string(x)) == x.

std::string to_string(const Scalar& s);
std::string to_string(const Atom& a);
std::string to_string(const Poly& p);
std::string to_string(const RatCoeff& c);
std::string to_string(const FermionWord& w);
std::string to_string(const FermionPoly& p);
std::string to_string(const Operator& a);
std::string to_string(const WaveFunction& f);

Scalar parse_scalar(const std::string& text);
RatCoeff parse_ratcoeff(const std::string& text, int particles);
Operator parse_operator(const std::string& text, const Chart& chart);

}  // namespace superlax
