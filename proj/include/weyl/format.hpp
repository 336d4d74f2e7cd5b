#pragma once

#include <string>

#include "weyl/bipoly.hpp"
#include "weyl/support_geometry.hpp"
#include "weyl/unipoly.hpp"

namespace weyl {

// Canonical text. Terms run from highest to lowest in the canonical
// (i+j, i) order; the output parses back to the same value.
std::string render(const WeylElement& p);        // X^2 + 2*X*Y + Y^2 + 1
std::string render(const CommPoly& p);           // x^2 + 2*x*y + y^2 + 1
std::string render(const UniPoly& f, char var = 'x');

std::string to_string(LatticePoint p);  // (i,j)
std::string to_string(const Direction& d);  // (rho,sigma)

}  // namespace weyl
