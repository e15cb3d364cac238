#pragma once

// Coefficient grid for a two-variable Laurent polynomial: the coefficient of
// v^a z^b sits in column a, row b. Columns run left to right by increasing
// v-exponent, rows bottom to top by increasing z-exponent, both in steps of
// 2 from the smallest exponent present. Zero cells are blank.

#include <string>

#include "knitweave/laurent.hpp"

namespace knitweave {

std::string render_table(const LaurentVZ& h);

}  // namespace knitweave
