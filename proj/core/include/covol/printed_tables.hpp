#pragma once

#include <string_view>
#include <vector>

#include "covol/interval.hpp"

namespace covol {
namespace tables {

// A printed table cell: row index n (or degree m for the one-row tables),
// column index m (0 when absent), and the value exactly as printed.
struct PrintedCell {
  long n;
  long m;
  const char* text;
};

// M(m,n): rows n = 2..11, columns m = 1..8.
const std::vector<PrintedCell>& a3();
// M'(m,n): rows n = 2..11, columns m = 1..8.
const std::vector<PrintedCell>& a5();
// C(m,n): rows n = 3..9, columns m = 1..8.
const std::vector<PrintedCell>& a6();
// minimal totally real discriminants, m = 1..8 (exact integers).
const std::vector<PrintedCell>& a7();
// H(m), m = 2..15.
const std::vector<PrintedCell>& a8();
// Hilbert-class-field discriminant bounds, m = 2..15.
const std::vector<PrintedCell>& a9();

// True when the enclosure midpoint rounds to the printed decimal within one
// unit in the last printed place AND the printed value lies inside the
// enclosure widened by one such unit.
bool matches_printed(const Interval& enclosure, std::string_view printed);

}  // namespace tables
}  // namespace covol
