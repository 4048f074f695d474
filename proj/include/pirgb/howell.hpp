#ifndef PIRGB_HOWELL_HPP
#define PIRGB_HOWELL_HPP

#include <gmpxx.h>

#include <vector>

namespace pirgb {

using Row = std::vector<mpz_class>;

// Howell normal form of the row span over Z/nZ: echelon with pivots
// normalized to divisors of n, entries above pivots reduced modulo the
// pivot, and the span closed under leading-position truncation (annihilator
// completions included). Canonical for the row span; rows sorted by pivot
// column.
std::vector<Row> howell_form(const std::vector<Row>& rows, const mpz_class& n);

// Membership of v in the span of a Howell-form matrix, by greedy
// elimination against pivots.
bool in_row_span(const std::vector<Row>& howell, Row v, const mpz_class& n);

}  // namespace pirgb

#endif  // PIRGB_HOWELL_HPP
