#pragma once

#include <string>
#include <vector>

#include "jumploci/cdga.hpp"

namespace jumploci {

// Subsets of {0..n-1} grouped by cardinality, masks ascending within each
// degree; generator 0 sits at the least significant bit.
std::vector<std::vector<unsigned>> exterior_masks(int n);

// Sign of e_A ^ e_B relative to the sorted monomial e_{A u B};
// 0 when the index sets overlap.
int wedge_sign(unsigned a, unsigned b);

std::string mask_label(unsigned mask, const std::vector<std::string>& gen_labels);

// Exterior algebra on the given degree-1 generators, zero differential.
Cdga exterior_cdga(const std::vector<std::string>& gen_labels);

}  // namespace jumploci
