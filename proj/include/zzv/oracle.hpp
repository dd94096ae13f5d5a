#pragma once

#include <vector>

#include "zzv/reps.hpp"

namespace zzv {

// Number of bars of Pers_p(U) containing [i, j], 0 <= i <= j <= m, by dense
// GF(2) linear algebra on the complexes L_i, L_j and the apex L_n.
std::size_t ud_rank(const UpDownState& st, std::size_t i, std::size_t j, int p);

// Barcode of U (U indices) by inclusion-exclusion over all ranks.
std::vector<Interval> ud_barcode_oracle(const UpDownState& st);

// Certified pairing of a freshly converted state, O(m^3).
PairSet initial_pairset(const UpDownState& st);

}  // namespace zzv
