#pragma once

#include <algorithm>
#include <vector>

#include "zzv/oracle.hpp"
#include "zzv/updates.hpp"

namespace fx {

using namespace zzv;

// u = 0, v = 1, w = 2
inline const char* A = "+0 -0";
inline const char* B = "+0 +1 +0,1 -0,1 -1 -0";
inline const char* C = "+0 +1 +0,1 -0,1 +0,1 -0,1 -1 -0";
inline const char* D = "+0 +1 +0,1 -0,1 +2 -2 -1 -0";
inline const char* E = "+0 +1 -1 +1 -1 -0";
inline const char* B_prime = "+0 +1 -1 -0";

inline ZigzagFiltration F(const char* s) { return filtration_from_string(s); }
inline Bundle bundle(const char* s) { return make_bundle(F(s)); }

inline std::vector<Interval> sorted(std::vector<Interval> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// barcode of F carried by the maintained pairs
inline std::vector<Interval> bars(const Bundle& b) { return sorted(f_barcode(b.pairs, b.U)); }

// barcode of F computed by the oracle on U, then mapped back
inline std::vector<Interval> oracle_bars(const UpDownState& st) {
  std::vector<Interval> out;
  for (const auto& i : ud_barcode_oracle(st)) out.push_back(map_pair_to_interval(i.b - 1, i.d, i.dim, st));
  return sorted(out);
}

inline std::vector<Interval> ivs(std::initializer_list<Interval> l) { return sorted(l); }

inline Simplex S(std::initializer_list<VertexId> v) { return Simplex(std::vector<VertexId>(v)); }

inline bool certified(const Bundle& b) {
  return validate_pairset(b.pairs, b.U) && sorted(u_barcode(b.pairs, b.U)) == sorted(ud_barcode_oracle(b.U));
}

}  // namespace fx
