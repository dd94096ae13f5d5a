#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "zzv/cellmodel.hpp"

namespace zzv {

// Up-down filtration U: every cell is added once (ascending half, arrows
// 0..n-1) and deleted once (descending half, arrows n..m-1).
struct UpDownState {
  CellTable cells;
  std::vector<CellId> ascending;
  std::vector<CellId> descending;
  // phi maps a U arrow to the F arrow it came from; phi_inv is its inverse.
  std::vector<std::int32_t> phi, phi_inv;
  // cached positions, -1 for cells not in U
  std::vector<std::int32_t> apos, dpos;

  std::size_t n() const { return ascending.size(); }
  std::size_t m() const { return 2 * ascending.size(); }

  std::size_t add_index(CellId c) const { return static_cast<std::size_t>(apos.at(c)); }
  std::size_t del_index(CellId c) const { return n() + static_cast<std::size_t>(dpos.at(c)); }
  // cell acted on by U arrow u
  CellId cell_at(std::size_t u) const { return u < n() ? ascending[u] : descending[u - n()]; }
  // cell acted on by F arrow j
  CellId fcell(std::size_t j) const { return cell_at(static_cast<std::size_t>(phi_inv.at(j))); }

  void reindex();
  void swap_ascending(std::size_t k);
  void swap_descending(std::size_t k);
};

struct Interval {
  int dim = 0;
  std::size_t b = 0, d = 0;
  auto operator<=>(const Interval&) const = default;
  bool operator==(const Interval&) const = default;
};
using FInterval = Interval;

UpDownState convert(const ZigzagFiltration& f);

// Recomputes phi from the F-arrow -> cell assignment.  Throws std::logic_error
// if the ascending/descending orders disagree with F.
void rebuild_phi(UpDownState& st, const ZigzagFiltration& f, const std::vector<CellId>& fcells);
std::vector<CellId> fcells_of(const UpDownState& st);

// Pair of U arrows l < r of dimension p, mapped back to an interval of F.
FInterval map_pair_to_interval(std::size_t l, std::size_t r, int p, const UpDownState& st);

void write_zzud(std::ostream& out, const UpDownState& st);

}  // namespace zzv
