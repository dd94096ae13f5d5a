#include "zzv/updown.hpp"

#include <map>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace zzv {

void UpDownState::reindex() {
  std::size_t cap = cells.capacity();
  apos.assign(cap, -1);
  dpos.assign(cap, -1);
  for (std::size_t k = 0; k < ascending.size(); ++k) apos[ascending[k]] = static_cast<std::int32_t>(k);
  for (std::size_t k = 0; k < descending.size(); ++k) dpos[descending[k]] = static_cast<std::int32_t>(k);
}

void UpDownState::swap_ascending(std::size_t k) {
  std::swap(ascending[k], ascending[k + 1]);
  apos[ascending[k]] = static_cast<std::int32_t>(k);
  apos[ascending[k + 1]] = static_cast<std::int32_t>(k + 1);
}

void UpDownState::swap_descending(std::size_t k) {
  std::swap(descending[k], descending[k + 1]);
  dpos[descending[k]] = static_cast<std::int32_t>(k);
  dpos[descending[k + 1]] = static_cast<std::int32_t>(k + 1);
}

UpDownState convert(const ZigzagFiltration& f) {
  auto rep = validate_filtration(f);
  if (!rep.ok) throw rejected_input("arrow " + std::to_string(rep.arrow) + ": " + rep.reason);

  UpDownState st;
  std::map<Simplex, std::vector<CellId>> active;
  std::vector<CellId> fcells(f.m());
  for (std::size_t j = 0; j < f.m(); ++j) {
    const Arrow& a = f.arrows[j];
    if (a.dir == Direction::forward) {
      std::vector<CellId> bnd;
      for (const auto& fc : a.simplex.facets()) bnd.push_back(active.at(fc).back());
      CellId id = st.cells.create(a.simplex.dim(), make_chain(a.simplex.dim() - 1, std::move(bnd)),
                                  a.simplex);
      active[a.simplex].push_back(id);
      st.ascending.push_back(id);
      fcells[j] = id;
    } else {
      auto& stack = active.at(a.simplex);
      fcells[j] = stack.back();
      stack.pop_back();
      st.descending.push_back(fcells[j]);
    }
  }
  st.reindex();
  rebuild_phi(st, f, fcells);
  return st;
}

void rebuild_phi(UpDownState& st, const ZigzagFiltration& f, const std::vector<CellId>& fcells) {
  if (fcells.size() != f.m() || f.m() != st.m()) throw std::logic_error("rebuild_phi: size mismatch");
  st.phi.assign(f.m(), -1);
  st.phi_inv.assign(f.m(), -1);
  std::size_t next_add = 0, next_del = 0;
  for (std::size_t j = 0; j < f.m(); ++j) {
    CellId c = fcells[j];
    std::size_t u;
    if (f.arrows[j].dir == Direction::forward) {
      u = st.add_index(c);
      if (u != next_add++) throw std::logic_error("ascending order disagrees with F");
    } else {
      u = st.del_index(c);
      if (u != st.n() + next_del++) throw std::logic_error("descending order disagrees with F");
    }
    st.phi[u] = static_cast<std::int32_t>(j);
    st.phi_inv[j] = static_cast<std::int32_t>(u);
  }
}

std::vector<CellId> fcells_of(const UpDownState& st) {
  std::vector<CellId> out(st.m());
  for (std::size_t j = 0; j < st.m(); ++j) out[j] = st.fcell(j);
  return out;
}

FInterval map_pair_to_interval(std::size_t l, std::size_t r, int p, const UpDownState& st) {
  std::size_t lf = static_cast<std::size_t>(st.phi.at(l));
  std::size_t rf = static_cast<std::size_t>(st.phi.at(r));
  if (lf < rf) return {p, lf + 1, rf};
  return {p - 1, rf + 1, lf};
}

void write_zzud(std::ostream& out, const UpDownState& st) {
  for (CellId c : st.ascending) {
    const Cell& cell = st.cells.at(c);
    out << "asc " << c << " dim " << cell.dim << " bnd";
    for (CellId b : cell.boundary.cells) out << ' ' << b;
    out << " from " << st.phi[st.add_index(c)] << '\n';
  }
  for (CellId c : st.descending) out << "desc " << c << " from " << st.phi[st.del_index(c)] << '\n';
}

}  // namespace zzv
