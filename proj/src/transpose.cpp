#include <stdexcept>

#include "zzv/updates.hpp"

namespace zzv {

namespace {

// Reading the descending half backwards turns it into an ascending one;
// in that mirror the destroyers of OC and CC pairs own cycles.
long mirror_pos(const UpDownState& st, ArrowRef a) {
  return a.kind == Side::add ? st.apos[a.cell] : -static_cast<long>(st.dpos[a.cell]);
}

struct Role {
  PairId id = 0;
  bool positive = false;  // owns a cycle in the mirror sense
  ArrowRef self, partner;
};

Role role_of(const PairSet& ps, ArrowRef a) {
  Role r;
  r.id = ps.id_of(a);
  r.self = a;
  const Pair& p = ps.at(r.id).pair;
  bool is_creator = p.creator == a;
  r.partner = is_creator ? p.destroyer : p.creator;
  r.positive = a.kind == Side::add ? is_creator : !is_creator;
  return r;
}

Chain& chain_of(PairSet& ps, const Role& r) {
  Representative& rep = ps.at(r.id).rep;
  if (!r.positive) return rep.A;
  return r.self.kind == Side::add ? rep.z : rep.z2;
}

}  // namespace

bool transpose(UpDownState& st, PairSet& ps, Side side, std::size_t k) {
  auto& seq = side == Side::add ? st.ascending : st.descending;
  if (k + 1 >= seq.size()) throw rejected_input("transpose: position out of range");
  CellId e = seq[k], f = seq[k + 1];
  if (side == Side::add ? st.cells.at(f).boundary.contains(e) : st.cells.at(e).boundary.contains(f))
    throw rejected_input("transpose: swapping a cell with its face");

  // E comes first in the mirror order, F second; only a chain created by F
  // can lose its creator, and only when it contains E.
  ArrowRef E{side, side == Side::add ? e : f};
  ArrowRef F{side, side == Side::add ? f : e};
  Role rE = role_of(ps, E), rF = role_of(ps, F);
  if (rE.id == rF.id) throw std::logic_error("transpose: partners are adjacent");
  bool hit = chain_of(ps, rF).contains(E.cell);

  if (side == Side::add)
    st.swap_ascending(k);
  else
    st.swap_descending(k);
  if (!hit) return false;

  Representative repE = ps.at(rE.id).rep, repF = ps.at(rF.id).rep;
  auto relink = [&](ArrowRef a1, ArrowRef b1, Representative r1, ArrowRef a2, ArrowRef b2,
                    Representative r2) {
    ps.erase(rE.id);
    ps.erase(rF.id);
    ps.insert(make_pair(st, a1, b1), std::move(r1));
    ps.insert(make_pair(st, a2, b2), std::move(r2));
  };

  if (rE.positive && rF.positive) {
    bool sameE = rE.partner.kind == side, sameF = rF.partner.kind == side;
    bool keep;
    if (sameE == sameF)
      keep = mirror_pos(st, rE.partner) < mirror_pos(st, rF.partner);
    else
      keep = sameE;
    if (keep) {
      rep_add_into(ps.at(rF.id).rep, repE);
      return false;
    }
    Representative sum = repE;
    rep_add_into(sum, repF);
    relink(E, rF.partner, repF, F, rE.partner, std::move(sum));
    return true;
  }
  if (!rE.positive && !rF.positive) {
    if (mirror_pos(st, rF.partner) > mirror_pos(st, rE.partner)) {
      rep_add_into(ps.at(rF.id).rep, repE);
      return false;
    }
    Representative sum = repE;
    rep_add_into(sum, repF);
    relink(rF.partner, E, repF, rE.partner, F, std::move(sum));
    return true;
  }
  if (!rE.positive && rF.positive) {
    // F turns negative and E inherits F's cycle
    Representative r = repE;
    chain_add_into(r.A, side == Side::add ? repF.z : repF.z2);
    relink(rE.partner, F, std::move(r), E, rF.partner, repF);
    return true;
  }
  chain_add_into(ps.at(rF.id).rep.A, side == Side::add ? repE.z : repE.z2);
  return false;
}

}  // namespace zzv
