#include "zzv/updates.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace zzv {

Bundle make_bundle(const ZigzagFiltration& f) {
  Bundle b;
  b.F = f;
  b.U = convert(f);
  b.pairs = initial_pairset(b.U);
  return b;
}

const char* op_name(OpKind k) {
  switch (k) {
    case OpKind::switch_arrows: return "switch";
    case OpKind::expand_in: return "expand-in";
    case OpKind::contract_in: return "contract-in";
    case OpKind::expand_out: return "expand-out";
    case OpKind::contract_out: return "contract-out";
  }
  return "?";
}

std::string to_string(const UpdateOp& op) {
  std::string s = std::string(op_name(op.kind)) + " " + std::to_string(op.pos);
  if (op.kind == OpKind::expand_in || op.kind == OpKind::expand_out) s += " " + to_string(op.simplex);
  return s;
}

SwitchKind classify_switch(const ZigzagFiltration& f, std::size_t j) {
  if (j + 1 >= f.m()) throw rejected_input("switch: position out of range");
  Direction a = f.arrows[j].dir, b = f.arrows[j + 1].dir;
  if (a == b) return a == Direction::forward ? SwitchKind::forward : SwitchKind::backward;
  // +σ -τ: both arrows point into the middle complex
  return a == Direction::forward ? SwitchKind::inward : SwitchKind::outward;
}

namespace {

// Pairs are matched across an update by their creator arrow.  Only pairs the
// op erased or inserted are examined; all others keep their id.
VineRecord diff(const UpdateOp& op, const PairSet& after, std::vector<std::pair<ArrowRef, ArrowRef>> renames) {
  VineRecord rec;
  rec.op = op;
  std::vector<std::pair<ArrowRef, PairId>> fresh;
  for (auto it = after.entries().lower_bound(after.mark_id()); it != after.entries().end(); ++it)
    fresh.emplace_back(it->second.pair.creator, it->first);
  std::vector<bool> matched(fresh.size(), false);
  for (auto [id, a] : after.erased_since_mark()) {
    // an arrow whose name was handed to another one no longer exists
    bool gone = false, renamed = false;
    for (auto [from, to] : renames) {
      if (from == a) {
        a = to;
        renamed = true;
        break;
      }
      gone = gone || to == a;
    }
    std::size_t hit = fresh.size();
    if (!gone || renamed)
      for (std::size_t k = 0; k < fresh.size(); ++k)
        if (!matched[k] && fresh[k].first == a) hit = k;
    if (hit < fresh.size()) {
      matched[hit] = true;
      rec.links.push_back({id, VineFate::survives, fresh[hit].second});
    } else {
      rec.links.push_back({id, VineFate::destroyed, 0});
    }
  }
  for (std::size_t k = 0; k < fresh.size(); ++k)
    if (!matched[k]) rec.links.push_back({fresh[k].second, VineFate::created, 0});
  rec.renames = std::move(renames);
  return rec;
}

std::size_t count_dir(const ZigzagFiltration& f, std::size_t upto, Direction d) {
  std::size_t n = 0;
  for (std::size_t j = 0; j < upto; ++j) n += f.arrows[j].dir == d;
  return n;
}

// Simplices of K_i with the cells carrying them.
std::map<Simplex, CellId> active_at(const Bundle& b, std::size_t i) {
  std::map<Simplex, CellId> act;
  for (std::size_t j = 0; j < i; ++j) {
    const Arrow& a = b.F.arrows[j];
    if (a.dir == Direction::forward)
      act[a.simplex] = b.U.fcell(j);
    else
      act.erase(a.simplex);
  }
  return act;
}

std::vector<CellId> cofaces_of(const UpDownState& st, CellId c) {
  std::vector<CellId> out;
  for (CellId x : st.ascending)
    if (st.cells.at(x).boundary.contains(c)) out.push_back(x);
  return out;
}

void move_add_to(UpDownState& st, PairSet& ps, CellId c, std::size_t target) {
  while (static_cast<std::size_t>(st.apos[c]) > target) transpose(st, ps, Side::add, st.apos[c] - 1);
  while (static_cast<std::size_t>(st.apos[c]) < target) transpose(st, ps, Side::add, st.apos[c]);
}

void move_del_to(UpDownState& st, PairSet& ps, CellId c, std::size_t target) {
  while (static_cast<std::size_t>(st.dpos[c]) > target) transpose(st, ps, Side::del, st.dpos[c] - 1);
  while (static_cast<std::size_t>(st.dpos[c]) < target) transpose(st, ps, Side::del, st.dpos[c]);
}

void require_pos(const Bundle& b, std::size_t j, std::size_t span, const char* what) {
  if (j + span > b.F.m()) throw rejected_input(std::string(what) + ": position out of range");
}

}  // namespace

VineRecord switch_mixed(Bundle& b, std::size_t j) {
  require_pos(b, j, 2, "switch");
  const Arrow &x = b.F.arrows[j], &y = b.F.arrows[j + 1];
  if (x.dir == y.dir) throw rejected_input("switch: arrows point the same way");
  if (x.simplex == y.simplex) throw rejected_input("switch: both arrows act on " + to_string(x.simplex));
  b.pairs.mark();
  std::int32_t u1 = b.U.phi_inv[j], u2 = b.U.phi_inv[j + 1];
  std::swap(b.F.arrows[j], b.F.arrows[j + 1]);
  std::swap(b.U.phi[u1], b.U.phi[u2]);
  std::swap(b.U.phi_inv[j], b.U.phi_inv[j + 1]);
  return diff({OpKind::switch_arrows, j, {}}, b.pairs, {});
}

VineRecord switch_forward(Bundle& b, std::size_t j) {
  require_pos(b, j, 2, "switch");
  const Arrow &x = b.F.arrows[j], &y = b.F.arrows[j + 1];
  if (x.dir != Direction::forward || y.dir != Direction::forward) throw rejected_input("switch: not two additions");
  if (x.simplex.subset_of(y.simplex)) throw rejected_input("switch: " + to_string(x.simplex) + " is a face of " + to_string(y.simplex));
  b.pairs.mark();
  bool ex = transpose(b.U, b.pairs, Side::add, b.U.apos[b.U.fcell(j)]);
  std::swap(b.F.arrows[j], b.F.arrows[j + 1]);
  VineRecord rec = diff({OpKind::switch_arrows, j, {}}, b.pairs, {});
  rec.exchanged = ex;
  return rec;
}

VineRecord switch_backward(Bundle& b, std::size_t j) {
  require_pos(b, j, 2, "switch");
  const Arrow &x = b.F.arrows[j], &y = b.F.arrows[j + 1];
  if (x.dir != Direction::backward || y.dir != Direction::backward) throw rejected_input("switch: not two deletions");
  if (y.simplex.subset_of(x.simplex)) throw rejected_input("switch: " + to_string(y.simplex) + " is a face of " + to_string(x.simplex));
  b.pairs.mark();
  bool ex = transpose(b.U, b.pairs, Side::del, b.U.dpos[b.U.fcell(j)]);
  std::swap(b.F.arrows[j], b.F.arrows[j + 1]);
  VineRecord rec = diff({OpKind::switch_arrows, j, {}}, b.pairs, {});
  rec.exchanged = ex;
  return rec;
}

VineRecord switch_arrows(Bundle& b, std::size_t j) {
  switch (classify_switch(b.F, j)) {
    case SwitchKind::forward: return switch_forward(b, j);
    case SwitchKind::backward: return switch_backward(b, j);
    default: return switch_mixed(b, j);
  }
}

VineRecord expand_inward(Bundle& b, std::size_t i, const Simplex& s) {
  if (i > b.F.m()) throw rejected_input("expand-in: position out of range");
  auto act = active_at(b, i);
  if (act.count(s)) throw rejected_input("expand-in: " + to_string(s) + " already present");
  std::vector<CellId> bnd;
  if (s.dim() > 0)
    for (const Simplex& fc : s.facets()) {
      auto it = act.find(fc);
      if (it == act.end()) throw rejected_input("expand-in: facet " + to_string(fc) + " missing");
      bnd.push_back(it->second);
    }
  b.pairs.mark();
  std::vector<CellId> fcells = fcells_of(b.U);
  CellId c = apex_insert(b.U, b.pairs, s.dim(), make_chain(s.dim() - 1, bnd), s);
  move_add_to(b.U, b.pairs, c, count_dir(b.F, i, Direction::forward));
  move_del_to(b.U, b.pairs, c, count_dir(b.F, i, Direction::backward));
  b.F.arrows.insert(b.F.arrows.begin() + i, {{Direction::forward, s}, {Direction::backward, s}});
  fcells.insert(fcells.begin() + i, {c, c});
  rebuild_phi(b.U, b.F, fcells);
  return diff({OpKind::expand_in, i, s}, b.pairs, {});
}

VineRecord contract_inward(Bundle& b, std::size_t i) {
  require_pos(b, i, 2, "contract-in");
  const Arrow &x = b.F.arrows[i], &y = b.F.arrows[i + 1];
  if (x.dir != Direction::forward || y.dir != Direction::backward || !(x.simplex == y.simplex))
    throw rejected_input("contract-in: arrows are not +s -s");
  Simplex s = x.simplex;
  CellId c = b.U.fcell(i);
  if (b.U.fcell(i + 1) != c) throw std::logic_error("contract-in: arrows act on different cells");
  b.pairs.mark();
  std::vector<CellId> fcells = fcells_of(b.U);
  move_add_to(b.U, b.pairs, c, b.U.n() - 1);
  move_del_to(b.U, b.pairs, c, 0);
  apex_remove(b.U, b.pairs, c);
  b.F.arrows.erase(b.F.arrows.begin() + i, b.F.arrows.begin() + i + 2);
  fcells.erase(fcells.begin() + i, fcells.begin() + i + 2);
  rebuild_phi(b.U, b.F, fcells);
  return diff({OpKind::contract_in, i, {}}, b.pairs, {});
}

void rewrite_out_contract(const OutwardRewriteContext& ctx, PairSet& ps) {
  auto pi = [&](Chain& ch) {
    if (ch.contains(ctx.chi)) ch.toggle(ctx.chi);
    if (ch.contains(ctx.sigma2)) {
      ch.toggle(ctx.sigma2);
      ch.toggle(ctx.sigma1);
    }
  };
  for (auto& [id, e] : ps.entries()) {
    pi(e.rep.z);
    pi(e.rep.A);
    pi(e.rep.z2);
  }
}

void rewrite_out_expand(const OutwardRewriteContext& ctx, const UpDownState& st, PairSet& ps) {
  int p = st.cells.at(ctx.sigma1).dim;
  auto parity = [](const Chain& ch, const std::set<CellId>& among) {
    bool odd = false;
    for (CellId x : ch.cells) odd ^= among.count(x) != 0;
    return odd;
  };
  auto split = [&](Chain& ch) {
    if (ch.contains(ctx.sigma0)) {
      ch.toggle(ctx.sigma0);
      ch.toggle(ctx.sigma2);
    }
  };
  for (auto& [id, e] : ps.entries()) {
    Representative& r = e.rep;
    PairKind k = e.pair.kind;
    if (e.pair.dim == p - 1) {
      if (k == PairKind::open_closed) split(r.A);
    } else if (e.pair.dim == p) {
      bool a1 = parity(r.A, ctx.cofaces1), a2 = parity(r.A, ctx.cofaces2);
      bool in_z = r.z.contains(ctx.sigma0);
      split(r.z2);
      bool add_chi = k == PairKind::closed_open ? a2 : k == PairKind::open_closed ? a1 : (a1 != in_z);
      if (add_chi) r.A.toggle(ctx.chi);
    } else if (e.pair.dim == p + 1 && k == PairKind::closed_closed) {
      bool b1 = parity(r.z, ctx.cofaces1), b2 = parity(r.z, ctx.cofaces2);
      if (b1 != b2) throw std::logic_error("rewrite_out_expand: cycle does not lift");
      if (b1) {
        r.z.toggle(ctx.chi);
        r.z2.toggle(ctx.chi);
      }
    }
  }
}

OutwardRewriteContext contract_outward_tilde(Bundle& b, std::size_t i) {
  require_pos(b, i, 2, "contract-out");
  const Arrow &x = b.F.arrows[i], &y = b.F.arrows[i + 1];
  if (x.dir != Direction::backward || y.dir != Direction::forward || !(x.simplex == y.simplex))
    throw rejected_input("contract-out: arrows are not -s +s");
  UpDownState& st = b.U;
  OutwardRewriteContext ctx;
  ctx.fcells = fcells_of(st);
  ctx.sigma1 = ctx.sigma0 = st.fcell(i);
  ctx.sigma2 = st.fcell(i + 1);
  if (!(st.cells.at(ctx.sigma1).boundary == st.cells.at(ctx.sigma2).boundary))
    throw std::logic_error("contract-out: copies have different boundaries");
  for (CellId x2 : cofaces_of(st, ctx.sigma1)) ctx.cofaces1.insert(x2);
  for (CellId x2 : cofaces_of(st, ctx.sigma2)) ctx.cofaces2.insert(x2);
  int p = x.simplex.dim();
  ctx.chi = apex_insert(st, b.pairs, p + 1, make_chain(p, {ctx.sigma1, ctx.sigma2}), std::nullopt);
  move_add_to(st, b.pairs, ctx.chi, st.apos[ctx.sigma2] + 1);
  move_del_to(st, b.pairs, ctx.chi, st.dpos[ctx.sigma1] - 1);
  ctx.theta = {{{Side::add, ctx.sigma1}, {Side::add, ctx.sigma1}}, {{Side::del, ctx.sigma2}, {Side::del, ctx.sigma1}}};
  return ctx;
}

void contract_outward_finish(Bundle& b, const OutwardRewriteContext& ctx, std::size_t i) {
  UpDownState& st = b.U;
  PairSet& ps = b.pairs;
  PairId co = ps.id_of({Side::add, ctx.sigma2});
  PairId oc = ps.id_of({Side::del, ctx.sigma1});
  if (!(ps.at(co).pair.destroyer == ArrowRef{Side::add, ctx.chi}) || !(ps.at(oc).pair.creator == ArrowRef{Side::del, ctx.chi}))
    throw std::logic_error("contract-out: chi is not paired with the two copies");
  ps.erase(co);
  ps.erase(oc);
  ps.rename_arrow({Side::del, ctx.sigma2}, {Side::del, ctx.sigma1});
  rewrite_out_contract(ctx, ps);

  for (CellId x : ctx.cofaces2) {
    Chain bd = st.cells.at(x).boundary;
    bd.toggle(ctx.sigma2);
    bd.toggle(ctx.sigma1);
    st.cells.set_boundary(x, std::move(bd));
  }
  auto& asc = st.ascending;
  asc.erase(std::remove_if(asc.begin(), asc.end(), [&](CellId c) { return c == ctx.sigma2 || c == ctx.chi; }), asc.end());
  auto& desc = st.descending;
  desc.erase(std::remove_if(desc.begin(), desc.end(), [&](CellId c) { return c == ctx.sigma1 || c == ctx.chi; }), desc.end());
  std::replace(desc.begin(), desc.end(), ctx.sigma2, ctx.sigma1);
  st.cells.retire(ctx.sigma2);
  st.cells.retire(ctx.chi);
  st.reindex();

  std::vector<CellId> fcells = ctx.fcells;
  fcells.erase(fcells.begin() + i, fcells.begin() + i + 2);
  std::replace(fcells.begin(), fcells.end(), ctx.sigma2, ctx.sigma1);
  b.F.arrows.erase(b.F.arrows.begin() + i, b.F.arrows.begin() + i + 2);
  rebuild_phi(st, b.F, fcells);
}

VineRecord contract_outward(Bundle& b, std::size_t i) {
  b.pairs.mark();
  OutwardRewriteContext ctx = contract_outward_tilde(b, i);
  contract_outward_finish(b, ctx, i);
  return diff({OpKind::contract_out, i, {}}, b.pairs, ctx.theta);
}

VineRecord expand_outward(Bundle& b, std::size_t i, const Simplex& s) {
  if (i > b.F.m()) throw rejected_input("expand-out: position out of range");
  auto act = active_at(b, i);
  auto it = act.find(s);
  if (it == act.end()) throw rejected_input("expand-out: " + to_string(s) + " not present");
  for (const auto& [t, c] : act)
    if (t.dim() == s.dim() + 1 && s.subset_of(t))
      throw rejected_input("expand-out: " + to_string(s) + " has cofacet " + to_string(t));

  UpDownState& st = b.U;
  PairSet& ps = b.pairs;
  ps.mark();
  std::vector<CellId> fcells = fcells_of(st);
  int p = s.dim();
  OutwardRewriteContext ctx;
  ctx.sigma0 = ctx.sigma1 = it->second;
  ctx.sigma2 = st.cells.create(p, st.cells.at(ctx.sigma0).boundary, s);
  ctx.chi = st.cells.create(p + 1, make_chain(p, {ctx.sigma1, ctx.sigma2}), std::nullopt);
  // cofaces added at or after i attach to the new copy
  for (CellId x : cofaces_of(st, ctx.sigma0)) {
    if (static_cast<std::size_t>(st.phi[st.add_index(x)]) >= i) {
      ctx.cofaces2.insert(x);
      Chain bd = st.cells.at(x).boundary;
      bd.toggle(ctx.sigma0);
      bd.toggle(ctx.sigma2);
      st.cells.set_boundary(x, std::move(bd));
    } else {
      ctx.cofaces1.insert(x);
    }
  }
  std::size_t ta = count_dir(b.F, i, Direction::forward), td = count_dir(b.F, i, Direction::backward);
  st.ascending.insert(st.ascending.begin() + ta, {ctx.sigma2, ctx.chi});
  std::replace(st.descending.begin(), st.descending.end(), ctx.sigma0, ctx.sigma2);
  st.descending.insert(st.descending.begin() + td, {ctx.chi, ctx.sigma1});
  st.reindex();
  ctx.theta = {{{Side::add, ctx.sigma0}, {Side::add, ctx.sigma1}}, {{Side::del, ctx.sigma0}, {Side::del, ctx.sigma2}}};

  ps.rename_arrow({Side::del, ctx.sigma0}, {Side::del, ctx.sigma2});
  rewrite_out_expand(ctx, st, ps);
  Representative co = empty_rep(p);
  co.z = make_chain(p, {ctx.sigma1, ctx.sigma2});
  co.A = make_chain(p + 1, {ctx.chi});
  ps.insert(make_pair(st, {Side::add, ctx.sigma2}, {Side::add, ctx.chi}), std::move(co));
  Representative oc = empty_rep(p);
  oc.A = make_chain(p + 1, {ctx.chi});
  oc.z2 = make_chain(p, {ctx.sigma1, ctx.sigma2});
  ps.insert(make_pair(st, {Side::del, ctx.chi}, {Side::del, ctx.sigma1}), std::move(oc));

  move_add_to(st, ps, ctx.chi, st.n() - 1);
  move_del_to(st, ps, ctx.chi, 0);
  apex_remove(st, ps, ctx.chi);

  for (std::size_t j = i; j < fcells.size(); ++j)
    if (fcells[j] == ctx.sigma0) fcells[j] = ctx.sigma2;
  fcells.insert(fcells.begin() + i, {ctx.sigma1, ctx.sigma2});
  b.F.arrows.insert(b.F.arrows.begin() + i, {{Direction::backward, s}, {Direction::forward, s}});
  rebuild_phi(st, b.F, fcells);
  return diff({OpKind::expand_out, i, s}, ps, ctx.theta);
}

VineRecord apply_op(Bundle& b, const UpdateOp& op) {
  // Nothing to switch or contract in an empty filtration.
  bool shrinks = op.kind == OpKind::switch_arrows || op.kind == OpKind::contract_in || op.kind == OpKind::contract_out;
  if (shrinks && b.F.m() == 0) {
    VineRecord r;
    r.op = op;
    return r;
  }
  switch (op.kind) {
    case OpKind::switch_arrows: return switch_arrows(b, op.pos);
    case OpKind::expand_in: return expand_inward(b, op.pos, op.simplex);
    case OpKind::contract_in: return contract_inward(b, op.pos);
    case OpKind::expand_out: return expand_outward(b, op.pos, op.simplex);
    case OpKind::contract_out: return contract_outward(b, op.pos);
  }
  throw std::logic_error("apply_op: unknown kind");
}

}  // namespace zzv
