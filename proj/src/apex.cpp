#include <algorithm>
#include <stdexcept>

#include "zzv/updates.hpp"

namespace zzv {

namespace {

CellId latest_added(const UpDownState& st, const Chain& c) {
  CellId best = c.cells.front();
  for (CellId x : c.cells)
    if (st.apos[x] > st.apos[best]) best = x;
  return best;
}

}  // namespace

CellId apex_insert(UpDownState& st, PairSet& ps, int dim, Chain boundary, std::optional<Simplex> label) {
  for (CellId x : boundary.cells)
    if (!st.cells.contains(x) || x >= st.apos.size() || st.apos[x] < 0)
      throw rejected_input("apex_insert: facet " + std::to_string(x) + " not at the apex");
  CellId c = st.cells.create(dim, boundary, std::move(label));
  st.ascending.push_back(c);
  st.descending.insert(st.descending.begin(), c);
  st.reindex();

  // w = dc written in the basis of apex cycles: CO cycles span the
  // boundaries (collected in B), CC cycles the homology (collected in SH).
  Chain w = std::move(boundary);
  Chain B(dim);
  std::vector<PairId> SH;
  while (!w.empty()) {
    CellId x = latest_added(st, w);
    PairId id = ps.id_of({Side::add, x});
    const PairEntry& e = ps.at(id);
    if (!(e.pair.creator == ArrowRef{Side::add, x})) throw std::logic_error("apex_insert: boundary does not reduce");
    chain_add_into(w, e.rep.z);
    if (e.pair.kind == PairKind::closed_open)
      chain_add_into(B, e.rep.A);
    else
      SH.push_back(id);
  }
  Chain cB = B;
  cB.toggle(c);

  if (SH.empty()) {
    Representative rep = empty_rep(dim);
    rep.z = cB;
    rep.z2 = cB;
    ps.insert(make_pair(st, {Side::add, c}, {Side::del, c}), std::move(rep));
    return c;
  }

  auto creator_pos = [&](PairId id) { return st.apos[ps.at(id).pair.creator.cell]; };
  auto destroyer_pos = [&](PairId id) { return st.dpos[ps.at(id).pair.destroyer.cell]; };
  std::sort(SH.begin(), SH.end(), [&](PairId a, PairId b) { return creator_pos(a) < creator_pos(b); });

  // Remove nesting: an outer pair is summed into the inner one and leaves SH.
  std::vector<PairId> kept;
  for (auto it = SH.rbegin(); it != SH.rend(); ++it) {
    if (!kept.empty() && destroyer_pos(*it) > destroyer_pos(kept.back())) {
      Representative outer = ps.at(*it).rep;
      rep_add_into(ps.at(kept.back()).rep, outer);
    } else {
      kept.push_back(*it);
    }
  }
  std::reverse(kept.begin(), kept.end());

  std::size_t k = kept.size();
  std::vector<Pair> Q;
  std::vector<Representative> R;
  for (PairId id : kept) {
    Q.push_back(ps.at(id).pair);
    R.push_back(ps.at(id).rep);
    ps.erase(id);
  }
  int q = dim - 1;
  // prefix sums of z, suffix sums of A and z2
  std::vector<Chain> P(k + 1, Chain(q)), SA(k + 1, Chain(dim)), SZ(k + 1, Chain(q));
  for (std::size_t i = 1; i <= k; ++i) P[i] = chain_add(P[i - 1], R[i - 1].z);
  for (std::size_t i = k; i-- > 0;) {
    SA[i] = chain_add(SA[i + 1], R[i].A);
    SZ[i] = chain_add(SZ[i + 1], R[i].z2);
  }

  Representative co = empty_rep(q);
  co.z = P[k];
  co.A = cB;
  ps.insert(make_pair(st, Q[k - 1].creator, {Side::add, c}), std::move(co));

  Representative oc = empty_rep(q);
  oc.A = chain_add(cB, SA[0]);
  oc.z2 = SZ[0];
  ps.insert(make_pair(st, {Side::del, c}, Q[0].destroyer), std::move(oc));

  for (std::size_t i = 1; i < k; ++i) {
    Representative cc = empty_rep(q);
    cc.z = P[i];
    cc.A = chain_add(cB, SA[i]);
    cc.z2 = SZ[i];
    ps.insert(make_pair(st, Q[i - 1].creator, Q[i].destroyer), std::move(cc));
  }
  return c;
}

void apex_remove(UpDownState& st, PairSet& ps, CellId c) {
  if (!st.cells.contains(c) || st.ascending.empty() || st.ascending.back() != c || st.descending.front() != c)
    throw rejected_input("apex_remove: cell is not at the apex");
  for (CellId x : st.ascending)
    if (st.cells.at(x).boundary.contains(c)) throw rejected_input("apex_remove: cell has cofaces");

  std::vector<PairId> unsettled;
  auto collect_unsettled = [&] {
    for (const auto& [id, e] : ps.entries())
      if (e.rep.A.contains(c)) {
        if (e.pair.kind != PairKind::closed_closed) throw std::logic_error("apex_remove: non-CC chain holds the apex cell");
        unsettled.push_back(id);
      }
  };

  PairId ida = ps.id_of({Side::add, c});
  const PairEntry& ea = ps.at(ida);
  if (ea.pair.kind == PairKind::closed_closed) {
    if (!(ea.pair.destroyer == ArrowRef{Side::del, c})) throw std::logic_error("apex_remove: positive cell not self-paired");
    Chain zbar = ea.rep.z;
    ps.erase(ida);
    collect_unsettled();
    for (PairId id : unsettled) chain_add_into(ps.at(id).rep.A, zbar);
  } else {
    if (!(ea.pair.destroyer == ArrowRef{Side::add, c})) throw std::logic_error("apex_remove: unexpected pair of the apex cell");
    ArrowRef tau = ea.pair.creator;
    Representative star = ea.rep;  // (z*, A*)
    PairId idd = ps.id_of({Side::del, c});
    const PairEntry& ed = ps.at(idd);
    if (ed.pair.kind != PairKind::open_closed || !(ed.pair.creator == ArrowRef{Side::del, c}))
      throw std::logic_error("apex_remove: deletion of a negative cell must open an OC pair");
    ArrowRef taup = ed.pair.destroyer;
    Representative circ = ed.rep;  // (A∘, z∘)
    ps.erase(ida);
    ps.erase(idd);
    collect_unsettled();

    auto cpos = [&](PairId id) { return st.apos[ps.at(id).pair.creator.cell]; };
    auto dpos = [&](PairId id) { return st.dpos[ps.at(id).pair.destroyer.cell]; };
    std::vector<PairId> rest;
    for (PairId id : unsettled) {
      if (cpos(id) > st.apos[tau.cell])
        rep_add_into(ps.at(id).rep, star);
      else
        rest.push_back(id);
    }
    std::vector<PairId> rest2;
    for (PairId id : rest) {
      if (dpos(id) < st.dpos[taup.cell])
        rep_add_into(ps.at(id).rep, circ);
      else
        rest2.push_back(id);
    }
    std::sort(rest2.begin(), rest2.end(), [&](PairId a, PairId b) { return cpos(a) < cpos(b); });
    std::vector<PairId> lambda;
    for (PairId id : rest2) {
      if (!lambda.empty() && dpos(id) < dpos(lambda.back())) {
        Representative outer = ps.at(lambda.back()).rep;
        rep_add_into(ps.at(id).rep, outer);
      } else {
        lambda.push_back(id);
      }
    }

    if (lambda.empty()) {
      Representative r = star;
      chain_add_into(r.A, circ.A);
      r.z2 = circ.z2;
      ps.insert(make_pair(st, tau, taup), std::move(r));
    } else {
      std::size_t l = lambda.size();
      std::vector<Pair> L;
      std::vector<Representative> R;
      for (PairId id : lambda) {
        L.push_back(ps.at(id).pair);
        R.push_back(ps.at(id).rep);
        ps.erase(id);
      }
      Representative first = R[0];
      chain_add_into(first.A, circ.A);
      chain_add_into(first.z2, circ.z2);
      ps.insert(make_pair(st, L[0].creator, taup), std::move(first));

      Representative last = R[l - 1];
      chain_add_into(last.z, star.z);
      chain_add_into(last.A, star.A);
      ps.insert(make_pair(st, tau, L[l - 1].destroyer), std::move(last));

      for (std::size_t j = 0; j + 1 < l; ++j) {
        Representative r = R[j];
        rep_add_into(r, R[j + 1]);
        ps.insert(make_pair(st, L[j + 1].creator, L[j].destroyer), std::move(r));
      }
    }
  }

  st.ascending.pop_back();
  st.descending.erase(st.descending.begin());
  st.cells.retire(c);
  st.reindex();
}

}  // namespace zzv
