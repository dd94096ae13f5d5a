#include "zzv/reps.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <tuple>

namespace zzv {

std::size_t uindex(const UpDownState& st, ArrowRef a) {
  return a.kind == Side::add ? st.add_index(a.cell) : st.del_index(a.cell);
}

const char* kind_name(PairKind k) {
  switch (k) {
    case PairKind::closed_open: return "CO";
    case PairKind::open_closed: return "OC";
    case PairKind::closed_closed: return "CC";
  }
  return "?";
}

Pair make_pair(const UpDownState& st, ArrowRef a, ArrowRef b) {
  if (uindex(st, a) > uindex(st, b)) std::swap(a, b);
  Pair p{a, b, 0, PairKind::closed_closed};
  if (a.kind == Side::add && b.kind == Side::add) {
    p.kind = PairKind::closed_open;
    p.dim = st.cells.at(a.cell).dim;
  } else if (a.kind == Side::del && b.kind == Side::del) {
    p.kind = PairKind::open_closed;
    p.dim = st.cells.at(b.cell).dim;
  } else {
    p.dim = st.cells.at(a.cell).dim;
  }
  return p;
}

Representative empty_rep(int p) { return {Chain(p), Chain(p + 1), Chain(p)}; }

void rep_add_into(Representative& into, const Representative& other) {
  chain_add_into(into.z, other.z);
  chain_add_into(into.A, other.A);
  chain_add_into(into.z2, other.z2);
}

PairId PairSet::insert(const Pair& p, Representative r) {
  for (ArrowRef a : {p.creator, p.destroyer})
    if (owner_.count(key(a))) throw std::logic_error("arrow already paired");
  PairId id = next_++;
  entries_.emplace(id, PairEntry{id, p, std::move(r)});
  owner_[key(p.creator)] = id;
  owner_[key(p.destroyer)] = id;
  return id;
}

void PairSet::erase(PairId id) {
  auto it = entries_.find(id);
  if (it == entries_.end()) throw std::logic_error("erasing unknown pair");
  owner_.erase(key(it->second.pair.creator));
  owner_.erase(key(it->second.pair.destroyer));
  if (id < mark_) erased_.emplace_back(id, it->second.pair.creator);
  entries_.erase(it);
}

void PairSet::mark() {
  mark_ = next_;
  erased_.clear();
}

void PairSet::rename_arrow(ArrowRef from, ArrowRef to) {
  auto it = owner_.find(key(from));
  if (it == owner_.end()) return;
  PairId id = it->second;
  owner_.erase(it);
  owner_[key(to)] = id;
  Pair& p = entries_.at(id).pair;
  if (p.creator == from) p.creator = to;
  if (p.destroyer == from) p.destroyer = to;
}

PairEntry& PairSet::at(PairId id) { return entries_.at(id); }
const PairEntry& PairSet::at(PairId id) const { return entries_.at(id); }

PairId PairSet::id_of(ArrowRef a) const {
  auto it = owner_.find(key(a));
  if (it == owner_.end()) throw std::logic_error("arrow is not paired");
  return it->second;
}

bool created_by(const Chain& c, ArrowRef a, const UpDownState& st) {
  if (!c.contains(a.cell)) return false;
  const auto& pos = a.kind == Side::add ? st.apos : st.dpos;
  std::int32_t mine = pos.at(a.cell);
  for (CellId x : c.cells) {
    if (x == a.cell) continue;
    if (x >= pos.size() || pos[x] < 0) return false;
    if (a.kind == Side::add ? pos[x] >= mine : pos[x] <= mine) return false;
  }
  return true;
}

namespace {

bool in_state(const Chain& c, const UpDownState& st) {
  for (CellId x : c.cells)
    if (!st.cells.contains(x) || x >= st.apos.size() || st.apos[x] < 0) return false;
  return true;
}

bool fail(std::string* why, std::string msg) {
  if (why) *why = std::move(msg);
  return false;
}

}  // namespace

bool validate_rep(const Pair& p, const Representative& r, const UpDownState& st, std::string* why) {
  for (const Chain* c : {&r.z, &r.A, &r.z2})
    if (!in_state(*c, st)) return fail(why, "chain mentions a cell outside U");
  if (r.z.dim != p.dim || r.z2.dim != p.dim || r.A.dim != p.dim + 1)
    return fail(why, "chain dimensions do not match the pair");
  if (p.kind == PairKind::closed_open && !r.z2.empty()) return fail(why, "CO representative carries z2");
  if (p.kind == PairKind::open_closed && !r.z.empty()) return fail(why, "OC representative carries z");
  Chain bA = chain_boundary(r.A, st.cells);
  switch (p.kind) {
    case PairKind::closed_open:
      if (bA != r.z) return fail(why, "z != dA");
      if (!created_by(r.z, p.creator, st)) return fail(why, "z not created by creator");
      if (!created_by(r.A, p.destroyer, st)) return fail(why, "A not created by destroyer");
      break;
    case PairKind::open_closed:
      if (bA != r.z2) return fail(why, "z2 != dA");
      if (!created_by(r.A, p.creator, st)) return fail(why, "A not created by creator");
      if (!created_by(r.z2, p.destroyer, st)) return fail(why, "z2 not created by destroyer");
      break;
    case PairKind::closed_closed: {
      Chain zz(r.z.dim);
      std::set_symmetric_difference(r.z.cells.begin(), r.z.cells.end(), r.z2.cells.begin(),
                                    r.z2.cells.end(), std::back_inserter(zz.cells));
      if (bA != zz) return fail(why, "z + z2 != dA");
      if (!created_by(r.z, p.creator, st)) return fail(why, "z not created by creator");
      if (!created_by(r.z2, p.destroyer, st)) return fail(why, "z2 not created by destroyer");
      break;
    }
  }
  return true;
}

bool validate_pairset(const PairSet& ps, const UpDownState& st, std::string* why) {
  std::vector<int> seen(st.m(), 0);
  for (const auto& [id, e] : ps.entries()) {
    const Pair& p = e.pair;
    auto tag = "pair " + std::to_string(id) + ": ";
    for (ArrowRef a : {p.creator, p.destroyer}) {
      const auto& pos = a.kind == Side::add ? st.apos : st.dpos;
      if (!st.cells.contains(a.cell) || a.cell >= pos.size() || pos[a.cell] < 0)
        return fail(why, tag + "arrow not in U");
      ++seen[uindex(st, a)];
    }
    if (uindex(st, p.creator) >= uindex(st, p.destroyer)) return fail(why, tag + "creator after destroyer");
    Pair expect = make_pair(st, p.creator, p.destroyer);
    if (expect.kind != p.kind || expect.dim != p.dim) return fail(why, tag + "kind or dimension mismatch");
    int dc = st.cells.at(p.creator.cell).dim, dd = st.cells.at(p.destroyer.cell).dim;
    if ((p.kind == PairKind::closed_open && dd != dc + 1) ||
        (p.kind == PairKind::open_closed && dc != dd + 1) ||
        (p.kind == PairKind::closed_closed && dc != dd))
      return fail(why, tag + "cell dimensions do not fit the kind");
    std::string inner;
    if (!validate_rep(p, e.rep, st, &inner)) return fail(why, tag + inner);
  }
  for (std::size_t u = 0; u < seen.size(); ++u)
    if (seen[u] != 1) return fail(why, "U arrow " + std::to_string(u) + " covered " + std::to_string(seen[u]) + " times");
  return true;
}

Interval u_interval(const Pair& p, const UpDownState& st) {
  return {p.dim, uindex(st, p.creator) + 1, uindex(st, p.destroyer)};
}

std::vector<Interval> u_barcode(const PairSet& ps, const UpDownState& st) {
  std::vector<Interval> out;
  for (const auto& [id, e] : ps.entries()) out.push_back(u_interval(e.pair, st));
  std::sort(out.begin(), out.end());
  return out;
}

FInterval f_interval(const Pair& p, const UpDownState& st) {
  return map_pair_to_interval(uindex(st, p.creator), uindex(st, p.destroyer), p.dim, st);
}

std::vector<FInterval> f_barcode(const PairSet& ps, const UpDownState& st) {
  std::vector<FInterval> out;
  for (const auto& [id, e] : ps.entries()) out.push_back(f_interval(e.pair, st));
  std::sort(out.begin(), out.end());
  return out;
}

void write_zzb(std::ostream& out, const PairSet& ps, const UpDownState& st, bool with_pairs) {
  struct Row {
    FInterval iv;
    std::size_t c, d;
    PairKind k;
  };
  std::vector<Row> rows;
  for (const auto& [id, e] : ps.entries())
    rows.push_back({f_interval(e.pair, st), uindex(st, e.pair.creator), uindex(st, e.pair.destroyer), e.pair.kind});
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return std::tie(a.iv, a.c, a.d) < std::tie(b.iv, b.c, b.d);
  });
  for (const auto& r : rows) {
    out << r.iv.dim << ' ' << r.iv.b << ' ' << r.iv.d;
    if (with_pairs) out << " | " << r.c << ' ' << r.d << ' ' << kind_name(r.k);
    out << '\n';
  }
}

}  // namespace zzv
