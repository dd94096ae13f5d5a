#include "zzv/oracle.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <stdexcept>
#include <unordered_map>

namespace zzv {

namespace {

// Dense bit vector over GF(2).
struct Bits {
  std::vector<std::uint64_t> w;
  explicit Bits(std::size_t n = 0) : w((n + 63) / 64, 0) {}
  void flip(std::size_t i) { w[i / 64] ^= std::uint64_t{1} << (i % 64); }
  void xor_with(const Bits& o) {
    for (std::size_t k = 0; k < w.size(); ++k) w[k] ^= o.w[k];
  }
  long top() const {
    for (std::size_t k = w.size(); k-- > 0;)
      if (w[k]) return static_cast<long>(k * 64 + 63 - std::countl_zero(w[k]));
    return -1;
  }
};

// Row-echelon basis keyed by leading bit.
class Span {
 public:
  explicit Span(std::size_t n) : rows_(n) {}
  bool insert(Bits v) {
    for (long t = v.top(); t >= 0; t = v.top()) {
      auto& slot = rows_[static_cast<std::size_t>(t)];
      if (!slot) {
        slot = std::move(v);
        ++rank_;
        return true;
      }
      v.xor_with(*slot);
    }
    return false;
  }
  std::size_t rank() const { return rank_; }

 private:
  std::vector<std::optional<Bits>> rows_;
  std::size_t rank_ = 0;
};

struct Birth {
  std::size_t t;  // prefix length at which the vector appears
  Bits v;
};

// Coordinates of the cells of each dimension.
struct Coords {
  std::unordered_map<CellId, std::size_t> index;
  std::vector<std::size_t> count;
};

Coords make_coords(const UpDownState& st, int maxdim) {
  Coords c;
  c.count.assign(static_cast<std::size_t>(maxdim + 2), 0);
  for (CellId x : st.ascending) {
    int d = st.cells.at(x).dim;
    c.index[x] = c.count[static_cast<std::size_t>(d)]++;
  }
  return c;
}

Bits boundary_bits(const UpDownState& st, const Coords& co, CellId x) {
  const Cell& cell = st.cells.at(x);
  Bits b(cell.dim == 0 ? 0 : co.count[static_cast<std::size_t>(cell.dim - 1)]);
  for (CellId y : cell.boundary.cells) b.flip(co.index.at(y));
  return b;
}

// For cells listed in insertion order, collect the p-cycles (by column
// reduction with combination tracking) and the p-boundaries as they appear.
void prefix_births(const UpDownState& st, const Coords& co, const std::vector<CellId>& order, int p,
                   std::vector<Birth>& cycles, std::vector<Birth>& bounds) {
  std::size_t np = co.count[static_cast<std::size_t>(p)];
  std::size_t nlow = p == 0 ? 0 : co.count[static_cast<std::size_t>(p - 1)];
  struct Col {
    Bits bnd, comb;
  };
  std::vector<std::optional<Col>> by_top(nlow);
  for (std::size_t k = 0; k < order.size(); ++k) {
    CellId x = order[k];
    int d = st.cells.at(x).dim;
    if (d == p + 1) {
      bounds.push_back({k + 1, boundary_bits(st, co, x)});
    } else if (d == p) {
      Bits bnd = boundary_bits(st, co, x);
      Bits comb(np);
      comb.flip(co.index.at(x));
      bool stored = false;
      for (long t = bnd.top(); t >= 0; t = bnd.top()) {
        auto& slot = by_top[static_cast<std::size_t>(t)];
        if (!slot) {
          slot = Col{std::move(bnd), std::move(comb)};
          stored = true;
          break;
        }
        bnd.xor_with(slot->bnd);
        comb.xor_with(slot->comb);
      }
      if (!stored) cycles.push_back({k + 1, std::move(comb)});
    }
  }
}

int max_dim(const UpDownState& st) {
  int md = -1;
  for (CellId x : st.ascending) md = std::max(md, st.cells.at(x).dim);
  return md;
}

// Subspaces of the complex L_k built from scratch.
void complex_spaces(const UpDownState& st, const Coords& co, std::size_t k, int p, std::vector<Bits>& z,
                    std::vector<Bits>& b) {
  std::vector<CellId> cells;
  std::size_t n = st.n();
  if (k <= n)
    cells.assign(st.ascending.begin(), st.ascending.begin() + static_cast<long>(k));
  else
    cells.assign(st.descending.begin() + static_cast<long>(k - n), st.descending.end());
  std::vector<Birth> cy, bd;
  prefix_births(st, co, cells, p, cy, bd);
  for (auto& c : cy) z.push_back(std::move(c.v));
  for (auto& c : bd) b.push_back(std::move(c.v));
}

std::size_t span_rank(std::size_t n, const std::vector<const std::vector<Bits>*>& parts) {
  Span s(n);
  for (auto* part : parts)
    for (const auto& v : *part) s.insert(v);
  return s.rank();
}

}  // namespace

std::size_t ud_rank(const UpDownState& st, std::size_t i, std::size_t j, int p) {
  std::size_t n = st.n(), m = st.m();
  if (i > j || j > m) throw rejected_input("ud_rank: indices out of range");
  int md = max_dim(st);
  if (p < 0 || p > md) return 0;
  Coords co = make_coords(st, md);
  std::size_t np = co.count[static_cast<std::size_t>(p)];
  std::vector<Bits> zi, bi, zj, bj, zn, bn;
  complex_spaces(st, co, i, p, zi, bi);
  complex_spaces(st, co, j, p, zj, bj);
  if (j <= n) return span_rank(np, {&zi, &bj}) - span_rank(np, {&bj});
  if (i >= n) return span_rank(np, {&zj, &bi}) - span_rank(np, {&bi});
  complex_spaces(st, co, n, p, zn, bn);
  std::size_t dimB = span_rank(np, {&bn});
  std::size_t dx = span_rank(np, {&zi, &bn}), dy = span_rank(np, {&zj, &bn});
  std::size_t dxy = span_rank(np, {&zi, &zj, &bn});
  return dx + dy - dxy - dimB;
}

std::vector<Interval> ud_barcode_oracle(const UpDownState& st) {
  std::vector<Interval> out;
  std::size_t n = st.n(), m = st.m();
  int md = max_dim(st);
  if (md < 0) return out;
  Coords co = make_coords(st, md);
  std::vector<CellId> mirror(st.descending.rbegin(), st.descending.rend());

  for (int p = 0; p <= md; ++p) {
    std::size_t np = co.count[static_cast<std::size_t>(p)];
    std::vector<Birth> acy, abd, mcy, mbd;
    prefix_births(st, co, st.ascending, p, acy, abd);
    prefix_births(st, co, mirror, p, mcy, mbd);

    std::vector<std::vector<long>> r(m + 2, std::vector<long>(m + 2, 0));

    // dims of B(L_k) along both halves
    std::vector<std::size_t> dimB_asc(n + 1), dimB_mir(n + 1);
    {
      Span s(np);
      std::size_t q = 0;
      for (std::size_t t = 0; t <= n; ++t) {
        while (q < abd.size() && abd[q].t <= t) s.insert(abd[q++].v);
        dimB_asc[t] = s.rank();
      }
      Span s2(np);
      q = 0;
      for (std::size_t t = 0; t <= n; ++t) {
        while (q < mbd.size() && mbd[q].t <= t) s2.insert(mbd[q++].v);
        dimB_mir[t] = s2.rank();
      }
    }

    // b <= d <= n
    for (std::size_t b = 0; b <= n; ++b) {
      Span s(np);
      for (const auto& c : acy)
        if (c.t <= b) s.insert(c.v);
      std::size_t q = 0;
      for (std::size_t d = b; d <= n; ++d) {
        while (q < abd.size() && abd[q].t <= d) s.insert(abd[q++].v);
        r[b][d] = static_cast<long>(s.rank() - dimB_asc[d]);
      }
    }
    // n <= b <= d: Z(L_d) + B(L_b), L_k = mirror prefix m-k
    for (std::size_t b = n; b <= m; ++b) {
      Span s(np);
      for (const auto& c : mbd)
        if (c.t <= m - b) s.insert(c.v);
      std::size_t q = 0;
      for (std::size_t d = m + 1; d-- > b;) {
        while (q < mcy.size() && mcy[q].t <= m - d) s.insert(mcy[q++].v);
        r[b][d] = static_cast<long>(s.rank() - dimB_mir[m - b]);
      }
    }
    // b < n < d: images at the apex intersect
    std::size_t dimBn = dimB_asc[n];
    std::vector<std::size_t> dimX(n + 1), dimY(m + 1);
    {
      Span s(np);
      for (const auto& c : abd) s.insert(c.v);
      std::size_t q = 0;
      for (std::size_t b = 0; b <= n; ++b) {
        while (q < acy.size() && acy[q].t <= b) s.insert(acy[q++].v);
        dimX[b] = s.rank();
      }
      Span s2(np);
      for (const auto& c : abd) s2.insert(c.v);
      q = 0;
      for (std::size_t d = m + 1; d-- > n;) {
        while (q < mcy.size() && mcy[q].t <= m - d) s2.insert(mcy[q++].v);
        dimY[d] = s2.rank();
      }
    }
    for (std::size_t b = 0; b < n; ++b) {
      Span s(np);
      for (const auto& c : abd) s.insert(c.v);
      for (const auto& c : acy)
        if (c.t <= b) s.insert(c.v);
      std::size_t q = 0;
      for (std::size_t d = m + 1; d-- > n + 1;) {
        while (q < mcy.size() && mcy[q].t <= m - d) s.insert(mcy[q++].v);
        r[b][d] = static_cast<long>(dimX[b] + dimY[d]) - static_cast<long>(s.rank() + dimBn);
      }
    }

    for (std::size_t b = 1; b + 1 <= m; ++b)
      for (std::size_t d = b; d + 1 <= m; ++d) {
        long mu = r[b][d] - r[b - 1][d] - r[b][d + 1] + r[b - 1][d + 1];
        if (mu < 0) throw std::logic_error("oracle: negative multiplicity");
        for (long k = 0; k < mu; ++k) out.push_back({p, b, d});
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// initializer

namespace {

template <class Key>
CellId pivot_of(const Chain& c, Key key) {
  CellId best = c.cells.front();
  for (CellId x : c.cells)
    if (key(x) > key(best)) best = x;
  return best;
}

}  // namespace

PairSet initial_pairset(const UpDownState& st) {
  PairSet ps;
  auto akey = [&](CellId x) { return st.apos[x]; };
  auto mkey = [&](CellId x) { return -st.dpos[x]; };

  struct Column {
    Chain R, V;
  };
  // ascending: pivot cell -> reduced column of the negative cell killing it
  std::unordered_map<CellId, Column> asc_low;
  std::unordered_map<CellId, Chain> asc_cycle;
  for (CellId x : st.ascending) {
    const Cell& cell = st.cells.at(x);
    Chain R = cell.boundary, V = make_chain(cell.dim, {x});
    while (!R.empty()) {
      auto it = asc_low.find(pivot_of(R, akey));
      if (it == asc_low.end()) break;
      chain_add_into(R, it->second.R);
      chain_add_into(V, it->second.V);
    }
    if (R.empty()) {
      asc_cycle.emplace(x, std::move(V));
    } else {
      CellId low = pivot_of(R, akey);
      Representative rep = empty_rep(cell.dim - 1);
      rep.z = R;
      rep.A = V;
      ps.insert(make_pair(st, {Side::add, low}, {Side::add, x}), std::move(rep));
      asc_low.emplace(low, Column{std::move(R), std::move(V)});
    }
  }

  // descending, read backwards
  std::unordered_map<CellId, Column> desc_low;
  std::unordered_map<CellId, Chain> desc_cycle;
  for (auto it = st.descending.rbegin(); it != st.descending.rend(); ++it) {
    CellId x = *it;
    const Cell& cell = st.cells.at(x);
    Chain R = cell.boundary, V = make_chain(cell.dim, {x});
    while (!R.empty()) {
      auto f = desc_low.find(pivot_of(R, mkey));
      if (f == desc_low.end()) break;
      chain_add_into(R, f->second.R);
      chain_add_into(V, f->second.V);
    }
    if (R.empty()) {
      desc_cycle.emplace(x, std::move(V));
    } else {
      CellId low = pivot_of(R, mkey);
      Representative rep = empty_rep(cell.dim - 1);
      rep.A = V;
      rep.z2 = R;
      ps.insert(make_pair(st, {Side::del, x}, {Side::del, low}), std::move(rep));
      desc_low.emplace(low, Column{std::move(R), std::move(V)});
    }
  }

  // Closed-closed pairs: express each unpaired descending cycle in the basis
  // of unpaired ascending cycles modulo boundaries, then column-reduce in
  // reverse deletion order so every column gets its own ascending pivot.
  std::vector<CellId> open_desc;
  for (CellId y : st.descending)
    if (desc_cycle.count(y) && !desc_low.count(y)) open_desc.push_back(y);
  std::reverse(open_desc.begin(), open_desc.end());  // latest deleted first

  struct MCol {
    Chain coords;  // unpaired ascending creators
    Chain combo;   // descending cycles summed in
  };
  std::unordered_map<CellId, MCol> by_pivot;
  for (CellId y : open_desc) {
    const Chain& b = desc_cycle.at(y);
    Chain w = b;
    Chain coords(b.dim);
    while (!w.empty()) {
      CellId piv = pivot_of(w, akey);
      if (auto f = asc_low.find(piv); f != asc_low.end()) {
        chain_add_into(w, f->second.R);
      } else if (auto g = asc_cycle.find(piv); g != asc_cycle.end()) {
        chain_add_into(w, g->second);
        coords.toggle(piv);
      } else {
        throw std::logic_error("initial_pairset: cycle with a negative pivot");
      }
    }
    MCol col{std::move(coords), make_chain(0, {y})};
    CellId piv = 0;
    for (;;) {
      if (col.coords.empty()) throw std::logic_error("initial_pairset: dependent apex cycles");
      piv = pivot_of(col.coords, akey);
      auto f = by_pivot.find(piv);
      if (f == by_pivot.end()) break;
      chain_add_into(col.coords, f->second.coords);
      chain_add_into(col.combo, f->second.combo);
    }
    Representative rep = empty_rep(b.dim);
    for (CellId x : col.coords.cells) chain_add_into(rep.z, asc_cycle.at(x));
    for (CellId c : col.combo.cells) chain_add_into(rep.z2, desc_cycle.at(c));
    Chain w2 = chain_add(rep.z, rep.z2);
    while (!w2.empty()) {
      auto f = asc_low.find(pivot_of(w2, akey));
      if (f == asc_low.end()) throw std::logic_error("initial_pairset: z + z2 is not a boundary");
      chain_add_into(w2, f->second.R);
      chain_add_into(rep.A, f->second.V);
    }
    ps.insert(make_pair(st, {Side::add, piv}, {Side::del, y}), std::move(rep));
    by_pivot.emplace(piv, std::move(col));
  }
  return ps;
}

}  // namespace zzv
