#include "zzv/random.hpp"

#include <algorithm>
#include <set>

namespace zzv {

namespace {

template <class T>
const T& pick(std::mt19937_64& rng, const std::vector<T>& v) {
  return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

// All simplices of dimension <= max_dim on the first `vertices` vertices.
std::vector<Simplex> universe(std::size_t vertices, int max_dim) {
  std::vector<Simplex> out;
  std::vector<VertexId> cur;
  auto grow = [&](auto&& self, VertexId from) -> void {
    for (VertexId v = from; v < vertices; ++v) {
      cur.push_back(v);
      out.emplace_back(cur);
      if (static_cast<int>(cur.size()) <= max_dim) self(self, v + 1);
      cur.pop_back();
    }
  };
  grow(grow, 0);
  return out;
}

bool addable(const std::set<Simplex>& k, const Simplex& s) {
  if (k.count(s)) return false;
  if (s.dim() == 0) return true;
  for (const auto& fc : s.facets())
    if (!k.count(fc)) return false;
  return true;
}

bool removable(const std::set<Simplex>& k, const Simplex& s) {
  if (!k.count(s)) return false;
  for (const auto& t : k)
    if (t.dim() == s.dim() + 1 && s.subset_of(t)) return false;
  return true;
}

std::set<Simplex> complex_at(const ZigzagFiltration& f, std::size_t i) {
  std::set<Simplex> k;
  for (std::size_t j = 0; j < i; ++j) {
    if (f.arrows[j].dir == Direction::forward)
      k.insert(f.arrows[j].simplex);
    else
      k.erase(f.arrows[j].simplex);
  }
  return k;
}

}  // namespace

ZigzagFiltration random_filtration(std::mt19937_64& rng, const RandomFiltrationParams& p) {
  auto all = universe(p.vertices, p.max_dim);
  ZigzagFiltration f;
  std::set<Simplex> k;
  std::bernoulli_distribution del(p.delete_bias);
  std::size_t adds = 0;
  while (adds < p.additions) {
    if (!k.empty() && del(rng)) {
      std::vector<Simplex> cand;
      for (const auto& s : k)
        if (removable(k, s)) cand.push_back(s);
      const Simplex& s = pick(rng, cand);
      f.arrows.push_back({Direction::backward, s});
      k.erase(s);
      continue;
    }
    std::vector<Simplex> cand;
    for (const auto& s : all)
      if (addable(k, s)) cand.push_back(s);
    if (cand.empty()) continue;
    const Simplex& s = pick(rng, cand);
    f.arrows.push_back({Direction::forward, s});
    k.insert(s);
    ++adds;
  }
  while (!k.empty()) {
    std::vector<Simplex> cand;
    for (const auto& s : k)
      if (removable(k, s)) cand.push_back(s);
    const Simplex& s = pick(rng, cand);
    f.arrows.push_back({Direction::backward, s});
    k.erase(s);
  }
  return f;
}

std::optional<UpdateOp> random_op(std::mt19937_64& rng, const ZigzagFiltration& f, std::size_t vertices,
                                  int max_dim, std::size_t max_m, std::optional<OpKind> only) {
  std::vector<std::vector<UpdateOp>> bins(5);
  std::size_t m = f.m();
  for (std::size_t j = 0; j + 1 < m; ++j) {
    const Arrow &x = f.arrows[j], &y = f.arrows[j + 1];
    bool same = x.simplex == y.simplex;
    if (x.dir == Direction::forward && y.dir == Direction::backward && same)
      bins[2].push_back({OpKind::contract_in, j, {}});
    if (x.dir == Direction::backward && y.dir == Direction::forward && same)
      bins[4].push_back({OpKind::contract_out, j, {}});
    bool ok;
    if (x.dir != y.dir)
      ok = !same;
    else if (x.dir == Direction::forward)
      ok = !x.simplex.subset_of(y.simplex);
    else
      ok = !y.simplex.subset_of(x.simplex);
    if (ok) bins[0].push_back({OpKind::switch_arrows, j, {}});
  }
  if (m + 2 <= max_m) {
    auto all = universe(vertices, max_dim);
    std::size_t i = std::uniform_int_distribution<std::size_t>(0, m)(rng);
    auto k = complex_at(f, i);
    for (const auto& s : all) {
      if (addable(k, s)) bins[1].push_back({OpKind::expand_in, i, s});
      if (removable(k, s)) bins[3].push_back({OpKind::expand_out, i, s});
    }
  }
  std::vector<std::size_t> live;
  for (std::size_t b = 0; b < bins.size(); ++b)
    if (!bins[b].empty() && (!only || bins[b].front().kind == *only)) live.push_back(b);
  if (live.empty()) return std::nullopt;
  return pick(rng, bins[pick(rng, live)]);
}

}  // namespace zzv
