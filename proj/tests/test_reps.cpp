#include <sstream>

#include "doctest.h"
#include "support.hpp"

using namespace zzv;

namespace {

// fixture B cells: u = 0, v = 1, uv = 2
constexpr CellId u = 0, v = 1, uv = 2;

Representative rep(int p, std::vector<CellId> z, std::vector<CellId> A, std::vector<CellId> z2) {
  Representative r;
  r.z = make_chain(p, std::move(z));
  r.A = make_chain(p + 1, std::move(A));
  r.z2 = make_chain(p, std::move(z2));
  return r;
}

PairSet canonical_b(const UpDownState& st) {
  PairSet ps;
  ps.insert(make_pair(st, {Side::add, u}, {Side::del, u}), rep(0, {u}, {}, {u}));
  ps.insert(make_pair(st, {Side::add, v}, {Side::add, uv}), rep(0, {u, v}, {uv}, {}));
  ps.insert(make_pair(st, {Side::del, uv}, {Side::del, v}), rep(0, {}, {uv}, {u, v}));
  return ps;
}

}  // namespace

TEST_CASE("chain creators") {
  auto b = convert(fx::F(fx::B));
  CHECK(created_by(make_chain(0, {u, v}), {Side::add, v}, b));
  CHECK_FALSE(created_by(make_chain(0, {u, v}), {Side::add, u}, b));
  auto c = convert(fx::F(fx::C));
  CellId uv1 = c.ascending[2], uv2 = c.ascending[3];
  CHECK(created_by(make_chain(1, {uv1, uv2}), {Side::del, uv1}, c));
  CHECK_FALSE(created_by(make_chain(1, {uv1, uv2}), {Side::del, uv2}, c));
}

TEST_CASE("pair construction orders arrows and derives kind") {
  auto st = convert(fx::F(fx::B));
  Pair p = make_pair(st, {Side::add, uv}, {Side::add, v});
  CHECK(p.creator == ArrowRef{Side::add, v});
  CHECK(p.kind == PairKind::closed_open);
  CHECK(p.dim == 0);
  Pair q = make_pair(st, {Side::del, v}, {Side::del, uv});
  CHECK(q.creator == ArrowRef{Side::del, uv});
  CHECK(q.kind == PairKind::open_closed);
  CHECK(q.dim == 0);
  CHECK(std::string(kind_name(make_pair(st, {Side::add, u}, {Side::del, u}).kind)) == "CC");
}

TEST_CASE("representative validation") {
  auto st = convert(fx::F(fx::B));
  Pair cc = make_pair(st, {Side::add, u}, {Side::del, u});
  Pair co = make_pair(st, {Side::add, v}, {Side::add, uv});
  CHECK(validate_rep(cc, rep(0, {u}, {}, {u}), st));
  CHECK(validate_rep(co, rep(0, {u, v}, {uv}, {}), st));
  std::string why;
  CHECK_FALSE(validate_rep(co, rep(0, {u}, {uv}, {}), st, &why));
  CHECK_FALSE(why.empty());
  // a CO representative carries no second cycle
  CHECK_FALSE(validate_rep(co, rep(0, {u, v}, {uv}, {u}), st));
  // wrong creator: z = {u} is created by ↘u, not ↘v
  CHECK_FALSE(validate_rep(cc, rep(0, {v}, {}, {v}), st));
}

TEST_CASE("pairset validation") {
  auto st = convert(fx::F(fx::B));
  auto ps = canonical_b(st);
  std::string why;
  CHECK(validate_pairset(ps, st, &why));

  SUBCASE("uncovered arrow") {
    ps.erase(ps.id_of({Side::add, u}));
    CHECK_FALSE(validate_pairset(ps, st));
  }
  SUBCASE("arrow used twice") {
    CHECK_THROWS(ps.insert(make_pair(st, {Side::add, u}, {Side::del, v}), rep(0, {u}, {}, {u})));
  }
  SUBCASE("bad representative") {
    ps.at(ps.id_of({Side::add, v})).rep.A = Chain(1);
    CHECK_FALSE(validate_pairset(ps, st));
  }
}

TEST_CASE("arrow renaming") {
  auto st = convert(fx::F(fx::B));
  auto ps = canonical_b(st);
  PairId id = ps.id_of({Side::del, u});
  ps.rename_arrow({Side::del, u}, {Side::del, 7});
  CHECK(ps.at(id).pair.destroyer == ArrowRef{Side::del, 7});
  CHECK_FALSE(ps.has_arrow({Side::del, u}));
  CHECK(ps.id_of({Side::del, 7}) == id);
}

TEST_CASE("barcode listings") {
  auto st = convert(fx::F(fx::B));
  auto ps = canonical_b(st);
  CHECK(fx::sorted(f_barcode(ps, st)) == fx::ivs({{0, 1, 5}, {0, 2, 2}, {0, 4, 4}}));
  std::ostringstream os;
  write_zzb(os, ps, st, false);
  CHECK(os.str() == "0 1 5\n0 2 2\n0 4 4\n");
  std::ostringstream with;
  write_zzb(with, ps, st, true);
  CHECK(with.str() == "0 1 5 | 0 5 CC\n0 2 2 | 1 2 CO\n0 4 4 | 3 4 OC\n");
}
