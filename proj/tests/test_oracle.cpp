#include <random>

#include "doctest.h"
#include "support.hpp"
#include "zzv/random.hpp"

using namespace zzv;

TEST_CASE("rank function on fixture B") {
  auto st = convert(fx::F(fx::B));
  CHECK(ud_rank(st, 1, 5, 0) == 1);
  CHECK(ud_rank(st, 1, 4, 0) == 1);
  CHECK(ud_rank(st, 0, 4, 0) == 0);
  CHECK(ud_rank(st, 2, 2, 0) == 2);
  CHECK(ud_rank(st, 3, 3, 0) == 1);
  CHECK(ud_rank(st, 2, 2, 1) == 0);
}

TEST_CASE("oracle barcodes of the fixtures") {
  CHECK(fx::sorted(ud_barcode_oracle(convert(fx::F(fx::B)))) == fx::ivs({{0, 1, 5}, {0, 2, 2}, {0, 4, 4}}));
  CHECK(fx::sorted(ud_barcode_oracle(convert(fx::F(fx::C)))) ==
        fx::ivs({{0, 1, 7}, {0, 2, 2}, {0, 6, 6}, {1, 4, 4}}));
  CHECK(fx::sorted(ud_barcode_oracle(convert(fx::F(fx::A)))) == fx::ivs({{0, 1, 1}}));
  CHECK(ud_barcode_oracle(convert(ZigzagFiltration{})).empty());
}

TEST_CASE("oracle bars are consistent with the rank function") {
  // every rank equals the number of bars covering [i, j]
  std::mt19937_64 rng(7);
  for (int t = 0; t < 20; ++t) {
    RandomFiltrationParams p;
    p.additions = 3 + t % 6;
    auto st = convert(random_filtration(rng, p));
    auto bars = ud_barcode_oracle(st);
    for (int dim = 0; dim <= 2; ++dim)
      for (std::size_t i = 0; i <= st.m(); ++i)
        for (std::size_t j = i; j <= st.m(); ++j) {
          std::size_t n = 0;
          for (const auto& b : bars) n += b.dim == dim && b.b <= i && j <= b.d;
          CHECK(ud_rank(st, i, j, dim) == n);
        }
  }
}

TEST_CASE("initial pairing of the fixtures") {
  auto b = fx::bundle(fx::B);
  CHECK(validate_pairset(b.pairs, b.U));
  REQUIRE(b.pairs.size() == 3);
  auto cc = b.pairs.at(b.pairs.id_of({Side::add, 0}));
  CHECK(cc.pair.destroyer == ArrowRef{Side::del, 0});
  CHECK(cc.rep.z == make_chain(0, {0}));
  CHECK(cc.rep.z2 == make_chain(0, {0}));
  CHECK(cc.rep.A.empty());
  auto co = b.pairs.at(b.pairs.id_of({Side::add, 1}));
  CHECK(co.pair.destroyer == ArrowRef{Side::add, 2});
  CHECK(co.rep.z == make_chain(0, {0, 1}));
  auto oc = b.pairs.at(b.pairs.id_of({Side::del, 2}));
  CHECK(oc.pair.destroyer == ArrowRef{Side::del, 1});

  auto c = fx::bundle(fx::C);
  CHECK(validate_pairset(c.pairs, c.U));
  CellId uv1 = c.U.ascending[2], uv2 = c.U.ascending[3];
  auto loop = c.pairs.at(c.pairs.id_of({Side::add, uv2}));
  CHECK(loop.pair.kind == PairKind::closed_closed);
  CHECK(loop.pair.destroyer == ArrowRef{Side::del, uv1});
  CHECK(loop.rep.z == make_chain(1, {uv1, uv2}));
  CHECK(loop.rep.z2 == loop.rep.z);
  CHECK(c.pairs.at(c.pairs.id_of({Side::add, 1})).pair.destroyer == ArrowRef{Side::add, uv1});
  CHECK(c.pairs.at(c.pairs.id_of({Side::del, uv2})).pair.destroyer == ArrowRef{Side::del, 1});
  CHECK(fx::bars(c) == fx::ivs({{0, 1, 7}, {0, 2, 2}, {0, 4, 4}, {0, 6, 6}}));

  auto a = fx::bundle(fx::A);
  REQUIRE(a.pairs.size() == 1);
  CHECK(a.pairs.entries().begin()->second.rep.z == make_chain(0, {0}));
}

TEST_CASE("initial pairing agrees with the oracle on random filtrations") {
  std::uint64_t seed = 20261015;
  MESSAGE("seed " << seed);
  std::mt19937_64 rng(seed);
  for (int t = 0; t < 150; ++t) {
    RandomFiltrationParams p;
    p.additions = 2 + t % 19;
    p.max_dim = 1 + t % 2;
    auto b = make_bundle(random_filtration(rng, p));
    CAPTURE(t);
    std::string why;
    CHECK_MESSAGE(validate_pairset(b.pairs, b.U, &why), why);
    CHECK(fx::sorted(u_barcode(b.pairs, b.U)) == fx::sorted(ud_barcode_oracle(b.U)));
  }
}
