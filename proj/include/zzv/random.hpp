#pragma once

#include <optional>
#include <random>

#include "zzv/updates.hpp"

namespace zzv {

struct RandomFiltrationParams {
  std::size_t vertices = 6;
  int max_dim = 2;
  std::size_t additions = 10;  // the filtration has 2 * additions arrows
  double delete_bias = 0.35;   // chance of trying a deletion mid-walk
};

// Random legal zigzag: a walk of additions and deletions that empties the
// complex at the end.
ZigzagFiltration random_filtration(std::mt19937_64& rng, const RandomFiltrationParams& p);

// A random legal update for the current filtration.  Expansions are only
// offered while m + 2 <= max_m.  Empty when no op applies.
// `only` restricts the draw to one op kind.
std::optional<UpdateOp> random_op(std::mt19937_64& rng, const ZigzagFiltration& f, std::size_t vertices,
                                  int max_dim, std::size_t max_m, std::optional<OpKind> only = std::nullopt);

}  // namespace zzv
