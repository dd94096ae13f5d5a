#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "zzv/oracle.hpp"
#include "zzv/reps.hpp"

namespace zzv {

// Everything an update touches: the original filtration F, its up-down
// conversion U and the certified pairing of U.
struct Bundle {
  ZigzagFiltration F;
  UpDownState U;
  PairSet pairs;
};

// validate, convert, initialize
Bundle make_bundle(const ZigzagFiltration& f);

enum class OpKind : std::uint8_t { switch_arrows, expand_in, contract_in, expand_out, contract_out };
const char* op_name(OpKind k);

struct UpdateOp {
  OpKind kind = OpKind::switch_arrows;
  std::size_t pos = 0;  // j for switches, i otherwise
  Simplex simplex;      // expansions only
};

std::string to_string(const UpdateOp& op);

enum class SwitchKind : std::uint8_t { forward, backward, outward, inward };
// Classifies the switch at F arrows j, j+1 from their directions.
SwitchKind classify_switch(const ZigzagFiltration& f, std::size_t j);

enum class VineFate : std::uint8_t { survives, created, destroyed };

struct VineLink {
  PairId pair = 0;  // old id for survivors and destroyed pairs, new id for created ones
  VineFate fate = VineFate::survives;
  PairId to = 0;    // new id of a survivor
};

// Lists only the pairs an op touched; every other pair keeps its id.
struct VineRecord {
  UpdateOp op;
  std::vector<VineLink> links;
  std::vector<std::pair<ArrowRef, ArrowRef>> renames;
  bool exchanged = false;  // switches: the two arrows swapped partners
};

// ---- F-level operations --------------------------------------------------

VineRecord switch_mixed(Bundle& b, std::size_t j);
VineRecord switch_forward(Bundle& b, std::size_t j);
VineRecord switch_backward(Bundle& b, std::size_t j);
VineRecord switch_arrows(Bundle& b, std::size_t j);
VineRecord expand_inward(Bundle& b, std::size_t i, const Simplex& s);
VineRecord contract_inward(Bundle& b, std::size_t i);
VineRecord expand_outward(Bundle& b, std::size_t i, const Simplex& s);
VineRecord contract_outward(Bundle& b, std::size_t i);
VineRecord apply_op(Bundle& b, const UpdateOp& op);

// ---- U-level building blocks ---------------------------------------------

// Swaps the cells at positions k, k+1 of one half of U and repairs the
// representatives.  Returns true when the two arrows exchanged partners.
bool transpose(UpDownState& st, PairSet& ps, Side side, std::size_t k);

// Adds a fresh cell at the apex (last addition, first deletion).
CellId apex_insert(UpDownState& st, PairSet& ps, int dim, Chain boundary, std::optional<Simplex> label);
// Removes a coface-free cell sitting at the apex.
void apex_remove(UpDownState& st, PairSet& ps, CellId c);

// Cells involved in identifying two parallel copies of a simplex.
struct OutwardRewriteContext {
  CellId sigma0 = 0, sigma1 = 0, sigma2 = 0, chi = 0;
  std::set<CellId> cofaces1, cofaces2;
  std::vector<std::pair<ArrowRef, ArrowRef>> theta;
  std::vector<CellId> fcells;  // F arrow -> cell before the operation
};

// Contract-outward in two stages so the intermediate state (U with chi,
// called U-tilde) can be inspected.  The first stage leaves F untouched.
OutwardRewriteContext contract_outward_tilde(Bundle& b, std::size_t i);
void contract_outward_finish(Bundle& b, const OutwardRewriteContext& ctx, std::size_t i);

// Rewrites U-tilde representatives as U' representatives (chi collapsed,
// sigma1 and sigma2 identified).  Pair arrows must already be renamed.
void rewrite_out_contract(const OutwardRewriteContext& ctx, PairSet& ps);
// Lifts U' representatives to U-tilde after the cells were split.
void rewrite_out_expand(const OutwardRewriteContext& ctx, const UpDownState& st, PairSet& ps);

// ---- scripts ----------------------------------------------------------------

struct script_error : std::runtime_error {
  std::size_t index;
  script_error(std::size_t i, const std::string& what) : std::runtime_error(what), index(i) {}
};

struct ScriptOptions {
  bool validate_each = false;
  bool oracle_check = false;
  std::size_t max_m = 48;  // oracle only runs while m stays below this
};

// Applies ops in order.  A failing op rolls the bundle back to the state
// before it and throws script_error.  A validator failure also throws
// script_error; an oracle disagreement throws oracle_mismatch.
struct oracle_mismatch : std::runtime_error {
  std::size_t index;
  oracle_mismatch(std::size_t i, const std::string& what) : std::runtime_error(what), index(i) {}
};
std::vector<VineRecord> apply_script(Bundle& b, const std::vector<UpdateOp>& ops,
                                     const ScriptOptions& opt = {});

std::vector<UpdateOp> parse_zzops(std::istream& in);
void write_zzops(std::ostream& out, const std::vector<UpdateOp>& ops);
void write_vine(std::ostream& out, std::size_t step, const VineRecord& rec);

}  // namespace zzv
