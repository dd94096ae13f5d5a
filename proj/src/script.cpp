#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "zzv/updates.hpp"

namespace zzv {

std::vector<VineRecord> apply_script(Bundle& b, const std::vector<UpdateOp>& ops, const ScriptOptions& opt) {
  std::vector<VineRecord> out;
  for (std::size_t s = 0; s < ops.size(); ++s) {
    Bundle saved = b;
    try {
      out.push_back(apply_op(b, ops[s]));
    } catch (const std::exception& e) {
      b = std::move(saved);
      throw script_error(s, "op " + std::to_string(s) + " (" + to_string(ops[s]) + "): " + e.what());
    }
    if (opt.validate_each) {
      std::string why;
      if (!validate_pairset(b.pairs, b.U, &why))
        throw script_error(s, "op " + std::to_string(s) + " left an invalid pairing: " + why);
    }
    if (opt.oracle_check && b.U.m() <= opt.max_m) {
      auto got = u_barcode(b.pairs, b.U);
      auto want = ud_barcode_oracle(b.U);
      std::sort(got.begin(), got.end());
      std::sort(want.begin(), want.end());
      if (got != want) throw oracle_mismatch(s, "op " + std::to_string(s) + ": barcode differs from oracle");
    }
  }
  return out;
}

std::vector<UpdateOp> parse_zzops(std::istream& in) {
  std::vector<UpdateOp> ops;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto fail = [&](const std::string& why) {
      throw rejected_input("line " + std::to_string(lineno) + ": " + why);
    };
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    UpdateOp op;
    if (word == "switch")
      op.kind = OpKind::switch_arrows;
    else if (word == "expand-in")
      op.kind = OpKind::expand_in;
    else if (word == "contract-in")
      op.kind = OpKind::contract_in;
    else if (word == "expand-out")
      op.kind = OpKind::expand_out;
    else if (word == "contract-out")
      op.kind = OpKind::contract_out;
    else
      fail("unknown op '" + word + "'");
    long long pos;
    if (!(ls >> pos) || pos < 0) fail("expected a non-negative position");
    op.pos = static_cast<std::size_t>(pos);
    std::vector<VertexId> vs;
    long long v;
    while (ls >> v) {
      if (v < 0) fail("negative vertex");
      vs.push_back(static_cast<VertexId>(v));
    }
    if (!ls.eof()) fail("trailing garbage");
    bool wants = op.kind == OpKind::expand_in || op.kind == OpKind::expand_out;
    if (wants != !vs.empty()) fail(wants ? "missing simplex" : "unexpected vertices");
    if (wants) {
      std::sort(vs.begin(), vs.end());
      try {
        op.simplex = Simplex(vs);
      } catch (const rejected_input& e) {
        fail(e.what());
      }
    }
    ops.push_back(std::move(op));
  }
  return ops;
}

void write_zzops(std::ostream& out, const std::vector<UpdateOp>& ops) {
  for (const auto& op : ops) out << to_string(op) << '\n';
}

void write_vine(std::ostream& out, std::size_t step, const VineRecord& rec) {
  for (const auto& l : rec.links) {
    out << "step " << step << " pair " << l.pair << "->";
    switch (l.fate) {
      case VineFate::survives: out << l.to; break;
      case VineFate::created: out << "created"; break;
      case VineFate::destroyed: out << "destroyed"; break;
    }
    out << '\n';
  }
}

}  // namespace zzv
