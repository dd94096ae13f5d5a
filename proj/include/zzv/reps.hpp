#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "zzv/updown.hpp"

namespace zzv {

enum class Side : std::uint8_t { add, del };

// ↘cell (add) or ↖cell (del); the U index is looked up in the state.
struct ArrowRef {
  Side kind = Side::add;
  CellId cell = 0;
  bool operator==(const ArrowRef&) const = default;
};

std::size_t uindex(const UpDownState& st, ArrowRef a);

enum class PairKind : std::uint8_t { closed_open, open_closed, closed_closed };
const char* kind_name(PairKind k);  // "CO", "OC", "CC"

struct Pair {
  ArrowRef creator;
  ArrowRef destroyer;
  int dim = 0;
  PairKind kind = PairKind::closed_open;
};

// Builds the pair for two arrows, ordering them by U index and deriving
// kind and dimension from the cells.
Pair make_pair(const UpDownState& st, ArrowRef a, ArrowRef b);

// CO uses (z, A), OC uses (A, z2), CC uses all three.  Chains a kind does
// not use stay empty.
struct Representative {
  Chain z, A, z2;
};

// Representative of dimension p with all chains empty.
Representative empty_rep(int p);
// Componentwise sum.
void rep_add_into(Representative& into, const Representative& other);

using PairId = std::uint64_t;

struct PairEntry {
  PairId id = 0;
  Pair pair;
  Representative rep;
};

class PairSet {
 public:
  PairId insert(const Pair& p, Representative r);
  void erase(PairId id);
  // arrow renaming (for example ↖σ₂ becoming ↖σ₀)
  void rename_arrow(ArrowRef from, ArrowRef to);

  PairEntry& at(PairId id);
  const PairEntry& at(PairId id) const;
  bool has_arrow(ArrowRef a) const { return owner_.count(key(a)) != 0; }
  PairId id_of(ArrowRef a) const;

  // Journal for vine records: pairs erased since the last mark (with their
  // creator at that time); ids handed out since the mark are >= mark_id().
  void mark();
  PairId mark_id() const { return mark_; }
  const std::vector<std::pair<PairId, ArrowRef>>& erased_since_mark() const { return erased_; }

  const std::map<PairId, PairEntry>& entries() const { return entries_; }
  // representatives may be edited in place; arrows only via insert/erase/rename
  std::map<PairId, PairEntry>& entries() { return entries_; }
  std::size_t size() const { return entries_.size(); }

 private:
  static std::uint64_t key(ArrowRef a) { return (std::uint64_t{a.cell} << 1) | (a.kind == Side::del); }

  std::map<PairId, PairEntry> entries_;
  std::unordered_map<std::uint64_t, PairId> owner_;
  PairId next_ = 1;
  PairId mark_ = 1;
  std::vector<std::pair<PairId, ArrowRef>> erased_;
};

bool created_by(const Chain& c, ArrowRef a, const UpDownState& st);
bool validate_rep(const Pair& p, const Representative& r, const UpDownState& st, std::string* why = nullptr);
bool validate_pairset(const PairSet& ps, const UpDownState& st, std::string* why = nullptr);

// Interval in U of a pair: [l+1, r] for arrows l < r.
Interval u_interval(const Pair& p, const UpDownState& st);
std::vector<Interval> u_barcode(const PairSet& ps, const UpDownState& st);
FInterval f_interval(const Pair& p, const UpDownState& st);
std::vector<FInterval> f_barcode(const PairSet& ps, const UpDownState& st);

// .zzb listing, sorted; with_pairs appends "| creator destroyer kind".
void write_zzb(std::ostream& out, const PairSet& ps, const UpDownState& st, bool with_pairs);

}  // namespace zzv
