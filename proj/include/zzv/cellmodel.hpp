#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace zzv {

// Raised for any input that violates an operation's precondition.
struct rejected_input : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using VertexId = std::uint32_t;
using CellId = std::uint32_t;

struct Simplex {
  std::vector<VertexId> vertices;

  Simplex() = default;
  // throws rejected_input unless non-empty, sorted and duplicate-free
  explicit Simplex(std::vector<VertexId> v);

  int dim() const { return static_cast<int>(vertices.size()) - 1; }
  std::vector<Simplex> facets() const;
  bool subset_of(const Simplex& other) const;

  auto operator<=>(const Simplex&) const = default;
  bool operator==(const Simplex&) const = default;
};

std::string to_string(const Simplex& s);

// GF(2) chain: a set of cells of one dimension, kept sorted by id.
struct Chain {
  int dim = 0;
  std::vector<CellId> cells;

  Chain() = default;
  explicit Chain(int d) : dim(d) {}
  bool empty() const { return cells.empty(); }
  std::size_t size() const { return cells.size(); }
  bool contains(CellId c) const;
  void toggle(CellId c);
  bool operator==(const Chain&) const = default;
};

// Sorts and cancels repeated ids mod 2.
Chain make_chain(int dim, std::vector<CellId> cells);

Chain chain_add(const Chain& a, const Chain& b);
void chain_add_into(Chain& a, const Chain& b);

// Number of chain_add / chain_add_into calls made on this thread.
std::uint64_t chain_adds();
void reset_chain_adds();

struct Cell {
  CellId id = 0;
  int dim = 0;
  Chain boundary;
  std::optional<Simplex> label;  // empty for a chi cell

  bool is_chi() const { return !label.has_value(); }
};

// Cell ids are handed out in creation order and never reused.
class CellTable {
 public:
  CellId create(int dim, Chain boundary, std::optional<Simplex> label);
  void retire(CellId id);
  // Replaces a boundary without the creation checks; callers keep ∂∂ = 0.
  void set_boundary(CellId id, Chain boundary);

  bool contains(CellId id) const { return id < live_.size() && live_[id]; }
  const Cell& at(CellId id) const;
  std::size_t capacity() const { return cells_.size(); }

 private:
  std::vector<Cell> cells_;
  std::vector<bool> live_;
};

Chain chain_boundary(const Chain& c, const CellTable& cells);

enum class Direction : std::uint8_t { forward, backward };

struct Arrow {
  Direction dir = Direction::forward;
  Simplex simplex;
  bool operator==(const Arrow&) const = default;
};

struct ZigzagFiltration {
  std::vector<Arrow> arrows;
  std::size_t m() const { return arrows.size(); }
  bool operator==(const ZigzagFiltration&) const = default;
};

struct FiltrationReport {
  bool ok = true;
  std::size_t arrow = 0;  // offending arrow, or m for a non-empty end
  std::string reason;
};

FiltrationReport validate_filtration(const ZigzagFiltration& f);

// Shorthand used by tests and tools: "+0 -0 +0,1".
ZigzagFiltration filtration_from_string(const std::string& text);

// .zzf text format
ZigzagFiltration parse_zzf(std::istream& in);
void write_zzf(std::ostream& out, const ZigzagFiltration& f);

}  // namespace zzv
