#include "zzv/cellmodel.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

namespace zzv {

namespace {
thread_local std::uint64_t g_chain_adds = 0;
}

Simplex::Simplex(std::vector<VertexId> v) : vertices(std::move(v)) {
  if (vertices.empty()) throw rejected_input("empty simplex");
  for (std::size_t i = 1; i < vertices.size(); ++i)
    if (vertices[i - 1] >= vertices[i])
      throw rejected_input("simplex vertices must be strictly increasing");
}

std::vector<Simplex> Simplex::facets() const {
  std::vector<Simplex> out;
  if (vertices.size() < 2) return out;
  for (std::size_t skip = 0; skip < vertices.size(); ++skip) {
    Simplex f;
    for (std::size_t i = 0; i < vertices.size(); ++i)
      if (i != skip) f.vertices.push_back(vertices[i]);
    out.push_back(std::move(f));
  }
  return out;
}

bool Simplex::subset_of(const Simplex& other) const {
  return std::includes(other.vertices.begin(), other.vertices.end(), vertices.begin(),
                       vertices.end());
}

std::string to_string(const Simplex& s) {
  std::string out;
  for (auto v : s.vertices) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

bool Chain::contains(CellId c) const { return std::binary_search(cells.begin(), cells.end(), c); }

void Chain::toggle(CellId c) {
  auto it = std::lower_bound(cells.begin(), cells.end(), c);
  if (it != cells.end() && *it == c)
    cells.erase(it);
  else
    cells.insert(it, c);
}

Chain make_chain(int dim, std::vector<CellId> cells) {
  std::sort(cells.begin(), cells.end());
  Chain out(dim);
  for (std::size_t i = 0; i < cells.size();) {
    std::size_t j = i;
    while (j < cells.size() && cells[j] == cells[i]) ++j;
    if ((j - i) % 2 == 1) out.cells.push_back(cells[i]);
    i = j;
  }
  return out;
}

Chain chain_add(const Chain& a, const Chain& b) {
  if (a.dim != b.dim) throw rejected_input("chain_add: dimension mismatch");
  ++g_chain_adds;
  Chain out(a.dim);
  out.cells.reserve(a.cells.size() + b.cells.size());
  std::set_symmetric_difference(a.cells.begin(), a.cells.end(), b.cells.begin(), b.cells.end(),
                                std::back_inserter(out.cells));
  return out;
}

void chain_add_into(Chain& a, const Chain& b) { a = chain_add(a, b); }

std::uint64_t chain_adds() { return g_chain_adds; }
void reset_chain_adds() { g_chain_adds = 0; }

CellId CellTable::create(int dim, Chain boundary, std::optional<Simplex> label) {
  if (dim < 0) throw rejected_input("negative cell dimension");
  if (boundary.dim != dim - 1) throw rejected_input("boundary has the wrong dimension");
  for (CellId b : boundary.cells) {
    if (!contains(b)) throw rejected_input("boundary mentions unknown cell " + std::to_string(b));
    if (cells_[b].dim != dim - 1) throw rejected_input("boundary cell has the wrong dimension");
  }
  if (!chain_boundary(boundary, *this).empty()) throw rejected_input("boundary is not a cycle");
  if (label) {
    if (label->dim() != dim) throw rejected_input("label dimension differs from cell dimension");
  } else {
    if (boundary.size() != 2 ||
        cells_[boundary.cells[0]].boundary != cells_[boundary.cells[1]].boundary)
      throw rejected_input("chi cell needs two boundary cells with equal boundaries");
  }
  CellId id = static_cast<CellId>(cells_.size());
  cells_.push_back(Cell{id, dim, std::move(boundary), std::move(label)});
  live_.push_back(true);
  return id;
}

void CellTable::retire(CellId id) {
  if (!contains(id)) throw rejected_input("retiring unknown cell");
  live_[id] = false;
}

void CellTable::set_boundary(CellId id, Chain boundary) {
  if (!contains(id)) throw rejected_input("unknown cell");
  cells_[id].boundary = std::move(boundary);
}

const Cell& CellTable::at(CellId id) const {
  if (!contains(id)) throw rejected_input("unknown cell " + std::to_string(id));
  return cells_[id];
}

Chain chain_boundary(const Chain& c, const CellTable& cells) {
  std::vector<CellId> acc;
  for (CellId id : c.cells) {
    const Cell& cell = cells.at(id);
    if (cell.dim != c.dim) throw rejected_input("chain member has the wrong dimension");
    acc.insert(acc.end(), cell.boundary.cells.begin(), cell.boundary.cells.end());
  }
  return make_chain(c.dim - 1, std::move(acc));
}

FiltrationReport validate_filtration(const ZigzagFiltration& f) {
  std::set<Simplex> present;
  auto fail = [](std::size_t at, std::string why) { return FiltrationReport{false, at, std::move(why)}; };
  for (std::size_t j = 0; j < f.arrows.size(); ++j) {
    const Simplex& s = f.arrows[j].simplex;
    if (s.vertices.empty()) return fail(j, "empty simplex");
    if (f.arrows[j].dir == Direction::forward) {
      if (present.count(s)) return fail(j, "simplex " + to_string(s) + " already present");
      for (const auto& fc : s.facets())
        if (!present.count(fc)) return fail(j, "facet " + to_string(fc) + " missing");
      present.insert(s);
    } else {
      if (!present.count(s)) return fail(j, "simplex " + to_string(s) + " not present");
      for (const auto& t : present)
        if (t.dim() == s.dim() + 1 && s.subset_of(t))
          return fail(j, "cofacet " + to_string(t) + " still present");
      present.erase(s);
    }
  }
  if (!present.empty()) return fail(f.arrows.size(), "complex not empty at the end");
  return {};
}

ZigzagFiltration filtration_from_string(const std::string& text) {
  ZigzagFiltration f;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok.size() < 2 || (tok[0] != '+' && tok[0] != '-'))
      throw rejected_input("bad arrow token '" + tok + "'");
    std::vector<VertexId> vs;
    std::istringstream parts(tok.substr(1));
    std::string v;
    while (std::getline(parts, v, ',')) vs.push_back(static_cast<VertexId>(std::stoul(v)));
    f.arrows.push_back({tok[0] == '+' ? Direction::forward : Direction::backward, Simplex(vs)});
  }
  return f;
}

ZigzagFiltration parse_zzf(std::istream& in) {
  ZigzagFiltration f;
  std::string line;
  std::size_t lineno = 0;
  bool header = false;
  auto fail = [&](const std::string& why) {
    throw rejected_input("line " + std::to_string(lineno) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::string word;
    ls >> word;
    if (!header) {
      std::string version;
      ls >> version;
      if (word != "zzf" || version != "1") fail("expected header 'zzf 1'");
      header = true;
      continue;
    }
    if (word != "a" && word != "d") fail("expected 'a' or 'd'");
    std::vector<VertexId> vs;
    std::string tok;
    while (ls >> tok) {
      if (tok.find_first_not_of("0123456789") != std::string::npos) fail("bad vertex '" + tok + "'");
      vs.push_back(static_cast<VertexId>(std::stoul(tok)));
    }
    try {
      f.arrows.push_back({word == "a" ? Direction::forward : Direction::backward, Simplex(vs)});
    } catch (const rejected_input& e) {
      fail(e.what());
    }
  }
  if (!header) throw rejected_input("line 1: missing 'zzf 1' header");
  return f;
}

void write_zzf(std::ostream& out, const ZigzagFiltration& f) {
  out << "zzf 1\n";
  for (const auto& a : f.arrows)
    out << (a.dir == Direction::forward ? "a " : "d ") << to_string(a.simplex) << '\n';
}

}  // namespace zzv
