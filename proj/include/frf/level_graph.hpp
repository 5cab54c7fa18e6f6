#pragma once

#include <cstddef>
#include <vector>

#include "frf/fractal_def.hpp"
#include "frf/word.hpp"

namespace frf {

/// Vertex/cell complex of V_n. Vertices are equivalence classes of
/// (word, boundary-index) slots under the propagated level-1 gluing; ids are
/// stable across levels (building level n+1 extends level n's ids, the global
/// boundary is always 0..b-1).
struct LevelGraph {
  int level = 0;
  int m = 0;
  int b = 0;
  int num_vertices = 0;
  std::vector<int> boundary;  // global boundary ids, size b
  // cells[c * b + a] = vertex id of slot (word #c, index a); m^level cells in
  // lexicographic word order
  std::vector<int> cell_vertices;

  std::size_t num_cells() const { return cell_vertices.size() / static_cast<std::size_t>(b); }
  const int* cell(std::size_t c) const { return cell_vertices.data() + c * static_cast<std::size_t>(b); }
  int vertex(const Word& w, int a) const { return cell(w.index(m))[a]; }
  Word word_of(std::size_t c) const { return Word::from_index(c, m, static_cast<std::size_t>(level)); }
};

inline constexpr std::size_t kDefaultCellBudget = 2'000'000;

/// Build levels 0..n in one pass (each level reuses the previous one's ids).
std::vector<LevelGraph> build_levels(const FractalDef& def, int n,
                                     std::size_t cell_budget = kDefaultCellBudget);

LevelGraph build_level(const FractalDef& def, int n,
                       std::size_t cell_budget = kDefaultCellBudget);

/// Child words w.1 ... w.m; errors if w is not enumerable below lg's level.
std::vector<Word> refine_cell(const LevelGraph& lg, const Word& w);

}  // namespace frf
