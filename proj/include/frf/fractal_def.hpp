#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "frf/common.hpp"

namespace frf {

/// One level-1 automorphism of the cell structure.
///
/// boundary_perm pi permutes the global boundary vertices, map_perm sigma the
/// contraction maps. local_perms[i] is the boundary permutation induced inside
/// cell i: g(psi_i(v_a)) = psi_{sigma(i)}(v_{local_perms[i](a)}). For plain
/// (untwisted) symmetries local_perms[i] == pi for every i; the post-critically
/// infinite gaskets need genuinely twisted entries, and applying an entry at
/// level n recurses through the local permutations, so the declared set must
/// contain an entry for every local permutation it produces.
struct SymmetryEntry {
  std::vector<int> boundary_perm;               // size b, 0-based
  std::vector<int> map_perm;                    // size m, 0-based
  std::vector<std::vector<int>> local_perms;    // m entries of size b
};

struct AffineMap {
  Eigen::MatrixXd linear;  // d x d
  Eigen::VectorXd shift;   // d
};

/// Combinatorial self-similar cell structure: m contraction maps, b boundary
/// vertices, the level-1 gluing table, and optional symmetry/geometry data.
struct FractalDef {
  static constexpr int kFree = -1;

  std::string name;
  int num_maps = 0;       // m
  int boundary_size = 0;  // b

  // boundary_images[i][a] = global boundary vertex psi_i(v_a), or kFree.
  std::vector<std::vector<int>> boundary_images;

  struct Glue {
    int map_i, idx_a;  // psi_{map_i}(v_{idx_a}) ...
    int map_j, idx_b;  // ... = psi_{map_j}(v_{idx_b})
  };
  std::vector<Glue> gluings;

  std::vector<SymmetryEntry> symmetries;

  int geometry_dim = 0;
  std::vector<AffineMap> geometry;  // empty or one map per contraction

  // Exact definition text this def was parsed from; hashed into reports and
  // cache keys.
  std::string source_text;

  std::uint64_t content_hash() const { return fnv1a(source_text); }

  // Cheap shape checks (index ranges, every boundary vertex covered by some
  // map). Deeper conditions live in validate_structure.
  void check_basic() const;

  static FractalDef parse(const std::string& text);
  static FractalDef load_file(const std::string& path);

  /// Resolve a name against the built-in table, else treat it as a file path.
  static FractalDef resolve(const std::string& name_or_path);

  static const std::vector<std::string>& builtin_names();
  static const std::string& builtin_text(const std::string& name);
};

}  // namespace frf
