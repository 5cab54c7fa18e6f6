#include "frf/fractal_def.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <utility>

namespace frf {
namespace {

#include "builtin_defs.inc"

struct LineScanner {
  std::istringstream in;
  int line_no;
  explicit LineScanner(const std::string& line, int no) : in(line), line_no(no) {}

  std::string key() {
    std::string k;
    in >> k;
    return k;
  }
  int next_int(const char* what) {
    int v;
    if (!(in >> v)) fail(std::string("expected ") + what);
    return v;
  }
  double next_double(const char* what) {
    double v;
    if (!(in >> v)) fail(std::string("expected ") + what);
    return v;
  }
  std::string next_tok() {
    std::string t;
    in >> t;
    return t;
  }
  bool done() {
    in >> std::ws;
    return in.eof();
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw UsageError("definition line " + std::to_string(line_no) + ": " + msg);
  }
};

std::vector<int> parse_perm(LineScanner& sc, int n, const char* what) {
  std::vector<int> p(n);
  std::vector<bool> seen(n, false);
  for (int i = 0; i < n; ++i) {
    int v = sc.next_int(what);
    if (v < 1 || v > n || seen[v - 1]) sc.fail(std::string("bad permutation in ") + what);
    seen[v - 1] = true;
    p[i] = v - 1;
  }
  return p;
}

}  // namespace

void FractalDef::check_basic() const {
  if (num_maps < 2) throw UsageError(name + ": need at least 2 maps");
  if (boundary_size < 2) throw UsageError(name + ": need at least 2 boundary vertices");
  if (static_cast<int>(boundary_images.size()) != num_maps)
    throw UsageError(name + ": boundary_images size mismatch");

  std::vector<bool> covered(boundary_size, false);
  for (int i = 0; i < num_maps; ++i) {
    for (int a = 0; a < boundary_size; ++a) {
      int g = boundary_images[i][a];
      if (g == kFree) continue;
      if (g < 0 || g >= boundary_size) throw UsageError(name + ": boundary image out of range");
      covered[g] = true;
    }
  }
  // Every boundary vertex of a cell must reappear as a vertex of some child
  // cell, otherwise refinement loses it.
  for (int g = 0; g < boundary_size; ++g)
    if (!covered[g])
      throw UsageError(name + ": boundary vertex " + std::to_string(g + 1) +
                       " is not the image of any map");

  for (const auto& gl : gluings) {
    if (gl.map_i < 0 || gl.map_i >= num_maps || gl.map_j < 0 || gl.map_j >= num_maps ||
        gl.idx_a < 0 || gl.idx_a >= boundary_size || gl.idx_b < 0 || gl.idx_b >= boundary_size)
      throw UsageError(name + ": gluing entry out of range");
    if (gl.map_i == gl.map_j && gl.idx_a == gl.idx_b)
      throw UsageError(name + ": gluing entry identifies a slot with itself");
  }
  for (const auto& sym : symmetries) {
    if (static_cast<int>(sym.boundary_perm.size()) != boundary_size ||
        static_cast<int>(sym.map_perm.size()) != num_maps ||
        static_cast<int>(sym.local_perms.size()) != num_maps)
      throw UsageError(name + ": malformed symmetry entry");
  }
  if (!geometry.empty()) {
    if (static_cast<int>(geometry.size()) != num_maps)
      throw UsageError(name + ": geometry must list one affine map per contraction");
    for (const auto& g : geometry)
      if (g.linear.rows() != geometry_dim || g.linear.cols() != geometry_dim ||
          g.shift.size() != geometry_dim)
        throw UsageError(name + ": geometry dimension mismatch");
  }
}

FractalDef FractalDef::parse(const std::string& text) {
  FractalDef def;
  def.source_text = text;

  std::istringstream all(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(all, raw)) {
    ++line_no;
    if (auto pos = raw.find('#'); pos != std::string::npos) raw.erase(pos);
    // '|' and ',' are cosmetic separators
    std::replace(raw.begin(), raw.end(), '|', ' ');
    std::replace(raw.begin(), raw.end(), ',', ' ');
    LineScanner sc(raw, line_no);
    std::string key = sc.key();
    if (key.empty()) continue;

    if (key == "name") {
      def.name = sc.next_tok();
    } else if (key == "maps") {
      def.num_maps = sc.next_int("map count");
      def.boundary_images.assign(def.num_maps,
                                 std::vector<int>(std::max(def.boundary_size, 0), kFree));
    } else if (key == "boundary") {
      def.boundary_size = sc.next_int("boundary size");
      for (auto& row : def.boundary_images) row.assign(def.boundary_size, kFree);
    } else if (key == "boundary_image") {
      int i = sc.next_int("map index"), a = sc.next_int("local index"),
          g = sc.next_int("global index");
      if (i < 1 || i > def.num_maps || a < 1 || a > def.boundary_size || g < 1 ||
          g > def.boundary_size)
        sc.fail("boundary_image out of range");
      def.boundary_images[i - 1][a - 1] = g - 1;
    } else if (key == "glue") {
      Glue gl;
      gl.map_i = sc.next_int("map i") - 1;
      gl.idx_a = sc.next_int("index a") - 1;
      gl.map_j = sc.next_int("map j") - 1;
      gl.idx_b = sc.next_int("index b") - 1;
      if (gl.map_i < 0 || gl.map_i >= def.num_maps || gl.map_j < 0 || gl.map_j >= def.num_maps ||
          gl.idx_a < 0 || gl.idx_a >= def.boundary_size || gl.idx_b < 0 ||
          gl.idx_b >= def.boundary_size)
        sc.fail("glue tuple out of range");
      def.gluings.push_back(gl);
    } else if (key == "symmetry") {
      SymmetryEntry sym;
      sym.boundary_perm = parse_perm(sc, def.boundary_size, "boundary permutation");
      sym.map_perm = parse_perm(sc, def.num_maps, "map permutation");
      if (!sc.done()) {
        // rewind is awkward with istringstream; the perm parser above consumed
        // nothing extra, so just read m more permutations
        for (int i = 0; i < def.num_maps; ++i)
          sym.local_perms.push_back(parse_perm(sc, def.boundary_size, "local permutation"));
        if (!sc.done()) sc.fail("trailing tokens after symmetry entry");
      } else {
        sym.local_perms.assign(def.num_maps, sym.boundary_perm);
      }
      def.symmetries.push_back(std::move(sym));
    } else if (key == "geometry_dim") {
      def.geometry_dim = sc.next_int("geometry dimension");
    } else if (key == "geometry") {
      int i = sc.next_int("map index");
      if (i < 1 || i > def.num_maps) sc.fail("geometry map index out of range");
      int d = def.geometry_dim;
      if (d <= 0) sc.fail("geometry before geometry_dim");
      AffineMap am;
      am.linear.resize(d, d);
      am.shift.resize(d);
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) am.linear(r, c) = sc.next_double("matrix entry");
      for (int r = 0; r < d; ++r) am.shift(r) = sc.next_double("shift entry");
      if (def.geometry.empty())
        def.geometry.resize(def.num_maps, AffineMap{Eigen::MatrixXd::Zero(d, d),
                                                    Eigen::VectorXd::Zero(d)});
      def.geometry[i - 1] = std::move(am);
    } else {
      sc.fail("unknown key '" + key + "'");
    }
  }

  // symmetry lines may precede a later 'boundary'/'maps'; insist on order instead
  if (def.num_maps == 0 || def.boundary_size == 0)
    throw UsageError("definition must set 'maps' and 'boundary'");
  def.check_basic();
  return def;
}

FractalDef FractalDef::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open definition file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

const std::vector<std::string>& FractalDef::builtin_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [n, _] : k_builtin_defs) v.emplace_back(n);
    return v;
  }();
  return names;
}

const std::string& FractalDef::builtin_text(const std::string& name) {
  static const std::vector<std::pair<std::string, std::string>> table = [] {
    std::vector<std::pair<std::string, std::string>> v;
    for (const auto& [n, text] : k_builtin_defs) v.emplace_back(n, text);
    return v;
  }();
  for (const auto& [n, text] : table)
    if (name == n) return text;
  throw UsageError("unknown built-in fractal: " + name);
}

FractalDef FractalDef::resolve(const std::string& name_or_path) {
  for (const auto& [n, text] : k_builtin_defs)
    if (name_or_path == n) return parse(text);
  return load_file(name_or_path);
}

}  // namespace frf
