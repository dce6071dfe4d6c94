#pragma once

#include <string>
#include <vector>

namespace ahg::tmpl {

// A d-dimensional k-template: k abstract points, one set-partition of the
// points per coordinate (the equality classes of that coordinate). Stored as
// restricted-growth strings: parts()[i][p] is the block of point p in
// coordinate i, blocks numbered by first occurrence. The meet of all d
// partitions must be the singleton partition (the k tuples are distinct).
//
// Isomorphism relabels points but keeps the coordinate order fixed; the
// canonical form is the lexicographically least relabeling.
class Template {
 public:
  Template(int k, int d, std::vector<std::vector<int>> rgs);
  // default: the one-dimensional pair template (placeholder for two-phase loads)
  Template() : Template(2, 1, {{0, 1}}) {}

  int k() const { return k_; }
  int d() const { return d_; }
  const std::vector<std::vector<int>>& parts() const { return parts_; }
  int blocks(int coord) const;

  // Stable text key: rgs digits per coordinate, coordinates joined by '|'.
  std::string key() const;

  bool operator==(const Template& o) const { return parts_ == o.parts_; }
  bool operator<(const Template& o) const;

  // Block-list form used by the JSON format: per coordinate, blocks as sorted
  // integer arrays sorted by least element.
  static Template from_blocks(int k, int d,
                              const std::vector<std::vector<std::vector<int>>>& blocks);
  std::vector<std::vector<std::vector<int>>> to_blocks() const;

 private:
  int k_;
  int d_;
  std::vector<std::vector<int>> parts_;
};

// Surjection from d source coordinates onto m target coordinates.
struct Surjection {
  int d = 0;
  int m = 0;
  std::vector<int> map;  // map[i] in [0, m), every value hit

  Surjection(int d_, std::vector<int> map_);
  // All surjections from d in restricted-growth form, one per relabeling class
  // of the target, grouped by ascending m and lex within.
  static std::vector<Surjection> enumerate_rgs(int d);
};

Template canonicalize(const Template& t);
bool is_canonical(const Template& t);

// One canonical representative per isomorphism class, sorted.
std::vector<Template> enumerate_templates(int k, int d);

struct Distinguisher {
  int e = 0;
  std::vector<int> coords;  // lexicographically least witness of minimum size
};

Distinguisher min_distinguisher(const Template& t);

// Coordinate-j partition of the result is the meet of the source partitions
// grouped by pi. Result is canonicalized.
Template collapse(const Template& t, const Surjection& pi);

// Whether the k given pairwise-distinct d-tuples form a homomorphic image of
// t: some bijection of points carries every coordinate-equality of t into an
// equality of the tuples.
bool is_homomorphic_image(const Template& t, const std::vector<std::vector<int>>& pts);

// Canonical concrete copy: point p has coordinate i equal to its block index.
std::vector<std::vector<int>> realize(const Template& t);

// Template of a concrete point set (coordinate equality partitions).
Template template_of_points(const std::vector<std::vector<int>>& pts);

}  // namespace ahg::tmpl
