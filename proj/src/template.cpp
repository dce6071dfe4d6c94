#include "template.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "error.hpp"

namespace ahg::tmpl {

namespace {

// Renumber an arbitrary block-id sequence into restricted-growth form.
std::vector<int> normalize_rgs(const std::vector<int>& ids) {
  std::vector<int> out(ids.size());
  std::map<int, int> seen;
  for (size_t p = 0; p < ids.size(); ++p) {
    auto [it, inserted] = seen.emplace(ids[p], static_cast<int>(seen.size()));
    out[p] = it->second;
  }
  return out;
}

bool meet_is_singleton(int k, const std::vector<std::vector<int>>& parts) {
  for (int p = 0; p < k; ++p)
    for (int q = p + 1; q < k; ++q) {
      bool split = false;
      for (const auto& part : parts)
        if (part[p] != part[q]) {
          split = true;
          break;
        }
      if (!split) return false;
    }
  return true;
}

// All restricted-growth strings of length k (set partitions of k points).
std::vector<std::vector<int>> all_rgs(int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(k, 0);
  auto rec = [&](auto&& self, int p, int mx) -> void {
    if (p == k) {
      out.push_back(cur);
      return;
    }
    for (int b = 0; b <= mx + 1; ++b) {
      cur[p] = b;
      self(self, p + 1, std::max(mx, b));
    }
  };
  rec(rec, 0, -1);
  return out;
}

}  // namespace

Template::Template(int k, int d, std::vector<std::vector<int>> rgs) : k_(k), d_(d) {
  if (k < 2) fail(Errc::invalid, "template needs k >= 2");
  if (d < 1) fail(Errc::invalid, "template needs d >= 1");
  if (static_cast<int>(rgs.size()) != d) fail(Errc::invalid, "template needs d partitions");
  parts_.reserve(d);
  for (auto& part : rgs) {
    if (static_cast<int>(part.size()) != k)
      fail(Errc::invalid, "partition must cover all k points");
    for (int b : part)
      if (b < 0 || b >= k) fail(Errc::invalid, "block id out of range");
    parts_.push_back(normalize_rgs(part));
  }
  if (!meet_is_singleton(k_, parts_))
    fail(Errc::invalid, "coordinate partitions do not separate the points");
}

int Template::blocks(int coord) const {
  return 1 + *std::max_element(parts_[coord].begin(), parts_[coord].end());
}

std::string Template::key() const {
  std::string s;
  for (int i = 0; i < d_; ++i) {
    if (i) s += '|';
    for (int p = 0; p < k_; ++p) {
      if (p) s += '.';
      s += std::to_string(parts_[i][p]);
    }
  }
  return s;
}

bool Template::operator<(const Template& o) const {
  if (k_ != o.k_) return k_ < o.k_;
  if (d_ != o.d_) return d_ < o.d_;
  return parts_ < o.parts_;
}

Template Template::from_blocks(int k, int d,
                               const std::vector<std::vector<std::vector<int>>>& blocks) {
  std::vector<std::vector<int>> rgs;
  for (const auto& coord_blocks : blocks) {
    std::vector<int> ids(k, -1);
    int b = 0;
    for (const auto& block : coord_blocks) {
      if (block.empty()) fail(Errc::invalid, "empty block in partition");
      for (int p : block) {
        if (p < 0 || p >= k) fail(Errc::invalid, "point out of range in partition");
        if (ids[p] != -1) fail(Errc::invalid, "point repeated in partition");
        ids[p] = b;
      }
      ++b;
    }
    for (int p = 0; p < k; ++p)
      if (ids[p] == -1) fail(Errc::invalid, "point missing from partition");
    rgs.push_back(ids);
  }
  return Template(k, d, rgs);
}

std::vector<std::vector<std::vector<int>>> Template::to_blocks() const {
  std::vector<std::vector<std::vector<int>>> out;
  for (int i = 0; i < d_; ++i) {
    std::vector<std::vector<int>> coord_blocks(blocks(i));
    for (int p = 0; p < k_; ++p) coord_blocks[parts_[i][p]].push_back(p);
    out.push_back(coord_blocks);
  }
  return out;
}

Surjection::Surjection(int d_, std::vector<int> map_) : d(d_), map(std::move(map_)) {
  if (static_cast<int>(map.size()) != d || d < 1) fail(Errc::arity, "surjection arity mismatch");
  m = 1 + *std::max_element(map.begin(), map.end());
  std::vector<bool> hit(m, false);
  for (int v : map) {
    if (v < 0 || v >= m) fail(Errc::invalid, "surjection value out of range");
    hit[v] = true;
  }
  for (bool h : hit)
    if (!h) fail(Errc::invalid, "surjection misses a target value");
}

std::vector<Surjection> Surjection::enumerate_rgs(int d) {
  std::vector<Surjection> out;
  std::vector<int> cur(d, 0);
  auto rec = [&](auto&& self, int i, int mx) -> void {
    if (i == d) {
      out.emplace_back(d, cur);
      return;
    }
    for (int v = 0; v <= mx + 1; ++v) {
      cur[i] = v;
      self(self, i + 1, std::max(mx, v));
    }
  };
  rec(rec, 0, -1);
  std::stable_sort(out.begin(), out.end(),
                   [](const Surjection& a, const Surjection& b) {
                     if (a.m != b.m) return a.m < b.m;
                     return a.map < b.map;
                   });
  return out;
}

Template canonicalize(const Template& t) {
  const int k = t.k();
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> best;
  std::vector<std::vector<int>> cur(t.d(), std::vector<int>(k));
  do {
    // new point p is old point perm[p]
    for (int i = 0; i < t.d(); ++i) {
      for (int p = 0; p < k; ++p) cur[i][p] = t.parts()[i][perm[p]];
      cur[i] = normalize_rgs(cur[i]);
    }
    if (best.empty() || cur < best) best = cur;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return Template(k, t.d(), best);
}

bool is_canonical(const Template& t) { return canonicalize(t) == t; }

std::vector<Template> enumerate_templates(int k, int d) {
  if (k < 2) fail(Errc::invalid, "enumerate_templates needs k >= 2");
  if (d < 1) fail(Errc::invalid, "enumerate_templates needs d >= 1");
  std::vector<std::vector<int>> parts = all_rgs(k);
  std::set<std::vector<std::vector<int>>> seen;
  std::vector<Template> out;
  std::vector<int> idx(d, 0);
  std::vector<std::vector<int>> tuple(d);
  while (true) {
    for (int i = 0; i < d; ++i) tuple[i] = parts[idx[i]];
    if (meet_is_singleton(k, tuple)) {
      Template cand = canonicalize(Template(k, d, tuple));
      if (seen.insert(cand.parts()).second) out.push_back(cand);
    }
    int i = d - 1;
    while (i >= 0 && ++idx[i] == static_cast<int>(parts.size())) idx[i--] = 0;
    if (i < 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

Distinguisher min_distinguisher(const Template& t) {
  const int d = t.d();
  // subsets ordered by (size, lex); first hit is the canonical witness
  for (int size = 1; size <= d; ++size) {
    std::vector<int> comb(size);
    std::iota(comb.begin(), comb.end(), 0);
    while (true) {
      std::vector<std::vector<int>> sel;
      for (int i : comb) sel.push_back(t.parts()[i]);
      if (meet_is_singleton(t.k(), sel)) return Distinguisher{size, comb};
      int i = size - 1;
      while (i >= 0 && comb[i] == d - size + i) --i;
      if (i < 0) break;
      ++comb[i];
      for (int j = i + 1; j < size; ++j) comb[j] = comb[j - 1] + 1;
    }
  }
  fail(Errc::invalid, "template has no distinguisher");  // unreachable for valid templates
}

Template collapse(const Template& t, const Surjection& pi) {
  if (pi.d != t.d()) fail(Errc::arity, "surjection arity does not match template dimension");
  std::vector<std::vector<int>> parts;
  for (int j = 0; j < pi.m; ++j) {
    // meet of the source partitions mapped onto j
    std::vector<std::vector<int>> group;
    for (int i = 0; i < t.d(); ++i)
      if (pi.map[i] == j) group.push_back(t.parts()[i]);
    std::map<std::vector<int>, int> ids;
    std::vector<int> part(t.k());
    for (int p = 0; p < t.k(); ++p) {
      std::vector<int> sig;
      for (const auto& g : group) sig.push_back(g[p]);
      auto [it, inserted] = ids.emplace(sig, static_cast<int>(ids.size()));
      part[p] = it->second;
    }
    parts.push_back(part);
  }
  return canonicalize(Template(t.k(), pi.m, parts));
}

bool is_homomorphic_image(const Template& t, const std::vector<std::vector<int>>& pts) {
  const int k = t.k();
  const int d = t.d();
  if (static_cast<int>(pts.size()) != k) fail(Errc::arity, "point count must equal k");
  for (const auto& p : pts)
    if (static_cast<int>(p.size()) != d) fail(Errc::arity, "point arity must equal d");
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      if (pts[a] == pts[b]) fail(Errc::invalid, "duplicate tuples cannot form a k-template");

  // Backtracking over the bijection point -> tuple. Equal template coordinates
  // must map to equal tuple coordinates; merging is allowed in the other
  // direction, so only the forward implication is checked.
  std::vector<int> img(k, -1);
  std::vector<bool> used(k, false);
  auto rec = [&](auto&& self, int p) -> bool {
    if (p == k) return true;
    for (int q = 0; q < k; ++q) {
      if (used[q]) continue;
      bool ok = true;
      for (int p2 = 0; p2 < p && ok; ++p2)
        for (int i = 0; i < d; ++i)
          if (t.parts()[i][p] == t.parts()[i][p2] && pts[q][i] != pts[img[p2]][i]) {
            ok = false;
            break;
          }
      if (!ok) continue;
      img[p] = q;
      used[q] = true;
      if (self(self, p + 1)) return true;
      used[q] = false;
      img[p] = -1;
    }
    return false;
  };
  return rec(rec, 0);
}

std::vector<std::vector<int>> realize(const Template& t) {
  std::vector<std::vector<int>> pts(t.k(), std::vector<int>(t.d()));
  for (int p = 0; p < t.k(); ++p)
    for (int i = 0; i < t.d(); ++i) pts[p][i] = t.parts()[i][p];
  return pts;
}

Template template_of_points(const std::vector<std::vector<int>>& pts) {
  if (pts.empty()) fail(Errc::invalid, "empty point set");
  const int k = static_cast<int>(pts.size());
  const int d = static_cast<int>(pts[0].size());
  std::vector<std::vector<int>> parts(d, std::vector<int>(k));
  for (int i = 0; i < d; ++i) {
    std::map<int, int> ids;
    for (int p = 0; p < k; ++p) {
      if (static_cast<int>(pts[p].size()) != d) fail(Errc::arity, "ragged point set");
      auto [it, inserted] = ids.emplace(pts[p][i], static_cast<int>(ids.size()));
      parts[i][p] = it->second;
    }
  }
  return Template(k, d, parts);
}

}  // namespace ahg::tmpl
