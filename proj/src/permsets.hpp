#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "partitions.hpp"

namespace oti {

// Permutations are 0-based image arrays: g[x] is where x goes. Composition
// (g*h)(x) = g(h(x)), so h acts first. Points print 1-based.
using Perm = std::vector<int>;

Perm perm_identity(int n);
Perm perm_mul(const Perm& g, const Perm& h);
Perm perm_inverse(const Perm& g);
bool perm_is_identity(const Perm& g);
int perm_order(const Perm& g);
// 1-based cycle notation, e.g. "(1,2)(3,4)"; identity is "()".
std::string perm_to_cycles(const Perm& g);
Perm perm_from_cycles(const std::string& s, int degree);
// Word in adjacent transpositions s_i = (i, i+1), returned as 1-based i's;
// g equals the product s_{w[0]} * s_{w[1]} * ... (leftmost applied last).
std::vector<int> adjacent_word(const Perm& g);

struct PermGroup;
using PermGroupPtr = std::shared_ptr<const PermGroup>;

struct PermGroup {
  int degree = 0;
  std::vector<Perm> gens;
  std::vector<std::string> gen_names;
  // Set when the gens are exactly the adjacent transpositions of a prefix
  // block {1..sym_m}; restriction and coset handling exploit this.
  bool full_symmetric_prefix = false;
  int sym_m = 0;

  // Populated by enumerate(): elements[0] is the identity; words are
  // generator-index sequences evaluating left-to-right as in adjacent_word.
  std::vector<Perm> elements;
  std::vector<std::vector<int>> words;
  int64_t order = 0;  // 0 while unknown

  bool enumerated() const { return order > 0; }
  int find_element(const Perm& g) const;  // -1 when absent (needs enumeration)
};

PermGroupPtr symmetric_group(int n);
PermGroupPtr young_subgroup(const Partition& la, int n);
// S_m embedded in S_n on the last m points.
PermGroupPtr last_block_embed(int n, int m);
PermGroupPtr p_cycle_subgroup(int n, int64_t p);
// Transitive elementary abelian C_p^r acting regularly on the last p^r
// points: position b (0-based within the block) is the base-p digit vector
// of b, and sigma_i increments digit i-1.
PermGroupPtr elem_abelian_transitive(int64_t p, int r, int n);
PermGroupPtr conjugated_group(const PermGroupPtr& g, const Perm& c);

// Breadth-first closure with shortest-found words; throws OrderExceedsCap.
PermGroupPtr enumerate(const PermGroupPtr& g, int64_t cap);

// Canonical enumerated G-set snapshot: labels plus one action array per
// generator. This is the JSON-facing type.
struct GSet {
  std::vector<std::string> labels;
  std::vector<std::string> gen_names;
  std::vector<std::vector<int32_t>> actions;
  int size() const { return int(labels.size()); }
};

// Tab^lambda as row-assignment codes, 4 bits per entry, sorted ascending so
// point order is canonical and certificates are byte-stable.
class TabloidSpace {
 public:
  TabloidSpace(int n, const Partition& la);

  int n() const { return n_; }
  const Partition& shape() const { return la_; }
  int size() const { return int(codes_.size()); }

  int act(const Perm& g, int idx) const;
  uint64_t code(int idx) const { return codes_[idx]; }
  int index_of(uint64_t code) const;
  // Row index (0-based) of a 0-based entry x.
  int row_of(int idx, int x) const;
  std::vector<std::vector<int>> rows(int idx) const;  // 1-based sorted entries
  std::string label(int idx) const;

  std::vector<int32_t> action_array(const Perm& g) const;
  GSet gset(const std::vector<Perm>& gens, const std::vector<std::string>& names) const;

 private:
  int n_ = 0;
  Partition la_;
  std::vector<uint64_t> codes_;
};

// Diagonal action on Tab^la x Tab^mu; pair (i, j) has index i*|Y| + j.
class ProductSpace {
 public:
  ProductSpace(const TabloidSpace& x, const TabloidSpace& y) : x_(x), y_(y) {}
  int64_t size() const { return int64_t(x_.size()) * y_.size(); }
  const TabloidSpace& left() const { return x_; }
  const TabloidSpace& right() const { return y_; }

 private:
  const TabloidSpace& x_;
  const TabloidSpace& y_;
};

// Union-find orbit machinery over explicit action arrays.
std::vector<std::vector<int>> orbits_of(int size, const std::vector<std::vector<int32_t>>& actions);
int64_t orbit_count_of(int size, const std::vector<std::vector<int32_t>>& actions);

std::vector<int> fixed_points_of(int size, const std::vector<std::vector<int32_t>>& actions);

// Fixed points of the subgroup generated by h_gens on Tab^la, with the
// residual action of the commuting generators. Throws ActionMismatch if a
// residual generator fails to preserve the fixed set.
struct FixedPointData {
  std::vector<int> points;                       // indices into the space
  std::vector<std::vector<int32_t>> residual;    // one array per residual gen
  GSet gset;                                     // snapshot w.r.t. residual gens
};
FixedPointData fixed_points(const TabloidSpace& space, const std::vector<Perm>& h_gens,
                            const std::vector<Perm>& residual_gens,
                            const std::vector<std::string>& residual_names);

// Orbits and Young types for products of tabloid spaces under full S_n.
struct ProductOrbits {
  std::vector<int64_t> reps;         // one representative pair index per orbit
  std::vector<int64_t> sizes;
  std::vector<Partition> types;      // sorted intersection-cardinality entries
};
ProductOrbits product_orbits(const TabloidSpace& x, const TabloidSpace& y,
                             const std::vector<Perm>& gens);
int64_t product_orbit_count(const TabloidSpace& x, const TabloidSpace& y,
                            const std::vector<Perm>& gens);
Partition orbit_young_type(const TabloidSpace& x, const TabloidSpace& y, int64_t pair_index);

}  // namespace oti
