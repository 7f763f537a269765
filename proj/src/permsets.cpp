#include "permsets.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

namespace oti {

Perm perm_identity(int n) {
  Perm g(n);
  std::iota(g.begin(), g.end(), 0);
  return g;
}

Perm perm_mul(const Perm& g, const Perm& h) {
  check_internal(g.size() == h.size(), "perm_mul degree mismatch");
  Perm r(g.size());
  for (size_t x = 0; x < g.size(); ++x) r[x] = g[h[x]];
  return r;
}

Perm perm_inverse(const Perm& g) {
  Perm r(g.size());
  for (size_t x = 0; x < g.size(); ++x) r[g[x]] = int(x);
  return r;
}

bool perm_is_identity(const Perm& g) {
  for (size_t x = 0; x < g.size(); ++x)
    if (g[x] != int(x)) return false;
  return true;
}

int perm_order(const Perm& g) {
  int ord = 1;
  Perm cur = g;
  while (!perm_is_identity(cur)) {
    cur = perm_mul(cur, g);
    ++ord;
    check_internal(ord < 1 << 20, "perm_order runaway");
  }
  return ord;
}

std::string perm_to_cycles(const Perm& g) {
  std::vector<char> seen(g.size(), 0);
  std::ostringstream os;
  bool any = false;
  for (size_t start = 0; start < g.size(); ++start) {
    if (seen[start] || g[start] == int(start)) continue;
    os << "(";
    size_t x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = 1;
      os << (first ? "" : ",") << (x + 1);
      first = false;
      x = g[x];
    }
    os << ")";
    any = true;
  }
  return any ? os.str() : "()";
}

Perm perm_from_cycles(const std::string& s, int degree) {
  Perm g = perm_identity(degree);
  size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] != '(') {
      ++pos;
      continue;
    }
    ++pos;
    std::vector<int> cyc;
    std::string num;
    while (pos < s.size() && s[pos] != ')') {
      if (isdigit((unsigned char)s[pos]))
        num += s[pos];
      else if (!num.empty()) {
        cyc.push_back(std::stoi(num) - 1);
        num.clear();
      }
      ++pos;
    }
    if (!num.empty()) cyc.push_back(std::stoi(num) - 1);
    ++pos;
    for (size_t i = 0; i < cyc.size(); ++i) {
      int from = cyc[i], to = cyc[(i + 1) % cyc.size()];
      require(from >= 0 && from < degree, Err::BadParameters, "cycle point out of range");
      g[from] = to;
    }
  }
  return g;
}

std::vector<int> adjacent_word(const Perm& g) {
  // Bubble-sort g to the identity by right multiplications g*s_i, which swap
  // adjacent array entries; the reversed swap list is a word for g.
  Perm cur = g;
  std::vector<int> swaps;
  bool moved = true;
  while (moved) {
    moved = false;
    for (size_t i = 0; i + 1 < cur.size(); ++i)
      if (cur[i] > cur[i + 1]) {
        std::swap(cur[i], cur[i + 1]);
        swaps.push_back(int(i) + 1);
        moved = true;
      }
  }
  std::reverse(swaps.begin(), swaps.end());
  return swaps;
}

int PermGroup::find_element(const Perm& g) const {
  for (size_t i = 0; i < elements.size(); ++i)
    if (elements[i] == g) return int(i);
  return -1;
}

namespace {

PermGroupPtr make_group(int degree, std::vector<Perm> gens, std::vector<std::string> names) {
  auto g = std::make_shared<PermGroup>();
  g->degree = degree;
  g->gens = std::move(gens);
  g->gen_names = std::move(names);
  return g;
}

Perm adjacent_transposition(int n, int i) {  // (i, i+1), 1-based i
  Perm g = perm_identity(n);
  std::swap(g[i - 1], g[i]);
  return g;
}

}  // namespace

PermGroupPtr symmetric_group(int n) {
  require(n >= 0, Err::BadParameters, "symmetric_group needs n >= 0");
  std::vector<Perm> gens;
  std::vector<std::string> names;
  for (int i = 1; i < n; ++i) {
    gens.push_back(adjacent_transposition(n, i));
    names.push_back("s" + std::to_string(i));
  }
  auto g = std::make_shared<PermGroup>();
  g->degree = n;
  g->gens = gens;
  g->gen_names = names;
  g->full_symmetric_prefix = true;
  g->sym_m = n;
  return g;
}

PermGroupPtr young_subgroup(const Partition& la, int n) {
  require(weight(la) <= n, Err::BadParameters, "young_subgroup shape exceeds n");
  std::vector<Perm> gens;
  std::vector<std::string> names;
  int start = 0;
  for (int part : la) {
    for (int i = 1; i < part; ++i) {
      gens.push_back(adjacent_transposition(n, start + i));
      names.push_back("s" + std::to_string(start + i));
    }
    start += part;
  }
  auto g = make_group(n, gens, names);
  auto mg = std::const_pointer_cast<PermGroup>(g);
  if (la.size() == 1 || (la.size() > 0 && weight(la) == la[0])) {
    mg->full_symmetric_prefix = true;
    mg->sym_m = la.empty() ? 0 : la[0];
  }
  return g;
}

PermGroupPtr last_block_embed(int n, int m) {
  require(n >= m && m >= 0, Err::BadParameters, "last_block_embed needs n >= m >= 0");
  std::vector<Perm> gens;
  std::vector<std::string> names;
  for (int i = 1; i < m; ++i) {
    gens.push_back(adjacent_transposition(n, n - m + i));
    names.push_back("s" + std::to_string(n - m + i));
  }
  return make_group(n, gens, names);
}

PermGroupPtr p_cycle_subgroup(int n, int64_t p) {
  require(n >= p && p >= 2, Err::BadParameters, "p_cycle_subgroup needs n >= p >= 2");
  Perm c = perm_identity(n);
  for (int64_t i = 0; i < p; ++i) c[n - p + i] = int(n - p + (i + 1) % p);
  return make_group(n, {c}, {"c"});
}

PermGroupPtr elem_abelian_transitive(int64_t p, int r, int n) {
  require(is_prime(p) && r >= 1, Err::BadParameters, "elementary abelian needs prime p, r >= 1");
  int64_t pr = power_int(p, r);
  require(n >= pr, Err::BadParameters, "n too small for transitive C_p^r");
  std::vector<Perm> gens;
  std::vector<std::string> names;
  int base = int(n - pr);
  for (int i = 0; i < r; ++i) {
    Perm g = perm_identity(n);
    int64_t step = power_int(p, i);
    for (int64_t b = 0; b < pr; ++b) {
      int64_t digit = (b / step) % p;
      int64_t nb = b + (digit + 1 == p ? step - p * step : step);
      g[base + b] = int(base + nb);
    }
    gens.push_back(g);
    names.push_back("sigma" + std::to_string(i + 1));
  }
  return make_group(n, gens, names);
}

PermGroupPtr conjugated_group(const PermGroupPtr& g, const Perm& c) {
  std::vector<Perm> gens;
  Perm cinv = perm_inverse(c);
  for (const Perm& x : g->gens) gens.push_back(perm_mul(c, perm_mul(x, cinv)));
  return make_group(g->degree, gens, g->gen_names);
}

PermGroupPtr enumerate(const PermGroupPtr& g, int64_t cap) {
  auto out = std::make_shared<PermGroup>(*g);
  std::map<Perm, int> index;
  out->elements.clear();
  out->words.clear();
  out->elements.push_back(perm_identity(g->degree));
  out->words.push_back({});
  index[out->elements[0]] = 0;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    for (size_t gi = 0; gi < g->gens.size(); ++gi) {
      Perm next = perm_mul(out->elements[cur], g->gens[gi]);
      if (index.count(next)) continue;
      require(int64_t(out->elements.size()) < cap, Err::OrderExceedsCap,
              "group order exceeds cap " + std::to_string(cap));
      index[next] = int(out->elements.size());
      std::vector<int> w = out->words[cur];
      w.push_back(int(gi));
      out->elements.push_back(next);
      out->words.push_back(std::move(w));
      queue.push_back(index[next]);
    }
  }
  out->order = int64_t(out->elements.size());
  return out;
}

TabloidSpace::TabloidSpace(int n, const Partition& la) : n_(n), la_(la) {
  require_partition(la);
  require(weight(la) == n, Err::WeightMismatch, "tabloids need lambda |- n");
  require(n <= 15, Err::BadParameters, "tabloid space supports n <= 15");
  std::vector<int> rem(la.begin(), la.end());
  std::vector<int> assign(n, 0);
  std::function<void(int)> rec = [&](int x) {
    if (x == n) {
      uint64_t code = 0;
      for (int i = 0; i < n; ++i) code |= uint64_t(assign[i]) << (4 * i);
      codes_.push_back(code);
      return;
    }
    for (size_t rrow = 0; rrow < rem.size(); ++rrow) {
      if (!rem[rrow]) continue;
      --rem[rrow];
      assign[x] = int(rrow);
      rec(x + 1);
      ++rem[rrow];
    }
  };
  rec(0);
  std::sort(codes_.begin(), codes_.end());
}

int TabloidSpace::index_of(uint64_t code) const {
  auto it = std::lower_bound(codes_.begin(), codes_.end(), code);
  check_internal(it != codes_.end() && *it == code, "tabloid code not found");
  return int(it - codes_.begin());
}

int TabloidSpace::act(const Perm& g, int idx) const {
  uint64_t code = codes_[idx], out = 0;
  for (int x = 0; x < n_; ++x) out |= ((code >> (4 * x)) & 0xF) << (4 * g[x]);
  return index_of(out);
}

int TabloidSpace::row_of(int idx, int x) const { return int((codes_[idx] >> (4 * x)) & 0xF); }

std::vector<std::vector<int>> TabloidSpace::rows(int idx) const {
  std::vector<std::vector<int>> rows(la_.size());
  for (int x = 0; x < n_; ++x) rows[row_of(idx, x)].push_back(x + 1);
  return rows;
}

std::string TabloidSpace::label(int idx) const {
  auto rws = rows(idx);
  std::ostringstream os;
  for (size_t r = 0; r < rws.size(); ++r) {
    if (r) os << "|";
    for (size_t i = 0; i < rws[r].size(); ++i) os << (i ? " " : "") << rws[r][i];
  }
  return os.str();
}

std::vector<int32_t> TabloidSpace::action_array(const Perm& g) const {
  std::vector<int32_t> arr(size());
  for (int i = 0; i < size(); ++i) arr[i] = act(g, i);
  return arr;
}

GSet TabloidSpace::gset(const std::vector<Perm>& gens, const std::vector<std::string>& names) const {
  GSet s;
  s.labels.reserve(size());
  for (int i = 0; i < size(); ++i) s.labels.push_back(label(i));
  s.gen_names = names;
  for (const Perm& g : gens) s.actions.push_back(action_array(g));
  return s;
}

namespace {

struct UnionFind {
  std::vector<int32_t> parent;
  explicit UnionFind(int64_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int32_t find(int32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int32_t a, int32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

std::vector<std::vector<int>> orbits_of(int size, const std::vector<std::vector<int32_t>>& actions) {
  UnionFind uf(size);
  for (const auto& arr : actions) {
    check_internal(int(arr.size()) == size, "action array size mismatch");
    for (int i = 0; i < size; ++i) uf.unite(i, arr[i]);
  }
  std::map<int32_t, std::vector<int>> buckets;
  for (int i = 0; i < size; ++i) buckets[uf.find(i)].push_back(i);
  std::vector<std::vector<int>> out;
  for (auto& kv : buckets) out.push_back(std::move(kv.second));
  return out;
}

int64_t orbit_count_of(int size, const std::vector<std::vector<int32_t>>& actions) {
  UnionFind uf(size);
  for (const auto& arr : actions)
    for (int i = 0; i < size; ++i) uf.unite(i, arr[i]);
  int64_t count = 0;
  for (int i = 0; i < size; ++i)
    if (uf.find(i) == i) ++count;
  return count;
}

std::vector<int> fixed_points_of(int size, const std::vector<std::vector<int32_t>>& actions) {
  std::vector<int> out;
  for (int i = 0; i < size; ++i) {
    bool fixed = true;
    for (const auto& arr : actions)
      if (arr[i] != i) {
        fixed = false;
        break;
      }
    if (fixed) out.push_back(i);
  }
  return out;
}

FixedPointData fixed_points(const TabloidSpace& space, const std::vector<Perm>& h_gens,
                            const std::vector<Perm>& residual_gens,
                            const std::vector<std::string>& residual_names) {
  FixedPointData out;
  for (int i = 0; i < space.size(); ++i) {
    bool fixed = true;
    for (const Perm& h : h_gens)
      if (space.act(h, i) != i) {
        fixed = false;
        break;
      }
    if (fixed) out.points.push_back(i);
  }
  std::map<int, int> pos;
  for (size_t i = 0; i < out.points.size(); ++i) pos[out.points[i]] = int(i);
  for (const Perm& g : residual_gens) {
    std::vector<int32_t> arr(out.points.size());
    for (size_t i = 0; i < out.points.size(); ++i) {
      int img = space.act(g, out.points[i]);
      auto it = pos.find(img);
      require(it != pos.end(), Err::ActionMismatch,
              "residual generator does not preserve the fixed-point set");
      arr[i] = it->second;
    }
    out.residual.push_back(std::move(arr));
  }
  out.gset.gen_names = residual_names;
  out.gset.actions = out.residual;
  for (int p : out.points) out.gset.labels.push_back(space.label(p));
  return out;
}

ProductOrbits product_orbits(const TabloidSpace& x, const TabloidSpace& y,
                             const std::vector<Perm>& gens) {
  int64_t total = int64_t(x.size()) * y.size();
  require(total < (int64_t(1) << 31), Err::DimensionCap, "product G-set too large");
  std::vector<std::vector<int32_t>> ax, ay;
  for (const Perm& g : gens) {
    ax.push_back(x.action_array(g));
    ay.push_back(y.action_array(g));
  }
  UnionFind uf(total);
  int m = y.size();
  for (size_t gi = 0; gi < gens.size(); ++gi)
    for (int i = 0; i < x.size(); ++i) {
      int64_t base = int64_t(i) * m, nbase = int64_t(ax[gi][i]) * m;
      const auto& ag = ay[gi];
      for (int j = 0; j < m; ++j) uf.unite(int32_t(base + j), int32_t(nbase + ag[j]));
    }
  std::map<int32_t, int64_t> sizes;
  for (int64_t e = 0; e < total; ++e) ++sizes[uf.find(int32_t(e))];
  ProductOrbits out;
  for (auto& kv : sizes) {
    out.reps.push_back(kv.first);
    out.sizes.push_back(kv.second);
    out.types.push_back(orbit_young_type(x, y, kv.first));
  }
  return out;
}

int64_t product_orbit_count(const TabloidSpace& x, const TabloidSpace& y,
                            const std::vector<Perm>& gens) {
  int64_t total = int64_t(x.size()) * y.size();
  require(total < (int64_t(1) << 31), Err::DimensionCap, "product G-set too large");
  std::vector<std::vector<int32_t>> ax, ay;
  for (const Perm& g : gens) {
    ax.push_back(x.action_array(g));
    ay.push_back(y.action_array(g));
  }
  UnionFind uf(total);
  int m = y.size();
  for (size_t gi = 0; gi < gens.size(); ++gi)
    for (int i = 0; i < x.size(); ++i) {
      int64_t base = int64_t(i) * m, nbase = int64_t(ax[gi][i]) * m;
      const auto& ag = ay[gi];
      for (int j = 0; j < m; ++j) uf.unite(int32_t(base + j), int32_t(nbase + ag[j]));
    }
  int64_t count = 0;
  for (int64_t e = 0; e < total; ++e)
    if (uf.find(int32_t(e)) == e) ++count;
  return count;
}

Partition orbit_young_type(const TabloidSpace& x, const TabloidSpace& y, int64_t pair_index) {
  require(x.n() == y.n(), Err::NotProductOrbit, "young type needs a product of S_n tabloid sets");
  int i = int(pair_index / y.size()), j = int(pair_index % y.size());
  std::vector<std::vector<int>> counts(x.shape().size(), std::vector<int>(y.shape().size(), 0));
  for (int pt = 0; pt < x.n(); ++pt) ++counts[x.row_of(i, pt)][y.row_of(j, pt)];
  std::vector<int> entries;
  for (auto& row : counts)
    for (int c : row)
      if (c) entries.push_back(c);
  return sorted_partition(entries);
}

}  // namespace oti
