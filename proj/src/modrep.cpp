#include "modrep.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace oti {

namespace {

int perm_sign(const Perm& g) {
  std::vector<char> seen(g.size(), 0);
  int sign = 1;
  for (size_t s = 0; s < g.size(); ++s) {
    if (seen[s]) continue;
    int len = 0;
    size_t x = s;
    while (!seen[x]) {
      seen[x] = 1;
      x = g[x];
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

Perm perm_of_matrix(const Mat& m) {
  Perm g(m.rows());
  for (int j = 0; j < m.cols(); ++j)
    for (int i = 0; i < m.rows(); ++i)
      if (m.at(i, j)) g[j] = i;
  return g;
}

void validate(const GModule& m) {
  require(int(m.gen_mats.size()) == int(m.group->gens.size()), Err::BadParameters,
          "module needs one matrix per generator");
  bool all_perm = true;
  for (const Mat& g : m.gen_mats) {
    require(g.rows() == m.dim && g.cols() == m.dim, Err::BadParameters,
            "generator matrix has wrong shape");
    require_same_field(g.field(), m.field);
    if (!g.is_permutation()) all_perm = false;
  }
  if (all_perm) {
    // Matrices are permutation matrices of some permutations; the relations
    // hold exactly iff the assignment group gen -> that permutation extends
    // multiplicatively, which the callers below guarantee. Verify a couple of
    // products anyway.
    for (size_t a = 0; a < m.gen_mats.size() && a < 3; ++a)
      for (size_t b = 0; b < m.gen_mats.size() && b < 3; ++b) {
        Perm pa = perm_of_matrix(m.gen_mats[a]), pb = perm_of_matrix(m.gen_mats[b]);
        check_internal(perm_mul(pa, pb) == perm_of_matrix(m.gen_mats[a] * m.gen_mats[b]),
                       "permutation matrix product inconsistent");
      }
    return;
  }
  for (const Mat& g : m.gen_mats)
    require(inverse(g).has_value(), Err::BadParameters, "generator matrix not invertible");
  if (m.group->full_symmetric_prefix && m.dim <= 160) {
    // Coxeter presentation of S_m: exact proof that the matrices define a
    // representation.
    const auto& g = m.gen_mats;
    Mat id = Mat::identity(m.field, m.dim);
    for (size_t i = 0; i < g.size(); ++i)
      require(g[i] * g[i] == id, Err::BadParameters, "s_i^2 != 1 in module " + m.label);
    for (size_t i = 0; i + 1 < g.size(); ++i)
      require((g[i] * g[i + 1]).pow(3) == id, Err::BadParameters,
              "braid relation fails in module " + m.label);
    for (size_t i = 0; i < g.size(); ++i)
      for (size_t j = i + 2; j < g.size(); ++j)
        require((g[i] * g[j]).pow(2) == id, Err::BadParameters,
                "commutation relation fails in module " + m.label);
  } else if (m.group->enumerated()) {
    Rng rng(0);
    auto eval_word = [&](const std::vector<int>& w) {
      Mat r = Mat::identity(m.field, m.dim);
      for (int gi : w) r = r * m.gen_mats[gi];
      return r;
    };
    int64_t n = m.group->order;
    for (int t = 0; t < 50; ++t) {
      int a = int(rng.below(n)), b = int(rng.below(n));
      Perm prod = perm_mul(m.group->elements[a], m.group->elements[b]);
      int c = m.group->find_element(prod);
      require(c >= 0, Err::Internal, "enumerated group not closed");
      require(eval_word(m.group->words[a]) * eval_word(m.group->words[b]) ==
                  eval_word(m.group->words[c]),
              Err::BadParameters, "relation spot-check failed in module " + m.label);
    }
  }
}

}  // namespace

GModule make_module(PermGroupPtr group, FieldPtr field, std::vector<Mat> mats, std::string label) {
  GModule m;
  m.group = std::move(group);
  m.field = std::move(field);
  m.dim = mats.empty() ? 0 : mats[0].rows();
  m.gen_mats = std::move(mats);
  m.label = std::move(label);
  validate(m);
  return m;
}

// A module with no generator matrices still needs its dimension.
GModule trivial_module(PermGroupPtr group, FieldPtr field) {
  GModule m;
  m.group = group;
  m.field = field;
  m.dim = 1;
  for (size_t i = 0; i < group->gens.size(); ++i) m.gen_mats.push_back(Mat::identity(field, 1));
  m.label = "1";
  return m;
}

Mat matrix_of(const GModule& m, const Perm& g) {
  require(int(g.size()) == m.group->degree, Err::NotAGroupElement, "degree mismatch");
  if (m.group->full_symmetric_prefix) {
    for (int x = m.group->sym_m; x < m.group->degree; ++x)
      require(g[x] == x, Err::NotAGroupElement, "permutation moves points outside the subgroup");
    Mat r = Mat::identity(m.field, m.dim);
    for (int i : adjacent_word(g)) {
      require(i <= int(m.gen_mats.size()), Err::NotAGroupElement, "word leaves the subgroup");
      r = r * m.gen_mats[i - 1];
    }
    return r;
  }
  require(m.group->enumerated(), Err::NotAGroupElement,
          "general membership needs an enumerated group");
  int idx = m.group->find_element(g);
  require(idx >= 0, Err::NotAGroupElement, "element not in group");
  Mat r = Mat::identity(m.field, m.dim);
  for (int gi : m.group->words[idx]) r = r * m.gen_mats[gi];
  return r;
}

GModule perm_module(const TabloidSpace& space, FieldPtr field) {
  PermGroupPtr sn = symmetric_group(space.n());
  std::vector<Mat> mats;
  for (const Perm& g : sn->gens) {
    Mat p(field, space.size(), space.size());
    for (int x = 0; x < space.size(); ++x) p.set(space.act(g, x), x, field->one());
    mats.push_back(std::move(p));
  }
  return make_module(sn, field, std::move(mats),
                     "M^(" + partition_to_string(space.shape()) + ")");
}

GModule perm_module_from_gset(const GSet& x, PermGroupPtr group, FieldPtr field,
                              std::string label) {
  require(x.actions.size() == group->gens.size(), Err::ActionMismatch,
          "gset actions do not match group generators");
  std::vector<Mat> mats;
  for (const auto& arr : x.actions) {
    Mat p(field, x.size(), x.size());
    for (int i = 0; i < x.size(); ++i) p.set(arr[i], i, field->one());
    mats.push_back(std::move(p));
  }
  return make_module(std::move(group), field, std::move(mats), std::move(label));
}

SpechtModule specht_module(const Partition& la, FieldPtr field) {
  require_partition(la);
  int n = weight(la);
  TabloidSpace space(n, la);
  auto tableaux = standard_tableaux(la);
  int64_t expected_dim = n_standard_tableaux(la);
  check_internal(int64_t(tableaux.size()) == expected_dim, "SYT count mismatch");

  // Columns of a tableau; the column stabilizer is the product of the
  // symmetric groups on the column entry sets.
  Mat rows(field, int(tableaux.size()), space.size());
  for (size_t ti = 0; ti < tableaux.size(); ++ti) {
    const auto& t = tableaux[ti];
    int ncols = la.empty() ? 0 : la[0];
    std::vector<std::vector<int>> columns(ncols);
    for (size_t r = 0; r < t.size(); ++r)
      for (size_t c = 0; c < t[r].size(); ++c) columns[c].push_back(t[r][c] - 1);
    // Iterate the column group as tuples of per-column permutations.
    std::vector<std::vector<Perm>> col_perms;
    for (auto& col : columns) {
      std::vector<Perm> ps;
      std::vector<int> order(col.size());
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end());
      do {
        Perm g = perm_identity(n);
        for (size_t i = 0; i < col.size(); ++i) g[col[i]] = col[order[i]];
        ps.push_back(g);
      } while (std::next_permutation(order.begin(), order.end()));
      col_perms.push_back(std::move(ps));
    }
    std::vector<int> base_assign(n);
    for (size_t r = 0; r < t.size(); ++r)
      for (int e : t[r]) base_assign[e - 1] = int(r);
    std::function<void(size_t, Perm, int)> rec = [&](size_t c, Perm sigma, int sign) {
      if (c == col_perms.size()) {
        uint64_t code = 0;
        Perm inv = perm_inverse(sigma);
        for (int x = 0; x < n; ++x) code |= uint64_t(base_assign[inv[x]]) << (4 * x);
        int idx = space.index_of(code);
        Fel v = rows.at(int(ti), idx);
        rows.set(int(ti), idx, field->add(v, field->from_int(sign)));
        return;
      }
      for (const Perm& g : col_perms[c]) rec(c + 1, perm_mul(sigma, g), sign * perm_sign(g));
    };
    rec(0, perm_identity(n), 1);
  }

  Subspace span = subspace_from_rows(rows);
  check_internal(int64_t(span.dim()) == expected_dim,
                 "polytabloids of standard tableaux are not independent");

  PermGroupPtr sn = symmetric_group(n);
  std::vector<Mat> mats;
  for (const Perm& g : sn->gens) {
    Mat rho(field, span.dim(), span.dim());
    for (int i = 0; i < span.dim(); ++i) {
      // Image of basis vector i under the tabloid permutation action.
      std::vector<Fel> img(space.size(), 0);
      for (int x = 0; x < space.size(); ++x) {
        Fel c = span.basis.at(i, x);
        if (c) img[space.act(g, x)] = c;
      }
      std::vector<Fel> coords;
      auto residual = reduce_against(span, img, &coords);
      for (Fel x : residual)
        require(x == 0, Err::NotInvariant, "Specht span is not invariant");
      for (int r = 0; r < span.dim(); ++r) rho.set(r, i, coords[r]);
    }
    mats.push_back(std::move(rho));
  }
  SpechtModule out;
  out.module = make_module(sn, field, std::move(mats), "S^(" + partition_to_string(la) + ")");
  out.inclusion = span.basis.transposed();
  // The inclusion intertwines: P_g * incl = incl * rho(g).
  GModule mperm = perm_module(space, field);
  for (size_t gi = 0; gi < sn->gens.size(); ++gi)
    check_internal(mperm.gen_mats[gi] * out.inclusion == out.inclusion * out.module.gen_mats[gi],
                   "Specht inclusion fails to intertwine");
  return out;
}

GModule restrict_module(const GModule& m, const PermGroupPtr& h) {
  std::vector<Mat> mats;
  for (const Perm& g : h->gens) mats.push_back(matrix_of(m, g));
  GModule r;
  r.group = h;
  r.field = m.field;
  r.dim = m.dim;
  r.gen_mats = std::move(mats);
  r.label = "Res(" + m.label + ")";
  return r;
}

namespace {

// Coset keys: for prefix-symmetric subgroups the images of the fixed points
// determine the coset; otherwise take the minimum packed representative over
// the enumerated subgroup.
struct CosetKeyer {
  const PermGroup& h;
  bool prefix;
  std::vector<uint64_t> key_cache;

  explicit CosetKeyer(const PermGroup& hh) : h(hh) {
    prefix = h.full_symmetric_prefix;
    if (!prefix)
      require(h.enumerated(), Err::BadParameters,
              "coset enumeration needs a prefix-symmetric or enumerated subgroup");
  }

  std::vector<int> key(const Perm& x) const {
    if (prefix) {
      std::vector<int> k;
      for (int pt = h.sym_m; pt < int(x.size()); ++pt) k.push_back(x[pt]);
      return k;
    }
    std::vector<int> best;
    for (const Perm& hh : h.elements) {
      Perm y = perm_mul(x, hh);
      if (best.empty() || y < best) best = y;
    }
    return best;
  }
};

}  // namespace

std::vector<Perm> coset_transversal(const PermGroupPtr& g, const PermGroupPtr& h,
                                    bool reversed_gens) {
  require(g->degree == h->degree, Err::BadParameters, "transversal needs matching degree");
  CosetKeyer keyer(*h);
  std::map<std::vector<int>, int> seen;
  std::vector<Perm> reps{perm_identity(g->degree)};
  seen[keyer.key(reps[0])] = 0;
  std::vector<Perm> gens = g->gens;
  if (reversed_gens) std::reverse(gens.begin(), gens.end());
  for (size_t head = 0; head < reps.size(); ++head) {
    Perm cur = reps[head];
    for (const Perm& gen : gens) {
      Perm next = perm_mul(gen, cur);
      auto k = keyer.key(next);
      if (!seen.count(k)) {
        seen[k] = int(reps.size());
        reps.push_back(next);
      }
    }
  }
  return reps;
}

GModule induce_module(const GModule& m, const PermGroupPtr& g, bool reversed_gens) {
  const PermGroupPtr& h = m.group;
  auto reps = coset_transversal(g, h, reversed_gens);
  int k = int(reps.size());
  int64_t dim = int64_t(k) * m.dim;
  require(dim <= dimension_cap(), Err::OrderExceedsCap, "induced dimension exceeds cap");

  CosetKeyer keyer(*h);
  std::map<std::vector<int>, int> coset_of;
  for (int i = 0; i < k; ++i) coset_of[keyer.key(reps[i])] = i;

  std::vector<Mat> mats;
  for (const Perm& gen : g->gens) {
    Mat rho(m.field, int(dim), int(dim));
    for (int i = 0; i < k; ++i) {
      Perm x = perm_mul(gen, reps[i]);
      auto it = coset_of.find(keyer.key(x));
      check_internal(it != coset_of.end(), "transversal incomplete");
      int j = it->second;
      Perm hh = perm_mul(perm_inverse(reps[j]), x);
      Mat block = matrix_of(m, hh);
      for (int a = 0; a < m.dim; ++a)
        for (int b = 0; b < m.dim; ++b)
          if (block.at(a, b)) rho.set(j * m.dim + a, i * m.dim + b, block.at(a, b));
    }
    mats.push_back(std::move(rho));
  }
  return make_module(g, m.field, std::move(mats), "Ind(" + m.label + ")");
}

AlgebraElement jucys_murphy(int n, FieldPtr field) {
  AlgebraElement a;
  for (int i = 1; i < n; ++i) {
    Perm t = perm_identity(n);
    std::swap(t[i - 1], t[n - 1]);
    a.terms.push_back({field->one(), t});
  }
  return a;
}

Mat act(const GModule& m, const AlgebraElement& a) {
  Mat r(m.field, m.dim, m.dim);
  for (const auto& [c, g] : a.terms) r = r + matrix_of(m, g).scaled(c);
  return r;
}

namespace {

void require_comparable(const GModule& x, const GModule& y) {
  require(x.group->degree == y.group->degree && x.group->gens == y.group->gens,
          Err::GroupMismatch, "modules over different groups");
  require_same_field(x.field, y.field);
}

bool all_permutation(const GModule& m) {
  for (const Mat& g : m.gen_mats)
    if (!g.is_permutation()) return false;
  return true;
}

struct PairUF {
  std::vector<int32_t> parent;
  explicit PairUF(int64_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int32_t find(int32_t v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  }
  void unite(int32_t a, int32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

HomSpace hom_fast_perm(const GModule& x, const GModule& y) {
  int dx = x.dim, dy = y.dim;
  std::vector<Perm> px, py;
  for (const Mat& g : x.gen_mats) px.push_back(perm_of_matrix(g));
  for (const Mat& g : y.gen_mats) py.push_back(perm_of_matrix(g));
  // T rho_X(g) = rho_Y(g) T forces T_{i,j} = T_{py(i), px(j)}.
  PairUF uf(int64_t(dy) * dx);
  for (size_t gi = 0; gi < px.size(); ++gi)
    for (int i = 0; i < dy; ++i) {
      int64_t base = int64_t(i) * dx, nbase = int64_t(py[gi][i]) * dx;
      for (int j = 0; j < dx; ++j) uf.unite(int32_t(base + j), int32_t(nbase + px[gi][j]));
    }
  std::map<int32_t, int> class_id;
  for (int64_t e = 0; e < int64_t(dy) * dx; ++e) {
    int32_t r = uf.find(int32_t(e));
    if (!class_id.count(r)) class_id[r] = int(class_id.size());
  }
  HomSpace hs;
  hs.dim_source = dx;
  hs.dim_target = dy;
  hs.basis.assign(class_id.size(), Mat(x.field, dy, dx));
  for (int i = 0; i < dy; ++i)
    for (int j = 0; j < dx; ++j) {
      int cid = class_id[uf.find(int32_t(int64_t(i) * dx + j))];
      hs.basis[cid].set(i, j, x.field->one());
    }
  return hs;
}

HomSpace hom_dense(const GModule& x, const GModule& y) {
  int dx = x.dim, dy = y.dim;
  int64_t unknowns = int64_t(dy) * dx;
  require(unknowns <= dimension_cap(), Err::DimensionCap, "Hom system too large");
  int g = int(x.gen_mats.size());
  Mat sys(x.field, g * dy * dx, int(unknowns));
  const Field& F = *x.field;
  for (int gi = 0; gi < g; ++gi) {
    const Mat& rx = x.gen_mats[gi];
    const Mat& ry = y.gen_mats[gi];
    // Row for equation (i,j): sum_k ry[i,k] T[k,j] - sum_k T[i,k] rx[k,j].
    for (int i = 0; i < dy; ++i)
      for (int j = 0; j < dx; ++j) {
        int row = gi * dy * dx + i * dx + j;
        for (int kk = 0; kk < dy; ++kk) {
          Fel c = ry.at(i, kk);
          if (c) sys.set(row, kk * dx + j, F.add(sys.at(row, kk * dx + j), c));
        }
        for (int kk = 0; kk < dx; ++kk) {
          Fel c = rx.at(kk, j);
          if (c) sys.set(row, i * dx + kk, F.sub(sys.at(row, i * dx + kk), c));
        }
      }
  }
  Subspace ker = kernel_basis(sys);
  HomSpace hs;
  hs.dim_source = dx;
  hs.dim_target = dy;
  for (int b = 0; b < ker.dim(); ++b) {
    Mat t(x.field, dy, dx);
    for (int i = 0; i < dy; ++i)
      for (int j = 0; j < dx; ++j) t.set(i, j, ker.basis.at(b, i * dx + j));
    hs.basis.push_back(std::move(t));
  }
  return hs;
}

}  // namespace

HomSpace hom_basis(const GModule& x, const GModule& y) {
  require_comparable(x, y);
  HomSpace hs = (all_permutation(x) && all_permutation(y) && x.dim > 0 && y.dim > 0)
                    ? hom_fast_perm(x, y)
                    : hom_dense(x, y);
  for (const Mat& t : hs.basis)
    for (size_t gi = 0; gi < x.gen_mats.size(); ++gi)
      check_internal(t * x.gen_mats[gi] == y.gen_mats[gi] * t, "hom basis fails to intertwine");
  return hs;
}

Mat transfer(const Mat& f, const PermGroupPtr& h, const GModule& x, const GModule& y,
             bool reversed_gens) {
  require_comparable(x, y);
  require(f.rows() == y.dim && f.cols() == x.dim, Err::BadParameters, "transfer shape mismatch");
  for (const Perm& hg : h->gens)
    require(f * matrix_of(x, hg) == matrix_of(y, hg) * f, Err::NotEquivariant,
            "transfer input is not H-equivariant");
  auto reps = coset_transversal(x.group, h, reversed_gens);
  Mat out(x.field, y.dim, x.dim);
  for (const Perm& t : reps) out = out + matrix_of(y, t) * f * matrix_of(x, perm_inverse(t));
  for (size_t gi = 0; gi < x.gen_mats.size(); ++gi)
    check_internal(out * x.gen_mats[gi] == y.gen_mats[gi] * out,
                   "transfer output is not G-equivariant");
  return out;
}

namespace {

std::string trace_invariant(const GModule& x, const GModule& y) {
  for (size_t gi = 0; gi < x.gen_mats.size(); ++gi)
    if (x.gen_mats[gi].trace() != y.gen_mats[gi].trace())
      return "generator " + x.group->gen_names[gi] + " trace differs";
  return "";
}

std::string nilpotent_invariant(const GModule& x, const GModule& y) {
  int64_t p = x.field->p();
  for (size_t gi = 0; gi < x.gen_mats.size(); ++gi) {
    if (perm_order(x.group->gens[gi]) != int(p)) continue;
    Mat zx = x.gen_mats[gi] - Mat::identity(x.field, x.dim);
    Mat zy = y.gen_mats[gi] - Mat::identity(y.field, y.dim);
    std::vector<int64_t> rx, ry;
    Mat px = zx, py = zy;
    for (int64_t e = 1; e < p; ++e) {
      rx.push_back(rank(px));
      ry.push_back(rank(py));
      px = px * zx;
      py = py * zy;
    }
    if (rx != ry)
      return "Jordan type of " + x.group->gen_names[gi] + " - 1 differs";
  }
  return "";
}

}  // namespace

IsoVerdict iso_probe(const GModule& x, const GModule& y, int trials, int scalar_ext,
                     uint64_t seed) {
  require_comparable(x, y);
  IsoVerdict v;
  if (x.dim != y.dim) {
    v.kind = IsoKind::CertifiedNonIso;
    v.invariant = "dimension " + std::to_string(x.dim) + " vs " + std::to_string(y.dim);
    return v;
  }
  if (x.dim == 0) {
    v.kind = IsoKind::CertifiedIso;
    v.witness = Mat(x.field, 0, 0);
    return v;
  }
  if (auto inv = trace_invariant(x, y); !inv.empty()) {
    v.kind = IsoKind::CertifiedNonIso;
    v.invariant = inv;
    return v;
  }
  HomSpace hxy = hom_basis(x, y);
  HomSpace hxx = hom_basis(x, x);
  HomSpace hyy = hom_basis(y, y);
  HomSpace hyx = hom_basis(y, x);
  if (hxy.dim() != hxx.dim() || hxy.dim() != hyy.dim() || hxy.dim() != hyx.dim()) {
    v.kind = IsoKind::CertifiedNonIso;
    v.invariant = "dim Hom asymmetry (XY " + std::to_string(hxy.dim()) + ", XX " +
                  std::to_string(hxx.dim()) + ", YY " + std::to_string(hyy.dim()) + ", YX " +
                  std::to_string(hyx.dim()) + ")";
    return v;
  }
  if (hxy.dim() == 0) {
    v.kind = IsoKind::CertifiedNonIso;
    v.invariant = "Hom(X,Y) = 0 with X, Y nonzero";
    return v;
  }
  if (auto inv = nilpotent_invariant(x, y); !inv.empty()) {
    v.kind = IsoKind::CertifiedNonIso;
    v.invariant = inv;
    return v;
  }

  int h = hxy.dim();
  uint64_t q = x.field->q();
  // Small spaces: exhaust projective combinations over the base field.
  double combos = 1;
  for (int i = 0; i < h; ++i) combos *= double(q);
  if (h <= 3 && combos <= 4096) {
    std::vector<Fel> c(h, 0);
    std::function<bool(int)> iter = [&](int i) -> bool {
      if (i == h) {
        bool nonzero = false;
        for (Fel ci : c) nonzero |= ci != 0;
        if (!nonzero) return false;
        Mat t(x.field, x.dim, x.dim);
        for (int j = 0; j < h; ++j)
          if (c[j]) t = t + hxy.basis[j].scaled(c[j]);
        if (inverse(t).has_value()) {
          v.kind = IsoKind::CertifiedIso;
          v.witness = t;
          return true;
        }
        return false;
      }
      for (uint32_t val = 0; val < q; ++val) {
        c[i] = Fel(val);
        if (iter(i + 1)) return true;
      }
      return false;
    };
    if (iter(0)) return v;
    v.kind = IsoKind::CertifiedNonIso;
    v.invariant = "no invertible intertwiner exists (exhaustive over GF(" +
                  std::to_string(q) + "))";
    return v;
  }

  // Random combinations over a scalar extension; by Noether-Deuring an
  // invertible intertwiner over GF(q^e) certifies isomorphism over GF(q).
  int e = std::max(scalar_ext, 1);
  FieldPtr ext = e == 1 ? x.field : Field::create(x.field->p(), x.field->k() * e);
  FieldEmbedding emb(x.field, ext);
  std::vector<Mat> lifted;
  for (const Mat& b : hxy.basis) lifted.push_back(embed_matrix(emb, b));
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    Mat cand(ext, x.dim, x.dim);
    for (int j = 0; j < h; ++j) {
      Fel c = Fel(rng.below(ext->q()));
      if (c) cand = cand + lifted[j].scaled(c);
    }
    if (inverse(cand).has_value()) {
      v.kind = IsoKind::CertifiedIso;
      v.witness = cand;
      v.scalar_ext_used = e;
      v.trials_used = t + 1;
      return v;
    }
  }
  v.kind = IsoKind::Unknown;
  v.trials_used = trials;
  return v;
}

GModule direct_sum(const std::vector<GModule>& parts) {
  require(!parts.empty(), Err::BadParameters, "direct sum of nothing");
  for (const GModule& m : parts) require_comparable(parts[0], m);
  GModule out;
  out.group = parts[0].group;
  out.field = parts[0].field;
  out.dim = 0;
  for (const GModule& m : parts) out.dim += m.dim;
  for (size_t gi = 0; gi < parts[0].gen_mats.size(); ++gi) {
    Mat blk(out.field, out.dim, out.dim);
    int off = 0;
    for (const GModule& m : parts) {
      for (int i = 0; i < m.dim; ++i)
        for (int j = 0; j < m.dim; ++j)
          if (m.gen_mats[gi].at(i, j)) blk.set(off + i, off + j, m.gen_mats[gi].at(i, j));
      off += m.dim;
    }
    out.gen_mats.push_back(std::move(blk));
  }
  std::ostringstream lbl;
  for (size_t i = 0; i < parts.size(); ++i) lbl << (i ? " + " : "") << parts[i].label;
  out.label = lbl.str();
  return out;
}

GModule tensor_module(const GModule& x, const GModule& y) {
  require_comparable(x, y);
  GModule out;
  out.group = x.group;
  out.field = x.field;
  out.dim = x.dim * y.dim;
  require(out.dim <= dimension_cap(), Err::DimensionCap, "tensor dimension exceeds cap");
  for (size_t gi = 0; gi < x.gen_mats.size(); ++gi) {
    Mat k(out.field, out.dim, out.dim);
    const Mat& a = x.gen_mats[gi];
    const Mat& b = y.gen_mats[gi];
    for (int i = 0; i < x.dim; ++i)
      for (int j = 0; j < x.dim; ++j) {
        Fel aij = a.at(i, j);
        if (!aij) continue;
        for (int r = 0; r < y.dim; ++r)
          for (int c = 0; c < y.dim; ++c) {
            Fel v = out.field->mul(aij, b.at(r, c));
            if (v) k.set(i * y.dim + r, j * y.dim + c, v);
          }
      }
    out.gen_mats.push_back(std::move(k));
  }
  out.label = x.label + " (x) " + y.label;
  return out;
}

GModule sign_twist(const GModule& x) {
  GModule out = x;
  for (size_t gi = 0; gi < x.gen_mats.size(); ++gi) {
    if (perm_sign(x.group->gens[gi]) < 0)
      out.gen_mats[gi] = x.gen_mats[gi].scaled(x.field->neg(x.field->one()));
  }
  out.label = "sgn(" + x.label + ")";
  return out;
}

}  // namespace oti
