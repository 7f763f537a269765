#include "matrix.hpp"

#include <cstdlib>
#include <sstream>

namespace oti {

int dimension_cap() {
  static const int cap = [] {
    const char* s = std::getenv("OTI_DIM_CAP");
    if (!s) return 5000;
    int v = std::atoi(s);
    return v > 0 ? v : 5000;
  }();
  return cap;
}

Mat::Mat(FieldPtr f, int rows, int cols) : field_(std::move(f)), rows_(rows), cols_(cols) {
  require(rows >= 0 && cols >= 0, Err::BadParameters, "negative matrix shape");
  require(rows <= dimension_cap() && cols <= dimension_cap(), Err::DimensionCap,
          "matrix dimension exceeds cap " + std::to_string(dimension_cap()));
  a_.assign(size_t(rows) * cols, 0);
}

Mat Mat::identity(FieldPtr f, int n) {
  Mat m(f, n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, f->one());
  return m;
}

Mat Mat::operator*(const Mat& o) const {
  require_same_field(field_, o.field_);
  require(cols_ == o.rows_, Err::BadParameters, "matrix product shape mismatch");
  Mat r(field_, rows_, o.cols_);
  const Field& F = *field_;
  const uint32_t q = F.q();
  if (F.has_tables()) {
    const Fel* add = F.add_row(0);
    for (int i = 0; i < rows_; ++i) {
      Fel* dst = r.row_ptr(i);
      for (int k = 0; k < cols_; ++k) {
        Fel c = at(i, k);
        if (!c) continue;
        const Fel* mrow = F.mul_row(c);
        const Fel* src = o.row_ptr(k);
        for (int j = 0; j < o.cols_; ++j) dst[j] = add[size_t(mrow[src[j]]) * q + dst[j]];
      }
    }
  } else {
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        Fel c = at(i, k);
        if (!c) continue;
        for (int j = 0; j < o.cols_; ++j)
          r.set(i, j, F.add(r.at(i, j), F.mul(c, o.at(k, j))));
      }
  }
  return r;
}

Mat Mat::operator+(const Mat& o) const {
  require_same_field(field_, o.field_);
  require(rows_ == o.rows_ && cols_ == o.cols_, Err::BadParameters, "matrix sum shape mismatch");
  Mat r = *this;
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_->add(a_[i], o.a_[i]);
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  require_same_field(field_, o.field_);
  require(rows_ == o.rows_ && cols_ == o.cols_, Err::BadParameters, "matrix diff shape mismatch");
  Mat r = *this;
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_->sub(a_[i], o.a_[i]);
  return r;
}

Mat Mat::scaled(Fel c) const {
  Mat r = *this;
  for (auto& x : r.a_) x = field_->mul(c, x);
  return r;
}

Mat Mat::transposed() const {
  Mat r(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
  return r;
}

bool Mat::operator==(const Mat& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

bool Mat::is_zero() const {
  for (Fel x : a_)
    if (x) return false;
  return true;
}

bool Mat::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? field_->one() : 0)) return false;
  return true;
}

bool Mat::is_permutation() const {
  if (rows_ != cols_) return false;
  std::vector<int> col_hits(cols_, 0);
  for (int i = 0; i < rows_; ++i) {
    int ones = 0;
    for (int j = 0; j < cols_; ++j) {
      Fel v = at(i, j);
      if (v == 0) continue;
      if (v != field_->one()) return false;
      ++ones;
      ++col_hits[j];
    }
    if (ones != 1) return false;
  }
  for (int j = 0; j < cols_; ++j)
    if (col_hits[j] != 1) return false;
  return true;
}

Fel Mat::trace() const {
  check_internal(rows_ == cols_, "trace of non-square matrix");
  Fel t = 0;
  for (int i = 0; i < rows_; ++i) t = field_->add(t, at(i, i));
  return t;
}

Mat Mat::pow(uint64_t e) const {
  check_internal(rows_ == cols_, "power of non-square matrix");
  Mat r = identity(field_, rows_), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

std::vector<Fel> Mat::apply(const std::vector<Fel>& v) const {
  check_internal(int(v.size()) == cols_, "apply: vector length mismatch");
  std::vector<Fel> r(rows_, 0);
  const Field& F = *field_;
  for (int i = 0; i < rows_; ++i) {
    Fel acc = 0;
    const Fel* row = row_ptr(i);
    for (int j = 0; j < cols_; ++j)
      if (row[j] && v[j]) acc = F.add(acc, F.mul(row[j], v[j]));
    r[i] = acc;
  }
  return r;
}

Mat Mat::cols_selected(const std::vector<int>& idx) const {
  Mat r(field_, rows_, int(idx.size()));
  for (int i = 0; i < rows_; ++i)
    for (size_t j = 0; j < idx.size(); ++j) r.set(i, int(j), at(i, idx[j]));
  return r;
}

Mat Mat::rows_selected(const std::vector<int>& idx) const {
  Mat r(field_, int(idx.size()), cols_);
  for (size_t i = 0; i < idx.size(); ++i)
    for (int j = 0; j < cols_; ++j) r.set(int(i), j, at(idx[i], j));
  return r;
}

Mat Mat::vstack(const Mat& below) const {
  require_same_field(field_, below.field_);
  require(cols_ == below.cols_, Err::BadParameters, "vstack column mismatch");
  Mat r(field_, rows_ + below.rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.set(i, j, at(i, j));
  for (int i = 0; i < below.rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.set(rows_ + i, j, below.at(i, j));
  return r;
}

Mat Mat::hstack(const Mat& right) const {
  require_same_field(field_, right.field_);
  require(rows_ == right.rows_, Err::BadParameters, "hstack row mismatch");
  Mat r(field_, rows_, cols_ + right.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) r.set(i, j, at(i, j));
    for (int j = 0; j < right.cols_; ++j) r.set(i, cols_ + j, right.at(i, j));
  }
  return r;
}

std::string Mat::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    os << (i ? "\n[" : "[");
    for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << field_->to_string(at(i, j));
    os << "]";
  }
  return os.str();
}

namespace {

// dst += c * src over one row, table-accelerated.
inline void axpy(const Field& F, Fel c, const Fel* src, Fel* dst, int n) {
  if (!c) return;
  if (F.has_tables()) {
    const Fel* mrow = F.mul_row(c);
    const Fel* add = F.add_row(0);
    const uint32_t q = F.q();
    for (int j = 0; j < n; ++j) dst[j] = add[size_t(mrow[src[j]]) * q + dst[j]];
  } else {
    for (int j = 0; j < n; ++j) dst[j] = F.add(dst[j], F.mul(c, src[j]));
  }
}

}  // namespace

RrefResult rref(const Mat& m) {
  RrefResult res;
  res.R = m;
  Mat& R = res.R;
  const Field& F = *m.field();
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int pr = -1;
    for (int i = r; i < m.rows(); ++i)
      if (R.at(i, c)) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != r)
      for (int j = 0; j < m.cols(); ++j) {
        Fel t = R.at(r, j);
        R.set(r, j, R.at(pr, j));
        R.set(pr, j, t);
      }
    Fel piv = R.at(r, c);
    if (piv != F.one()) {
      Fel pinv = F.inv(piv);
      Fel* row = R.row_ptr(r);
      for (int j = c; j < m.cols(); ++j) row[j] = F.mul(pinv, row[j]);
    }
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      Fel f = R.at(i, c);
      if (!f) continue;
      axpy(F, F.neg(f), R.row_ptr(r), R.row_ptr(i), m.cols());
    }
    res.pivots.push_back(c);
    ++r;
  }
  res.rank = r;
  return res;
}

int rank(const Mat& m) { return rref(m).rank; }

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  Mat aug = m.hstack(Mat::identity(m.field(), m.rows()));
  RrefResult rr = rref(aug);
  if (rr.rank < m.rows() || (rr.rank > 0 && rr.pivots.back() >= m.cols())) return std::nullopt;
  // After reduction the left block is the identity exactly when m is invertible.
  for (int i = 0; i < m.rows(); ++i)
    if (rr.pivots[i] != i) return std::nullopt;
  Mat inv(m.field(), m.rows(), m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.rows(); ++j) inv.set(i, j, rr.R.at(i, m.cols() + j));
  return inv;
}

Subspace subspace_from_rows(const Mat& rows) {
  RrefResult rr = rref(rows);
  Subspace s;
  s.ambient = rows.cols();
  s.basis = rr.R.rows_selected([&] {
    std::vector<int> idx(rr.rank);
    for (int i = 0; i < rr.rank; ++i) idx[i] = i;
    return idx;
  }());
  s.pivots = rr.pivots;
  return s;
}

Subspace zero_subspace(FieldPtr f, int ambient) {
  Subspace s;
  s.ambient = ambient;
  s.basis = Mat(f, 0, ambient);
  return s;
}

Subspace full_subspace(FieldPtr f, int ambient) {
  return subspace_from_rows(Mat::identity(f, ambient));
}

Subspace kernel_basis(const Mat& m) {
  RrefResult rr = rref(m);
  const Field& F = *m.field();
  std::vector<char> is_pivot(m.cols(), 0);
  for (int c : rr.pivots) is_pivot[c] = 1;
  std::vector<int> free_cols;
  for (int c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Mat rows(m.field(), int(free_cols.size()), m.cols());
  for (size_t i = 0; i < free_cols.size(); ++i) {
    int fc = free_cols[i];
    rows.set(int(i), fc, F.one());
    for (int r = 0; r < rr.rank; ++r) rows.set(int(i), rr.pivots[r], F.neg(rr.R.at(r, fc)));
  }
  return subspace_from_rows(rows);
}

Subspace image_basis(const Mat& m) { return subspace_from_rows(m.transposed()); }

std::vector<Fel> reduce_against(const Subspace& s, std::vector<Fel> v, std::vector<Fel>* coords) {
  check_internal(int(v.size()) == s.ambient, "reduce_against: ambient mismatch");
  const Field& F = *s.basis.field();
  if (coords) coords->assign(s.dim(), 0);
  for (int i = 0; i < s.dim(); ++i) {
    Fel c = v[s.pivots[i]];
    if (!c) continue;
    if (coords) (*coords)[i] = c;
    axpy(F, F.neg(c), s.basis.row_ptr(i), v.data(), s.ambient);
  }
  return v;
}

bool contains(const Subspace& s, const std::vector<Fel>& v) {
  auto r = reduce_against(s, v);
  for (Fel x : r)
    if (x) return false;
  return true;
}

bool contains(const Subspace& outer, const Subspace& inner) {
  if (outer.ambient != inner.ambient) return false;
  for (int i = 0; i < inner.dim(); ++i) {
    std::vector<Fel> v(inner.basis.row_ptr(i), inner.basis.row_ptr(i) + inner.ambient);
    if (!contains(outer, v)) return false;
  }
  return true;
}

Subspace subspace_sum(const Subspace& u, const Subspace& w) {
  require(u.ambient == w.ambient, Err::AmbientMismatch, "subspace sum needs equal ambient");
  return subspace_from_rows(u.basis.vstack(w.basis));
}

// Stacked-basis (Zassenhaus) intersection: reduce [U | U; W | 0] and read the
// second block of the rows whose first block vanished.
Subspace intersect(const Subspace& u, const Subspace& w) {
  require(u.ambient == w.ambient, Err::AmbientMismatch, "intersection needs equal ambient");
  const FieldPtr& f = u.basis.field();
  require_same_field(f, w.basis.field());
  int n = u.ambient;
  Mat stacked(f, u.dim() + w.dim(), 2 * n);
  for (int i = 0; i < u.dim(); ++i)
    for (int j = 0; j < n; ++j) {
      stacked.set(i, j, u.basis.at(i, j));
      stacked.set(i, n + j, u.basis.at(i, j));
    }
  for (int i = 0; i < w.dim(); ++i)
    for (int j = 0; j < n; ++j) stacked.set(u.dim() + i, j, w.basis.at(i, j));
  RrefResult rr = rref(stacked);
  std::vector<int> keep;
  for (int i = 0; i < rr.rank; ++i)
    if (rr.pivots[i] >= n) keep.push_back(i);
  Mat rows(f, int(keep.size()), n);
  for (size_t i = 0; i < keep.size(); ++i)
    for (int j = 0; j < n; ++j) rows.set(int(i), j, rr.R.at(keep[i], n + j));
  return subspace_from_rows(rows);
}

QuotientData quotient(int ambient_dim, const Subspace& s, const Subspace& t) {
  require(s.ambient == ambient_dim && t.ambient == ambient_dim, Err::AmbientMismatch,
          "quotient: ambient mismatch");
  require(contains(s, t), Err::NotContained, "quotient: T is not contained in S");
  const FieldPtr& f = s.basis.field();

  // Extend T's basis to a basis of S by S-basis rows that add new pivots.
  QuotientData qd;
  Subspace span = t;
  std::vector<int> marker_rows;
  for (int i = 0; i < s.dim(); ++i) {
    std::vector<Fel> v(s.basis.row_ptr(i), s.basis.row_ptr(i) + ambient_dim);
    if (!contains(span, v)) {
      marker_rows.push_back(i);
      span = subspace_sum(span, subspace_from_rows(s.basis.rows_selected({i})));
    }
  }
  qd.dim = int(marker_rows.size());
  check_internal(qd.dim == s.dim() - t.dim(), "quotient: dimension bookkeeping failed");
  Mat c = s.basis.rows_selected(marker_rows);
  qd.sub = t;
  qd.quot_markers = subspace_from_rows(c);

  // B = [T; C] has row space S. Coordinates of v in B's rows: first take
  // coordinates w.r.t. the reduced-echelon basis R of S (plain pivot
  // selection), then convert with the invertible matrix U = B[:, pivots(S)].
  Mat b = t.basis.vstack(c);
  Mat u = b.cols_selected(s.pivots);
  auto ut_inv = inverse(u.transposed());
  check_internal(ut_inv.has_value(), "quotient: coordinate matrix not invertible");
  Mat sel(f, s.dim(), ambient_dim);
  for (int i = 0; i < s.dim(); ++i) sel.set(i, s.pivots[i], f->one());
  Mat full_coords = *ut_inv * sel;  // (dim T + dim Q) x ambient
  std::vector<int> qrows(qd.dim);
  for (int i = 0; i < qd.dim; ++i) qrows[i] = t.dim() + i;
  qd.project_amb = full_coords.rows_selected(qrows);
  qd.lift_amb = c.transposed();

  qd.project = qd.project_amb * s.basis.transposed();
  qd.lift = qd.lift_amb.rows_selected(s.pivots);

  check_internal((qd.project_amb * qd.lift_amb).is_identity(), "quotient: project*lift != id");
  check_internal((qd.project * qd.lift).is_identity(), "quotient: S-coordinate project*lift != id");
  return qd;
}

Mat induced_operator(const Mat& a, const Subspace& s, const Subspace& t) {
  return induced_operator(a, quotient(s.ambient, s, t));
}

Mat induced_operator(const Mat& a, const QuotientData& q) {
  const Subspace& t = q.sub;
  require(a.rows() == a.cols() && a.rows() == t.ambient, Err::AmbientMismatch,
          "induced operator: shape mismatch");
  auto preserves = [&](const Subspace& sp) {
    for (int i = 0; i < sp.dim(); ++i) {
      std::vector<Fel> v(sp.basis.row_ptr(i), sp.basis.row_ptr(i) + sp.ambient);
      if (!contains(sp, a.apply(v))) return false;
    }
    return true;
  };
  Subspace s = subspace_sum(t, q.quot_markers);
  require(preserves(s), Err::NotInvariant, "operator does not preserve S");
  require(preserves(t), Err::NotInvariant, "operator does not preserve T");
  return q.project_amb * a * q.lift_amb;
}

Mat embed_matrix(const FieldEmbedding& e, const Mat& m) {
  Mat r(e.dst(), m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r.set(i, j, e.map(m.at(i, j)));
  return r;
}

}  // namespace oti
