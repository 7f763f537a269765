#pragma once

#include <optional>
#include <vector>

#include "field.hpp"

namespace oti {

// Dense exact matrix over a finite field. Vectors are columns and matrices
// act on the left; a Subspace of k^n stores its basis vectors as the rows of
// a reduced row echelon matrix, which makes the basis canonical and subspace
// equality a plain comparison.
class Mat {
 public:
  Mat() = default;
  Mat(FieldPtr f, int rows, int cols);
  static Mat identity(FieldPtr f, int n);
  static Mat zero(FieldPtr f, int rows, int cols) { return Mat(f, rows, cols); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const FieldPtr& field() const { return field_; }

  Fel at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }
  void set(int r, int c, Fel v) { a_[size_t(r) * cols_ + c] = v; }
  const Fel* row_ptr(int r) const { return a_.data() + size_t(r) * cols_; }
  Fel* row_ptr(int r) { return a_.data() + size_t(r) * cols_; }

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat scaled(Fel c) const;
  Mat transposed() const;
  bool operator==(const Mat& o) const;
  bool operator!=(const Mat& o) const { return !(*this == o); }
  bool is_zero() const;
  bool is_identity() const;
  bool is_permutation() const;  // exactly one 1 per row and column, rest 0
  Fel trace() const;

  Mat pow(uint64_t e) const;

  // Applies this matrix to a column vector given as a flat array.
  std::vector<Fel> apply(const std::vector<Fel>& v) const;

  Mat cols_selected(const std::vector<int>& idx) const;
  Mat rows_selected(const std::vector<int>& idx) const;
  Mat vstack(const Mat& below) const;
  Mat hstack(const Mat& right) const;

  std::string to_string() const;

 private:
  FieldPtr field_;
  int rows_ = 0, cols_ = 0;
  std::vector<Fel> a_;
};

struct RrefResult {
  Mat R;
  int rank = 0;
  std::vector<int> pivots;  // pivot column per nonzero row
};

RrefResult rref(const Mat& m);
int rank(const Mat& m);
std::optional<Mat> inverse(const Mat& m);

struct Subspace {
  int ambient = 0;
  Mat basis;  // dim x ambient, reduced row echelon, rows are basis vectors
  std::vector<int> pivots;

  int dim() const { return basis.rows(); }
  bool operator==(const Subspace& o) const { return ambient == o.ambient && basis == o.basis; }
};

Subspace subspace_from_rows(const Mat& rows);      // row span
Subspace zero_subspace(FieldPtr f, int ambient);
Subspace full_subspace(FieldPtr f, int ambient);
Subspace kernel_basis(const Mat& m);  // right kernel {v : Mv = 0}
Subspace image_basis(const Mat& m);   // column space

// Reduces v against the echelon basis; returns the residual. Zero residual
// means membership. coords, when requested, receives the basis coefficients.
std::vector<Fel> reduce_against(const Subspace& s, std::vector<Fel> v,
                                std::vector<Fel>* coords = nullptr);
bool contains(const Subspace& s, const std::vector<Fel>& v);
bool contains(const Subspace& outer, const Subspace& inner);

Subspace intersect(const Subspace& u, const Subspace& w);
Subspace subspace_sum(const Subspace& u, const Subspace& w);

// Data for the quotient S/T with T <= S. project/lift are in S-coordinates
// per the module contract; the ambient forms are what most callers want:
// project_amb maps an ambient vector lying in S to quotient coordinates and
// lift_amb picks a representative. project_amb * lift_amb = identity.
struct QuotientData {
  int dim = 0;
  Mat project;      // dim x dim(S)
  Mat lift;         // dim(S) x dim
  Mat project_amb;  // dim x ambient
  Mat lift_amb;     // ambient x dim
  Subspace sub, quot_markers;  // T and the chosen complement rows
};

QuotientData quotient(int ambient_dim, const Subspace& s, const Subspace& t);

// Matrix of the operator induced by a on S/T. Verifies a*S <= S and a*T <= T
// exactly and throws NotInvariant otherwise.
Mat induced_operator(const Mat& a, const Subspace& s, const Subspace& t);
Mat induced_operator(const Mat& a, const QuotientData& q);

// Entrywise application of a field embedding.
Mat embed_matrix(const FieldEmbedding& e, const Mat& m);

int dimension_cap();

}  // namespace oti
