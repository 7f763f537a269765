#pragma once

#include "matrix.hpp"
#include "permsets.hpp"
#include "rng.hpp"

namespace oti {

// A representation is one invertible matrix per group generator. Matrices of
// other elements are recovered by factoring the permutation: through the
// adjacent-transposition word for full symmetric groups, through the stored
// BFS word for enumerated groups.
struct GModule {
  PermGroupPtr group;
  FieldPtr field;
  int dim = 0;
  std::vector<Mat> gen_mats;
  std::string label;
};

// Validates shapes, invertibility and (where tractable) the defining
// relations: exactly on the underlying permutations when all matrices are
// permutation matrices, by the Coxeter presentation for small dense modules
// over a full symmetric group, by random word spot-checks for enumerated
// groups.
GModule make_module(PermGroupPtr group, FieldPtr field, std::vector<Mat> mats, std::string label);

Mat matrix_of(const GModule& m, const Perm& g);

GModule perm_module(const TabloidSpace& space, FieldPtr field);
GModule perm_module_from_gset(const GSet& x, PermGroupPtr group, FieldPtr field,
                              std::string label);
// Span of the polytabloids of standard tableaux inside M^lambda, with the
// generator action expressed on the reduced-echelon basis of the span.
struct SpechtModule {
  GModule module;
  Mat inclusion;  // dim(M^lambda) x dim(S^lambda), intertwines exactly
};
SpechtModule specht_module(const Partition& la, FieldPtr field);

GModule restrict_module(const GModule& m, const PermGroupPtr& h);

// Left coset transversal of h in g, BFS-first over g's generators. h must
// either be a prefix-symmetric subgroup of a full symmetric group or come
// enumerated. reversed_gens picks the transversal found by scanning the
// generators in reverse order (used to probe transversal independence).
std::vector<Perm> coset_transversal(const PermGroupPtr& g, const PermGroupPtr& h,
                                    bool reversed_gens = false);

GModule induce_module(const GModule& m, const PermGroupPtr& g, bool reversed_gens = false);

struct AlgebraElement {
  std::vector<std::pair<Fel, Perm>> terms;
};
AlgebraElement jucys_murphy(int n, FieldPtr field);
Mat act(const GModule& m, const AlgebraElement& a);

struct HomSpace {
  int dim_source = 0, dim_target = 0;
  std::vector<Mat> basis;  // T with T rho_X(g) = rho_Y(g) T for all generators
  int dim() const { return int(basis.size()); }
};
HomSpace hom_basis(const GModule& x, const GModule& y);

// Tr_{H,G}(f) = sum over a left transversal of g f g^{-1}; f must be
// H-equivariant (checked), the result is verified G-equivariant.
Mat transfer(const Mat& f, const PermGroupPtr& h, const GModule& x, const GModule& y,
             bool reversed_gens = false);

enum class IsoKind { CertifiedIso, CertifiedNonIso, Unknown };
struct IsoVerdict {
  IsoKind kind = IsoKind::Unknown;
  Mat witness;              // invertible intertwiner for CertifiedIso
  std::string invariant;    // distinguishing invariant for CertifiedNonIso
  int scalar_ext_used = 1;  // field extension degree of the witness
  int trials_used = 0;
};
IsoVerdict iso_probe(const GModule& x, const GModule& y, int trials, int scalar_ext,
                     uint64_t seed);

GModule direct_sum(const std::vector<GModule>& parts);
GModule tensor_module(const GModule& x, const GModule& y);
GModule sign_twist(const GModule& x);

GModule trivial_module(PermGroupPtr group, FieldPtr field);

}  // namespace oti
