#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "error.hpp"

namespace oti {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// An element of GF(p^k) is stored as its coefficient vector over GF(p),
// packed into a single index: value = c_0 + c_1*p + ... + c_{k-1}*p^{k-1}.
// Elements are plain uint16_t and belong to exactly one Field; all arithmetic
// goes through that Field. Multiplication is schoolbook polynomial
// multiplication followed by reduction modulo the (irreducible) modulus; for
// small fields the products are memoized in a q x q table built from the same
// schoolbook routine.
using Fel = uint16_t;

class Field : public std::enable_shared_from_this<Field> {
 public:
  // If modulus is empty it is chosen deterministically: the first irreducible
  // monic polynomial t^k + c_{k-1}t^{k-1} + ... + c_0 in increasing packed
  // order of (c_0,...,c_{k-1}). Supplied moduli are full coefficient lists
  // c_0..c_k with c_k = 1.
  static FieldPtr create(int64_t p, int k = 1, const std::vector<int64_t>& modulus = {});

  // Parses "p=<prime>[,k=<deg>[,mod=<c0,c1,...,ck>]]".
  static FieldPtr parse_spec(const std::string& spec);

  int64_t p() const { return p_; }
  int k() const { return k_; }
  uint32_t q() const { return q_; }
  const std::vector<uint16_t>& modulus() const { return modulus_; }
  // Canonical spec string, echoed verbatim into certificates.
  std::string spec() const;

  Fel zero() const { return 0; }
  Fel one() const { return 1; }
  // Image of an integer under Z -> GF(p) -> GF(p^k).
  Fel from_int(int64_t n) const;
  // The class of the generator t (equals from_int for k = 1 fields only when p > 1).
  Fel gen() const { return k_ == 1 ? Fel(1) : Fel(p_); }

  Fel add(Fel a, Fel b) const { return add_ ? add_[size_t(a) * q_ + b] : add_slow(a, b); }
  Fel sub(Fel a, Fel b) const { return add(a, neg(b)); }
  Fel neg(Fel a) const { return neg_[a]; }
  Fel mul(Fel a, Fel b) const { return mul_ ? mul_[size_t(a) * q_ + b] : mul_slow(a, b); }
  Fel inv(Fel a) const;
  Fel pow(Fel a, uint64_t e) const;

  // Raw table rows for hot loops; null when q exceeds the table cap.
  const Fel* mul_row(Fel a) const { return mul_ ? mul_ + size_t(a) * q_ : nullptr; }
  const Fel* add_row(Fel a) const { return add_ ? add_ + size_t(a) * q_ : nullptr; }
  bool has_tables() const { return mul_ != nullptr; }

  // Coefficient vector c_0..c_{k-1} of an element.
  std::vector<int64_t> coeffs(Fel a) const;
  Fel from_coeffs(const std::vector<int64_t>& c) const;

  std::string to_string(Fel a) const;  // polynomial notation, e.g. "t+1"

  bool same(const Field& other) const { return this == &other; }

  ~Field();

 private:
  Field() = default;
  Fel add_slow(Fel a, Fel b) const;
  Fel mul_slow(Fel a, Fel b) const;
  void build_tables();

  int64_t p_ = 0;
  int k_ = 0;
  uint32_t q_ = 0;
  std::vector<uint16_t> modulus_;  // c_0..c_k, c_k = 1, entries mod p
  bool spec_had_explicit_modulus_ = false;

  Fel* add_ = nullptr;
  Fel* mul_ = nullptr;
  std::vector<Fel> neg_;
  mutable std::vector<Fel> inv_;  // built with the tables
};

inline void require_same_field(const FieldPtr& a, const FieldPtr& b) {
  require(a.get() == b.get() || (a->p() == b->p() && a->k() == b->k() && a->modulus() == b->modulus()),
          Err::FieldMismatch, "elements from different fields");
}

// GF(p^k) -> GF(p^(k*e)) embedding: maps the source generator to the first
// root of the source modulus in the target field (deterministic).
class FieldEmbedding {
 public:
  FieldEmbedding(FieldPtr src, FieldPtr dst);
  Fel map(Fel a) const;
  const FieldPtr& src() const { return src_; }
  const FieldPtr& dst() const { return dst_; }

 private:
  FieldPtr src_, dst_;
  std::vector<Fel> image_;  // image of every source element
};

bool is_prime(int64_t n);

}  // namespace oti
