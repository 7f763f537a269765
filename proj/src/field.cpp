#include "field.hpp"

#include <algorithm>
#include <sstream>

namespace oti {

const char* err_name(Err e) {
  switch (e) {
    case Err::NonPrime: return "NonPrime";
    case Err::ReducibleModulus: return "ReducibleModulus";
    case Err::DegreeMismatch: return "DegreeMismatch";
    case Err::BadParameters: return "BadParameters";
    case Err::DimensionCap: return "DimensionCap";
    case Err::WeightMismatch: return "WeightMismatch";
    case Err::AmbientMismatch: return "AmbientMismatch";
    case Err::NotContained: return "NotContained";
    case Err::NotInvariant: return "NotInvariant";
    case Err::OrderExceedsCap: return "OrderExceedsCap";
    case Err::ActionMismatch: return "ActionMismatch";
    case Err::NotProductOrbit: return "NotProductOrbit";
    case Err::NotASubgroupElement: return "NotASubgroupElement";
    case Err::NotAGroupElement: return "NotAGroupElement";
    case Err::GroupMismatch: return "GroupMismatch";
    case Err::FieldMismatch: return "FieldMismatch";
    case Err::NotEquivariant: return "NotEquivariant";
    case Err::NotNilpotentOfOrderP: return "NotNilpotentOfOrderP";
    case Err::NotCommuting: return "NotCommuting";
    case Err::NotElementaryAbelian: return "NotElementaryAbelian";
    case Err::NonGenericTuple: return "NonGenericTuple";
    case Err::NotExact: return "NotExact";
    case Err::NotOrderP: return "NotOrderP";
    case Err::CatalogMissing: return "CatalogMissing";
    case Err::IndexOutOfRange: return "IndexOutOfRange";
    case Err::PrimeMismatch: return "PrimeMismatch";
    case Err::PartExceedsP: return "PartExceedsP";
    case Err::TooSmall: return "TooSmall";
    case Err::Usage: return "Usage";
    case Err::Internal: return "Internal";
  }
  return "Unknown";
}

bool is_prime(int64_t n) {
  if (n < 2) return false;
  for (int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

// Dense polynomials over GF(p), coefficient lists low degree first.
using Poly = std::vector<uint16_t>;

int deg(const Poly& f) {
  for (int i = int(f.size()) - 1; i >= 0; --i)
    if (f[i]) return i;
  return -1;
}

Poly poly_mul(const Poly& f, const Poly& g, int64_t p) {
  if (f.empty() || g.empty()) return {};
  Poly h(f.size() + g.size() - 1, 0);
  for (size_t i = 0; i < f.size(); ++i) {
    if (!f[i]) continue;
    for (size_t j = 0; j < g.size(); ++j)
      h[i + j] = uint16_t((h[i + j] + int64_t(f[i]) * g[j]) % p);
  }
  return h;
}

// f mod g, g monic.
Poly poly_mod(Poly f, const Poly& g, int64_t p) {
  int dg = deg(g);
  check_internal(dg >= 0 && g[dg] == 1, "poly_mod needs a monic divisor");
  for (int i = deg(f); i >= dg; --i) {
    uint16_t c = f[i];
    if (!c) continue;
    for (int j = 0; j <= dg; ++j) {
      int64_t v = (int64_t(f[i - dg + j]) - int64_t(c) * g[j]) % p;
      if (v < 0) v += p;
      f[i - dg + j] = uint16_t(v);
    }
  }
  f.resize(std::max(dg, 0));
  return f;
}

Poly unpack(uint64_t value, int len, int64_t p) {
  Poly c(len, 0);
  for (int i = 0; i < len; ++i) {
    c[i] = uint16_t(value % p);
    value /= p;
  }
  return c;
}

uint64_t pack(const Poly& c, int64_t p) {
  uint64_t v = 0;
  for (int i = int(c.size()) - 1; i >= 0; --i) v = v * p + c[i];
  return v;
}

// Trial division by every monic polynomial of degree 1..deg(f)/2.
bool poly_irreducible(const Poly& f, int64_t p) {
  int df = deg(f);
  if (df <= 0) return false;
  for (int d = 1; d <= df / 2; ++d) {
    uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= uint64_t(p);
    for (uint64_t v = 0; v < count; ++v) {
      Poly g = unpack(v, d, p);
      g.resize(d + 1, 0);
      g[d] = 1;
      if (deg(poly_mod(f, g, p)) < 0) return false;
    }
  }
  return true;
}

}  // namespace

FieldPtr Field::create(int64_t p, int k, const std::vector<int64_t>& modulus) {
  require(is_prime(p), Err::NonPrime, "p = " + std::to_string(p) + " is not prime");
  require(k >= 1, Err::BadParameters, "extension degree k must be >= 1");
  long double qld = 1;
  for (int i = 0; i < k; ++i) qld *= (long double)p;
  require(qld <= 65536.0L, Err::BadParameters, "field size p^k exceeds 2^16");

  auto f = std::shared_ptr<Field>(new Field());
  f->p_ = p;
  f->k_ = k;
  uint32_t q = 1;
  for (int i = 0; i < k; ++i) q *= uint32_t(p);
  f->q_ = q;

  if (!modulus.empty()) {
    require(int(modulus.size()) == k + 1, Err::DegreeMismatch,
            "modulus must list k+1 coefficients c0..ck");
    Poly m(k + 1);
    for (int i = 0; i <= k; ++i) {
      int64_t c = modulus[i] % p;
      if (c < 0) c += p;
      m[i] = uint16_t(c);
    }
    require(m[k] == 1, Err::DegreeMismatch, "modulus must be monic of degree k");
    if (k > 1)
      require(poly_irreducible(m, p), Err::ReducibleModulus, "modulus is reducible over GF(p)");
    f->modulus_ = m;
    f->spec_had_explicit_modulus_ = true;
  } else {
    Poly m(k + 1, 0);
    m[k] = 1;
    if (k > 1) {
      bool found = false;
      for (uint32_t v = 0; v < q && !found; ++v) {
        Poly cand = unpack(v, k, p);
        cand.resize(k + 1, 0);
        cand[k] = 1;
        if (poly_irreducible(cand, p)) {
          m = cand;
          found = true;
        }
      }
      check_internal(found, "no irreducible modulus found");
    }
    f->modulus_ = m;
  }

  f->neg_.resize(q);
  for (uint32_t a = 0; a < q; ++a) {
    Poly c = unpack(a, k, p);
    for (auto& ci : c) ci = uint16_t(ci ? p - ci : 0);
    f->neg_[a] = Fel(pack(c, p));
  }
  if (uint64_t(q) * q <= (1u << 20)) f->build_tables();

  f->inv_.assign(q, 0);
  for (uint32_t a = 1; a < q; ++a) {
    if (f->inv_[a]) continue;
    for (uint32_t b = 1; b < q; ++b) {
      if (f->mul(Fel(a), Fel(b)) == 1) {
        f->inv_[a] = Fel(b);
        f->inv_[b] = Fel(a);
        break;
      }
    }
    check_internal(f->inv_[a] != 0, "nonzero element without inverse");
  }
  return f;
}

Field::~Field() {
  delete[] add_;
  delete[] mul_;
}

Fel Field::add_slow(Fel a, Fel b) const {
  Poly ca = unpack(a, k_, p_), cb = unpack(b, k_, p_);
  for (int i = 0; i < k_; ++i) ca[i] = uint16_t((ca[i] + cb[i]) % p_);
  return Fel(pack(ca, p_));
}

Fel Field::mul_slow(Fel a, Fel b) const {
  Poly prod = poly_mul(unpack(a, k_, p_), unpack(b, k_, p_), p_);
  prod = poly_mod(prod, modulus_, p_);
  prod.resize(k_, 0);
  return Fel(pack(prod, p_));
}

void Field::build_tables() {
  add_ = new Fel[size_t(q_) * q_];
  mul_ = new Fel[size_t(q_) * q_];
  for (uint32_t a = 0; a < q_; ++a)
    for (uint32_t b = 0; b < q_; ++b) {
      add_[size_t(a) * q_ + b] = add_slow(Fel(a), Fel(b));
      mul_[size_t(a) * q_ + b] = mul_slow(Fel(a), Fel(b));
    }
}

Fel Field::inv(Fel a) const {
  require(a != 0, Err::BadParameters, "inverse of zero");
  return inv_[a];
}

Fel Field::pow(Fel a, uint64_t e) const {
  Fel r = one(), base = a;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

Fel Field::from_int(int64_t n) const {
  int64_t c = n % p_;
  if (c < 0) c += p_;
  return Fel(c);
}

std::vector<int64_t> Field::coeffs(Fel a) const {
  Poly c = unpack(a, k_, p_);
  return std::vector<int64_t>(c.begin(), c.end());
}

Fel Field::from_coeffs(const std::vector<int64_t>& c) const {
  require(int(c.size()) <= k_, Err::DegreeMismatch, "coefficient list too long");
  Poly v(k_, 0);
  for (size_t i = 0; i < c.size(); ++i) {
    int64_t x = c[i] % p_;
    if (x < 0) x += p_;
    v[i] = uint16_t(x);
  }
  return Fel(pack(v, p_));
}

std::string Field::to_string(Fel a) const {
  if (k_ == 1) return std::to_string(a);
  Poly c = unpack(a, k_, p_);
  std::string s;
  for (int i = k_ - 1; i >= 0; --i) {
    if (!c[i]) continue;
    if (!s.empty()) s += "+";
    if (i == 0 || c[i] != 1) s += std::to_string(c[i]);
    if (i >= 1) {
      s += "t";
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s.empty() ? "0" : s;
}

std::string Field::spec() const {
  std::ostringstream os;
  os << "p=" << p_;
  if (k_ > 1 || spec_had_explicit_modulus_) {
    os << ",k=" << k_ << ",mod=";
    for (int i = 0; i <= k_; ++i) {
      if (i) os << ",";
      os << modulus_[i];
    }
  }
  return os.str();
}

FieldPtr Field::parse_spec(const std::string& spec) {
  int64_t p = 0;
  int k = 1;
  std::vector<int64_t> mod;
  std::string s = spec;
  size_t pos = 0;
  auto read_key = [&](const std::string& key) -> bool {
    if (s.compare(pos, key.size(), key) != 0) return false;
    pos += key.size();
    return true;
  };
  auto read_int = [&]() -> int64_t {
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && isdigit((unsigned char)s[pos])) ++pos;
    require(pos > start, Err::Usage, "bad field spec '" + spec + "'");
    return std::stoll(s.substr(start, pos - start));
  };
  require(read_key("p="), Err::Usage, "field spec must start with p=");
  p = read_int();
  if (pos < s.size()) {
    require(read_key(",k="), Err::Usage, "expected ,k= in field spec");
    k = int(read_int());
    if (pos < s.size()) {
      require(read_key(",mod="), Err::Usage, "expected ,mod= in field spec");
      for (;;) {
        mod.push_back(read_int());
        if (pos >= s.size()) break;
        require(s[pos] == ',', Err::Usage, "bad modulus list in field spec");
        ++pos;
      }
    }
  }
  return create(p, k, mod);
}

FieldEmbedding::FieldEmbedding(FieldPtr src, FieldPtr dst) : src_(src), dst_(dst) {
  require(src->p() == dst->p(), Err::PrimeMismatch, "embedding needs equal characteristic");
  require(dst->k() % src->k() == 0, Err::DegreeMismatch,
          "GF(p^k) embeds in GF(p^m) only when k divides m");
  // Locate the smallest root of the source modulus in the target field.
  Fel root = 0;
  bool found = false;
  for (uint32_t a = 0; a < dst->q() && !found; ++a) {
    Fel acc = 0, pw = dst->one();
    for (int i = 0; i <= src->k(); ++i) {
      acc = dst->add(acc, dst->mul(dst->from_int(src->modulus()[i]), pw));
      pw = dst->mul(pw, Fel(a));
    }
    if (acc == 0) {
      root = Fel(a);
      found = true;
    }
  }
  check_internal(found, "source modulus has no root in target field");
  image_.resize(src->q());
  for (uint32_t a = 0; a < src->q(); ++a) {
    auto c = src->coeffs(Fel(a));
    Fel acc = 0, pw = dst->one();
    for (int i = 0; i < src->k(); ++i) {
      acc = dst->add(acc, dst->mul(dst->from_int(c[i]), pw));
      pw = dst->mul(pw, root);
    }
    image_[a] = acc;
  }
}

Fel FieldEmbedding::map(Fel a) const { return image_[a]; }

}  // namespace oti
