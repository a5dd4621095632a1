// Exact arithmetic in GF(p^m).
//
// Elements are identified by a packed index in [0, q): for prime fields the
// index is the residue itself, for extension fields the index packs the
// coefficient vector of the residue polynomial in base p (constant term in
// the lowest digit).  Small fields get dense lookup tables so that the
// census kernels run on plain array reads.
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tgrs/errors.hpp"

namespace tgrs {

namespace detail {

// Immutable per-field state shared by every Felt / Matrix built on it.
// All operations take and return packed element indices.
struct FieldData {
  std::uint64_t p = 0;                // characteristic (prime)
  unsigned m = 1;                     // extension degree
  std::uint64_t q = 0;                // p^m
  std::vector<std::uint64_t> mod;     // monic reduction polynomial, mod[i] = coeff of x^i, size m+1
  bool default_mod = false;           // modulus chosen by the library (then x is primitive)
  std::uint64_t gen = 0;              // index of the canonical primitive element "z"

  // Dense tables, built when the field is small enough.
  static constexpr std::uint64_t kPairTableMax = 256;    // full q*q add/mul tables
  static constexpr std::uint64_t kUnaryTableMax = 65536; // per-element neg/inv/log tables
  std::vector<std::uint16_t> add_tab, mul_tab;  // q*q entries each
  std::vector<std::uint32_t> neg_tab, inv_tab;  // q entries (inv_tab[0] unused)
  std::vector<std::uint32_t> log_tab;           // log base gen, log_tab[0] unused
  std::vector<std::uint32_t> exp_tab;           // gen^i for i in [0, 2(q-1))

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    if (!add_tab.empty()) return add_tab[static_cast<std::size_t>(a) * q + b];
    if (m == 1) {
      std::uint64_t s = a + b;
      return s >= p ? s - p : s;
    }
    return add_slow(a, b);
  }

  std::uint64_t neg(std::uint64_t a) const {
    if (!neg_tab.empty()) return neg_tab[a];
    if (m == 1) return a == 0 ? 0 : p - a;
    return neg_slow(a);
  }

  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return add(a, neg(b)); }

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    if (!mul_tab.empty()) return mul_tab[static_cast<std::size_t>(a) * q + b];
    if (m == 1) return (a * b) % p;  // p < 2^31, so the product fits in 64 bits
    if (!log_tab.empty()) {
      if (a == 0 || b == 0) return 0;
      return exp_tab[log_tab[a] + log_tab[b]];
    }
    return mul_slow(a, b);
  }

  // Multiplicative inverse of a nonzero element.
  std::uint64_t inv(std::uint64_t a) const;
  // a / b, throws validation_error when b == 0.
  std::uint64_t div(std::uint64_t a, std::uint64_t b) const;
  // a^e for any signed exponent (inverts for e < 0).
  std::uint64_t pow(std::uint64_t a, std::int64_t e) const;
  // Discrete log base gen of a nonzero element.
  std::uint64_t dlog(std::uint64_t a) const;

  // Generic paths used when no table applies (large extension fields).
  std::uint64_t add_slow(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t neg_slow(std::uint64_t a) const;
  std::uint64_t mul_slow(std::uint64_t a, std::uint64_t b) const;

  // Packed index <-> base-p coefficient digits (constant term first).
  std::vector<std::uint64_t> digits(std::uint64_t idx) const;
  std::uint64_t pack(const std::vector<std::uint64_t>& d) const;
};

bool same_field(const FieldData* a, const FieldData* b);

}  // namespace detail

class Felt;

// Value handle for a finite field.  Cheap to copy; equality is structural
// (same characteristic, degree and reduction polynomial).
class Field {
 public:
  // Builds GF(p^m).  When m > 1 and no modulus is given, the reduction
  // polynomial is the lexicographically smallest monic primitive polynomial
  // of degree m (coefficient tuple compared constant term first), so the
  // class of x is always a generator of the multiplicative group.
  // A user-supplied modulus must be monic of degree m and irreducible;
  // it is ignored when m == 1.
  explicit Field(std::uint64_t p, unsigned m = 1,
                 std::optional<std::vector<std::uint64_t>> modulus = std::nullopt);

  std::uint64_t characteristic() const { return d_->p; }
  unsigned extension_degree() const { return d_->m; }
  std::uint64_t order() const { return d_->q; }
  const std::vector<std::uint64_t>& modulus() const { return d_->mod; }
  bool has_default_modulus() const { return d_->default_mod; }

  Felt elem(std::uint64_t index) const;       // element with the given packed index
  Felt zero() const;
  Felt one() const;
  Felt from_int(std::int64_t value) const;    // image of an integer under Z -> GF(p) -> GF(q)
  // Canonical generator of the multiplicative group: the class of x for a
  // default modulus, otherwise the smallest-index element of order q-1.
  Felt primitive_root() const;

  // Text form: prime fields use plain decimal; extension fields accept
  // "0", "z^k" (z = primitive_root), decimal integers (prime subfield), and
  // coefficient vectors "[c0,c1,...]".  Emission uses decimal for prime
  // fields and "z^k" / "0" for extension fields.
  Felt parse(std::string_view text) const;
  std::string str(const Felt& a) const;

  bool operator==(const Field& o) const { return detail::same_field(d_.get(), o.d_.get()); }
  bool operator!=(const Field& o) const { return !(*this == o); }

  const detail::FieldData* data() const { return d_.get(); }

 private:
  std::shared_ptr<const detail::FieldData> d_;
};

// One field element.  Holds a raw pointer to the field's shared state, so a
// Felt must not outlive every Field handle of that field.
class Felt {
 public:
  Felt() = default;

  std::uint64_t index() const { return idx_; }
  bool is_zero() const { return idx_ == 0; }
  const detail::FieldData* field_data() const { return fd_; }

  Felt operator+(const Felt& o) const { const auto* f = join(o); return make(f, f->add(idx_, o.idx_)); }
  Felt operator-(const Felt& o) const { const auto* f = join(o); return make(f, f->sub(idx_, o.idx_)); }
  Felt operator*(const Felt& o) const { const auto* f = join(o); return make(f, f->mul(idx_, o.idx_)); }
  Felt operator/(const Felt& o) const { const auto* f = join(o); return make(f, f->div(idx_, o.idx_)); }
  Felt operator-() const { const auto* f = req(); return make(f, f->neg(idx_)); }

  Felt& operator+=(const Felt& o) { return *this = *this + o; }
  Felt& operator-=(const Felt& o) { return *this = *this - o; }
  Felt& operator*=(const Felt& o) { return *this = *this * o; }
  Felt& operator/=(const Felt& o) { return *this = *this / o; }

  Felt inverse() const { const auto* f = req(); return make(f, f->inv(idx_)); }
  Felt pow(std::int64_t e) const { const auto* f = req(); return make(f, f->pow(idx_, e)); }

  bool operator==(const Felt& o) const {
    if (fd_ == o.fd_) return idx_ == o.idx_;
    return detail::same_field(fd_, o.fd_) && idx_ == o.idx_;
  }
  bool operator!=(const Felt& o) const { return !(*this == o); }

 private:
  friend class Field;

  Felt(const detail::FieldData* fd, std::uint64_t idx) : fd_(fd), idx_(idx) {}
  static Felt make(const detail::FieldData* fd, std::uint64_t idx) { return Felt(fd, idx); }

  const detail::FieldData* req() const {
    if (fd_ == nullptr) throw validation_error("operation on a default-constructed field element");
    return fd_;
  }
  const detail::FieldData* join(const Felt& o) const {
    const detail::FieldData* a = req();
    const detail::FieldData* b = o.req();
    if (a == b || detail::same_field(a, b)) return a;
    throw validation_error("field elements belong to different fields");
  }

  const detail::FieldData* fd_ = nullptr;
  std::uint64_t idx_ = 0;
};

namespace detail {
// 64-bit primality test (deterministic Miller-Rabin), shared with tests.
bool is_prime_u64(std::uint64_t n);
// Distinct prime factors of n by trial division plus a primality check on the
// remainder; throws guard_error when n is too large to factor this way.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
}  // namespace detail

}  // namespace tgrs
