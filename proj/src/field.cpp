#include "tgrs/field.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace tgrs {
namespace detail {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod_u64(u64 a, u64 b, u64 n) { return static_cast<u64>(u128(a) * b % n); }

u64 powmod_u64(u64 a, u64 e, u64 n) {
  u64 r = 1 % n;
  a %= n;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, n);
    a = mulmod_u64(a, a, n);
    e >>= 1;
  }
  return r;
}

// --- dense polynomials over GF(p), coefficient of x^i at position i ---

using Poly = std::vector<u64>;

void ptrim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

bool pequal(Poly a, Poly b) {
  ptrim(a);
  ptrim(b);
  return a == b;
}

// a * b reduced modulo the monic polynomial f.
Poly pmulmod(const Poly& a, const Poly& b, const Poly& f, u64 p) {
  std::size_t m = f.size() - 1;
  if (a.empty() || b.empty()) return Poly(m, 0);
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  }
  for (std::size_t d = c.size(); d-- > m;) {
    u64 t = c[d];
    if (t == 0) continue;
    c[d] = 0;
    for (std::size_t j = 0; j < m; ++j) {
      u64 s = (t * f[j]) % p;
      c[d - m + j] = (c[d - m + j] + p - s) % p;
    }
  }
  c.resize(m);
  return c;
}

// base^e modulo the monic polynomial f.
Poly ppowmod(Poly base, u64 e, const Poly& f, u64 p) {
  Poly r{1};
  r.resize(f.size() - 1, 0);
  base.resize(f.size() - 1, 0);
  while (e) {
    if (e & 1) r = pmulmod(r, base, f, p);
    base = pmulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

Poly pgcd(Poly a, Poly b, u64 p) {
  ptrim(a);
  ptrim(b);
  while (!b.empty()) {
    // a mod b
    u64 lead_inv = powmod_u64(b.back(), p - 2, p);
    while (a.size() >= b.size()) {
      u64 t = mulmod_u64(a.back(), lead_inv, p);
      std::size_t off = a.size() - b.size();
      if (t != 0) {
        for (std::size_t j = 0; j < b.size(); ++j) a[off + j] = (a[off + j] + p - (t * b[j]) % p) % p;
      }
      a.pop_back();
      ptrim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a;
}

// x^(p^d) modulo f, by iterating the p-th power map.
Poly frobenius_iter(unsigned d, const Poly& f, u64 p) {
  Poly h{0, 1};
  h.resize(f.size() - 1, 0);
  for (unsigned i = 0; i < d; ++i) h = ppowmod(h, p, f, p);
  return h;
}

bool poly_irreducible(const Poly& f, u64 p) {
  std::size_t m = f.size() - 1;
  if (m == 1) return true;
  Poly x{0, 1};
  for (u64 r : prime_factors(m)) {
    Poly h = frobenius_iter(static_cast<unsigned>(m / r), f, p);
    // gcd(h - x, f) must be constant
    Poly diff = h;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    Poly g = pgcd(diff, f, p);
    if (g.size() > 1) return false;
  }
  Poly h = frobenius_iter(static_cast<unsigned>(m), f, p);
  return pequal(h, x);
}

// True when the class of x generates the multiplicative group of GF(p)[x]/(f).
bool x_is_primitive(const Poly& f, u64 p, u64 q, const std::vector<u64>& qm1_factors) {
  Poly one{1};
  for (u64 r : qm1_factors) {
    Poly h = ppowmod(Poly{0, 1}, (q - 1) / r, f, p);
    if (pequal(h, one)) return false;
  }
  return true;
}

Poly find_default_modulus(u64 p, unsigned m, const std::vector<u64>& qm1_factors, u64 q) {
  // Lexicographic scan of coefficient tuples (c0, c1, ..., c_{m-1}),
  // constant term most significant.
  std::vector<u64> c(m, 0);
  while (true) {
    Poly f(m + 1, 0);
    for (unsigned i = 0; i < m; ++i) f[i] = c[i];
    f[m] = 1;
    if (f[0] != 0 && poly_irreducible(f, p) && x_is_primitive(f, p, q, qm1_factors)) return f;
    int i = static_cast<int>(m) - 1;
    while (i >= 0 && c[i] == p - 1) c[i--] = 0;
    if (i < 0) break;
    ++c[i];
  }
  throw internal_error("no primitive polynomial of the requested degree exists");
}

bool order_is_group_order(const FieldData& d, u64 a, const std::vector<u64>& qm1_factors) {
  if (a == 0) return false;
  if (d.pow(a, static_cast<std::int64_t>(d.q - 1)) != 1) return false;
  for (u64 r : qm1_factors) {
    if (d.pow(a, static_cast<std::int64_t>((d.q - 1) / r)) == 1) return false;
  }
  return true;
}

void build_tables(FieldData& d) {
  if (d.q > FieldData::kUnaryTableMax) return;
  std::size_t q = static_cast<std::size_t>(d.q);

  std::vector<std::uint32_t> neg_tab(q), inv_tab(q, 0), log_tab(q, 0);
  std::vector<std::uint32_t> exp_tab(2 * (q - 1));
  for (std::size_t a = 0; a < q; ++a) neg_tab[a] = static_cast<std::uint32_t>(d.neg(a));
  u64 cur = 1;
  for (std::size_t i = 0; i < q - 1; ++i) {
    exp_tab[i] = exp_tab[i + q - 1] = static_cast<std::uint32_t>(cur);
    log_tab[cur] = static_cast<std::uint32_t>(i);
    cur = d.mul(cur, d.gen);
  }
  if (cur != 1) throw internal_error("primitive element does not have full order");
  for (std::size_t a = 1; a < q; ++a) inv_tab[a] = exp_tab[(q - 1) - log_tab[a]];

  std::vector<std::uint16_t> add_tab, mul_tab;
  if (d.q <= FieldData::kPairTableMax) {
    add_tab.resize(q * q);
    mul_tab.resize(q * q);
    for (std::size_t a = 0; a < q; ++a) {
      for (std::size_t b = 0; b < q; ++b) {
        add_tab[a * q + b] = static_cast<std::uint16_t>(d.add(a, b));
        mul_tab[a * q + b] = static_cast<std::uint16_t>(d.mul(a, b));
      }
    }
  }

  d.neg_tab = std::move(neg_tab);
  d.inv_tab = std::move(inv_tab);
  d.log_tab = std::move(log_tab);
  d.exp_tab = std::move(exp_tab);
  d.add_tab = std::move(add_tab);
  d.mul_tab = std::move(mul_tab);
}

std::int64_t parse_int(std::string_view s) {
  std::int64_t v = 0;
  const char* b = s.data();
  const char* e = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(b, e, v);
  if (ec != std::errc() || ptr != e) throw validation_error("invalid integer literal: '" + std::string(s) + "'");
  return v;
}

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % d == 0) return n == d;
  }
  u64 r = 0;
  u64 d = n - 1;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (u64 i = 1; i < r; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  u64 d = 2;
  while (d <= 1000000 && d * d <= n) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
    d += (d == 2) ? 1 : 2;
  }
  if (n > 1) {
    if (!is_prime_u64(n)) throw guard_error("group order too large to factor");
    out.push_back(n);
  }
  return out;
}

std::vector<u64> FieldData::digits(u64 idx) const {
  std::vector<u64> d(m);
  for (unsigned i = 0; i < m; ++i) {
    d[i] = idx % p;
    idx /= p;
  }
  return d;
}

u64 FieldData::pack(const std::vector<u64>& d) const {
  u64 idx = 0;
  for (unsigned i = m; i-- > 0;) idx = idx * p + d[i];
  return idx;
}

u64 FieldData::add_slow(u64 a, u64 b) const {
  auto da = digits(a);
  auto db = digits(b);
  for (unsigned i = 0; i < m; ++i) {
    da[i] += db[i];
    if (da[i] >= p) da[i] -= p;
  }
  return pack(da);
}

u64 FieldData::neg_slow(u64 a) const {
  auto da = digits(a);
  for (unsigned i = 0; i < m; ++i) da[i] = da[i] == 0 ? 0 : p - da[i];
  return pack(da);
}

u64 FieldData::mul_slow(u64 a, u64 b) const {
  return pack(pmulmod(digits(a), digits(b), mod, p));
}

u64 FieldData::inv(u64 a) const {
  if (a == 0) throw validation_error("inverse of zero field element");
  if (!inv_tab.empty()) return inv_tab[a];
  if (m == 1) return powmod_u64(a, p - 2, p);
  return pow(a, static_cast<std::int64_t>(q - 2));
}

u64 FieldData::div(u64 a, u64 b) const {
  if (b == 0) throw validation_error("division by zero field element");
  return mul(a, inv(b));
}

u64 FieldData::pow(u64 a, std::int64_t e) const {
  u64 ue;
  if (e < 0) {
    a = inv(a);
    ue = ~static_cast<u64>(e) + 1;
  } else {
    ue = static_cast<u64>(e);
  }
  u64 r = 1;
  while (ue) {
    if (ue & 1) r = mul(r, a);
    a = mul(a, a);
    ue >>= 1;
  }
  return r;
}

u64 FieldData::dlog(u64 a) const {
  if (a == 0) throw validation_error("discrete log of zero field element");
  if (!log_tab.empty()) return log_tab[a];
  u64 cur = 1;
  for (u64 i = 0; i < q - 1; ++i) {
    if (cur == a) return i;
    cur = mul(cur, gen);
  }
  throw internal_error("element not generated by the primitive root");
}

bool same_field(const FieldData* a, const FieldData* b) {
  if (a == nullptr || b == nullptr) return false;
  if (a == b) return true;
  return a->p == b->p && a->m == b->m && a->mod == b->mod;
}

}  // namespace detail

Field::Field(std::uint64_t p, unsigned m, std::optional<std::vector<std::uint64_t>> modulus) {
  if (!detail::is_prime_u64(p)) throw validation_error("field characteristic must be prime");
  if (p > 0x7fffffffull) throw validation_error("field characteristic must be below 2^31");
  if (m == 0) throw validation_error("extension degree must be at least 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < m; ++i) {
    if (q > (std::uint64_t(1) << 62) / p) throw validation_error("field order exceeds 2^62");
    q *= p;
  }

  auto d = std::make_shared<detail::FieldData>();
  d->p = p;
  d->m = m;
  d->q = q;

  if (m == 1) {
    d->mod = {0, 1};
    d->default_mod = true;
  } else {
    auto qm1_factors = detail::prime_factors(q - 1);
    if (modulus.has_value()) {
      if (modulus->size() != m + 1) throw validation_error("modulus must have degree m (m+1 coefficients)");
      for (std::uint64_t c : *modulus) {
        if (c >= p) throw validation_error("modulus coefficients must lie in [0, p)");
      }
      if (modulus->back() != 1) throw validation_error("modulus must be monic");
      if (!detail::poly_irreducible(*modulus, p)) throw validation_error("modulus polynomial is reducible");
      d->mod = *modulus;
      d->default_mod = false;
    } else {
      d->mod = detail::find_default_modulus(p, m, qm1_factors, q);
      d->default_mod = true;
    }
  }

  if (m > 1 && d->default_mod) {
    d->gen = p;  // the class of x, primitive by construction
  } else {
    auto qm1_factors = detail::prime_factors(q - 1);
    d->gen = 0;
    for (std::uint64_t g = 1; g < q; ++g) {
      if (detail::order_is_group_order(*d, g, qm1_factors)) {
        d->gen = g;
        break;
      }
    }
    if (d->gen == 0) throw internal_error("no generator of the multiplicative group found");
  }

  detail::build_tables(*d);
  d_ = std::move(d);
}

Felt Field::elem(std::uint64_t index) const {
  if (index >= d_->q) throw validation_error("element index out of range");
  return Felt(d_.get(), index);
}

Felt Field::zero() const { return Felt(d_.get(), 0); }

Felt Field::one() const { return Felt(d_.get(), 1); }

Felt Field::from_int(std::int64_t value) const {
  std::int64_t p = static_cast<std::int64_t>(d_->p);
  std::int64_t r = value % p;
  if (r < 0) r += p;
  return Felt(d_.get(), static_cast<std::uint64_t>(r));
}

Felt Field::primitive_root() const { return Felt(d_.get(), d_->gen); }

Felt Field::parse(std::string_view text) const {
  std::string_view s = detail::strip(text);
  if (s.empty()) throw validation_error("empty field element literal");

  if (d_->m == 1) return from_int(detail::parse_int(s));

  if (s[0] == 'z') {
    std::string_view rest = s.substr(1);
    std::uint64_t k = 1;
    if (!rest.empty()) {
      if (rest[0] != '^') throw validation_error("invalid element literal: '" + std::string(text) + "'");
      std::int64_t e = detail::parse_int(detail::strip(rest.substr(1)));
      if (e < 0) throw validation_error("negative power of z in element literal");
      k = static_cast<std::uint64_t>(e);
    }
    return Felt(d_.get(), d_->pow(d_->gen, static_cast<std::int64_t>(k % (d_->q - 1))));
  }

  if (s[0] == '[') {
    if (s.back() != ']') throw validation_error("unterminated coefficient vector: '" + std::string(text) + "'");
    std::string_view body = s.substr(1, s.size() - 2);
    std::vector<std::uint64_t> dig(d_->m, 0);
    std::size_t i = 0;
    std::size_t start = 0;
    std::size_t pos = 0;
    auto take = [&](std::string_view piece) {
      if (i >= d_->m) throw validation_error("coefficient vector longer than the extension degree");
      std::int64_t v = detail::parse_int(detail::strip(piece));
      std::int64_t p = static_cast<std::int64_t>(d_->p);
      std::int64_t r = v % p;
      if (r < 0) r += p;
      dig[i++] = static_cast<std::uint64_t>(r);
    };
    for (; pos < body.size(); ++pos) {
      if (body[pos] == ',') {
        take(body.substr(start, pos - start));
        start = pos + 1;
      }
    }
    take(body.substr(start));
    return Felt(d_.get(), d_->pack(dig));
  }

  return from_int(detail::parse_int(s));
}

std::string Field::str(const Felt& a) const {
  if (!detail::same_field(d_.get(), a.field_data()))
    throw validation_error("element does not belong to this field");
  if (d_->m == 1) return std::to_string(a.index());
  if (a.index() == 0) return "0";
  return "z^" + std::to_string(d_->dlog(a.index()));
}

}  // namespace tgrs
