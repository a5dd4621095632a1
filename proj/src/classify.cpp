#include "tgrs/classify.hpp"

#include <algorithm>
#include <limits>

#include "tgrs/errors.hpp"

namespace tgrs {

std::vector<std::size_t> first_subset(std::size_t k) {
  std::vector<std::size_t> t(k);
  for (std::size_t i = 0; i < k; ++i) t[i] = i;
  return t;
}

bool next_subset(std::vector<std::size_t>& t, std::size_t n) {
  std::size_t k = t.size();
  std::size_t i = k;
  while (i-- > 0) {
    if (t[i] + 1 <= n - k + i) {
      ++t[i];
      for (std::size_t j = i + 1; j < k; ++j) t[j] = t[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::uint64_t binomial_count(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  const std::uint64_t cap = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    std::uint64_t num = n - k + i;
    if (r > cap / num) return cap;  // saturate
    r = r * num / i;  // exact: r already contains C(n-k+i-1, i-1) * i! divisors
  }
  return r;
}

SubsetData subset_data(const EvalParams& params, const std::vector<std::size_t>& subset) {
  std::size_t n = params.n, k = params.k;
  if (subset.size() != k) throw validation_error("subset must have k indices");
  for (std::size_t i = 0; i < k; ++i) {
    if (subset[i] >= n) throw validation_error("subset index out of range");
    if (i > 0 && subset[i] <= subset[i - 1]) throw validation_error("subset must be strictly increasing");
  }
  const auto* fd = params.field.data();

  // c: descending-power coefficients of prod (x - a_t), built incrementally.
  std::vector<std::uint64_t> c(k + 1, 0);
  c[0] = 1;
  std::size_t deg = 0;
  for (std::size_t idx : subset) {
    std::uint64_t a = params.alpha[idx].index();
    ++deg;
    for (std::size_t j = deg; j > 0; --j) c[j] = fd->sub(c[j], fd->mul(a, c[j - 1]));
  }

  // e recursion; c indices beyond k never occur (c has k+1 entries and the
  // recursion stops at offset i <= n-k-1 <= k ... guarded explicitly).
  std::vector<std::uint64_t> e(n - k, 0);
  e[0] = 1;
  for (std::size_t i = 1; i < n - k; ++i) {
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < i; ++j) {
      std::size_t ci = i - j;
      if (ci > k) continue;
      acc = fd->add(acc, fd->mul(e[j], c[ci]));
    }
    e[i] = fd->neg(acc);
  }

  Matrix F(params.field, n - k, k);
  for (std::size_t t = 0; t < n - k; ++t) {
    for (std::size_t s = 0; s < k; ++s) {
      std::uint64_t acc = 0;
      std::size_t lim = std::min(t, s);
      for (std::size_t i = 0; i <= lim; ++i) acc = fd->add(acc, fd->mul(c[i + k - s], e[t - i]));
      F.set_idx(t, s, fd->neg(acc));
    }
  }

  SubsetData out{subset, {}, {}, std::move(F)};
  out.c.reserve(k + 1);
  for (std::uint64_t v : c) out.c.push_back(params.field.elem(v));
  out.e.reserve(n - k);
  for (std::uint64_t v : e) out.e.push_back(params.field.elem(v));
  return out;
}

namespace {

// det(I_k + B * F_T) on raw indices.
std::uint64_t twist_subset_det(const TgrsCode& code, const Matrix& F) {
  const auto* fd = code.params.field.data();
  std::size_t k = code.params.k, nk = code.params.n - code.params.k;
  const Matrix& b = code.twist.entries;
  std::vector<std::uint64_t> m(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      std::uint64_t acc = (i == j) ? 1 : 0;
      for (std::size_t t = 0; t < nk; ++t) acc = fd->add(acc, fd->mul(b.idx(i, t), F.idx(t, j)));
      m[i * k + j] = acc;
    }
  }
  return detail::det_inplace(*fd, m.data(), k);
}

}  // namespace

MdsResult mds_fast(const TgrsCode& code) {
  std::size_t n = code.params.n, k = code.params.k;
  auto t = first_subset(k);
  do {
    SubsetData sd = subset_data(code.params, t);
    if (twist_subset_det(code, sd.F) == 0) return MdsResult{false, t};
  } while (next_subset(t, n));
  return MdsResult{true, std::nullopt};
}

bool mds_oracle(const TgrsCode& code) {
  std::size_t n = code.params.n, k = code.params.k;
  if (binomial_count(n, k) > 1'000'000) throw guard_error("minor enumeration C(n,k) exceeds 10^6");
  Matrix g = generator(code);
  const auto* fd = code.params.field.data();
  std::vector<std::uint64_t> scratch(k * k);
  auto t = first_subset(k);
  do {
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) scratch[i * k + j] = g.idx(i, t[j]);
    if (detail::det_inplace(*fd, scratch.data(), k) == 0) return false;
  } while (next_subset(t, n));
  return true;
}

namespace {

// Smallest l whose lower-left l x l block covers every nonzero entry of B,
// or 0 when B is zero.  diagonal_only additionally requires all nonzero
// entries on the block's diagonal (cells (k-l+r, r)).
std::size_t block_size(const Matrix& b, std::size_t k, bool diagonal_only) {
  std::size_t l = 0;
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      if (b.idx(i, j) == 0) continue;
      if (diagonal_only) {
        // cell (i, j) sits on the diagonal of the block in rows k-l..k-1 and
        // columns 0..l-1 exactly when i - (k - l) == j, i.e. l == k - i + j;
        // all nonzero cells must agree on that size
        std::size_t need = k - i + j;
        if (l != 0 && need != l)
          throw validation_error("coefficient matrix does not match the diagonal block shape");
        l = need;
      } else {
        l = std::max(l, std::max(k - i, j + 1));
      }
    }
  }
  return l;
}

}  // namespace

bool specialized_mds(const TgrsCode& code, TwistShape shape) {
  const auto& p = code.params;
  const Matrix& b = code.twist.entries;
  const auto* fd = p.field.data();
  std::size_t n = p.n, k = p.k;

  if (shape == TwistShape::top_left_cell || shape == TwistShape::bottom_left_cell) {
    std::size_t row = (shape == TwistShape::top_left_cell) ? 0 : k - 1;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j + k < n; ++j)
        if (b.idx(i, j) != 0 && !(i == row && j == 0))
          throw validation_error("coefficient matrix does not match the single-cell shape");
    std::uint64_t coeff = b.idx(row, 0);
    auto t = first_subset(k);
    if (shape == TwistShape::top_left_cell) {
      // MDS iff b * (-1)^k * prod_{i in T} a_i != 1 for every subset
      do {
        std::uint64_t prod = 1;
        for (std::size_t idx : t) prod = fd->mul(prod, p.alpha[idx].index());
        if (k % 2 == 1) prod = fd->neg(prod);
        if (fd->mul(coeff, prod) == 1) return false;
      } while (next_subset(t, n));
      return true;
    }
    // MDS iff b * sum_{i in T} a_i != -1 for every subset
    std::uint64_t minus_one = fd->neg(1);
    do {
      std::uint64_t sum = 0;
      for (std::size_t idx : t) sum = fd->add(sum, p.alpha[idx].index());
      if (fd->mul(coeff, sum) == minus_one) return false;
    } while (next_subset(t, n));
    return true;
  }

  bool diagonal = shape == TwistShape::diagonal_block;
  std::size_t l = block_size(b, k, diagonal);
  if (l == 0) return true;  // zero twist: every subset determinant is 1
  if (l >= std::min(k, n - k))
    throw validation_error("block size must satisfy l < min{k, n-k}");

  // Reduced l x l determinant: entry (r, s) = delta_{rs} + sum over block row
  // entries times F rows, restricted to monomial degrees k-l .. k-1.
  std::vector<std::uint64_t> m(l * l);
  auto t = first_subset(k);
  do {
    SubsetData sd = subset_data(p, t);
    for (std::size_t r = 0; r < l; ++r) {
      for (std::size_t s = 0; s < l; ++s) {
        std::uint64_t acc = (r == s) ? 1 : 0;
        if (diagonal) {
          acc = fd->add(acc, fd->mul(b.idx(k - l + r, r), sd.F.idx(r, k - l + s)));
        } else {
          for (std::size_t i = 0; i < l; ++i)
            acc = fd->add(acc, fd->mul(b.idx(k - l + r, i), sd.F.idx(i, k - l + s)));
        }
        m[r * l + s] = acc;
      }
    }
    if (detail::det_inplace(*fd, m.data(), l) == 0) return false;
  } while (next_subset(t, n));
  return true;
}

NmdsResult nmds_check(const TgrsCode& code) {
  std::size_t n = code.params.n, k = code.params.k;
  if (binomial_count(n, k + 1) > 1'000'000)
    throw guard_error("column-subset enumeration C(n,k+1) exceeds 10^6");
  Matrix g = generator(code);

  auto every_subset_has_rank = [&](std::size_t size, std::size_t want) {
    auto t = first_subset(size);
    do {
      if (g.select_columns(t).rank() != want) return false;
    } while (next_subset(t, n));
    return true;
  };

  bool mds = every_subset_has_rank(k, k);
  std::size_t code_class = 0, dual_class = 0;
  if (!mds) {
    code_class = every_subset_has_rank(k + 1, k) ? 1 : 2;
    dual_class = every_subset_has_rank(k - 1, k - 1) ? 1 : 2;
  }
  return NmdsResult{!mds && code_class == 1 && dual_class == 1, code_class, dual_class};
}

bool nmds_selfdual(const TgrsCode& code) {
  if (!selfdual_direct(code))
    throw validation_error("subset-determinant NMDS criterion requires a self-dual code");
  if (mds_fast(code).is_mds)
    throw validation_error("subset-determinant NMDS criterion requires a non-MDS code");
  std::size_t n = code.params.n, k = code.params.k;
  auto j = first_subset(k + 1);
  do {
    bool found = false;
    // the k-subsets of J are J minus one element
    for (std::size_t drop = 0; drop <= k && !found; ++drop) {
      std::vector<std::size_t> t;
      t.reserve(k);
      for (std::size_t i = 0; i <= k; ++i)
        if (i != drop) t.push_back(j[i]);
      SubsetData sd = subset_data(code.params, t);
      found = twist_subset_det(code, sd.F) != 0;
    }
    if (!found) return false;
  } while (next_subset(j, n));
  return true;
}

FullProductData full_product_data(const EvalParams& params) {
  std::size_t n = params.n;
  const auto* fd = params.field.data();
  std::vector<std::uint64_t> c(n + 1, 0);
  c[0] = 1;
  std::size_t deg = 0;
  for (const Felt& a : params.alpha) {
    ++deg;
    for (std::size_t j = deg; j > 0; --j) c[j] = fd->sub(c[j], fd->mul(a.index(), c[j - 1]));
  }
  std::vector<std::uint64_t> u(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t prod = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      prod = fd->mul(prod, fd->sub(params.alpha[i].index(), params.alpha[j].index()));
    }
    u[i] = fd->inv(prod);
  }
  FullProductData out;
  out.c_full.reserve(n + 1);
  for (std::uint64_t v : c) out.c_full.push_back(params.field.elem(v));
  out.u.reserve(n);
  for (std::uint64_t v : u) out.u.push_back(params.field.elem(v));
  return out;
}

Matrix parity_check(const TgrsCode& code) {
  const auto& p = code.params;
  std::size_t n = p.n, k = p.k, nk = n - k;
  const auto* fd = p.field.data();
  FullProductData fp = full_product_data(p);

  // [-J B^T | J]: row i of the left block is -(column n-k-1-i of B^T read as
  // row), i.e. entry (i, j) = -B[j][n-k-1-i]; right block is the reversal.
  Matrix jb(p.field, nk, n);
  for (std::size_t i = 0; i < nk; ++i) {
    for (std::size_t j = 0; j < k; ++j) jb.set_idx(i, j, fd->neg(code.twist.entries.idx(j, nk - 1 - i)));
    jb.set_idx(i, k + (nk - 1 - i), 1);
  }

  // Hankel matrix of c_full: entry (i, j) = c_{n-1-i-j}, zero below the
  // anti-diagonal.
  Matrix ch(p.field, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j + i < n; ++j) ch.set(i, j, fp.c_full[n - 1 - i - j]);

  std::vector<Felt> ud;
  ud.reserve(n);
  for (std::size_t i = 0; i < n; ++i) ud.push_back(fp.u[i] / p.nu[i]);

  Matrix h = jb * ch * vandermonde(p.field, p.alpha, n) * diagonal(p.field, ud);
  if (h.rank() != nk) throw internal_error("parity-check matrix rank is not n-k");
  if (!(generator(code) * h.transpose()).is_zero())
    throw internal_error("generator times parity-check transpose is nonzero");
  return h;
}

SelfdualCheck selfdual_sufficient(const TgrsCode& code) {
  const auto& p = code.params;
  std::size_t n = p.n, k = p.k;
  if (n != 2 * k) throw validation_error("self-duality requires n = 2k");
  FullProductData fp = full_product_data(p);

  Felt lambda = (p.nu[0] * p.nu[0]) / fp.u[0];
  bool cond1 = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (p.nu[i] * p.nu[i] != lambda * fp.u[i]) {
      cond1 = false;
      break;
    }
  }

  // D[i][j] = c_{n-1-i-j}; N[i][j] = c_{k-1-i-j} (zero when negative).
  Matrix d(p.field, k, k), nmat(p.field, k, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      d.set(i, j, fp.c_full[n - 1 - i - j]);
      if (i + j < k) nmat.set(i, j, fp.c_full[k - 1 - i - j]);
    }
  }
  const Matrix& b = code.twist.entries;
  Matrix bt = b.transpose();
  bool cond2 = bt * d * b == nmat * b + bt * nmat;

  SelfdualCheck out{cond1 && cond2, std::nullopt};
  if (cond1) out.lambda = lambda;
  return out;
}

bool selfdual_direct(const TgrsCode& code) {
  if (code.params.n != 2 * code.params.k) return false;
  Matrix g = generator(code);
  return (g * g.transpose()).is_zero();
}

}  // namespace tgrs
