#include "tgrs/grstest.hpp"

namespace tgrs {

SystematicForm systematic_form(const Matrix& g) {
  std::size_t k = g.rows(), n = g.cols();
  if (k == 0 || n < k) throw validation_error("generator must be k x n with k >= 1, n >= k");
  std::vector<std::size_t> lead(k);
  for (std::size_t i = 0; i < k; ++i) lead[i] = i;
  auto qinv = g.select_columns(lead).inverse();
  if (!qinv) throw validation_error("leading k x k block of the generator is singular");
  std::vector<std::size_t> rest(n - k);
  for (std::size_t j = 0; j < n - k; ++j) rest[j] = k + j;
  Matrix m = *qinv * g.select_columns(rest);

  bool all_nonzero = true;
  for (std::size_t i = 0; i < k && all_nonzero; ++i)
    for (std::size_t j = 0; j < n - k; ++j)
      if (m.at(i, j).is_zero()) {
        all_nonzero = false;
        break;
      }
  SystematicForm out{m, std::nullopt};
  if (all_nonzero) {
    Matrix mp(m.field(), k, n - k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < n - k; ++j) mp.set(i, j, m.at(i, j).inverse());
    out.mprime = std::move(mp);
  }
  return out;
}

std::size_t schur_square_dim(const Matrix& g) {
  std::size_t k = g.rows(), n = g.cols();
  Matrix prod(g.field(), k * (k + 1) / 2, n);
  std::size_t r = 0;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j, ++r)
      for (std::size_t c = 0; c < n; ++c) prod.set(r, c, g.at(i, c) * g.at(j, c));
  return prod.rank();
}

const char* to_string(GrsVerdict v) {
  switch (v) {
    case GrsVerdict::NotMDS: return "not-mds";
    case GrsVerdict::GRS: return "grs";
    case GrsVerdict::NonGrsMDS: return "non-grs-mds";
  }
  throw internal_error("unknown verdict");
}

namespace {

// Any 2x2 minor zero -> not GRS; want all nonzero.
bool all_2x2_nonzero(const Matrix& m) {
  for (std::size_t i1 = 0; i1 < m.rows(); ++i1)
    for (std::size_t i2 = i1 + 1; i2 < m.rows(); ++i2)
      for (std::size_t j1 = 0; j1 < m.cols(); ++j1)
        for (std::size_t j2 = j1 + 1; j2 < m.cols(); ++j2) {
          Felt d = m.at(i1, j1) * m.at(i2, j2) - m.at(i1, j2) * m.at(i2, j1);
          if (d.is_zero()) return false;
        }
  return true;
}

// Want all 3x3 minors zero.
bool all_3x3_zero(const Matrix& m) {
  std::size_t rows = m.rows(), cols = m.cols();
  if (rows < 3 || cols < 3) return true;
  std::vector<std::size_t> ri{0, 1, 2};
  do {
    std::vector<std::size_t> cj{0, 1, 2};
    do {
      Matrix sub(m.field(), 3, 3);
      for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b) sub.set(a, b, m.at(ri[a], cj[b]));
      if (!sub.det().is_zero()) return false;
    } while (next_subset(cj, cols));
  } while (next_subset(ri, rows));
  return true;
}

}  // namespace

GrsVerdict grs_classify(const TgrsCode& code) {
  if (!mds_fast(code).is_mds) return GrsVerdict::NotMDS;
  std::size_t k = code.params.k, n = code.params.n;
  if (std::min(k, n - k) < 3) return GrsVerdict::GRS;
  SystematicForm sf = systematic_form(generator(code));
  // an MDS code always has a fully nonzero right block, but the membership
  // conditions are an equivalence, so a zero entry simply means non-GRS
  if (!sf.mprime) return GrsVerdict::NonGrsMDS;
  if (!all_2x2_nonzero(*sf.mprime)) return GrsVerdict::NonGrsMDS;
  if (!all_3x3_zero(*sf.mprime)) return GrsVerdict::NonGrsMDS;
  return GrsVerdict::GRS;
}

std::optional<std::size_t> nongrs_block_size(const Matrix& b, std::size_t n, std::size_t k) {
  if (b.rows() != k || b.cols() != n - k) throw validation_error("twist matrix must be k x (n-k)");
  std::size_t l = 0;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n - k; ++j) {
      if (b.idx(i, j) == 0) continue;
      // smallest lower-triangular corner block containing (i, j): the cell
      // must satisfy both i >= k-l and j <= i-(k-l), i.e. l >= k-i+j
      l = std::max(l, k - i + j);
    }
  if (l == 0) return std::nullopt;
  std::size_t bound_n = (n + 1 > 2 * k) ? n + 1 - 2 * k : 0;
  if (l >= std::min(k, bound_n)) return std::nullopt;
  return l;
}

}  // namespace tgrs
