#include "tgrs/code.hpp"

#include <algorithm>
#include <unordered_set>

#include "tgrs/errors.hpp"

namespace tgrs {

namespace {

constexpr std::uint64_t kWeightEnumGuard = 10'000'000;

void check_elements(const Field& field, const std::vector<Felt>& v, const char* what) {
  for (const Felt& e : v) {
    if (!detail::same_field(field.data(), e.field_data()))
      throw validation_error(std::string(what) + " entry from a different field");
  }
}

}  // namespace

EvalParams::EvalParams(Field field_, std::size_t n_, std::size_t k_, std::vector<Felt> alpha_,
                       std::optional<std::vector<Felt>> nu_)
    : field(std::move(field_)), n(n_), k(k_), alpha(std::move(alpha_)) {
  if (k == 0 || k >= n) throw validation_error("need 0 < k < n");
  if (n > field.order()) throw validation_error("length exceeds field size (points must be distinct)");
  if (alpha.size() != n) throw validation_error("alpha must have n entries");
  check_elements(field, alpha, "alpha");
  std::unordered_set<std::uint64_t> seen;
  for (const Felt& a : alpha) {
    if (!seen.insert(a.index()).second)
      throw validation_error("alpha entries must be pairwise distinct (duplicate " + field.str(a) + ")");
  }
  if (nu_) {
    nu = std::move(*nu_);
    if (nu.size() != n) throw validation_error("nu must have n entries");
    check_elements(field, nu, "nu");
    for (const Felt& v : nu)
      if (v.is_zero()) throw validation_error("nu entries must be nonzero");
  } else {
    nu.assign(n, field.one());
  }
}

TwistMatrix::TwistMatrix(Matrix entries_) : entries(std::move(entries_)) {
  mask.resize(entries.rows() * entries.cols());
  for (std::size_t i = 0; i < mask.size(); ++i) mask[i] = entries.raw()[i] != 0;
}

TwistMatrix::TwistMatrix(Matrix entries_, std::vector<bool> mask_)
    : entries(std::move(entries_)), mask(std::move(mask_)) {
  if (mask.size() != entries.rows() * entries.cols())
    throw validation_error("mask size does not match the coefficient matrix");
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (!mask[i] && entries.raw()[i] != 0)
      throw validation_error("coefficient entry nonzero outside the mask");
  }
}

TgrsCode::TgrsCode(EvalParams params_, TwistMatrix twist_)
    : params(std::move(params_)), twist(std::move(twist_)) {
  if (twist.entries.rows() != params.k || twist.entries.cols() != params.n - params.k)
    throw validation_error("coefficient matrix must be k x (n-k)");
  if (twist.entries.field() != params.field)
    throw validation_error("coefficient matrix field mismatch");
}

std::vector<std::vector<Felt>> twisted_basis(const TgrsCode& code) {
  const auto& p = code.params;
  std::vector<std::vector<Felt>> basis(p.k, std::vector<Felt>(p.n, p.field.zero()));
  for (std::size_t i = 0; i < p.k; ++i) {
    basis[i][i] = p.field.one();
    for (std::size_t j = 0; j + p.k < p.n; ++j) basis[i][p.k + j] = code.twist.entries.at(i, j);
  }
  return basis;
}

Matrix generator(const TgrsCode& code, GenMode mode) {
  const auto& p = code.params;
  if (mode == GenMode::factored) {
    Matrix ib = Matrix::identity(p.field, p.k).hstack(code.twist.entries);
    return ib * vandermonde(p.field, p.alpha, p.n) * diagonal(p.field, p.nu);
  }
  auto basis = twisted_basis(code);
  const auto* fd = p.field.data();
  Matrix g(p.field, p.k, p.n);
  for (std::size_t j = 0; j < p.n; ++j) {
    std::uint64_t a = p.alpha[j].index();
    for (std::size_t i = 0; i < p.k; ++i) {
      // Horner evaluation of g_i at alpha_j.
      std::uint64_t acc = 0;
      for (std::size_t t = p.n; t-- > 0;) acc = fd->add(fd->mul(acc, a), basis[i][t].index());
      g.set_idx(i, j, fd->mul(acc, p.nu[j].index()));
    }
  }
  return g;
}

std::vector<Felt> encode(const TgrsCode& code, const std::vector<Felt>& message) {
  const auto& p = code.params;
  if (message.size() != p.k) throw validation_error("message length must equal k");
  check_elements(p.field, message, "message");
  Matrix g = generator(code);
  const auto* fd = p.field.data();
  std::vector<Felt> out;
  out.reserve(p.n);
  for (std::size_t j = 0; j < p.n; ++j) {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < p.k; ++i) acc = fd->add(acc, fd->mul(message[i].index(), g.idx(i, j)));
    out.push_back(p.field.elem(acc));
  }
  return out;
}

namespace {

// Walks all q^rows row combinations in odometer order over element indices
// (last coefficient fastest), maintaining the current codeword incrementally,
// and feeds each nonzero-coefficient codeword's weight to sink.
template <typename Sink>
void enumerate_row_space(const Matrix& gen, Sink&& sink) {
  const auto* fd = gen.field().data();
  std::uint64_t q = gen.field().order();
  std::size_t rows = gen.rows(), n = gen.cols();
  if (rows == 0) return;
  double space = 1;
  for (std::size_t i = 0; i < rows; ++i) space *= static_cast<double>(q);
  if (space > static_cast<double>(kWeightEnumGuard))
    throw guard_error("row-space enumeration q^k exceeds 10^7");

  // Stepping a coefficient from element index v to v+1 adds
  // (elem(v+1) - elem(v)) * row to the running word; index order is not an
  // additive walk in extension fields, so the deltas are tabulated.
  std::vector<std::uint64_t> delta(q);
  for (std::uint64_t v = 0; v + 1 < q; ++v) delta[v] = fd->sub(v + 1, v);
  delta[q - 1] = fd->neg(q - 1);  // wrap back to elem(0) = 0

  std::vector<std::uint64_t> coeff(rows, 0);
  std::vector<std::uint64_t> word(n, 0);
  for (;;) {
    bool rolled_over = false;
    std::size_t pos = rows;
    while (pos-- > 0) {
      std::uint64_t v = coeff[pos];
      std::uint64_t d = delta[v];
      for (std::size_t j = 0; j < n; ++j) word[j] = fd->add(word[j], fd->mul(d, gen.idx(pos, j)));
      if (v + 1 < q) {
        coeff[pos] = v + 1;
        break;
      }
      coeff[pos] = 0;
      if (pos == 0) rolled_over = true;
    }
    if (rolled_over) return;
    std::size_t w = 0;
    for (std::size_t j = 0; j < n; ++j) w += word[j] != 0;
    sink(w);
  }
}

}  // namespace

std::size_t brute_min_weight(const Matrix& gen) {
  std::size_t best = gen.cols() + 1;
  enumerate_row_space(gen, [&](std::size_t w) {
    if (w != 0 && w < best) best = w;
  });
  if (best > gen.cols()) throw validation_error("zero code has no minimum distance");
  return best;
}

DistanceResult brute_min_distance(const TgrsCode& code) {
  std::size_t d = brute_min_weight(generator(code));
  return DistanceResult{d, code.params.n - code.params.k + 1 - d};
}

std::vector<std::size_t> weight_distribution(const Matrix& gen) {
  std::vector<std::size_t> counts(gen.cols() + 1, 0);
  counts[0] = 1;  // zero codeword
  enumerate_row_space(gen, [&](std::size_t w) { ++counts[w]; });
  return counts;
}

Matrix apply_equivalence(const Matrix& code_words, const std::vector<std::size_t>& perm,
                         const std::vector<Felt>& scale) {
  std::size_t n = code_words.cols();
  if (perm.size() != n) throw validation_error("permutation length must equal n");
  std::vector<bool> hit(n, false);
  for (std::size_t p : perm) {
    if (p >= n || hit[p]) throw validation_error("not a permutation of the columns");
    hit[p] = true;
  }
  if (scale.size() != n) throw validation_error("scale vector length must equal n");
  const auto* fd = code_words.field().data();
  for (const Felt& s : scale) {
    if (!detail::same_field(fd, s.field_data())) throw validation_error("scale entry from a different field");
    if (s.is_zero()) throw validation_error("scale entries must be nonzero");
  }
  Matrix out(code_words.field(), code_words.rows(), n);
  for (std::size_t i = 0; i < code_words.rows(); ++i)
    for (std::size_t j = 0; j < n; ++j)
      out.set_idx(i, j, fd->mul(scale[j].index(), code_words.idx(i, perm[j])));
  return out;
}

bool code_equal(const Matrix& g1, const Matrix& g2) {
  if (g1.field() != g2.field() || g1.cols() != g2.cols())
    throw validation_error("codes must share a field and length");
  auto r1 = g1.rref(), r2 = g2.rref();
  if (r1.rank != r2.rank) return false;
  for (std::size_t i = 0; i < r1.rank; ++i)
    for (std::size_t j = 0; j < g1.cols(); ++j)
      if (r1.mat.idx(i, j) != r2.mat.idx(i, j)) return false;
  return true;
}

}  // namespace tgrs
