// Twisted generalized Reed-Solomon codes: evaluation parameters, the twist
// coefficient matrix, generator construction (direct evaluation and the
// factored [I|B]*V*diag(nu) form), encoding, brute-force minimum distance,
// and code equivalence helpers.
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tgrs/matrix.hpp"

namespace tgrs {

// Evaluation data shared by every code built here: n distinct points and n
// nonzero column multipliers over one field.
struct EvalParams {
  Field field;
  std::size_t n, k;
  std::vector<Felt> alpha;
  std::vector<Felt> nu;

  // Validates 0 < k < n <= q, distinct alpha, nonzero nu.  Omitting nu means
  // all ones.
  EvalParams(Field field, std::size_t n, std::size_t k, std::vector<Felt> alpha,
             std::optional<std::vector<Felt>> nu = std::nullopt);
};

// k x (n-k) coefficient matrix of twist terms, plus a mask of the positions
// that are allowed to be nonzero (the free cells of a structured family or
// the variable cells of a search).  Entries must be zero off the mask.
struct TwistMatrix {
  Matrix entries;
  std::vector<bool> mask;  // row-major, entries.rows() * entries.cols()

  // Mask defaults to the support of the entries.
  explicit TwistMatrix(Matrix entries_);
  TwistMatrix(Matrix entries_, std::vector<bool> mask_);

  bool free_at(std::size_t i, std::size_t j) const { return mask[i * entries.cols() + j]; }
};

struct TgrsCode {
  EvalParams params;
  TwistMatrix twist;

  TgrsCode(EvalParams params_, TwistMatrix twist_);
};

// Basis of the twisted polynomial space: k coefficient vectors of length n,
// g_i having coefficient 1 at degree i and the row-i twist entries at
// degrees k..n-1.
std::vector<std::vector<Felt>> twisted_basis(const TgrsCode& code);

enum class GenMode { direct, factored };

// k x n generator matrix.  direct evaluates nu_j * g_i(alpha_j); factored
// computes [I_k | B] * V_n * diag(nu).  The two agree identically.
Matrix generator(const TgrsCode& code, GenMode mode = GenMode::direct);

// message (length k) -> codeword (length n), i.e. message * G.
std::vector<Felt> encode(const TgrsCode& code, const std::vector<Felt>& message);

struct DistanceResult {
  std::size_t d;       // minimum nonzero Hamming weight
  std::size_t defect;  // n - k + 1 - d
};

// Minimum weight over the row space of a generator matrix, by enumerating
// all q^rows combinations.  Guard: q^rows <= 10^7.
std::size_t brute_min_weight(const Matrix& gen);
DistanceResult brute_min_distance(const TgrsCode& code);

// Weight enumerator of the row space: counts[w] = number of codewords of
// weight w.  Same enumeration guard as brute_min_weight.
std::vector<std::size_t> weight_distribution(const Matrix& gen);

// Monomial equivalence: each row c becomes (scale_j * c_{perm[j]})_j.
// perm is a 0-based bijection on columns; scale entries must be nonzero.
Matrix apply_equivalence(const Matrix& code_words, const std::vector<std::size_t>& perm,
                         const std::vector<Felt>& scale);

// True iff the row spaces coincide (canonical rref comparison).
bool code_equal(const Matrix& g1, const Matrix& g2);

}  // namespace tgrs
