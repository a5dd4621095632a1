#pragma once

#include <cstddef>
#include <optional>

#include "tgrs/classify.hpp"

namespace tgrs {

// Row reduction of a full-rank k x n generator to [I_k | m].
struct SystematicForm {
  Matrix m;                      // k x (n-k) right block
  std::optional<Matrix> mprime;  // entrywise inverse of m; absent if any entry is zero
};

// Reduces against the first k columns; throws validation_error when that
// leading block is singular (never the case for an MDS code).
SystematicForm systematic_form(const Matrix& g);

// Dimension of the span of all componentwise products of codeword pairs,
// computed as the rank of the k(k+1)/2 x n matrix of unordered row-pair
// products of the generator.
std::size_t schur_square_dim(const Matrix& g);

enum class GrsVerdict { NotMDS, GRS, NonGrsMDS };

const char* to_string(GrsVerdict v);

// Decides whether the code is generalized Reed-Solomon: non-MDS codes are
// NotMDS; MDS codes with min{k, n-k} < 3 are always GRS; otherwise the code
// is GRS exactly when the entrywise inverse of its systematic right block
// has all 2x2 minors nonzero and all 3x3 minors zero.
GrsVerdict grs_classify(const TgrsCode& code);

// When the twist matrix is nonzero only inside a lower-triangular l x l
// corner block (rows k-l..k-1, columns 0..l-1) with l < min{k, n-2k+1},
// returns that minimal l: such codes have a Schur square of dimension at
// least 2k and are therefore not GRS. Returns absent for the zero matrix
// (untwisted codes are GRS) and for any other shape or out-of-range size.
std::optional<std::size_t> nongrs_block_size(const Matrix& b, std::size_t n, std::size_t k);

}  // namespace tgrs
