// MDS / NMDS / self-dual classification machinery: subset polynomial data
// (the c/e recursions and the reduction matrix F_T), the fast subset
// determinant MDS test with its brute-force minor oracle, closed-form tests
// for structured twist shapes, near-MDS checks, the explicit parity-check
// construction, and self-duality tests.
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tgrs/code.hpp"

namespace tgrs {

// Lexicographic iteration over sorted k-subsets of {0,...,n-1}.
std::vector<std::size_t> first_subset(std::size_t k);
bool next_subset(std::vector<std::size_t>& t, std::size_t n);  // false once exhausted

// Per-subset polynomial data for a k-subset T of evaluation points:
//   c: coefficients of prod_{i in T}(x - a_i) = sum_j c_j x^{k-j}, c_0 = 1;
//   e: the inverse-band recursion e_0 = 1, e_i = -sum_{j<i} e_j c_{i-j};
//   F: (n-k) x k matrix with F[t][s] = -sum_{i<=min(t,s)} c_{i+k-s} e_{t-i},
//      the unique expression of a^{k+t} in powers a^0..a^{k-1} on T.
struct SubsetData {
  std::vector<std::size_t> subset;
  std::vector<Felt> c;
  std::vector<Felt> e;
  Matrix F;
};

SubsetData subset_data(const EvalParams& params, const std::vector<std::size_t>& subset);

struct MdsResult {
  bool is_mds;
  // First subset (lex order, 0-based indices) with det(I + B F_T) = 0.
  std::optional<std::vector<std::size_t>> witness;
};

// MDS iff det(I_k + B F_T) != 0 for every k-subset T.
MdsResult mds_fast(const TgrsCode& code);

// Brute-force ground truth: all k x k minors of the generator are nonzero.
// Guard: C(n,k) <= 10^6.
bool mds_oracle(const TgrsCode& code);

// Structured twist shapes with closed-form or reduced MDS conditions.
enum class TwistShape {
  top_left_cell,     // only b_{0,0}: product criterion per subset
  bottom_left_cell,  // only b_{k-1,0}: sum criterion per subset
  diagonal_block,    // diagonal l x l block in the lower-left corner
  full_block         // full l x l block in the lower-left corner
};

// Evaluates the shape's reduced MDS condition over all k-subsets.  Throws
// validation_error when B does not match the requested shape (block shapes
// additionally require l < min{k, n-k}).
bool specialized_mds(const TgrsCode& code, TwistShape shape);

struct NmdsResult {
  bool is_nmds;
  // Singleton-defect classes: 0 = defect zero (MDS), 1 = defect exactly one,
  // 2 = defect greater than one.
  std::size_t code_defect_class;
  std::size_t dual_defect_class;
};

// Near-MDS test by column-subset ranks of the generator.
// Guard: C(n,k+1) <= 10^6.
NmdsResult nmds_check(const TgrsCode& code);

// Subset-determinant NMDS criterion for self-dual, non-MDS codes: true iff
// every (k+1)-subset J contains a k-subset T with det(I + B F_T) != 0.
// Preconditions (validation_error otherwise): selfdual_direct(code) holds and
// mds_fast(code) fails.
bool nmds_selfdual(const TgrsCode& code);

// Data of the full evaluation-point set:
//   c_full: coefficients of prod_{i=1..n}(x - a_i) = sum_j c_j x^{n-j};
//   u:      u_i = prod_{j != i} (a_i - a_j)^{-1}.
struct FullProductData {
  std::vector<Felt> c_full;
  std::vector<Felt> u;
};

FullProductData full_product_data(const EvalParams& params);

// Explicit (n-k) x n parity-check matrix [-J B^T | J] C V U with J the
// reversal matrix, C the Hankel matrix of c_full, V the full Vandermonde and
// U = diag(u_i / v_i).  Verifies G H^T = 0 and rank(H) = n-k before
// returning.
Matrix parity_check(const TgrsCode& code);

struct SelfdualCheck {
  bool ok;                     // both conditions hold
  std::optional<Felt> lambda;  // scaling constant when condition 1 holds
};

// Sufficient self-duality test for n = 2k: (1) v_i^2 = lambda u_i for all i
// with lambda = v_1^2 / u_1, and (2) B^T D B = N B + B^T N for the Hankel
// blocks D, N of c_full.  Throws validation_error when n != 2k.
SelfdualCheck selfdual_sufficient(const TgrsCode& code);

// Definitional test: n = 2k and G G^T = 0.
bool selfdual_direct(const TgrsCode& code);

// Number of k-subsets of an n-set, saturating at 2^64-1 (used by guards).
std::uint64_t binomial_count(std::size_t n, std::size_t k);

}  // namespace tgrs
