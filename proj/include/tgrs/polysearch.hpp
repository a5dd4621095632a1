#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tgrs/grstest.hpp"

namespace tgrs {

// Orders exponent vectors graded-lexicographically, largest first, so map
// iteration yields the canonical serialization order.
struct GradedLexDesc {
  bool operator()(const std::vector<unsigned>& a, const std::vector<unsigned>& b) const;
};

// Sparse multivariate polynomial over a finite field with a fixed number of
// variables. No zero coefficients are stored.
class MultiPoly {
 public:
  using TermMap = std::map<std::vector<unsigned>, Felt, GradedLexDesc>;

  MultiPoly(const Field& f, std::size_t nvars) : field_(f), nvars_(nvars) {}
  static MultiPoly constant(const Field& f, std::size_t nvars, const Felt& c);
  static MultiPoly variable(const Field& f, std::size_t nvars, std::size_t index);

  const Field& field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  // Accumulates c * x^exp, erasing the term if the sum cancels.
  void add_term(const std::vector<unsigned>& exp, const Felt& c);

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly scaled(const Felt& c) const;
  bool operator==(const MultiPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  Felt eval(const std::vector<Felt>& assignment) const;
  unsigned max_var_degree() const;
  // Largest term in graded-lex order; absent for the zero polynomial.
  std::optional<std::pair<std::vector<unsigned>, Felt>> leading_term() const;
  // Scaled so the leading coefficient is 1; zero stays zero.
  MultiPoly monic() const;

  // Terms as "c*x0^d0*x1^d1" joined by " + ", graded-lex descending; "0" when
  // zero. Parsing is lenient about whitespace and accepts "**" for "^".
  std::string str() const;
  static MultiPoly parse(const Field& f, std::size_t nvars, const std::string& text);

 private:
  Field field_;
  std::size_t nvars_;
  TermMap terms_;
};

// Symbolic systematic-form data for a masked twist grid: one variable per
// true mask cell (row-major). p is the determinant of the leading k x k
// block of the symbolic generator; pij[i][j] / p is entry (i, j) of the
// systematic right block as a rational function of the free cells.
struct SymbolicSystem {
  EvalParams params;
  std::vector<bool> mask;                   // row-major k x (n-k)
  std::size_t nvars;
  std::vector<std::vector<int>> varmap;     // variable index per cell, -1 if fixed zero
  MultiPoly p;
  std::vector<std::vector<MultiPoly>> pij;  // k x (n-k)
};

// Builds the system by cofactor expansion; every output polynomial has
// degree at most 1 in each variable. Guard: at most 12 variables.
SymbolicSystem symbolic_system(const EvalParams& params, const std::vector<bool>& mask);

// Signed sum over the six permutations of a 3x3 cell selection, each term
// the product of the six complementary pij polynomials: the numerator of
// the selected 3x3 minor of the entrywise-inverse systematic block, up to
// the factor p^3 / (product of the nine selected pij).
MultiPoly big_P(const SymbolicSystem& sys, const std::array<std::size_t, 3>& rowsel,
                const std::array<std::size_t, 3>& colsel);

// Exhaustive zero count over the full assignment grid. Guard: q^nvars <= 1e8.
std::uint64_t count_zeros(const MultiPoly& poly);

struct CensusTallies {
  std::uint64_t mds = 0;
  std::uint64_t grs = 0;
  std::uint64_t nongrs = 0;
  std::uint64_t pzeros = 0;
};

// Classifies every assignment of the masked cells, tallying MDS / GRS /
// non-GRS counts, and counts the zeros of the minor polynomial chosen at
// the first non-GRS assignment (lexicographically first 3x3 selection with
// a nonzero minor there). Checks that every GRS assignment is a zero of
// that polynomial. Guard: q^nvars <= 1e8.
CensusTallies census_classify(const EvalParams& params, const std::vector<bool>& mask);

}  // namespace tgrs
