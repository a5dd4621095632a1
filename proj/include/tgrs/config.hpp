// Code description files: a small key-value text format describing one
// twisted code family — field, length, dimension, evaluation points, column
// multipliers, and the twist matrix with optional '*' wildcard cells (the
// variable cells of a census or symbolic run).
#pragma once

#include <string>
#include <vector>

#include "tgrs/code.hpp"

namespace tgrs {

// Parsed form of a description file.
//
// Grammar (line-oriented; '#' starts a comment anywhere on a line):
//   p = <prime>                     characteristic, required
//   m = <degree>                    extension degree, default 1
//   modulus = c0, c1, ..., cm       reduction polynomial coefficients
//                                   (constant term first), optional
//   n = <length>   k = <dimension>  required
//   alpha = e1, ..., en             evaluation points, required
//   nu = e1, ..., en                column multipliers, default all ones
//   B = e, *, ... ; ... ; ...       k rows of n-k cells; '*' marks a
//                                   wildcard cell, required
//   ref = e1, ..., ew               one value per wildcard cell, optional
// Element tokens use the field's text form: decimal for prime fields,
// "z^j" / "0" / "[c0,c1,...]" for extension fields.
struct CodeConfig {
  Field field;
  EvalParams params;
  Matrix base;             // fixed cells; wildcard cells hold zero
  std::vector<bool> mask;  // row-major k x (n-k), true at wildcard cells
  std::vector<Felt> ref;   // wildcard values in row-major cell order; may be empty

  std::size_t wildcards() const;

  // Twist matrix with the wildcard cells filled from `values` in row-major
  // cell order.  Throws when the count does not match.
  Matrix filled(const std::vector<Felt>& values) const;

  // The described code.  Requires either no wildcards (fixed B) or a `ref`
  // assignment to substitute; throws validation_error otherwise.
  TgrsCode code() const;
};

CodeConfig parse_config(const std::string& text);
CodeConfig load_config(const std::string& path);  // reads a file, then parses

}  // namespace tgrs
