// Command backends shared by the command-line tool and the test suites:
// each takes a parsed code description and returns the report document the
// tool prints.  Keeping these in the library makes every surface testable
// without spawning processes.
#pragma once

#include <string>

#include "tgrs/census.hpp"
#include "tgrs/config.hpp"
#include "tgrs/report.hpp"

namespace tgrs {

struct CommandOptions {
  unsigned threads = 1;
  std::size_t limit = 5;  // census sample members retained
  CensusTier tier = CensusTier::standard;
  const std::atomic<bool>* stop = nullptr;  // cooperative census interrupt
};

// Full classification of a fixed code (no wildcards): MDS with witness,
// distance, near-MDS, self-duality, membership verdict, Schur dimension.
ordered_json cmd_check(const CodeConfig& config);

// Exhaustive wildcard-grid census; elapsed_out (when given) receives the
// wall time, which the serialized report deliberately omits, and raw_out
// (when given) the underlying report (for CSV emission of the members).
ordered_json cmd_census(const CodeConfig& config, const CommandOptions& opts,
                        double* elapsed_out = nullptr, CensusReport* raw_out = nullptr);

// Parity-check matrix with verification flags.
ordered_json cmd_parity(const CodeConfig& config);

// Dual-code generator (the parity-check rows) with its dimension.
ordered_json cmd_dual(const CodeConfig& config);

// Schur square dimension against the evaluation-code expectation.
ordered_json cmd_schur(const CodeConfig& config);

// Membership verdict only.
ordered_json cmd_grs(const CodeConfig& config);

// Symbolic pipeline at the reference assignment: p, the numerator grid, the
// cleared minor polynomial (monic), its zero count, and the grid census.
ordered_json cmd_polyp(const CodeConfig& config);

// Field facts: order, modulus, generator, and the element list for small q.
ordered_json cmd_field_info(const Field& field);

}  // namespace tgrs
