// Exhaustive membership census over twist-matrix grids: enumerate every
// assignment of field values to a set of free cells and count the
// assignments whose twisted code is MDS (the membership set of the
// coefficient-matrix criterion).
#pragma once

#include <atomic>
#include <cstdint>
#include <string>
#include <vector>

#include "tgrs/code.hpp"

namespace tgrs {

// Enumeration budget tiers: a census whose grid exceeds the tier budget is
// rejected up front instead of silently running for hours.
enum class CensusTier { quick, standard, longrun };

std::uint64_t tier_budget(CensusTier tier);  // 10^6 / 10^8 / 10^10
CensusTier parse_tier(const std::string& name);  // "quick" | "standard" | "long"
std::string tier_name(CensusTier tier);

struct CensusOptions {
  unsigned threads = 1;          // worker count; 0 means 1
  std::size_t sample_limit = 5;  // member matrices retained, in enumeration order
  CensusTier tier = CensusTier::standard;
  // Cooperative stop: when set and it becomes true, workers finish their
  // current line and return a partial tally (complete = false).
  const std::atomic<bool>* stop = nullptr;
};

struct CensusReport {
  std::uint64_t total = 0;        // assignments in the grid (q^w)
  std::uint64_t processed = 0;    // assignments actually enumerated
  std::uint64_t omega_count = 0;  // processed assignments whose code is MDS
  bool complete = true;           // false when stopped before the full grid
  std::vector<Matrix> sample_members;  // first members, enumeration order
  double elapsed_seconds = 0.0;
};

// Census over the cells of `mask` (row-major over the k x (n-k) coefficient
// matrix).  Fixed values come from `base`; entries of `base` at masked cells
// are ignored.  Assignments run in odometer order over the masked cells
// (row-major cell order, last cell fastest) with element indices 0..q-1.
// The count, the samples, and their order are independent of the thread
// count.  Guards: grid size q^w within the tier budget and C(n,k) <= 10^6
// for the subset table.
CensusReport census_omega(const EvalParams& params, const Matrix& base,
                          const std::vector<bool>& mask,
                          const CensusOptions& opts = {});

}  // namespace tgrs
