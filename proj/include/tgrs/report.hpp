// Aggregate classification of a single code plus stable serialization
// helpers: JSON documents with fixed key order and a deterministic
// plain-text rendering, so identical inputs always produce identical bytes.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tgrs/census.hpp"
#include "tgrs/classify.hpp"
#include "tgrs/grstest.hpp"

namespace tgrs {

using ordered_json = nlohmann::ordered_json;

// Everything the classifiers can say about one fixed code.  Optional fields
// stay empty when a guard keeps that check from running (the skip is
// recorded in `notes`) or when the check does not apply (self-duality for
// n != 2k).
struct ClassificationReport {
  bool is_mds = false;
  std::optional<std::vector<std::size_t>> witness_subset;  // 0-based internally
  std::optional<std::size_t> d, defect;                    // brute-force distance
  std::optional<bool> is_nmds;
  std::optional<std::size_t> code_defect_class, dual_defect_class;
  std::optional<bool> is_selfdual;             // G G^T = 0 (n = 2k only)
  std::optional<bool> selfdual_sufficient_ok;  // structured sufficient test
  GrsVerdict grs_status = GrsVerdict::NotMDS;
  std::size_t schur_dim = 0;
  std::vector<std::string> notes;  // one line per skipped check
};

// Runs every applicable classifier; guard violations skip that field only.
ClassificationReport classify_code(const TgrsCode& code);

// JSON forms.  Subsets are 1-based in output; matrices use the row text
// form; census serialization omits elapsed time so repeated runs match.
ordered_json to_json(const ClassificationReport& r);
ordered_json to_json(const CensusReport& r);

// Deterministic indented key/value rendering of a report document.
std::string render_text(const ordered_json& doc);

// CSV of census sample members: header b_i_j per cell, one row per member.
std::string census_csv(const CensusReport& r);

}  // namespace tgrs
