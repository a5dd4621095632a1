#include "tgrs/commands.hpp"

#include <algorithm>
#include <array>

#include "tgrs/polysearch.hpp"

namespace tgrs {

namespace {

ordered_json felt_list(const Field& f, const std::vector<Felt>& v) {
  ordered_json out = ordered_json::array();
  for (const Felt& e : v) out.push_back(f.str(e));
  return out;
}

// Input echo common to every per-code report.
ordered_json config_header(const CodeConfig& c) {
  ordered_json doc;
  doc["q"] = c.field.order();
  doc["characteristic"] = c.field.characteristic();
  doc["degree"] = c.field.extension_degree();
  doc["n"] = c.params.n;
  doc["k"] = c.params.k;
  doc["alpha"] = felt_list(c.field, c.params.alpha);
  doc["nu"] = felt_list(c.field, c.params.nu);
  return doc;
}

TgrsCode fixed_code(const CodeConfig& c, const char* command) {
  if (c.wildcards() != 0 && c.ref.empty())
    throw validation_error(std::string(command) +
                           " needs a single code: fill the '*' cells or add a "
                           "ref assignment");
  return c.code();
}

}  // namespace

ordered_json cmd_check(const CodeConfig& config) {
  TgrsCode code = fixed_code(config, "check");
  ordered_json doc = config_header(config);
  doc["B"] = code.twist.entries.str();
  ordered_json body = to_json(classify_code(code));
  doc.update(body);
  return doc;
}

ordered_json cmd_census(const CodeConfig& config, const CommandOptions& opts,
                        double* elapsed_out, CensusReport* raw_out) {
  CensusOptions copts;
  copts.threads = opts.threads;
  copts.sample_limit = opts.limit;
  copts.tier = opts.tier;
  copts.stop = opts.stop;
  CensusReport r = census_omega(config.params, config.base, config.mask, copts);
  if (elapsed_out != nullptr) *elapsed_out = r.elapsed_seconds;
  if (raw_out != nullptr) *raw_out = r;
  ordered_json doc = config_header(config);
  doc["B"] = config.base.str();
  ordered_json mask = ordered_json::array();
  for (bool b : config.mask) mask.push_back(b ? 1 : 0);
  doc["mask"] = mask;
  doc["wildcards"] = config.wildcards();
  doc.update(to_json(r));
  return doc;
}

ordered_json cmd_parity(const CodeConfig& config) {
  TgrsCode code = fixed_code(config, "parity");
  Matrix h = parity_check(code);
  Matrix g = generator(code);
  ordered_json doc = config_header(config);
  doc["B"] = code.twist.entries.str();
  doc["H"] = h.str();
  doc["rank"] = h.rank();
  doc["rank_expected"] = config.params.n - config.params.k;
  doc["orthogonal"] = (g * h.transpose()).is_zero();
  return doc;
}

ordered_json cmd_dual(const CodeConfig& config) {
  TgrsCode code = fixed_code(config, "dual");
  Matrix h = parity_check(code);
  ordered_json doc = config_header(config);
  doc["B"] = code.twist.entries.str();
  doc["dual_generator"] = h.str();
  doc["dual_dimension"] = h.rank();
  doc["dual_canonical"] = h.rref().mat.str();
  return doc;
}

ordered_json cmd_schur(const CodeConfig& config) {
  TgrsCode code = fixed_code(config, "schur");
  std::size_t dim = schur_square_dim(generator(code));
  ordered_json doc = config_header(config);
  doc["B"] = code.twist.entries.str();
  doc["schur_dim"] = dim;
  doc["evaluation_code_dim"] = std::min(config.params.n, 2 * config.params.k - 1);
  return doc;
}

ordered_json cmd_grs(const CodeConfig& config) {
  TgrsCode code = fixed_code(config, "grs");
  ordered_json doc = config_header(config);
  doc["B"] = code.twist.entries.str();
  doc["grs_status"] = to_string(grs_classify(code));
  doc["schur_dim"] = schur_square_dim(generator(code));
  return doc;
}

ordered_json cmd_polyp(const CodeConfig& config) {
  const std::size_t k = config.params.k, nk = config.params.n - config.params.k;
  if (config.wildcards() == 0)
    throw validation_error("the symbolic pipeline needs at least one '*' cell");
  if (config.ref.empty())
    throw validation_error("the symbolic pipeline needs a ref assignment for the '*' cells");
  if (k < 3 || nk < 3)
    throw validation_error("the systematic block needs at least 3 rows and 3 columns "
                           "for a 3x3 minor");

  TgrsCode code(config.params, TwistMatrix(config.filled(config.ref)));
  GrsVerdict verdict = grs_classify(code);
  if (verdict != GrsVerdict::NonGrsMDS)
    throw validation_error(
        std::string("reference assignment must give a non-GRS MDS code, got ") +
        to_string(verdict));

  SymbolicSystem sys = symbolic_system(config.params, config.mask);

  // lex-first 3x3 block of the entrywise-inverse systematic block that is
  // nonsingular at the reference assignment
  auto sf = systematic_form(generator(code));
  if (!sf.mprime.has_value())
    throw validation_error("no nonzero 3x3 minor at the reference assignment "
                           "(systematic block has a zero entry)");
  std::array<std::size_t, 3> rowsel{}, colsel{};
  bool found = false;
  std::vector<std::size_t> rs{0, 1, 2};
  do {
    std::vector<std::size_t> cs{0, 1, 2};
    do {
      Matrix sub(config.field, 3, 3);
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
          sub.set(i, j, sf.mprime->at(rs[i], cs[j]));
      if (!sub.det().is_zero()) {
        std::copy(rs.begin(), rs.end(), rowsel.begin());
        std::copy(cs.begin(), cs.end(), colsel.begin());
        found = true;
      }
    } while (!found && next_subset(cs, nk));
  } while (!found && next_subset(rs, k));
  if (!found)
    throw validation_error("no nonzero 3x3 minor at the reference assignment");

  MultiPoly bigp = big_P(sys, rowsel, colsel).monic();
  CensusTallies tallies = census_classify(config.params, config.mask);

  ordered_json doc = config_header(config);
  ordered_json mask = ordered_json::array();
  for (bool b : config.mask) mask.push_back(b ? 1 : 0);
  doc["mask"] = mask;
  doc["nvars"] = sys.nvars;
  doc["reference"] = felt_list(config.field, config.ref);
  doc["reference_verdict"] = to_string(verdict);
  doc["p"] = sys.p.str();
  ordered_json grid = ordered_json::array();
  for (std::size_t i = 0; i < k; ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < nk; ++j) row.push_back(sys.pij[i][j].str());
    grid.push_back(row);
  }
  doc["pij"] = grid;
  ordered_json rows1 = ordered_json::array(), cols1 = ordered_json::array();
  for (std::size_t i : rowsel) rows1.push_back(i + 1);
  for (std::size_t j : colsel) cols1.push_back(j + 1);
  doc["minor_rows"] = rows1;
  doc["minor_cols"] = cols1;
  doc["P"] = bigp.str();
  doc["P_terms"] = bigp.term_count();
  doc["P_max_degree"] = bigp.max_var_degree();
  doc["zero_count"] = count_zeros(bigp);
  ordered_json census;
  census["mds"] = tallies.mds;
  census["grs"] = tallies.grs;
  census["nongrs"] = tallies.nongrs;
  census["pzeros"] = tallies.pzeros;
  doc["census"] = census;
  return doc;
}

ordered_json cmd_field_info(const Field& field) {
  ordered_json doc;
  doc["p"] = field.characteristic();
  doc["m"] = field.extension_degree();
  doc["q"] = field.order();
  ordered_json mod = ordered_json::array();
  for (std::uint64_t c : field.modulus()) mod.push_back(c);
  doc["modulus"] = mod;
  doc["default_modulus"] = field.has_default_modulus();
  doc["generator"] = field.str(field.primitive_root());
  if (field.order() <= 64) {
    ordered_json elems = ordered_json::array();
    for (std::uint64_t i = 0; i < field.order(); ++i)
      elems.push_back(field.str(field.elem(i)));
    doc["elements"] = elems;
  }
  return doc;
}

}  // namespace tgrs
