// tgrs: command-line interface to the twisted-code library.
//
// Subcommands: check, census, parity, dual, schur, grs, polyp, field-info.
// Exit codes: 0 success, 1 validation error, 2 guard exceeded, 3 internal
// invariant violation, 130 interrupted (census emits a partial checkpoint).
#include <atomic>
#include <csignal>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "tgrs/commands.hpp"
#include "tgrs/textutil.hpp"

namespace {

std::atomic<bool> g_interrupted{false};

void on_sigint(int) { g_interrupted.store(true); }

struct OutputOptions {
  std::string format = "text";  // text | json | csv
  std::string out_path;         // empty: stdout
};

void add_output_flags(CLI::App* cmd, OutputOptions& out, bool allow_csv) {
  cmd->add_option("--format", out.format, "Output format")
      ->check(CLI::IsMember(allow_csv ? std::vector<std::string>{"text", "json", "csv"}
                                      : std::vector<std::string>{"text", "json"}))
      ->capture_default_str();
  cmd->add_option("--out", out.out_path, "Write the report to a file instead of stdout");
}

void emit(const OutputOptions& out, const std::string& payload) {
  if (out.out_path.empty()) {
    std::cout << payload;
    if (payload.empty() || payload.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream f(out.out_path, std::ios::binary);
  if (!f) throw tgrs::validation_error("cannot write output file '" + out.out_path + "'");
  f << payload;
  if (payload.empty() || payload.back() != '\n') f << "\n";
}

std::string render(const tgrs::ordered_json& doc, const std::string& format) {
  if (format == "json") return doc.dump(2);
  return tgrs::render_text(doc);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact construction, classification and exhaustive censusing of twisted evaluation codes"};
  app.require_subcommand(1);

  std::string config_path;
  OutputOptions check_out, census_out, parity_out, dual_out, schur_out, grs_out, polyp_out,
      field_out;

  auto* check = app.add_subcommand("check", "Classify one fixed code");
  check->add_option("--config", config_path, "Code description file")->required();
  add_output_flags(check, check_out, false);

  auto* census = app.add_subcommand("census", "Count MDS members over the wildcard grid");
  census->add_option("--config", config_path, "Code description file")->required();
  unsigned threads = 1;
  std::size_t limit = 5;
  std::string tier = "standard";
  census->add_option("--threads", threads, "Worker thread count")->capture_default_str();
  census->add_option("--limit", limit, "Sample members to retain")->capture_default_str();
  census->add_option("--tier", tier, "Enumeration budget tier")
      ->check(CLI::IsMember({"quick", "standard", "long"}))
      ->capture_default_str();
  add_output_flags(census, census_out, true);

  auto* parity = app.add_subcommand("parity", "Parity-check matrix with verification flags");
  parity->add_option("--config", config_path, "Code description file")->required();
  add_output_flags(parity, parity_out, false);

  auto* dual = app.add_subcommand("dual", "Dual-code generator");
  dual->add_option("--config", config_path, "Code description file")->required();
  add_output_flags(dual, dual_out, false);

  auto* schur = app.add_subcommand("schur", "Schur square dimension");
  schur->add_option("--config", config_path, "Code description file")->required();
  add_output_flags(schur, schur_out, false);

  auto* grs = app.add_subcommand("grs", "Membership verdict: GRS, non-GRS MDS, or not MDS");
  grs->add_option("--config", config_path, "Code description file")->required();
  add_output_flags(grs, grs_out, false);

  auto* polyp = app.add_subcommand("polyp", "Symbolic minor polynomial at the ref assignment");
  polyp->add_option("--config", config_path, "Code description file")->required();
  add_output_flags(polyp, polyp_out, false);

  auto* finfo = app.add_subcommand("field-info", "Field facts: order, modulus, generator");
  std::uint64_t fi_p = 0;
  unsigned fi_m = 1;
  std::string fi_modulus, fi_config;
  finfo->add_option("--p", fi_p, "Field characteristic (prime)");
  finfo->add_option("--m", fi_m, "Extension degree")->capture_default_str();
  finfo->add_option("--modulus", fi_modulus,
                    "Reduction polynomial coefficients c0,c1,...,cm (constant first)");
  finfo->add_option("--config", fi_config, "Read the field from a code description file");
  add_output_flags(finfo, field_out, false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) {
      emit(check_out, render(tgrs::cmd_check(tgrs::load_config(config_path)), check_out.format));
    } else if (census->parsed()) {
      std::signal(SIGINT, on_sigint);
      tgrs::CommandOptions opts;
      opts.threads = threads;
      opts.limit = limit;
      opts.tier = tgrs::parse_tier(tier);
      opts.stop = &g_interrupted;
      double elapsed = 0.0;
      tgrs::CensusReport raw;
      tgrs::ordered_json doc =
          tgrs::cmd_census(tgrs::load_config(config_path), opts, &elapsed, &raw);
      std::fprintf(stderr, "elapsed: %.3f s\n", elapsed);
      emit(census_out, census_out.format == "csv" ? tgrs::census_csv(raw)
                                                  : render(doc, census_out.format));
      if (!doc["complete"].get<bool>()) {
        std::fprintf(stderr, "interrupted: %llu of %llu assignments processed\n",
                     static_cast<unsigned long long>(doc["processed"].get<std::uint64_t>()),
                     static_cast<unsigned long long>(doc["total"].get<std::uint64_t>()));
        return 130;
      }
    } else if (parity->parsed()) {
      emit(parity_out, render(tgrs::cmd_parity(tgrs::load_config(config_path)), parity_out.format));
    } else if (dual->parsed()) {
      emit(dual_out, render(tgrs::cmd_dual(tgrs::load_config(config_path)), dual_out.format));
    } else if (schur->parsed()) {
      emit(schur_out, render(tgrs::cmd_schur(tgrs::load_config(config_path)), schur_out.format));
    } else if (grs->parsed()) {
      emit(grs_out, render(tgrs::cmd_grs(tgrs::load_config(config_path)), grs_out.format));
    } else if (polyp->parsed()) {
      emit(polyp_out, render(tgrs::cmd_polyp(tgrs::load_config(config_path)), polyp_out.format));
    } else if (finfo->parsed()) {
      std::optional<tgrs::Field> field;
      if (!fi_config.empty()) {
        field = tgrs::load_config(fi_config).field;
      } else {
        if (fi_p == 0)
          throw tgrs::validation_error("field-info needs --p (with optional --m, --modulus) or --config");
        std::optional<std::vector<std::uint64_t>> mod;
        if (!fi_modulus.empty()) {
          std::vector<std::uint64_t> coeffs;
          for (const auto& piece : tgrs::detail::split_top_level(fi_modulus, ','))
            coeffs.push_back(std::stoull(std::string(piece)));
          mod = std::move(coeffs);
        }
        field = tgrs::Field(fi_p, fi_m, mod);
      }
      emit(field_out, render(tgrs::cmd_field_info(*field), field_out.format));
    }
  } catch (const tgrs::validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const tgrs::guard_error& e) {
    std::cerr << "guard: " << e.what() << "\n";
    return 2;
  } catch (const tgrs::internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
