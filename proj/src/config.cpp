#include "tgrs/config.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "tgrs/textutil.hpp"

namespace tgrs {

namespace {

std::uint64_t parse_uint(const std::string& key, std::string_view text) {
  text = detail::trim_view(text);
  std::uint64_t value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size())
    throw validation_error("config key '" + key + "': expected an unsigned integer, got '" +
                           std::string(text) + "'");
  return value;
}

std::vector<std::uint64_t> parse_uint_list(const std::string& key, std::string_view text) {
  std::vector<std::uint64_t> out;
  for (std::string_view piece : detail::split_top_level(text, ','))
    out.push_back(parse_uint(key, piece));
  return out;
}

std::vector<Felt> parse_elements(const Field& f, const std::string& key, std::string_view text) {
  std::vector<Felt> out;
  for (std::string_view piece : detail::split_top_level(text, ',')) {
    piece = detail::trim_view(piece);
    if (piece.empty())
      throw validation_error("config key '" + key + "': empty element in list");
    out.push_back(f.parse(piece));
  }
  return out;
}

}  // namespace

std::size_t CodeConfig::wildcards() const {
  std::size_t w = 0;
  for (bool b : mask) w += b;
  return w;
}

Matrix CodeConfig::filled(const std::vector<Felt>& values) const {
  if (values.size() != wildcards())
    throw validation_error("wildcard assignment needs " + std::to_string(wildcards()) +
                           " values, got " + std::to_string(values.size()));
  Matrix out = base;
  std::size_t at = 0;
  for (std::size_t i = 0; i < out.rows(); ++i)
    for (std::size_t j = 0; j < out.cols(); ++j)
      if (mask[i * out.cols() + j]) out.set(i, j, values[at++]);
  return out;
}

TgrsCode CodeConfig::code() const {
  if (wildcards() == 0) return TgrsCode(params, TwistMatrix(base));
  if (!ref.empty()) return TgrsCode(params, TwistMatrix(filled(ref)));
  throw validation_error("description has wildcard cells and no ref assignment");
}

CodeConfig parse_config(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::string_view body = detail::trim_view(line);
    if (body.empty()) continue;
    auto eq = body.find('=');
    if (eq == std::string_view::npos)
      throw validation_error("config line " + std::to_string(lineno) +
                             ": expected 'key = value'");
    std::string key(detail::trim_view(body.substr(0, eq)));
    std::string value(detail::trim_view(body.substr(eq + 1)));
    if (key.empty())
      throw validation_error("config line " + std::to_string(lineno) + ": empty key");
    if (!kv.emplace(key, value).second)
      throw validation_error("config key '" + key + "' appears twice");
  }

  static const char* const known[] = {"p", "m", "modulus", "n", "k", "alpha", "nu", "B", "ref"};
  for (const auto& [key, value] : kv) {
    bool ok = false;
    for (const char* name : known) ok = ok || key == name;
    if (!ok) throw validation_error("unknown config key '" + key + "'");
  }
  for (const char* name : {"p", "n", "k", "alpha", "B"})
    if (!kv.count(name))
      throw validation_error("config is missing required key '" + std::string(name) + "'");

  std::uint64_t p = parse_uint("p", kv.at("p"));
  unsigned m = kv.count("m") ? static_cast<unsigned>(parse_uint("m", kv.at("m"))) : 1;
  std::optional<std::vector<std::uint64_t>> modulus;
  if (kv.count("modulus")) modulus = parse_uint_list("modulus", kv.at("modulus"));
  Field field(p, m, modulus);

  std::size_t n = parse_uint("n", kv.at("n"));
  std::size_t k = parse_uint("k", kv.at("k"));
  std::vector<Felt> alpha = parse_elements(field, "alpha", kv.at("alpha"));
  std::optional<std::vector<Felt>> nu;
  if (kv.count("nu")) nu = parse_elements(field, "nu", kv.at("nu"));
  EvalParams params(field, n, k, std::move(alpha), std::move(nu));

  Matrix base(field, k, n - k);
  std::vector<bool> mask(k * (n - k), false);
  auto rows = detail::split_top_level(kv.at("B"), ';');
  if (rows.size() != k)
    throw validation_error("config key 'B': expected " + std::to_string(k) + " rows, got " +
                           std::to_string(rows.size()));
  for (std::size_t i = 0; i < k; ++i) {
    auto cells = detail::split_top_level(rows[i], ',');
    if (cells.size() != n - k)
      throw validation_error("config key 'B': row " + std::to_string(i + 1) + " has " +
                             std::to_string(cells.size()) + " cells, expected " +
                             std::to_string(n - k));
    for (std::size_t j = 0; j < n - k; ++j) {
      std::string_view cell = detail::trim_view(cells[j]);
      if (cell == "*")
        mask[i * (n - k) + j] = true;
      else
        base.set(i, j, field.parse(cell));
    }
  }

  std::vector<Felt> ref;
  if (kv.count("ref")) {
    ref = parse_elements(field, "ref", kv.at("ref"));
    std::size_t w = 0;
    for (bool b : mask) w += b;
    if (ref.size() != w)
      throw validation_error("config key 'ref': expected one value per wildcard cell (" +
                             std::to_string(w) + "), got " + std::to_string(ref.size()));
  }

  return CodeConfig{field, std::move(params), std::move(base), std::move(mask), std::move(ref)};
}

CodeConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw validation_error("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace tgrs
