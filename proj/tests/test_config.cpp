#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"
#include "tgrs/classify.hpp"
#include "tgrs/config.hpp"

using namespace tgrs;

namespace {

const char* kBasic =
    "p = 7\n"
    "n = 6\n"
    "k = 4\n"
    "alpha = 1,2,3,4,5,6\n"
    "B = 1,0;0,0;0,0;0,0\n";

}  // namespace

TEST_CASE("config: minimal prime-field description") {
  CodeConfig c = parse_config(kBasic);
  CHECK(c.field.order() == 7);
  CHECK(c.field.extension_degree() == 1);
  CHECK(c.params.n == 6);
  CHECK(c.params.k == 4);
  CHECK(c.params.alpha.size() == 6);
  // nu defaults to all ones
  for (const Felt& v : c.params.nu) CHECK(v == c.field.one());
  CHECK(c.wildcards() == 0);
  CHECK(c.mask == std::vector<bool>(8, false));
  CHECK(c.base.str() == "1,0;0,0;0,0;0,0");
  CHECK(c.ref.empty());
  TgrsCode code = c.code();
  CHECK(code.twist.entries.str() == "1,0;0,0;0,0;0,0");
}

TEST_CASE("config: wildcards, ref, filled") {
  CodeConfig c = parse_config(
      "p = 17\n"
      "n = 6\n"
      "k = 3\n"
      "alpha = 1,2,3,4,5,6\n"
      "B = *,0,0;0,0,0;0,0,*\n"
      "ref = 9,9\n");
  CHECK(c.wildcards() == 2);
  // row-major cell order: (0,0) first, (2,2) second
  std::vector<bool> want(9, false);
  want[0] = true;
  want[8] = true;
  CHECK(c.mask == want);
  CHECK(c.base.is_zero());
  REQUIRE(c.ref.size() == 2);
  CHECK(c.ref[0] == c.field.elem(9));

  Matrix b = c.filled({c.field.elem(2), c.field.elem(5)});
  CHECK(b.str() == "2,0,0;0,0,0;0,0,5");
  CHECK_THROWS_AS(c.filled({c.field.elem(2)}), validation_error);

  TgrsCode code = c.code();  // uses ref
  CHECK(code.twist.entries.str() == "9,0,0;0,0,0;0,0,9");
}

TEST_CASE("config: wildcards without ref cannot produce a code") {
  CodeConfig c = parse_config(
      "p = 5\n"
      "n = 4\n"
      "k = 2\n"
      "alpha = 1,2,3,4\n"
      "B = *,0;0,0\n");
  CHECK(c.wildcards() == 1);
  CHECK_THROWS_AS(c.code(), validation_error);
}

TEST_CASE("config: extension field with explicit modulus and z tokens") {
  CodeConfig c = parse_config(
      "p = 3\n"
      "m = 2\n"
      "modulus = 2,1,1\n"
      "n = 8\n"
      "k = 3\n"
      "alpha = 1,2,z,z^2,z^3,z^5,z^6,z^7\n"
      "B = *,*,*,0,0;*,*,*,0,0;*,*,*,0,0\n");
  CHECK(c.field.order() == 9);
  CHECK(c.field.extension_degree() == 2);
  CHECK(c.wildcards() == 9);
  // alpha tokens round-trip through the field's text form
  CHECK(c.field.str(c.params.alpha[2]) == "z^1");
  CHECK(c.params.alpha[1] == c.field.elem(2));
}

TEST_CASE("config: comments, blank lines, spacing") {
  CodeConfig c = parse_config(
      "# leading comment\n"
      "\n"
      "  p=7   # characteristic\n"
      "n =6\n"
      "k= 4\n"
      "alpha = 1, 2, 3, 4, 5, 6\n"
      "nu = 1,1,1,2,2,2\n"
      "B = 1 , 0 ; 0,0 ; 0,0 ; 0,0  # twist matrix\n");
  CHECK(c.params.nu[3] == c.field.elem(2));
  CHECK(c.base.str() == "1,0;0,0;0,0;0,0");
}

TEST_CASE("config: validation errors") {
  auto drop_line = [](const std::string& key) {
    std::string out;
    std::string text = kBasic;
    std::size_t pos = 0;
    while (pos < text.size()) {
      std::size_t end = text.find('\n', pos);
      std::string line = text.substr(pos, end - pos);
      if (line.rfind(key + " ", 0) != 0) out += line + "\n";
      pos = end + 1;
    }
    return out;
  };
  for (const char* key : {"p", "n", "k", "alpha", "B"})
    CHECK_THROWS_AS(parse_config(drop_line(key)), validation_error);

  // unknown key
  CHECK_THROWS_AS(parse_config(std::string(kBasic) + "beta = 1\n"),
                  validation_error);
  // duplicate key
  CHECK_THROWS_AS(parse_config(std::string(kBasic) + "n = 6\n"),
                  validation_error);
  // line without '='
  CHECK_THROWS_AS(parse_config(std::string(kBasic) + "just words\n"),
                  validation_error);
  // bad integer
  CHECK_THROWS_AS(parse_config("p = seven\nn = 4\nk = 2\nalpha = 1,2,3,4\nB = 0,0;0,0\n"),
                  validation_error);
  // composite characteristic
  CHECK_THROWS_AS(parse_config("p = 6\nn = 4\nk = 2\nalpha = 1,2,3,4\nB = 0,0;0,0\n"),
                  validation_error);
  // wrong number of B rows
  CHECK_THROWS_AS(parse_config("p = 7\nn = 6\nk = 4\nalpha = 1,2,3,4,5,6\nB = 0,0;0,0\n"),
                  validation_error);
  // wrong row width
  CHECK_THROWS_AS(parse_config("p = 7\nn = 6\nk = 4\nalpha = 1,2,3,4,5,6\nB = 0;0;0;0\n"),
                  validation_error);
  // ref length mismatch
  CHECK_THROWS_AS(parse_config("p = 5\nn = 4\nk = 2\nalpha = 1,2,3,4\nB = *,0;0,0\nref = 1,2\n"),
                  validation_error);
  // ref without wildcards
  CHECK_THROWS_AS(parse_config(std::string(kBasic) + "ref = 1\n"),
                  validation_error);
  // '*' is not an element token outside B
  CHECK_THROWS_AS(parse_config("p = 5\nn = 4\nk = 2\nalpha = 1,*,3,4\nB = 0,0;0,0\n"),
                  validation_error);
  // alpha length != n
  CHECK_THROWS_AS(parse_config("p = 7\nn = 6\nk = 4\nalpha = 1,2,3\nB = 1,0;0,0;0,0;0,0\n"),
                  validation_error);
  // repeated evaluation point (message names the offender)
  try {
    parse_config("p = 7\nn = 6\nk = 4\nalpha = 1,2,2,4,5,6\nB = 1,0;0,0;0,0;0,0\n");
    FAIL("expected validation_error");
  } catch (const validation_error& e) {
    CHECK(std::string(e.what()).find("2") != std::string::npos);
  }
}

TEST_CASE("config: load_config reads files") {
  std::string path = "tgrs_test_config.cfg";
  {
    std::ofstream out(path);
    out << kBasic;
  }
  CodeConfig c = load_config(path);
  CHECK(c.params.n == 6);
  std::remove(path.c_str());
  CHECK_THROWS_AS(load_config("no_such_file_anywhere.cfg"), validation_error);
}

TEST_CASE("config: shipped description files parse") {
  struct Expect {
    const char* name;
    std::uint64_t q;
    std::size_t n, k, wild;
  };
  const Expect cases[] = {
      {"census_q7_n6_k4.cfg", 7, 6, 4, 8},
      {"census_q7_n6_k3.cfg", 7, 6, 3, 9},
      {"census_q9_n8_k3_block.cfg", 9, 8, 3, 9},
      {"polyp_q17_n6_k3.cfg", 17, 6, 3, 2},
  };
  for (const Expect& e : cases) {
    CAPTURE(e.name);
    CodeConfig c = load_config(std::string(TGRS_REPO_DIR "/configs/") + e.name);
    CHECK(c.field.order() == e.q);
    CHECK(c.params.n == e.n);
    CHECK(c.params.k == e.k);
    CHECK(c.wildcards() == e.wild);
  }
}
