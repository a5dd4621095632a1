#include <doctest.h>

#include <random>

#include "tgrs/polysearch.hpp"

using namespace tgrs;

namespace {

std::vector<Felt> range_elements(const Field& f, std::uint64_t lo, std::uint64_t hi) {
  std::vector<Felt> out;
  for (std::uint64_t v = lo; v <= hi; ++v) out.push_back(f.elem(v));
  return out;
}

MultiPoly rand_poly(const Field& f, std::size_t nvars, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> cdist(0, f.order() - 1);
  std::uniform_int_distribution<unsigned> edist(0, 3);
  MultiPoly out(f, nvars);
  for (int t = 0; t < 6; ++t) {
    std::vector<unsigned> exp(nvars);
    for (auto& e : exp) e = edist(rng);
    out.add_term(exp, f.elem(cdist(rng)));
  }
  return out;
}

// The reference two-variable system: GF(17), n=6, k=3, points 1..6, unit
// multipliers, free cells (0,0) and (2,2).
SymbolicSystem reference_system(const Field& f17) {
  EvalParams p(f17, 6, 3, range_elements(f17, 1, 6));
  std::vector<bool> mask(9, false);
  mask[0] = true;
  mask[8] = true;
  return symbolic_system(p, mask);
}

}  // namespace

TEST_CASE("sparse polynomial arithmetic") {
  Field f2(2);
  MultiPoly xp1 = MultiPoly::variable(f2, 1, 0) + MultiPoly::constant(f2, 1, f2.one());
  MultiPoly sq = xp1 * xp1;
  CHECK(sq.str() == "x0^2 + 1");  // middle term cancels in characteristic 2
  CHECK(sq.term_count() == 2);

  Field f17(17);
  MultiPoly p = MultiPoly::parse(f17, 2, "11*x0*x1 + 12*x0 + 10*x1 + 2");
  CHECK(p.eval({f17.zero(), f17.zero()}) == f17.elem(2));
  CHECK(p.eval({f17.one(), f17.one()}) == f17.elem((11 + 12 + 10 + 2) % 17));

  // evaluation is a ring homomorphism
  std::mt19937_64 rng(11);
  for (auto spec : {std::pair<std::uint64_t, unsigned>{7, 1}, {3, 2}}) {
    Field f(spec.first, spec.second);
    std::uniform_int_distribution<std::uint64_t> dist(0, f.order() - 1);
    for (int rep = 0; rep < 25; ++rep) {
      MultiPoly a = rand_poly(f, 3, rng), b = rand_poly(f, 3, rng);
      std::vector<Felt> at{f.elem(dist(rng)), f.elem(dist(rng)), f.elem(dist(rng))};
      CHECK((a * b).eval(at) == a.eval(at) * b.eval(at));
      CHECK((a + b).eval(at) == a.eval(at) + b.eval(at));
      CHECK((a - b).eval(at) == a.eval(at) - b.eval(at));
      CHECK(a.scaled(f.elem(3)).eval(at) == a.eval(at) * f.elem(3));
    }
  }

  // cancellation keeps the term map clean
  MultiPoly q = MultiPoly::parse(f17, 1, "5*x0 + 3");
  MultiPoly r = q - q;
  CHECK(r.is_zero());
  CHECK(r.str() == "0");
  CHECK(r.term_count() == 0);
  CHECK_FALSE(r.leading_term().has_value());

  // mismatched operands are rejected
  CHECK_THROWS_AS(MultiPoly(f17, 1) + MultiPoly(f17, 2), validation_error);
  Field f7(7);
  CHECK_THROWS_AS(MultiPoly(f17, 2) * MultiPoly(f7, 2), validation_error);
  CHECK_THROWS_AS(MultiPoly(f17, 2).eval({f17.one()}), validation_error);
  CHECK_THROWS_AS(MultiPoly::variable(f17, 2, 5), validation_error);
}

TEST_CASE("polynomial text form: canonical order, lenient parse, round trips") {
  Field f17(17);
  MultiPoly p = MultiPoly::parse(f17, 2, "2 + 10*x1 + 12*x0 + 11*x0*x1");
  // graded-lex descending serialization
  CHECK(p.str() == "11*x0*x1 + 12*x0 + 10*x1 + 2");

  // '**' and whitespace tolerated; repeated factors multiply
  MultiPoly q = MultiPoly::parse(f17, 1, "  3 * x0 ** 2 * 4  +  x0 ");
  CHECK(q.str() == "12*x0^2 + x0");

  // graded ordering: total degree first, then lexicographic
  MultiPoly g = MultiPoly::parse(f17, 2, "x0^2 + x1^3 + x0*x1 + 5");
  CHECK(g.str() == "x1^3 + x0^2 + x0*x1 + 5");
  auto lead = g.leading_term();
  REQUIRE(lead.has_value());
  CHECK(lead->first == std::vector<unsigned>{0, 3});

  // extension-field coefficients round-trip through the z-power notation
  Field f9(3, 2);
  MultiPoly h(f9, 2);
  h.add_term({1, 2}, f9.elem(5));
  h.add_term({0, 0}, f9.elem(2));
  MultiPoly back = MultiPoly::parse(f9, 2, h.str());
  CHECK(back == h);

  // random round trips
  std::mt19937_64 rng(77);
  for (auto spec : {std::pair<std::uint64_t, unsigned>{13, 1}, {2, 3}}) {
    Field f(spec.first, spec.second);
    for (int rep = 0; rep < 20; ++rep) {
      MultiPoly a = rand_poly(f, 4, rng);
      CHECK(MultiPoly::parse(f, 4, a.str()) == a);
    }
  }

  // monic normalization fixes the leading coefficient
  MultiPoly m = MultiPoly::parse(f17, 2, "7*x0^2 + 3*x0 + 1").monic();
  REQUIRE(m.leading_term().has_value());
  CHECK(m.leading_term()->second == f17.one());
  CHECK(m.str() == "x0^2 + 15*x0 + 5");  // 3/7 = 15, 1/7 = 5 mod 17

  CHECK_THROWS_AS(MultiPoly::parse(f17, 1, "x0 + + 3"), validation_error);
  CHECK_THROWS_AS(MultiPoly::parse(f17, 1, "x2 + 3"), validation_error);
  CHECK_THROWS_AS(MultiPoly::parse(f17, 1, "x0^"), validation_error);
}

TEST_CASE("symbolic systematic-form system: reference values") {
  Field f17(17);
  SymbolicSystem sys = reference_system(f17);
  CHECK(sys.nvars == 2);
  CHECK(sys.varmap[0][0] == 0);
  CHECK(sys.varmap[2][2] == 1);
  CHECK(sys.varmap[1][1] == -1);

  auto expect = [&](const char* text) { return MultiPoly::parse(f17, 2, text); };
  CHECK(sys.p == expect("11*x0*x1 + 12*x0 + 10*x1 + 2"));
  CHECK(sys.pij[0][0] == expect("x0*x1 + 14*x0 + 9*x1 + 2"));
  CHECK(sys.pij[0][1] == expect("5*x0*x1 + 10*x0 + 12*x1 + 6"));
  CHECK(sys.pij[0][2] == expect("13*x0*x1 + 7*x0 + 15*x1 + 12"));
  CHECK(sys.pij[1][0] == expect("16*x0*x1 + 13*x0 + 6*x1 + 11"));
  CHECK(sys.pij[1][1] == expect("10*x0*x1 + 15*x0 + 7*x1 + 1"));
  CHECK(sys.pij[1][2] == expect("12*x0*x1 + 4*x0 + 8*x1 + 4"));
  CHECK(sys.pij[2][0] == expect("15*x0*x1 + 14*x0 + 12*x1 + 6"));
  CHECK(sys.pij[2][1] == expect("10*x0*x1 + x0 + 8*x1 + 12"));
  CHECK(sys.pij[2][2] == expect("4*x0*x1 + 2*x0 + 4*x1 + 3"));

  // degree at most 1 per variable everywhere
  CHECK(sys.p.max_var_degree() <= 1);
  for (const auto& row : sys.pij)
    for (const auto& poly : row) CHECK(poly.max_var_degree() <= 1);
}

TEST_CASE("symbolic ratios reproduce the numeric systematic form") {
  Field f17(17);
  SymbolicSystem sys = reference_system(f17);
  EvalParams params = sys.params;
  std::size_t checked = 0;
  for (std::uint64_t x = 0; x < 17; ++x) {
    for (std::uint64_t y = 0; y < 17; ++y) {
      Matrix b(f17, 3, 3);
      b.set_idx(0, 0, x);
      b.set_idx(2, 2, y);
      TgrsCode code(params, TwistMatrix(b));
      if (!mds_fast(code).is_mds) continue;
      ++checked;
      std::vector<Felt> at{f17.elem(x), f17.elem(y)};
      Felt pval = sys.p.eval(at);
      CHECK_FALSE(pval.is_zero());
      auto sf = systematic_form(generator(code));
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
          Felt num = sys.pij[i][j].eval(at);
          CHECK_FALSE(num.is_zero());
          CHECK(num / pval == sf.m.at(i, j));
        }
    }
  }
  CHECK(checked == 90);
}

TEST_CASE("symbolic system without variables matches the plain systematic form") {
  Field f13(13);
  EvalParams p(f13, 7, 3, range_elements(f13, 1, 7));
  SymbolicSystem sys = symbolic_system(p, std::vector<bool>(12, false));
  CHECK(sys.nvars == 0);
  TgrsCode code(p, TwistMatrix(Matrix(f13, 3, 4)));
  auto sf = systematic_form(generator(code));
  Felt pval = sys.p.eval({});
  CHECK_FALSE(pval.is_zero());
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      CHECK(sys.pij[i][j].eval({}) / pval == sf.m.at(i, j));
}

TEST_CASE("symbolic system guards and validation") {
  Field f17(17);
  EvalParams p(f17, 8, 4, range_elements(f17, 1, 8));
  CHECK_THROWS_AS(symbolic_system(p, std::vector<bool>(9, true)), validation_error);  // wrong size
  std::vector<bool> mask(16, true);
  mask[0] = mask[1] = mask[2] = false;  // 13 variables
  CHECK_THROWS_AS(symbolic_system(p, mask), guard_error);
}

TEST_CASE("minor polynomial of the reference system") {
  Field f17(17);
  SymbolicSystem sys = reference_system(f17);
  MultiPoly P = big_P(sys, {0, 1, 2}, {0, 1, 2});
  CHECK(P.term_count() == 44);
  CHECK(P.max_var_degree() == 6);
  auto lead = P.leading_term();
  REQUIRE(lead.has_value());
  CHECK(lead->first == std::vector<unsigned>{6, 5});
  CHECK(lead->second == f17.elem(7));
  CHECK(count_zeros(P) == 45);

  // cross-module identity at every MDS assignment:
  //   minor(Mprime) * prod(9 selected pij evals) = eval(P) * eval(p)^3
  EvalParams params = sys.params;
  std::size_t checked = 0;
  for (std::uint64_t x = 0; x < 17 && checked < 120; ++x)
    for (std::uint64_t y = 0; y < 17; ++y) {
      Matrix b(f17, 3, 3);
      b.set_idx(0, 0, x);
      b.set_idx(2, 2, y);
      TgrsCode code(params, TwistMatrix(b));
      if (!mds_fast(code).is_mds) continue;
      ++checked;
      std::vector<Felt> at{f17.elem(x), f17.elem(y)};
      auto sf = systematic_form(generator(code));
      REQUIRE(sf.mprime.has_value());
      Felt minor = sf.mprime->det();
      Felt prod = f17.one();
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) prod = prod * sys.pij[i][j].eval(at);
      Felt pval = sys.p.eval(at);
      CHECK(minor * prod == P.eval(at) * pval * pval * pval);
    }
  CHECK(checked > 0);

  // constant entrywise-inverse blocks have singular minors
  SymbolicSystem flat = sys;
  for (auto& row : flat.pij)
    for (auto& poly : row) poly = MultiPoly::constant(f17, 2, f17.elem(5));
  CHECK(big_P(flat, {0, 1, 2}, {0, 1, 2}).is_zero());

  // selection validation
  CHECK_THROWS_AS(big_P(sys, {0, 1, 3}, {0, 1, 2}), validation_error);
  CHECK_THROWS_AS(big_P(sys, {0, 1, 1}, {0, 1, 2}), validation_error);
  CHECK_THROWS_AS(big_P(sys, {2, 1, 0}, {0, 1, 2}), validation_error);
  Field f7(7);
  EvalParams small(f7, 6, 2, range_elements(f7, 1, 6));
  SymbolicSystem ssys = symbolic_system(small, std::vector<bool>(8, false));
  CHECK_THROWS_AS(big_P(ssys, {0, 1, 2}, {0, 1, 2}), validation_error);
}

TEST_CASE("zero counting over the full grid") {
  Field f17(17);
  CHECK(count_zeros(MultiPoly(f17, 2)) == 289);
  CHECK(count_zeros(MultiPoly::parse(f17, 1, "3*x0 + 5")) == 1);
  CHECK(count_zeros(MultiPoly::parse(f17, 1, "x0^16 + 16")) == 16);  // all nonzero points
  CHECK(count_zeros(MultiPoly::constant(f17, 0, f17.zero())) == 1);
  CHECK(count_zeros(MultiPoly::constant(f17, 0, f17.one())) == 0);
  CHECK_THROWS_AS(count_zeros(MultiPoly(f17, 8)), guard_error);  // 17^8 > 1e8
}

TEST_CASE("masked-grid census with the minor-polynomial cross-check") {
  Field f17(17);
  EvalParams p(f17, 6, 3, range_elements(f17, 1, 6));
  std::vector<bool> mask(9, false);
  mask[0] = true;
  mask[8] = true;
  CensusTallies t = census_classify(p, mask);
  CHECK(t.mds == 90);
  CHECK(t.grs == 8);
  CHECK(t.nongrs == 82);
  CHECK(t.pzeros == 45);

  // no variables: a single untwisted assignment, GRS, vacuous zero set
  CensusTallies single = census_classify(p, std::vector<bool>(9, false));
  CHECK(single.mds == 1);
  CHECK(single.grs == 1);
  CHECK(single.nongrs == 0);
  CHECK(single.pzeros == 1);

  // one-variable grid cross-checked against a direct loop
  Field f7(7);
  EvalParams p7(f7, 6, 3, range_elements(f7, 1, 6));
  std::vector<bool> m7(9, false);
  m7[0] = true;
  CensusTallies t7 = census_classify(p7, m7);
  std::uint64_t mds = 0, grs = 0, nongrs = 0;
  for (std::uint64_t v = 0; v < 7; ++v) {
    Matrix b(f7, 3, 3);
    b.set_idx(0, 0, v);
    auto verdict = grs_classify(TgrsCode(p7, TwistMatrix(b)));
    mds += verdict != GrsVerdict::NotMDS;
    grs += verdict == GrsVerdict::GRS;
    nongrs += verdict == GrsVerdict::NonGrsMDS;
  }
  CHECK(t7.mds == mds);
  CHECK(t7.grs == grs);
  CHECK(t7.nongrs == nongrs);

  // narrow codes have no 3x3 minors: every assignment counts as a zero
  EvalParams nar(f7, 6, 2, range_elements(f7, 1, 6));
  std::vector<bool> nm(8, false);
  nm[0] = true;
  CensusTallies tn = census_classify(nar, nm);
  CHECK(tn.pzeros == 7);
  CHECK(tn.mds + 0 >= tn.grs);

  // grid guard
  Field f13(13);
  EvalParams pb(f13, 9, 4, range_elements(f13, 1, 9));
  CHECK_THROWS_AS(census_classify(pb, std::vector<bool>(20, true)), guard_error);
}
