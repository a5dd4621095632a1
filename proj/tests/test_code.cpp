#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "tgrs/code.hpp"

using namespace tgrs;

namespace {

std::vector<Felt> first_elements(const Field& f, std::size_t n, bool skip_zero = false) {
  std::vector<Felt> out;
  for (std::uint64_t i = skip_zero ? 1 : 0; out.size() < n; ++i) out.push_back(f.elem(i));
  return out;
}

std::vector<Felt> range_elements(const Field& f, std::uint64_t lo, std::uint64_t hi) {
  std::vector<Felt> out;
  for (std::uint64_t v = lo; v <= hi; ++v) out.push_back(f.elem(v));
  return out;
}

TgrsCode make_code(const Field& f, std::size_t n, std::size_t k, const Matrix& b) {
  return TgrsCode(EvalParams(f, n, k, range_elements(f, 1, n)), TwistMatrix(b));
}

Matrix random_twist(const Field& f, std::size_t k, std::size_t nk, std::mt19937_64& rng) {
  Matrix b(f, k, nk);
  std::uniform_int_distribution<std::uint64_t> dist(0, f.order() - 1);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < nk; ++j) b.set_idx(i, j, dist(rng));
  return b;
}

}  // namespace

TEST_CASE("parameter validation") {
  Field f(7);
  auto a4 = range_elements(f, 1, 4);
  CHECK_NOTHROW(EvalParams(f, 4, 2, a4));
  CHECK_THROWS_AS(EvalParams(f, 4, 0, a4), validation_error);
  CHECK_THROWS_AS(EvalParams(f, 4, 4, a4), validation_error);
  CHECK_THROWS_AS(EvalParams(f, 8, 2, first_elements(f, 7)), validation_error);  // n > q
  CHECK_THROWS_AS(EvalParams(f, 4, 2, range_elements(f, 1, 3)), validation_error);
  auto dup = a4;
  dup[3] = dup[0];
  CHECK_THROWS_AS(EvalParams(f, 4, 2, dup), validation_error);
  CHECK_THROWS_AS(EvalParams(f, 4, 2, a4, std::vector<Felt>{f.one(), f.zero(), f.one(), f.one()}),
                  validation_error);
  // default nu is all ones
  CHECK(EvalParams(f, 4, 2, a4).nu == std::vector<Felt>(4, f.one()));

  // twist shape and mask invariants
  Matrix b(f, 2, 2);
  b.set(0, 0, f.elem(3));
  TwistMatrix tw(b);
  CHECK(tw.free_at(0, 0));
  CHECK_FALSE(tw.free_at(1, 1));
  CHECK_THROWS_AS(TwistMatrix(b, std::vector<bool>{false, false, false, false}), validation_error);
  CHECK_NOTHROW(TwistMatrix(b, std::vector<bool>{true, false, true, false}));
  CHECK_THROWS_AS(TwistMatrix(b, std::vector<bool>{true, false}), validation_error);
  CHECK_THROWS_AS(TgrsCode(EvalParams(f, 4, 2, a4), TwistMatrix(Matrix(f, 2, 3))), validation_error);
  CHECK_THROWS_AS(TgrsCode(EvalParams(f, 4, 2, a4), TwistMatrix(Matrix(Field(5), 2, 2))),
                  validation_error);
}

TEST_CASE("twisted basis entries and independence") {
  Field f(7);
  // no twist: monomial basis
  auto plain = twisted_basis(make_code(f, 4, 2, Matrix(f, 2, 2)));
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t t = 0; t < 4; ++t) CHECK(plain[i][t] == (t == i ? f.one() : f.zero()));

  // k=2, n=4, second-row first twist coefficient 5: g_1 = x + 5x^2
  Matrix b(f, 2, 2);
  b.set(1, 0, f.elem(5));
  auto basis = twisted_basis(make_code(f, 4, 2, b));
  CHECK(basis[1][1] == f.one());
  CHECK(basis[1][2] == f.elem(5));
  CHECK(basis[1][0] == f.zero());
  CHECK(basis[1][3] == f.zero());

  // arbitrary twists keep the k coefficient vectors independent
  std::mt19937_64 rng(7);
  for (int rep = 0; rep < 25; ++rep) {
    auto code = make_code(f, 6, 3, random_twist(f, 3, 3, rng));
    auto vecs = twisted_basis(code);
    Matrix m(f, 3, 6);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t t = 0; t < 6; ++t) m.set(i, t, vecs[i][t]);
    CHECK(m.rank() == 3);
  }
}

TEST_CASE("generator: direct equals factored and matches plain Vandermonde") {
  Field f7(7);
  auto grs = make_code(f7, 6, 3, Matrix(f7, 3, 3));
  CHECK(generator(grs) == vandermonde(f7, grs.params.alpha, 3));
  CHECK(generator(grs, GenMode::factored) == generator(grs, GenMode::direct));

  std::mt19937_64 rng(2024);
  int checked = 0;
  for (auto params : {std::pair<std::uint64_t, unsigned>{17, 1}, {7, 1}, {3, 2}, {2, 3}}) {
    Field f(params.first, params.second);
    for (int rep = 0; rep < 30; ++rep) {
      std::size_t n = 4 + rep % 5;  // 4..8
      if (n > f.order()) continue;
      std::size_t k = 1 + rep % (n - 1);
      TgrsCode code(EvalParams(f, n, k, first_elements(f, n)),
                    TwistMatrix(random_twist(f, k, n - k, rng)));
      Matrix direct = generator(code, GenMode::direct);
      CHECK(direct == generator(code, GenMode::factored));
      CHECK(direct.rows() == k);
      CHECK(direct.cols() == n);
      CHECK(direct.rank() == k);
      ++checked;
    }
  }
  CHECK(checked >= 100);

  // nontrivial multipliers enter column-wise
  Field f(7);
  std::vector<Felt> nu{f.elem(2), f.elem(3), f.elem(1), f.elem(5)};
  TgrsCode scaled(EvalParams(f, 4, 2, range_elements(f, 1, 4), nu), TwistMatrix(Matrix(f, 2, 2)));
  Matrix g = generator(scaled);
  CHECK(g == generator(scaled, GenMode::factored));
  for (std::size_t j = 0; j < 4; ++j) CHECK(g.at(0, j) == nu[j]);
}

TEST_CASE("known full-rank twisted instance (q=7, n=6, k=4)") {
  Field f(7);
  Matrix b = Matrix::parse(f, "4,6;5,5;5,2;4,0");
  auto code = make_code(f, 6, 4, b);
  CHECK(generator(code).rank() == 4);
  auto dist = brute_min_distance(code);
  CHECK(dist.d == 3);
  CHECK(dist.defect == 0);
}

TEST_CASE("encode agrees with row combinations and polynomial evaluation") {
  Field f(7);
  Matrix b = Matrix::parse(f, "1,2,3;0,4,0");
  auto code = make_code(f, 5, 2, b);
  Matrix g = generator(code);

  std::vector<Felt> zero{f.zero(), f.zero()};
  for (const Felt& c : encode(code, zero)) CHECK(c.is_zero());

  for (std::size_t i = 0; i < 2; ++i) {
    std::vector<Felt> unit{f.zero(), f.zero()};
    unit[i] = f.one();
    auto word = encode(code, unit);
    for (std::size_t j = 0; j < 5; ++j) CHECK(word[j] == g.at(i, j));
  }

  CHECK_THROWS_AS(encode(code, std::vector<Felt>{f.one()}), validation_error);

  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::uint64_t> dist(0, 6);
  auto basis = twisted_basis(code);
  for (int rep = 0; rep < 20; ++rep) {
    std::vector<Felt> msg{f.elem(dist(rng)), f.elem(dist(rng))};
    auto word = encode(code, msg);
    // oracle: evaluate sum_i msg_i g_i(x) at each point, scaled by nu
    for (std::size_t j = 0; j < 5; ++j) {
      Felt acc = f.zero();
      Felt x = code.params.alpha[j];
      for (std::size_t i = 0; i < 2; ++i) {
        Felt pw = f.one(), val = f.zero();
        for (std::size_t t = 0; t < 5; ++t) {
          val = val + basis[i][t] * pw;
          pw = pw * x;
        }
        acc = acc + msg[i] * val;
      }
      CHECK(word[j] == acc * code.params.nu[j]);
    }
  }
}

TEST_CASE("brute-force distance on reference codes") {
  Field f(7);
  // untwisted [6,3] has d = n-k+1 = 4
  auto grs = make_code(f, 6, 3, Matrix(f, 3, 3));
  auto dist = brute_min_distance(grs);
  CHECK(dist.d == 4);
  CHECK(dist.defect == 0);

  // twisted [6,3,4] instance
  auto code = make_code(f, 6, 3, Matrix::parse(f, "2,5,3;2,1,1;3,2,2"));
  auto d2 = brute_min_distance(code);
  CHECK(d2.d == 4);
  CHECK(d2.defect == 0);

  // repetition-style check over an extension field: [4,2] untwisted over GF(9)
  Field e(3, 2);
  auto ecode = TgrsCode(EvalParams(e, 4, 2, first_elements(e, 4)), TwistMatrix(Matrix(e, 2, 2)));
  CHECK(brute_min_distance(ecode).d == 3);

  // guard: 17^7 > 10^7
  Field big(17);
  auto too_big = make_code(big, 9, 7, Matrix(big, 7, 2));
  CHECK_THROWS_AS(brute_min_distance(too_big), guard_error);
}

TEST_CASE("weight distribution totals and MacWilliams sanity") {
  Field f(7);
  auto code = make_code(f, 6, 2, Matrix::parse(f, "1,0,2,0;0,0,0,3"));
  auto wd = weight_distribution(generator(code));
  CHECK(wd[0] == 1);
  CHECK(std::accumulate(wd.begin(), wd.end(), std::size_t{0}) == 49);
}

TEST_CASE("monomial equivalence") {
  Field f(7);
  auto code = make_code(f, 6, 2, Matrix::parse(f, "1,0,2,0;0,0,0,3"));
  Matrix g = generator(code);

  std::vector<std::size_t> id{0, 1, 2, 3, 4, 5};
  std::vector<Felt> ones(6, f.one());
  CHECK(apply_equivalence(g, id, ones) == g);

  CHECK_THROWS_AS(apply_equivalence(g, std::vector<std::size_t>{0, 1, 2, 3, 4, 4}, ones),
                  validation_error);
  CHECK_THROWS_AS(apply_equivalence(g, id, std::vector<Felt>(6, f.zero())), validation_error);

  // scaling by nu equals the nu=1 code pushed through the equivalence map
  std::vector<Felt> nu{f.elem(2), f.elem(6), f.elem(1), f.elem(3), f.elem(4), f.elem(5)};
  TgrsCode scaled(EvalParams(f, 6, 2, code.params.alpha, nu), code.twist);
  CHECK(code_equal(generator(scaled), apply_equivalence(g, id, nu)));

  // weight distribution is invariant under any permutation + scaling
  std::mt19937_64 rng(11);
  auto base_wd = weight_distribution(g);
  std::uniform_int_distribution<std::uint64_t> nz(1, 6);
  for (int rep = 0; rep < 10; ++rep) {
    std::vector<std::size_t> perm{0, 1, 2, 3, 4, 5};
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Felt> scale;
    for (int j = 0; j < 6; ++j) scale.push_back(f.elem(nz(rng)));
    CHECK(weight_distribution(apply_equivalence(g, perm, scale)) == base_wd);
  }
}

TEST_CASE("row-space equality") {
  Field f(7);
  auto code = make_code(f, 6, 3, Matrix::parse(f, "2,5,3;2,1,1;3,2,2"));
  Matrix g = generator(code);
  CHECK(code_equal(g, g.rref().mat));
  Matrix scaled_row = g;
  for (std::size_t j = 0; j < 6; ++j) scaled_row.set(1, j, g.at(1, j) * f.elem(2));
  CHECK(code_equal(g, scaled_row));
  // different code entirely
  Matrix other = generator(make_code(f, 6, 3, Matrix(f, 3, 3)));
  CHECK_FALSE(code_equal(g, other));
  CHECK_THROWS_AS(code_equal(g, Matrix(f, 3, 5)), validation_error);
  CHECK_THROWS_AS(code_equal(g, Matrix(Field(5), 3, 6)), validation_error);
}

TEST_CASE("encode then interpolate recovers the message on distance-checked codes") {
  Field f(7);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::uint64_t> dist(0, 6);
  auto code = make_code(f, 6, 3, Matrix::parse(f, "2,5,3;2,1,1;3,2,2"));
  Matrix g = generator(code);
  // any k columns of an MDS generator are invertible; decode from positions {1,3,5}
  std::vector<std::size_t> pos{1, 3, 5};
  Matrix sub = g.select_columns(pos);
  auto inv = sub.inverse();
  REQUIRE(inv.has_value());
  for (int rep = 0; rep < 20; ++rep) {
    std::vector<Felt> msg{f.elem(dist(rng)), f.elem(dist(rng)), f.elem(dist(rng))};
    auto word = encode(code, msg);
    Matrix row(f, 1, 3);
    for (std::size_t t = 0; t < 3; ++t) row.set(0, t, word[pos[t]]);
    Matrix rec = row * *inv;
    for (std::size_t t = 0; t < 3; ++t) CHECK(rec.at(0, t) == msg[t]);
  }
}
