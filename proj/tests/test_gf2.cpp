#include "doctest.h"
#include "urllc/gf2.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace urllc;

namespace {

// ----- independent oracles on vector<vector<int>> matrices -----

using IntMat = std::vector<std::vector<int>>;

IntMat to_int(const BitMatrix& m) {
  IntMat a(m.rows, std::vector<int>(m.cols, 0));
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) a[i][j] = m.get(i, j);
  return a;
}

BitMatrix from_strings(const std::vector<std::string>& rows) {
  BitMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      if (rows[i][j] == '1') m.set(i, j, true);
  return m;
}

// plain elimination, no packing, no cleverness
std::size_t rank_oracle(IntMat a) {
  if (a.empty()) return 0;
  std::size_t rows = a.size(), cols = a[0].size(), r = 0;
  for (std::size_t j = 0; j < cols && r < rows; ++j) {
    std::size_t p = r;
    while (p < rows && a[p][j] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < rows; ++i)
      if (i != r && a[i][j]) {
        for (std::size_t c = 0; c < cols; ++c) a[i][c] ^= a[r][c];
      }
    ++r;
  }
  return r;
}

// exhaustive row space of a small matrix, as a set of bit strings
std::set<std::string> row_space(const BitMatrix& m) {
  std::set<std::string> s;
  REQUIRE(m.rows <= 16);
  for (std::uint64_t u = 0; u < (std::uint64_t(1) << m.rows); ++u) {
    BitVec v(m.rows);
    for (std::size_t i = 0; i < m.rows; ++i)
      if ((u >> i) & 1) v.set(i, true);
    s.insert(mat_vec_mod2(m, v).to_string());
  }
  return s;
}

std::string permute_string(const std::string& s, const Permutation& p) {
  std::string r(s.size(), '0');
  for (std::size_t i = 0; i < p.map.size(); ++i) r[i] = s[p.map[i]];
  return r;
}

BitMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  BitMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (rng() & 1) m.set(i, j, true);
  return m;
}

}  // namespace

TEST_CASE("bitvec basics: set/get, weight, xor, tail invariant") {
  BitVec v(70);
  v.set(0, true);
  v.set(69, true);
  CHECK(v.get(0));
  CHECK(v.get(69));
  CHECK_FALSE(v.get(33));
  CHECK(v.weight() == 2);

  BitVec u(70);
  u.set(69, true);
  u.set(5, true);
  v.xor_with(u);
  CHECK(v.weight() == 2);
  CHECK(v.get(5));
  CHECK_FALSE(v.get(69));

  // words beyond n stay zero
  v.clear_tail();
  CHECK((v.w[1] >> 6) == 0);
}

TEST_CASE("mat_vec_mod2 equals hand XOR of selected rows") {
  BitMatrix g = from_strings({"1100", "0110", "0011"});
  BitVec v(3);
  v.set(0, true);
  v.set(2, true);
  // 1100 ^ 0011 = 1111
  CHECK(mat_vec_mod2(g, v).to_string() == "1111");

  BitVec zero(3);
  CHECK(mat_vec_mod2(g, zero).to_string() == "0000");

  BitVec all(3);
  all.set(0, true);
  all.set(1, true);
  all.set(2, true);
  // 1100 ^ 0110 ^ 0011 = 1001
  CHECK(mat_vec_mod2(g, all).to_string() == "1001");
}

TEST_CASE("rank_mod2 matches the naive oracle on random matrices") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t rows = 1 + rng() % 12, cols = 1 + rng() % 20;
    BitMatrix m = random_matrix(rows, cols, rng);
    CHECK(rank_mod2(m) == rank_oracle(to_int(m)));
  }
}

TEST_CASE("permutation apply/inverse round-trips, forward gathers") {
  Permutation p;
  p.map = {2, 0, 3, 1};
  REQUIRE(p.is_valid());

  std::vector<double> y = {10.0, 11.0, 12.0, 13.0};
  auto f = apply_forward(y, p);
  CHECK(f == std::vector<double>{12.0, 10.0, 13.0, 11.0});
  CHECK(apply_inverse(f, p) == y);

  BitVec b(4);
  b.set(2, true);
  auto fb = apply_forward(b, p);
  CHECK(fb.to_string() == "1000");
  CHECK(apply_inverse(fb, p) == b);

  auto q = p.inverse();
  CHECK(apply_forward(apply_forward(y, p), q) == y);

  Permutation bad;
  bad.map = {0, 0, 1, 2};
  CHECK_FALSE(bad.is_valid());
}

TEST_CASE("gauss_jordan_systematic: identity preference on a 2x4 generator") {
  BitMatrix g = from_strings({"1100", "0110"});
  auto sf = gauss_jordan_systematic(g, Permutation(4));

  CHECK(sf.kappa.map == std::vector<std::size_t>{0, 1, 2, 3});
  // unique [I|P] basis of this row space: rows 1010, 0110 -> P rows {10, 10}
  // (computed with the exhaustive row-space oracle below as well)
  CHECK(sf.g == from_strings({"1010", "0110"}));

  CHECK(row_space(sf.g) == row_space(g));
}

TEST_CASE("gauss_jordan_systematic: preference can move a column into the basis") {
  BitMatrix g = from_strings({"1100", "0110"});
  Permutation pref;
  pref.map = {2, 0, 1, 3};
  auto sf = gauss_jordan_systematic(g, pref);
  CHECK(sf.kappa.map[0] == 2);
  CHECK(sf.kappa.map[1] == 0);
  // still systematic and row-space preserving
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) CHECK(sf.g.get(i, j) == (i == j));

  std::set<std::string> expect;
  for (const auto& c : row_space(g)) expect.insert(permute_string(c, sf.kappa));
  CHECK(row_space(sf.g) == expect);
}

TEST_CASE("gauss_jordan_systematic: dependent preferred column is deferred") {
  // second column equals the first -> preference {0,1,...} must defer col 1
  BitMatrix g = from_strings({"1100", "1111"});
  auto sf = gauss_jordan_systematic(g, Permutation(4));
  CHECK(sf.kappa.map == std::vector<std::size_t>{0, 2, 1, 3});
  CHECK(sf.g == from_strings({"1010", "0101"}));
}

TEST_CASE("gauss_jordan_systematic: rank-deficient generator throws") {
  BitMatrix g = from_strings({"1100", "1100"});
  CHECK_THROWS_AS(gauss_jordan_systematic(g, Permutation(4)), std::invalid_argument);
}

TEST_CASE("gauss_jordan_systematic: random generators, row space is permuted row space") {
  std::mt19937_64 rng(7);
  int done = 0;
  while (done < 60) {
    std::size_t k = 2 + rng() % 5, n = k + 1 + rng() % 6;
    BitMatrix g = random_matrix(k, n, rng);
    if (rank_mod2(g) < k) continue;

    // random preference permutation
    Permutation pref(n);
    std::shuffle(pref.map.begin(), pref.map.end(), rng);

    auto sf = gauss_jordan_systematic(g, pref);
    REQUIRE(sf.kappa.is_valid());

    // [I_k | P] shape
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) CHECK(sf.g.get(i, j) == (i == j));

    // row space of G_kappa == kappa-permuted row space of G  (exhaustive)
    std::set<std::string> expect;
    for (const auto& c : row_space(g)) expect.insert(permute_string(c, sf.kappa));
    CHECK(row_space(sf.g) == expect);

    // pivot positions keep preference order: kappa's first k entries appear
    // in the same relative order as in the preference list
    std::vector<std::size_t> pos(n);
    for (std::size_t t = 0; t < n; ++t) pos[pref.map[t]] = t;
    for (std::size_t i = 0; i + 1 < k; ++i)
      CHECK(pos[sf.kappa.map[i]] < pos[sf.kappa.map[i + 1]]);
    for (std::size_t i = k; i + 1 < n; ++i)
      CHECK(pos[sf.kappa.map[i]] < pos[sf.kappa.map[i + 1]]);
    ++done;
  }
}
