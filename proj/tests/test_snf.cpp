#include <doctest.h>

#include <numeric>

#include "orbcat/snf.hpp"
#include "orbcat/util.hpp"

using namespace orbcat;

namespace {

// oracle 1: rank over Q by division-free elimination
int rank_over_q(DenseMat m) {
  int rank = 0;
  for (int c = 0; c < m.cols && rank < m.rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < m.rows; ++r)
      if (m.at(r, c) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    for (int cc = 0; cc < m.cols; ++cc) std::swap(m.at(rank, cc), m.at(pivot, cc));
    for (int r = rank + 1; r < m.rows; ++r) {
      if (m.at(r, c) == 0) continue;
      mpz_class a = m.at(rank, c), b = m.at(r, c);
      for (int cc = 0; cc < m.cols; ++cc) m.at(r, cc) = m.at(r, cc) * a - m.at(rank, cc) * b;
    }
    ++rank;
  }
  return rank;
}

// oracle 2: determinant divisors d_k = gcd of all k x k minors
mpz_class det(const DenseMat& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  int n = static_cast<int>(rows.size());
  if (n == 1) return m.at(rows[0], cols[0]);
  mpz_class sum = 0;
  for (int i = 0; i < n; ++i) {
    std::vector<int> sub_rows(rows.begin() + 1, rows.end());
    std::vector<int> sub_cols = cols;
    sub_cols.erase(sub_cols.begin() + i);
    mpz_class term = m.at(rows[0], cols[i]) * det(m, sub_rows, sub_cols);
    sum += (i % 2 == 0) ? term : -term;
  }
  return sum;
}

bool next_subset(std::vector<int>& idx, int n) {
  int k = static_cast<int>(idx.size());
  for (int i = k - 1; i >= 0; --i) {
    if (idx[i] < n - (k - i)) {
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

mpz_class determinant_divisor(const DenseMat& m, int k) {
  mpz_class g = 0;
  std::vector<int> ridx(k), cidx(k);
  std::iota(ridx.begin(), ridx.end(), 0);
  do {
    std::iota(cidx.begin(), cidx.end(), 0);
    do {
      g = gcd(g, det(m, ridx, cidx));
    } while (next_subset(cidx, m.cols));
  } while (next_subset(ridx, m.rows));
  return abs(g);
}

DenseMat random_matrix(Rng& rng, int rows, int cols, int lo, int hi) {
  DenseMat m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.at(r, c) = rng.range(lo, hi);
  return m;
}

SparseMat to_sparse(const DenseMat& m) {
  std::vector<std::tuple<int, int, long long>> entries;
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c)
      if (m.at(r, c) != 0) entries.push_back({r, c, m.at(r, c).get_si()});
  return SparseMat::from_triplets(m.rows, m.cols, entries);
}

}  // namespace

TEST_CASE("smith normal form on pinned matrices") {
  SnfResult r1 = smith_normal_form(DenseMat::from_rows({{2}}));
  CHECK(r1.rank == 1);
  CHECK(r1.factors == std::vector<mpz_class>{2});

  SnfResult r2 = smith_normal_form(DenseMat::from_rows({{1, 0}, {0, 0}}));
  CHECK(r2.rank == 1);
  CHECK(r2.factors == std::vector<mpz_class>{1});

  // diag(2, 3) ~ diag(1, 6)
  SnfResult r3 = smith_normal_form(DenseMat::from_rows({{2, 0}, {0, 3}}));
  CHECK(r3.factors == std::vector<mpz_class>({1, 6}));

  SnfResult r4 = smith_normal_form(DenseMat::from_rows({{2, 0}, {0, 6}}));
  CHECK(r4.factors == std::vector<mpz_class>({2, 6}));

  SnfResult r0 = smith_normal_form(DenseMat(0, 5));
  CHECK(r0.rank == 0);
}

TEST_CASE("smith normal form against rank and determinant-divisor oracles") {
  Rng rng(20260810);
  for (int trial = 0; trial < 25; ++trial) {
    DenseMat m = random_matrix(rng, 6, 7, -4, 4);
    SnfResult snf = smith_normal_form(m);

    CHECK(snf.rank == rank_over_q(m));

    // d_k = f_1 * ... * f_k for k <= min(3, rank)
    mpz_class prod = 1;
    for (int k = 1; k <= 3 && k <= snf.rank; ++k) {
      prod *= snf.factors[k - 1];
      CHECK(determinant_divisor(m, k) == prod);
    }
    for (std::size_t i = 1; i < snf.factors.size(); ++i)
      CHECK(snf.factors[i] % snf.factors[i - 1] == 0);
  }
}

TEST_CASE("sparse and dense routes agree") {
  Rng rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    int rows = rng.range(1, 12), cols = rng.range(1, 15);
    DenseMat m = random_matrix(rng, rows, cols, -3, 3);
    SnfResult dense = smith_normal_form(m);
    SnfResult sparse = smith_normal_form(to_sparse(m));
    CHECK(dense.rank == sparse.rank);
    CHECK(dense.factors == sparse.factors);
  }
}

TEST_CASE("nontrivial factor extraction") {
  SnfResult r = smith_normal_form(DenseMat::from_rows({{1, 0, 0}, {0, 2, 0}, {0, 0, 0}}));
  CHECK(r.nontrivial() == std::vector<mpz_class>{2});
}
