#pragma once

#include <gmpxx.h>

#include <tuple>
#include <vector>

#include "orbcat/util.hpp"

namespace orbcat {

struct DenseMat {
  int rows = 0, cols = 0;
  std::vector<mpz_class> a;

  DenseMat() = default;
  DenseMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}
  mpz_class& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  const mpz_class& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

  static DenseMat from_rows(const std::vector<std::vector<long long>>& rows);
};

/// Column-major sparse integer matrix (entries sorted by row inside a column).
struct SparseMat {
  int rows = 0, cols = 0;
  std::vector<std::vector<std::pair<int, long long>>> col;

  static SparseMat from_triplets(int rows, int cols,
                                 const std::vector<std::tuple<int, int, long long>>& entries);
  long long nnz() const;
  DenseMat dense() const;
};

struct SnfResult {
  long long rank = 0;
  std::vector<mpz_class> factors;  // length == rank, positive, d1 | d2 | ... | dr

  std::vector<mpz_class> nontrivial() const;  // the factors > 1
};

/// Dense Smith normal form over exact big integers, pivoting on the entry
/// of minimal absolute value.
SnfResult smith_normal_form(DenseMat m);

/// Sparse route: peel off ±1 pivots (each contributes an invariant factor
/// 1) with fill-aware ordering, then finish the small remaining core with
/// the dense routine. Falls back to big-integer rows if an intermediate
/// value would overflow 64 bits.
SnfResult smith_normal_form(const SparseMat& m);

}  // namespace orbcat
