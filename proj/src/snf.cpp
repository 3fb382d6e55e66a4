#include "orbcat/snf.hpp"

#include <cstdint>
#include <limits>
#include <map>
#include <set>

namespace orbcat {

DenseMat DenseMat::from_rows(const std::vector<std::vector<long long>>& rows) {
  DenseMat m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (int r = 0; r < m.rows; ++r) {
    if (static_cast<int>(rows[r].size()) != m.cols) throw error("matrix: ragged rows");
    for (int c = 0; c < m.cols; ++c) m.at(r, c) = static_cast<long>(rows[r][c]);
  }
  return m;
}

SparseMat SparseMat::from_triplets(int rows, int cols,
                                   const std::vector<std::tuple<int, int, long long>>& entries) {
  SparseMat m;
  m.rows = rows;
  m.cols = cols;
  m.col.resize(cols);
  std::vector<std::map<int, long long>> acc(cols);
  for (auto [r, c, v] : entries) {
    if (r < 0 || r >= rows || c < 0 || c >= cols) throw error("matrix: entry out of range");
    acc[c][r] += v;
  }
  for (int c = 0; c < cols; ++c)
    for (auto [r, v] : acc[c])
      if (v != 0) m.col[c].push_back({r, v});
  return m;
}

long long SparseMat::nnz() const {
  long long n = 0;
  for (const auto& c : col) n += static_cast<long long>(c.size());
  return n;
}

DenseMat SparseMat::dense() const {
  DenseMat m(rows, cols);
  for (int c = 0; c < cols; ++c)
    for (auto [r, v] : col[c]) m.at(r, c) = static_cast<long>(v);
  return m;
}

std::vector<mpz_class> SnfResult::nontrivial() const {
  std::vector<mpz_class> out;
  for (const auto& f : factors)
    if (f > 1) out.push_back(f);
  return out;
}

SnfResult smith_normal_form(DenseMat m) {
  int n = std::min(m.rows, m.cols);
  int t = 0;
  while (t < n) {
    // pivot of minimal absolute value in the remaining submatrix
    int pr = -1, pc = -1;
    mpz_class best;
    for (int r = t; r < m.rows; ++r)
      for (int c = t; c < m.cols; ++c) {
        if (m.at(r, c) == 0) continue;
        mpz_class v = abs(m.at(r, c));
        if (pr < 0 || v < best) {
          best = v;
          pr = r;
          pc = c;
        }
      }
    if (pr < 0) break;
    if (pr != t)
      for (int c = 0; c < m.cols; ++c) std::swap(m.at(t, c), m.at(pr, c));
    if (pc != t)
      for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, t), m.at(r, pc));

    bool restart = false;
    for (int r = t + 1; r < m.rows && !restart; ++r) {
      if (m.at(r, t) == 0) continue;
      mpz_class q = m.at(r, t) / m.at(t, t);  // truncated division
      if (q != 0)
        for (int c = t; c < m.cols; ++c) m.at(r, c) -= q * m.at(t, c);
      if (m.at(r, t) != 0) restart = true;  // remainder beats the pivot
    }
    if (restart) continue;
    for (int c = t + 1; c < m.cols && !restart; ++c) {
      if (m.at(t, c) == 0) continue;
      mpz_class q = m.at(t, c) / m.at(t, t);
      if (q != 0)
        for (int r = t; r < m.rows; ++r) m.at(r, c) -= q * m.at(r, t);
      if (m.at(t, c) != 0) restart = true;
    }
    if (restart) continue;

    // pivot must divide the rest of the submatrix
    bool fixed = false;
    for (int r = t + 1; r < m.rows && !fixed; ++r)
      for (int c = t + 1; c < m.cols && !fixed; ++c)
        if (m.at(r, c) % m.at(t, t) != 0) {
          for (int cc = t; cc < m.cols; ++cc) m.at(t, cc) += m.at(r, cc);
          fixed = true;
        }
    if (fixed) continue;
    ++t;
  }

  SnfResult res;
  res.rank = t;
  res.factors.resize(t);
  for (int i = 0; i < t; ++i) res.factors[i] = abs(m.at(i, i));
  // enforce the divisibility chain
  for (int i = 0; i < t; ++i)
    for (int j = i + 1; j < t; ++j)
      if (res.factors[j] % res.factors[i] != 0) {
        mpz_class g = gcd(res.factors[i], res.factors[j]);
        mpz_class l = res.factors[i] / g * res.factors[j];
        res.factors[i] = g;
        res.factors[j] = l;
      }
  return res;
}

namespace {

struct Overflow {};

void assign_entry(mpz_class& dst, long long v) { dst = static_cast<long>(v); }
void assign_entry(mpz_class& dst, const mpz_class& v) { dst = v; }

long long checked_sub_mul(long long e, long long q, long long p) {
  // e - q*p with overflow detection
  __int128 r = static_cast<__int128>(e) - static_cast<__int128>(q) * p;
  if (r > std::numeric_limits<long long>::max() / 4 || r < std::numeric_limits<long long>::min() / 4)
    throw Overflow{};
  return static_cast<long long>(r);
}

mpz_class checked_sub_mul(const mpz_class& e, const mpz_class& q, const mpz_class& p) {
  return e - q * p;
}

template <typename Z>
SnfResult sparse_snf(const SparseMat& m) {
  std::vector<std::map<int, Z>> row(m.rows);
  std::vector<std::set<int>> col_rows(m.cols);
  for (int c = 0; c < m.cols; ++c)
    for (auto [r, v] : m.col[c]) {
      row[r][c] = Z(static_cast<long>(v));
      col_rows[c].insert(r);
    }

  long long units = 0;
  bool progress = true;
  while (progress) {
    progress = false;
    for (int r = 0; r < m.rows; ++r) {
      if (row[r].empty()) continue;
      // this row's ±1 entry with the sparsest column
      int best_c = -1;
      std::size_t best_deg = 0;
      for (const auto& [c, v] : row[r]) {
        if (v != 1 && v != -1) continue;
        std::size_t deg = col_rows[c].size();
        if (best_c < 0 || deg < best_deg) {
          best_c = c;
          best_deg = deg;
        }
      }
      if (best_c < 0) continue;
      const Z pivot = row[r][best_c];
      std::vector<int> touched(col_rows[best_c].begin(), col_rows[best_c].end());
      for (int r2 : touched) {
        if (r2 == r) continue;
        Z q = row[r2][best_c] * pivot;  // pivot = ±1, so q = entry / pivot
        for (const auto& [c, v] : row[r]) {
          auto it = row[r2].find(c);
          Z nv = checked_sub_mul(it == row[r2].end() ? Z(0) : it->second, q, v);
          if (nv == 0) {
            if (it != row[r2].end()) {
              row[r2].erase(it);
              col_rows[c].erase(r2);
            }
          } else {
            if (it == row[r2].end()) {
              row[r2][c] = nv;
              col_rows[c].insert(r2);
            } else {
              it->second = nv;
            }
          }
        }
      }
      for (const auto& [c, v] : row[r]) col_rows[c].erase(r);
      row[r].clear();
      ++units;
      progress = true;
    }
  }

  // remaining core, finished densely
  std::map<int, int> rmap, cmap;
  for (int r = 0; r < m.rows; ++r)
    if (!row[r].empty()) rmap.emplace(r, static_cast<int>(rmap.size()));
  for (int r = 0; r < m.rows; ++r)
    for (const auto& [c, v] : row[r]) cmap.emplace(c, static_cast<int>(cmap.size()));
  DenseMat core(static_cast<int>(rmap.size()), static_cast<int>(cmap.size()));
  for (auto [r, ri] : rmap)
    for (const auto& [c, v] : row[r]) assign_entry(core.at(ri, cmap.at(c)), v);
  SnfResult inner = smith_normal_form(std::move(core));

  SnfResult res;
  res.rank = units + inner.rank;
  res.factors.assign(units, 1);
  res.factors.insert(res.factors.end(), inner.factors.begin(), inner.factors.end());
  return res;
}

}  // namespace

SnfResult smith_normal_form(const SparseMat& m) {
  try {
    return sparse_snf<long long>(m);
  } catch (const Overflow&) {
    return sparse_snf<mpz_class>(m);
  }
}

}  // namespace orbcat
