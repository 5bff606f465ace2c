#include "goldman/linalg.hpp"

#include <cassert>
#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace goldman {

IntMat identity_matrix(long n) {
  IntMat m(n, std::vector<Int>(n, 0));
  for (long i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
  long n = (long)a.size();
  long k = n ? (long)a[0].size() : 0;
  long p = k ? (long)b[0].size() : (b.empty() ? 0 : (long)b[0].size());
  IntMat c(n, std::vector<Int>(p, 0));
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < k; ++j)
      if (a[i][j] != 0)
        for (long l = 0; l < p; ++l) c[i][l] += a[i][j] * b[j][l];
  return c;
}

std::vector<Int> mat_vec(const IntMat& a, const std::vector<Int>& x) {
  std::vector<Int> y(a.size(), 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < x.size(); ++j)
      if (a[i][j] != 0) y[i] += a[i][j] * x[j];
  return y;
}

namespace {

void row_axpy(IntMat& m, long dst, long src, const Int& q) {
  for (size_t j = 0; j < m[dst].size(); ++j) m[dst][j] -= q * m[src][j];
}

void col_axpy(IntMat& m, long dst, long src, const Int& q) {
  for (size_t i = 0; i < m.size(); ++i) m[i][dst] -= q * m[i][src];
}

void col_swap(IntMat& m, long a, long b) {
  for (size_t i = 0; i < m.size(); ++i) std::swap(m[i][a], m[i][b]);
}

Int tq(const Int& a, const Int& b) {
  Int q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int fq(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

IntMat transpose(const IntMat& a) {
  if (a.empty()) return {};
  IntMat t(a[0].size(), std::vector<Int>(a.size(), 0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

}  // namespace

HermiteForm hnf_rows(const IntMat& a) {
  HermiteForm hf;
  long rows = (long)a.size();
  long cols = rows ? (long)a[0].size() : 0;
  hf.h = a;
  hf.transform = identity_matrix(rows);
  hf.transform_inv = identity_matrix(rows);
  IntMat& h = hf.h;
  IntMat& t = hf.transform;
  IntMat& ti = hf.transform_inv;

  auto swap_rows = [&](long i, long j) {
    if (i == j) return;
    std::swap(h[i], h[j]);
    std::swap(t[i], t[j]);
    col_swap(ti, i, j);
  };
  auto add_rows = [&](long dst, long src, const Int& q) {
    // h[dst] -= q * h[src]; inverse op: column src += q * column dst
    row_axpy(h, dst, src, q);
    row_axpy(t, dst, src, q);
    for (long i = 0; i < rows; ++i) ti[i][src] += q * ti[i][dst];
  };
  auto negate_row = [&](long i) {
    for (auto& v : h[i]) v = -v;
    for (auto& v : t[i]) v = -v;
    for (long r = 0; r < rows; ++r) ti[r][i] = -ti[r][i];
  };

  long row = 0;
  for (long col = 0; col < cols && row < rows; ++col) {
    // euclid the column entries at or below `row` down to a single pivot
    while (true) {
      long best = -1;
      for (long i = row; i < rows; ++i) {
        if (h[i][col] == 0) continue;
        if (best < 0 || abs(h[i][col]) < abs(h[best][col])) best = i;
      }
      if (best < 0) break;
      swap_rows(row, best);
      bool done = true;
      for (long i = row + 1; i < rows; ++i) {
        if (h[i][col] == 0) continue;
        add_rows(i, row, tq(h[i][col], h[row][col]));
        if (h[i][col] != 0) done = false;
      }
      if (done) break;
    }
    if (h[row][col] == 0) continue;
    if (h[row][col] < 0) negate_row(row);
    for (long i = 0; i < row; ++i)
      if (h[i][col] != 0) add_rows(i, row, fq(h[i][col], h[row][col]));
    hf.pivot_cols.push_back(col);
    ++row;
  }
  return hf;
}

KernelDecomposition integer_kernel(const IntMat& m) {
  long r = (long)m.size();
  for (const auto& row : m)
    if ((long)row.size() != r) throw std::invalid_argument("integer_kernel: matrix not square");

  // diagonalize a = u m v by integer row/column operations, tracking v and
  // its inverse w (row ops need no tracking)
  IntMat a = m;
  IntMat v = identity_matrix(r);
  IntMat w = identity_matrix(r);

  auto swap_cols = [&](long i, long j) {
    if (i == j) return;
    col_swap(a, i, j);
    col_swap(v, i, j);
    std::swap(w[i], w[j]);
  };
  auto add_cols = [&](long dst, long src, const Int& q) {
    // col dst -= q * col src; on w: row src += q * row dst
    col_axpy(a, dst, src, q);
    col_axpy(v, dst, src, q);
    for (long j = 0; j < r; ++j) w[src][j] += q * w[dst][j];
  };

  long t = 0;
  for (long k = 0; k < r; ++k) {
    while (true) {
      long bi = -1, bj = -1;
      for (long i = k; i < r; ++i)
        for (long j = k; j < r; ++j) {
          if (a[i][j] == 0) continue;
          if (bi < 0 || abs(a[i][j]) < abs(a[bi][bj])) { bi = i; bj = j; }
        }
      if (bi < 0) goto diagonal_done;
      if (bi != k) std::swap(a[bi], a[k]);
      swap_cols(bj, k);
      bool clean = true;
      for (long i = k + 1; i < r; ++i) {
        if (a[i][k] == 0) continue;
        row_axpy(a, i, k, tq(a[i][k], a[k][k]));
        if (a[i][k] != 0) clean = false;
      }
      for (long j = k + 1; j < r; ++j) {
        if (a[k][j] == 0) continue;
        add_cols(j, k, tq(a[k][j], a[k][k]));
        if (a[k][j] != 0) clean = false;
      }
      if (clean) break;
    }
    ++t;
  }
diagonal_done:

  KernelDecomposition kd;
  kd.rank = t;
  long s = r - t;

  // kernel basis: columns t..r-1 of v, brought to column Hermite form
  if (s > 0) {
    IntMat kt(s, std::vector<Int>(r, 0));  // kernel transposed: s x r
    for (long j = 0; j < s; ++j)
      for (long i = 0; i < r; ++i) kt[j][i] = v[i][t + j];
    HermiteForm kh = hnf_rows(kt);
    kd.kernel_cols.assign(s, std::vector<Int>(r, 0));
    for (long j = 0; j < s; ++j)
      for (long i = 0; i < r; ++i) kd.kernel_cols[j][i] = kh.h[j][i];
  }

  // projection: first t rows of w, in row Hermite form; section adjusted by
  // the inverse transform so projection * section stays the identity
  IntMat p(t, std::vector<Int>(r, 0));
  for (long i = 0; i < t; ++i) p[i] = w[i];
  IntMat sec(r, std::vector<Int>(t, 0));
  for (long i = 0; i < r; ++i)
    for (long j = 0; j < t; ++j) sec[i][j] = v[i][j];
  if (t > 0) {
    HermiteForm ph = hnf_rows(p);
    p = ph.h;
    sec = mat_mul(sec, ph.transform_inv);
  }

  // reduce section columns modulo the kernel lattice so the chosen lift is
  // the canonical coset representative
  if (s > 0 && t > 0) {
    std::vector<long> pivot_rows(s);
    for (long j = 0; j < s; ++j) {
      long pr = 0;
      while (pr < r && kd.kernel_cols[j][pr] == 0) ++pr;
      pivot_rows[j] = pr;
    }
    for (long col = 0; col < t; ++col) {
      for (long j = 0; j < s; ++j) {
        long pr = pivot_rows[j];
        const Int& piv = kd.kernel_cols[j][pr];
        Int q = fq(sec[pr][col], piv);
        if (q != 0)
          for (long i = 0; i < r; ++i) sec[i][col] -= q * kd.kernel_cols[j][i];
      }
    }
  }

  kd.projection = std::move(p);
  kd.section = std::move(sec);
  return kd;
}

}  // namespace goldman
