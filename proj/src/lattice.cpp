#include "kring/lattice.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace kring {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows, int cols) {
  IntMatrix m(int(rows.size()), cols);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (int(rows[i].size()) != cols)
      throw std::invalid_argument("IntMatrix::from_rows: ragged row");
    for (int j = 0; j < cols; ++j) m.at(int(i), j) = rows[i][j];
  }
  return m;
}

bool SnfResult::all_factors_one() const {
  for (const Int& d : invariant_factors)
    if (d != 1) return false;
  return true;
}

namespace {

void swap_rows(IntMatrix& a, int i, int j) {
  if (i == j) return;
  for (int c = 0; c < a.cols; ++c) mpz_swap(a.at(i, c).get_mpz_t(), a.at(j, c).get_mpz_t());
}

void swap_cols(IntMatrix& a, IntMatrix* v, int i, int j) {
  if (i == j) return;
  for (int r = 0; r < a.rows; ++r) mpz_swap(a.at(r, i).get_mpz_t(), a.at(r, j).get_mpz_t());
  if (v)
    for (int r = 0; r < v->rows; ++r) mpz_swap(v->at(r, i).get_mpz_t(), v->at(r, j).get_mpz_t());
}

void negate_row(IntMatrix& a, int i) {
  for (int c = 0; c < a.cols; ++c) mpz_neg(a.at(i, c).get_mpz_t(), a.at(i, c).get_mpz_t());
}

void negate_col(IntMatrix& a, IntMatrix* v, int j) {
  for (int r = 0; r < a.rows; ++r) mpz_neg(a.at(r, j).get_mpz_t(), a.at(r, j).get_mpz_t());
  if (v)
    for (int r = 0; r < v->rows; ++r) mpz_neg(v->at(r, j).get_mpz_t(), v->at(r, j).get_mpz_t());
}

// row_dst -= q * row_src
void submul_row(IntMatrix& a, int dst, int src, const Int& q, int from_col) {
  for (int c = from_col; c < a.cols; ++c)
    mpz_submul(a.at(dst, c).get_mpz_t(), q.get_mpz_t(), a.at(src, c).get_mpz_t());
}

// col_dst -= q * col_src
void submul_col(IntMatrix& a, IntMatrix* v, int dst, int src, const Int& q, int from_row) {
  for (int r = from_row; r < a.rows; ++r)
    mpz_submul(a.at(r, dst).get_mpz_t(), q.get_mpz_t(), a.at(r, src).get_mpz_t());
  if (v)
    for (int r = 0; r < v->rows; ++r)
      mpz_submul(v->at(r, dst).get_mpz_t(), q.get_mpz_t(), v->at(r, src).get_mpz_t());
}

// Gcd-driven diagonalization.  Pivot selection takes the entry of least
// nonzero absolute value in the trailing submatrix; Euclidean steps shrink
// the pivot until it divides its row and column, then a divisibility sweep
// over the submatrix guarantees d_s | d_{s+1}.
SnfResult snf_core(IntMatrix a, IntMatrix* v) {
  const int m = a.rows, n = a.cols;
  if (v) *v = IntMatrix::identity(n);
  const int limit = std::min(m, n);
  Int q, r;
  int s = 0;
  while (s < limit) {
    int pi = -1, pj = -1;
    for (int i = s; i < m; ++i)
      for (int j = s; j < n; ++j) {
        const Int& e = a.at(i, j);
        if (e != 0 && (pi < 0 || mpz_cmpabs(e.get_mpz_t(), a.at(pi, pj).get_mpz_t()) < 0)) {
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;  // trailing submatrix is zero
    swap_rows(a, s, pi);
    swap_cols(a, v, s, pj);
    if (a.at(s, s) < 0) negate_row(a, s);

    bool settled = false;
    while (!settled) {
      settled = true;
      // clear column s below the pivot
      for (int i = s + 1; i < m && settled; ++i) {
        if (a.at(i, s) == 0) continue;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.at(i, s).get_mpz_t(), a.at(s, s).get_mpz_t());
        if (q != 0) submul_row(a, i, s, q, s);
        if (r != 0) {  // strictly smaller positive remainder becomes the pivot
          swap_rows(a, s, i);
          settled = false;
        }
      }
      if (!settled) continue;
      // clear row s right of the pivot
      for (int j = s + 1; j < n && settled; ++j) {
        if (a.at(s, j) == 0) continue;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.at(s, j).get_mpz_t(), a.at(s, s).get_mpz_t());
        if (q != 0) submul_col(a, v, j, s, q, s);
        if (r != 0) {
          swap_cols(a, v, s, j);
          if (a.at(s, s) < 0) negate_col(a, v, s);
          settled = false;
        }
      }
      if (!settled) continue;
      // pivot must divide the whole trailing submatrix
      for (int i = s + 1; i < m && settled; ++i)
        for (int j = s + 1; j < n && settled; ++j)
          if (!mpz_divisible_p(a.at(i, j).get_mpz_t(), a.at(s, s).get_mpz_t())) {
            for (int c = s; c < n; ++c)
              mpz_add(a.at(s, c).get_mpz_t(), a.at(s, c).get_mpz_t(), a.at(i, c).get_mpz_t());
            settled = false;
          }
    }
    ++s;
  }
  SnfResult out;
  out.rank = s;
  out.invariant_factors.reserve(s);
  for (int k = 0; k < s; ++k) out.invariant_factors.push_back(a.at(k, k));
  return out;
}

}  // namespace

SnfResult smith_normal_form(const IntMatrix& m) { return snf_core(m, nullptr); }

SnfTransform smith_normal_form_with_transform(const IntMatrix& m) {
  SnfTransform t;
  t.snf = snf_core(m, &t.col_transform);
  return t;
}

std::vector<Int> apply_column_transform(const IntMatrix& v, const std::vector<Int>& w) {
  if (int(w.size()) != v.rows)
    throw std::invalid_argument("apply_column_transform: length mismatch");
  std::vector<Int> z(v.cols, 0);
  for (int k = 0; k < v.rows; ++k) {
    if (w[k] == 0) continue;
    for (int j = 0; j < v.cols; ++j)
      mpz_addmul(z[j].get_mpz_t(), w[k].get_mpz_t(), v.at(k, j).get_mpz_t());
  }
  return z;
}

bool in_row_lattice(const SnfTransform& t, const std::vector<Int>& w) {
  std::vector<Int> z = apply_column_transform(t.col_transform, w);
  for (int j = 0; j < int(z.size()); ++j) {
    if (j < t.snf.rank) {
      if (!mpz_divisible_p(z[j].get_mpz_t(), t.snf.invariant_factors[j].get_mpz_t())) return false;
    } else if (z[j] != 0) {
      return false;
    }
  }
  return true;
}

std::vector<Int> free_quotient_coordinates(const SnfTransform& t, const std::vector<Int>& w) {
  std::vector<Int> z = apply_column_transform(t.col_transform, w);
  return std::vector<Int>(z.begin() + t.snf.rank, z.end());
}

std::vector<LatticeVector> kernel_lattice_basis(const IntMatrix& m) {
  SnfTransform t = smith_normal_form_with_transform(m);
  std::vector<LatticeVector> basis;
  for (int j = t.snf.rank; j < m.cols; ++j) {
    LatticeVector k(m.cols);
    for (int r = 0; r < m.cols; ++r) k[r] = t.col_transform.at(r, j);
    basis.push_back(std::move(k));
  }
  return basis;
}

bool is_primitive(const LatticeVector& v) {
  Int g = 0;
  for (const Int& c : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g == 0) throw std::invalid_argument("is_primitive: zero vector (degenerate ray)");
  return g == 1;
}

bool is_unimodular_set(const std::vector<LatticeVector>& vs) {
  if (vs.empty()) return true;
  const int n = int(vs[0].size());
  const int k = int(vs.size());
  for (const LatticeVector& v : vs)
    if (int(v.size()) != n) throw std::invalid_argument("is_unimodular_set: mixed dimensions");
  if (k > n) return false;
  SnfResult s = smith_normal_form(IntMatrix::from_rows(vs, n));
  return s.rank == k && s.all_factors_one();
}

Int pairing(const LatticeVector& u, const LatticeVector& v) {
  if (u.size() != v.size()) throw std::invalid_argument("pairing: dimension mismatch");
  Int acc = 0;
  for (size_t i = 0; i < u.size(); ++i)
    mpz_addmul(acc.get_mpz_t(), u[i].get_mpz_t(), v[i].get_mpz_t());
  return acc;
}

void RowLattice::insert(std::vector<Int> row) {
  if (int(row.size()) != cols_) throw std::invalid_argument("RowLattice::insert: length mismatch");
  Int q, g, x, y, pg, rg, t0, t1;
  size_t k = 0;  // index into rows_, ordered by pivot column
  for (int c = 0; c < cols_; ++c) {
    if (row[c] == 0) continue;
    while (k < rows_.size() && pivots_[k] < c) ++k;
    if (k == rows_.size() || pivots_[k] > c) {
      // new pivot column
      if (row[c] < 0)
        for (int j = c; j < cols_; ++j) mpz_neg(row[j].get_mpz_t(), row[j].get_mpz_t());
      rows_.insert(rows_.begin() + k, std::move(row));
      pivots_.insert(pivots_.begin() + k, c);
      return;
    }
    std::vector<Int>& piv = rows_[k];
    if (mpz_divisible_p(row[c].get_mpz_t(), piv[c].get_mpz_t())) {
      mpz_divexact(q.get_mpz_t(), row[c].get_mpz_t(), piv[c].get_mpz_t());
      for (int j = c; j < cols_; ++j)
        mpz_submul(row[j].get_mpz_t(), q.get_mpz_t(), piv[j].get_mpz_t());
    } else {
      // replace (piv, row) by the unimodular image ((x*piv + y*row), (p/g)*row - (r/g)*piv)
      mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), piv[c].get_mpz_t(),
                 row[c].get_mpz_t());
      mpz_divexact(pg.get_mpz_t(), piv[c].get_mpz_t(), g.get_mpz_t());
      mpz_divexact(rg.get_mpz_t(), row[c].get_mpz_t(), g.get_mpz_t());
      for (int j = c; j < cols_; ++j) {
        mpz_mul(t0.get_mpz_t(), x.get_mpz_t(), piv[j].get_mpz_t());
        mpz_addmul(t0.get_mpz_t(), y.get_mpz_t(), row[j].get_mpz_t());
        mpz_mul(t1.get_mpz_t(), pg.get_mpz_t(), row[j].get_mpz_t());
        mpz_submul(t1.get_mpz_t(), rg.get_mpz_t(), piv[j].get_mpz_t());
        mpz_swap(piv[j].get_mpz_t(), t0.get_mpz_t());
        mpz_swap(row[j].get_mpz_t(), t1.get_mpz_t());
      }
    }
  }
}

IntMatrix RowLattice::matrix() const { return IntMatrix::from_rows(rows_, cols_); }

}  // namespace kring
