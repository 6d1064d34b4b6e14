#ifndef KRING_LATTICE_HPP
#define KRING_LATTICE_HPP

#include <gmpxx.h>

#include <vector>

namespace kring {

using Int = mpz_class;
using LatticeVector = std::vector<Int>;

// Dense integer matrix, row-major.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Int> entries;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), entries(size_t(r) * size_t(c)) {}

  Int& at(int i, int j) { return entries[size_t(i) * cols + j]; }
  const Int& at(int i, int j) const { return entries[size_t(i) * cols + j]; }

  static IntMatrix identity(int n);
  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows, int cols);
};

struct SnfResult {
  int rank = 0;
  std::vector<Int> invariant_factors;  // d_1 | d_2 | ... | d_rank, all positive

  bool all_factors_one() const;
};

// Smith normal form summary of an integer matrix.  The cokernel of m, i.e.
// Z^cols modulo the lattice spanned by the rows, is Z^(cols-rank) + sum Z/d_i.
SnfResult smith_normal_form(const IntMatrix& m);

// As smith_normal_form, but also accumulates the column operations into a
// unimodular matrix V.  The map w -> w*V carries the row lattice of m onto
// the row lattice of diag(d_1,...,d_rank,0,...), so lattice membership and
// cokernel coordinates become componentwise divisibility conditions.
struct SnfTransform {
  SnfResult snf;
  IntMatrix col_transform;  // cols x cols, unimodular
};
SnfTransform smith_normal_form_with_transform(const IntMatrix& m);

// w*V  (w a row vector of length V.rows).
std::vector<Int> apply_column_transform(const IntMatrix& v, const std::vector<Int>& w);

// True iff w lies in the row lattice of the matrix t was computed from.
bool in_row_lattice(const SnfTransform& t, const std::vector<Int>& w);

// Coordinates of w in the free cokernel Z^(cols-rank).  Only meaningful when
// every invariant factor is 1; the caller is expected to have checked.
std::vector<Int> free_quotient_coordinates(const SnfTransform& t, const std::vector<Int>& w);

// Lattice basis of {x in Z^cols : m*x = 0}.  The basis is saturated: it spans
// the rational kernel and extends to a basis of Z^cols.
std::vector<LatticeVector> kernel_lattice_basis(const IntMatrix& m);

// gcd of coordinates is 1.  Throws std::invalid_argument on the zero vector,
// which would be a degenerate ray.
bool is_primitive(const LatticeVector& v);

// True iff the vectors extend to a Z-basis of the ambient lattice: the
// stacked matrix has full SNF rank with all invariant factors 1.  More
// vectors than the dimension can never extend, hence false.
bool is_unimodular_set(const std::vector<LatticeVector>& vs);

// Dot product under the identification of the dual lattice with Z^n.
Int pairing(const LatticeVector& u, const LatticeVector& v);

// Incremental row-echelon basis of the lattice spanned by the inserted rows.
// Only unimodular row operations are applied, so the compacted matrix has the
// same row lattice (hence the same rank and invariant factors) as the full
// row set, at a fraction of the SNF cost for tall matrices.
class RowLattice {
 public:
  explicit RowLattice(int cols) : cols_(cols) {}

  void insert(std::vector<Int> row);
  int rank() const { return int(rows_.size()); }
  int cols() const { return cols_; }
  IntMatrix matrix() const;

 private:
  int cols_;
  std::vector<std::vector<Int>> rows_;  // ordered by pivot column, pivots positive
  std::vector<int> pivots_;
};

}  // namespace kring

#endif
