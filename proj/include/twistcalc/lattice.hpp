#pragma once
#include <gmpxx.h>

#include <initializer_list>
#include <vector>

#include "twistcalc/errors.hpp"

namespace twistcalc {

// Arbitrary-precision integer. Everything in this module is exact; there is
// no floating point anywhere.
using Int = mpz_class;

class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Int& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  IntMatrix operator*(const IntMatrix& rhs) const;
  std::vector<Int> operator*(const std::vector<Int>& v) const;
  bool operator==(const IntMatrix& rhs) const = default;

  IntMatrix transposed() const;
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[a] += c * row[b], col[a] += c * col[b]
  void add_row(std::size_t a, std::size_t b, const Int& c);
  void add_col(std::size_t a, std::size_t b, const Int& c);
  void negate_row(std::size_t a);
  void negate_col(std::size_t a);

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> e_;
};

// Exact determinant (Bareiss fraction-free elimination). Square input only.
Int determinant(const IntMatrix& m);

// U * M * V = S with U, V unimodular and S diagonal, d_1 | d_2 | ... | d_k,
// all d_i >= 0. Deterministic: pivoting picks the minimal-absolute-value
// nonzero entry of the working submatrix, first occurrence in row-major
// order winning ties.
struct SNFDecomposition {
  IntMatrix u, s, v;
};

SNFDecomposition smith_normal_form(const IntMatrix& m);

// Integer solutions of M x = v: one particular solution plus a basis of the
// integer kernel of M (columns of the SNF cofactor V, in SNF-induced order).
struct SolutionSet {
  bool solvable = false;
  std::vector<Int> particular;
  std::vector<std::vector<Int>> kernel;
};

SolutionSet solve_integral(const IntMatrix& m, const std::vector<Int>& v);

// Finitely presented abelian group Z^rank / <relations>.
struct GroupPresentation {
  std::size_t rank = 0;
  std::vector<std::vector<Int>> relations;
};

struct GroupElement {
  std::vector<Int> coordinates;
};

// True iff x lies in the relation lattice of p (i.e. represents zero).
bool element_is_zero(const GroupPresentation& p, const GroupElement& x);

}  // namespace twistcalc
