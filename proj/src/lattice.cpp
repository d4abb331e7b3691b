#include "twistcalc/lattice.hpp"

#include <algorithm>
#include <cstdlib>

namespace twistcalc {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  e_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error("DimensionMismatch", "ragged initializer");
    for (const auto& x : r) e_.push_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_)
    throw Error("DimensionMismatch", "matrix product shape mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out.at(i, j) += a * rhs.at(k, j);
    }
  return out;
}

std::vector<Int> IntMatrix::operator*(const std::vector<Int>& v) const {
  if (cols_ != v.size())
    throw Error("DimensionMismatch", "matrix-vector shape mismatch");
  std::vector<Int> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
  return out;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
}

void IntMatrix::add_row(std::size_t a, std::size_t b, const Int& c) {
  for (std::size_t j = 0; j < cols_; ++j) at(a, j) += c * at(b, j);
}

void IntMatrix::add_col(std::size_t a, std::size_t b, const Int& c) {
  for (std::size_t i = 0; i < rows_; ++i) at(i, a) += c * at(i, b);
}

void IntMatrix::negate_row(std::size_t a) {
  for (std::size_t j = 0; j < cols_; ++j) at(a, j) = -at(a, j);
}

void IntMatrix::negate_col(std::size_t a) {
  for (std::size_t i = 0; i < rows_; ++i) at(i, a) = -at(i, a);
}

Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error("DimensionMismatch", "determinant of non-square matrix");
  std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a.at(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        // Bareiss: division is exact
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a.at(i, j) = t;
      }
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : Int(-a.at(n - 1, n - 1));
}

namespace {

// Truncated quotient, |remainder| < |divisor|.
Int tquot(const Int& a, const Int& d) {
  Int q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
  return q;
}

bool find_min_pivot(const IntMatrix& s, std::size_t k, std::size_t& pi, std::size_t& pj) {
  bool found = false;
  Int best;
  for (std::size_t i = k; i < s.rows(); ++i)
    for (std::size_t j = k; j < s.cols(); ++j) {
      const Int& x = s.at(i, j);
      if (x == 0) continue;
      Int ax = abs(x);
      if (!found || ax < best) {
        found = true;
        best = ax;
        pi = i;
        pj = j;
      }
    }
  return found;
}

}  // namespace

SNFDecomposition smith_normal_form(const IntMatrix& m) {
  if (m.empty()) throw Error("EmptyMatrix", "smith_normal_form needs a nonempty matrix");
  const std::size_t r = m.rows(), c = m.cols();
  SNFDecomposition d{IntMatrix::identity(r), m, IntMatrix::identity(c)};
  IntMatrix& s = d.s;
  IntMatrix& u = d.u;
  IntMatrix& v = d.v;

  std::size_t k = 0;
  const std::size_t kmax = std::min(r, c);
  while (k < kmax) {
    std::size_t pi = k, pj = k;
    if (!find_min_pivot(s, k, pi, pj)) break;
    s.swap_rows(k, pi);
    u.swap_rows(k, pi);
    s.swap_cols(k, pj);
    v.swap_cols(k, pj);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = k + 1; i < r; ++i) {
        if (s.at(i, k) == 0) continue;
        Int q = tquot(s.at(i, k), s.at(k, k));
        if (q != 0) {
          s.add_row(i, k, -q);
          u.add_row(i, k, -q);
        }
        if (s.at(i, k) != 0) {
          // remainder became the smaller pivot
          s.swap_rows(k, i);
          u.swap_rows(k, i);
          clean = false;
        }
      }
      for (std::size_t j = k + 1; j < c; ++j) {
        if (s.at(k, j) == 0) continue;
        Int q = tquot(s.at(k, j), s.at(k, k));
        if (q != 0) {
          s.add_col(j, k, -q);
          v.add_col(j, k, -q);
        }
        if (s.at(k, j) != 0) {
          s.swap_cols(k, j);
          v.swap_cols(k, j);
          clean = false;
        }
      }
      if (clean) {
        // pivot must divide the rest of the submatrix for the chain d_k | d_{k+1}
        for (std::size_t i = k + 1; i < r && clean; ++i)
          for (std::size_t j = k + 1; j < c && clean; ++j)
            if (s.at(i, j) % s.at(k, k) != 0) {
              s.add_col(k, j, 1);
              v.add_col(k, j, 1);
              clean = false;
            }
      }
    }
    if (s.at(k, k) < 0) {
      s.negate_row(k);
      u.negate_row(k);
    }
    ++k;
  }
  return d;
}

SolutionSet solve_integral(const IntMatrix& m, const std::vector<Int>& v) {
  if (m.rows() != v.size())
    throw Error("DimensionMismatch", "right-hand side length does not match row count");
  SNFDecomposition d = smith_normal_form(m);
  const std::size_t r = m.rows(), c = m.cols();
  const std::size_t diag = std::min(r, c);

  SolutionSet out;
  for (std::size_t j = 0; j < c; ++j) {
    if (j >= diag || d.s.at(j, j) == 0) {
      std::vector<Int> basis(c);
      for (std::size_t i = 0; i < c; ++i) basis[i] = d.v.at(i, j);
      out.kernel.push_back(std::move(basis));
    }
  }

  std::vector<Int> uv = d.u * v;
  std::vector<Int> y(c);
  for (std::size_t i = 0; i < r; ++i) {
    if (i < diag && d.s.at(i, i) != 0) {
      if (uv[i] % d.s.at(i, i) != 0) return out;  // not solvable
      Int q;
      mpz_divexact(q.get_mpz_t(), uv[i].get_mpz_t(), d.s.at(i, i).get_mpz_t());
      y[i] = q;
    } else if (uv[i] != 0) {
      return out;
    }
  }
  out.solvable = true;
  out.particular = d.v * y;
  return out;
}

bool element_is_zero(const GroupPresentation& p, const GroupElement& x) {
  if (x.coordinates.size() != p.rank)
    throw Error("DimensionMismatch", "element length does not match generator count");
  for (const auto& rel : p.relations)
    if (rel.size() != p.rank)
      throw Error("DimensionMismatch", "relation length does not match generator count");
  if (p.rank == 0) return true;
  if (p.relations.empty())
    return std::all_of(x.coordinates.begin(), x.coordinates.end(),
                       [](const Int& a) { return a == 0; });
  IntMatrix a(p.rank, p.relations.size());
  for (std::size_t j = 0; j < p.relations.size(); ++j)
    for (std::size_t i = 0; i < p.rank; ++i) a.at(i, j) = p.relations[j][i];
  return solve_integral(a, x.coordinates).solvable;
}

}  // namespace twistcalc
