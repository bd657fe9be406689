#ifndef BEZSUB_BEZOUT_HPP
#define BEZSUB_BEZOUT_HPP

#include <vector>

#include "bezsub/matrix.hpp"
#include "bezsub/poly.hpp"

namespace bezsub {

/// Coefficients c[i][j] of the Cayley quotient
/// (A(x)B(y) - A(y)B(x)) / (x - y) for 0 <= i, j < deg A.
/// Symmetric: c[i][j] == c[j][i].
struct CayleyTable {
    int m = 0;  // = deg A
    std::vector<Rat> c;  // m*m, row-major

    const Rat& at(int i, int j) const { return c[static_cast<std::size_t>(i) * m + j]; }
    Rat& at(int i, int j) { return c[static_cast<std::size_t>(i) * m + j]; }
};

// All constructions below require deg A >= deg B >= 0 (both nonzero) and
// throw std::invalid_argument("degree order violated") otherwise.

CayleyTable cayley_table(const Poly& A, const Poly& B);

/// m x m Bezout matrix: row k carries [c_{m-1-k,0} ... c_{m-1-k,m-1}],
/// so the top row has first index m-1 and the bottom row index 0.
RMatrix bezout_matrix(const Poly& A, const Poly& B);

/// First k rows of bezout_matrix(A, B), built without the full table.
/// The synthetic-division recurrence runs top-down, so the leading rows
/// cost O(k * m) instead of O(m^2).
RMatrix bezout_matrix_rows(const Poly& A, const Poly& B, int k);

/// The truncated-product polynomial k_r, 1 <= r <= deg B:
///   k_r = (a_m x^{r-1}+...+a_{m-r+1}) (b_{n-r} x^{m-r}+...+b_0 x^{m-n})
///       - (a_{m-r} x^{m-r}+...+a_0) (b_n x^{r-1}+...+b_{n-r+1})
/// Its coefficient of x^{m-j} is f_{r,j}.
Poly k_poly(const Poly& A, const Poly& B, int r);

/// m x m hybrid Bezout matrix: m-n shifted coefficient rows of B on top
/// (row s has b_0 in column s), then rows [f_{r,m} ... f_{r,1}] for r = 1..n.
/// Columns are indexed by ascending powers x^0..x^{m-1} throughout.
RMatrix hybrid_bezout_matrix(const Poly& A, const Poly& B);

/// m x m non-homogeneous Bezout matrix: the same coefficient rows on top,
/// then rows [c_{n-r,0} ... c_{n-r,m-1}] for r = 1..n.
RMatrix nonhom_bezout_matrix(const Poly& A, const Poly& B);

}  // namespace bezsub

#endif
