#include "bezsub/bezout.hpp"

#include <stdexcept>

namespace bezsub {

namespace {

void require_degree_order(const Poly& A, const Poly& B) {
    if (A.is_zero() || B.is_zero() || A.degree() < B.degree())
        throw std::invalid_argument("degree order violated");
}

}  // namespace

CayleyTable cayley_table(const Poly& A, const Poly& B) {
    require_degree_order(A, B);
    const int m = A.degree();

    // Numerator N(x,y) = sum n_{p,q} x^p y^q with n_{p,q} = a_p b_q - a_q b_p.
    // N vanishes on x = y, so synthetic division by (x - y) is exact:
    //   c_{i,j} = n_{i+1,j} + c_{i+1,j-1}.
    auto numer = [&](int p, int q) { return A.coeff(p) * B.coeff(q) - A.coeff(q) * B.coeff(p); };

    CayleyTable t;
    t.m = m;
    t.c.assign(static_cast<std::size_t>(m) * m, Rat(0));
    for (int j = 0; j < m; ++j)
        for (int i = m - 1; i >= 0; --i) {
            Rat v = numer(i + 1, j);
            if (j > 0 && i + 1 < m) v += t.at(i + 1, j - 1);
            t.at(i, j) = std::move(v);
        }
    return t;
}

RMatrix bezout_matrix(const Poly& A, const Poly& B) {
    CayleyTable t = cayley_table(A, B);
    const int m = t.m;
    RMatrix out(m, m);
    for (int k = 0; k < m; ++k)
        for (int j = 0; j < m; ++j) out.at(k, j) = t.at(m - 1 - k, j);
    return out;
}

RMatrix bezout_matrix_rows(const Poly& A, const Poly& B, int k) {
    require_degree_order(A, B);
    const int m = A.degree();
    if (k < 0 || k > m) throw std::invalid_argument("row count out of range");
    auto numer = [&](int p, int q) { return A.coeff(p) * B.coeff(q) - A.coeff(q) * B.coeff(p); };
    RMatrix out(static_cast<std::size_t>(k), static_cast<std::size_t>(m));
    for (int r = 0; r < k; ++r) {
        const int i = m - 1 - r;  // row r carries c_{i,.}
        for (int j = 0; j < m; ++j) {
            Rat v = numer(i + 1, j);
            if (r > 0 && j > 0) v += out.at(r - 1, j - 1);  // + c_{i+1,j-1}
            out.at(r, j) = std::move(v);
        }
    }
    return out;
}

Poly k_poly(const Poly& A, const Poly& B, int r) {
    require_degree_order(A, B);
    const int m = A.degree();
    const int n = B.degree();
    if (r < 1 || r > n) throw std::invalid_argument("k_poly index out of range");

    std::vector<Rat> p1(static_cast<std::size_t>(r)), p4(static_cast<std::size_t>(r));
    for (int s = 0; s < r; ++s) {
        p1[static_cast<std::size_t>(r - 1 - s)] = A.coeff(m - s);
        p4[static_cast<std::size_t>(r - 1 - s)] = B.coeff(n - s);
    }

    std::vector<Rat> p2(static_cast<std::size_t>(m - r) + 1), p3(static_cast<std::size_t>(m - r) + 1);
    for (int idx = 0; idx <= n - r; ++idx) p2[static_cast<std::size_t>(idx + m - n)] = B.coeff(idx);
    for (int idx = 0; idx <= m - r; ++idx) p3[static_cast<std::size_t>(idx)] = A.coeff(idx);

    return Poly(std::move(p1)) * Poly(std::move(p2)) - Poly(std::move(p3)) * Poly(std::move(p4));
}

namespace {

// Top m-n rows shared by the hybrid and non-homogeneous matrices:
// row s holds b_0..b_n starting at column s.
void fill_coefficient_rows(RMatrix& out, const Poly& B, int m, int n) {
    for (int s = 0; s < m - n; ++s)
        for (int q = 0; q <= n; ++q) out.at(s, s + q) = B.coeff(q);
}

}  // namespace

RMatrix hybrid_bezout_matrix(const Poly& A, const Poly& B) {
    require_degree_order(A, B);
    const int m = A.degree();
    const int n = B.degree();
    RMatrix out(m, m);
    fill_coefficient_rows(out, B, m, n);
    for (int r = 1; r <= n; ++r) {
        const Poly kr = k_poly(A, B, r);
        // Column q holds f_{r,m-q}, the coefficient of x^q in k_r.
        for (int q = 0; q < m; ++q) out.at(m - n + r - 1, q) = kr.coeff(q);
    }
    return out;
}

RMatrix nonhom_bezout_matrix(const Poly& A, const Poly& B) {
    require_degree_order(A, B);
    const int m = A.degree();
    const int n = B.degree();
    const CayleyTable t = cayley_table(A, B);
    RMatrix out(m, m);
    fill_coefficient_rows(out, B, m, n);
    for (int r = 1; r <= n; ++r)
        for (int q = 0; q < m; ++q) out.at(m - n + r - 1, q) = t.at(n - r, q);
    return out;
}

}  // namespace bezsub
