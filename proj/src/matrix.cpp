#include "bezsub/matrix.hpp"

#include <algorithm>
#include <utility>

namespace bezsub {

int max_xdeg(const PMatrix& m) {
    int d = 0;
    for (const Poly& p : m.entries()) d = std::max(d, p.degree());
    return d;
}

RMatrix eval_at(const PMatrix& m, const Rat& a) {
    RMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = m.at(i, j)(a);
    return r;
}

Rat det_rat(const RMatrix& m) {
    if (!m.square()) throw std::invalid_argument("determinant requires a square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return Rat(1);

    // Clear each row to integers; det(m) = det(A) / prod(row factors).
    std::vector<mpz_class> a(n * n);
    mpz_class cleared(1);
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class rowlcm(1);
        for (std::size_t j = 0; j < n; ++j)
            mpz_lcm(rowlcm.get_mpz_t(), rowlcm.get_mpz_t(), m.at(i, j).den().get_mpz_t());
        for (std::size_t j = 0; j < n; ++j) {
            const Rat& e = m.at(i, j);
            a[i * n + j] = e.num() * (rowlcm / e.den());
        }
        cleared *= rowlcm;
    }

    // Bareiss: every division below is exact (entries stay minors of A).
    int sign = 1;
    mpz_class prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k * n + k] == 0) {
            std::size_t r = k + 1;
            while (r < n && a[r * n + k] == 0) ++r;
            if (r == n) return Rat(0);
            for (std::size_t j = k; j < n; ++j) std::swap(a[k * n + j], a[r * n + j]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class t = a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j];
                mpz_divexact(a[i * n + j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i * n + k] = 0;
        }
        prev = a[k * n + k];
    }

    mpz_class det_int = a[n * n - 1];
    if (sign < 0) det_int = -det_int;
    mpq_class q(det_int, cleared);
    q.canonicalize();
    return Rat(std::move(q));
}

Poly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
    const std::size_t n = xs.size();
    if (ys.size() != n) throw std::invalid_argument("interpolation point/value count mismatch");
    if (n == 0) return Poly{};

    // master = prod (x - xs[j]); each Lagrange basis is master / (x - xs[i]),
    // recovered by synthetic division, then scaled by ys[i] / basis(xs[i]).
    Poly master = Poly::from_roots(Rat(1), xs);
    Poly result;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rat> basis(n);
        Rat carry = master.coeff(static_cast<int>(n));
        for (std::size_t k = n; k-- > 0;) {
            basis[k] = carry;
            carry = master.coeff(static_cast<int>(k)) + carry * xs[i];
        }
        Poly b(std::move(basis));
        Rat denom = b(xs[i]);
        if (denom.is_zero()) throw std::invalid_argument("interpolation nodes must be distinct");
        result += (ys[i] / denom) * b;
    }
    return result;
}

Poly det_poly(const PMatrix& m, int degree_hint) {
    if (!m.square()) throw std::invalid_argument("determinant requires a square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return Poly::constant(Rat(1));

    const int xdeg = max_xdeg(m);
    if (xdeg == 0) return Poly::constant(det_rat(eval_at(m, Rat(0))));

    const int bound = degree_hint >= 0 ? degree_hint : static_cast<int>(n) * xdeg;

    // Nodes 0, 1, -1, 2, -2, ... keep rational growth small.
    std::vector<Rat> xs, ys;
    xs.reserve(static_cast<std::size_t>(bound) + 1);
    for (long k = 0; static_cast<int>(xs.size()) <= bound; ++k) {
        if (k == 0) {
            xs.emplace_back(0);
        } else {
            xs.emplace_back(k);
            if (static_cast<int>(xs.size()) <= bound) xs.emplace_back(-k);
        }
    }
    ys.reserve(xs.size());
    for (const Rat& x : xs) ys.push_back(det_rat(eval_at(m, x)));
    return interpolate(xs, ys);
}

RMatrix vandermonde(const std::vector<Rat>& points) {
    const std::size_t n = points.size();
    RMatrix v(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        Rat p(1);
        for (std::size_t i = 0; i < n; ++i) {
            v.at(i, j) = p;
            p *= points[j];
        }
    }
    return v;
}

Rat det_vandermonde(const std::vector<Rat>& points) {
    Rat d(1);
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j) d *= points[j] - points[i];
    return d;
}

}  // namespace bezsub
