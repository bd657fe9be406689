#ifndef BEZSUB_POLY_HPP
#define BEZSUB_POLY_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "bezsub/rational.hpp"

namespace bezsub {

/// Dense univariate polynomial over Rat in the variable x.
/// Coefficients are stored by ascending power; the vector is kept normalized
/// (no trailing zeros), so the zero polynomial is the empty vector and
/// degree() reports -1 for it, which compares below every real degree.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static Poly constant(Rat c);
    static Poly monomial(Rat c, int power);
    static Poly x() { return monomial(Rat(1), 1); }

    // lc * prod_j (x - roots[j]); lc must be nonzero. Repeated roots allowed.
    static Poly from_roots(const Rat& lc, const std::vector<Rat>& roots);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    // Coefficient of x^k; zero outside [0, degree()].
    const Rat& coeff(int k) const;
    const Rat& leading() const;
    const std::vector<Rat>& coeffs() const { return c_; }

    Rat operator()(const Rat& a) const;  // Horner, exact

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);

    friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
    friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rat& s, const Poly& p);
    friend Poly operator*(const Poly& p, const Rat& s) { return s * p; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Canonical text: descending powers, explicit signs, '^' exponents,
    // e.g. "x^2 - 3*x + 2", "1/2*x + 1/3", "-x + 1", "0".
    std::string to_string() const;

    friend std::ostream& operator<<(std::ostream& os, const Poly& p);

private:
    void normalize();
    std::vector<Rat> c_;
};

Poly pow(const Poly& base, unsigned long exp);

}  // namespace bezsub

#endif
