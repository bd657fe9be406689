#ifndef BEZSUB_RATIONAL_HPP
#define BEZSUB_RATIONAL_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace bezsub {

/// Exact rational scalar backed by GMP. Always canonical: lowest terms,
/// denominator > 0. All arithmetic is exact; nothing here ever rounds.
class Rat {
public:
    Rat() : q_(0) {}
    Rat(int n) : q_(n) {}
    Rat(long n) : q_(n) {}
    Rat(long num, long den) : q_(num, den) {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        q_.canonicalize();
    }
    explicit Rat(const mpz_class& n) : q_(n) {}
    explicit Rat(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    // Accepts "n" or "p/q" with q > 0, optional leading sign on p.
    static Rat from_string(std::string_view text);

    const mpz_class& num() const { return q_.get_num(); }
    const mpz_class& den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    std::string str() const;

    Rat operator-() const { return Rat(mpq_class(-q_), canonical_tag{}); }

    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw std::domain_error("rational division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

    friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) == 0; }
    friend bool operator!=(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) != 0; }
    friend bool operator<(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) < 0; }
    friend bool operator<=(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) <= 0; }
    friend bool operator>(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) > 0; }
    friend bool operator>=(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) >= 0; }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r);

private:
    struct canonical_tag {};
    // GMP's mpq arithmetic keeps canonical inputs canonical, so results of
    // the operators above skip the extra canonicalize pass.
    Rat(mpq_class q, canonical_tag) : q_(std::move(q)) {}

    mpq_class q_;

    friend Rat pow(const Rat& base, long exp);
};

/// base^exp with exact rational inversion for negative exponents.
Rat pow(const Rat& base, long exp);

}  // namespace bezsub

#endif
