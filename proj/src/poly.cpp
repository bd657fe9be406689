#include "bezsub/poly.hpp"

#include <ostream>
#include <stdexcept>

namespace bezsub {

namespace {
const Rat kZero{};
}

void Poly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(Rat c) {
    Poly p;
    if (!c.is_zero()) p.c_.push_back(std::move(c));
    return p;
}

Poly Poly::monomial(Rat c, int power) {
    if (power < 0) throw std::invalid_argument("monomial power must be nonnegative");
    Poly p;
    if (!c.is_zero()) {
        p.c_.assign(static_cast<size_t>(power) + 1, Rat(0));
        p.c_.back() = std::move(c);
    }
    return p;
}

Poly Poly::from_roots(const Rat& lc, const std::vector<Rat>& roots) {
    if (lc.is_zero()) throw std::invalid_argument("leading coefficient must be nonzero");
    Poly p = Poly::constant(lc);
    for (const Rat& r : roots) p = p * Poly({-r, Rat(1)});
    return p;
}

const Rat& Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<size_t>(k)];
}

const Rat& Poly::leading() const {
    if (c_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
    return c_.back();
}

Rat Poly::operator()(const Rat& a) const {
    Rat acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * a + c_[i];
    return acc;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (Rat& c : r.c_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    normalize();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly{};
    Poly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.normalize();  // cannot shrink over a field, but harmless
    return r;
}

Poly operator*(const Rat& s, const Poly& p) {
    if (s.is_zero()) return Poly{};
    Poly r = p;
    for (Rat& c : r.c_) c *= s;
    return r;
}

Poly pow(const Poly& base, unsigned long exp) {
    Poly r = Poly::constant(Rat(1));
    Poly b = base;
    while (exp > 0) {
        if (exp & 1) r = r * b;
        exp >>= 1;
        if (exp) b = b * b;
    }
    return r;
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const Rat& c = c_[static_cast<size_t>(k)];
        if (c.is_zero()) continue;
        const bool first = out.empty();
        const bool neg = c.sign() < 0;
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        Rat mag = neg ? -c : c;
        if (k == 0) {
            out += mag.str();
        } else {
            if (!(mag == Rat(1))) out += mag.str() + "*";
            out += "x";
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

}  // namespace bezsub
