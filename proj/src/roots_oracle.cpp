#include "bezsub/roots_oracle.hpp"

#include <stdexcept>

namespace bezsub {

RootSystem::RootSystem(Rat lc0, std::vector<Rat> roots, std::vector<Poly> tail)
    : lc0_(std::move(lc0)), roots_(std::move(roots)), tail_(std::move(tail)) {
    if (lc0_.is_zero()) throw std::invalid_argument("leading coefficient must be nonzero");
    if (tail_.empty()) throw std::invalid_argument("root system requires at least one tail polynomial");
    for (std::size_t i = 0; i < roots_.size(); ++i)
        for (std::size_t j = i + 1; j < roots_.size(); ++j)
            if (roots_[i] == roots_[j]) throw std::invalid_argument("roots must be distinct");
    for (const Poly& p : tail_) {
        if (p.is_zero()) throw std::invalid_argument("tail polynomials must be nonzero");
        if (p.degree() > d0())
            throw std::invalid_argument("tail degree exceeds the degree implied by the roots");
    }
}

std::vector<int> RootSystem::degrees() const {
    std::vector<int> d;
    d.reserve(tail_.size() + 1);
    d.push_back(d0());
    for (const Poly& p : tail_) d.push_back(p.degree());
    return d;
}

PolySystem RootSystem::to_system() const {
    std::vector<Poly> polys;
    polys.reserve(tail_.size() + 1);
    polys.push_back(f0());
    for (const Poly& p : tail_) polys.push_back(p);
    return PolySystem(std::move(polys));
}

PMatrix m_delta(const RootSystem& rs, const DeltaIndex& delta) {
    if (delta.delta().size() != rs.tail().size())
        throw std::invalid_argument("delta length must match the number of tail polynomials");
    const std::size_t n = static_cast<std::size_t>(rs.d0());
    const std::vector<Rat>& alpha = rs.roots();

    PMatrix out(n, n);
    std::size_t row = 0;
    for (std::size_t i = 0; i < rs.tail().size(); ++i) {
        std::vector<Rat> fi_at;  // F_i(alpha_j)
        fi_at.reserve(n);
        for (const Rat& a : alpha) fi_at.push_back(rs.tail()[i](a));
        std::vector<Rat> p(n, Rat(1));  // alpha_j^k, bumped per row
        for (int k = 0; k < delta.delta()[i]; ++k, ++row)
            for (std::size_t j = 0; j < n; ++j) {
                out.at(row, j) = Poly::constant(p[j] * fi_at[j]);
                p[j] *= alpha[j];
            }
    }
    {
        std::vector<Rat> p(n, Rat(1));
        for (int k = 0; k < delta.eps(); ++k, ++row)
            for (std::size_t j = 0; j < n; ++j) {
                // alpha_j^k * (x - alpha_j)
                out.at(row, j) = Poly({-(p[j] * alpha[j]), p[j]});
                p[j] *= alpha[j];
            }
    }
    return out;
}

Poly oracle_subresultant(const RootSystem& rs, const DeltaIndex& delta) {
    const Rat det_v = det_vandermonde(rs.roots());
    // distinct roots guarantee det V != 0
    const Poly det_m = det_poly(m_delta(rs, delta), delta.eps());
    return (pow(rs.lc0(), delta.delta0()) / det_v) * det_m;
}

}  // namespace bezsub
