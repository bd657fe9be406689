#ifndef BEZSUB_ROOTS_ORACLE_HPP
#define BEZSUB_ROOTS_ORACLE_HPP

#include <vector>

#include "bezsub/matrix.hpp"
#include "bezsub/poly.hpp"
#include "bezsub/subresultant.hpp"

namespace bezsub {

/// A system given by the roots of its leading polynomial:
/// F0 = lc0 * prod (x - roots[j]) with pairwise distinct roots, plus the
/// tail F_1..F_t. Ground truth for every determinant formula.
class RootSystem {
public:
    RootSystem(Rat lc0, std::vector<Rat> roots, std::vector<Poly> tail);

    const Rat& lc0() const { return lc0_; }
    const std::vector<Rat>& roots() const { return roots_; }
    const std::vector<Poly>& tail() const { return tail_; }

    int d0() const { return static_cast<int>(roots_.size()); }
    std::vector<int> degrees() const;

    Poly f0() const { return Poly::from_roots(lc0_, roots_); }
    PolySystem to_system() const;

private:
    Rat lc0_;
    std::vector<Rat> roots_;
    std::vector<Poly> tail_;
};

/// The d0 x d0 root matrix M_delta: delta_i rows alpha_j^k * F_i(alpha_j)
/// per tail polynomial, then eps rows alpha_j^k * (x - alpha_j).
PMatrix m_delta(const RootSystem& rs, const DeltaIndex& delta);

/// S_delta from the root-based definition:
/// lc0^{delta0} * det(M_delta) / det(V). Accepts delta = 0 (yields F0).
Poly oracle_subresultant(const RootSystem& rs, const DeltaIndex& delta);

}  // namespace bezsub

#endif
