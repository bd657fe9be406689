#ifndef BEZSUB_SUBRESULTANT_HPP
#define BEZSUB_SUBRESULTANT_HPP

#include <string>
#include <string_view>
#include <vector>

#include "bezsub/bezout.hpp"
#include "bezsub/matrix.hpp"
#include "bezsub/poly.hpp"

namespace bezsub {

enum class Formula { Bezout, HybridBezout, NonhomBezout };

std::string_view formula_name(Formula f);           // "bezout" / "hybrid" / "nonhom"
Formula formula_from_name(std::string_view name);   // throws on unknown name

/// Ordered system F = (F0, ..., Ft), t >= 1, every polynomial nonzero,
/// with deg F0 maximal among all degrees.
class PolySystem {
public:
    explicit PolySystem(std::vector<Poly> polys);

    const Poly& poly(std::size_t i) const { return polys_[i]; }
    std::size_t size() const { return polys_.size(); }
    std::size_t tail_count() const { return polys_.size() - 1; }  // t

    int d0() const { return polys_[0].degree(); }
    std::vector<int> degrees() const;

private:
    std::vector<Poly> polys_;
};

/// delta in N^t together with the derived quantities |delta|,
/// eps = d0 - |delta| and delta0 = max(d_i + delta_i - d0, 1 - |delta|).
/// Constructed against a concrete degree vector; enforces |delta| <= d0.
class DeltaIndex {
public:
    DeltaIndex(std::vector<int> delta, const std::vector<int>& degrees);

    const std::vector<int>& delta() const { return delta_; }
    int total() const { return total_; }     // |delta|
    int eps() const { return eps_; }
    int delta0() const { return delta0_; }
    bool is_zero() const { return total_ == 0; }

private:
    std::vector<int> delta_;
    int total_, eps_, delta0_;
};

/// d0 x eps block with x on the diagonal and -1 directly below it.
PMatrix x_block(int d0, int eps);

// The three delta-indexed subresultant matrices, each d0 x d0, assembled as
// [R_1 ... R_t X]^T. delta must be nonzero and sized for the system.
PMatrix bez_delta(const PolySystem& F, const DeltaIndex& delta);
PMatrix h_delta(const PolySystem& F, const DeltaIndex& delta);
PMatrix n_delta(const PolySystem& F, const DeltaIndex& delta);

PMatrix subresultant_matrix(const PolySystem& F, const DeltaIndex& delta, Formula formula);

/// Exponent e with S_delta = a_{0,d0}^e * det(matrix):
/// delta0 - |delta| for Bezout, delta0 - sum_i max(0, delta_i + d_i - d0)
/// for the hybrid and non-homogeneous variants. May be negative.
int scale_exponent(const PolySystem& F, const DeltaIndex& delta, Formula formula);

/// The generalized delta-th subresultant polynomial S_delta of F,
/// computed through the requested determinant formula. deg <= eps.
Poly subresultant(const PolySystem& F, const DeltaIndex& delta, Formula formula);

}  // namespace bezsub

#endif
