#include "bezsub/subresultant.hpp"

#include <algorithm>
#include <stdexcept>

namespace bezsub {

std::string_view formula_name(Formula f) {
    switch (f) {
        case Formula::Bezout: return "bezout";
        case Formula::HybridBezout: return "hybrid";
        case Formula::NonhomBezout: return "nonhom";
    }
    throw std::logic_error("unreachable");
}

Formula formula_from_name(std::string_view name) {
    if (name == "bezout") return Formula::Bezout;
    if (name == "hybrid") return Formula::HybridBezout;
    if (name == "nonhom") return Formula::NonhomBezout;
    throw std::invalid_argument("unknown formula: '" + std::string(name) + "'");
}

PolySystem::PolySystem(std::vector<Poly> polys) : polys_(std::move(polys)) {
    if (polys_.size() < 2) throw std::invalid_argument("system requires at least 2 polynomials");
    for (const Poly& p : polys_)
        if (p.is_zero()) throw std::invalid_argument("system polynomials must be nonzero");
    for (const Poly& p : polys_)
        if (p.degree() > polys_[0].degree())
            throw std::invalid_argument("first polynomial must have maximal degree");
}

std::vector<int> PolySystem::degrees() const {
    std::vector<int> d;
    d.reserve(polys_.size());
    for (const Poly& p : polys_) d.push_back(p.degree());
    return d;
}

DeltaIndex::DeltaIndex(std::vector<int> delta, const std::vector<int>& degrees)
    : delta_(std::move(delta)) {
    if (degrees.size() < 2) throw std::invalid_argument("degree vector requires at least 2 entries");
    if (delta_.size() != degrees.size() - 1)
        throw std::invalid_argument("delta length must match the number of tail polynomials");
    const int d0 = degrees[0];
    total_ = 0;
    for (int di : delta_) {
        if (di < 0) throw std::invalid_argument("delta entries must be nonnegative");
        total_ += di;
    }
    if (total_ > d0) throw std::invalid_argument("delta must satisfy |delta| <= d0");
    eps_ = d0 - total_;
    delta0_ = 1 - total_;
    for (std::size_t i = 0; i < delta_.size(); ++i)
        delta0_ = std::max(delta0_, degrees[i + 1] + delta_[i] - d0);
}

PMatrix x_block(int d0, int eps) {
    if (d0 < 0 || eps < 0 || (eps > 0 && eps > d0 - 1))
        throw std::invalid_argument("x block requires 0 <= eps <= d0 - 1 (or eps = 0)");
    PMatrix x(static_cast<std::size_t>(d0), static_cast<std::size_t>(eps));
    for (int k = 0; k < eps; ++k) {
        x.at(k, k) = Poly::x();
        x.at(k + 1, k) = Poly::constant(Rat(-1));
    }
    return x;
}

namespace {

void require_nonzero(const DeltaIndex& delta) {
    if (delta.is_zero()) throw std::invalid_argument("delta must be nonzero");
}

// Shared assembly: rows of the output are filled blockwise, the last eps
// rows being the transpose of x_block (x at column k, -1 at column k+1).
template <typename RowBlock>
PMatrix assemble(const PolySystem& F, const DeltaIndex& delta, RowBlock&& block_rows) {
    if (delta.delta().size() != F.tail_count())
        throw std::invalid_argument("delta length must match the number of tail polynomials");
    if (delta.total() > F.d0())
        throw std::invalid_argument("delta must satisfy |delta| <= d0");
    const std::size_t d0 = static_cast<std::size_t>(F.d0());
    PMatrix out(d0, d0);
    std::size_t row = 0;
    for (std::size_t i = 1; i < F.size(); ++i) row = block_rows(out, row, i);
    for (int k = 0; k < delta.eps(); ++k, ++row) {
        out.at(row, static_cast<std::size_t>(k)) = Poly::x();
        out.at(row, static_cast<std::size_t>(k) + 1) = Poly::constant(Rat(-1));
    }
    return out;
}

}  // namespace

namespace {

// The shared top block of H(F0,Fi) and N(F0,Fi): shifted coefficient rows
// of F_i, b_0 landing on the diagonal. Only the first `count` are taken.
std::size_t emit_coefficient_rows(PMatrix& out, std::size_t row, const Poly& fi, int count) {
    for (int s = 0; s < count; ++s, ++row)
        for (int q = 0; q <= fi.degree(); ++q)
            out.at(row, static_cast<std::size_t>(s + q)) = Poly::constant(fi.coeff(q));
    return row;
}

}  // namespace

PMatrix bez_delta(const PolySystem& F, const DeltaIndex& delta) {
    require_nonzero(delta);
    // R_i^T contributes the first delta_i rows of Bez(F0, F_i), i.e. the
    // Cayley rows c_{d0-1,.} down to c_{d0-delta_i,.} in ascending column
    // order. Reversing the rows breaks cross-formula equality for d0 > 2;
    // the 2x2 and 5x5 fixtures pin this orientation.
    return assemble(F, delta, [&](PMatrix& out, std::size_t row, std::size_t i) {
        const int di = delta.delta()[i - 1];
        const RMatrix b = bezout_matrix_rows(F.poly(0), F.poly(i), di);
        for (int r = 0; r < di; ++r, ++row)
            for (std::size_t k = 0; k < b.cols(); ++k)
                out.at(row, k) = Poly::constant(b.at(static_cast<std::size_t>(r), k));
        return row;
    });
}

PMatrix h_delta(const PolySystem& F, const DeltaIndex& delta) {
    require_nonzero(delta);
    // R_i^T = first delta_i rows of H(F0, F_i): min(delta_i, d0-d_i)
    // coefficient rows followed by max(0, delta_i+d_i-d0) f-rows. Only the
    // needed k_r are formed, which keeps matrix generation near-free for
    // small overlaps.
    return assemble(F, delta, [&](PMatrix& out, std::size_t row, std::size_t i) {
        const int di = delta.delta()[i - 1];
        const int overlap = std::max(0, di + F.poly(i).degree() - F.d0());
        row = emit_coefficient_rows(out, row, F.poly(i), di - overlap);
        for (int r = 1; r <= overlap; ++r, ++row) {
            const Poly kr = k_poly(F.poly(0), F.poly(i), r);
            for (int q = 0; q < F.d0(); ++q)
                out.at(row, static_cast<std::size_t>(q)) = Poly::constant(kr.coeff(q));
        }
        return row;
    });
}

PMatrix n_delta(const PolySystem& F, const DeltaIndex& delta) {
    require_nonzero(delta);
    // Same coefficient rows, then the Bezout rows c_{d_i-1,.} down to
    // c_{d0-delta_i,.} -- rows d0-d_i .. delta_i-1 of Bez(F0, F_i).
    return assemble(F, delta, [&](PMatrix& out, std::size_t row, std::size_t i) {
        const int di = delta.delta()[i - 1];
        const int overlap = std::max(0, di + F.poly(i).degree() - F.d0());
        row = emit_coefficient_rows(out, row, F.poly(i), di - overlap);
        if (overlap > 0) {
            const RMatrix b = bezout_matrix_rows(F.poly(0), F.poly(i), di);
            for (int r = di - overlap; r < di; ++r, ++row)
                for (std::size_t k = 0; k < b.cols(); ++k)
                    out.at(row, k) = Poly::constant(b.at(static_cast<std::size_t>(r), k));
        }
        return row;
    });
}

PMatrix subresultant_matrix(const PolySystem& F, const DeltaIndex& delta, Formula formula) {
    switch (formula) {
        case Formula::Bezout: return bez_delta(F, delta);
        case Formula::HybridBezout: return h_delta(F, delta);
        case Formula::NonhomBezout: return n_delta(F, delta);
    }
    throw std::logic_error("unreachable");
}

int scale_exponent(const PolySystem& F, const DeltaIndex& delta, Formula formula) {
    if (formula == Formula::Bezout) return delta.delta0() - delta.total();
    const std::vector<int> d = F.degrees();
    int overlap = 0;
    for (std::size_t i = 0; i < delta.delta().size(); ++i)
        overlap += std::max(0, delta.delta()[i] + d[i + 1] - d[0]);
    return delta.delta0() - overlap;
}

Poly subresultant(const PolySystem& F, const DeltaIndex& delta, Formula formula) {
    require_nonzero(delta);
    const PMatrix m = subresultant_matrix(F, delta, formula);
    const Poly det = det_poly(m, delta.eps());
    const int e = scale_exponent(F, delta, formula);
    return pow(F.poly(0).leading(), e) * det;
}

}  // namespace bezsub
