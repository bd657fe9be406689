#ifndef BEZSUB_BENCH_HPP
#define BEZSUB_BENCH_HPP

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "bezsub/subresultant.hpp"

namespace bezsub {

/// One benchmark request: random systems of the given degrees, swept over
/// deltas (all valid nonzero ones when `deltas` is empty).
struct BenchSpec {
    std::vector<int> degrees;
    int coeff_bound = 9;
    int trials = 1;
    std::uint64_t seed = 1;
    std::vector<std::vector<int>> deltas;  // empty => every valid delta != 0
    int workers = 0;                       // <= 1 => sequential
};

struct TimingRecord {
    Formula formula;
    std::vector<int> degrees;
    std::vector<int> delta;
    int trial;
    std::int64_t t_matrix_ns;
    std::int64_t t_det_ns;
    std::int64_t t_total_ns;

    friend bool operator==(const TimingRecord&, const TimingRecord&) = default;
};

/// Raised when the three formulas disagree during a run; carries the
/// reproduction bundle (seed, degrees, delta, trial) in what().
class CrossCheckError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Every delta != 0 with |delta| <= d0, in lexicographic order.
std::vector<std::vector<int>> enumerate_deltas(const std::vector<int>& degrees);

/// Polynomials of exactly the requested degrees with integer coefficients
/// in [-coeff_bound, coeff_bound] (leading coefficient resampled until
/// nonzero). Deterministic for a given generator state.
PolySystem random_system(const BenchSpec& spec, std::mt19937_64& rng);

/// The full protocol: per trial, per delta, per formula, time matrix
/// generation, determinant + scaling, and the end-to-end call; verify
/// cross-formula equality as it goes.
std::vector<TimingRecord> run_bench(const BenchSpec& spec);

void write_csv(const std::vector<TimingRecord>& records, const std::string& path);
std::vector<TimingRecord> read_csv(const std::string& path);

/// Per-formula totals in seconds as a small text table.
std::string summary_table(const std::vector<TimingRecord>& records);

}  // namespace bezsub

#endif
