#include "bezsub/bench.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

namespace bezsub {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ns_between(Clock::time_point a, Clock::time_point b) {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(b - a).count();
}

void validate(const BenchSpec& spec) {
    if (spec.degrees.size() < 2) throw std::invalid_argument("bench requires at least 2 degrees");
    for (int d : spec.degrees)
        if (d < 0) throw std::invalid_argument("bench degrees must be nonnegative");
    for (int d : spec.degrees)
        if (d > spec.degrees[0]) throw std::invalid_argument("first degree must be maximal");
    if (spec.trials < 1) throw std::invalid_argument("bench requires trials >= 1");
    if (spec.coeff_bound < 1) throw std::invalid_argument("bench requires coeff_bound >= 1");
}

void extend(std::vector<std::vector<int>>& out, std::vector<int>& cur, std::size_t t, int left) {
    if (cur.size() == t) {
        out.push_back(cur);
        return;
    }
    for (int v = 0; v <= left; ++v) {
        cur.push_back(v);
        extend(out, cur, t, left - v);
        cur.pop_back();
    }
}

std::string dash_join(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += '-';
        s += std::to_string(v[i]);
    }
    return s;
}

// Degrees and deltas are nonnegative, so '-' is purely a separator.
std::vector<int> dash_split(const std::string& s) {
    std::vector<int> v;
    std::size_t pos = 0;
    for (;;) {
        const std::size_t dash = s.find('-', pos);
        v.push_back(std::stoi(s.substr(pos, dash - pos)));
        if (dash == std::string::npos) return v;
        pos = dash + 1;
    }
}

}  // namespace

std::vector<std::vector<int>> enumerate_deltas(const std::vector<int>& degrees) {
    std::vector<std::vector<int>> all;
    std::vector<int> cur;
    extend(all, cur, degrees.size() - 1, degrees[0]);
    // Recursion emits lexicographic order with (0,...,0) first; drop it.
    all.erase(all.begin());
    return all;
}

PolySystem random_system(const BenchSpec& spec, std::mt19937_64& rng) {
    const std::uint64_t span = 2 * static_cast<std::uint64_t>(spec.coeff_bound) + 1;
    auto draw = [&]() {
        return static_cast<long>(rng() % span) - spec.coeff_bound;
    };
    std::vector<Poly> polys;
    polys.reserve(spec.degrees.size());
    for (int d : spec.degrees) {
        std::vector<Rat> coeffs(static_cast<std::size_t>(d) + 1);
        for (auto& c : coeffs) c = Rat(draw());
        while (coeffs.back().is_zero()) coeffs.back() = Rat(draw());
        polys.emplace_back(std::move(coeffs));
    }
    return PolySystem(std::move(polys));
}

namespace {

struct Cell {
    int trial;                    // 1-based
    const PolySystem* system;
    const std::vector<int>* delta;
};

// One timed cell: all three formulas on a fixed (trial, delta), equality
// checked before any record is accepted.
std::array<TimingRecord, 3> run_cell(const BenchSpec& spec, const Cell& cell) {
    static constexpr Formula kFormulas[3] = {Formula::Bezout, Formula::HybridBezout,
                                             Formula::NonhomBezout};
    const DeltaIndex delta(*cell.delta, cell.system->degrees());
    std::array<TimingRecord, 3> out;
    std::array<Poly, 3> results;
    for (int f = 0; f < 3; ++f) {
        const Formula formula = kFormulas[f];
        // discard one warm-up evaluation per (formula, delta) cell
        (void)subresultant(*cell.system, delta, formula);

        const auto m0 = Clock::now();
        const PMatrix matrix = subresultant_matrix(*cell.system, delta, formula);
        const auto m1 = Clock::now();

        const auto d0 = Clock::now();
        const Poly det = det_poly(matrix, delta.eps());
        const Poly scaled = pow(cell.system->poly(0).leading(),
                                scale_exponent(*cell.system, delta, formula)) * det;
        const auto d1 = Clock::now();

        const auto t0 = Clock::now();
        results[f] = subresultant(*cell.system, delta, formula);
        const auto t1 = Clock::now();

        if (scaled != results[f])
            throw CrossCheckError("staged and end-to-end results disagree (seed=" +
                                  std::to_string(spec.seed) + ", degrees=" + dash_join(spec.degrees) +
                                  ", delta=" + dash_join(*cell.delta) +
                                  ", trial=" + std::to_string(cell.trial) + ")");

        out[f] = TimingRecord{formula, spec.degrees, *cell.delta, cell.trial,
                              ns_between(m0, m1), ns_between(d0, d1), ns_between(t0, t1)};
    }
    if (results[0] != results[1] || results[1] != results[2])
        throw CrossCheckError(
            "cross-formula mismatch (seed=" + std::to_string(spec.seed) +
            ", degrees=" + dash_join(spec.degrees) + ", delta=" + dash_join(*cell.delta) +
            ", trial=" + std::to_string(cell.trial) + ")");
    return out;
}

}  // namespace

std::vector<TimingRecord> run_bench(const BenchSpec& spec) {
    validate(spec);

    std::vector<std::vector<int>> deltas = spec.deltas;
    if (deltas.empty()) {
        deltas = enumerate_deltas(spec.degrees);
    } else {
        for (const auto& d : deltas) (void)DeltaIndex(d, spec.degrees);  // validate early
    }

    // Systems are generated up front in trial order so that parallel cell
    // execution cannot disturb the rng stream.
    std::mt19937_64 rng(spec.seed);
    std::vector<PolySystem> systems;
    systems.reserve(static_cast<std::size_t>(spec.trials));
    for (int trial = 0; trial < spec.trials; ++trial) systems.push_back(random_system(spec, rng));

    std::vector<Cell> cells;
    cells.reserve(systems.size() * deltas.size());
    for (int trial = 0; trial < spec.trials; ++trial)
        for (const auto& d : deltas)
            cells.push_back(Cell{trial + 1, &systems[static_cast<std::size_t>(trial)], &d});

    std::vector<TimingRecord> records(cells.size() * 3);
    if (spec.workers <= 1) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
            auto r = run_cell(spec, cells[c]);
            for (int f = 0; f < 3; ++f) records[c * 3 + static_cast<std::size_t>(f)] = std::move(r[f]);
        }
        return records;
    }

    // Opt-in parallel mode: whole cells are handed to workers; timed
    // regions are never split. Output order stays deterministic because
    // each cell owns its slots.
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::string first_error;
    std::mutex error_mutex;
    auto work = [&]() {
        for (;;) {
            const std::size_t c = next.fetch_add(1);
            if (c >= cells.size() || failed.load()) return;
            try {
                auto r = run_cell(spec, cells[c]);
                for (int f = 0; f < 3; ++f)
                    records[c * 3 + static_cast<std::size_t>(f)] = std::move(r[f]);
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!failed.exchange(true)) first_error = e.what();
            }
        }
    };
    std::vector<std::thread> pool;
    const int nworkers = std::min<int>(spec.workers, static_cast<int>(cells.size()));
    pool.reserve(static_cast<std::size_t>(nworkers));
    for (int w = 0; w < nworkers; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();
    if (failed.load()) throw CrossCheckError(first_error);
    return records;
}

void write_csv(const std::vector<TimingRecord>& records, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << "formula,degrees,delta,trial,t_matrix_ns,t_det_ns,t_total_ns\n";
    for (const TimingRecord& r : records)
        out << formula_name(r.formula) << ',' << dash_join(r.degrees) << ',' << dash_join(r.delta)
            << ',' << r.trial << ',' << r.t_matrix_ns << ',' << r.t_det_ns << ',' << r.t_total_ns
            << '\n';
    out.flush();
    if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

std::vector<TimingRecord> read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
    std::string line;
    if (!std::getline(in, line) || line != "formula,degrees,delta,trial,t_matrix_ns,t_det_ns,t_total_ns")
        throw std::runtime_error("bad CSV header in '" + path + "'");
    std::vector<TimingRecord> records;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::size_t pos = 0;
        while (true) {
            const std::size_t comma = line.find(',', pos);
            fields.push_back(line.substr(pos, comma - pos));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        if (fields.size() != 7) throw std::runtime_error("bad CSV row in '" + path + "': " + line);
        TimingRecord r;
        r.formula = formula_from_name(fields[0]);
        r.degrees = dash_split(fields[1]);
        r.delta = dash_split(fields[2]);
        r.trial = std::stoi(fields[3]);
        r.t_matrix_ns = std::stoll(fields[4]);
        r.t_det_ns = std::stoll(fields[5]);
        r.t_total_ns = std::stoll(fields[6]);
        records.push_back(std::move(r));
    }
    return records;
}

std::string summary_table(const std::vector<TimingRecord>& records) {
    double t[3] = {0, 0, 0}, m[3] = {0, 0, 0}, d[3] = {0, 0, 0};
    std::string degrees = records.empty() ? "-" : dash_join(records.front().degrees);
    for (const TimingRecord& r : records) {
        const int f = static_cast<int>(r.formula);
        t[f] += static_cast<double>(r.t_total_ns) * 1e-9;
        m[f] += static_cast<double>(r.t_matrix_ns) * 1e-9;
        d[f] += static_cast<double>(r.t_det_ns) * 1e-9;
    }
    std::ostringstream os;
    char buf[160];
    std::snprintf(buf, sizeof buf, "%-10s %-8s %10s %10s %10s\n", "degrees", "formula", "T", "M", "D");
    os << buf;
    for (Formula f : {Formula::Bezout, Formula::NonhomBezout, Formula::HybridBezout}) {
        const int i = static_cast<int>(f);
        std::snprintf(buf, sizeof buf, "%-10s %-8s %10.3f %10.3f %10.3f\n", degrees.c_str(),
                      std::string(formula_name(f)).c_str(), t[i], m[i], d[i]);
        os << buf;
    }
    return os.str();
}

}  // namespace bezsub
