#include <cstdint>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bezsub/bench.hpp"
#include "bezsub/parse.hpp"
#include "bezsub/roots_oracle.hpp"
#include "bezsub/subresultant.hpp"
#include "bezsub/system_io.hpp"

using namespace bezsub;

// Exit codes are a stable contract:
//   0 success, 1 computation/check failure, 2 usage or validation error.
namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

std::vector<int> parse_int_list(const std::string& text, const char* what) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = text.find(',', pos);
        const std::string item = text.substr(pos, comma - pos);
        try {
            std::size_t used = 0;
            const int v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string("invalid ") + what + " entry: '" + item + "'");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::vector<Rat> parse_rat_list(const std::string& text) {
    std::vector<Rat> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = text.find(',', pos);
        out.push_back(Rat::from_string(text.substr(pos, comma - pos)));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

DeltaIndex delta_for(const PolySystem& sys, const std::vector<int>& delta, bool allow_zero = false) {
    DeltaIndex d(delta, sys.degrees());  // throws on wrong length / |delta| > d0
    if (!allow_zero && d.is_zero()) throw std::invalid_argument("delta must be nonzero");
    return d;
}

std::string join_ints(const std::vector<int>& v, char sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(v[i]);
    }
    return s;
}

// Systems come from a JSON file or from inline --poly expressions; broken
// input of either kind is a data error (exit 1), mixing the two is usage.
PolySystem acquire_system(const std::string& system_path, const std::vector<std::string>& inline_polys) {
    if (system_path.empty() == inline_polys.empty()) {
        std::cerr << "error: pass exactly one of --system or --poly\n";
        std::exit(kExitUsage);
    }
    try {
        if (!system_path.empty()) return load_system(system_path);
        std::vector<Poly> polys;
        polys.reserve(inline_polys.size());
        for (const std::string& text : inline_polys) polys.push_back(parse_poly(text));
        return PolySystem(std::move(polys));
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        std::exit(kExitFailure);
    }
}

int cmd_compute(const std::string& system_path, const std::vector<std::string>& inline_polys,
                const std::string& delta_text, const std::string& formula_name) {
    PolySystem sys = acquire_system(system_path, inline_polys);
    try {
        const DeltaIndex delta = delta_for(sys, parse_int_list(delta_text, "delta"));
        const Poly s = subresultant(sys, delta, formula_from_name(formula_name));
        std::cout << s.to_string() << "\n";
        return kExitOk;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

struct CheckOptions {
    std::string system_path;
    std::vector<std::string> inline_polys;
    std::vector<std::string> delta_texts;
    bool all_deltas = false;
    std::string roots_text;
    std::string lc_text = "1";
    bool corrupt = false;  // test hook: perturbs one hybrid matrix entry
};

int cmd_check(const CheckOptions& opt) {
    PolySystem sys = acquire_system(opt.system_path, opt.inline_polys);

    // With --roots, F0 is rebuilt from the given roots and the file's first
    // polynomial is ignored; the oracle joins the comparison.
    std::unique_ptr<RootSystem> rs;
    if (!opt.roots_text.empty()) {
        try {
            std::vector<Poly> tail;
            for (std::size_t i = 1; i < sys.size(); ++i) tail.push_back(sys.poly(i));
            rs = std::make_unique<RootSystem>(Rat::from_string(opt.lc_text),
                                              parse_rat_list(opt.roots_text), std::move(tail));
            sys = rs->to_system();
        } catch (const std::invalid_argument& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitUsage;
        } catch (const std::domain_error& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitUsage;
        }
    }

    std::vector<std::vector<int>> deltas;
    try {
        if (opt.all_deltas) {
            deltas = enumerate_deltas(sys.degrees());
        } else {
            for (const std::string& t : opt.delta_texts) {
                const std::vector<int> d = parse_int_list(t, "delta");
                (void)delta_for(sys, d);
                deltas.push_back(d);
            }
        }
        if (deltas.empty()) throw std::invalid_argument("no delta in scope: pass --delta or --all-deltas");
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    bool all_pass = true;
    for (const std::vector<int>& dv : deltas) {
        const DeltaIndex delta(dv, sys.degrees());
        const Poly sb = subresultant(sys, delta, Formula::Bezout);
        Poly sh;
        if (opt.corrupt) {
            PMatrix m = h_delta(sys, delta);
            m.at(0, 0) += Poly::constant(Rat(1));
            sh = pow(sys.poly(0).leading(), scale_exponent(sys, delta, Formula::HybridBezout)) *
                 det_poly(m, delta.eps());
        } else {
            sh = subresultant(sys, delta, Formula::HybridBezout);
        }
        const Poly sn = subresultant(sys, delta, Formula::NonhomBezout);

        bool ok = sb == sh && sh == sn;
        std::string note;
        if (rs) {
            const Poly so = oracle_subresultant(*rs, delta);
            if (so != sb) ok = false;
            note = " (oracle included)";
        }
        all_pass = all_pass && ok;
        std::cout << "delta=" << join_ints(dv, ',') << (ok ? " PASS" : " FAIL") << note << "\n";
    }
    std::cout << (all_pass ? "check: all formulas agree" : "check: FAILURES detected") << "\n";
    return all_pass ? kExitOk : kExitFailure;
}

struct BenchOptions {
    std::string degrees_text;
    int trials = 1;
    std::uint64_t seed = 1;
    int coeff_bound = 9;
    std::vector<std::string> delta_texts{"all"};
    std::string out_path = "bench.csv";
    int workers = 0;
};

int cmd_bench(const BenchOptions& opt) {
    BenchSpec spec;
    try {
        spec.degrees = parse_int_list(opt.degrees_text, "degrees");
        spec.trials = opt.trials;
        spec.seed = opt.seed;
        spec.coeff_bound = opt.coeff_bound;
        spec.workers = opt.workers;
        for (const std::string& t : opt.delta_texts) {
            if (t == "all") continue;
            spec.deltas.push_back(parse_int_list(t, "delta"));
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        const std::vector<TimingRecord> records = run_bench(spec);
        write_csv(records, opt.out_path);
        std::cout << summary_table(records);
        std::cout << "wrote " << records.size() << " records to " << opt.out_path << "\n";
        return kExitOk;
    } catch (const CrossCheckError& e) {
        std::cerr << "bench aborted: " << e.what() << "\n";
        return kExitFailure;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generalized Bezout-type subresultants for several univariate polynomials"};
    app.require_subcommand(1);

    // compute
    std::string c_system, c_delta, c_formula;
    std::vector<std::string> c_polys;
    auto* compute = app.add_subcommand("compute", "Compute S_delta for a polynomial system");
    compute->add_option("--system", c_system, "JSON system file");
    compute->add_option("--poly", c_polys, "inline polynomial, F0 first (repeatable)");
    compute->add_option("--delta", c_delta, "comma-separated delta, one entry per tail polynomial")
        ->required();
    compute->add_option("--formula", c_formula, "bezout | hybrid | nonhom")
        ->required()
        ->check(CLI::IsMember({"bezout", "hybrid", "nonhom"}));

    // check
    CheckOptions chk;
    auto* check = app.add_subcommand("check", "Verify that all formulas (and the oracle) agree");
    check->add_option("--system", chk.system_path, "JSON system file");
    check->add_option("--poly", chk.inline_polys, "inline polynomial, F0 first (repeatable)");
    check->add_flag("--all-deltas", chk.all_deltas, "sweep every valid delta != 0");
    check->add_option("--delta", chk.delta_texts, "delta to check (repeatable)");
    check->add_option("--roots", chk.roots_text,
                      "rebuild F0 from these roots (comma-separated rationals) and compare "
                      "against the root-based oracle");
    check->add_option("--lc", chk.lc_text, "leading coefficient for --roots (default 1)");
    check->add_flag("--corrupt", chk.corrupt)->group("");  // hidden negative-control hook

    // bench
    BenchOptions bn;
    auto* bench = app.add_subcommand("bench", "Time matrix generation vs determinant calculation");
    bench->add_option("--degrees", bn.degrees_text, "comma-separated degrees, d0 first and maximal")
        ->required();
    bench->add_option("--trials", bn.trials, "random systems per sweep");
    bench->add_option("--seed", bn.seed, "rng seed");
    bench->add_option("--coeff-bound", bn.coeff_bound, "coefficients drawn from [-B, B]");
    bench->add_option("--deltas", bn.delta_texts, "'all' or an explicit delta (repeatable)");
    bench->add_option("--out", bn.out_path, "CSV output path");
    bench->add_option("--parallel", bn.workers, "distribute (trial, delta) cells over N workers");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (compute->parsed()) return cmd_compute(c_system, c_polys, c_delta, c_formula);
        if (check->parsed()) return cmd_check(chk);
        if (bench->parsed()) return cmd_bench(bn);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}
