#pragma once

// Randomized experiments over GL_n(F_q).
//
// Every trial draws from its own generator, seeded from (seed, trial index), so
// a report depends only on its configuration and not on trial order.

#include "tworow/error.hpp"
#include "tworow/field.hpp"
#include "tworow/hamilton.hpp"
#include "tworow/matrix.hpp"
#include "tworow/two_row.hpp"

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace tworow {

enum class ExperimentMode { completeness, hamiltonicity_sweep };

inline const char* mode_name(ExperimentMode m) noexcept
{
    return m == ExperimentMode::completeness ? "completeness" : "sweep";
}

struct ExperimentConfig {
    std::size_t n = 2;
    std::uint32_t q = 2;
    std::size_t trials = 1;
    std::uint64_t seed = 0;
    ExperimentMode mode = ExperimentMode::completeness;

    void validate() const
    {
        if (n < 2) throw Error(Errc::invalid_argument, "experiments need n >= 2");
        if (trials < 1) throw Error(Errc::invalid_argument, "experiments need at least one trial");
        (void)FieldSpec::gfp(q);
    }

    friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

struct ExperimentReport {
    ExperimentConfig config;
    std::size_t successes = 0;
    std::size_t total = 0;
    Rational estimate;
    std::vector<ExactMatrix> failures;

    friend bool operator==(const ExperimentReport&, const ExperimentReport&) = default;
};

/// Raised by a sweep when some sampled matrix lacks the expected path or cycle.
class SweepViolation : public Error {
public:
    explicit SweepViolation(ExperimentReport report)
        : Error(Errc::assertion_failure, std::to_string(report.failures.size()) + " sweep violation(s)"),
          report_(std::move(report))
    {
    }

    const ExperimentReport& report() const noexcept { return report_; }

private:
    ExperimentReport report_;
};

inline std::uint64_t splitmix64(std::uint64_t x) noexcept
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial)
{
    return std::mt19937_64(splitmix64(splitmix64(seed) ^ splitmix64(trial + 0x632be59bd9b4e019ULL)));
}

/// Uniform element of GL_n(F_q) by rejection: uniform entries, retry while singular.
template <class Rng>
ExactMatrix sample_gl(std::size_t n, std::uint32_t q, Rng& rng)
{
    const FieldSpec f = FieldSpec::gfp(q);
    if (n < 1) throw Error(Errc::invalid_argument, "sample_gl needs n >= 1");
    std::uniform_int_distribution<std::uint32_t> entry(0, q - 1);
    for (;;) {
        ExactMatrix a(f, n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) a.set(r, c, Scalar::from_int(f, entry(rng)));
        if (!determinant(a).is_zero()) return a;
    }
}

/// Decimal rendering of a rational, rounded half away from zero to `places` digits.
inline std::string to_decimal(const Rational& v, unsigned places = 6)
{
    BigInt scale = 1;
    for (unsigned i = 0; i < places; ++i) scale *= 10;
    const BigInt num = numerator(v), den = denominator(v);
    const bool negative = num < 0;
    const BigInt mag = negative ? BigInt(-num) : num;
    const BigInt scaled = (mag * scale * 2 + den) / (den * 2);
    std::string digits = BigInt(scaled / scale).str();
    std::string frac = BigInt(scaled % scale).str();
    frac.insert(0, places - frac.size(), '0');
    return (negative && scaled != 0 ? "-" : "") + digits + (places ? "." + frac : "");
}

inline ExperimentReport run_experiment(const ExperimentConfig& cfg)
{
    cfg.validate();
    ExperimentReport report{cfg, 0, cfg.trials, Rational(0), {}};
    for (std::size_t t = 0; t < cfg.trials; ++t) {
        auto rng = trial_rng(cfg.seed, t);
        ExactMatrix a = sample_gl(cfg.n, cfg.q, rng);
        bool ok = false;
        if (cfg.mode == ExperimentMode::completeness) {
            ok = two_row_graph(a, false).is_complete();
        } else {
            ok = hamiltonian_path(two_row_graph(a, false)).has_value()
                 && (cfg.n < 3 || hamiltonian_cycle(two_row_graph(a, true)).has_value());
            if (!ok) report.failures.push_back(a);
        }
        report.successes += ok;
    }
    report.estimate = Rational(BigInt(report.successes), BigInt(report.total));
    if (!report.failures.empty()) throw SweepViolation(std::move(report));
    return report;
}

}  // namespace tworow
