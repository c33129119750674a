#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lfd/automorphism.hpp"
#include "lfd/poly2.hpp"

namespace lfd {

/// Deterministic 64-bit generator (splitmix64).  Hand-rolled on purpose:
/// the reports must replay byte-identically across platforms, which the
/// standard library distributions do not guarantee.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : s_(seed) {}

    std::uint64_t next() {
        s_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = s_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform-ish integer in [lo, hi].
    long range(long lo, long hi) {
        return lo + static_cast<long>(next() %
                                      static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::uint64_t s_;
};

/// Pinned sampling distributions (documented, part of the reproducible
/// interface): rationals with numerator in [-9, 9] (excluding 0 on
/// request) and denominator in [1, 9]; polynomial slots of degree <= 4
/// with each lower coefficient present with probability 1/2; automorphism
/// words of length 1..4 whose letters are affine with probability 1/2
/// (invertible by resampling) and an elementary shift otherwise.
Rat sample_rat(Rng& rng, bool nonzero);
Coeff sample_scalar(Rng& rng, bool nonzero);
Poly2 sample_poly(Rng& rng, bool in_x, int maxdeg = 4, bool nonzero = true);
AutWord sample_word(Rng& rng);

/// One counterexample: the sampled inputs and the violated expectation.
struct Failure {
    std::string inputs;
    std::string expected;
    std::string got;
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    int samples = 0;  ///< samples actually executed
    std::vector<Failure> failures;
    long ms = 0;

    bool passed() const { return failures.empty(); }
};

/// Registered suite names, in canonical order.
const std::vector<std::string>& suite_names();

/// Runs one named suite; throws UnknownSuite for unregistered names.
/// The report (minus wall time) is a pure function of (name, seed,
/// samples).
SuiteReport run_suite(const std::string& name, std::uint64_t seed,
                      int samples, int cap = 64);

std::vector<SuiteReport> run_all_suites(std::uint64_t seed, int samples,
                                        int cap = 64);

/// JSON form {suite, seed, samples, failures:[{inputs, expected, got}],
/// ms}; pass include_timing = false for the deterministic portion.
std::string report_json(const SuiteReport& r, bool include_timing = true);

/// One-line human summary plus any failure details.
std::string report_text(const SuiteReport& r);

} // namespace lfd
