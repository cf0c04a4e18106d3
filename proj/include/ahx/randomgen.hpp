#pragma once

#include <cstdint>
#include <random>

#include "ahx/padiccrit.hpp"
#include "ahx/series.hpp"

namespace ahx {

// Deterministic document generator. The algorithm is part of the public
// contract: mt19937_64 seeded directly, draws mapped into ranges by modulo
// (uniform_int_distribution is not pinned across standard libraries, the raw
// engine output is). Identical seeds give identical bytes on every platform.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    std::uint64_t below(std::uint64_t bound) { return eng_() % bound; }

  private:
    std::mt19937_64 eng_;
};

// synthesize(c, g) for pseudorandom c and g of degree floor(T/p): always has
// the defect-support property.
FpSeries random_property_series(std::uint64_t p, long T, Rng& rng);

// 1 + (pseudorandom tail): no property guaranteed.
FpSeries random_arbitrary_series(std::uint64_t p, long T, Rng& rng);

// Log-coefficients c_1..c_T satisfying all three condition families:
// chain roots are drawn in Z_p (j = 1) or pZ_p (p not| j), and each chain step
// takes c_(pj) = c_j / p + (fresh draw in Z_p), which telescopes the family-1
// congruence exactly.
LogCoefficients random_cond2_log(std::uint64_t p, long T, const PrecisionPolicy& pol, Rng& rng);

// Same, then break exactly one membership (family 1, 2 or 3, drawn from the
// generator) and compensate along the rest of the chain so every other
// condition still holds. The violated family index is written to family_out.
// Violation positions are kept <= T/p so both criterion readings provably
// fail inside the truncation window.
LogCoefficients random_cond2_violator(std::uint64_t p, long T, const PrecisionPolicy& pol,
                                      Rng& rng, int* family_out);

}  // namespace ahx
