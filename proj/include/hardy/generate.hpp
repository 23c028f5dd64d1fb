#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "hardy/catalogue.hpp"

namespace hardy {

// uniform double in [lo, hi) from the top 53 bits; stable across platforms
double uniform(std::mt19937_64& rng, double lo, double hi);

// Random hypothesis-satisfying case for thm1..thm4, cor1.1 or eldeeb-eqq1.
// Role functions come from t^c, c^-t, rational and (on scattered scales)
// clipped random tables covering [a, 4*horizon]. Candidate (w, theta) and
// (v, beta) pairs are kept only when the hypotheses pass; otherwise the case
// falls back to w = v = 1, theta = beta = 0.
Case random_case(const std::string& theorem, const TimeScale& scale, double a, double horizon, std::mt19937_64& rng);

// random nonnegative sequence f(1..n) for hardy-discrete on [1, n+1); the
// table is zero after n
Case random_sequence_case(std::size_t n, double p, std::mt19937_64& rng);

}  // namespace hardy
