#pragma once

#include "xlbp/hr.hpp"

#include <cstddef>
#include <functional>
#include <vector>

namespace xlbp {

// (3/5, 1/2), (1, 1), (7/3, -1/4)
std::vector<Params> fixed_generic_params();

// The fixed triple filtered by `probe` (a pair is valid when probe returns
// without throwing ParamPole), topped up to `want` pairs with seeded random
// rationals of small height. Deterministic for a given probe.
// All normalized moments c_k/c_0 with |k| <= K exist and are nonzero. Fails
// e.g. at beta = 1, where c_k = 0 for k >= 2 and the recurrence coefficients
// stop being unique.
bool regular_moments(const Params& p, int K);

std::vector<Params> generic_params(const std::function<void(const Params&)>& probe, std::size_t want = 3);

}  // namespace xlbp
