#include "xlbp/param_sets.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace xlbp {

std::vector<Params> fixed_generic_params() {
    return {{Rational(3, 5), Rational(1, 2)}, {Rational(1), Rational(1)}, {Rational(7, 3), Rational(-1, 4)}};
}

bool regular_moments(const Params& p, int K) {
    try {
        auto t = moments(p, -K, K);
        for (int k = -K; k <= K; ++k)
            if (t.value(k).is_zero()) return false;
    } catch (const ParamPole&) {
        return false;
    }
    return true;
}

std::vector<Params> generic_params(const std::function<void(const Params&)>& probe, std::size_t want) {
    std::vector<Params> out;
    auto accept = [&](const Params& p) {
        if (std::find(out.begin(), out.end(), p) != out.end()) return;
        try {
            probe(p);
        } catch (const ParamPole&) {
            return;
        }
        out.push_back(p);
    };
    for (const auto& p : fixed_generic_params()) accept(p);
    std::mt19937 rng(20231);
    std::uniform_int_distribution<int> num(-9, 19), den(2, 9);
    for (int tries = 0; out.size() < want && tries < 1000; ++tries)
        accept(Params{Rational(num(rng), den(rng)), Rational(num(rng), den(rng))});
    if (out.size() < want) throw std::runtime_error("generic_params: could not find enough valid pairs");
    return out;
}

}  // namespace xlbp
