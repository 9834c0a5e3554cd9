#pragma once

#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "birmax/picard.hpp"

namespace birmax::testing {

inline constexpr int kIterations = 200;
inline constexpr std::uint64_t kSeed = 20261018;

inline CurvePtr elliptic(std::vector<Generator> gens) { return make_curve(1, std::move(gens)); }

inline PicElement gen(const CurvePtr& c, const std::string& name) {
    return PicElement::generator(c, name);
}

/// Degree-zero class with coefficients drawn from [-range, range].
inline PicElement random_pic0(const CurvePtr& c, std::mt19937_64& rng, int range = 3) {
    std::uniform_int_distribution<std::int64_t> d(-range, range);
    std::vector<std::int64_t> cs(c->rank());
    for (auto& x : cs) x = d(rng);
    return PicElement(c, 0, cs);
}

inline PicElement random_pic(const CurvePtr& c, std::mt19937_64& rng, int deg_range = 3) {
    std::uniform_int_distribution<std::int64_t> d(-deg_range, deg_range);
    return random_pic0(c, rng) + PicElement::point(c, d(rng));
}

/// Random context with 1..max_gens generators of finite order in [2, max_order].
inline CurvePtr random_torsion_curve(std::mt19937_64& rng, int max_gens, int max_order) {
    std::uniform_int_distribution<int> ng(1, max_gens), ord(2, max_order);
    std::vector<Generator> gens;
    int n = ng(rng);
    for (int i = 0; i < n; ++i) gens.push_back({"T" + std::to_string(i), ord(rng)});
    return elliptic(gens);
}

inline std::int64_t torsion_lcm(const CurveCtx& c) {
    std::int64_t l = 1;
    for (const auto& g : c.generators())
        if (g.order) l = std::lcm(l, *g.order);
    return l;
}

}  // namespace birmax::testing
