#ifndef TANGENCY_TESTS_RANDOM_ELEMENTS_HPP
#define TANGENCY_TESTS_RANDOM_ELEMENTS_HPP

#include "tangency/flag_ring.hpp"

#include <random>
#include <vector>

namespace randgen {

inline std::vector<tangency::Partition> box(int n) {
    std::vector<tangency::Partition> out;
    for (int a = 0; a <= n - 1; ++a)
        for (int b = 0; b <= a; ++b) out.push_back({a, b});
    return out;
}

/// Up to `terms` terms, coefficients c0 + c1 d with |c_i| <= bound.
inline tangency::SchubertElt schubert(int n, std::mt19937_64& rng, int terms = 6, long long bound = 1000000) {
    const auto parts = box(n);
    std::uniform_int_distribution<std::size_t> pick(0, parts.size() - 1);
    std::uniform_int_distribution<long long> coeff(-bound, bound);
    std::uniform_int_distribution<int> count(1, terms);
    tangency::SchubertElt x(n);
    const int m = count(rng);
    for (int i = 0; i < m; ++i) x.add_term(parts[pick(rng)], tangency::DPoly{coeff(rng), coeff(rng) % 7});
    return x;
}

/// Random element with H exponents up to `max_exp` (unreduced).
inline tangency::FlagElt flag(int n, int arity, std::mt19937_64& rng, int terms = 4, int max_exp = 3) {
    std::uniform_int_distribution<int> e(0, max_exp);
    std::uniform_int_distribution<int> count(1, terms);
    tangency::FlagElt x(n, arity);
    const int m = count(rng);
    for (int t = 0; t < m; ++t) {
        const int i = e(rng);
        const int j = arity == 2 ? e(rng) : 0;
        x.add_term(i, j, schubert(n, rng, 3, 50));
    }
    return x;
}

}  // namespace randgen

#endif
