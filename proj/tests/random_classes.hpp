#pragma once

// Seeded generators shared by the property tests and the acceptance run.

#include <random>
#include <vector>

#include "bl3/baselocus.hpp"

namespace bl3::gen {

inline std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>{lo, hi}(rng);
}

inline DivisorClass random_user_class(std::mt19937_64& rng, std::int64_t max_d, std::int64_t max_m) {
    const auto d = uniform(rng, 0, max_d);
    const auto r = uniform(rng, 0, kMaxPoints);
    std::vector<std::int64_t> m;
    for (int i = 0; i < r; ++i) m.push_back(uniform(rng, 0, max_m));
    return make_divisor(d, m);
}

/// Any integer class, negative entries allowed.
inline DivisorClass random_lattice_class(std::mt19937_64& rng, std::int64_t bound) {
    Multiplicities m{};
    for (auto& x : m) x = uniform(rng, -bound, bound);
    return DivisorClass{uniform(rng, -bound, bound), m};
}

inline CurveClass random_curve_class(std::mt19937_64& rng, std::int64_t bound) {
    Multiplicities m{};
    for (auto& x : m) x = uniform(rng, -bound, bound);
    return CurveClass{uniform(rng, -bound, bound), m};
}

inline FourPoints random_four(std::mt19937_64& rng) {
    std::vector<int> labels{1, 2, 3, 4, 5, 6, 7, 8};
    std::shuffle(labels.begin(), labels.end(), rng);
    return {labels[0], labels[1], labels[2], labels[3]};
}

/// Sorted, non-negative, 2d >= m1+m2+m3+m4 and m1 <= d (so non-empty).
inline DivisorClass random_standard_class(std::mt19937_64& rng, std::int64_t max_d) {
    for (;;) {
        const auto d = uniform(rng, 0, max_d);
        std::vector<std::int64_t> m(kMaxPoints);
        for (auto& x : m) x = uniform(rng, 0, d);
        std::sort(m.rbegin(), m.rend());
        const auto L = make_divisor(d, m);
        if (is_standard_form(L)) return L;
    }
}

/// Non-empty, no fixed components, not in standard form after sorting.
/// Built by pushing a random standard class through a few random Cremonas.
inline DivisorClass random_fixed_free_nonstandard(std::mt19937_64& rng, std::int64_t max_d) {
    for (;;) {
        auto L = random_standard_class(rng, max_d / 2);
        const auto steps = uniform(rng, 1, 3);
        for (int s = 0; s < steps; ++s) L = cremona_divisor(L, random_four(rng));
        if (L.internal() || L.degree() > max_d) continue;
        if (is_standard_form(sort_descending(L).sorted)) continue;
        if (dimension(L) == 0 || !fixed_components(L).fixed.empty()) continue;
        return L;
    }
}

/// Non-empty, no fixed components, 4d - sum m_i = 1. Seven entries are
/// drawn uniformly and the eighth is solved for.
inline DivisorClass random_anticanonical_one(std::mt19937_64& rng, std::int64_t max_d) {
    for (;;) {
        const auto d = uniform(rng, 1, max_d);
        std::vector<std::int64_t> m(kMaxPoints);
        std::int64_t sum = 0;
        for (int i = 0; i < 7; ++i) sum += (m[static_cast<std::size_t>(i)] = uniform(rng, 0, d));
        m[7] = 4 * d - 1 - sum;
        if (m[7] < 0 || m[7] > d) continue;
        std::shuffle(m.begin(), m.end(), rng);
        const auto L = make_divisor(d, m);
        if (dimension(L) == 0 || !fixed_components(L).fixed.empty()) continue;
        return L;
    }
}

}  // namespace bl3::gen
