#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "bl3/lattice.hpp"
#include "bl3/oracle/field.hpp"
#include "bl3/oracle/linalg.hpp"
#include "bl3/oracle/polynomial.hpp"

namespace bl3::oracle {

inline constexpr u64 kDefaultPrime = 2147483647ull;  // 2^31 - 1
inline constexpr u64 kDefaultSeed = 42;
inline constexpr u64 kMinPrime = 1000000;

/// Rank of the 4 x n matrix with the given points as columns.
inline std::size_t point_rank(const std::vector<Point>& pts, const PrimeField& F) {
    Matrix m;
    for (const auto& p : pts) m.append_row(Vector(p.begin(), p.end()));
    return rank(m, F);
}

inline bool same_point(const Point& a, const Point& b, const PrimeField& F) { return point_rank({a, b}, F) < 2; }

/// Eight points of P^3 over F_p, regenerated bit-for-bit from (p, seed).
class PointConfiguration {
public:
    /// Draws points from mt19937_64(seed), coordinates rng() mod p, and
    /// redraws up to 100 times until no four points are coplanar (which also
    /// rules out three collinear or two equal points).
    static PointConfiguration generate(u64 p, u64 seed) {
        if (p <= kMinPrime) throw oracle_error("prime too small: need p > 10^6");
        PrimeField F{p};
        std::mt19937_64 rng{seed};
        for (int attempt = 0; attempt < 100; ++attempt) {
            std::array<Point, kMaxPoints> pts{};
            for (auto& pt : pts)
                for (auto& x : pt) x = rng() % p;
            if (in_general_position(pts, F)) return PointConfiguration{F, seed, pts};
        }
        throw oracle_error("no configuration in general position after 100 attempts");
    }

    /// Wraps explicit points (e.g. a configuration moved by a Cremona map).
    static PointConfiguration from_points(const PrimeField& F, u64 seed, const std::array<Point, kMaxPoints>& pts) {
        if (!in_general_position(pts, F)) throw oracle_error("points are not in general position");
        return PointConfiguration{F, seed, pts};
    }

    static bool in_general_position(const std::array<Point, kMaxPoints>& pts, const PrimeField& F) {
        for (std::size_t a = 0; a < kMaxPoints; ++a)
            for (std::size_t b = a + 1; b < kMaxPoints; ++b)
                for (std::size_t c = b + 1; c < kMaxPoints; ++c)
                    for (std::size_t d = c + 1; d < kMaxPoints; ++d)
                        if (point_rank({pts[a], pts[b], pts[c], pts[d]}, F) < 4) return false;
        return true;
    }

    const PrimeField& field() const { return F_; }
    u64 prime() const { return F_.modulus(); }
    u64 seed() const { return seed_; }
    /// Point i, 1-based.
    const Point& point(int i) const {
        check_index(i);
        return pts_[static_cast<std::size_t>(i - 1)];
    }
    const std::array<Point, kMaxPoints>& points() const { return pts_; }

private:
    PointConfiguration(const PrimeField& F, u64 seed, const std::array<Point, kMaxPoints>& pts)
        : F_(F), seed_(seed), pts_(pts) {}

    PrimeField F_;
    u64 seed_;
    std::array<Point, kMaxPoints> pts_;
};

inline PointConfiguration make_configuration(u64 p = kDefaultPrime, u64 seed = kDefaultSeed) {
    return PointConfiguration::generate(p, seed);
}

}  // namespace bl3::oracle
