#pragma once

// Divisor and curve classes on the blow-up X of P^3 at up to eight general
// points, with the intersection pairing between them.
//
// Point indices are 1-based everywhere in the public interface; storage is a
// plain array and the 0-based offset never leaves this header.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "bl3/checked.hpp"

namespace bl3 {

inline constexpr int kMaxPoints = 8;

using Multiplicities = std::array<std::int64_t, kMaxPoints>;

/// Raised when a point index is outside 1..8 or an input has too many points.
class invalid_class : public std::invalid_argument {
public:
    explicit invalid_class(const std::string& what) : std::invalid_argument(what) {}
};

inline void check_index(int i) {
    if (i < 1 || i > kMaxPoints) throw invalid_class("point index " + std::to_string(i) + " outside 1..8");
}

/// A class dH - sum m_i E_i. Reduction produces intermediate classes with
/// negative entries; those report internal() == true.
class DivisorClass {
public:
    DivisorClass() = default;
    DivisorClass(std::int64_t degree, const Multiplicities& mults) : degree_(degree), mults_(mults) {}

    std::int64_t degree() const { return degree_; }
    /// Multiplicity at point i (1-based).
    std::int64_t mult(int i) const {
        check_index(i);
        return mults_[static_cast<std::size_t>(i - 1)];
    }
    const Multiplicities& mults() const { return mults_; }

    bool internal() const {
        return degree_ < 0 || std::any_of(mults_.begin(), mults_.end(), [](auto m) { return m < 0; });
    }

    DivisorClass with_mult(int i, std::int64_t value) const {
        check_index(i);
        DivisorClass out = *this;
        out.mults_[static_cast<std::size_t>(i - 1)] = value;
        return out;
    }

    friend DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
        DivisorClass out{checked::add(a.degree_, b.degree_), {}};
        for (std::size_t k = 0; k < kMaxPoints; ++k) out.mults_[k] = checked::add(a.mults_[k], b.mults_[k]);
        return out;
    }
    friend DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) {
        DivisorClass out{checked::sub(a.degree_, b.degree_), {}};
        for (std::size_t k = 0; k < kMaxPoints; ++k) out.mults_[k] = checked::sub(a.mults_[k], b.mults_[k]);
        return out;
    }
    friend DivisorClass operator*(std::int64_t c, const DivisorClass& a) {
        DivisorClass out{checked::mul(c, a.degree_), {}};
        for (std::size_t k = 0; k < kMaxPoints; ++k) out.mults_[k] = checked::mul(c, a.mults_[k]);
        return out;
    }

    friend auto operator<=>(const DivisorClass&, const DivisorClass&) = default;

private:
    std::int64_t degree_ = 0;
    Multiplicities mults_{};
};

/// A 1-cycle class delta*h - sum mu_i e_i.
class CurveClass {
public:
    CurveClass() = default;
    CurveClass(std::int64_t degree, const Multiplicities& mults) : degree_(degree), mults_(mults) {}

    std::int64_t degree() const { return degree_; }
    std::int64_t mult(int i) const {
        check_index(i);
        return mults_[static_cast<std::size_t>(i - 1)];
    }
    const Multiplicities& mults() const { return mults_; }

    friend auto operator<=>(const CurveClass&, const CurveClass&) = default;

private:
    std::int64_t degree_ = 0;
    Multiplicities mults_{};
};

/// Identifier (a; b, c) of the (-1)-curve class C_a^{b,c}; b < c, both 1-based.
struct MinusOneCurveId {
    int a = 0;
    int b = 1;
    int c = 2;

    MinusOneCurveId() = default;
    MinusOneCurveId(int level, int i, int j) : a(level), b(std::min(i, j)), c(std::max(i, j)) {
        if (level < 0) throw invalid_class("(-1)-curve level must be non-negative");
        check_index(i);
        check_index(j);
        if (i == j) throw invalid_class("(-1)-curve needs two distinct point indices");
    }

    bool contains(int i) const { return i == b || i == c; }

    friend auto operator<=>(const MinusOneCurveId&, const MinusOneCurveId&) = default;
};

/// Builds a user class; shorter multiplicity lists are padded with zeros.
inline DivisorClass make_divisor(std::int64_t d, std::span<const std::int64_t> mults) {
    if (mults.size() > static_cast<std::size_t>(kMaxPoints))
        throw invalid_class("too many points: " + std::to_string(mults.size()) + " > 8");
    Multiplicities m{};
    std::copy(mults.begin(), mults.end(), m.begin());
    return DivisorClass{d, m};
}

inline DivisorClass make_divisor(std::int64_t d, std::initializer_list<std::int64_t> mults) {
    return make_divisor(d, std::span<const std::int64_t>(mults.begin(), mults.size()));
}

inline DivisorClass make_divisor(std::int64_t d, const std::vector<std::int64_t>& mults) {
    return make_divisor(d, std::span<const std::int64_t>(mults));
}

inline CurveClass make_curve(std::int64_t delta, std::initializer_list<std::int64_t> mults) {
    if (mults.size() > static_cast<std::size_t>(kMaxPoints)) throw invalid_class("too many points");
    Multiplicities m{};
    std::copy(mults.begin(), mults.end(), m.begin());
    return CurveClass{delta, m};
}

/// L . C = d*delta - sum m_i mu_i.
inline std::int64_t intersect(const DivisorClass& L, const CurveClass& C) {
    std::int64_t s = checked::mul(L.degree(), C.degree());
    for (int i = 1; i <= kMaxPoints; ++i) s = checked::sub(s, checked::mul(L.mult(i), C.mult(i)));
    return s;
}

/// Explicit class of C_a^{b,c}: degree 2a+1, and
///   a even: mu_i = a/2 + [i in {b,c}],
///   a odd:  mu_i = (a+1)/2 - [i in {b,c}].
inline CurveClass minus_one_curve(const MinusOneCurveId& id) {
    const std::int64_t a = id.a;
    const bool even = a % 2 == 0;
    const std::int64_t base = even ? a / 2 : (a + 1) / 2;
    Multiplicities mu{};
    for (int i = 1; i <= kMaxPoints; ++i) {
        const std::int64_t delta = id.contains(i) ? 1 : 0;
        mu[static_cast<std::size_t>(i - 1)] = even ? base + delta : base - delta;
    }
    return CurveClass{checked::add(checked::mul(2, a), 1), mu};
}

inline CurveClass line_class(int i, int j) { return minus_one_curve(MinusOneCurveId{0, i, j}); }

/// The anticanonical curve D_Q8, of class l(4; 1^8).
inline CurveClass dq8_class() {
    Multiplicities mu;
    mu.fill(1);
    return CurveClass{4, mu};
}

/// K = 4d - sum m_i, which equals L . D_Q8.
inline std::int64_t anticanonical_degree(const DivisorClass& L) {
    std::int64_t s = checked::mul(4, L.degree());
    for (auto m : L.mults()) s = checked::sub(s, m);
    return s;
}

inline bool is_standard_form(const DivisorClass& L) {
    const auto& m = L.mults();
    for (std::size_t k = 0; k < kMaxPoints; ++k) {
        if (m[k] < 0) return false;
        if (k + 1 < kMaxPoints && m[k] < m[k + 1]) return false;
    }
    return checked::mul(2, L.degree()) >= m[0] + m[1] + m[2] + m[3];
}

/// t_{i,j} = m_i + m_j - d.
inline std::int64_t pair_excess(const DivisorClass& L, int i, int j) {
    check_index(i);
    check_index(j);
    if (i == j) throw invalid_class("pair_excess needs distinct indices");
    return checked::sub(checked::add(L.mult(i), L.mult(j)), L.degree());
}

/// The quadric class L3(2; 1^i).
inline DivisorClass quadric_class(int points) {
    if (points < 0 || points > kMaxPoints) throw invalid_class("quadric class needs 0..8 points");
    Multiplicities m{};
    for (int k = 0; k < points; ++k) m[static_cast<std::size_t>(k)] = 1;
    return DivisorClass{2, m};
}

/// Splitting of a standard class as S + sum_{i=4}^{8} c_i L3(2; 1^i) with
/// S = L3(d - 2m_4; m_1 - m_4, m_2 - m_4, m_3 - m_4).
struct StandardDecomposition {
    DivisorClass core;
    /// coefficients[i - 4] multiplies L3(2; 1^i), i = 4..8.
    std::array<std::int64_t, 5> coefficients{};

    std::int64_t coefficient(int i) const {
        if (i < 4 || i > 8) throw invalid_class("decomposition coefficient index must be in 4..8");
        return coefficients[static_cast<std::size_t>(i - 4)];
    }

    DivisorClass recompose() const {
        DivisorClass sum = core;
        for (int i = 4; i <= 8; ++i) sum = sum + coefficient(i) * quadric_class(i);
        return sum;
    }
};

inline StandardDecomposition decompose_standard(const DivisorClass& L) {
    if (!is_standard_form(L)) throw invalid_class("decompose_standard requires a class in standard form");
    const auto& m = L.mults();
    StandardDecomposition out;
    out.core = make_divisor(L.degree() - 2 * m[3], {m[0] - m[3], m[1] - m[3], m[2] - m[3]});
    for (int i = 4; i <= 8; ++i) {
        const auto k = static_cast<std::size_t>(i - 1);
        out.coefficients[static_cast<std::size_t>(i - 4)] = (i < 8) ? m[k] - m[k + 1] : m[k];
    }
    return out;
}

}  // namespace bl3
