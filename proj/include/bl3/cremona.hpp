#pragma once

// Action of the cubic Cremona transformation on divisor classes, curve
// classes and (-1)-curve identifiers.

#include <algorithm>
#include <array>
#include <numeric>
#include <vector>

#include "bl3/lattice.hpp"

namespace bl3 {

using FourPoints = std::array<int, 4>;

inline void check_four_points(const FourPoints& B) {
    for (std::size_t i = 0; i < B.size(); ++i) {
        check_index(B[i]);
        for (std::size_t j = i + 1; j < B.size(); ++j)
            if (B[i] == B[j]) throw invalid_class("Cremona base points must be four distinct indices");
    }
}

inline bool in_four(const FourPoints& B, int i) { return std::find(B.begin(), B.end(), i) != B.end(); }

/// A relabeling of the eight points: slot k (1-based) holds original point
/// source(k).
class Relabeling {
public:
    Relabeling() { std::iota(src_.begin(), src_.end(), 1); }
    explicit Relabeling(const std::array<int, kMaxPoints>& src) : src_(src) {
        std::array<bool, kMaxPoints> seen{};
        for (int s : src_) {
            check_index(s);
            if (seen[static_cast<std::size_t>(s - 1)]) throw invalid_class("relabeling is not a bijection");
            seen[static_cast<std::size_t>(s - 1)] = true;
        }
    }

    int source(int slot) const {
        check_index(slot);
        return src_[static_cast<std::size_t>(slot - 1)];
    }
    /// Slot holding original point `label`.
    int slot_of(int label) const {
        check_index(label);
        return static_cast<int>(std::find(src_.begin(), src_.end(), label) - src_.begin()) + 1;
    }
    bool is_identity() const {
        for (int k = 0; k < kMaxPoints; ++k)
            if (src_[static_cast<std::size_t>(k)] != k + 1) return false;
        return true;
    }
    const std::array<int, kMaxPoints>& sources() const { return src_; }

    /// Slot view: result.mult(k) = L.mult(source(k)).
    DivisorClass permute(const DivisorClass& L) const {
        Multiplicities m{};
        for (int k = 1; k <= kMaxPoints; ++k) m[static_cast<std::size_t>(k - 1)] = L.mult(source(k));
        return DivisorClass{L.degree(), m};
    }
    /// Inverse of permute.
    DivisorClass unpermute(const DivisorClass& L) const {
        Multiplicities m{};
        for (int k = 1; k <= kMaxPoints; ++k) m[static_cast<std::size_t>(source(k) - 1)] = L.mult(k);
        return DivisorClass{L.degree(), m};
    }
    CurveClass permute(const CurveClass& C) const {
        Multiplicities m{};
        for (int k = 1; k <= kMaxPoints; ++k) m[static_cast<std::size_t>(k - 1)] = C.mult(source(k));
        return CurveClass{C.degree(), m};
    }
    CurveClass unpermute(const CurveClass& C) const {
        Multiplicities m{};
        for (int k = 1; k <= kMaxPoints; ++k) m[static_cast<std::size_t>(source(k) - 1)] = C.mult(k);
        return CurveClass{C.degree(), m};
    }

    friend bool operator==(const Relabeling&, const Relabeling&) = default;

private:
    std::array<int, kMaxPoints> src_{};
};

/// Stable descending sort of the multiplicities; the relabeling maps sorted
/// slots back to original point labels.
struct SortedClass {
    DivisorClass sorted;
    Relabeling order;
};

inline SortedClass sort_descending(const DivisorClass& L) {
    std::array<int, kMaxPoints> src{};
    std::iota(src.begin(), src.end(), 1);
    std::stable_sort(src.begin(), src.end(), [&](int x, int y) { return L.mult(x) > L.mult(y); });
    Relabeling order{src};
    return {order.permute(L), order};
}

/// Cremona based at points 1..4: k = 2d - (m_1+..+m_4) is added to d and to
/// m_1..m_4.
inline DivisorClass cremona_divisor(const DivisorClass& L) {
    const auto& m = L.mults();
    const std::int64_t k = checked::sub(checked::mul(2, L.degree()), m[0] + m[1] + m[2] + m[3]);
    Multiplicities out = m;
    for (std::size_t i = 0; i < 4; ++i) out[i] = checked::add(out[i], k);
    return DivisorClass{checked::add(L.degree(), k), out};
}

/// Cremona based at the points B.
inline DivisorClass cremona_divisor(const DivisorClass& L, const FourPoints& B) {
    check_four_points(B);
    const std::int64_t k = checked::sub(checked::mul(2, L.degree()),
                                        L.mult(B[0]) + L.mult(B[1]) + L.mult(B[2]) + L.mult(B[3]));
    DivisorClass out{checked::add(L.degree(), k), L.mults()};
    for (int b : B) out = out.with_mult(b, checked::add(L.mult(b), k));
    return out;
}

/// Cremona based at points 1..4 on a curve class assumed skew to the six
/// edges of the tetrahedron: h = delta - (mu_1+..+mu_4), delta += 2h,
/// mu_1..mu_4 += h. Edge lines inside {1,..,4} follow a different rule; use
/// cremona_minus_one for those.
inline CurveClass cremona_curve(const CurveClass& C) {
    const auto& mu = C.mults();
    const std::int64_t h = checked::sub(C.degree(), mu[0] + mu[1] + mu[2] + mu[3]);
    Multiplicities out = mu;
    for (std::size_t i = 0; i < 4; ++i) out[i] = checked::add(out[i], h);
    return CurveClass{checked::add(C.degree(), checked::mul(2, h)), out};
}

inline CurveClass cremona_curve(const CurveClass& C, const FourPoints& B) {
    check_four_points(B);
    std::array<int, kMaxPoints> src{};
    std::copy(B.begin(), B.end(), src.begin());
    int next = 4;
    for (int i = 1; i <= kMaxPoints; ++i)
        if (!in_four(B, i)) src[static_cast<std::size_t>(next++)] = i;
    Relabeling r{src};
    return r.unpermute(cremona_curve(r.permute(C)));
}

/// True when the class is an edge line l_{i,j} with i, j both in B. The
/// skew formula does not apply to those.
inline bool is_edge_of(const MinusOneCurveId& id, const FourPoints& B) {
    return id.a == 0 && in_four(B, id.b) && in_four(B, id.c);
}

/// Image of C_a^{b,c} under the Cremona based at B. The three canonical
/// cases are written for {b,c} = {1,2} with B = {1,2,3,4}, {2,3,4,5} or
/// {3,4,5,6}; a general (b, c, B) is conjugated onto one of them.
inline MinusOneCurveId cremona_minus_one(const MinusOneCurveId& id, const FourPoints& B) {
    check_four_points(B);
    const bool b_in = in_four(B, id.b);
    const bool c_in = in_four(B, id.c);
    const int shared = int(b_in) + int(c_in);

    // canonical slot -> original label
    std::array<int, kMaxPoints> order{};
    std::size_t n = 0;
    auto push = [&](int label) { order[n++] = label; };
    if (shared == 1) {
        push(b_in ? id.c : id.b);
        push(b_in ? id.b : id.c);
    } else {
        push(id.b);
        push(id.c);
    }
    std::array<int, 4> sorted_B = B;
    std::sort(sorted_B.begin(), sorted_B.end());
    for (int x : sorted_B)
        if (!id.contains(x)) push(x);
    for (int x = 1; x <= kMaxPoints; ++x)
        if (!id.contains(x) && !in_four(B, x)) push(x);

    const bool a_odd = id.a % 2 == 1;
    int new_a = id.a;
    int p = 1, q = 2;
    switch (shared) {
    case 2:  // B = {1,2,3,4}
        p = 3, q = 4;
        if (id.a == 0) new_a = 0;
        else new_a = a_odd ? id.a + 1 : id.a - 1;
        break;
    case 1:  // B = {2,3,4,5}
        break;
    default:  // B = {3,4,5,6}
        p = 7, q = 8;
        if (id.a == 0) new_a = 1;
        else new_a = a_odd ? id.a - 1 : id.a + 1;
        break;
    }
    return MinusOneCurveId{new_a, order[static_cast<std::size_t>(p - 1)], order[static_cast<std::size_t>(q - 1)]};
}

/// One reduction step: sort into slots by `order`, transform on slots 1..4,
/// then restore the original labels. Classes stay in original labels.
struct CremonaStep {
    Relabeling order;

    FourPoints used() const { return {order.source(1), order.source(2), order.source(3), order.source(4)}; }

    DivisorClass apply(const DivisorClass& L) const { return order.unpermute(cremona_divisor(order.permute(L))); }
    CurveClass apply(const CurveClass& C) const { return order.unpermute(cremona_curve(order.permute(C))); }
    MinusOneCurveId apply(const MinusOneCurveId& id) const { return cremona_minus_one(id, used()); }

    friend bool operator==(const CremonaStep&, const CremonaStep&) = default;
};

struct ReductionTrace {
    std::vector<CremonaStep> steps;

    DivisorClass forward(DivisorClass L) const {
        for (const auto& s : steps) L = s.apply(L);
        return L;
    }
    /// Every step is an involution, so undoing is re-applying in reverse.
    DivisorClass backward(DivisorClass L) const {
        for (auto it = steps.rbegin(); it != steps.rend(); ++it) L = it->apply(L);
        return L;
    }
    MinusOneCurveId backward(MinusOneCurveId id) const {
        for (auto it = steps.rbegin(); it != steps.rend(); ++it) id = it->apply(id);
        return id;
    }

    std::size_t size() const { return steps.size(); }
    bool empty() const { return steps.empty(); }
};

}  // namespace bl3
