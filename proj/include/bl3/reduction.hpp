#pragma once

// Cremona reduction to standard form, extraction of fixed components by
// transporting stripped exceptional divisors back to the original points,
// and the dimension count for standard classes.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "bl3/cremona.hpp"
#include "bl3/lattice.hpp"

namespace bl3 {

struct StrippedSlot {
    int slot = 0;           ///< slot in the sorted end class
    int label = 0;          ///< original point label of that slot
    std::int64_t mult = 0;  ///< -m of the negative end multiplicity
};

struct ReductionResult {
    DivisorClass end;       ///< end class in original labels
    DivisorClass standard;  ///< end class sorted descending
    Relabeling end_order;   ///< standard slot k holds original point end_order.source(k)
    ReductionTrace trace;
    std::vector<StrippedSlot> stripped;
    bool degree_negative = false;  ///< reduction ran below degree 0: the system is empty
};

inline void require_user_facing(const DivisorClass& L, const char* op) {
    if (L.internal())
        throw invalid_class(std::string(op) + " needs a class with d >= 0 and all m_i >= 0");
}

/// Sort, apply the Cremona on the four largest multiplicities while
/// 2d < m_1+m_2+m_3+m_4, repeat. Every applied step has k < 0, so the degree
/// strictly drops and the loop runs at most d + 1 times.
inline ReductionResult reduce_to_standard(const DivisorClass& L) {
    require_user_facing(L, "reduce_to_standard");
    ReductionResult out;
    DivisorClass cur = L;
    for (;;) {
        if (cur.degree() < 0) {
            out.degree_negative = true;
            break;
        }
        const auto s = sort_descending(cur);
        const auto& m = s.sorted.mults();
        if (checked::mul(2, cur.degree()) >= m[0] + m[1] + m[2] + m[3]) break;
        CremonaStep step{s.order};
        cur = step.apply(cur);
        out.trace.steps.push_back(step);
    }
    out.end = cur;
    const auto s = sort_descending(cur);
    out.standard = s.sorted;
    out.end_order = s.order;
    for (int k = 1; k <= kMaxPoints; ++k)
        if (s.sorted.mult(k) < 0) out.stripped.push_back({k, s.order.source(k), -s.sorted.mult(k)});
    return out;
}

/// Applies the steps of `trace` to C in reverse order.
inline DivisorClass transport_divisor_back(const DivisorClass& C, const ReductionTrace& trace) {
    return trace.backward(C);
}

/// The class E_i written as (0; 0, .., -1 at i, .., 0).
inline DivisorClass exceptional_class(int i) { return DivisorClass{}.with_mult(i, -1); }

struct FixedItem {
    DivisorClass cls;
    std::int64_t mult = 0;
    friend bool operator==(const FixedItem&, const FixedItem&) = default;
};

struct FixedPart {
    std::vector<FixedItem> items;

    bool empty() const { return items.empty(); }
    DivisorClass total() const {
        DivisorClass sum;
        for (const auto& it : items) sum = sum + it.mult * it.cls;
        return sum;
    }
    void add(const DivisorClass& cls, std::int64_t mult) {
        for (auto& it : items)
            if (it.cls == cls) {
                it.mult = checked::add(it.mult, mult);
                return;
            }
        items.push_back({cls, mult});
    }
};

struct FixedComponents {
    FixedPart fixed;
    DivisorClass residual;
};

namespace detail {

inline DivisorClass clamp_negative(const DivisorClass& L) {
    Multiplicities m = L.mults();
    for (auto& x : m) x = std::max<std::int64_t>(x, 0);
    return DivisorClass{L.degree(), m};
}

/// Empty when reduction runs below degree 0 or the clamped end class has a
/// point of multiplicity above the degree.
inline bool end_is_empty(const ReductionResult& r) {
    if (r.degree_negative) return true;
    const auto clamped = clamp_negative(r.standard);
    return clamped.mult(1) > clamped.degree();
}

}  // namespace detail

/// Fixed components with multiplicity and the residual system. Classes
/// are reported in the original point labels, ordered by the label of the
/// stripped exceptional divisor.
///
/// Clamping negative end multiplicities can leave a class that is no longer
/// in standard form (a top-four entry was negative); the residual is then
/// reduced again and further fixed components are stripped.
inline FixedComponents fixed_components(const DivisorClass& L) {
    require_user_facing(L, "fixed_components");
    FixedComponents out;
    out.residual = L;
    for (int round = 0;; ++round) {
        if (round > kMaxPoints * 64) throw internal_inconsistency("fixed component extraction did not terminate");
        const auto r = reduce_to_standard(out.residual);
        if (detail::end_is_empty(r)) {
            if (round == 0) throw empty_system("the linear system is empty");
            throw internal_inconsistency("residual of a non-empty system became empty");
        }
        if (r.stripped.empty()) break;
        std::vector<StrippedSlot> by_label = r.stripped;
        std::sort(by_label.begin(), by_label.end(), [](auto& x, auto& y) { return x.label < y.label; });
        DivisorClass removed;
        for (const auto& s : by_label) {
            const auto F = transport_divisor_back(exceptional_class(s.label), r.trace);
            if (F.internal() || F.degree() < 1)
                throw internal_inconsistency("fixed component transported back to a non-effective class");
            out.fixed.add(F, s.mult);
            removed = removed + s.mult * F;
        }
        out.residual = out.residual - removed;
        if (out.residual.internal())
            throw internal_inconsistency("subtracting the fixed part left a negative multiplicity");
    }
    return out;
}

/// h^1 of a standard class: sum over pairs with t_{i,j} >= 2 of C(t+1, 3).
inline std::int64_t h1_standard(const DivisorClass& L) {
    if (!is_standard_form(L) || L.mult(1) > L.degree())
        throw invalid_class("h1_standard needs a standard class with d >= m_1");
    std::int64_t h1 = 0;
    for (int i = 1; i <= kMaxPoints; ++i)
        for (int j = i + 1; j <= kMaxPoints; ++j) {
            const auto t = pair_excess(L, i, j);
            if (t >= 2) h1 = checked::add(h1, checked::binom_small(t + 1, 3));
        }
    return h1;
}

/// Expected dimension C(d+3, 3) - sum C(m_i+2, 3).
inline std::int64_t euler_characteristic(const DivisorClass& L) {
    std::int64_t chi = checked::binom_small(checked::add(L.degree(), 3), 3);
    for (auto m : L.mults()) chi = checked::sub(chi, checked::binom_small(checked::add(m, 2), 3));
    return chi;
}

/// Vector-space dimension h^0 of the system (0 when empty).
inline std::int64_t dimension(const DivisorClass& L) {
    require_user_facing(L, "dimension");
    DivisorClass cur = L;
    for (int round = 0;; ++round) {
        if (round > kMaxPoints * 64) throw internal_inconsistency("dimension reduction did not terminate");
        const auto r = reduce_to_standard(cur);
        if (detail::end_is_empty(r)) return 0;
        const auto clamped = detail::clamp_negative(r.standard);
        if (is_standard_form(clamped)) {
            const auto h0 = checked::add(euler_characteristic(clamped), h1_standard(clamped));
            if (h0 < 1) throw internal_inconsistency("standard class with d >= m_1 has h^0 < 1");
            return h0;
        }
        cur = clamped;
    }
}

}  // namespace bl3
