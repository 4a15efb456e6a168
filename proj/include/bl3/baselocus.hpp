#pragma once

// Complete base locus of a non-empty system: fixed part, base curves
// C_a^{b,c} with multiplicities, the D_Q8 term and the isolated point.

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bl3/cremona.hpp"
#include "bl3/lattice.hpp"
#include "bl3/reduction.hpp"

namespace bl3 {

struct CurveTerm {
    MinusOneCurveId id;
    std::int64_t mult = 0;
    friend auto operator<=>(const CurveTerm&, const CurveTerm&) = default;
};

/// The isolated base point: the unique base point of the system on D_Q8.
/// `seven` are the points carrying full multiplicity once the residual is
/// reduced to L3(2m; m^7, m-1), in original labels. The point lives in the
/// configuration reached after `steps` Cremona transformations and is
/// mapped back through them. For m = 1 it is the eighth base point of the
/// quadric net through the seven; for m >= 2 it is not.
struct PointSpec {
    std::array<int, 7> seven{};
    std::size_t steps = 0;
    std::string description;
    friend bool operator==(const PointSpec&, const PointSpec&) = default;
};

struct IsolatedPoint {
    std::int64_t mult = 0;
    PointSpec spec;
    friend bool operator==(const IsolatedPoint&, const IsolatedPoint&) = default;
};

struct BaseLocusResult {
    FixedPart fixed;
    DivisorClass residual;
    std::vector<CurveTerm> curves;  ///< sorted by (a, b, c)
    std::int64_t dq8_mult = 0;
    std::optional<IsolatedPoint> point;
    std::size_t trace_len = 0;  ///< Cremona steps needed to reduce the input
};

namespace detail {

inline std::vector<CurveTerm> to_terms(const std::map<MinusOneCurveId, std::int64_t>& m) {
    std::vector<CurveTerm> out;
    for (const auto& [id, t] : m)
        if (t != 0) out.push_back({id, t});
    return out;
}

inline PointSpec make_point_spec(std::array<int, 7> seven, std::int64_t m, std::size_t steps) {
    std::sort(seven.begin(), seven.end());
    std::string text = m == 1 ? "eighth base point of the quadric net through the seven points"
                              : "unique base point of the system on D_Q8";
    if (steps > 0) text += ", taken after " + std::to_string(steps) + " Cremona steps and mapped back";
    return {seven, steps, text};
}

inline bool is_dq8_class(const DivisorClass& L) {
    const auto m = L.mult(1);
    if (m < 1 || L.degree() != 2 * m) return false;
    return std::all_of(L.mults().begin(), L.mults().end(), [&](auto x) { return x == m; });
}

inline bool is_point_class(const DivisorClass& L) {
    const auto m = L.mult(1);
    if (m < 1 || L.degree() != 2 * m || L.mult(8) != m - 1) return false;
    for (int i = 1; i <= 7; ++i)
        if (L.mult(i) != m) return false;
    return true;
}

}  // namespace detail

/// Base locus of a non-empty class in standard form. Four cases:
/// L3(2m; m^8) gives m D_Q8, L3(2m; m^7, m-1) gives mP, d < m_1 + m_2 gives
/// the lines with t_{i,j} > 0, and everything else is base point free.
inline BaseLocusResult base_locus_standard(const DivisorClass& L) {
    if (!is_standard_form(L) || L.mult(1) > L.degree())
        throw invalid_class("base_locus_standard needs a non-empty class in standard form");
    BaseLocusResult out;
    out.residual = L;
    if (detail::is_dq8_class(L)) {
        out.dq8_mult = L.mult(1);
    } else if (detail::is_point_class(L)) {
        out.point = IsolatedPoint{L.mult(1), detail::make_point_spec({1, 2, 3, 4, 5, 6, 7}, L.mult(1), 0)};
    } else if (L.degree() < L.mult(1) + L.mult(2)) {
        for (int i = 1; i <= kMaxPoints; ++i)
            for (int j = i + 1; j <= kMaxPoints; ++j)
                if (const auto t = pair_excess(L, i, j); t > 0) out.curves.push_back({MinusOneCurveId{0, i, j}, t});
    }
    return out;
}

/// All C_a^{b,c} with t = -L . C_a^{b,c} > 0, for a fixed-component-free
/// class. Levels are scanned up to a = 4d. Writing K = 4d - sum m_i,
///   t = -(a/2) K + (m_b + m_c - d)        for a even,
///   t = -((a+1)/2) K + (d - m_b - m_c)    for a odd,
/// so for K >= 1 the values fall below zero well before that bound.
inline std::vector<CurveTerm> enumerate_base_curves(const DivisorClass& L) {
    const auto K = anticanonical_degree(L);
    const bool standard = is_standard_form(sort_descending(L).sorted);
    if (K <= 0 && !standard)
        throw internal_inconsistency("non-standard fixed-component-free class with 4d - sum m_i <= 0");
    const int a_max = (K <= 0) ? 0 : static_cast<int>(std::max<std::int64_t>(4 * L.degree(), 3));
    std::vector<CurveTerm> out;
    for (int a = 0; a <= a_max; ++a)
        for (int b = 1; b <= kMaxPoints; ++b)
            for (int c = b + 1; c <= kMaxPoints; ++c) {
                const MinusOneCurveId id{a, b, c};
                const auto t = -intersect(L, minus_one_curve(id));
                if (t <= 0) continue;
                if (K > 0 && a > a_max - 4)
                    throw internal_inconsistency("base curve multiplicity still positive at the enumeration bound");
                out.push_back({id, t});
            }
    std::sort(out.begin(), out.end());
    return out;
}

/// Full base locus of a non-empty user class.
inline BaseLocusResult base_locus(const DivisorClass& L) {
    require_user_facing(L, "base_locus");
    const auto fc = fixed_components(L);
    BaseLocusResult out;
    out.trace_len = reduce_to_standard(L).trace.size();
    out.fixed = fc.fixed;
    out.residual = fc.residual;

    const auto K = anticanonical_degree(fc.residual);
    const auto sorted = sort_descending(fc.residual);
    if (is_standard_form(sorted.sorted)) {
        const auto bs = base_locus_standard(sorted.sorted);
        for (const auto& term : bs.curves)
            out.curves.push_back(
                {MinusOneCurveId{0, sorted.order.source(term.id.b), sorted.order.source(term.id.c)}, term.mult});
        std::sort(out.curves.begin(), out.curves.end());
        out.dq8_mult = bs.dq8_mult;
        if (bs.point) {
            std::array<int, 7> seven{};
            for (int k = 1; k <= 7; ++k) seven[static_cast<std::size_t>(k - 1)] = sorted.order.source(k);
            out.point = IsolatedPoint{bs.point->mult, detail::make_point_spec(seven, bs.point->mult, 0)};
        }
    } else {
        if (K <= 0) throw internal_inconsistency("non-standard fixed-component-free residual with K <= 0");
        out.curves = enumerate_base_curves(fc.residual);
        if (K == 1) {
            const auto r = reduce_to_standard(fc.residual);
            if (!detail::is_point_class(r.standard))
                throw internal_inconsistency("K = 1 residual did not reduce to L3(2m; m^7, m-1)");
            std::array<int, 7> seven{};
            for (int k = 1; k <= 7; ++k) seven[static_cast<std::size_t>(k - 1)] = r.end_order.source(k);
            out.point = IsolatedPoint{r.standard.mult(1), detail::make_point_spec(seven, r.standard.mult(1), r.trace.size())};
        }
    }

    if (out.point.has_value() != (K == 1))
        throw internal_inconsistency("isolated point present iff K = 1 failed");
    if (out.dq8_mult > 0 && K != 0) throw internal_inconsistency("D_Q8 term with K != 0");
    for (const auto& term : out.curves)
        if (-intersect(fc.residual, minus_one_curve(term.id)) != term.mult)
            throw internal_inconsistency("base curve multiplicity differs from -L.C");
    return out;
}

/// Base curves of a fixed-component-free class obtained by reducing to
/// standard form and walking the trace backwards. At each step with base B,
/// curves that are not edges inside B are carried by cremona_minus_one with
/// their multiplicity; the edges l_{i,j} with i, j in B flip the sign of
/// their t-value under the transformation, so those are read off the class
/// before the step instead.
inline std::vector<CurveTerm> transported_base_curves(const DivisorClass& L) {
    require_user_facing(L, "transported_base_curves");
    const auto r = reduce_to_standard(L);
    if (r.degree_negative) throw empty_system("the linear system is empty");
    if (!r.stripped.empty()) throw invalid_class("transport check needs a class without fixed components");

    std::vector<DivisorClass> before;
    DivisorClass cur = L;
    for (const auto& step : r.trace.steps) {
        before.push_back(cur);
        cur = step.apply(cur);
    }

    std::map<MinusOneCurveId, std::int64_t> curves;
    const auto sorted = sort_descending(r.end);
    for (const auto& term : base_locus_standard(sorted.sorted).curves)
        curves[MinusOneCurveId{0, r.end_order.source(term.id.b), r.end_order.source(term.id.c)}] += term.mult;

    for (std::size_t s = r.trace.size(); s-- > 0;) {
        const auto B = r.trace.steps[s].used();
        std::map<MinusOneCurveId, std::int64_t> next;
        for (const auto& [id, t] : curves) {
            if (is_edge_of(id, B)) continue;
            next[cremona_minus_one(id, B)] += t;
        }
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = i + 1; j < 4; ++j)
                if (const auto t = pair_excess(before[s], B[i], B[j]); t > 0) next[MinusOneCurveId{0, B[i], B[j]}] += t;
        curves = std::move(next);
    }
    return detail::to_terms(curves);
}

/// True iff the trace-transported base curves agree with the direct
/// enumeration, ids and multiplicities.
inline bool transport_cross_check(const DivisorClass& L) {
    return transported_base_curves(L) == enumerate_base_curves(L);
}

}  // namespace bl3
