#pragma once

// Numerical verification over F_p: dimension by Hermite interpolation,
// vanishing order along lines, the eighth associated point of seven points,
// the cubic Cremona map on coordinates, and containment of (-1)-curves and
// D_Q8 in the base locus.
//
// Random points over a large prime field stand in for general points; every
// answer is exact for the sampled configuration and equals the generic one
// with high probability.

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <span>
#include <vector>

#include "bl3/cremona.hpp"
#include "bl3/lattice.hpp"
#include "bl3/reduction.hpp"
#include "bl3/oracle/configuration.hpp"
#include "bl3/oracle/field.hpp"
#include "bl3/oracle/linalg.hpp"
#include "bl3/oracle/polynomial.hpp"

namespace bl3::oracle {

struct KernelBasis {
    int degree = 0;
    std::vector<Vector> basis;  ///< coefficient vectors over monomials(degree)

    std::size_t dimension() const { return basis.size(); }
    bool empty() const { return basis.empty(); }
};

namespace detail {

inline std::mt19937_64 rng_for(u64 seed, u64 salt) { return std::mt19937_64{seed * 0x9E3779B97F4A7C15ull ^ salt}; }

inline u64 random_element(std::mt19937_64& rng, const PrimeField& F) { return rng() % F.modulus(); }

inline u64 random_nonzero(std::mt19937_64& rng, const PrimeField& F) {
    for (;;)
        if (const u64 v = rng() % F.modulus()) return v;
}

inline Vector random_combination(const std::vector<Vector>& basis, std::mt19937_64& rng, const PrimeField& F) {
    Vector out(basis.front().size(), 0);
    for (const auto& b : basis) {
        const u64 c = random_element(rng, F);
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = F.add(out[i], F.mul(c, b[i]));
    }
    return out;
}

inline Point combine(const PrimeField& F, u64 s, const Point& a, u64 t, const Point& b) {
    Point out{};
    for (std::size_t k = 0; k < 4; ++k) out[k] = F.add(F.mul(s, a[k]), F.mul(t, b[k]));
    return out;
}

inline void check_degree(std::int64_t d, const PrimeField& F) {
    if (d < 0) throw oracle_error("degree must be non-negative");
    if (static_cast<u64>(d) >= F.modulus()) throw oracle_error("prime must exceed the degree");
    if (d > 200) throw oracle_error("degree too large for dense interpolation");
}

/// x_k * q for q of degree `deg`, as a vector over monomials(deg + 1).
inline Vector multiply_by_variable(const Vector& q, std::size_t k, int deg) {
    const auto lo = monomials(deg);
    const auto hi = monomials(deg + 1);
    std::map<Exponent, std::size_t> index;
    for (std::size_t i = 0; i < hi.size(); ++i) index[hi[i]] = i;
    Vector out(hi.size(), 0);
    for (std::size_t i = 0; i < lo.size(); ++i) {
        auto e = lo[i];
        e[k] += 1;
        out[index.at(e)] = q[i];
    }
    return out;
}

}  // namespace detail

/// Rows: every Hasse derivative of order min(m_i - 1, d) at point i. By the
/// Euler relation (p > d) these force all lower-order derivatives to vanish,
/// so a point of multiplicity m contributes C(m+2, 3) rows when m <= d + 1.
inline Matrix conditions_matrix(std::int64_t d, std::span<const Point> pts, std::span<const std::int64_t> mults,
                                const PrimeField& F) {
    detail::check_degree(d, F);
    if (pts.size() != mults.size()) throw oracle_error("one multiplicity per point required");
    const int deg = static_cast<int>(d);
    MonomialEvaluator ev{deg, F};
    Matrix m{0, monomial_count(deg)};
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (mults[i] < 0) throw oracle_error("negative multiplicity in interpolation conditions");
        if (mults[i] == 0) continue;
        const int order = static_cast<int>(std::min<std::int64_t>(mults[i] - 1, d));
        for (const auto& alpha : monomials(order)) m.append_row(ev.derivative_row(alpha, pts[i]));
    }
    return m;
}

inline KernelBasis kernel_basis_at(std::int64_t d, std::span<const Point> pts, std::span<const std::int64_t> mults,
                                   const PrimeField& F) {
    return {static_cast<int>(d), kernel(conditions_matrix(d, pts, mults, F), F)};
}

inline KernelBasis kernel_basis(std::int64_t d, std::span<const std::int64_t> mults, const PointConfiguration& cfg) {
    if (mults.size() > static_cast<std::size_t>(kMaxPoints)) throw oracle_error("too many points");
    std::vector<Point> pts(cfg.points().begin(), cfg.points().begin() + static_cast<std::ptrdiff_t>(mults.size()));
    return kernel_basis_at(d, pts, mults, cfg.field());
}

inline KernelBasis kernel_basis(const DivisorClass& L, const PointConfiguration& cfg) {
    return kernel_basis(L.degree(), std::span<const std::int64_t>(L.mults()), cfg);
}

/// h^0 = C(d+3, 3) - rank of the interpolation conditions.
inline std::int64_t h0_interpolation(std::int64_t d, std::span<const std::int64_t> mults,
                                     const PointConfiguration& cfg) {
    if (mults.size() > static_cast<std::size_t>(kMaxPoints)) throw oracle_error("too many points");
    std::vector<Point> pts(cfg.points().begin(), cfg.points().begin() + static_cast<std::ptrdiff_t>(mults.size()));
    const auto m = conditions_matrix(d, pts, mults, cfg.field());
    return static_cast<std::int64_t>(monomial_count(static_cast<int>(d))) -
           static_cast<std::int64_t>(rank(m, cfg.field()));
}

inline std::int64_t h0_interpolation(const DivisorClass& L, const PointConfiguration& cfg) {
    return h0_interpolation(L.degree(), std::span<const std::int64_t>(L.mults()), cfg);
}

inline bool vanishes_at(const KernelBasis& kb, const Point& pt, const PrimeField& F) {
    MonomialEvaluator ev{kb.degree, F};
    const auto row = ev.evaluation_row(pt);
    return std::all_of(kb.basis.begin(), kb.basis.end(), [&](const Vector& v) { return dot(v, row, F) == 0; });
}

/// Multiplicity along the line through points i and j of a random member of
/// the system, minimized over three independent members. A member has
/// multiplicity >= s along the line iff all its order-(s-1) derivatives
/// vanish identically there; each derivative restricts to a binary form of
/// degree <= d, so testing d+1 distinct points of the line is exact.
/// Returns d+1 only for the zero polynomial.
inline int line_vanishing_order(const KernelBasis& kb, const PointConfiguration& cfg, int i, int j, u64 salt = 0) {
    if (kb.empty()) throw oracle_error("line_vanishing_order needs a non-empty system");
    check_index(i);
    check_index(j);
    if (i == j) throw oracle_error("line needs two distinct points");
    const auto& F = cfg.field();
    const int d = kb.degree;
    auto rng = detail::rng_for(cfg.seed(), 0x11A3u + salt * 131 + static_cast<u64>(i * 8 + j));

    std::set<u64> lambdas;
    while (lambdas.size() < static_cast<std::size_t>(d + 1)) lambdas.insert(detail::random_nonzero(rng, F));
    std::vector<Vector> rows_at_order;
    MonomialEvaluator ev{d, F};

    int best = d + 1;
    for (int trial = 0; trial < 3; ++trial) {
        const auto f = detail::random_combination(kb.basis, rng, F);
        int order = d + 1;
        for (int k = 0; k <= d && order > d; ++k) {
            for (const auto& alpha : monomials(k)) {
                bool nonzero = false;
                for (u64 lam : lambdas) {
                    const auto q = detail::combine(F, 1, cfg.point(i), lam, cfg.point(j));
                    if (ev.derivative(f, alpha, q) != 0) {
                        nonzero = true;
                        break;
                    }
                }
                if (nonzero) {
                    order = k;
                    break;
                }
            }
        }
        best = std::min(best, order);
    }
    return best;
}

/// Common zero of the net of quadrics through seven points, other than the
/// seven. The ideal of the eight base points agrees in degree 3 with the
/// span of x_k q for q in the net (12 of the 20 cubics); a linear form l
/// satisfies l*c in that span, for a quadric c through six of the points
/// and not the seventh P_j, exactly when l vanishes at P_j and at the
/// eighth point. Two such pencils of planes cut out the point.
inline Point eighth_point(const PointConfiguration& cfg, const std::array<int, 7>& seven, u64 salt = 0) {
    const auto& F = cfg.field();
    std::vector<Point> pts;
    for (int s : seven) {
        check_index(s);
        pts.push_back(cfg.point(s));
    }
    const std::vector<std::int64_t> ones7(7, 1), ones6(6, 1);
    const auto net = kernel_basis_at(2, pts, ones7, F);
    if (net.dimension() != 3) throw oracle_error("quadrics through seven points do not form a net");

    Matrix cubic_ideal;
    for (const auto& q : net.basis)
        for (std::size_t k = 0; k < 4; ++k) cubic_ideal.append_row(detail::multiply_by_variable(q, k, 2));
    const auto annihilator = kernel(cubic_ideal, F);
    if (annihilator.size() != 8) throw oracle_error("net of quadrics is not a complete intersection of 8 points");

    auto rng = detail::rng_for(cfg.seed(), 0xE16u + salt);
    Matrix planes;
    for (int pick = 0; pick < 2; ++pick) {
        const std::size_t drop = (static_cast<std::size_t>(salt) + static_cast<std::size_t>(pick)) % 7;
        std::vector<Point> six;
        for (std::size_t k = 0; k < 7; ++k)
            if (k != drop) six.push_back(pts[k]);
        const auto quad6 = kernel_basis_at(2, six, ones6, F);
        MonomialEvaluator ev2{2, F};
        bool found = false;
        for (int attempt = 0; attempt < 32 && !found; ++attempt) {
            const auto c = detail::random_combination(quad6.basis, rng, F);
            if (ev2.evaluate(c, pts[drop]) == 0) continue;
            Matrix conditions{annihilator.size(), 4};
            for (std::size_t k = 0; k < 4; ++k) {
                const auto xc = detail::multiply_by_variable(c, k, 2);
                for (std::size_t s = 0; s < annihilator.size(); ++s) conditions(s, k) = dot(annihilator[s], xc, F);
            }
            const auto pencil = kernel(conditions, F);
            if (pencil.size() != 2) continue;
            for (const auto& l : pencil) planes.append_row(l);
            found = true;
        }
        if (!found) throw oracle_error("could not isolate the eighth point (degenerate configuration)");
    }
    const auto sol = kernel(planes, F);
    if (sol.size() != 1) throw oracle_error("eighth point is not isolated");
    const Point P{sol[0][0], sol[0][1], sol[0][2], sol[0][3]};
    if (!vanishes_at(net, P, F)) throw oracle_error("eighth point is not on the net");
    for (const auto& q : pts)
        if (same_point(P, q, F)) throw oracle_error("eighth point coincides with an input point");
    return P;
}

/// Cubic Cremona map based at cfg points B: move B to the coordinate
/// simplex, apply (x_0:..:x_3) -> (x_1x_2x_3 : x_0x_2x_3 : x_0x_1x_3 : x_0x_1x_2),
/// move back. An involution off the indeterminacy locus (points on an edge
/// of the tetrahedron, i.e. two or more vanishing simplex coordinates).
inline std::vector<Point> cremona_point_map(const std::vector<Point>& pts, const FourPoints& B,
                                            const PointConfiguration& cfg) {
    check_four_points(B);
    const auto& F = cfg.field();
    Matrix aug{4, 8};
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t k = 0; k < 4; ++k) aug(r, k) = cfg.point(B[k])[r];
        aug(r, 4 + r) = 1;
    }
    const auto e = row_reduce(aug, F);
    if (e.rank() != 4 || e.pivots[3] != 3) throw oracle_error("Cremona base points are coplanar");
    std::vector<Point> out;
    out.reserve(pts.size());
    for (const auto& x : pts) {
        Point y{};
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t c = 0; c < 4; ++c) y[r] = F.add(y[r], F.mul(e.reduced(r, 4 + c), x[c]));
        if (std::count(y.begin(), y.end(), u64{0}) >= 2)
            throw oracle_error("point lies in the indeterminacy locus of the Cremona map");
        const Point z{F.mul(F.mul(y[1], y[2]), y[3]), F.mul(F.mul(y[0], y[2]), y[3]), F.mul(F.mul(y[0], y[1]), y[3]),
                      F.mul(F.mul(y[0], y[1]), y[2])};
        Point w{};
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t k = 0; k < 4; ++k) w[r] = F.add(w[r], F.mul(cfg.point(B[k])[r], z[k]));
        out.push_back(w);
    }
    return out;
}

/// The configuration seen after the Cremona based at B: points of B stay,
/// the other four move under the map.
inline PointConfiguration cremona_configuration(const PointConfiguration& cfg, const FourPoints& B) {
    std::array<Point, kMaxPoints> pts = cfg.points();
    for (int i = 1; i <= kMaxPoints; ++i)
        if (!in_four(B, i))
            pts[static_cast<std::size_t>(i - 1)] = cremona_point_map({cfg.point(i)}, B, cfg).front();
    return PointConfiguration::from_points(cfg.field(), cfg.seed(), pts);
}

/// Base points of one Cremona step that lowers the level of C_a^{b,c}:
/// a odd takes four indices outside {b,c}, a even takes b, c and two more.
inline FourPoints lowering_base(const MinusOneCurveId& id) {
    FourPoints B{};
    std::size_t n = 0;
    if (id.a % 2 == 0) {
        B[n++] = id.b;
        B[n++] = id.c;
    }
    for (int x = 1; x <= kMaxPoints && n < 4; ++x)
        if (!id.contains(x)) B[n++] = x;
    return B;
}

/// Points of the curve C_a^{b,c} for the configuration: lower the level by
/// Cremona steps down to a line l_{u,v} of a moved configuration, sample the
/// line, and map the samples back through the same steps.
inline std::vector<Point> minus_one_curve_points(const MinusOneCurveId& id, const PointConfiguration& cfg,
                                                 std::size_t count, u64 salt = 0) {
    const auto& F = cfg.field();
    std::vector<PointConfiguration> cfgs{cfg};
    std::vector<FourPoints> bases;
    MinusOneCurveId cur = id;
    while (cur.a > 0) {
        const auto B = lowering_base(cur);
        const auto next = cremona_minus_one(cur, B);
        if (next.a != cur.a - 1) throw oracle_error("lowering step did not reduce the curve level");
        cfgs.push_back(cremona_configuration(cfgs.back(), B));
        bases.push_back(B);
        cur = next;
    }
    auto rng = detail::rng_for(cfg.seed(), 0xC0FFEEu + salt);
    std::vector<Point> out;
    for (std::size_t n = 0; n < count; ++n) {
        for (int attempt = 0;; ++attempt) {
            if (attempt > 100) throw oracle_error("repeated indeterminacy while sampling a curve");
            std::vector<Point> pt{detail::combine(F, 1, cfgs.back().point(cur.b), detail::random_nonzero(rng, F),
                                                  cfgs.back().point(cur.c))};
            try {
                for (std::size_t s = bases.size(); s-- > 0;) pt = cremona_point_map(pt, bases[s], cfgs[s]);
            } catch (const oracle_error&) {
                continue;
            }
            out.push_back(pt.front());
            break;
        }
    }
    return out;
}

/// True iff every member of L vanishes at 2a+2 sampled points of C_a^{b,c}.
inline bool curve_membership_check(const DivisorClass& L, const MinusOneCurveId& id, const PointConfiguration& cfg) {
    if (id.a > 2) throw oracle_error("curve containment is supported for a <= 2 only");
    const auto kb = kernel_basis(L, cfg);
    if (kb.empty()) throw oracle_error("curve containment needs a non-empty system");
    const auto pts = minus_one_curve_points(id, cfg, static_cast<std::size_t>(2 * id.a + 2));
    return std::all_of(pts.begin(), pts.end(), [&](const Point& p) { return vanishes_at(kb, p, cfg.field()); });
}

/// The eighth associated point for a class with 4d - sum m_i = 1: reduce
/// to L3(2m; m^7, m-1), take the eighth base point of the quadric net
/// through the seven points of multiplicity m in the reduced configuration,
/// and map it back through the Cremona steps.
inline Point associated_point(const DivisorClass& L, const PointConfiguration& cfg) {
    const auto r = reduce_to_standard(L);
    if (r.degree_negative || anticanonical_degree(r.standard) != 1 || r.standard.mult(7) != r.standard.mult(1) ||
        r.standard.degree() != 2 * r.standard.mult(1))
        throw oracle_error("class does not reduce to L3(2m; m^7, m-1)");
    std::vector<PointConfiguration> cfgs{cfg};
    for (const auto& step : r.trace.steps) cfgs.push_back(cremona_configuration(cfgs.back(), step.used()));
    std::array<int, 7> seven{};
    for (int k = 1; k <= 7; ++k) seven[static_cast<std::size_t>(k - 1)] = r.end_order.source(k);
    std::vector<Point> pt{eighth_point(cfgs.back(), seven)};
    for (std::size_t s = r.trace.size(); s-- > 0;) pt = cremona_point_map(pt, r.trace.steps[s].used(), cfgs[s]);
    return pt.front();
}

/// Points of D_Q8, the base curve of the pencil of quadrics through all
/// eight points. A plane through P_i, P_j, P_k meets the curve in those
/// three and one more point; in plane coordinates the pencil restricts to
/// conics through the coordinate triangle, which the plane quadratic
/// transformation turns into lines, so the extra point is rational.
inline std::vector<Point> dq8_sample_points(const PointConfiguration& cfg, std::size_t count) {
    const auto& F = cfg.field();
    const std::vector<std::int64_t> ones(8, 1);
    const std::vector<Point> all(cfg.points().begin(), cfg.points().end());
    const auto pencil = kernel_basis_at(2, all, ones, F);
    if (pencil.dimension() != 2) throw oracle_error("quadrics through eight points are not a pencil");
    MonomialEvaluator ev{2, F};
    auto add = [&](const Point& a, const Point& b) { return detail::combine(F, 1, a, 1, b); };

    std::vector<Point> out;
    for (int i = 1; i <= 8 && out.size() < count; ++i)
        for (int j = i + 1; j <= 8 && out.size() < count; ++j)
            for (int k = j + 1; k <= 8 && out.size() < count; ++k) {
                const auto &Pi = cfg.point(i), &Pj = cfg.point(j), &Pk = cfg.point(k);
                std::array<std::array<u64, 3>, 2> lines{};
                for (std::size_t q = 0; q < 2; ++q) {
                    const auto& f = pencil.basis[q];
                    // conic A st + B su + C tu  <->  line C X + B Y + A Z with X = 1/s, ...
                    lines[q] = {ev.evaluate(f, add(Pj, Pk)), ev.evaluate(f, add(Pi, Pk)), ev.evaluate(f, add(Pi, Pj))};
                }
                const auto& l = lines[0];
                const auto& m = lines[1];
                const u64 X = F.sub(F.mul(l[1], m[2]), F.mul(l[2], m[1]));
                const u64 Y = F.sub(F.mul(l[2], m[0]), F.mul(l[0], m[2]));
                const u64 Z = F.sub(F.mul(l[0], m[1]), F.mul(l[1], m[0]));
                if (X == 0 || Y == 0 || Z == 0) continue;
                Point pt{};
                for (std::size_t r = 0; r < 4; ++r)
                    pt[r] = F.add(F.add(F.mul(F.inv(X), Pi[r]), F.mul(F.inv(Y), Pj[r])), F.mul(F.inv(Z), Pk[r]));
                if (!vanishes_at(pencil, pt, F)) throw oracle_error("D_Q8 sample is not on the quadric pencil");
                out.push_back(pt);
            }
    return out;
}

}  // namespace bl3::oracle
