#pragma once

// Command logic behind the bl3 tool: every command returns its exit code
// and the text it would print, so tests can drive it without a process.

#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "bl3/baselocus.hpp"
#include "bl3/notation.hpp"
#include "bl3/oracle/oracle.hpp"
#include "bl3/reduction.hpp"

namespace bl3::report {

using nlohmann::json;
using oracle::u64;

enum ExitCode : int { kOk = 0, kUsage = 1, kEmpty = 2, kVerifyFailed = 3, kInternal = 4 };

struct Options {
    bool json = false;
    bool oracle = false;
    u64 seed = oracle::kDefaultSeed;
    u64 prime = oracle::kDefaultPrime;
};

struct Outcome {
    int code = kOk;
    std::string out;
    std::string err;
};

inline json class_json(const DivisorClass& L) {
    return {{"d", L.degree()}, {"m", std::vector<std::int64_t>(L.mults().begin(), L.mults().end())}};
}

inline json fixed_json(const FixedPart& F) {
    json arr = json::array();
    for (const auto& it : F.items) arr.push_back({{"class", class_json(it.cls)}, {"mult", it.mult}});
    return arr;
}

inline json curves_json(const std::vector<CurveTerm>& curves) {
    json arr = json::array();
    for (const auto& t : curves) arr.push_back({{"a", t.id.a}, {"b", t.id.b}, {"c", t.id.c}, {"mult", t.mult}});
    return arr;
}

inline json point_json(const std::optional<IsolatedPoint>& p) {
    if (!p) return nullptr;
    return {{"mult", p->mult},
            {"seven", std::vector<int>(p->spec.seven.begin(), p->spec.seven.end())},
            {"steps", p->spec.steps}};
}

/// Every command emits the same keys; sections a command does not compute
/// stay null.
inline json blank_report(const DivisorClass& L) {
    json j;
    j["system"] = class_json(L);
    for (const char* key : {"h0", "fixed", "residual", "curves", "dq8_mult", "point", "trace_len", "reduction",
                            "oracle", "checks", "error"})
        j[key] = nullptr;
    return j;
}

/// One row per class of the reduction, in original labels; `used` lists the
/// four points of the Cremona applied to that row (null on the last row).
inline json reduction_json(const DivisorClass& L, const ReductionResult& r) {
    json rows = json::array();
    DivisorClass cur = L;
    for (const auto& step : r.trace.steps) {
        const auto B = step.used();
        rows.push_back({{"d", cur.degree()},
                        {"m", std::vector<std::int64_t>(cur.mults().begin(), cur.mults().end())},
                        {"used", std::vector<int>(B.begin(), B.end())}});
        cur = step.apply(cur);
    }
    rows.push_back({{"d", cur.degree()},
                    {"m", std::vector<std::int64_t>(cur.mults().begin(), cur.mults().end())},
                    {"used", nullptr}});
    return rows;
}

/// The full base-locus report used by `bs` and by fixture comparison. An
/// empty system reports h0 = 0 and an error entry.
inline json system_report(const DivisorClass& L) {
    require_user_facing(L, "base locus");
    auto j = blank_report(L);
    const auto h0 = dimension(L);
    j["h0"] = h0;
    if (h0 == 0) {
        j["error"] = "empty system";
        return j;
    }
    const auto bs = base_locus(L);
    j["fixed"] = fixed_json(bs.fixed);
    j["residual"] = class_json(bs.residual);
    j["curves"] = curves_json(bs.curves);
    j["dq8_mult"] = bs.dq8_mult;
    j["point"] = point_json(bs.point);
    j["trace_len"] = bs.trace_len;
    return j;
}

inline std::string curve_name(const MinusOneCurveId& id) {
    return "C_" + std::to_string(id.a) + "^{" + std::to_string(id.b) + "," + std::to_string(id.c) + "}";
}

inline std::string point_name(const IsolatedPoint& p) {
    std::string labels;
    bool consecutive = true;
    for (std::size_t k = 0; k < 7; ++k) consecutive = consecutive && p.spec.seven[k] == static_cast<int>(k) + 1;
    if (consecutive) {
        labels = "1..7";
    } else {
        for (std::size_t k = 0; k < 7; ++k) labels += (k ? "," : "") + std::to_string(p.spec.seven[k]);
    }
    return std::to_string(p.mult) + " * P(points " + labels + ")";
}

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

namespace detail {

inline Outcome guarded(const std::function<Outcome()>& body, bool as_json) {
    auto fail = [&](int code, const std::string& msg) {
        Outcome o{code, "", msg + "\n"};
        if (as_json) o.out = dump(json{{"error", msg}});
        return o;
    };
    try {
        return body();
    } catch (const parse_error& e) {
        Outcome o = fail(kUsage, e.what());
        o.err = e.pretty() + "\n";
        return o;
    } catch (const empty_system&) {
        return fail(kEmpty, "empty system");
    } catch (const internal_inconsistency& e) {
        return fail(kInternal, std::string("internal inconsistency: ") + e.what());
    } catch (const oracle::oracle_error& e) {
        return fail(kVerifyFailed, std::string("oracle error: ") + e.what());
    } catch (const overflow_error& e) {
        return fail(kUsage, e.what());
    } catch (const invalid_class& e) {
        return fail(kUsage, e.what());
    }
}

inline DivisorClass parse_user(const std::string& text) {
    const auto L = parse_system(text);
    require_user_facing(L, "this command");
    return L;
}

}  // namespace detail

inline Outcome cmd_dim(const std::string& text, const Options& opt) {
    return detail::guarded(
        [&] {
            const auto L = detail::parse_user(text);
            const auto h0 = dimension(L);
            auto j = blank_report(L);
            j["h0"] = h0;
            std::ostringstream os;
            os << render(L) << ": h0 = " << h0;
            if (h0 == 0)
                os << " (empty system)\n";
            else
                os << ", projective dimension " << h0 - 1 << "\n";
            Outcome o;
            if (opt.oracle) {
                const auto cfg = oracle::make_configuration(opt.prime, opt.seed);
                const auto h0o = oracle::h0_interpolation(L, cfg);
                const bool match = h0o == h0;
                j["oracle"] = {{"h0", h0o}, {"match", match}, {"prime", opt.prime}, {"seed", opt.seed}};
                os << "interpolation (p = " << opt.prime << ", seed = " << opt.seed << "): h0 = " << h0o << ", "
                   << (match ? "match" : "MISMATCH") << "\n";
                if (!match) o.code = kVerifyFailed;
            }
            o.out = opt.json ? dump(j) : os.str();
            return o;
        },
        opt.json);
}

inline Outcome cmd_fixed(const std::string& text, const Options& opt) {
    return detail::guarded(
        [&] {
            const auto L = detail::parse_user(text);
            const auto fc = fixed_components(L);
            auto j = blank_report(L);
            j["h0"] = dimension(L);
            j["fixed"] = fixed_json(fc.fixed);
            j["residual"] = class_json(fc.residual);
            j["trace_len"] = reduce_to_standard(L).trace.size();
            std::ostringstream os;
            if (fc.fixed.empty()) os << "no fixed components\n";
            for (std::size_t k = 0; k < fc.fixed.items.size(); ++k)
                os << "F" << k + 1 << " in " << render(fc.fixed.items[k].cls) << " x" << fc.fixed.items[k].mult << "\n";
            os << "residual " << render(fc.residual) << "\n";
            return Outcome{kOk, opt.json ? dump(j) : os.str(), ""};
        },
        opt.json);
}

inline Outcome cmd_bs(const std::string& text, const Options& opt) {
    return detail::guarded(
        [&] {
            const auto L = detail::parse_user(text);
            const auto bs = base_locus(L);
            auto j = system_report(L);
            std::ostringstream os;
            os << "system " << render(L) << "\n";
            os << "h0 = " << j["h0"].get<std::int64_t>() << "\n";
            if (bs.fixed.empty()) {
                os << "no fixed components\n";
            } else {
                os << "fixed part:\n";
                for (const auto& it : bs.fixed.items) os << "  " << it.mult << " * " << render(it.cls) << "\n";
            }
            os << "residual " << render(bs.residual) << "\n";
            if (bs.curves.empty() && bs.dq8_mult == 0 && !bs.point) {
                os << "residual is base point free\n";
            } else {
                os << "base locus of the residual:\n";
                for (const auto& t : bs.curves) os << "  " << t.mult << " * " << curve_name(t.id) << "\n";
                if (bs.dq8_mult > 0) os << "  " << bs.dq8_mult << " * D_Q8\n";
                if (bs.point) os << "  " << point_name(*bs.point) << "\n";
            }
            return Outcome{kOk, opt.json ? dump(j) : os.str(), ""};
        },
        opt.json);
}

/// The reduction diagram: one row per class in original labels, the four
/// points used by the next Cremona marked with '*'.
inline std::string reduction_table(const json& rows) {
    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> degrees;
    std::size_t dw = 0, cw = 0;
    for (const auto& row : rows) {
        degrees.push_back(std::to_string(row["d"].get<std::int64_t>()));
        dw = std::max(dw, degrees.back().size());
        std::vector<std::string> line;
        for (int i = 1; i <= kMaxPoints; ++i) {
            std::string c = std::to_string(row["m"][static_cast<std::size_t>(i - 1)].get<std::int64_t>());
            bool used = false;
            if (!row["used"].is_null())
                for (const auto& u : row["used"]) used = used || u.get<int>() == i;
            c += used ? "*" : " ";
            cw = std::max(cw, c.size());
            line.push_back(c);
        }
        cells.push_back(line);
    }
    std::ostringstream os;
    for (std::size_t r = 0; r < cells.size(); ++r) {
        std::string line = std::string(dw - degrees[r].size(), ' ') + degrees[r] + " |";
        for (const auto& c : cells[r]) line += " " + std::string(cw - c.size(), ' ') + c;
        os << line.substr(0, line.find_last_not_of(' ') + 1) << "\n";
    }
    return os.str();
}

inline Outcome cmd_reduce(const std::string& text, const Options& opt) {
    return detail::guarded(
        [&] {
            const auto L = detail::parse_user(text);
            const auto r = reduce_to_standard(L);
            auto j = blank_report(L);
            j["reduction"] = reduction_json(L, r);
            j["trace_len"] = r.trace.size();
            std::ostringstream os;
            os << reduction_table(j["reduction"]);
            if (r.degree_negative)
                os << "degree dropped below 0 after " << r.trace.size() << " steps: empty system\n";
            else
                os << "standard form " << render(r.standard) << " after " << r.trace.size() << " steps\n";
            return Outcome{kOk, opt.json ? dump(j) : os.str(), ""};
        },
        opt.json);
}

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Oracle battery on one configuration: dimension, h0 of the residual,
/// line orders, curve and D_Q8 containment, the isolated point, and the
/// transport cross-check.
inline std::vector<Check> verification_checks(const DivisorClass& L, const oracle::PointConfiguration& cfg) {
    std::vector<Check> out;
    const auto h0 = dimension(L);
    const auto h0o = oracle::h0_interpolation(L, cfg);
    out.push_back({"dimension", h0 == h0o,
                   "formula " + std::to_string(h0) + ", interpolation " + std::to_string(h0o)});
    if (h0 == 0 || h0o == 0) return out;

    const auto bs = base_locus(L);
    const auto& R = bs.residual;
    const auto h0r = oracle::h0_interpolation(R, cfg);
    out.push_back({"residual h0", h0r == h0o,
                   render(R) + " has h0 " + std::to_string(h0r) + " by interpolation"});

    const auto kb = oracle::kernel_basis(R, cfg);
    std::string bad;
    for (int i = 1; i <= kMaxPoints; ++i)
        for (int j = i + 1; j <= kMaxPoints; ++j) {
            std::int64_t expected = 0;
            for (const auto& t : bs.curves)
                if (t.id == MinusOneCurveId{0, i, j}) expected = t.mult;
            const auto got = oracle::line_vanishing_order(kb, cfg, i, j);
            if (got != expected)
                bad += " l_{" + std::to_string(i) + "," + std::to_string(j) + "}: expected " +
                       std::to_string(expected) + " got " + std::to_string(got) + ";";
        }
    out.push_back({"line orders", bad.empty(), bad.empty() ? "all 28 lines match the base locus" : bad});

    std::size_t checked = 0, skipped = 0;
    bad.clear();
    for (const auto& t : bs.curves) {
        if (t.id.a == 0) continue;
        if (t.id.a > 2) {
            ++skipped;
            continue;
        }
        ++checked;
        if (!oracle::curve_membership_check(R, t.id, cfg)) bad += " " + curve_name(t.id);
    }
    if (checked > 0 || skipped > 0) {
        std::string detail = std::to_string(checked) + (checked == 1 ? " curve" : " curves") + " with a in {1,2} checked";
        if (skipped) detail += ", " + std::to_string(skipped) + " with a > 2 not sampled";
        out.push_back({"curve containment", bad.empty(), bad.empty() ? detail : "not contained:" + bad});
    }

    if (bs.dq8_mult > 0) {
        const auto pts = oracle::dq8_sample_points(cfg, 6);
        const bool ok = std::all_of(pts.begin(), pts.end(),
                                    [&](const oracle::Point& p) { return oracle::vanishes_at(kb, p, cfg.field()); });
        out.push_back({"D_Q8 containment", ok, std::to_string(pts.size()) + " sampled points of the quartic"});
    }

    if (bs.point) {
        const auto P = oracle::associated_point(R, cfg);
        const bool ok = oracle::vanishes_at(kb, P, cfg.field());
        std::string detail = "members at the eighth associated point";
        if (!ok && bs.point->mult >= 2) detail += " do not all vanish (for m >= 2 the base point moves off it)";
        out.push_back({"point membership", ok, detail});
    }

    out.push_back({"transport", transport_cross_check(R), "trace-transported curves equal the direct enumeration"});
    return out;
}

inline Outcome cmd_verify(const std::string& text, const Options& opt) {
    return detail::guarded(
        [&] {
            const auto L = detail::parse_user(text);
            const auto cfg = oracle::make_configuration(opt.prime, opt.seed);
            const auto checks = verification_checks(L, cfg);
            auto j = blank_report(L);
            j["h0"] = dimension(L);
            j["oracle"] = {{"prime", opt.prime}, {"seed", opt.seed}};
            j["checks"] = json::array();
            std::ostringstream os;
            os << "verify " << render(L) << " (p = " << opt.prime << ", seed = " << opt.seed << ")\n";
            bool all = true;
            for (const auto& c : checks) {
                all = all && c.pass;
                j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
                os << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
            }
            os << (all ? "all checks passed\n" : "verification FAILED\n");
            return Outcome{all ? kOk : kVerifyFailed, opt.json ? dump(j) : os.str(), ""};
        },
        opt.json);
}

/// Compares the keys present in `expected` against `actual`.
inline std::vector<std::string> fixture_differences(const json& expected, const json& actual) {
    std::vector<std::string> diffs;
    for (const auto& [key, value] : expected.items()) {
        if (!actual.contains(key))
            diffs.push_back(key + ": missing");
        else if (actual[key] != value)
            diffs.push_back(key + ": expected " + value.dump() + " got " + actual[key].dump());
    }
    return diffs;
}

/// One case per line, "INPUT -> EXPECTED_JSON"; blank lines and lines
/// starting with '#' are skipped.
inline Outcome run_fixtures_stream(std::istream& in, const Options& opt) {
    Outcome o;
    std::ostringstream os;
    json results = json::array();
    std::string line;
    std::size_t lineno = 0, total = 0, failed = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        const auto arrow = line.find("->");
        if (arrow == std::string::npos) {
            o.err += "line " + std::to_string(lineno) + ": missing '->'\n";
            o.code = kUsage;
            continue;
        }
        const std::string input = line.substr(0, arrow);
        ++total;
        std::vector<std::string> diffs;
        try {
            const auto expected = json::parse(line.substr(arrow + 2));
            diffs = fixture_differences(expected, system_report(parse_system(input)));
        } catch (const std::exception& e) {
            diffs.push_back(std::string("error: ") + e.what());
        }
        const auto lo = input.find_first_not_of(" \t"), hi = input.find_last_not_of(" \t");
        const std::string trimmed = lo == std::string::npos ? std::string() : input.substr(lo, hi + 1 - lo);
        if (diffs.empty()) {
            os << "ok   " << trimmed << "\n";
        } else {
            ++failed;
            os << "FAIL " << trimmed << " (line " << lineno << ")\n";
            for (const auto& d : diffs) os << "       " << d << "\n";
        }
        results.push_back({{"input", trimmed}, {"pass", diffs.empty()}, {"differences", diffs}});
    }
    os << total - failed << " of " << total << " fixtures passed\n";
    if (failed > 0 && o.code == kOk) o.code = kVerifyFailed;
    o.out = opt.json ? dump(json{{"fixtures", results}, {"passed", total - failed}, {"total", total}}) : os.str();
    return o;
}

inline Outcome run_fixtures(const std::string& path, const Options& opt) {
    std::ifstream in(path);
    if (!in) return Outcome{kUsage, "", "cannot open fixture file " + path + "\n"};
    return run_fixtures_stream(in, opt);
}

}  // namespace bl3::report
