#pragma once

// Text form of divisor classes: "L3(d; m1^r1, m2^r2, ...)".

#include <cctype>
#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bl3/lattice.hpp"

namespace bl3 {

class parse_error : public std::invalid_argument {
public:
    parse_error(const std::string& msg, std::string input, std::size_t pos)
        : std::invalid_argument(msg), input_(std::move(input)), pos_(pos) {}

    std::size_t position() const { return pos_; }
    const std::string& input() const { return input_; }

    /// The message, the input, and a caret under the offending character.
    std::string pretty() const {
        return std::string("parse error: ") + what() + "\n  " + input_ + "\n  " + std::string(pos_, ' ') + "^";
    }

private:
    std::string input_;
    std::size_t pos_;
};

namespace detail {

class NotationParser {
public:
    explicit NotationParser(std::string_view s) : s_(s) {}

    DivisorClass parse() {
        skip_ws();
        expect_word("L3");
        skip_ws();
        expect('(');
        const auto d = integer(false);
        std::vector<std::int64_t> mults;
        skip_ws();
        if (peek() == ';') {
            ++i_;
            for (;;) {
                const std::size_t start = (skip_ws(), i_);
                const auto m = integer(true);
                std::int64_t r = 1;
                skip_ws();
                if (peek() == '^') {
                    ++i_;
                    const std::size_t at = (skip_ws(), i_);
                    r = integer(false);
                    if (r < 1) fail("exponent must be positive", at);
                }
                if (r > kMaxPoints - static_cast<std::int64_t>(mults.size()))
                    fail("too many points (at most 8)", start);
                mults.insert(mults.end(), static_cast<std::size_t>(r), m);
                skip_ws();
                if (peek() == ',') {
                    ++i_;
                    continue;
                }
                break;
            }
        }
        skip_ws();
        expect(')');
        skip_ws();
        if (i_ != s_.size()) fail("unexpected trailing input", i_);
        return make_divisor(d, mults);
    }

private:
    char peek() const { return i_ < s_.size() ? s_[i_] : '\0'; }

    void skip_ws() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }

    [[noreturn]] void fail(const std::string& msg, std::size_t at) const { throw parse_error(msg, std::string(s_), at); }

    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'", i_);
        ++i_;
    }

    void expect_word(std::string_view w) {
        if (s_.substr(i_, w.size()) != w) fail("expected \"L3(\"", i_);
        i_ += w.size();
    }

    std::int64_t integer(bool allow_sign) {
        skip_ws();
        const std::size_t start = i_;
        std::size_t end = i_;
        if (allow_sign && peek() == '-') ++end;
        while (end < s_.size() && std::isdigit(static_cast<unsigned char>(s_[end]))) ++end;
        std::int64_t v = 0;
        const auto [ptr, ec] = std::from_chars(s_.data() + start, s_.data() + end, v);
        if (ec == std::errc::result_out_of_range) fail("integer out of range", start);
        if (ec != std::errc{} || ptr != s_.data() + end) fail("expected an integer", start);
        i_ = end;
        return v;
    }

    std::string_view s_;
    std::size_t i_ = 0;
};

}  // namespace detail

inline DivisorClass parse_system(std::string_view text) { return detail::NotationParser{text}.parse(); }

/// Trailing zeros are dropped unless a zero also sits between nonzero
/// entries, in which case all eight slots are shown so positions survive
/// ("L3(2;2,1^4,0,1,0)"). Runs of equal values use exponents.
inline std::string render(const DivisorClass& L) {
    int last = 0;
    bool inner_zero = false;
    for (int i = 1; i <= kMaxPoints; ++i)
        if (L.mult(i) != 0) last = i;
    for (int i = 1; i < last; ++i)
        if (L.mult(i) == 0) inner_zero = true;
    const int n = inner_zero ? kMaxPoints : last;

    std::string out = "L3(" + std::to_string(L.degree());
    for (int i = 1; i <= n;) {
        int j = i;
        while (j + 1 <= n && L.mult(j + 1) == L.mult(i)) ++j;
        out += i == 1 ? ";" : ",";
        out += std::to_string(L.mult(i));
        if (j > i) out += "^" + std::to_string(j - i + 1);
        i = j + 1;
    }
    return out + ")";
}

}  // namespace bl3
