#pragma once

#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

#include "sloped_width/detail/parse.hpp"

namespace sloped_width {

/**
 * Boundary slope on the distinguished torus.
 *
 * A slope is either a reduced fraction r/s with s >= 1 (sign on the
 * numerator), the meridian (infinity), or the closed symbol meaning
 * "no slope at all": every decomposing surface is closed.
 */
class Slope {
public:
    enum class Kind { Rational, Meridian, Closed };

    Slope() = default;  // closed

    static Slope rational(long long r, long long s) {
        if (s == 0) throw std::invalid_argument("Slope: zero denominator; use meridian()");
        if (s < 0) {
            r = -r;
            s = -s;
        }
        long long g = std::gcd(r < 0 ? -r : r, s);
        if (g > 1) {
            r /= g;
            s /= g;
        }
        Slope out;
        out.kind_ = Kind::Rational;
        out.num_ = r;
        out.den_ = s;
        return out;
    }

    static Slope meridian() {
        Slope out;
        out.kind_ = Kind::Meridian;
        return out;
    }

    static Slope closed() { return Slope{}; }

    Kind kind() const { return kind_; }
    bool is_rational() const { return kind_ == Kind::Rational; }
    bool is_meridian() const { return kind_ == Kind::Meridian; }
    bool is_closed() const { return kind_ == Kind::Closed; }

    long long numerator() const {
        require_rational();
        return num_;
    }
    long long denominator() const {
        require_rational();
        return den_;
    }

    std::string to_string() const {
        switch (kind_) {
            case Kind::Meridian: return "inf";
            case Kind::Closed: return "closed";
            case Kind::Rational: break;
        }
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend bool operator==(const Slope&, const Slope&) = default;

private:
    void require_rational() const {
        if (kind_ != Kind::Rational)
            throw std::domain_error("Slope: not a rational slope");
    }

    Kind kind_ = Kind::Closed;
    long long num_ = 0;
    long long den_ = 1;
};

/// Parses `r/s`, a bare integer `n` (meaning n/1), `inf`, or `closed`.
/// `r/0` is accepted only for r = +-1 and yields the meridian.
inline Slope parse_slope(std::string_view text) {
    if (text == "inf") return Slope::meridian();
    if (text == "closed") return Slope::closed();
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Slope::rational(detail::parse_integer(text, "slope"), 1);
    long long r = detail::parse_integer(text.substr(0, slash), "slope numerator");
    long long s = detail::parse_integer(text.substr(slash + 1), "slope denominator");
    if (s == 0) {
        if (r == 1 || r == -1) return Slope::meridian();
        throw std::invalid_argument("zero denominator: only 1/0 or -1/0 denote the meridian");
    }
    return Slope::rational(r, s);
}

/// True when (p, q) describes a nontrivial torus knot.
inline bool is_torus_knot_pair(long long p, long long q) {
    long long ap = p < 0 ? -p : p;
    long long aq = q < 0 ? -q : q;
    return ap >= 2 && aq >= 2 && std::gcd(ap, aq) == 1;
}

/// The surgery-slope invariant |p*q*r + s| of the (p,q) torus knot at
/// slope r/s. Undefined for the meridian and closed symbols.
inline long long torus_knot_delta(long long p, long long q, const Slope& slope) {
    if (!is_torus_knot_pair(p, q))
        throw std::invalid_argument("(p,q) is not a nontrivial torus-knot pair");
    if (!slope.is_rational())
        throw std::domain_error("delta is defined for rational slopes only");
    long long value = p * q * slope.numerator() + slope.denominator();
    return value < 0 ? -value : value;
}

}  // namespace sloped_width
