#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>

#include "zag/rational.hpp"

namespace zag {

/// One index exponent. Remembers whether it was given as an exact integer,
/// which decides between the rational and the floating-point evaluation path.
class Exponent {
public:
    constexpr Exponent() : int_value_(0), real_value_(0.0), integral_(true) {}
    constexpr Exponent(int v) : int_value_(v), real_value_(static_cast<double>(v)), integral_(true) {}
    constexpr Exponent(std::int64_t v)
        : int_value_(v), real_value_(static_cast<double>(v)), integral_(true) {}
    constexpr Exponent(double v) : int_value_(0), real_value_(v), integral_(false) {}

    constexpr bool is_integer() const { return integral_; }

    constexpr std::int64_t as_integer() const { return int_value_; }

    constexpr double as_real() const { return real_value_; }

    constexpr bool is(std::int64_t v) const {
        return integral_ ? int_value_ == v : real_value_ == static_cast<double>(v);
    }

    friend constexpr Exponent operator+(const Exponent& x, const Exponent& y) {
        if (x.integral_ && y.integral_) {
            return Exponent(x.int_value_ + y.int_value_);
        }
        return Exponent(x.real_value_ + y.real_value_);
    }

    friend constexpr Exponent operator-(const Exponent& x, const Exponent& y) {
        if (x.integral_ && y.integral_) {
            return Exponent(x.int_value_ - y.int_value_);
        }
        return Exponent(x.real_value_ - y.real_value_);
    }

    friend constexpr Exponent operator*(std::int64_t k, const Exponent& x) {
        if (x.integral_) {
            return Exponent(k * x.int_value_);
        }
        return Exponent(static_cast<double>(k) * x.real_value_);
    }

    std::string str() const;

private:
    std::int64_t int_value_;
    double real_value_;
    bool integral_;
};

/// The (a, b) pair of the general Zagreb index.
struct Exponents {
    Exponent a;
    Exponent b;

    Exponents swapped() const { return Exponents{b, a}; }
};

inline std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return std::string(buf);
}

inline std::string Exponent::str() const {
    return integral_ ? std::to_string(int_value_) : format_double(real_value_);
}

/// Numeric result of an index evaluation: exact rational when every exponent
/// involved was an integer, double otherwise.
class IndexValue {
public:
    IndexValue() : exact_(0), approx_(0.0), is_exact_(true) {}

    static IndexValue exact(Rational r) {
        IndexValue v;
        v.exact_ = std::move(r);
        v.is_exact_ = true;
        return v;
    }

    static IndexValue approximate(double d) {
        IndexValue v;
        v.approx_ = d;
        v.is_exact_ = false;
        return v;
    }

    bool is_exact() const { return is_exact_; }

    const Rational& exact_value() const {
        if (!is_exact_) {
            throw std::logic_error("IndexValue: approximate value has no exact form");
        }
        return exact_;
    }

    double as_double() const {
        return is_exact_ ? static_cast<double>(exact_) : approx_;
    }

    IndexValue& operator+=(const IndexValue& other) {
        if (is_exact_ && other.is_exact_) {
            exact_ += other.exact_;
        } else {
            approx_ = as_double() + other.as_double();
            is_exact_ = false;
        }
        return *this;
    }

    friend IndexValue operator+(IndexValue x, const IndexValue& y) {
        x += y;
        return x;
    }

    friend IndexValue operator*(const IndexValue& x, const IndexValue& y) {
        if (x.is_exact_ && y.is_exact_) {
            return IndexValue::exact(x.exact_ * y.exact_);
        }
        return IndexValue::approximate(x.as_double() * y.as_double());
    }

    friend IndexValue operator*(std::int64_t k, const IndexValue& x) {
        if (x.is_exact_) {
            return IndexValue::exact(Rational(k) * x.exact_);
        }
        return IndexValue::approximate(static_cast<double>(k) * x.approx_);
    }

    friend IndexValue operator*(const Rational& k, const IndexValue& x) {
        if (x.is_exact_) {
            return IndexValue::exact(k * x.exact_);
        }
        return IndexValue::approximate(static_cast<double>(k) * x.approx_);
    }

    /// "p/q" (bare integer when q = 1) for exact values, %.17g otherwise.
    std::string str() const {
        return is_exact_ ? format_rational(exact_) : format_double(approx_);
    }

private:
    Rational exact_;
    double approx_;
    bool is_exact_;
};

/// True only when both values are exact and equal as rationals.
inline bool exactly_equal(const IndexValue& x, const IndexValue& y) {
    return x.is_exact() && y.is_exact() && x.exact_value() == y.exact_value();
}

/// |x - y| / max(|x|, |y|), taken as 0 when both are zero.
inline double relative_difference(const IndexValue& x, const IndexValue& y) {
    const double xv = x.as_double();
    const double yv = y.as_double();
    const double scale = std::max(std::fabs(xv), std::fabs(yv));
    if (scale == 0.0) {
        return 0.0;
    }
    return std::fabs(xv - yv) / scale;
}

/// d^e for a vertex degree d >= 1. Exact (even for negative e) when the
/// exponent is an integer, floating point otherwise.
inline IndexValue pow_degree(std::int64_t d, const Exponent& e) {
    if (d < 1) {
        throw std::invalid_argument("pow_degree: degree must be >= 1");
    }
    if (e.is_integer()) {
        return IndexValue::exact(rational_pow(Rational(d), e.as_integer()));
    }
    return IndexValue::approximate(std::pow(static_cast<double>(d), e.as_real()));
}

/// Contribution of a single edge with end degrees (d1, d2):
/// d1^a d2^b + d1^b d2^a.
inline IndexValue pair_weight(std::int64_t d1, std::int64_t d2, const Exponents& e) {
    return pow_degree(d1, e.a) * pow_degree(d2, e.b) + pow_degree(d1, e.b) * pow_degree(d2, e.a);
}

}  // namespace zag
