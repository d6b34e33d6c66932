#ifndef DARBOUX_SCALAR_HPP
#define DARBOUX_SCALAR_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "darboux/config.hpp"

namespace darboux {

enum class Backend { Exact, Float };

/// One real number behind one of two backends: an arbitrary-precision
/// rational (GMP) or a double. Structure-building code runs on the exact
/// backend; spectral code runs on the float backend. Mixing backends in one
/// arithmetic expression is a programming error and throws.
class Scalar {
public:
    Scalar() : backend_(Backend::Exact), q_(0), d_(0.0) {}

    static Scalar exact(long num, long den = 1);
    static Scalar exact(mpq_class q);
    static Scalar flt(double x) {
        Scalar s;
        s.backend_ = Backend::Float;
        s.d_ = x;
        return s;
    }
    static Scalar zero(Backend b) { return from_int(0, b); }
    static Scalar one(Backend b) { return from_int(1, b); }
    static Scalar from_int(long n, Backend b);

    // Accepts "p/q", plain integers, and finite decimals ("-0.25"); decimals
    // are converted exactly for the exact backend.
    static Scalar parse(const std::string& text, Backend b = Backend::Exact);

    Backend backend() const { return backend_; }
    bool is_exact() const { return backend_ == Backend::Exact; }

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;  // caller guards zero divisors
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    bool operator<(const Scalar& o) const;
    bool operator<=(const Scalar& o) const { return *this < o || *this == o; }
    bool operator>(const Scalar& o) const { return o < *this; }
    bool operator>=(const Scalar& o) const { return o <= *this; }

    /// Raw sign, no tolerance.
    int sign() const;
    /// Exact: q == 0. Float: |x| <= tau_zero * max(1, |scale_hint|).
    bool is_zero(double scale_hint = 1.0) const;
    Scalar abs() const;

    double to_double() const;
    const mpq_class& rational() const;  // throws std::logic_error on Float

    /// Square root. Exact backend returns an exact result only when the value
    /// is a perfect square of a rational, otherwise falls back to Float.
    /// Negative input has no real root and returns nullopt.
    std::optional<Scalar> sqrt() const;
    bool is_perfect_square() const;

    /// "p/q" (or "p") for exact values, round-trippable decimal for floats.
    std::string str() const;

    Scalar to_float() const { return flt(to_double()); }

private:
    void require_same(const Scalar& o) const;

    Backend backend_;
    mpq_class q_;
    double d_;
};

Scalar operator*(long n, const Scalar& s);

/// Throws std::logic_error unless every element shares one backend; returns
/// that backend (or `fallback` for an empty range).
Backend common_backend(const std::vector<Scalar>& xs,
                       Backend fallback = Backend::Exact);

}  // namespace darboux

#endif
