#include "darboux/scalar.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace darboux {

namespace config {

namespace {
std::atomic<double> g_tau_zero{1e-10};
}

double tau_zero() { return g_tau_zero.load(std::memory_order_relaxed); }

void set_tau_zero(double tau) {
    if (!(tau > 0.0)) throw std::invalid_argument("tau_zero must be positive");
    g_tau_zero.store(tau, std::memory_order_relaxed);
}

}  // namespace config

Scalar Scalar::exact(long num, long den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    Scalar s;
    s.q_ = mpq_class(num, den);
    s.q_.canonicalize();
    return s;
}

Scalar Scalar::exact(mpq_class q) {
    Scalar s;
    q.canonicalize();
    s.q_ = std::move(q);
    return s;
}

Scalar Scalar::from_int(long n, Backend b) {
    return b == Backend::Exact ? exact(n) : flt(static_cast<double>(n));
}

namespace {

mpq_class parse_exact_text(const std::string& text) {
    std::string t = text;
    if (!t.empty() && t.front() == '+') t.erase(t.begin());
    // always base 10: the auto-detecting constructor reads "025" as octal
    if (auto slash = t.find('/'); slash != std::string::npos) {
        mpz_class num(t.substr(0, slash), 10), den(t.substr(slash + 1), 10);
        if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
        mpq_class q(num, den);
        q.canonicalize();
        return q;
    }
    if (auto dot = t.find('.'); dot != std::string::npos) {
        std::string digits = t.substr(0, dot) + t.substr(dot + 1);
        size_t frac_len = t.size() - dot - 1;
        mpz_class num(digits.empty() || digits == "-" ? std::string("0") : digits,
                      10);
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
        mpq_class q(num, den);
        q.canonicalize();
        return q;
    }
    return mpq_class(mpz_class(t, 10));
}

}  // namespace

Scalar Scalar::parse(const std::string& text, Backend b) {
    if (b == Backend::Exact) return exact(parse_exact_text(text));
    return flt(std::strtod(text.c_str(), nullptr));
}

void Scalar::require_same(const Scalar& o) const {
    if (backend_ != o.backend_)
        throw std::logic_error("scalar backend mismatch in arithmetic");
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    if (is_exact())
        s.q_ = -q_;
    else
        s.d_ = -d_;
    return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
    require_same(o);
    Scalar s = *this;
    if (is_exact())
        s.q_ += o.q_;
    else
        s.d_ += o.d_;
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
    require_same(o);
    Scalar s = *this;
    if (is_exact())
        s.q_ -= o.q_;
    else
        s.d_ -= o.d_;
    return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
    require_same(o);
    Scalar s = *this;
    if (is_exact())
        s.q_ *= o.q_;
    else
        s.d_ *= o.d_;
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const {
    require_same(o);
    Scalar s = *this;
    if (is_exact()) {
        if (o.q_ == 0) throw std::domain_error("exact division by zero");
        s.q_ /= o.q_;
    } else {
        s.d_ /= o.d_;
    }
    return s;
}

bool Scalar::operator==(const Scalar& o) const {
    require_same(o);
    return is_exact() ? q_ == o.q_ : d_ == o.d_;
}

bool Scalar::operator<(const Scalar& o) const {
    require_same(o);
    return is_exact() ? q_ < o.q_ : d_ < o.d_;
}

int Scalar::sign() const {
    if (is_exact()) return sgn(q_);
    return d_ > 0.0 ? 1 : (d_ < 0.0 ? -1 : 0);
}

bool Scalar::is_zero(double scale_hint) const {
    if (is_exact()) return q_ == 0;
    double ref = std::abs(scale_hint);
    if (ref < 1.0) ref = 1.0;
    return std::abs(d_) <= config::tau_zero() * ref;
}

Scalar Scalar::abs() const { return sign() < 0 ? -*this : *this; }

double Scalar::to_double() const { return is_exact() ? q_.get_d() : d_; }

const mpq_class& Scalar::rational() const {
    if (!is_exact()) throw std::logic_error("float scalar has no exact value");
    return q_;
}

bool Scalar::is_perfect_square() const {
    if (!is_exact()) return false;
    if (sgn(q_) < 0) return false;
    return mpz_perfect_square_p(q_.get_num().get_mpz_t()) &&
           mpz_perfect_square_p(q_.get_den().get_mpz_t());
}

std::optional<Scalar> Scalar::sqrt() const {
    if (sign() < 0) return std::nullopt;
    if (is_exact() && is_perfect_square()) {
        mpz_class num, den;
        mpz_sqrt(num.get_mpz_t(), q_.get_num().get_mpz_t());
        mpz_sqrt(den.get_mpz_t(), q_.get_den().get_mpz_t());
        return exact(mpq_class(num, den));
    }
    return flt(std::sqrt(to_double()));
}

std::string Scalar::str() const {
    if (is_exact()) {
        if (q_.get_den() == 1) return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof(buf), d_);
    return std::string(buf, res.ptr);
}

Scalar operator*(long n, const Scalar& s) {
    return Scalar::from_int(n, s.backend()) * s;
}

Backend common_backend(const std::vector<Scalar>& xs, Backend fallback) {
    if (xs.empty()) return fallback;
    Backend b = xs.front().backend();
    for (const auto& x : xs)
        if (x.backend() != b)
            throw std::logic_error("mixed scalar backends in container");
    return b;
}

}  // namespace darboux
