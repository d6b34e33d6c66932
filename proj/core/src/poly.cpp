#include "darboux/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace darboux {

Poly::Poly(std::vector<Scalar> coeffs)
    : backend_(common_backend(coeffs)), coeffs_(std::move(coeffs)) {
    trim();
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().sign() == 0) coeffs_.pop_back();
}

Poly Poly::constant(const Scalar& c) { return Poly(std::vector<Scalar>{c}); }

Poly Poly::monomial(int k, Backend b) {
    std::vector<Scalar> c(k + 1, Scalar::zero(b));
    c.back() = Scalar::one(b);
    return Poly(std::move(c));
}

Poly Poly::linear(const Scalar& c0, const Scalar& c1) {
    return Poly(std::vector<Scalar>{c0, c1});
}

Scalar Poly::coeff(int k) const {
    if (k < 0 || k > degree()) return Scalar::zero(backend_);
    return coeffs_[k];
}

Scalar Poly::leading() const {
    if (is_zero()) return Scalar::zero(backend_);
    return coeffs_.back();
}

bool Poly::is_monic() const {
    return !is_zero() && leading() == Scalar::one(backend_);
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    if (backend_ != o.backend_) throw std::logic_error("poly backend mismatch");
    std::vector<Scalar> c(std::max(coeffs_.size(), o.coeffs_.size()),
                          Scalar::zero(backend_));
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
    Poly r(backend_);
    r.coeffs_ = std::move(c);
    r.trim();
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (backend_ != o.backend_) throw std::logic_error("poly backend mismatch");
    if (is_zero() || o.is_zero()) return Poly(backend_);
    std::vector<Scalar> c(coeffs_.size() + o.coeffs_.size() - 1,
                          Scalar::zero(backend_));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            c[i + j] += coeffs_[i] * o.coeffs_[j];
    Poly r(backend_);
    r.coeffs_ = std::move(c);
    r.trim();
    return r;
}

Poly Poly::scaled(const Scalar& c) const {
    Poly r = *this;
    for (auto& x : r.coeffs_) x *= c;
    r.trim();
    return r;
}

bool Poly::operator==(const Poly& o) const {
    if (backend_ != o.backend_ || coeffs_.size() != o.coeffs_.size())
        return false;
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != o.coeffs_[i]) return false;
    return true;
}

Scalar Poly::eval(const Scalar& x) const {
    Scalar acc = Scalar::zero(backend_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

std::complex<double> Poly::eval(const std::complex<double>& x) const {
    std::complex<double> acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + it->to_double();
    return acc;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
    if (backend_ != Backend::Exact || d.backend_ != Backend::Exact)
        throw std::logic_error("divmod requires the exact backend");
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    Poly q(backend_), r = *this;
    std::vector<Scalar> qc(r.degree() >= d.degree()
                               ? r.degree() - d.degree() + 1
                               : 0,
                           Scalar::zero(backend_));
    while (!r.is_zero() && r.degree() >= d.degree()) {
        int k = r.degree() - d.degree();
        Scalar f = r.leading() / d.leading();
        qc[k] = f;
        // r -= f * lambda^k * d
        std::vector<Scalar> sub(k + d.coeffs_.size(), Scalar::zero(backend_));
        for (size_t i = 0; i < d.coeffs_.size(); ++i) sub[k + i] = f * d.coeffs_[i];
        r = r - Poly(std::move(sub));
    }
    q.coeffs_ = std::move(qc);
    q.trim();
    return {q, r};
}

Poly Poly::gcd(Poly a, Poly b) {
    if (a.backend() != Backend::Exact || b.backend() != Backend::Exact)
        throw std::logic_error("gcd requires the exact backend");
    while (!b.is_zero()) {
        Poly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.scaled(Scalar::one(Backend::Exact) / a.leading());
}

Poly Poly::to_float() const {
    std::vector<Scalar> c;
    c.reserve(coeffs_.size());
    for (const auto& x : coeffs_) c.push_back(x.to_float());
    Poly r(Backend::Float);
    r.coeffs_ = std::move(c);
    r.trim();
    return r;
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        Scalar c = coeff(k);
        if (c.sign() == 0) continue;
        if (!first) os << (c.sign() > 0 ? " + " : " - ");
        else if (c.sign() < 0) os << "-";
        Scalar a = c.abs();
        bool unit = a == Scalar::one(backend_);
        if (k == 0 || !unit) os << a.str();
        if (k > 0) {
            if (!unit) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

}  // namespace darboux
