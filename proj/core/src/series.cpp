#include "darboux/series.hpp"

#include <stdexcept>

#include "darboux/errors.hpp"

namespace darboux {

Scalar Series::coeff(int i) const {
    if (i < 0 || i >= order())
        throw std::out_of_range("series coefficient beyond guaranteed order");
    return coeffs_[i];
}

Series Series::operator-() const {
    Series r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Series Series::operator+(const Series& o) const {
    if (backend_ != o.backend_) throw std::logic_error("series backend mismatch");
    size_t n = std::min(coeffs_.size(), o.coeffs_.size());
    std::vector<Scalar> c(coeffs_.begin(), coeffs_.begin() + n);
    for (size_t i = 0; i < n; ++i) c[i] += o.coeffs_[i];
    Series r(backend_);
    r.coeffs_ = std::move(c);
    return r;
}

Series Series::operator-(const Series& o) const { return *this + (-o); }

Series Series::operator*(const Series& o) const {
    if (backend_ != o.backend_) throw std::logic_error("series backend mismatch");
    // (sum c_i z^{i+1})(sum d_j z^{j+1}) has z^{t+1} coefficient
    // sum_{i+j=t-1} c_i d_j; terms beyond min(order) would need unknown
    // coefficients, so the product is guaranteed through t = min + 1 terms.
    int n = std::min(order(), o.order()) + 1;
    std::vector<Scalar> c(n, Scalar::zero(backend_));
    for (int i = 0; i < order(); ++i)
        for (int j = 0; j < o.order(); ++j) {
            int t = i + j + 1;
            if (t < n) c[t] += coeffs_[i] * o.coeffs_[j];
        }
    Series r(backend_);
    r.coeffs_ = std::move(c);
    return r;
}

Series Series::scaled(const Scalar& c) const {
    Series r = *this;
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

Series Series::truncated(int order) const {
    if (order >= this->order()) return *this;
    Series r(backend_);
    r.coeffs_.assign(coeffs_.begin(), coeffs_.begin() + order);
    return r;
}

int Series::first_nonzero() const {
    for (int i = 0; i < order(); ++i)
        if (coeffs_[i].sign() != 0) return i;
    return -1;
}

Series Series::to_float() const {
    std::vector<Scalar> c;
    c.reserve(coeffs_.size());
    for (const auto& x : coeffs_) c.push_back(x.to_float());
    Series r(Backend::Float);
    r.coeffs_ = std::move(c);
    return r;
}

LaurentParts series_reciprocal(const Series& f) {
    const Backend bk = f.backend();
    const int m = f.order();
    const int t = f.first_nonzero();
    if (t < 0)
        throw AllZeroPrefix("no nonzero series coefficient within order " +
                            std::to_string(m));
    // f = z^{t+1} h(z), h_0 != 0, with h known through degree m-1-t.
    const int hn = m - t;
    std::vector<Scalar> h(hn), g(hn);
    for (int i = 0; i < hn; ++i) h[i] = f.coeff(t + i);
    g[0] = Scalar::one(bk) / h[0];
    for (int k = 1; k < hn; ++k) {
        Scalar acc = Scalar::zero(bk);
        for (int i = 1; i <= k; ++i) acc += h[i] * g[k - i];
        g[k] = -acc / h[0];
    }
    // -1/f = -z^{-(t+1)} (g_0 + g_1 z + ...): powers lambda^{t+1} .. lambda^0
    // form the polynomial part, the rest is the tail.
    if (hn - 1 < t + 1)
        throw InsufficientMoments(
            "series order too small to complete the polynomial part of -1/f");
    std::vector<Scalar> pc(t + 2, Scalar::zero(bk));
    for (int k = 0; k <= t + 1; ++k) pc[t + 1 - k] = -g[k];
    std::vector<Scalar> tail;
    for (int k = t + 2; k < hn; ++k) tail.push_back(-g[k]);
    Series tail_series(bk);
    if (!tail.empty()) tail_series = Series(std::move(tail));
    return LaurentParts{Poly(std::move(pc)), std::move(tail_series)};
}

Series rational_series(const Poly& num, const Poly& den, int order,
                       Poly* poly_part) {
    if (den.is_zero()) throw ZeroDenominator("rational expansion of x/0");
    const Backend bk = den.backend();
    Poly n = num;
    if (poly_part) *poly_part = Poly(bk);
    if (!n.is_zero() && n.degree() >= den.degree()) {
        auto [q, r] = n.divmod(den);
        if (poly_part) *poly_part = q;
        n = r;
    }
    const int d = den.degree();
    std::vector<Scalar> a(order, Scalar::zero(bk));
    for (int k = 0; k < order; ++k) {
        Scalar acc = n.coeff(d - 1 - k);
        for (int m = 0; m < k; ++m) acc -= den.coeff(d - k + m) * a[m];
        a[k] = acc / den.coeff(d);
    }
    return Series(std::move(a));
}

}  // namespace darboux
