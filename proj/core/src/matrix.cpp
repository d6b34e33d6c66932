#include "darboux/matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace darboux {

ScalarMatrix::ScalarMatrix(int rows, int cols, Backend b)
    : rows_(rows), cols_(cols), backend_(b),
      a_(static_cast<size_t>(rows) * cols, Scalar::zero(b)) {}

ScalarMatrix ScalarMatrix::identity(int n, Backend b) {
    ScalarMatrix m(n, n, b);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(b);
    return m;
}

ScalarMatrix ScalarMatrix::operator+(const ScalarMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::logic_error("matrix shape mismatch in +");
    ScalarMatrix r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
}

ScalarMatrix ScalarMatrix::operator-(const ScalarMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::logic_error("matrix shape mismatch in -");
    ScalarMatrix r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
}

ScalarMatrix ScalarMatrix::operator*(const ScalarMatrix& o) const {
    if (cols_ != o.rows_) throw std::logic_error("matrix shape mismatch in *");
    ScalarMatrix r(rows_, o.cols_, backend_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Scalar& x = at(i, k);
            if (x.sign() == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += x * o.at(k, j);
        }
    return r;
}

ScalarMatrix ScalarMatrix::transpose() const {
    ScalarMatrix r(cols_, rows_, backend_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool ScalarMatrix::operator==(const ScalarMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t i = 0; i < a_.size(); ++i)
        if (a_[i] != o.a_[i]) return false;
    return true;
}

std::vector<Scalar> ScalarMatrix::apply(const std::vector<Scalar>& v) const {
    if (static_cast<int>(v.size()) != cols_)
        throw std::logic_error("matrix-vector shape mismatch");
    std::vector<Scalar> r(rows_, Scalar::zero(backend_));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
    return r;
}

std::vector<Scalar> ScalarMatrix::apply_transposed(
    const std::vector<Scalar>& v) const {
    if (static_cast<int>(v.size()) != rows_)
        throw std::logic_error("matrix-vector shape mismatch");
    std::vector<Scalar> r(cols_, Scalar::zero(backend_));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r[j] += at(i, j) * v[i];
    return r;
}

Scalar ScalarMatrix::det() const {
    if (rows_ != cols_) throw std::logic_error("determinant of non-square matrix");
    const int n = rows_;
    if (n == 0) return Scalar::one(backend_);
    ScalarMatrix m = *this;
    Scalar d = Scalar::one(backend_);
    for (int k = 0; k < n; ++k) {
        int pivot = -1;
        if (backend_ == Backend::Exact) {
            for (int i = k; i < n; ++i)
                if (m.at(i, k).sign() != 0) { pivot = i; break; }
        } else {
            double best = 0.0;
            for (int i = k; i < n; ++i) {
                double v = std::abs(m.at(i, k).to_double());
                if (v > best) { best = v; pivot = i; }
            }
        }
        if (pivot < 0 || m.at(pivot, k).sign() == 0) return Scalar::zero(backend_);
        if (pivot != k) {
            for (int j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(k, j));
            d = -d;
        }
        d *= m.at(k, k);
        for (int i = k + 1; i < n; ++i) {
            if (m.at(i, k).sign() == 0) continue;
            Scalar f = m.at(i, k) / m.at(k, k);
            for (int j = k; j < n; ++j) m.at(i, j) -= f * m.at(k, j);
        }
    }
    return d;
}

double ScalarMatrix::hadamard_bound() const {
    double bound = 1.0;
    for (int i = 0; i < rows_; ++i) {
        double row = 0.0;
        for (int j = 0; j < cols_; ++j) {
            double v = at(i, j).to_double();
            row += v * v;
        }
        bound *= std::sqrt(row);
    }
    return bound;
}

Poly ScalarMatrix::charpoly() const {
    if (rows_ != cols_) throw std::logic_error("charpoly of non-square matrix");
    if (backend_ != Backend::Exact)
        throw std::logic_error("charpoly requires the exact backend");
    const int n = rows_;
    if (n == 0) return Poly::constant(Scalar::exact(1));
    // Evaluate det(x - A) at x = 0..n, then Newton-interpolate.
    std::vector<Scalar> xs, ys;
    for (int t = 0; t <= n; ++t) {
        Scalar x = Scalar::exact(t);
        ScalarMatrix m = ScalarMatrix::identity(n, backend_);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                m.at(i, j) = (i == j ? x : Scalar::exact(0)) - at(i, j);
        xs.push_back(x);
        ys.push_back(m.det());
    }
    // Divided differences in place.
    std::vector<Scalar> dd = ys;
    for (int level = 1; level <= n; ++level)
        for (int i = n; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
    // Expand the Newton form.
    Poly p = Poly::constant(dd[n]);
    for (int i = n - 1; i >= 0; --i)
        p = p * Poly::linear(-xs[i], Scalar::exact(1)) + Poly::constant(dd[i]);
    return p;
}

ScalarMatrix ScalarMatrix::to_float() const {
    ScalarMatrix r(rows_, cols_, Backend::Float);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i].to_float();
    return r;
}

double ScalarMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& x : a_) m = std::max(m, std::abs(x.to_double()));
    return m;
}

bool ScalarMatrix::approx_equal(const ScalarMatrix& o, double tol) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    double scale = std::max({1.0, max_abs(), o.max_abs()});
    for (size_t i = 0; i < a_.size(); ++i)
        if (std::abs(a_[i].to_double() - o.a_[i].to_double()) > tol * scale)
            return false;
    return true;
}

}  // namespace darboux
