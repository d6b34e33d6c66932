#include "darboux/jacobi.hpp"

#include <stdexcept>

#include "darboux/errors.hpp"

namespace darboux {

MonicJacobi::MonicJacobi(std::vector<Scalar> b, std::vector<Scalar> c)
    : b_(std::move(b)), c_(std::move(c)) {
    if (b_.empty() || c_.size() + 1 != b_.size())
        throw std::invalid_argument("jacobi matrix needs len(c) = len(b) - 1 >= 0");
    Backend bk = common_backend(b_);
    if (!c_.empty() && common_backend(c_) != bk)
        throw std::logic_error("jacobi diagonal/subdiagonal backend mismatch");
    for (size_t j = 0; j < c_.size(); ++j)
        if (c_[j].sign() <= 0)
            throw NonPositiveC("c_" + std::to_string(j) + " = " + c_[j].str() +
                                   " is not positive",
                               static_cast<long>(j));
}

Backend MonicJacobi::backend() const { return b_.front().backend(); }

ScalarMatrix MonicJacobi::truncation(int n) const {
    if (n < 0 || n > rows())
        throw InsufficientDepth("jacobi truncation of size " + std::to_string(n) +
                                " from " + std::to_string(rows()) + " rows");
    ScalarMatrix m(n, n, backend());
    for (int i = 0; i < n; ++i) {
        m.at(i, i) = b_[i];
        if (i + 1 < n) {
            m.at(i, i + 1) = Scalar::one(backend());
            m.at(i + 1, i) = c_[i];
        }
    }
    return m;
}

MonicJacobi MonicJacobi::to_float() const {
    std::vector<Scalar> b, c;
    for (const auto& x : b_) b.push_back(x.to_float());
    for (const auto& x : c_) c.push_back(x.to_float());
    return MonicJacobi(std::move(b), std::move(c));
}

bool MonicJacobi::operator==(const MonicJacobi& o) const {
    return b_ == o.b_ && c_ == o.c_;
}

MonicJacobi MonicJacobi::two_periodic(int rows) {
    std::vector<Scalar> b, c;
    for (int j = 0; j < rows; ++j) b.push_back(Scalar::exact(1 - j % 2));
    for (int j = 0; j + 1 < rows; ++j) c.push_back(Scalar::exact(1));
    return MonicJacobi(std::move(b), std::move(c));
}

MonicJacobi MonicJacobi::chebyshev_u(int rows) {
    std::vector<Scalar> b(rows, Scalar::exact(0));
    std::vector<Scalar> c(rows > 0 ? rows - 1 : 0, Scalar::exact(1, 4));
    return MonicJacobi(std::move(b), std::move(c));
}

}  // namespace darboux
