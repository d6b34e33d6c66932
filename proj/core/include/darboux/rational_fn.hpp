#ifndef DARBOUX_RATIONAL_FN_HPP
#define DARBOUX_RATIONAL_FN_HPP

#include <complex>

#include "darboux/poly.hpp"

namespace darboux {

enum class PadeKind { Diagonal, Modified, DPlus };

/// Ratio of two polynomials; Pade approximants and m-functions are carried
/// around in this form. `j` and `nj` record which approximant this is.
struct RationalFn {
    Poly num, den;
    int j = 0;
    int nj = 0;
    PadeKind kind = PadeKind::Diagonal;

    Scalar eval(const Scalar& x) const { return num.eval(x) / den.eval(x); }
    std::complex<double> eval(const std::complex<double>& x) const {
        return num.eval(x) / den.eval(x);
    }

    /// Divide out the gcd (exact backend); float functions are returned as-is.
    RationalFn reduced() const;
};

}  // namespace darboux

#endif
