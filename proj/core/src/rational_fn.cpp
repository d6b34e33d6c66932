#include "darboux/rational_fn.hpp"

namespace darboux {

RationalFn RationalFn::reduced() const {
    if (num.backend() != Backend::Exact || num.is_zero() || den.is_zero())
        return *this;
    Poly g = Poly::gcd(num, den);
    if (g.degree() < 1) return *this;
    RationalFn r = *this;
    r.num = num.divmod(g).first;
    r.den = den.divmod(g).first;
    return r;
}

}  // namespace darboux
