#ifndef DARBOUX_CONFIG_HPP
#define DARBOUX_CONFIG_HPP

#include <atomic>

namespace darboux::config {

// Relative tolerance for float-backend zero tests. Exact-backend code never
// consults it.
double tau_zero();
void set_tau_zero(double tau);

}  // namespace darboux::config

#endif
