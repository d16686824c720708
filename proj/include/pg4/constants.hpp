#pragma once

#include "pg4/quat.hpp"

namespace pg4::qc {

Quat omega();      // ½(−1+i+j+k), order 3
Quat omega_bar();  // ½(−1−i−j−k)
Quat i_O();        // (j+k)/√2, order 4
Quat i_I();        // ½(i + (√5−1)/2 j + (√5+1)/2 k), order 4
Quat i_I_dag();    // i_I with √5 ↦ −√5
Quat i_I_prime();  // ½(−(√5−1)/2 i − (√5+1)/2 j + k)
Quat e(long long n);  // exp(πi/n)
// exp(p·q·πi/n) as a cyclotomic quaternion.
Quat e(long long p, long long n);

// Looks up a constant by name: omega, omegabar, iO, iI, iIdag, iIprime,
// i, j, k, 1, -1, e<n>.
Quat by_name(const std::string& name);

}  // namespace pg4::qc
