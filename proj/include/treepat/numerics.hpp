#pragma once

#include <vector>

namespace treepat {

// Unique real root of x^n - 2x - 1 in (1, +inf), located by bisection on
// (1, 2] and polished by Newton. |root^n - 2*root - 1| <= tol on return.
double lambda_n(int n, double tol = 1e-10);

// Spectral radius of a square nonnegative matrix, certified within tol by
// Collatz-Wielandt bounds on each strongly connected block. For a 0-1 matrix
// whose strong components are all single vertices or single cycles the result
// is exact (1.0 when a cycle exists, 0.0 otherwise).
double spectral_radius(const std::vector<std::vector<double>>& m, double tol = 1e-9);

int least_prime_factor(int n);

// log(lambda_{n/p}) / p with p the least prime factor; n must be composite, >= 6.
double reducible_floor(int n);

}  // namespace treepat
