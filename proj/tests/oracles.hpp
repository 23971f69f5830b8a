#pragma once

// Independent cross-checks for the test suites. Everything here computes
// through a different route than the library: determinantal divisors
// instead of elimination, double-precision root-of-unity sums instead of
// closed forms, coarse-surface Riemann-Roch instead of the orbifold
// machinery, brute force instead of pruned search.

#include <complex>
#include <vector>

#include "stacky/fixed_points.hpp"
#include "stacky/int_matrix.hpp"
#include "stacky/picard.hpp"

namespace oracles {

using stacky::Int;
using stacky::IntMatrix;
using stacky::Rat;

// Invariant factors via gcds of k x k minors (determinantal divisors).
std::vector<Int> minor_gcd_invariant_factors(const IntMatrix& m);

// Exact determinant by cofactor expansion; small matrices only.
Int determinant(const IntMatrix& m);

// Basis of ker(w : Z^n -> Z^k) as columns, via the Smith form of w.
IntMatrix kernel_basis(const IntMatrix& w);

// im(beta^T) equals ker(weights) exactly: weights * beta^T = 0, and the
// change of basis expressing beta^T in a kernel basis is unimodular.
bool weights_exact_for(const IntMatrix& weights, const IntMatrix& beta);

// Numeric sum over the nontrivial p-th roots of unity at exponent j+2;
// e.g. 1/(1-(-1))^2 = 1/4 at p = 2, j = 0.
std::complex<double> roots_of_unity_sum_numeric(long p, long j);

// max over j = 1..k-1 and all primitive k-th roots of |sum_{i=1..r} w^{-ij}|
double generating_sheaf_violation(long k, long r);

// Pairing on Pic(X_p) by pushing to Q-classes on the coarse surface and
// using F^2 = 0, E.F = 1, E^2 = -p.
Rat coarse_route_intersect(const stacky::DivisorClass& x, const stacky::DivisorClass& y);

// chi(O(a omega + b Dinf)) computed classically: push down to F_p and
// apply surface Riemann-Roch.
Rat chi_line_classical(long p, const Int& a, const Int& b);

// Moduli dimension at a torus-fixed point, pair by pair through the
// classical chi above.
Rat dimension_via_chi(long p, const std::vector<Int>& u_vec, const std::vector<Int>& n_vec);

// Coefficients 0..max_n of prod (1-q^k)^{-colors} by direct truncated
// series multiplication, one geometric factor at a time.
std::vector<Int> series_product_coefficients(unsigned long max_n, unsigned long colors);

// Fixed points by brute force: all twist vectors with |u_alpha| <= box and
// all Young pair tuples up to total size n_box, filtered by the defining
// constraints.
std::vector<stacky::FixedPoint> brute_force_fixed_points(long p, long r, const Int& u,
                                                         const Rat& delta,
                                                         const stacky::FramingVector& w, long box,
                                                         unsigned long n_box);

} // namespace oracles
