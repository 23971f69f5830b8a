#pragma once

#include <vector>

#include "stacky/rational.hpp"

namespace stacky {

// Framing vector w = (w_0, ..., w_{p-1}); the framing sheaf is the direct
// sum of w_i copies of the i-th power of the tautological bundle restricted
// to the gerbe divisor, of orbifold rank r = sum w_i.
struct FramingVector {
    std::vector<long> w;

    long p() const { return static_cast<long>(w.size()); }
    long rank() const;
    // cyclic translate (w_j, ..., w_{p-1}, w_0, ..., w_{j-1})
    std::vector<long> translated(long j) const;
    // w . w(j)
    long dot_translated(long j) const;

    void validate() const;
};

// Value of sum_{i=1}^{p-1} w^{-i(j+2)} / (1 - w^{-i})^2 over the nontrivial
// p-th roots of unity, in closed form: -(p^2-6p+5)/12 - j(j-p+2)/2.
// Empty sum (p = 1) gives 0.
Rat roots_of_unity_sum(long p, long j);

// -(p^2 - 6p - 7) / (12p)
Rat todd2_integral(long p);

// 2 r Delta - sum_j w.w(j) j(j-p+2)/(2p)
Rat dimension(long p, long r, const Rat& delta, const FramingVector& w);

// Untwisted part of the Euler characteristic: -2 r Delta - r^2 (p^2-6p+5)/(12p).
Rat a_term(long p, long r, const Rat& delta);

// Twisted-sector part: -(1/p) sum_j w.w(j) roots_of_unity_sum(p, j).
// dimension == -(a_term + b_term).
Rat b_term(long p, const FramingVector& w);

// Discriminant of a direct sum of rank-one pieces with twists u_alpha and
// point lengths n_alpha:
//   Delta = sum n + (sum u^2)/(2p) - (sum u)^2/(2rp).
Rat fixed_point_discriminant(long p, long r, const std::vector<Int>& u_vec,
                             const std::vector<Int>& n_vec);

} // namespace stacky
