#pragma once

#include <vector>

#include "stacky/rational.hpp"

namespace stacky {

// Polynomial in the basis n^i/i!; alpha[i] is the coefficient of n^i/i!.
struct HilbertPoly {
    std::vector<Rat> alpha;

    std::size_t degree() const { return alpha.empty() ? 0 : alpha.size() - 1; }
    Rat leading() const { return alpha.empty() ? Rat(0) : alpha.back(); }
    void trim();

    friend HilbertPoly operator+(const HilbertPoly& a, const HilbertPoly& b);
    friend HilbertPoly operator-(const HilbertPoly& a, const HilbertPoly& b);
    HilbertPoly scaled(const Rat& c) const;
    Rat eval(const Rat& n) const;

    friend bool operator==(const HilbertPoly&, const HilbertPoly&) = default;
};

// Degree d-1 twist polynomial with positive leading coefficient delta_1.
struct StabilityPoly {
    HilbertPoly poly;

    Rat delta1() const { return poly.leading(); }
    void validate() const { require(delta1() > 0, "bad_delta", "delta_1 must be positive"); }
};

// P minus eps * delta, coefficientwise.
HilbertPoly framed_hilbert(const HilbertPoly& p, int eps, const StabilityPoly& delta);

// Eventual comparison P(n) <= Q(n) for n >> 0, realized lexicographically
// from the top coefficient.
bool poly_leq(const HilbertPoly& p, const HilbertPoly& q, bool strict);

// Numerical shadow of a framed sheaf.
struct FramedNumData {
    HilbertPoly p;
    int eps = 0; // 1 iff the framing is nonzero
    Rat ork;
    Rat deg;
};

struct DeltaSubWitness {
    HilbertPoly p;
    Rat alpha_d;
    int eps = 0;
};

struct WitnessVerdict {
    bool semistable_ok = false;
    bool stable_ok = false;
};

// Verdict relative to an explicit finite witness list; the artifact does
// not quantify over actual subsheaf categories.
struct StabilityVerdict {
    std::vector<WitnessVerdict> per_witness;
    bool semistable = false;
    bool stable = false;
};

StabilityVerdict delta_semistable_check(const FramedNumData& parent, const StabilityPoly& delta,
                                        const std::vector<DeltaSubWitness>& subs);

struct MuSubWitness {
    Rat deg;
    Rat ork;
    int eps = 0;
};

StabilityVerdict mu_stable_check(const FramedNumData& parent, const Rat& delta1,
                                 const std::vector<MuSubWitness>& subs);

// Multiplicity-zero conventions, kept apart from the main comparators:
// semistable iff the framing is injective; delta-stable additionally iff
// P equals delta.
struct RankZeroVerdict {
    bool semistable = false;
    bool stable = false;
};

RankZeroVerdict rank_zero_verdict(const HilbertPoly& p, const StabilityPoly& delta,
                                  bool phi_injective);

// mu = ork(G) * alpha_d(O_X) * hat_mu - alpha_{G,d-1}(O_X)
Rat hat_mu_relation(const Rat& hat_mu, const Rat& ork_g, const Rat& alpha_d_ox,
                    const Rat& alpha_gd1_ox);

// Degree under the polarization shift H -> H + n a_D D.
Rat degree_shift(const Rat& deg_h, long n, long a_d, long a_script_d, const Rat& ork_g,
                 const Rat& c1_restriction_integral);

// deg(E (x) O(D)) = deg(E) + ork(E) deg(O(D))
Rat twist_degree(const Rat& deg_e, const Rat& ork_e, const Rat& deg_od);

struct GoodSheafVerdict {
    bool is_good = false;
    Rat a0;
    Rat bound;
};

// Split framing sheaves only: A0 = max degree - mean degree, compared
// against (a_D D)^2 / (r a_D^2 k_D^2).
GoodSheafVerdict good_framing_sheaf_check(const std::vector<Rat>& line_degrees, long a_d, long k_d,
                                          const Rat& dd_selfint);

// Lower bound on the polarization shift n from the mu-stability theorem;
// A1 is the boundedness constant, taken as an input.
Rat polarization_threshold(long r, const Rat& a0, const Rat& a1, long a_d, long a_script_d,
                           const Rat& ork_g, long k_d, const Rat& dd_selfint, const Rat& d_dot_h);

// True iff sum_{i=1..r} w^{-ij} vanishes for every primitive k-th root w
// and every j = 1..k-1; equivalently k | r (k = 1 vacuously).
bool generating_sheaf_condition(long k, long r);

} // namespace stacky
