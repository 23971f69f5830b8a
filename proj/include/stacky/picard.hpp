#pragma once

#include <optional>
#include <string>

#include "stacky/rational.hpp"

namespace stacky {

// Class in Pic(X_p) written in the (omega, Dinf) basis. The named curve
// classes satisfy F1 = F2 = omega + Dinf and E = -p*omega.
struct DivisorClass {
    Int a_omega;
    Int a_dinf;
    long p = 1;

    DivisorClass(Int ao, Int ad, long pp) : a_omega(std::move(ao)), a_dinf(std::move(ad)), p(pp) {
        require(p >= 1, "bad_parameter", "p must be a positive integer");
    }

    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

enum class NamedClass { F1, F2, E, Dinf, Omega };

DivisorClass named_class(NamedClass name, long p);
DivisorClass named_class(const std::string& name, long p);
DivisorClass r_power(const Int& u, long p);

// omega^2 = -1/p, omega.Dinf = 0, Dinf^2 = 1/p.
Rat intersect(const DivisorClass& x, const DivisorClass& y);

// Line bundle L1^a (x) L2^b on the gerbe divisor; L2 has order p.
struct DinfLineClass {
    Int a;
    Int b; // in [0, p)
    long p = 1;

    friend bool operator==(const DinfLineClass&, const DinfLineClass&) = default;
};

// Restriction Pic(X_p) -> Pic(Dinf) with the mu_p generator chosen so that
// the tautological bundle restricts to L2. Then F_i -> L1, E -> 0 and
// Dinf -> L1 (x) L2^(p-1).
DinfLineClass restrict_to_dinf(const DivisorClass& x);

Rat degree_on_dinf(const DinfLineClass& c);

// Class f*F + e*E on the coarse Hirzebruch surface F_p.
struct CoarseDivisor {
    Int f;
    Int e;
    long p = 1;
};

Rat coarse_intersect(const CoarseDivisor& x, const CoarseDivisor& y);

struct GoodDivisorVerdict {
    bool is_good = false;
    std::optional<long> a_d; // 1 whenever the class qualifies (Pic(F_p) is free)
    bool nef = false;
    bool big = false;
    Int dot_f;
    Int dot_e;
    Int self_intersection;
};

// Nef-and-big test against the extremal curves F and E; irreducibility is
// assumed for the named torus-invariant curves and not decided in general.
GoodDivisorVerdict good_framing_divisor_check(const CoarseDivisor& d);

} // namespace stacky
