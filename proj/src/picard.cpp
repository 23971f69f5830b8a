#include "stacky/picard.hpp"

namespace stacky {

DivisorClass named_class(NamedClass name, long p) {
    switch (name) {
        case NamedClass::F1:
        case NamedClass::F2: return DivisorClass(Int(1), Int(1), p);
        case NamedClass::E: return DivisorClass(Int(-p), Int(0), p);
        case NamedClass::Dinf: return DivisorClass(Int(0), Int(1), p);
        case NamedClass::Omega: return DivisorClass(Int(1), Int(0), p);
    }
    throw precondition_error("unknown_class", "unknown divisor class name");
}

DivisorClass named_class(const std::string& name, long p) {
    if (name == "F1") return named_class(NamedClass::F1, p);
    if (name == "F2") return named_class(NamedClass::F2, p);
    if (name == "E") return named_class(NamedClass::E, p);
    if (name == "Dinf") return named_class(NamedClass::Dinf, p);
    if (name == "omega") return named_class(NamedClass::Omega, p);
    throw precondition_error("unknown_class", "unknown divisor class name: '" + name + "'");
}

DivisorClass r_power(const Int& u, long p) { return DivisorClass(u, Int(0), p); }

Rat intersect(const DivisorClass& x, const DivisorClass& y) {
    require(x.p == y.p, "p_mismatch", "intersection of classes on different surfaces");
    return make_rat(-x.a_omega * y.a_omega + x.a_dinf * y.a_dinf, Int(x.p));
}

DinfLineClass restrict_to_dinf(const DivisorClass& x) {
    return DinfLineClass{x.a_dinf, mod_floor(x.a_omega - x.a_dinf, Int(x.p)), x.p};
}

Rat degree_on_dinf(const DinfLineClass& c) { return make_rat(c.a, Int(c.p)); }

Rat coarse_intersect(const CoarseDivisor& x, const CoarseDivisor& y) {
    require(x.p == y.p, "p_mismatch", "intersection of classes on different surfaces");
    // F^2 = 0, E.F = 1, E^2 = -p
    return Rat(x.f * y.e + x.e * y.f - Int(x.p) * x.e * y.e);
}

GoodDivisorVerdict good_framing_divisor_check(const CoarseDivisor& d) {
    GoodDivisorVerdict v;
    v.dot_f = d.e;                       // (fF + eE).F
    v.dot_e = d.f - Int(d.p) * d.e;      // (fF + eE).E
    v.self_intersection = 2 * d.f * d.e - Int(d.p) * d.e * d.e;
    v.nef = v.dot_f >= 0 && v.dot_e >= 0;
    v.big = v.self_intersection > 0;
    v.is_good = v.nef && v.big;
    if (v.is_good) v.a_d = 1;
    return v;
}

} // namespace stacky
