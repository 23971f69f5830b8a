#include "stacky/stability.hpp"

#include <algorithm>

namespace stacky {

void HilbertPoly::trim() {
    while (alpha.size() > 1 && alpha.back() == 0) alpha.pop_back();
}

HilbertPoly operator+(const HilbertPoly& a, const HilbertPoly& b) {
    HilbertPoly out;
    out.alpha.resize(std::max(a.alpha.size(), b.alpha.size()), Rat(0));
    for (std::size_t i = 0; i < a.alpha.size(); ++i) out.alpha[i] += a.alpha[i];
    for (std::size_t i = 0; i < b.alpha.size(); ++i) out.alpha[i] += b.alpha[i];
    return out;
}

HilbertPoly operator-(const HilbertPoly& a, const HilbertPoly& b) {
    HilbertPoly out;
    out.alpha.resize(std::max(a.alpha.size(), b.alpha.size()), Rat(0));
    for (std::size_t i = 0; i < a.alpha.size(); ++i) out.alpha[i] += a.alpha[i];
    for (std::size_t i = 0; i < b.alpha.size(); ++i) out.alpha[i] -= b.alpha[i];
    return out;
}

HilbertPoly HilbertPoly::scaled(const Rat& c) const {
    HilbertPoly out = *this;
    for (Rat& v : out.alpha) v *= c;
    return out;
}

Rat HilbertPoly::eval(const Rat& n) const {
    // alpha[i] n^i / i!
    Rat acc(0), pw(1);
    Int fact(1);
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (i > 0) {
            pw *= n;
            fact *= static_cast<long>(i);
        }
        acc += alpha[i] * pw / Rat(fact);
    }
    return acc;
}

HilbertPoly framed_hilbert(const HilbertPoly& p, int eps, const StabilityPoly& delta) {
    require(eps == 0 || eps == 1, "bad_eps", "eps must be 0 or 1");
    delta.validate();
    if (eps == 0) return p;
    return p - delta.poly;
}

bool poly_leq(const HilbertPoly& p, const HilbertPoly& q, bool strict) {
    std::size_t n = std::max(p.alpha.size(), q.alpha.size());
    for (std::size_t k = n; k-- > 0;) {
        Rat a = k < p.alpha.size() ? p.alpha[k] : Rat(0);
        Rat b = k < q.alpha.size() ? q.alpha[k] : Rat(0);
        if (a != b) return a < b;
    }
    return !strict;
}

StabilityVerdict delta_semistable_check(const FramedNumData& parent, const StabilityPoly& delta,
                                        const std::vector<DeltaSubWitness>& subs) {
    delta.validate();
    require(parent.eps == 0 || parent.eps == 1, "bad_eps", "eps must be 0 or 1");
    require(parent.p.leading() > 0, "rank_zero",
            "multiplicity-zero framed sheaves use the separate rank-zero verdict");

    // reduced framed Hilbert polynomial of the parent
    HilbertPoly reduced =
        framed_hilbert(parent.p, parent.eps, delta).scaled(Rat(1) / parent.p.leading());

    StabilityVerdict out{{}, true, true};
    for (const auto& sub : subs) {
        require(sub.eps == 0 || sub.eps == 1, "bad_eps", "witness eps must be 0 or 1");
        HilbertPoly lhs = sub.eps == 0 ? sub.p : sub.p - delta.poly;
        HilbertPoly rhs = reduced.scaled(sub.alpha_d);
        WitnessVerdict w{poly_leq(lhs, rhs, false), poly_leq(lhs, rhs, true)};
        out.semistable = out.semistable && w.semistable_ok;
        out.stable = out.stable && w.stable_ok;
        out.per_witness.push_back(w);
    }
    return out;
}

StabilityVerdict mu_stable_check(const FramedNumData& parent, const Rat& delta1,
                                 const std::vector<MuSubWitness>& subs) {
    require(delta1 > 0, "bad_delta", "delta_1 must be positive");
    require(parent.ork != 0, "rank_zero",
            "orbifold-rank-zero framed sheaves use the separate rank-zero verdict");
    require(parent.eps == 0 || parent.eps == 1, "bad_eps", "eps must be 0 or 1");

    Rat mu = (parent.deg - Rat(parent.eps) * delta1) / parent.ork;

    StabilityVerdict out{{}, true, true};
    for (const auto& sub : subs) {
        require(sub.eps == 0 || sub.eps == 1, "bad_eps", "witness eps must be 0 or 1");
        if (sub.eps == 0)
            require(sub.ork > 0 && sub.ork <= parent.ork, "bad_witness",
                    "kernel-type witness needs 0 < ork' <= ork");
        else
            require(sub.ork > 0 && sub.ork < parent.ork, "bad_witness",
                    "framed witness needs 0 < ork' < ork");
        Rat lhs = sub.eps == 0 ? sub.deg : sub.deg - delta1;
        Rat rhs = sub.ork * mu;
        WitnessVerdict w{lhs <= rhs, lhs < rhs};
        out.semistable = out.semistable && w.semistable_ok;
        out.stable = out.stable && w.stable_ok;
        out.per_witness.push_back(w);
    }
    return out;
}

RankZeroVerdict rank_zero_verdict(const HilbertPoly& p, const StabilityPoly& delta,
                                  bool phi_injective) {
    delta.validate();
    RankZeroVerdict v;
    v.semistable = phi_injective;
    HilbertPoly diff = p - delta.poly;
    diff.trim();
    v.stable = phi_injective && diff.alpha.size() == 1 && diff.alpha[0] == 0;
    return v;
}

Rat hat_mu_relation(const Rat& hat_mu, const Rat& ork_g, const Rat& alpha_d_ox,
                    const Rat& alpha_gd1_ox) {
    return ork_g * alpha_d_ox * hat_mu - alpha_gd1_ox;
}

Rat degree_shift(const Rat& deg_h, long n, long a_d, long a_script_d, const Rat& ork_g,
                 const Rat& c1_restriction_integral) {
    require(n >= 0, "bad_parameter", "shift count n must be nonnegative");
    return deg_h + Rat(n) * Rat(a_d) * Rat(a_script_d) * ork_g * c1_restriction_integral;
}

Rat twist_degree(const Rat& deg_e, const Rat& ork_e, const Rat& deg_od) {
    return deg_e + ork_e * deg_od;
}

GoodSheafVerdict good_framing_sheaf_check(const std::vector<Rat>& line_degrees, long a_d, long k_d,
                                          const Rat& dd_selfint) {
    require(!line_degrees.empty(), "empty_framing", "framing sheaf needs at least one summand");
    require(a_d >= 1 && k_d >= 1, "bad_parameter", "a_D and k_D must be positive integers");

    Rat maxdeg = line_degrees[0], total(0);
    for (const Rat& d : line_degrees) {
        maxdeg = std::max(maxdeg, d);
        total += d;
    }
    long r = static_cast<long>(line_degrees.size());
    GoodSheafVerdict v;
    v.a0 = maxdeg - total / Rat(r);
    v.bound = dd_selfint / (Rat(r) * Rat(a_d) * Rat(a_d) * Rat(k_d) * Rat(k_d));
    v.is_good = v.a0 >= 0 && v.a0 < v.bound;
    return v;
}

Rat polarization_threshold(long r, const Rat& a0, const Rat& a1, long a_d, long a_script_d,
                           const Rat& ork_g, long k_d, const Rat& dd_selfint, const Rat& d_dot_h) {
    require(r >= 1 && a_d >= 1 && a_script_d >= 1 && k_d >= 1, "bad_parameter",
            "r, a_D, a_script_D, k_D must be positive integers");
    require(ork_g > 0, "bad_parameter", "ork(G) must be positive");
    Rat margin = dd_selfint / (Rat(a_d) * Rat(a_d) * Rat(k_d) * Rat(k_d)) - Rat(r) * a0;
    require(margin > 0, "bad_framing_bound",
            "good-framing-sheaf bound violated: (a_D D)^2/(a_D^2 k_D^2) - r A0 must be positive");
    Rat value = (Rat(r) * a1 - ork_g * d_dot_h / (Rat(a_d) * Rat(k_d))) /
                (Rat(a_d) * Rat(a_script_d) * ork_g * margin);
    return std::max(value, Rat(0));
}

bool generating_sheaf_condition(long k, long r) {
    require(k >= 1 && r >= 1, "bad_parameter", "k and r must be positive integers");
    return r % k == 0;
}

} // namespace stacky
