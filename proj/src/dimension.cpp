#include "stacky/dimension.hpp"

namespace stacky {

long FramingVector::rank() const {
    long r = 0;
    for (long v : w) r += v;
    return r;
}

std::vector<long> FramingVector::translated(long j) const {
    std::vector<long> out(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) out[i] = w[(i + j) % w.size()];
    return out;
}

long FramingVector::dot_translated(long j) const {
    long acc = 0;
    for (std::size_t i = 0; i < w.size(); ++i) acc += w[i] * w[(i + j) % w.size()];
    return acc;
}

void FramingVector::validate() const {
    require(!w.empty(), "bad_framing_vector", "framing vector must have length p >= 1");
    for (long v : w) require(v >= 0, "bad_framing_vector", "framing vector entries must be >= 0");
    require(rank() >= 1, "bad_framing_vector", "framing vector must have positive total rank");
}

Rat roots_of_unity_sum(long p, long j) {
    require(p >= 1, "bad_parameter", "p must be a positive integer");
    require(0 <= j && j <= p - 1, "bad_parameter", "j must lie in 0..p-1");
    if (p == 1) return Rat(0);
    Int pp(p), jj(j);
    return make_rat(-(pp * pp - 6 * pp + 5), Int(12)) - make_rat(jj * (jj - pp + 2), Int(2));
}

Rat todd2_integral(long p) {
    require(p >= 1, "bad_parameter", "p must be a positive integer");
    Int pp(p);
    return make_rat(-(pp * pp - 6 * pp - 7), 12 * pp);
}

Rat dimension(long p, long r, const Rat& delta, const FramingVector& w) {
    w.validate();
    require(w.p() == p, "bad_framing_vector", "framing vector length must equal p");
    require(w.rank() == r, "rank_mismatch", "sum of framing vector entries must equal r");
    Rat acc = Rat(2 * r) * delta;
    for (long j = 0; j < p; ++j) {
        Int jj(j);
        acc -= Rat(w.dot_translated(j)) * make_rat(jj * (jj - p + 2), Int(2 * p));
    }
    return acc;
}

Rat a_term(long p, long r, const Rat& delta) {
    require(p >= 1, "bad_parameter", "p must be a positive integer");
    Int pp(p), rr(r);
    return Rat(-2 * r) * delta - make_rat(rr * rr * (pp * pp - 6 * pp + 5), 12 * pp);
}

Rat b_term(long p, const FramingVector& w) {
    w.validate();
    require(w.p() == p, "bad_framing_vector", "framing vector length must equal p");
    Rat acc(0);
    for (long j = 0; j < p; ++j) acc += Rat(w.dot_translated(j)) * roots_of_unity_sum(p, j);
    return -acc / Rat(p);
}

Rat fixed_point_discriminant(long p, long r, const std::vector<Int>& u_vec,
                             const std::vector<Int>& n_vec) {
    require(p >= 1, "bad_parameter", "p must be a positive integer");
    require(r >= 1, "bad_parameter", "r must be a positive integer");
    require(u_vec.size() == static_cast<std::size_t>(r) &&
                n_vec.size() == static_cast<std::size_t>(r),
            "length_mismatch", "u and n vectors must have length r");
    Int sum_n(0), sum_u(0), sum_u2(0);
    for (const Int& n : n_vec) {
        require(n >= 0, "bad_parameter", "point lengths n_alpha must be nonnegative");
        sum_n += n;
    }
    for (const Int& u : u_vec) {
        sum_u += u;
        sum_u2 += u * u;
    }
    return Rat(sum_n) + make_rat(sum_u2, Int(2 * p)) - make_rat(sum_u * sum_u, Int(2 * p) * r);
}

} // namespace stacky
