#include "stacky/fixed_points.hpp"

#include <algorithm>
#include <optional>

namespace stacky {

unsigned long YoungDiagram::size() const {
    unsigned long s = 0;
    for (unsigned long p : parts) s += p;
    return s;
}

void YoungDiagram::validate() const {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        require(parts[i] >= 1, "bad_partition", "partition parts must be positive");
        if (i + 1 < parts.size())
            require(parts[i] >= parts[i + 1], "bad_partition",
                    "partition parts must be weakly decreasing");
    }
}

namespace {

void gen_partitions(unsigned long n, unsigned long max_part, std::vector<unsigned long>& prefix,
                    std::vector<YoungDiagram>& out) {
    if (n == 0) {
        out.push_back(YoungDiagram{prefix});
        return;
    }
    for (unsigned long first = std::min(n, max_part); first >= 1; --first) {
        prefix.push_back(first);
        gen_partitions(n - first, first, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<YoungDiagram> partitions(unsigned long n) {
    std::vector<YoungDiagram> out;
    std::vector<unsigned long> prefix;
    gen_partitions(n, n == 0 ? 1 : n, prefix, out);
    return out;
}

std::vector<YoungPair> young_pairs(unsigned long n) {
    std::vector<YoungPair> out;
    for (unsigned long k = 0; k <= n; ++k) {
        auto left = partitions(k);
        auto right = partitions(n - k);
        for (const auto& y1 : left)
            for (const auto& y2 : right) out.emplace_back(y1, y2);
    }
    return out;
}

std::vector<Int> colored_partition_series(unsigned long max_n, unsigned long colors) {
    std::vector<Int> dp(max_n + 1, Int(0));
    dp[0] = 1;
    for (unsigned long k = 1; k <= max_n; ++k)
        for (unsigned long rep = 0; rep < colors; ++rep)
            for (unsigned long m = k; m <= max_n; ++m) dp[m] += dp[m - k];
    return dp;
}

Int count_rank_one(unsigned long n) { return colored_partition_series(n, 2)[n]; }

std::vector<Int> FixedPoint::point_lengths() const {
    std::vector<Int> out;
    out.reserve(pairs.size());
    for (const auto& [y1, y2] : pairs) out.emplace_back(Int(y1.size()) + Int(y2.size()));
    return out;
}

std::vector<long> block_residues(const FramingVector& w) {
    std::vector<long> res;
    for (long i = 0; i < w.p(); ++i)
        for (long c = 0; c < w.w[i]; ++c) res.push_back(i);
    return res;
}

void FixedPoint::validate(long p, long r, const Int& u, const Rat& delta,
                          const FramingVector& w) const {
    require(pairs.size() == static_cast<std::size_t>(r) &&
                u_vec.size() == static_cast<std::size_t>(r),
            "bad_fixed_point", "fixed point must carry r pairs and r twists");
    for (const auto& [y1, y2] : pairs) {
        y1.validate();
        y2.validate();
    }
    std::vector<long> res = block_residues(w);
    Int total(0);
    for (std::size_t a = 0; a < u_vec.size(); ++a) {
        require(mod_floor(u_vec[a], Int(p)) == mod_floor(Int(res[a]), Int(p)), "bad_fixed_point",
                "twist violates the block congruence u_alpha = i mod p");
        total += u_vec[a];
    }
    require(total == u, "bad_fixed_point", "twists must sum to u");
    require(fixed_point_discriminant(p, r, u_vec, point_lengths()) == delta, "bad_fixed_point",
            "discriminant mismatch");
}

namespace {

struct TwistSearch {
    long p;
    long r;
    Int u;
    Rat budget; // sum u_alpha^2 <= budget, forced by n_alpha >= 0
    std::vector<long> residues;
    std::uint64_t limit;
    bool overflowed = false;
    std::vector<std::vector<Int>> found;

    // Feasibility at a non-final slot: ua^2 + (u - sum - ua)^2 / rem must fit
    // in the residual budget. Convex in ua, so the feasible set is an
    // integer interval; solve the quadratic exactly and scan only that.
    void dfs(std::size_t depth, std::vector<Int>& partial, const Int& sum, const Int& sum_sq) {
        if (overflowed) return;
        if (depth + 1 == static_cast<std::size_t>(r)) {
            Int last = u - sum;
            if (mod_floor(last, Int(p)) != mod_floor(Int(residues[depth]), Int(p))) return;
            if (Rat(sum_sq + last * last) > budget) return;
            if (found.size() >= limit) {
                overflowed = true;
                return;
            }
            partial.push_back(last);
            found.push_back(partial);
            partial.pop_back();
            return;
        }

        Int rem(r - static_cast<long>(depth) - 1);
        Int s = u - sum;
        Rat q = budget - Rat(sum_sq);
        if (q < 0) return;
        const Int& qn = q.get_num();
        const Int& qd = q.get_den();
        // qd (rem+1) ua^2 - 2 s qd ua + (s^2 qd - rem qn) <= 0
        Int a = qd * (rem + 1);
        Int disc = s * s * qd * qd - a * (s * s * qd - rem * qn);
        if (disc < 0) return;
        Int sq = sqrt(disc);
        Int lo, hi, num;
        num = s * qd - sq - 1;
        mpz_cdiv_q(lo.get_mpz_t(), num.get_mpz_t(), a.get_mpz_t());
        num = s * qd + sq + 1;
        mpz_fdiv_q(hi.get_mpz_t(), num.get_mpz_t(), a.get_mpz_t());

        Int res(residues[depth]);
        Int t_min, t_max, tmp;
        tmp = lo - res;
        mpz_cdiv_q(t_min.get_mpz_t(), tmp.get_mpz_t(), Int(p).get_mpz_t());
        tmp = hi - res;
        mpz_fdiv_q(t_max.get_mpz_t(), tmp.get_mpz_t(), Int(p).get_mpz_t());
        for (Int t = t_min; t <= t_max && !overflowed; ++t) {
            Int ua = res + Int(p) * t;
            Int s2 = sum_sq + ua * ua;
            Int need = u - sum - ua;
            if (Rat(s2) + make_rat(need * need, rem) > budget) continue;
            partial.push_back(ua);
            dfs(depth + 1, partial, sum + ua, s2);
            partial.pop_back();
        }
    }
};

// Admissible twist vectors in ascending lexicographic order, at most
// `limit` of them; overflow is reported through the second member.
struct TwistResult {
    std::vector<std::vector<Int>> twists;
    bool overflowed = false;
};

TwistResult admissible_twists(long p, long r, const Int& u, const Rat& delta,
                              const FramingVector& w, std::uint64_t limit) {
    w.validate();
    require(w.p() == p, "bad_framing_vector", "framing vector length must equal p");
    require(w.rank() == r, "rank_mismatch", "sum of framing vector entries must equal r");
    require(delta >= 0, "bad_parameter", "delta must be nonnegative");

    Int det_residue(0);
    for (long i = 0; i < p; ++i) det_residue += Int(i) * w.w[i];
    require(mod_floor(u, Int(p)) == mod_floor(det_residue, Int(p)), "determinant_congruence",
            "u must equal sum i*w_i modulo p; no moduli space carries this determinant");

    TwistSearch search{p,     r, u, make_rat(u * u, Int(r)) + Rat(2 * p) * delta,
                       block_residues(w), limit, false, {}};
    std::vector<Int> partial;
    search.dfs(0, partial, Int(0), Int(0));
    return TwistResult{std::move(search.found), search.overflowed};
}

// residual number of points: Delta + u^2/(2rp) - sum u^2/(2p); the twist
// vector contributes fixed points only when this is a nonnegative integer
std::optional<unsigned long> residual_length(long p, long r, const Int& u, const Rat& delta,
                                             const std::vector<Int>& twists) {
    Int sum_sq(0);
    for (const Int& t : twists) sum_sq += t * t;
    Rat n = delta + make_rat(u * u, Int(2 * p) * r) - make_rat(sum_sq, Int(2 * p));
    if (n < 0 || n.get_den() != 1) return std::nullopt;
    require(n.get_num().fits_ulong_p(), "overflow", "residual point count does not fit");
    return n.get_num().get_ui();
}

} // namespace

FixedPointEnumeration enumerate_fixed_points(long p, long r, const Int& u, const Rat& delta,
                                             const FramingVector& w, std::uint64_t cap) {
    FixedPointEnumeration out;
    std::uint64_t candidates = 0;

    // twist vectors and their residual point budgets
    TwistResult tw = admissible_twists(p, r, u, delta, w, cap);
    out.truncated = tw.overflowed;
    std::vector<std::pair<std::vector<Int>, unsigned long>> strata;
    unsigned long max_len = 0;
    for (const auto& twists : tw.twists) {
        if (++candidates > cap) {
            out.truncated = true;
            break;
        }
        auto n_total = residual_length(p, r, u, delta, twists);
        if (!n_total) continue;
        strata.emplace_back(twists, *n_total);
        max_len = std::max(max_len, *n_total);
    }

    std::vector<std::vector<YoungPair>> pool(max_len + 1);
    for (unsigned long n = 0; n <= max_len && !out.truncated; ++n) pool[n] = young_pairs(n);

    for (const auto& [twists, n_total_val] : strata) {
        if (out.truncated) break;
        unsigned long n_total = n_total_val;
        std::vector<YoungPair> tuple;
        bool stop = false;
        auto assign = [&](auto&& self, std::size_t slot, unsigned long remaining) -> void {
            if (stop) return;
            if (slot + 1 == static_cast<std::size_t>(r)) {
                for (const auto& pr : pool[remaining]) {
                    if (++candidates > cap) {
                        out.truncated = true;
                        stop = true;
                        return;
                    }
                    tuple.push_back(pr);
                    out.points.push_back(FixedPoint{tuple, twists});
                    tuple.pop_back();
                }
                return;
            }
            for (unsigned long n = 0; n <= remaining && !stop; ++n)
                for (const auto& pr : pool[n]) {
                    tuple.push_back(pr);
                    self(self, slot + 1, remaining - n);
                    tuple.pop_back();
                    if (stop) break;
                }
        };
        tuple.reserve(r);
        assign(assign, 0, n_total);
    }

    std::sort(out.points.begin(), out.points.end(), fixed_point_less);
    return out;
}

bool fixed_point_less(const FixedPoint& a, const FixedPoint& b) {
    if (a.u_vec != b.u_vec)
        return std::lexicographical_compare(a.u_vec.begin(), a.u_vec.end(), b.u_vec.begin(),
                                            b.u_vec.end());
    return a.pairs < b.pairs;
}

Int count_fixed_points(long p, long r, const Int& u, const Rat& delta, const FramingVector& w) {
    // exact or an error; the count never silently truncates
    TwistResult tw = admissible_twists(p, r, u, delta, w, 5'000'000);
    require(!tw.overflowed, "count_window", "twist search exceeds the exact-count budget");
    std::vector<unsigned long> lengths;
    unsigned long max_len = 0;
    for (const auto& twists : tw.twists) {
        auto n_total = residual_length(p, r, u, delta, twists);
        if (!n_total) continue;
        lengths.push_back(*n_total);
        max_len = std::max(max_len, *n_total);
    }
    if (lengths.empty()) return Int(0);
    // the series window is quadratic in cost; keep the count exact but bounded
    require(max_len <= 10000, "count_window",
            "residual point count exceeds the supported series window (10000)");
    std::vector<Int> series = colored_partition_series(max_len, 2 * static_cast<unsigned long>(r));
    Int total(0);
    for (unsigned long n : lengths) total += series[n];
    return total;
}

} // namespace stacky
