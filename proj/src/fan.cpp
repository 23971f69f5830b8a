#include "stacky/fan.hpp"

#include <algorithm>
#include <numeric>

namespace stacky {

namespace {

Int cross(const std::array<Int, 2>& a, const std::array<Int, 2>& b) {
    return a[0] * b[1] - a[1] * b[0];
}

// Counterclockwise angular order starting from the positive x-axis.
// Exact: half-plane index first, cross product within a half-plane.
int half_plane(const std::array<Int, 2>& v) {
    if (v[1] > 0 || (v[1] == 0 && v[0] > 0)) return 0;
    return 1;
}

bool angle_less(const std::array<Int, 2>& a, const std::array<Int, 2>& b) {
    int ha = half_plane(a), hb = half_plane(b);
    if (ha != hb) return ha < hb;
    return cross(a, b) > 0;
}

} // namespace

void Fan2D::validate() const {
    for (const auto& r : rays) {
        require(r[0] != 0 || r[1] != 0, "bad_fan", "zero ray");
        Int g = gcd(r[0], r[1]);
        require(g == 1, "bad_fan", "ray is not primitive");
    }
    for (const auto& c : max_cones) {
        require(c[0] < rays.size() && c[1] < rays.size(), "bad_fan", "cone ray index out of range");
        require(cross(rays[c[0]], rays[c[1]]) != 0, "bad_fan",
                "cone spanned by linearly dependent rays");
    }
}

bool Fan2D::is_complete() const {
    if (rays.size() < 3 || max_cones.size() != rays.size()) return false;
    std::vector<std::size_t> order(rays.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return angle_less(rays[a], rays[b]); });

    // consecutive rays must span a cone of angle < pi, and every such pair
    // must be one of the listed maximal cones
    for (std::size_t k = 0; k < order.size(); ++k) {
        std::size_t a = order[k], b = order[(k + 1) % order.size()];
        if (cross(rays[a], rays[b]) <= 0) return false;
        bool listed = false;
        for (const auto& c : max_cones)
            if ((c[0] == a && c[1] == b) || (c[0] == b && c[1] == a)) listed = true;
        if (!listed) return false;
    }
    return true;
}

void StackyFan::validate() const {
    fan.validate();
    require(multiplicities.size() == fan.rays.size(), "bad_fan",
            "one multiplicity required per ray");
    for (const Int& m : multiplicities)
        require(m >= 1, "bad_fan", "multiplicities must be positive");
}

IntMatrix StackyFan::beta() const {
    IntMatrix b(2, fan.rays.size());
    for (std::size_t j = 0; j < fan.rays.size(); ++j) {
        b.at(0, j) = multiplicities[j] * fan.rays[j][0];
        b.at(1, j) = multiplicities[j] * fan.rays[j][1];
    }
    return b;
}

Fan2D hirzebruch_fan(long p) {
    require(p >= 1, "bad_parameter", "p must be a positive integer");
    Fan2D f;
    f.rays = {{Int(0), Int(1)}, {Int(1), Int(0)}, {Int(p), Int(-1)}, {Int(-1), Int(0)}};
    f.max_cones = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
    f.validate();
    return f;
}

StackyFan root_stacky_fan(long p) {
    StackyFan sf{hirzebruch_fan(p), {Int(1), Int(1), Int(1), Int(p)}};
    sf.validate();
    return sf;
}

QuotientPresentation quotient_presentation(const StackyFan& sf) {
    sf.validate();
    require(sf.fan.is_complete(), "incomplete_fan",
            "quotient presentation requires a complete fan");

    QuotientPresentation qp;
    for (const auto& cone : sf.fan.max_cones) {
        std::vector<std::size_t> outside;
        for (std::size_t i = 0; i < sf.fan.rays.size(); ++i)
            if (i != cone[0] && i != cone[1]) outside.push_back(i);
        qp.nonvanishing_sets.push_back(std::move(outside));
    }

    GaleDual gd = gale_dual(sf.beta(), FGAbelianGroup::free_group(2));
    qp.group = std::move(gd.group);
    qp.weights = std::move(gd.weights);
    return qp;
}

RayQuotient quotient_stacky_fan_along_ray(const StackyFan& sf, std::size_t ray_index) {
    sf.validate();
    require(ray_index < sf.fan.rays.size(), "bad_ray", "ray index out of range");

    IntMatrix marked(2, 1);
    marked.at(0, 0) = sf.multiplicities[ray_index] * sf.fan.rays[ray_index][0];
    marked.at(1, 0) = sf.multiplicities[ray_index] * sf.fan.rays[ray_index][1];

    RayQuotient rq;
    rq.lattice = cokernel(marked);

    for (const auto& cone : sf.fan.max_cones)
        for (int side = 0; side < 2; ++side)
            if (cone[side] == ray_index) rq.adjacent_rays.push_back(cone[1 - side]);
    std::sort(rq.adjacent_rays.begin(), rq.adjacent_rays.end());
    rq.adjacent_rays.erase(std::unique(rq.adjacent_rays.begin(), rq.adjacent_rays.end()),
                           rq.adjacent_rays.end());

    IntMatrix adj(2, rq.adjacent_rays.size());
    for (std::size_t k = 0; k < rq.adjacent_rays.size(); ++k) {
        std::size_t i = rq.adjacent_rays[k];
        adj.at(0, k) = sf.multiplicities[i] * sf.fan.rays[i][0];
        adj.at(1, k) = sf.multiplicities[i] * sf.fan.rays[i][1];
    }
    rq.images = rq.lattice.apply(adj);
    return rq;
}

} // namespace stacky
