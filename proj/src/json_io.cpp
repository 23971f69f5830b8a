#include "stacky/json_io.hpp"

namespace stacky {

json to_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(int_to_string(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

IntMatrix int_matrix_from_json(const json& j) {
    require(j.is_array(), "bad_json", "matrix must be an array of arrays");
    std::size_t rows = j.size();
    std::size_t cols = rows ? j[0].size() : 0;
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        require(j[i].is_array() && j[i].size() == cols, "bad_json", "ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c)
            m.at(i, c) = parse_int(j[i][c].get<std::string>());
    }
    return m;
}

json to_json(const FGAbelianGroup& g) {
    json torsion = json::array();
    for (const Int& t : g.torsion_orders) torsion.push_back(int_to_string(t));
    return json{{"free_rank", g.free_rank},
                {"torsion_orders", std::move(torsion)},
                {"projection", to_json(g.projection)}};
}

FGAbelianGroup fg_group_from_json(const json& j) {
    FGAbelianGroup g;
    g.free_rank = j.at("free_rank").get<std::size_t>();
    if (j.contains("torsion_orders"))
        for (const auto& t : j.at("torsion_orders"))
            g.torsion_orders.push_back(t.is_string() ? parse_int(t.get<std::string>())
                                                     : Int(t.get<long>()));
    if (j.contains("projection"))
        g.projection = int_matrix_from_json(j.at("projection"));
    else {
        g.projection = IntMatrix::identity(g.coord_count());
        for (std::size_t i = 0; i < g.torsion_orders.size(); ++i)
            g.projection.at(g.free_rank + i, g.free_rank + i) = 1;
    }
    g.validate();
    return g;
}

json to_json(const Fan2D& fan) {
    json rays = json::array();
    for (const auto& r : fan.rays)
        rays.push_back(json::array({int_to_string(r[0]), int_to_string(r[1])}));
    json cones = json::array();
    for (const auto& c : fan.max_cones) cones.push_back(json::array({c[0], c[1]}));
    return json{{"rays", std::move(rays)}, {"max_cones", std::move(cones)}};
}

json to_json(const StackyFan& sf) {
    json j = to_json(sf.fan);
    json mults = json::array();
    for (const Int& m : sf.multiplicities) mults.push_back(int_to_string(m));
    j["multiplicities"] = std::move(mults);
    return j;
}

json to_json(const QuotientPresentation& qp) {
    return json{{"nonvanishing_sets", qp.nonvanishing_sets},
                {"group", to_json(qp.group)},
                {"weights", to_json(qp.weights)}};
}

json to_json(const RayQuotient& rq) {
    return json{{"lattice", to_json(rq.lattice)},
                {"adjacent_rays", rq.adjacent_rays},
                {"images", to_json(rq.images)}};
}

json to_json(const DinfLineClass& c) {
    return json{{"a", int_to_string(c.a)}, {"b", int_to_string(c.b)}, {"p", c.p}};
}

json to_json(const GoodDivisorVerdict& v) {
    json j{{"is_good", v.is_good},
           {"nef", v.nef},
           {"big", v.big},
           {"dot_F", int_to_string(v.dot_f)},
           {"dot_E", int_to_string(v.dot_e)},
           {"self_intersection", int_to_string(v.self_intersection)}};
    if (v.a_d)
        j["a_D"] = *v.a_d;
    else
        j["a_D"] = nullptr;
    return j;
}

json to_json(const GoodSheafVerdict& v) {
    return json{{"is_good", v.is_good},
                {"A0", rat_to_string(v.a0)},
                {"bound", rat_to_string(v.bound)}};
}

json to_json(const StabilityVerdict& v) {
    json per = json::array();
    for (const auto& w : v.per_witness)
        per.push_back(json{{"semistable", w.semistable_ok}, {"stable", w.stable_ok}});
    return json{{"per_witness", std::move(per)},
                {"semistable", v.semistable},
                {"stable", v.stable},
                {"witness_list_only", true}};
}

json to_json(const YoungDiagram& y) {
    json parts = json::array();
    for (unsigned long p : y.parts) parts.push_back(p);
    return parts;
}

json to_json(const FixedPoint& fp) {
    json pairs = json::array();
    for (const auto& [y1, y2] : fp.pairs) pairs.push_back(json::array({to_json(y1), to_json(y2)}));
    json twists = json::array();
    for (const Int& u : fp.u_vec) twists.push_back(int_to_string(u));
    return json{{"pairs", std::move(pairs)}, {"u", std::move(twists)}};
}

HilbertPoly hilbert_poly_from_json(const json& j) {
    require(j.is_array(), "bad_json", "polynomial must be an array of coefficient strings");
    HilbertPoly p;
    for (const auto& c : j) p.alpha.push_back(parse_rat(c.get<std::string>()));
    return p;
}

} // namespace stacky
