// Command-line front end: one subcommand per operation, JSON on stdout,
// exact rationals as "num/den" strings. Exit codes: 0 success, 2 violated
// precondition (machine-readable {code, message}), 64 usage errors.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "stacky/fan.hpp"
#include "stacky/fixed_points.hpp"
#include "stacky/json_io.hpp"
#include "stacky/picard.hpp"
#include "stacky/stability.hpp"

using namespace stacky;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPrecondition = 2;
constexpr int kExitUsage = 64;

void emit(const json& j) { std::cout << j.dump() << "\n"; }

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

json read_input_json(const std::string& path) {
    if (path == "-") return json::parse(std::cin);
    std::ifstream in(path);
    require(in.good(), "bad_input", "cannot open input file: " + path);
    return json::parse(in);
}

DivisorClass class_from_options(long p, const std::string& name, const std::string& coords,
                                const std::optional<long>& rpow) {
    int picked = (!name.empty() ? 1 : 0) + (!coords.empty() ? 1 : 0) + (rpow ? 1 : 0);
    require(picked == 1, "bad_input", "give exactly one of --name, --coords, --r-power");
    if (!name.empty()) return named_class(name, p);
    if (rpow) return r_power(Int(*rpow), p);
    auto parts = split(coords, ',');
    require(parts.size() == 2, "bad_input", "--coords wants 'a_omega,a_dinf'");
    return DivisorClass(parse_int(parts[0]), parse_int(parts[1]), p);
}

FramingVector framing_from_string(const std::string& s) {
    FramingVector w;
    for (const auto& tok : split(s, ',')) {
        Int v = parse_int(tok);
        require(v.fits_slong_p(), "bad_input", "framing entry out of range");
        w.w.push_back(v.get_si());
    }
    return w;
}

json stability_check(const json& in) {
    std::string mode = in.value("mode", "delta");
    if (mode == "delta") {
        FramedNumData parent;
        parent.p = hilbert_poly_from_json(in.at("parent").at("P"));
        parent.eps = in.at("parent").at("eps").get<int>();
        StabilityPoly delta{hilbert_poly_from_json(in.at("delta"))};
        std::vector<DeltaSubWitness> subs;
        for (const auto& s : in.value("subs", json::array()))
            subs.push_back({hilbert_poly_from_json(s.at("P")),
                            parse_rat(s.at("alpha_d").get<std::string>()),
                            s.at("eps").get<int>()});
        return to_json(delta_semistable_check(parent, delta, subs));
    }
    if (mode == "mu") {
        FramedNumData parent;
        parent.eps = in.at("parent").at("eps").get<int>();
        parent.ork = parse_rat(in.at("parent").at("ork").get<std::string>());
        parent.deg = parse_rat(in.at("parent").at("deg").get<std::string>());
        Rat delta1 = parse_rat(in.at("delta1").get<std::string>());
        std::vector<MuSubWitness> subs;
        for (const auto& s : in.value("subs", json::array()))
            subs.push_back({parse_rat(s.at("deg").get<std::string>()),
                            parse_rat(s.at("ork").get<std::string>()), s.at("eps").get<int>()});
        return to_json(mu_stable_check(parent, delta1, subs));
    }
    throw precondition_error("bad_input", "mode must be 'delta' or 'mu'");
}

std::uint64_t enumeration_cap(const std::optional<std::uint64_t>& flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("FMT_LIMIT")) {
        Int v = parse_int(env);
        require(v > 0 && v.fits_ulong_p(), "bad_input", "FMT_LIMIT must be a positive integer");
        return v.get_ui();
    }
    return kDefaultEnumerationCap;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants of stacky Hirzebruch surfaces and framed-sheaf moduli"};
    app.require_subcommand(1);
    bool json_flag = false; // JSON is the only output format; flag kept for scripts
    app.add_flag("--json", json_flag, "emit JSON (always on)");

    long fan_p = 0;
    auto* fan_cmd = app.add_subcommand("fan", "stacky fan and quotient presentation");
    fan_cmd->add_option("--p", fan_p, "surface parameter")->required();
    fan_cmd->add_flag("--json", json_flag, "emit JSON (always on)");

    std::string gale_input;
    auto* gale_cmd = app.add_subcommand("gale", "Gale dual of a map into a f.g. abelian group");
    gale_cmd->add_option("--input", gale_input, "JSON file ('-' for stdin)")->required();

    long pic_p = 0;
    auto* pic_cmd = app.add_subcommand("picard", "generators, pairing and restriction tables");
    pic_cmd->add_option("--p", pic_p, "surface parameter")->required();

    long res_p = 0;
    std::string res_name, res_coords;
    std::optional<long> res_rpow;
    auto* res_cmd = app.add_subcommand("restrict", "restrict a class to the gerbe divisor");
    res_cmd->add_option("--p", res_p)->required();
    res_cmd->add_option("--name", res_name, "F1|F2|E|Dinf|omega");
    res_cmd->add_option("--coords", res_coords, "a_omega,a_dinf");
    res_cmd->add_option("--r-power", res_rpow, "power of the tautological bundle");

    long int_p = 0;
    std::string int_x, int_y;
    auto* int_cmd = app.add_subcommand("intersect", "rational intersection number");
    int_cmd->add_option("--p", int_p)->required();
    int_cmd->add_option("--x", int_x, "a_omega,a_dinf or class name")->required();
    int_cmd->add_option("--y", int_y, "a_omega,a_dinf or class name")->required();

    long deg_p = 0;
    std::string deg_a = "0", deg_b = "0";
    auto* deg_cmd = app.add_subcommand("degree", "degree of L1^a L2^b on the gerbe divisor");
    deg_cmd->add_option("--p", deg_p)->required();
    deg_cmd->add_option("--a", deg_a, "L1 exponent")->required();
    deg_cmd->add_option("--b", deg_b, "L2 exponent");

    auto* stab_cmd = app.add_subcommand("stability", "framed stability comparators");
    std::string stab_input;
    auto* stab_check = stab_cmd->add_subcommand("check", "evaluate a witness list");
    stab_check->add_option("--input", stab_input, "JSON file ('-' for stdin)")->required();
    stab_cmd->require_subcommand(1);

    long dim_p = 0, dim_r = 0;
    std::string dim_delta, dim_w;
    auto* dim_cmd = app.add_subcommand("dim", "moduli space dimension");
    dim_cmd->add_option("--p", dim_p)->required();
    dim_cmd->add_option("--r", dim_r)->required();
    dim_cmd->add_option("--delta", dim_delta, "discriminant NUM/DEN")->required();
    dim_cmd->add_option("--w", dim_w, "framing vector w0,w1,...")->required();

    long sum_p = 0, sum_j = 0;
    auto* sum_cmd = app.add_subcommand("sum", "twisted-sector root-of-unity sum");
    sum_cmd->add_option("--p", sum_p)->required();
    sum_cmd->add_option("--j", sum_j)->required();

    long todd_p = 0;
    auto* todd_cmd = app.add_subcommand("todd", "second Todd class integral");
    todd_cmd->add_option("--p", todd_p)->required();

    long fp_p = 0, fp_r = 0;
    std::string fp_u, fp_delta, fp_w;
    bool fp_count_only = false;
    std::optional<std::uint64_t> fp_limit;
    auto* fp_cmd = app.add_subcommand("fixed-points", "torus-fixed points of the moduli space");
    fp_cmd->add_option("--p", fp_p)->required();
    fp_cmd->add_option("--r", fp_r)->required();
    fp_cmd->add_option("--u", fp_u, "first Chern class multiple")->required();
    fp_cmd->add_option("--delta", fp_delta, "discriminant NUM/DEN")->required();
    fp_cmd->add_option("--w", fp_w, "framing vector w0,...,w_{p-1}")->required();
    fp_cmd->add_flag("--count-only", fp_count_only, "emit the count instead of the points");
    fp_cmd->add_option("--limit", fp_limit, "enumeration cap (FMT_LIMIT also honored)");

    long gd_p = 0;
    std::string gd_f = "0", gd_e = "0";
    auto* gd_cmd = app.add_subcommand("good-divisor", "good framing divisor test on F_p");
    gd_cmd->add_option("--p", gd_p)->required();
    gd_cmd->add_option("--f", gd_f, "coefficient of the fibre F")->required();
    gd_cmd->add_option("--e", gd_e, "coefficient of the exceptional curve E")->required();

    std::string gs_degrees;
    long gs_ad = 1, gs_kd = 1;
    std::string gs_selfint;
    auto* gs_cmd = app.add_subcommand("good-sheaf", "good framing sheaf test (split case)");
    gs_cmd->add_option("--degrees", gs_degrees, "summand degrees d1,d2,...")->required();
    gs_cmd->add_option("--a-d", gs_ad, "Cartier multiplier a_D")->required();
    gs_cmd->add_option("--k-d", gs_kd, "generic stabilizer order")->required();
    gs_cmd->add_option("--dd-selfint", gs_selfint, "(a_D D)^2 as NUM/DEN")->required();

    long gc_k = 0, gc_r = 0;
    auto* gc_cmd = app.add_subcommand("gen-sheaf-cond", "generating-sheaf vanishing condition");
    gc_cmd->add_option("--k", gc_k, "root order")->required();
    gc_cmd->add_option("--r", gc_r, "number of tautological powers")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*fan_cmd) {
            StackyFan sf = root_stacky_fan(fan_p);
            QuotientPresentation qp = quotient_presentation(sf);
            json j = to_json(sf);
            j["p"] = fan_p;
            j["group"] = to_json(qp.group);
            j["weights"] = to_json(qp.weights);
            j["nonvanishing_sets"] = qp.nonvanishing_sets;
            emit(j);
        } else if (*gale_cmd) {
            json in = read_input_json(gale_input);
            IntMatrix beta = int_matrix_from_json(in.at("matrix"));
            FGAbelianGroup target = in.contains("target")
                                        ? fg_group_from_json(in.at("target"))
                                        : FGAbelianGroup::free_group(beta.rows());
            GaleDual gd = gale_dual(beta, target);
            emit(json{{"group", to_json(gd.group)}, {"weights", to_json(gd.weights)}});
        } else if (*pic_cmd) {
            json gens, restr;
            for (const char* n : {"F1", "F2", "E", "Dinf", "omega"}) {
                DivisorClass c = named_class(n, pic_p);
                gens[n] = json::array({int_to_string(c.a_omega), int_to_string(c.a_dinf)});
                restr[n] = to_json(restrict_to_dinf(c));
            }
            DivisorClass om = named_class(NamedClass::Omega, pic_p);
            DivisorClass di = named_class(NamedClass::Dinf, pic_p);
            json pairing = json::array(
                {json::array({rat_to_string(intersect(om, om)), rat_to_string(intersect(om, di))}),
                 json::array(
                     {rat_to_string(intersect(di, om)), rat_to_string(intersect(di, di))})});
            emit(json{{"p", pic_p},
                      {"basis", json::array({"omega", "Dinf"})},
                      {"generators", gens},
                      {"pairing", pairing},
                      {"restrictions", restr}});
        } else if (*res_cmd) {
            DivisorClass c = class_from_options(res_p, res_name, res_coords, res_rpow);
            emit(to_json(restrict_to_dinf(c)));
        } else if (*int_cmd) {
            auto parse_side = [&](const std::string& s) {
                if (s.find(',') == std::string::npos) return named_class(s, int_p);
                auto parts = split(s, ',');
                require(parts.size() == 2, "bad_input", "class wants 'a_omega,a_dinf'");
                return DivisorClass(parse_int(parts[0]), parse_int(parts[1]), int_p);
            };
            emit(json{{"value", rat_to_string(intersect(parse_side(int_x), parse_side(int_y)))}});
        } else if (*deg_cmd) {
            require(deg_p >= 1, "bad_parameter", "p must be a positive integer");
            DinfLineClass c{parse_int(deg_a), mod_floor(parse_int(deg_b), Int(deg_p)), deg_p};
            emit(json{{"value", rat_to_string(degree_on_dinf(c))}});
        } else if (*stab_check) {
            emit(stability_check(read_input_json(stab_input)));
        } else if (*dim_cmd) {
            FramingVector w = framing_from_string(dim_w);
            emit(json{{"dimension",
                       rat_to_string(dimension(dim_p, dim_r, parse_rat(dim_delta), w))}});
        } else if (*sum_cmd) {
            emit(json{{"value", rat_to_string(roots_of_unity_sum(sum_p, sum_j))}});
        } else if (*todd_cmd) {
            emit(json{{"value", rat_to_string(todd2_integral(todd_p))}});
        } else if (*fp_cmd) {
            FramingVector w = framing_from_string(fp_w);
            Int u = parse_int(fp_u);
            Rat delta = parse_rat(fp_delta);
            if (fp_count_only) {
                Int count = count_fixed_points(fp_p, fp_r, u, delta, w);
                // numbers only while exact in doubles; decimal strings beyond
                if (count < Int(1) << 53)
                    emit(json{{"count", count.get_ui()}});
                else
                    emit(json{{"count", int_to_string(count)}});
            } else {
                auto res =
                    enumerate_fixed_points(fp_p, fp_r, u, delta, w, enumeration_cap(fp_limit));
                json pts = json::array();
                for (const auto& point : res.points) pts.push_back(to_json(point));
                emit(json{{"points", std::move(pts)},
                          {"count", res.points.size()},
                          {"truncated", res.truncated}});
            }
        } else if (*gd_cmd) {
            require(gd_p >= 1, "bad_parameter", "p must be a positive integer");
            emit(to_json(
                good_framing_divisor_check(CoarseDivisor{parse_int(gd_f), parse_int(gd_e), gd_p})));
        } else if (*gs_cmd) {
            std::vector<Rat> degrees;
            for (const auto& tok : split(gs_degrees, ',')) degrees.push_back(parse_rat(tok));
            emit(to_json(good_framing_sheaf_check(degrees, gs_ad, gs_kd, parse_rat(gs_selfint))));
        } else if (*gc_cmd) {
            emit(json{{"holds", generating_sheaf_condition(gc_k, gc_r)}});
        }
    } catch (const precondition_error& e) {
        std::cout << json{{"code", e.code()}, {"message", e.what()}}.dump() << "\n";
        return kExitPrecondition;
    } catch (const json::exception& e) {
        std::cout << json{{"code", "bad_json"}, {"message", e.what()}}.dump() << "\n";
        return kExitPrecondition;
    }
    return kExitOk;
}
