#include "stacky/rational.hpp"

#include <cctype>

namespace stacky {

std::string rat_to_string(const Rat& q) {
    Rat r = q;
    r.canonicalize();
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string int_to_string(const Int& n) { return n.get_str(); }

namespace {

bool valid_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

Int parse_int(const std::string& s) {
    require(valid_integer_token(s), "bad_integer", "not an integer: '" + s + "'");
    return Int(s, 10);
}

Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(parse_int(s));
    Int num = parse_int(s.substr(0, slash));
    Int den = parse_int(s.substr(slash + 1));
    return make_rat(num, den);
}

Int mod_floor(const Int& n, const Int& m) {
    require(m > 0, "bad_modulus", "modulus must be positive");
    Int r = n % m;
    if (r < 0) r += m;
    return r;
}

} // namespace stacky
