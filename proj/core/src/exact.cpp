#include "johnson/exact.hpp"

#include <stdexcept>

namespace johnson {

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Int& v) { return v.get_str(); }

std::string to_string(const Rat& v) {
    if (v.get_den() == 1) return v.get_num().get_str();
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

namespace {

bool valid_int_token(std::string_view s) {
    if (s.empty()) return false;
    std::size_t k = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (k == s.size()) return false;
    for (; k < s.size(); ++k)
        if (s[k] < '0' || s[k] > '9') return false;
    return true;
}

}  // namespace

Int int_from_string(std::string_view s) {
    if (!valid_int_token(s)) throw std::invalid_argument("bad integer literal: '" + std::string(s) + "'");
    return Int(std::string(s));
}

Rat rat_from_string(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rat(int_from_string(s));
    Int num = int_from_string(s.substr(0, slash));
    Int den = int_from_string(s.substr(slash + 1));
    return make_rat(num, den);
}

}  // namespace johnson
