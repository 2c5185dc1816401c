#include "heckalg/rational.hpp"

#include "heckalg/errors.hpp"

namespace heckalg {

Scalar parse_rational(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational literal");
    for (char c : text) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
            throw ParseError("bad rational literal '" + text + "'");
    }
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw ParseError("bad rational literal '" + text + "'");
    if (q.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

std::string rational_string(const Scalar& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

bool is_zero_vec(const Vec& v) {
    for (const auto& x : v)
        if (!is_zero(x)) return false;
    return true;
}

Vec add(const Vec& a, const Vec& b) {
    Vec r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec sub(const Vec& a, const Vec& b) {
    Vec r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vec scale(const Scalar& c, const Vec& v) {
    Vec r(v);
    for (auto& x : r) x *= c;
    return r;
}

void add_scaled(Vec& target, const Scalar& c, const Vec& v) {
    for (std::size_t i = 0; i < target.size(); ++i) target[i] += c * v[i];
}

Vec unit_vec(std::size_t n, std::size_t i) {
    Vec r = zero_vec(n);
    r[i] = 1;
    return r;
}

}  // namespace heckalg
