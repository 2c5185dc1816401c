#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace heckalg {

// Exact rational scalars. mpq_class keeps values in lowest terms with a
// positive denominator, which is the canonical form assumed everywhere.
using Scalar = mpq_class;
using Vec = std::vector<Scalar>;

inline bool is_zero(const Scalar& x) { return sgn(x) == 0; }

// Accepts "p", "-p", "p/q" with arbitrary-precision integers.
Scalar parse_rational(const std::string& text);

// Canonical rendering: "p" when the denominator is 1, else "p/q".
std::string rational_string(const Scalar& x);

inline Vec zero_vec(std::size_t n) { return Vec(n, Scalar(0)); }

bool is_zero_vec(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Scalar& c, const Vec& v);
void add_scaled(Vec& target, const Scalar& c, const Vec& v);
Vec unit_vec(std::size_t n, std::size_t i);

}  // namespace heckalg
