#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace reeb_orbit {

// Exact rational scalar. Function values, edge lifts and level positions are
// all mpq so that cocycle sums around triangles cancel exactly and mod-1
// comparisons need no tolerance. mpq_class leaves two-argument constructions
// like (3, 6) unreduced, and mpq equality assumes reduced operands, so the
// numerator/denominator constructors canonicalize here.
class Rat : public mpq_class {
  public:
    Rat() = default;
    Rat(const mpq_class& v) : mpq_class(v) {}
    Rat(mpq_class&& v) : mpq_class(std::move(v)) {}
    Rat(int v) : mpq_class(v) {}
    Rat(long v) : mpq_class(v) {}
    Rat(unsigned long v) : mpq_class(v) {}
    Rat(const mpz_class& v) : mpq_class(v) {}
    template <class T, class U>
    Rat(const __gmp_expr<T, U>& e) : mpq_class(e) {}
    template <class P, class Q>
    Rat(const P& p, const Q& q) : mpq_class(p, q) {
        canonicalize();
    }
};

// Largest integer <= q.
mpz_class rat_floor(const Rat& q);

// q - floor(q), in [0, 1).
Rat rat_frac(const Rat& q);

// True iff q has denominator 1.
bool rat_is_integer(const Rat& q);

// Value of an integer rational as long. Throws InvariantError otherwise.
long rat_to_long(const Rat& q);

// Canonical text: "p/q" with q > 1, plain "p" for integers.
std::string rat_str(const Rat& q);

// Accepts "p/q", integer, and decimal ("-0.125", "2.5e-3") forms. Decimals
// convert digit-exactly (0.1 becomes 1/10, not the nearest double). Returns
// nullopt for anything else, including NaN/inf spellings.
std::optional<Rat> parse_rat(const std::string& text);

// Exact conversion; every finite double is a dyadic rational.
Rat rat_from_double(double x);

}  // namespace reeb_orbit
