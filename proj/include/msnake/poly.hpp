#pragma once

#include <gmpxx.h>

#include <compare>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "msnake/errors.hpp"

namespace msnake {

using Json = nlohmann::ordered_json;

// Exponent triple of a Laurent monomial x^ex y^ey z^ez.  Ordered
// lexicographically, which fixes the canonical term order everywhere.
struct ExpTriple {
    int ex = 0;
    int ey = 0;
    int ez = 0;

    friend auto operator<=>(const ExpTriple&, const ExpTriple&) = default;

    ExpTriple operator+(const ExpTriple& o) const { return {ex + o.ex, ey + o.ey, ez + o.ez}; }
    ExpTriple operator-(const ExpTriple& o) const { return {ex - o.ex, ey - o.ey, ez - o.ez}; }
    ExpTriple operator-() const { return {-ex, -ey, -ez}; }
};

// Sparse Laurent polynomial in x, y, z over arbitrary-precision integers.
// Invariants: no zero coefficients are stored, and terms iterate in
// lexicographic exponent order, so equality is plain term-map equality and
// serialization is deterministic.
class TriPoly {
  public:
    using TermMap = std::map<ExpTriple, mpz_class>;

    TriPoly() = default;

    static TriPoly constant(const mpz_class& c);
    static TriPoly monomial(ExpTriple e, const mpz_class& c = 1);
    static TriPoly x(int k = 1) { return monomial({k, 0, 0}); }
    static TriPoly y(int k = 1) { return monomial({0, k, 0}); }
    static TriPoly z(int k = 1) { return monomial({0, 0, k}); }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    // Coefficient at e; zero when the term is absent.
    mpz_class coeff(ExpTriple e) const;

    // Adds c * x^e, merging with any existing term and dropping zeros.
    void add_term(ExpTriple e, const mpz_class& c);

    // Multiplies by the monomial c * x^e in place.
    void scale(ExpTriple e, const mpz_class& c);

    TriPoly& operator+=(const TriPoly& q);
    TriPoly& operator-=(const TriPoly& q);
    friend TriPoly operator+(TriPoly p, const TriPoly& q) { return p += q; }
    friend TriPoly operator-(TriPoly p, const TriPoly& q) { return p -= q; }
    friend TriPoly operator*(const TriPoly& p, const TriPoly& q);

    bool operator==(const TriPoly&) const = default;

    // Human-readable form, leading term first: "x^4 y^-1 + 2 x^2".
    std::string str() const;

  private:
    TermMap terms_;
};

TriPoly poly_mul(const TriPoly& p, const TriPoly& q);

// Exact quotient p / q; throws NotDivisible when none exists and
// DivisionByZero when q = 0.
TriPoly poly_exact_div(const TriPoly& p, const TriPoly& q);

// Exact evaluation at an integer point.  The result is rational because
// exponents may be negative; DivisionByZero if a negative exponent meets a
// zero base.
mpq_class poly_eval_ints(const TriPoly& p, const mpz_class& x0, const mpz_class& y0,
                         const mpz_class& z0);

// Support as a canonically ordered list of exponent triples.
std::vector<ExpTriple> poly_support(const TriPoly& p);

// p * x^d (Laurent shift; always exact).
TriPoly poly_shift(const TriPoly& p, ExpTriple d);

// Substitutes x -> x^2, y -> y^2, z -> z^2 (doubles every exponent).
TriPoly poly_double_exponents(const TriPoly& p);

// Inverse of the above; throws std::logic_error on any odd exponent.
TriPoly poly_halve_exponents(const TriPoly& p);

// JSON term list {"terms":[{"ex":..,"ey":..,"ez":..,"c":"<decimal>"}]} in
// canonical order; coefficients as decimal strings.
Json poly_to_json(const TriPoly& p);
TriPoly poly_from_json(const Json& j);

}  // namespace msnake
