#pragma once

// Exact sparse multivariate Laurent polynomials over the integers.
//
// Indeterminates come in families (x, y, q, t, u and a single generic
// variable printed as `z`). Terms are kept in a canonical order: total degree
// descending, then lexicographic on VarId with larger exponents first. That
// order is a translation-invariant total order on exponent vectors, so the
// first term is a genuine leading term and exact division can use it.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace clusterchar {

using BigInt = mpz_class;

enum class Family : std::uint8_t { x, y, q, t, u, generic };

std::string_view family_name(Family f);

struct VarId {
    Family family = Family::x;
    std::int32_t index = 0;

    friend auto operator<=>(const VarId&, const VarId&) = default;
    friend bool operator==(const VarId&, const VarId&) = default;

    /// `x3`, `q1`, `z` (generic index 0) or `z2`.
    std::string name() const;
};

/// Parses a variable name such as `t12`; throws ParseError.
VarId parse_var(std::string_view name);

class Monomial {
public:
    using Entry = std::pair<VarId, int>;

    Monomial() = default;

    /// Sorts, merges repeated variables and drops zero exponents.
    static Monomial from_entries(std::vector<Entry> entries);
    static Monomial variable(VarId v, int exponent = 1);

    int exponent(VarId v) const;
    int total_degree() const { return degree_; }
    bool is_one() const { return entries_.empty(); }
    std::span<const Entry> entries() const { return entries_; }

    Monomial operator*(const Monomial& other) const;
    Monomial inverse() const;
    Monomial pow(int k) const;

    /// Drops every variable of the given family.
    Monomial without(Family f) const;
    /// Keeps only the variables of the given family.
    Monomial only(Family f) const;

    std::string to_string() const;

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<Entry> entries_;  // ascending VarId, no zero exponents
    int degree_ = 0;
};

/// Strict "comes before" relation of the canonical term order.
struct CanonicalOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

class LaurentPoly {
public:
    using TermMap = std::map<Monomial, BigInt, CanonicalOrder>;

    LaurentPoly() = default;
    LaurentPoly(long constant);  // NOLINT(google-explicit-constructor)
    LaurentPoly(const BigInt& constant);  // NOLINT(google-explicit-constructor)

    static LaurentPoly variable(VarId v);
    static LaurentPoly variable(Family f, int index) { return variable(VarId{f, index}); }
    static LaurentPoly monomial(const Monomial& m, const BigInt& coeff = 1);

    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }

    /// The single (monomial, coefficient) pair if this is a monomial.
    std::optional<std::pair<Monomial, BigInt>> as_monomial() const;
    BigInt coefficient(const Monomial& m) const;

    void add_term(const Monomial& m, const BigInt& coeff);

    LaurentPoly& operator+=(const LaurentPoly& other);
    LaurentPoly& operator-=(const LaurentPoly& other);
    LaurentPoly& operator*=(const LaurentPoly& other);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a);

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

    LaurentPoly pow(unsigned k) const;
    LaurentPoly times(const Monomial& m, const BigInt& coeff = 1) const;

    /// Canonical text form, e.g. `t2*t1 - q2` or `x2^-1*x1 + 2`.
    std::string to_string() const;

private:
    TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);
std::ostream& operator<<(std::ostream& os, const Monomial& m);

/// Total order on polynomials used for deterministic sets.
bool canonical_less(const LaurentPoly& a, const LaurentPoly& b);

struct CanonicalPolyLess {
    bool operator()(const LaurentPoly& a, const LaurentPoly& b) const { return canonical_less(a, b); }
};

namespace vars {
inline LaurentPoly x(int i) { return LaurentPoly::variable(Family::x, i); }
inline LaurentPoly y(int i) { return LaurentPoly::variable(Family::y, i); }
inline LaurentPoly q(int i) { return LaurentPoly::variable(Family::q, i); }
inline LaurentPoly t(int i) { return LaurentPoly::variable(Family::t, i); }
inline LaurentPoly u(int i) { return LaurentPoly::variable(Family::u, i); }
inline LaurentPoly z() { return LaurentPoly::variable(Family::generic, 0); }
}  // namespace vars

using Substitution = std::map<VarId, LaurentPoly>;

/// Simultaneous ring-homomorphic substitution. Variables outside `sigma` are
/// fixed. A variable occurring with a negative exponent must map to a
/// monomial with coefficient +-1, otherwise NonInvertibleImage is thrown.
LaurentPoly substitute(const LaurentPoly& p, const Substitution& sigma);

LaurentPoly partial_derivative(const LaurentPoly& p, VarId v);

/// True iff every coefficient is strictly positive; the zero polynomial is
/// subtraction-free.
bool is_subtraction_free(const LaurentPoly& p);

/// Terms with a negative coefficient, in canonical order.
std::vector<std::pair<Monomial, BigInt>> negative_terms(const LaurentPoly& p);

/// Replaces every variable of the family by 1.
LaurentPoly specialize_ones(const LaurentPoly& p, Family f);

/// Coefficient of y^e: the sum of the terms whose y-part is exactly
/// y_1^{e_1} ... y_m^{e_m}, with the y-variables removed.
LaurentPoly graded_coefficient(const LaurentPoly& p, std::span<const int> e);

/// The distinct y-exponent vectors occurring in p (length m, y_1..y_m).
std::vector<std::vector<int>> y_support(const LaurentPoly& p, int m);

/// Exact quotient a / b; throws NotExactlyDivisible when b does not divide a.
LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b);

/// Parses the text form. Accepts + - * / ^ and parentheses; `/` must divide
/// exactly and negative powers require a monomial base.
LaurentPoly parse_laurent(std::string_view text);

}  // namespace clusterchar
