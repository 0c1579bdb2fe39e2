#pragma once

/**
 * @file ratfunc.hpp
 * @brief Univariate polynomials over Q and the rational function field Q(u).
 *
 * RatFunc is the coefficient field of the whole engine. Its canonical form
 * (gcd-reduced, monic denominator, zero as 0/1) makes structural equality
 * coincide with equality of rational functions.
 */

#include "braidties/rational.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace braidties {

class Poly {
public:
    Poly() = default;
    Poly(int c) : Poly(Rational(c)) {}
    Poly(Rational c);
    /// Coefficients in ascending degree; trailing zeros are trimmed.
    explicit Poly(std::vector<Rational> coeffs);

    static Poly u() { return Poly(std::vector<Rational>{Rational(0), Rational(1)}); }
    static Poly monomial(Rational c, int degree);

    const std::vector<Rational>& coeffs() const { return c_; }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    const Rational& leading() const { return c_.back(); }
    Rational coeff(int d) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly scaled(const Rational& s) const;

    /// Euclidean division; throws MathError for a zero divisor.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
    /// Monic gcd; gcd(0, 0) = 0.
    static Poly gcd(Poly a, Poly b);
    Poly monic() const;

    Rational eval(const Rational& q) const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    /// Human-readable and re-parsable, descending degree: "u^2-3/2*u+1".
    std::string to_string() const;

private:
    void trim();
    std::vector<Rational> c_;
};

class RatFunc {
public:
    RatFunc() : num_(), den_(1) {}
    RatFunc(int c) : num_(c), den_(1) {}
    RatFunc(Rational c) : num_(std::move(c)), den_(1) {}
    RatFunc(Poly p) : num_(std::move(p)), den_(1) {}
    /// Canonicalizes; throws MathError when den is zero.
    RatFunc(Poly num, Poly den);

    static RatFunc u() { return RatFunc(Poly::u()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_.is_one() && num_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    /// The constant value; requires is_constant().
    Rational constant() const;

    RatFunc operator-() const;
    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o);
    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }

    /// Non-throwing division: nullopt when the divisor is zero.
    static std::optional<RatFunc> try_divide(const RatFunc& a, const RatFunc& b);
    RatFunc inverse() const;

    /// Exact value at q; throws MathError at a pole.
    Rational eval(const Rational& q) const;
    std::optional<Rational> try_eval(const Rational& q) const;

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    /// Re-parsable text: "u-1", "(u+1)/(u^2+2)", "-3/2".
    std::string to_string() const;
    /// True when to_string() needs parentheses to be used as a factor.
    bool needs_parens() const;

private:
    void canonicalize();
    Poly num_;
    Poly den_;
};

/// Field-generic helpers so that templates can run over Rational or RatFunc.
inline bool is_zero(const Rational& r) { return r.is_zero(); }
inline bool is_zero(const RatFunc& r) { return r.is_zero(); }

/// Maps a Q(u) coefficient into the field F given the value used for u.
inline const RatFunc& coerce(const RatFunc& c, const RatFunc&) { return c; }
inline Rational coerce(const RatFunc& c, const Rational& u) { return c.eval(u); }

}  // namespace braidties
