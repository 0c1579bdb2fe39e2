#pragma once

/**
 * @file algebra.hpp
 * @brief The braids-and-ties algebra E_n(u) in the normal form E_A T_w.
 *
 * Elements are sparse Q(u)-combinations of basis keys (A, w) standing for
 * E_A T_w. The product of two keys is
 *
 *     (E_A T_w)(E_B T_v) = E_{A v wB} T_w T_v,
 *
 * after which T_w T_v is expanded by right-multiplying the letters of a
 * reduced word of v one at a time. For a term E_C T_x and a letter s_i:
 *
 *   x(i) < x(i+1):  E_C T_{x s_i}
 *   x(i) > x(i+1):  E_C T_{x s_i} + (u-1) E_{C'} T_{x s_i} + (u-1) E_{C'} T_x,
 *                   C' = C v <{x(i), x(i+1)}>.
 *
 * The descent branch is the quadratic relation moved to the front through
 * T_{x s_i} E_i = E_{x s_i {i,i+1}} T_{x s_i}; note x s_i {i,i+1} is the pair
 * of *images* {x(i), x(i+1)}. Getting this pair wrong still yields an
 * associative-looking product on small inputs, so verify_relations is the
 * guard for it.
 */

#include "braidties/combinatorics.hpp"
#include "braidties/ratfunc.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace braidties {

struct BasisKey {
    SetPartition A;
    Permutation w;

    friend bool operator==(const BasisKey&, const BasisKey&) = default;
    friend std::strong_ordering operator<=>(const BasisKey& a, const BasisKey& b) {
        if (auto c = a.A <=> b.A; c != 0) return c;
        return a.w <=> b.w;
    }
};

/// All n! B_n basis keys, ascending.
std::vector<BasisKey> basis_keys(int n);

class Element {
public:
    using Terms = std::map<BasisKey, RatFunc>;

    Element() = default;
    explicit Element(int n) : n_(n) {}
    static Element zero(int n) { return Element(n); }
    static Element one(int n);
    static Element scalar(int n, RatFunc c);
    static Element basis(const BasisKey& k, RatFunc c = RatFunc(1));

    int n() const { return n_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// True when the element is c * 1.
    bool is_scalar() const;
    RatFunc coeff(const BasisKey& k) const;

    void add_term(const BasisKey& k, const RatFunc& c);

    Element operator-() const;
    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    Element& operator*=(const RatFunc& c);
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(Element a, const RatFunc& c) { return a *= c; }
    friend Element operator*(const RatFunc& c, Element a) { return a *= c; }
    /// Algebra product; throws SizeMismatch for different n.
    friend Element operator*(const Element& x, const Element& y);

    friend bool operator==(const Element& a, const Element& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

private:
    int n_ = 0;
    Terms terms_;
};

Element mul(const Element& x, const Element& y);
/// Product of two basis keys (memoized per key pair).
const Element& mul_basis(const BasisKey& a, const BasisKey& b);

// ---------------------------------------------------------------- generators

enum class GenKind { T, Tinv, E };

struct Letter {
    GenKind kind;
    int index;
    friend bool operator==(const Letter&, const Letter&) = default;
};
using GeneratorWord = std::vector<Letter>;

/// T_i, T_i^{-1} = T_i + (u^{-1} - 1) E_i (1 + T_i), or E_i; throws std::out_of_range.
Element gen(GenKind kind, int i, int n);
/// Left-to-right product of the letters (the empty word is 1).
Element evaluate(const GeneratorWord& word, int n);
/// T_w for the canonical reduced word of w.
Element t_element(const Permutation& w);
/// T_w^{-1} as the reversed product of inverse letters.
Element t_inverse_element(const Permutation& w);

/// E_{ij} by the defining conjugation; asserts the single-term result ({i,j} joined, e).
Element e_pair(int i, int j, int n);
/// E_A as the product of E_{i0 i} over blocks; asserts the single-term result (A, e).
Element e_set(const SetPartition& A);

/**
 * A generator word evaluating to the basis element E_A T_w: the E_{i0 i}
 * conjugation words for every block, then the reduced word of w.
 */
GeneratorWord word_expand(const BasisKey& key);

// ---------------------------------------------------------------- involutions and the form

/// Antiautomorphism fixing T_i and E_i: (A, w) -> (w^{-1} A, w^{-1}).
Element star(const Element& x);
/// Automorphism i -> n - i on generator indices.
Element flip(const Element& x);
/// Coefficient of (top, e).
RatFunc epsilon(const Element& x);
/// epsilon(star(x) y).
RatFunc form(const Element& x, const Element& y);
/// The (top, e)-coefficient of prod_{A0 < A} (1 - E_A) E_{A0}.
Rational moebius_coefficient(const SetPartition& A0);

struct SpecializedElement {
    int n = 0;
    std::map<BasisKey, Rational> terms;
    friend bool operator==(const SpecializedElement&, const SpecializedElement&) = default;
};
/// Evaluates every coefficient at u = q; throws MathError at a pole.
SpecializedElement specialize(const Element& x, const Rational& q);

// ---------------------------------------------------------------- relations

struct LinearWord {
    std::vector<std::pair<RatFunc, GeneratorWord>> terms;
};

struct RelationInstance {
    std::string family;  ///< "E1".."E9" or "inverse"
    std::string text;
    std::vector<LinearWord> sides;  ///< all sides must agree
};

/// Every instance of the defining relations (plus T_i T_i^{-1} = 1) at size n.
std::vector<RelationInstance> relation_instances(int n);
Element evaluate(const LinearWord& lw, int n);

struct RelationCheck {
    std::string family;
    std::string text;
    bool pass = false;
};

struct RelationReport {
    int n = 0;
    std::vector<RelationCheck> checks;
    bool pass = false;
};

RelationReport verify_relations(int n);

std::string to_string(const Letter& l);
std::string to_string(const GeneratorWord& w);

}  // namespace braidties
