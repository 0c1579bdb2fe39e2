#pragma once

/**
 * @file specht.hpp
 * @brief Symmetrizers, Gyoja elements and the Specht modules S(Lambda) inside
 * the tensor space.
 *
 * Hecke-algebra computations use their own small type (HeckeElement) with
 * the direct product T_x T_i = T_{x s_i} on ascents and
 * u T_{x s_i} + (u-1) T_x on descents; elements are moved into E_n(u) with
 * to_element when they have to act on tensors.
 *
 * For a label Lambda the blocks of A_Lambda are consecutive intervals; the
 * m_s blocks of group s have size |lambda^s|. Block b (1-based) of v_Lambda
 * carries upper index b and lower indices following the rows of lambda^s.
 */

#include "braidties/algebra.hpp"
#include "braidties/linalg.hpp"
#include "braidties/tensor.hpp"

#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace braidties {

// ---------------------------------------------------------------- group algebra

using GroupElement = std::map<Permutation, Rational>;

GroupElement group_mul(const GroupElement& a, const GroupElement& b);
GroupElement group_add(GroupElement a, const GroupElement& b, const Rational& scale = Rational(1));

struct Symmetrizers {
    GroupElement r;  ///< sum over the row stabilizer
    GroupElement c;  ///< signed sum over the column stabilizer
    GroupElement s;  ///< c * r
    Rational scalar; ///< s * s = scalar * s
};

/// Throws std::logic_error if s is not an idempotent up to a nonzero scalar.
Symmetrizers symmetrizers(const IntPartition& lambda);

// ---------------------------------------------------------------- Hecke algebra

class HeckeElement {
public:
    using Terms = std::map<Permutation, RatFunc>;

    HeckeElement() = default;
    explicit HeckeElement(int n) : n_(n) {}
    static HeckeElement T(const Permutation& w, RatFunc c = RatFunc(1));
    static HeckeElement one(int n) { return T(Permutation::identity(n)); }

    int n() const { return n_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    RatFunc coeff(const Permutation& w) const;
    void add_term(const Permutation& w, const RatFunc& c);

    HeckeElement& operator+=(const HeckeElement& o);
    HeckeElement& operator-=(const HeckeElement& o);
    HeckeElement& operator*=(const RatFunc& c);
    friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
    friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
    friend HeckeElement operator*(HeckeElement a, const RatFunc& c) { return a *= c; }
    friend HeckeElement operator*(const HeckeElement& a, const HeckeElement& b);
    friend bool operator==(const HeckeElement&, const HeckeElement&) = default;

private:
    int n_ = 0;
    Terms terms_;
};

/// sum_{w in X} T_w.
HeckeElement hecke_iota(const std::vector<Permutation>& X, int n);
/// sum_{w in X} (-u)^{-l(w)} T_w.
HeckeElement hecke_epsilon(const std::vector<Permutation>& X, int n);

struct GyojaElement {
    HeckeElement c;  ///< T_{w^{-1}} y_{lambda'} T_w
    HeckeElement r;  ///< x_lambda
    HeckeElement e;  ///< c * r
};
GyojaElement gyoja_element(const IntPartition& lambda);

/// Embeds a Hecke element of S_m into E_n(u), moving letters k to k + offset.
Element to_element(const HeckeElement& h, int n, int offset = 0);
/// E_A T_w -> T_w; a homomorphism onto H_n(u) (E_i -> 1).
HeckeElement collapse(const Element& x);

/// If c z r = C c r for the given z, returns C; nullopt when not proportional.
std::optional<RatFunc> proportionality(const HeckeElement& lhs, const HeckeElement& base);

// ---------------------------------------------------------------- labels

struct BlockStructure {
    SpechtLabel label;
    SetPartition A;
    std::vector<std::vector<int>> blocks;  ///< consecutive intervals I_1..I_l
    std::vector<int> group;                ///< entry index s of each block
    std::vector<int> first_block;          ///< first block index of each entry s
};

BlockStructure block_structure(const SpechtLabel& label);

/// The block permutation of {1..n} moving block first+k to block first+sigma(k).
Permutation block_permutation(const BlockStructure& bs, int s, const Permutation& sigma);

TensorKey v_Lambda(const SpechtLabel& label);
/// (r_{mu^1} (x) ... ) acting on v_Lambda, as an element of E_n(u).
Element row_block_symmetrizer(const SpechtLabel& label);
TensorVector<RatFunc> w_Lambda(const SpechtLabel& label);

struct ELambdaFactors {
    Element column_blocks;  ///< (c_{mu^1} (x) ... ) over block permutations
    Element hecke;          ///< (c_{lambda^1}(u)^{(x) m_1} (x) ... )
    Element tie;            ///< E_{A_Lambda}
    Element product;
};
/// Throws std::logic_error if the three factors fail to commute.
ELambdaFactors e_Lambda_factors(const SpechtLabel& label);
Element e_Lambda(const SpechtLabel& label);

// ---------------------------------------------------------------- modules

/// Span closure of act(e_Lambda, w_Lambda) under every T_k and E_k, with u = q.
template <class F>
EchelonBasis<F> specht_span(const SpechtLabel& label, const F& q);

struct SpechtModule {
    SpechtLabel label;
    std::size_t dim = 0;
    bool exact = false;
    std::vector<TensorVector<RatFunc>> basis;  ///< filled in exact mode
    std::vector<Rational> points;              ///< specialization points otherwise
};

struct SpechtOptions {
    /// Exact over Q(u) up to this n; specialized above.
    int exact_up_to = 3;
    std::uint64_t seed = 0x5eed;
    bool force = false;
};

/// Throws std::logic_error if the seed e_Lambda w_Lambda is zero.
SpechtModule specht_module(const SpechtLabel& label, const SpechtOptions& opts = {});

struct ClassificationEntry {
    SpechtLabel label;
    std::size_t dim = 0;
};

struct ClassificationReport {
    int n = 0;
    std::vector<ClassificationEntry> entries;
    long sum_squares = 0;
    long dim_algebra = 0;
    bool equal = false;
    bool distinct = false;  ///< pairwise distinct (A_Lambda, lambdas, mus) data
};

ClassificationReport classification_report(int n, const SpechtOptions& opts = {});

// ---------------------------------------------------------------- checks

/// u^{sum of inversions of the lower indices within each upper-index group}.
RatFunc tensor_weight(TensorKey k, int n);
/// Diagonal on pure tensors with the weights above.
RatFunc tensor_form(const TensorVector<RatFunc>& v, const TensorVector<RatFunc>& w);

/// act(E_B, w_Lambda) == (B <= A_Lambda ? w_Lambda : 0).
bool e_action_check(const SpechtLabel& label, const SetPartition& B);

/// dim of e_Lambda S(Lambda) (expected 1), exact.
std::size_t e_Lambda_image_rank(const SpechtLabel& label);

/**
 * Rank of c_lambda(u) on the weight space mu inside N (upper indices all 1,
 * lower indices with content mu); nonzero exactly when mu is dominated by lambda.
 */
std::size_t gyoja_weight_rank(const IntPartition& lambda, const IntPartition& mu);

/// Traces of every basis key of G on S(Lambda) at u = q.
std::vector<Rational> character(const SpechtLabel& label, const Rational& q);

}  // namespace braidties
