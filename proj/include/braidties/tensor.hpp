#pragma once

/**
 * @file tensor.hpp
 * @brief The tensor space V^{(x)n} with V spanned by v_i^j, 1 <= i, j <= n.
 *
 * A pure tensor is packed into 64 bits, one byte per position: low nibble
 * the lower index i, high nibble the upper index j. Vectors are sparse maps
 * from packed keys to coefficients, templated on the field so the same code
 * runs over Q(u) and over Q at a chosen value of u.
 *
 * On positions (k, k+1) holding v_{i1}^{j1} (x) v_{i2}^{j2}:
 *
 *   E_k keeps the tensor iff j1 == j2, else kills it.
 *   T_k swaps when j1 != j2; when j1 == j2 it is the Jimbo matrix:
 *       i1 == i2: u * same
 *       i1 <  i2: swap
 *       i1 >  i2: u * swap + (u-1) * same
 */

#include "braidties/algebra.hpp"
#include "braidties/linalg.hpp"

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace braidties {

using TensorKey = std::uint64_t;

/// Largest n whose indices fit the packed key.
inline constexpr int kMaxTensorN = 8;

inline int lower(TensorKey k, int pos) { return static_cast<int>((k >> (8 * (pos - 1))) & 0xF); }
inline int upper(TensorKey k, int pos) { return static_cast<int>((k >> (8 * (pos - 1) + 4)) & 0xF); }

/// From (lower, upper) pairs; throws std::out_of_range when an index is outside 1..n.
TensorKey make_key(const std::vector<std::pair<int, int>>& pairs);
std::vector<std::pair<int, int>> key_pairs(TensorKey k, int n);
/// "v1^1 (x) v1^2".
std::string key_to_string(TensorKey k, int n);
/// All n^{2n} pure tensors in ascending key order.
std::vector<TensorKey> pure_tensors(int n);

template <class F>
struct TensorVector {
    int n = 0;
    SparseVec<F> terms;

    static TensorVector pure(int n, TensorKey k, F c = F(1)) {
        TensorVector v{n, {}};
        if (!braidties::is_zero(c)) v.terms.emplace(k, std::move(c));
        return v;
    }
    bool is_zero() const { return terms.empty(); }
    TensorVector& operator+=(const TensorVector& o) {
        axpy(terms, F(1), o.terms);
        return *this;
    }
    TensorVector& operator-=(const TensorVector& o) {
        axpy(terms, F(-1), o.terms);
        return *this;
    }
    friend TensorVector operator+(TensorVector a, const TensorVector& b) { return a += b; }
    friend TensorVector operator-(TensorVector a, const TensorVector& b) { return a -= b; }
    friend TensorVector operator*(const F& c, const TensorVector& v) { return TensorVector{v.n, scaled(v.terms, c)}; }
    friend bool operator==(const TensorVector&, const TensorVector&) = default;
};

namespace detail {

inline TensorKey swap_at(TensorKey k, int pos) {
    const int s = 8 * (pos - 1);
    const TensorKey a = (k >> s) & 0xFF;
    const TensorKey b = (k >> (s + 8)) & 0xFF;
    k &= ~(TensorKey{0xFFFF} << s);
    return k | (b << s) | (a << (s + 8));
}

template <class F>
void add_to(SparseVec<F>& out, TensorKey k, const F& c) {
    if (is_zero(c)) return;
    auto [it, fresh] = out.try_emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (is_zero(it->second)) out.erase(it);
    }
}

inline void check_position(int k, int n) {
    if (k < 1 || k >= n) throw std::out_of_range("tensor action: position " + std::to_string(k) + " out of range");
}

}  // namespace detail

template <class F>
TensorVector<F> act_T(int k, const TensorVector<F>& v, const F& u) {
    detail::check_position(k, v.n);
    TensorVector<F> r{v.n, {}};
    const F um1 = u - F(1);
    for (const auto& [key, c] : v.terms) {
        const int i1 = lower(key, k), i2 = lower(key, k + 1);
        const int j1 = upper(key, k), j2 = upper(key, k + 1);
        if (j1 != j2 || i1 < i2) {
            detail::add_to(r.terms, detail::swap_at(key, k), c);
        } else if (i1 == i2) {
            detail::add_to(r.terms, key, F(c * u));
        } else {
            detail::add_to(r.terms, detail::swap_at(key, k), F(c * u));
            detail::add_to(r.terms, key, F(c * um1));
        }
    }
    return r;
}

template <class F>
TensorVector<F> act_E(int k, const TensorVector<F>& v) {
    detail::check_position(k, v.n);
    TensorVector<F> r{v.n, {}};
    for (const auto& [key, c] : v.terms)
        if (upper(key, k) == upper(key, k + 1)) r.terms.emplace_hint(r.terms.end(), key, c);
    return r;
}

/// T_k^{-1} = T_k + (u^{-1} - 1) E_k (1 + T_k).
template <class F>
TensorVector<F> act_Tinv(int k, const TensorVector<F>& v, const F& u) {
    TensorVector<F> t = act_T(k, v, u);
    const F c = F(1) / u - F(1);
    TensorVector<F> r = t;
    r += c * act_E(k, v + t);
    return r;
}

template <class F>
TensorVector<F> act_letter(const Letter& l, const TensorVector<F>& v, const F& u) {
    switch (l.kind) {
        case GenKind::T: return act_T(l.index, v, u);
        case GenKind::Tinv: return act_Tinv(l.index, v, u);
        case GenKind::E: return act_E(l.index, v);
    }
    throw std::logic_error("act_letter: unknown kind");
}

/// The word is a product of letters, so the rightmost letter acts first.
template <class F>
TensorVector<F> act_word(const GeneratorWord& w, TensorVector<F> v, const F& u) {
    for (auto it = w.rbegin(); it != w.rend(); ++it) v = act_letter(*it, v, u);
    return v;
}

template <class F>
TensorVector<F> act(const LinearWord& lw, const TensorVector<F>& v, const F& u) {
    TensorVector<F> r{v.n, {}};
    for (const auto& [c, w] : lw.terms) axpy(r.terms, F(coerce(c, u)), act_word(w, v, u).terms);
    return r;
}

/// Action of an algebra element, through word_expand of each basis key.
template <class F>
TensorVector<F> act(const Element& x, const TensorVector<F>& v, const F& u) {
    if (x.n() != v.n) throw SizeMismatch("act: size mismatch");
    TensorVector<F> r{v.n, {}};
    for (const auto& [k, c] : x.terms()) axpy(r.terms, F(coerce(c, u)), act_word(word_expand(k), v, u).terms);
    return r;
}

/// Applies sigma to every upper index.
template <class F>
TensorVector<F> relabel_upper(const Permutation& sigma, const TensorVector<F>& v) {
    if (sigma.size() != v.n) throw SizeMismatch("relabel_upper: size mismatch");
    TensorVector<F> r{v.n, {}};
    for (const auto& [key, c] : v.terms) {
        auto pairs = key_pairs(key, v.n);
        for (auto& p : pairs) p.second = sigma(p.second);
        r.terms.emplace(make_key(pairs), c);
    }
    return r;
}

// ---------------------------------------------------------------- reports

struct TensorRelationReport {
    int n = 0;
    std::string mode;  ///< "exact" or "specialized"
    std::vector<Rational> points;
    std::size_t tensors = 0;
    std::vector<RelationCheck> checks;
    bool pass = false;
};

/**
 * Checks every relation instance as an operator identity on all pure tensors:
 * over Q(u) when exact, else at `points` random rationals drawn from rng.
 */
TensorRelationReport verify_tensor_relations(int n, bool exact, int points, std::mt19937_64& rng);

struct FaithfulnessOptions {
    std::uint64_t seed = 0x5eed;
    /// Random confirmation points beyond the u = 1 pass (probe strategy only).
    int points = 1;
    /// Use every pure tensor as a probe (default for n <= 3).
    bool all_pure_tensors = false;
    bool force = false;
};

struct FaithfulnessReport {
    int n = 0;
    std::size_t rank = 0;
    std::size_t expected = 0;
    bool pass = false;
    std::size_t probes = 0;
    std::string method;
    std::vector<std::pair<Rational, std::size_t>> confirmations;  ///< (u value, rank)
};

/// Rank of the rows (act(g, p))_p over the basis G; pass iff it equals n! B_n.
FaithfulnessReport faithfulness_certificate(int n, const FaithfulnessOptions& opts = {});

struct QuotientReport {
    int n = 0;
    bool m_e_zero = false;       ///< every E_k kills M
    bool m_t_square = false;     ///< T_k^2 = 1 on M
    std::size_t m_rank = 0;      ///< rank of {T_w v} on M
    bool n_e_identity = false;   ///< every E_k fixes N
    bool n_hecke = false;        ///< (T_k - u)(T_k + 1) = 0 on N
    std::size_t n_rank = 0;      ///< rank of {T_w v} on N
    std::size_t expected = 0;    ///< n!
    bool pass = false;
};

/**
 * M: lower indices 1, upper indices a permutation of 1..n. N: upper indices
 * all 1. Exact over Q(u); n <= 4 unless forced.
 */
QuotientReport quotient_checks(int n, bool force = false);

/// Throws std::invalid_argument when n exceeds the guard and force is off.
void check_guard(int n, int limit, bool force, const char* what);

}  // namespace braidties
