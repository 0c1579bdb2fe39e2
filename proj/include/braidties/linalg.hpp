#pragma once

/**
 * @file linalg.hpp
 * @brief Sparse exact linear algebra over Rational or RatFunc.
 *
 * Vectors are ordered maps from a 64-bit column key to a nonzero coefficient.
 * EchelonBasis keeps rows with distinct leading columns, each normalized to a
 * leading coefficient of one; that is enough for rank, membership tests,
 * coordinates and span closure. All routines are deterministic.
 */

#include "braidties/ratfunc.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <utility>
#include <vector>

namespace braidties {

template <class F>
using SparseVec = std::map<std::uint64_t, F>;

template <class F>
void axpy(SparseVec<F>& y, const F& a, const SparseVec<F>& x) {
    if (is_zero(a)) return;
    for (const auto& [k, v] : x) {
        auto it = y.find(k);
        if (it == y.end()) {
            y.emplace(k, a * v);
        } else {
            it->second += a * v;
            if (is_zero(it->second)) y.erase(it);
        }
    }
}

template <class F>
SparseVec<F> scaled(const SparseVec<F>& x, const F& a) {
    SparseVec<F> r;
    if (is_zero(a)) return r;
    for (const auto& [k, v] : x) r.emplace(k, v * a);
    return r;
}

template <class F>
class EchelonBasis {
public:
    /// Reduces v against the basis; returns the residue (zero iff v is in the span).
    SparseVec<F> reduce(SparseVec<F> v) const {
        auto it = v.begin();
        while (it != v.end()) {
            auto p = pivots_.find(it->first);
            if (p == pivots_.end()) {
                ++it;
                continue;
            }
            const std::uint64_t col = it->first;
            F f = -it->second;
            axpy(v, f, rows_[p->second]);
            it = v.upper_bound(col);
        }
        return v;
    }

    /// Inserts v if it is independent of the current rows; returns whether it was.
    bool insert(SparseVec<F> v) {
        v = reduce(std::move(v));
        if (v.empty()) return false;
        F inv = F(1) / v.begin()->second;
        for (auto& [k, c] : v) c *= inv;
        pivots_.emplace(v.begin()->first, rows_.size());
        rows_.push_back(std::move(v));
        return true;
    }

    bool contains(const SparseVec<F>& v) const { return reduce(v).empty(); }

    /// Coordinates of v with respect to rows(), or nullopt when v is outside the span.
    std::optional<std::vector<F>> coordinates(SparseVec<F> v) const {
        std::vector<F> coords(rows_.size(), F(0));
        auto it = v.begin();
        while (it != v.end()) {
            auto p = pivots_.find(it->first);
            if (p == pivots_.end()) return std::nullopt;
            const std::uint64_t col = it->first;
            F f = it->second;
            coords[p->second] += f;
            axpy(v, F(-f), rows_[p->second]);
            it = v.upper_bound(col);
        }
        return coords;
    }

    std::size_t size() const { return rows_.size(); }
    const std::vector<SparseVec<F>>& rows() const { return rows_; }

private:
    std::vector<SparseVec<F>> rows_;
    std::map<std::uint64_t, std::size_t> pivots_;
};

/// Row-by-row rank of a list of sparse vectors.
template <class F>
std::size_t rank_of(const std::vector<SparseVec<F>>& rows) {
    EchelonBasis<F> b;
    for (const auto& r : rows) b.insert(r);
    return b.size();
}

/**
 * Smallest subspace containing seed and closed under step. step must be
 * linear; it is applied to every new basis vector once.
 */
template <class F>
EchelonBasis<F> span_closure(const std::vector<SparseVec<F>>& seed,
                             const std::function<std::vector<SparseVec<F>>(const SparseVec<F>&)>& step) {
    EchelonBasis<F> basis;
    std::vector<SparseVec<F>> queue;
    for (const auto& s : seed)
        if (basis.insert(s)) queue.push_back(s);
    for (std::size_t i = 0; i < queue.size(); ++i) {
        const auto images = step(queue[i]);
        for (const auto& img : images)
            if (basis.insert(img)) queue.push_back(img);
    }
    return basis;
}

/// Sparse matrix over Q(u) with no stored zeros.
struct SparseMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::map<std::pair<std::size_t, std::size_t>, RatFunc> entries;

    void set(std::size_t r, std::size_t c, RatFunc v);
    std::vector<SparseVec<RatFunc>> row_vectors() const;
    /// Entry-wise specialization at u = q; nullopt if some entry has a pole at q.
    std::optional<std::vector<SparseVec<Rational>>> specialized_rows(const Rational& q) const;
};

enum class RankMode {
    Specialized,  ///< random rational specializations, max rank, third point on disagreement
    Exact,        ///< row reduction over Q(u)
};

/// Draws a random rational p/q with 1 <= p, q <= 10^9, never 0 or 1.
Rational random_rational(std::mt19937_64& rng);

/// Rank over Q(u). Specialized mode is deterministic given rng's state.
std::size_t rank(const SparseMatrix& m, RankMode mode, std::mt19937_64& rng);
std::size_t rank(const SparseMatrix& m, RankMode mode = RankMode::Specialized);

}  // namespace braidties
