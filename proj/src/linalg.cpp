#include "braidties/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace braidties {

void SparseMatrix::set(std::size_t r, std::size_t c, RatFunc v) {
    if (r >= rows || c >= cols) throw std::out_of_range("SparseMatrix: index out of range");
    if (v.is_zero()) {
        entries.erase({r, c});
        return;
    }
    entries[{r, c}] = std::move(v);
}

std::vector<SparseVec<RatFunc>> SparseMatrix::row_vectors() const {
    std::vector<SparseVec<RatFunc>> out(rows);
    for (const auto& [rc, v] : entries) out[rc.first].emplace(rc.second, v);
    return out;
}

std::optional<std::vector<SparseVec<Rational>>> SparseMatrix::specialized_rows(const Rational& q) const {
    std::vector<SparseVec<Rational>> out(rows);
    for (const auto& [rc, v] : entries) {
        auto x = v.try_eval(q);
        if (!x) return std::nullopt;
        if (!x->is_zero()) out[rc.first].emplace(rc.second, std::move(*x));
    }
    return out;
}

Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> dist(1, 1000000000L);
    for (;;) {
        Rational r(dist(rng), dist(rng));
        if (!r.is_one()) return r;
    }
}

namespace {

std::size_t rank_at_random_point(const SparseMatrix& m, std::mt19937_64& rng) {
    for (;;) {
        auto rows = m.specialized_rows(random_rational(rng));
        if (rows) return rank_of(*rows);
    }
}

}  // namespace

std::size_t rank(const SparseMatrix& m, RankMode mode, std::mt19937_64& rng) {
    if (mode == RankMode::Exact) return rank_of(m.row_vectors());
    const std::size_t r1 = rank_at_random_point(m, rng);
    const std::size_t r2 = rank_at_random_point(m, rng);
    if (r1 == r2) return r1;
    return std::max({r1, r2, rank_at_random_point(m, rng)});
}

std::size_t rank(const SparseMatrix& m, RankMode mode) {
    std::mt19937_64 rng(0x5eed);
    return rank(m, mode, rng);
}

}  // namespace braidties
