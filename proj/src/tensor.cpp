#include "braidties/tensor.hpp"

#include <algorithm>

namespace braidties {

TensorKey make_key(const std::vector<std::pair<int, int>>& pairs) {
    const int n = static_cast<int>(pairs.size());
    if (n > kMaxTensorN) throw std::out_of_range("make_key: at most 8 positions");
    TensorKey k = 0;
    for (int p = 0; p < n; ++p) {
        const auto [lo, up] = pairs[static_cast<std::size_t>(p)];
        if (lo < 1 || lo > n || up < 1 || up > n) throw std::out_of_range("make_key: index out of range");
        k |= (static_cast<TensorKey>(lo) | (static_cast<TensorKey>(up) << 4)) << (8 * p);
    }
    return k;
}

std::vector<std::pair<int, int>> key_pairs(TensorKey k, int n) {
    std::vector<std::pair<int, int>> out;
    for (int p = 1; p <= n; ++p) out.emplace_back(lower(k, p), upper(k, p));
    return out;
}

std::string key_to_string(TensorKey k, int n) {
    std::string s;
    for (int p = 1; p <= n; ++p) {
        if (p > 1) s += " (x) ";
        s += "v" + std::to_string(lower(k, p)) + "^" + std::to_string(upper(k, p));
    }
    return s;
}

std::vector<TensorKey> pure_tensors(int n) {
    if (n < 1 || n > kMaxTensorN) throw std::out_of_range("pure_tensors: n out of range");
    std::vector<TensorKey> out;
    std::vector<std::pair<int, int>> cur(static_cast<std::size_t>(n), {1, 1});
    for (;;) {
        out.push_back(make_key(cur));
        int p = 0;
        for (; p < n; ++p) {
            auto& [lo, up] = cur[static_cast<std::size_t>(p)];
            if (++lo <= n) break;
            lo = 1;
            if (++up <= n) break;
            up = 1;
        }
        if (p == n) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

void check_guard(int n, int limit, bool force, const char* what) {
    if (n < 1) throw std::invalid_argument(std::string(what) + ": n must be >= 1");
    if (n > limit && !force)
        throw std::invalid_argument(std::string(what) + ": n = " + std::to_string(n) + " exceeds the guard " +
                                    std::to_string(limit) + " (use --force)");
}

// ---------------------------------------------------------------- relations

namespace {

template <class F>
void check_relations_at(int n, const F& u, const std::vector<RelationInstance>& rels, const std::vector<TensorKey>& tensors,
                        std::vector<bool>& ok) {
    for (TensorKey key : tensors) {
        const auto v = TensorVector<F>::pure(n, key);
        for (std::size_t r = 0; r < rels.size(); ++r) {
            if (!ok[r]) continue;
            const auto first = act(rels[r].sides.front(), v, u);
            for (std::size_t s = 1; s < rels[r].sides.size(); ++s)
                if (!(act(rels[r].sides[s], v, u) == first)) ok[r] = false;
        }
    }
}

}  // namespace

TensorRelationReport verify_tensor_relations(int n, bool exact, int points, std::mt19937_64& rng) {
    TensorRelationReport rep;
    rep.n = n;
    rep.mode = exact ? "exact" : "specialized";
    const auto rels = relation_instances(n);
    const auto tensors = pure_tensors(n);
    rep.tensors = tensors.size();
    std::vector<bool> ok(rels.size(), true);
    if (exact) {
        check_relations_at<RatFunc>(n, RatFunc::u(), rels, tensors, ok);
    } else {
        for (int p = 0; p < points; ++p) {
            const Rational q = random_rational(rng);
            rep.points.push_back(q);
            check_relations_at<Rational>(n, q, rels, tensors, ok);
        }
    }
    rep.pass = true;
    for (std::size_t r = 0; r < rels.size(); ++r) {
        rep.checks.push_back(RelationCheck{rels[r].family, rels[r].text, ok[r]});
        rep.pass = rep.pass && ok[r];
    }
    return rep;
}

// ---------------------------------------------------------------- faithfulness

namespace {

template <class F>
std::vector<SparseVec<F>> action_rows(int n, const std::vector<TensorKey>& probes, const F& u) {
    std::vector<SparseVec<F>> rows;
    for (const auto& g : basis_keys(n)) {
        const auto word = word_expand(g);
        SparseVec<F> row;
        for (std::size_t p = 0; p < probes.size(); ++p) {
            const auto img = act_word(word, TensorVector<F>::pure(n, probes[p]), u);
            for (const auto& [k, c] : img.terms) row.emplace((static_cast<std::uint64_t>(p) << 32) | k, c);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

// One probe per set partition: lower indices 1..n, upper index = block number.
std::vector<TensorKey> partition_probes(int n) {
    std::vector<TensorKey> out;
    for (const auto& A : SetPartition::enumerate(n)) {
        std::vector<std::pair<int, int>> pairs;
        for (int i = 1; i <= n; ++i) pairs.emplace_back(i, A.block_of(i) + 1);
        out.push_back(make_key(pairs));
    }
    return out;
}

}  // namespace

FaithfulnessReport faithfulness_certificate(int n, const FaithfulnessOptions& opts) {
    check_guard(n, 4, opts.force, "faithful");
    FaithfulnessReport rep;
    rep.n = n;
    rep.expected = static_cast<std::size_t>(factorial(n) * bell_number(n));
    if (n <= 3 || opts.all_pure_tensors) {
        const auto probes = pure_tensors(n);
        rep.probes = probes.size();
        rep.method = "exact over Q(u), all pure tensors";
        rep.rank = rank_of(action_rows<RatFunc>(n, probes, RatFunc::u()));
        rep.pass = rep.rank == rep.expected;
        return rep;
    }
    const auto probes = partition_probes(n);
    rep.probes = probes.size();
    rep.method = "partition probes at u = 1, confirmed at random points";
    rep.rank = rank_of(action_rows<Rational>(n, probes, Rational(1)));
    std::mt19937_64 rng(opts.seed);
    bool confirmed = true;
    for (int p = 0; p < opts.points; ++p) {
        const Rational q = random_rational(rng);
        const std::size_t r = rank_of(action_rows<Rational>(n, probes, q));
        rep.confirmations.emplace_back(q, r);
        confirmed = confirmed && r == rep.expected;
    }
    rep.pass = rep.rank == rep.expected && confirmed;
    return rep;
}

// ---------------------------------------------------------------- quotients

QuotientReport quotient_checks(int n, bool force) {
    check_guard(n, 4, force, "quotient_checks");
    QuotientReport rep;
    rep.n = n;
    rep.expected = static_cast<std::size_t>(factorial(n));
    const RatFunc u = RatFunc::u();
    using V = TensorVector<RatFunc>;

    std::vector<TensorKey> m_keys, n_keys;
    for (const auto& w : Permutation::all(n)) {
        std::vector<std::pair<int, int>> pairs;
        for (int i = 1; i <= n; ++i) pairs.emplace_back(1, w(i));
        m_keys.push_back(make_key(pairs));
    }
    for (TensorKey k : pure_tensors(n)) {
        bool all_one = true;
        for (int p = 1; p <= n; ++p) all_one = all_one && upper(k, p) == 1;
        if (all_one) n_keys.push_back(k);
    }

    rep.m_e_zero = rep.m_t_square = rep.n_e_identity = rep.n_hecke = true;
    for (TensorKey key : m_keys) {
        const V v = V::pure(n, key);
        for (int k = 1; k < n; ++k) {
            rep.m_e_zero = rep.m_e_zero && act_E(k, v).is_zero();
            rep.m_t_square = rep.m_t_square && act_T(k, act_T(k, v, u), u) == v;
        }
    }
    for (TensorKey key : n_keys) {
        const V v = V::pure(n, key);
        for (int k = 1; k < n; ++k) {
            rep.n_e_identity = rep.n_e_identity && act_E(k, v) == v;
            const V tv = act_T(k, v, u);
            // (T - u)(T + 1) v = T(Tv + v) - u(Tv + v)
            const V s = tv + v;
            rep.n_hecke = rep.n_hecke && (act_T(k, s, u) - u * s).is_zero();
        }
    }

    auto t_span_rank = [&](TensorKey seed) {
        std::vector<SparseVec<RatFunc>> rows;
        const V v = V::pure(n, seed);
        for (const auto& w : Permutation::all(n)) {
            GeneratorWord word;
            for (int i : w.reduced_word()) word.push_back(Letter{GenKind::T, i});
            rows.push_back(act_word(word, v, u).terms);
        }
        return rank_of(rows);
    };
    std::vector<std::pair<int, int>> m_seed, n_seed;
    for (int i = 1; i <= n; ++i) {
        m_seed.emplace_back(1, i);
        n_seed.emplace_back(i, 1);
    }
    rep.m_rank = t_span_rank(make_key(m_seed));
    rep.n_rank = t_span_rank(make_key(n_seed));
    rep.pass = rep.m_e_zero && rep.m_t_square && rep.n_e_identity && rep.n_hecke && rep.m_rank == rep.expected &&
               rep.n_rank == rep.expected;
    return rep;
}

}  // namespace braidties
