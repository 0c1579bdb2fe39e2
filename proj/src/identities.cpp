#include "braidties/identities.hpp"

#include <map>

namespace braidties {

namespace {

Element T(int i, int n) { return gen(GenKind::T, i, n); }
Element Ti(int i, int n) { return gen(GenKind::Tinv, i, n); }
Element E(int i, int n) { return gen(GenKind::E, i, n); }

Element e_pair_any(int a, int b, int n) { return e_pair(std::min(a, b), std::max(a, b), n); }

Element random_element(int n, std::mt19937_64& rng) {
    const auto keys = basis_keys(n);
    std::uniform_int_distribution<int> d(-4, 4);
    Element x(n);
    for (int t = 0; t < 3; ++t) x.add_term(keys[rng() % keys.size()], RatFunc(Poly(std::vector<Rational>{d(rng), d(rng)})));
    return x;
}

class Recorder {
public:
    explicit Recorder(IdentityReport& rep) : rep_(rep) {}
    void check(const std::string& name, bool ok) {
        auto [it, fresh] = index_.try_emplace(name, rep_.checks.size());
        if (fresh) rep_.checks.push_back(IdentityCheck{name, 0, 0});
        auto& c = rep_.checks[it->second];
        ++c.instances;
        if (!ok) ++c.failures;
    }

private:
    IdentityReport& rep_;
    std::map<std::string, std::size_t> index_;
};

void finish(IdentityReport& rep) {
    rep.pass = !rep.checks.empty();
    for (const auto& c : rep.checks) rep.pass = rep.pass && c.pass();
}

}  // namespace

IdentityReport structural_identities(int n, std::mt19937_64& rng, bool exhaustive, int samples) {
    IdentityReport rep;
    rep.n = n;
    Recorder rec(rep);
    const auto parts = SetPartition::enumerate(n);
    const auto perms = Permutation::all(n);

    auto conj = [&](const Permutation& w, const SetPartition& A) {
        rec.check("conjugation", t_element(w) * e_set(A) * t_inverse_element(w) == e_set(A.apply(w)));
    };
    auto incl = [&](const SetPartition& A, const SetPartition& B) {
        rec.check("inclusion", e_set(A) * e_set(B) == e_set(sp_join(A, B)));
    };
    if (exhaustive) {
        for (const auto& w : perms)
            for (const auto& A : parts) conj(w, A);
        for (const auto& A : parts)
            for (const auto& B : parts) incl(A, B);
    } else {
        for (int s = 0; s < samples; ++s) conj(perms[rng() % perms.size()], parts[rng() % parts.size()]);
        for (int s = 0; s < samples; ++s) incl(parts[rng() % parts.size()], parts[rng() % parts.size()]);
    }

    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j) {
            if (std::abs(i - j) != 1) continue;
            const Element lhs = T(j, n) * E(i, n) * Ti(j, n);
            rec.check("formulas (a)", lhs == Ti(i, n) * E(j, n) * T(i, n));
            rec.check("formulas (b)", Ti(i, n) * T(j, n) * E(i, n) == E(j, n) * Ti(i, n) * T(j, n));
            rec.check("formulas (c)", lhs == T(i, n) * E(j, n) * Ti(i, n));
        }

    for (int i = 1; i < n; ++i) {
        const auto si = Permutation::simple(i, n);
        for (int j = 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) {
                const Element target = e_pair_any(si(j), si(k), n);
                const Element ejk = e_pair(j, k, n);
                rec.check("reflection (a)", T(i, n) * ejk * Ti(i, n) == target);
                rec.check("reflection (b)", Ti(i, n) * ejk * T(i, n) == target);
            }
    }

    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);
    for (const auto& [i, j] : pairs)
        for (const auto& [k, l] : pairs) {
            const Element a = e_pair(i, j, n), b = e_pair(k, l, n);
            rec.check("commuting ties", a * b == b * a && a * a == a);
        }

    if (n >= 2) {
        const int sets = exhaustive ? std::max(samples, 100) : samples;
        std::uniform_int_distribution<int> pick(1, n);
        std::uniform_int_distribution<int> len(0, 2 * n);
        for (int s = 0; s < sets; ++s) {
            std::vector<std::pair<int, int>> R;
            const int m = len(rng);
            for (int t = 0; t < m; ++t) {
                int a = pick(rng), b = pick(rng);
                if (a != b) R.emplace_back(a, b);
            }
            Element prod = Element::one(n);
            for (const auto& [a, b] : R) prod = prod * e_pair_any(a, b, n);
            rec.check("extension", prod == e_set(SetPartition::closure(R, n)));
        }
    }

    for (int i = 1; i < n; ++i) {
        rec.check("flip generators", flip(T(i, n)) == T(n - i, n) && flip(E(i, n)) == E(n - i, n));
    }
    for (const auto& [i, j] : pairs) rec.check("flip ties", flip(e_pair(i, j, n)) == e_pair(n + 1 - j, n + 1 - i, n));
    const int flips = exhaustive ? std::max(samples, 20) : samples;
    for (int s = 0; s < flips; ++s) {
        const Element x = random_element(n, rng), y = random_element(n, rng);
        rec.check("flip involution", flip(flip(x)) == x);
        rec.check("flip homomorphism", flip(x * y) == flip(x) * flip(y));
    }
    finish(rep);
    return rep;
}

IdentityReport form_identities(int n, std::mt19937_64& rng, int samples) {
    IdentityReport rep;
    rep.n = n;
    Recorder rec(rep);
    for (int s = 0; s < samples; ++s) {
        const Element x = random_element(n, rng), y = random_element(n, rng), z = random_element(n, rng);
        rec.check("star involution", star(star(x)) == x);
        rec.check("star antiautomorphism", star(x * y) == star(y) * star(x));
        rec.check("form invariance", form(x * y, z) == form(y, star(x) * z));
    }
    for (int i = 1; i < n; ++i) rec.check("star fixes generators", star(T(i, n)) == T(i, n) && star(E(i, n)) == E(i, n));
    finish(rep);
    return rep;
}

SparseMatrix gram_matrix(int n) {
    const auto keys = basis_keys(n);
    SparseMatrix m{keys.size(), keys.size(), {}};
    std::vector<Element> starred;
    for (const auto& k : keys) starred.push_back(star(Element::basis(k)));
    for (std::size_t i = 0; i < keys.size(); ++i)
        for (std::size_t j = 0; j < keys.size(); ++j) m.set(i, j, epsilon(mul_basis(starred[i].terms().begin()->first, keys[j])));
    return m;
}

}  // namespace braidties
