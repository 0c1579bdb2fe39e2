#include "doctest.h"

#include "braidties/specht.hpp"

#include <random>

using namespace braidties;

namespace {
const RatFunc U = RatFunc::u();
using V = TensorVector<RatFunc>;
using P = IntPartition;

SpechtLabel L(std::vector<LabelEntry> e) { return SpechtLabel{std::move(e)}; }
LabelEntry entry(std::vector<int> lambda, int m, std::vector<int> mu) { return LabelEntry{P(lambda), m, P(mu)}; }
V pure(int n, const std::vector<std::pair<int, int>>& pairs, RatFunc c = RatFunc(1)) { return V::pure(n, make_key(pairs), c); }

// Hook length formula, independent of the tableau code.
long hooks(const P& lam) {
    const auto& p = lam.parts();
    const auto c = lam.conjugate().parts();
    long prod = 1;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (int j = 0; j < p[i]; ++j) prod *= (p[i] - j - 1) + (c[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1) + 1;
    return factorial(lam.size()) / prod;
}

HeckeElement random_hecke(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(-4, 4);
    HeckeElement z(n);
    for (const auto& w : Permutation::all(n)) z.add_term(w, RatFunc(Poly(std::vector<Rational>{d(rng), d(rng)})));
    return z;
}
}  // namespace

TEST_CASE("symmetrizers") {
    const auto s2 = symmetrizers(P({2}));
    const auto e = Permutation::identity(2), s1 = Permutation::simple(1, 2);
    CHECK(s2.s == GroupElement{{e, Rational(1)}, {s1, Rational(1)}});
    CHECK(s2.c == GroupElement{{e, Rational(1)}});
    CHECK(symmetrizers(P({1, 1})).s == GroupElement{{e, Rational(1)}, {s1, Rational(-1)}});
    const auto s21 = symmetrizers(P({2, 1}));
    CHECK(s21.scalar == Rational(3));
    CHECK(group_mul(s21.s, s21.s) == group_add({}, s21.s, Rational(3)));
    for (int n = 1; n <= 4; ++n)
        for (const auto& lam : P::all(n)) CHECK(symmetrizers(lam).scalar * Rational(hooks(lam)) == Rational(factorial(n)));
}

TEST_CASE("gyoja elements") {
    const auto e = Permutation::identity(2), s1 = Permutation::simple(1, 2);
    CHECK(gyoja_element(P({2})).e == HeckeElement::T(e) + HeckeElement::T(s1));
    CHECK(gyoja_element(P({1, 1})).e == HeckeElement::T(e) - HeckeElement::T(s1, U.inverse()));
    for (int n = 1; n <= 3; ++n) {
        const auto all = Permutation::all(n);
        const auto iota = hecke_iota(all, n);
        for (const auto& w : all) {
            RatFunc c(1);
            for (int k = 0; k < w.length(); ++k) c *= U;
            CHECK(HeckeElement::T(w) * iota == iota * c);
        }
    }
}

TEST_CASE("collapse is a homomorphism onto the Hecke algebra") {
    std::mt19937_64 rng(5);
    const auto keys = basis_keys(3);
    for (int t = 0; t < 40; ++t) {
        const Element x = Element::basis(keys[rng() % keys.size()]);
        const Element y = Element::basis(keys[rng() % keys.size()]);
        CHECK(collapse(x * y) == collapse(x) * collapse(y));
    }
    const auto z = random_hecke(3, rng);
    CHECK(collapse(to_element(z, 3)) == z);
}

TEST_CASE("Gyoja and Young proportionality") {
    std::mt19937_64 rng(17);
    for (int n = 1; n <= 3; ++n)
        for (const auto& lam : P::all(n)) {
            const auto g = gyoja_element(lam);
            const auto sy = symmetrizers(lam);
            for (int t = 0; t < 100; ++t) {
                const auto z = random_hecke(n, rng);
                CHECK(proportionality(g.c * z * g.r, g.e).has_value());
                GroupElement zg;
                std::uniform_int_distribution<int> d(-4, 4);
                for (const auto& w : Permutation::all(n)) zg[w] = Rational(d(rng));
                const auto lhs = group_mul(group_mul(sy.c, zg), sy.r);
                const auto& [w0, c0] = *sy.s.begin();
                auto it = lhs.find(w0);
                const Rational C = it == lhs.end() ? Rational(0) : it->second / c0;
                CHECK(group_add(lhs, sy.s, -C).empty());
            }
        }
}

TEST_CASE("dominance filter on weight spaces") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& lam : P::all(n))
            for (const auto& mu : P::all(n)) CHECK((gyoja_weight_rank(lam, mu) > 0) == dominance_leq(mu, lam));
}

TEST_CASE("v and w vectors") {
    const auto big = L({entry({2, 1}, 2, {1, 1})});
    CHECK(v_Lambda(big) == make_key({{1, 1}, {1, 1}, {2, 1}, {1, 2}, {1, 2}, {2, 2}}));
    CHECK(w_Lambda(L({entry({1}, 2, {2})})) == pure(2, {{1, 1}, {1, 2}}) + pure(2, {{1, 2}, {1, 1}}));
    const auto sign = L({entry({1}, 2, {1, 1})});
    const V sv = act(e_Lambda(sign), w_Lambda(sign), U);
    CHECK(sv == pure(2, {{1, 1}, {1, 2}}) - pure(2, {{1, 2}, {1, 1}}));
}

TEST_CASE("block permutations act by place permutation") {
    for (const auto& label : enumerate_labels(4)) {
        const auto bs = block_structure(label);
        const int n = label.n();
        const TensorKey v = v_Lambda(label);
        for (std::size_t s = 0; s < label.entries.size(); ++s)
            for (const auto& sigma : Permutation::all(label.entries[s].m)) {
                const auto p = block_permutation(bs, static_cast<int>(s), sigma);
                std::vector<std::pair<int, int>> moved(static_cast<std::size_t>(n));
                const auto pairs = key_pairs(v, n);
                for (int i = 1; i <= n; ++i) moved[static_cast<std::size_t>(p(i) - 1)] = pairs[static_cast<std::size_t>(i - 1)];
                CHECK(act(t_element(p), V::pure(n, v), U) == V::pure(n, make_key(moved)));
            }
    }
}

TEST_CASE("e_Lambda examples") {
    for (int n = 1; n <= 4; ++n) CHECK(e_Lambda(L({entry(std::vector<int>{n}, 1, {1})})) == e_set(SetPartition::top(n)));
    CHECK(e_Lambda(L({entry({1}, 2, {2})})) == Element::one(2));
    const auto f = e_Lambda_factors(L({entry({1}, 3, {2, 1})}));
    CHECK(f.tie == Element::one(3));
    CHECK(f.hecke == Element::one(3));
    CHECK(f.product == f.column_blocks);
}

TEST_CASE("module dimensions") {
    for (const auto& label : enumerate_labels(2)) CHECK(specht_module(label).dim == 1);
    CHECK(specht_module(L({entry({2, 1}, 1, {1})})).dim == 2);
    for (const auto& label : enumerate_labels(3))
        if (label.entries.size() == 2) CHECK(specht_module(label).dim == 3);
    // Pullbacks: one block gives the Hecke module, singletons the symmetric group module.
    for (int n = 1; n <= 4; ++n)
        for (const auto& lam : P::all(n)) {
            CHECK(specht_module(L({entry(lam.parts(), 1, {1})})).dim == static_cast<std::size_t>(hooks(lam)));
            CHECK(specht_module(L({entry({1}, n, lam.parts())})).dim == static_cast<std::size_t>(hooks(lam)));
        }
    CHECK_THROWS_AS(specht_module(enumerate_labels(5).front()), std::invalid_argument);
}

TEST_CASE("classification") {
    const auto r2 = classification_report(2);
    CHECK(r2.entries.size() == 4);
    CHECK(r2.sum_squares == 4);
    const auto r3 = classification_report(3);
    std::vector<std::size_t> dims;
    for (const auto& e : r3.entries) dims.push_back(e.dim);
    CHECK(dims == std::vector<std::size_t>{1, 2, 1, 3, 3, 1, 2, 1});
    CHECK(r3.sum_squares == 30);
    CHECK(r3.equal);
    CHECK(r3.distinct);
}

TEST_CASE("exact and specialized dims agree") {
    SpechtOptions exact;
    exact.exact_up_to = 4;
    long sum = 0;
    for (const auto& label : enumerate_labels(4)) {
        const auto m = specht_module(label, exact);
        CHECK(m.exact);
        CHECK(m.dim == specht_module(label).dim);
        sum += static_cast<long>(m.dim * m.dim);
    }
    CHECK(sum == 360);
}

TEST_CASE("tie action on w_Lambda") {
    const auto lab = L({entry({1}, 1, {1}), entry({2}, 1, {1})});
    const auto A = block_structure(lab).A;
    CHECK(e_action_check(lab, A));
    CHECK(e_action_check(lab, SetPartition::bottom(3)));
    CHECK(act(e_set(SetPartition::top(3)), w_Lambda(lab), U).is_zero());
    for (int n = 1; n <= 3; ++n)
        for (const auto& label : enumerate_labels(n))
            for (const auto& B : SetPartition::enumerate(n)) CHECK(e_action_check(label, B));
}

TEST_CASE("e_Lambda image is one dimensional") {
    for (int n = 1; n <= 3; ++n)
        for (const auto& label : enumerate_labels(n)) CHECK(e_Lambda_image_rank(label) == 1);
}

TEST_CASE("tensor form") {
    CHECK(tensor_form(pure(2, {{1, 1}, {1, 2}}), pure(2, {{1, 1}, {1, 2}})) == RatFunc(1));
    CHECK(tensor_form(pure(2, {{1, 1}, {1, 2}}), pure(2, {{1, 2}, {1, 1}})).is_zero());
    CHECK(tensor_form(pure(2, {{2, 1}, {1, 1}}), pure(2, {{2, 1}, {1, 1}})) == U);
    for (int n = 2; n <= 3; ++n) {
        const auto tensors = pure_tensors(n);
        for (int k = 1; k < n; ++k)
            for (GenKind g : {GenKind::T, GenKind::E}) {
                const Element x = gen(g, k, n);
                const Element xs = star(x);
                std::mt19937_64 rng(static_cast<std::uint64_t>(n * 10 + k));
                for (int t = 0; t < 40; ++t) {
                    const V v = V::pure(n, tensors[rng() % tensors.size()]);
                    const V w = V::pure(n, tensors[rng() % tensors.size()]);
                    CHECK(tensor_form(act(x, v, U), w) == tensor_form(v, act(xs, w, U)));
                }
            }
        for (const auto& label : enumerate_labels(n)) {
            const V s = act(e_Lambda(label), w_Lambda(label), U);
            CHECK_FALSE(tensor_form(s, s).is_zero());
        }
    }
}

TEST_CASE("characters separate labels") {
    for (int n = 1; n <= 3; ++n) {
        const auto labels = enumerate_labels(n);
        std::vector<std::vector<Rational>> chars;
        for (const auto& l : labels) chars.push_back(character(l, Rational(3, 2)));
        for (std::size_t a = 0; a < chars.size(); ++a)
            for (std::size_t b = a + 1; b < chars.size(); ++b) CHECK(chars[a] != chars[b]);
        for (std::size_t a = 0; a < labels.size(); ++a)
            CHECK(chars[a].front() == Rational(static_cast<long>(specht_module(labels[a]).dim)));
    }
}
