#include "braidties/algebra.hpp"

#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

namespace braidties {

std::vector<BasisKey> basis_keys(int n) {
    std::vector<BasisKey> keys;
    const auto perms = Permutation::all(n);
    for (const auto& A : SetPartition::enumerate(n))
        for (const auto& w : perms) keys.push_back(BasisKey{A, w});
    return keys;
}

// ---------------------------------------------------------------- Element

Element Element::one(int n) { return basis(BasisKey{SetPartition::bottom(n), Permutation::identity(n)}); }

Element Element::scalar(int n, RatFunc c) {
    Element e(n);
    e.add_term(BasisKey{SetPartition::bottom(n), Permutation::identity(n)}, c);
    return e;
}

Element Element::basis(const BasisKey& k, RatFunc c) {
    if (k.A.size() != k.w.size()) throw SizeMismatch("BasisKey: partition and permutation sizes differ");
    Element e(k.w.size());
    e.add_term(k, c);
    return e;
}

bool Element::is_scalar() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    const auto& k = terms_.begin()->first;
    return k.A.is_bottom() && k.w.is_identity();
}

RatFunc Element::coeff(const BasisKey& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? RatFunc() : it->second;
}

void Element::add_term(const BasisKey& k, const RatFunc& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Element Element::operator-() const {
    Element r = *this;
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
}

Element& Element::operator+=(const Element& o) {
    if (n_ != o.n_) throw SizeMismatch("Element: size mismatch");
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

Element& Element::operator-=(const Element& o) {
    if (n_ != o.n_) throw SizeMismatch("Element: size mismatch");
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

Element& Element::operator*=(const RatFunc& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

// ---------------------------------------------------------------- product

namespace {

using MemoKey = std::tuple<int, std::uint64_t, std::uint64_t, std::uint64_t, std::uint64_t>;

struct MemoHash {
    std::size_t operator()(const MemoKey& k) const {
        std::size_t h = static_cast<std::size_t>(std::get<0>(k));
        auto mix = [&h](std::uint64_t x) { h ^= std::hash<std::uint64_t>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
        mix(std::get<1>(k));
        mix(std::get<2>(k));
        mix(std::get<3>(k));
        mix(std::get<4>(k));
        return h;
    }
};

Element compute_mul_basis(const BasisKey& a, const BasisKey& b) {
    const int n = a.w.size();
    const RatFunc um1 = RatFunc::u() - RatFunc(1);
    // T_w E_B = E_{wB} T_w, and E_A E_{wB} = E_{A v wB}.
    std::map<BasisKey, RatFunc> cur;
    cur.emplace(BasisKey{sp_join(a.A, b.A.apply(a.w)), a.w}, RatFunc(1));
    for (int i : b.w.reduced_word()) {
        std::map<BasisKey, RatFunc> next;
        auto add = [&next](BasisKey k, const RatFunc& c) {
            auto [it, fresh] = next.try_emplace(std::move(k), c);
            if (!fresh) {
                it->second += c;
                if (it->second.is_zero()) next.erase(it);
            }
        };
        for (const auto& [key, c] : cur) {
            const Permutation& x = key.w;
            Permutation xs = x.times_simple(i);
            if (x(i) < x(i + 1)) {
                add(BasisKey{key.A, std::move(xs)}, c);
                continue;
            }
            SetPartition joined = sp_join(key.A, SetPartition::closure({{x(i), x(i + 1)}}, n));
            const RatFunc cu = c * um1;
            add(BasisKey{key.A, xs}, c);
            add(BasisKey{joined, xs}, cu);
            add(BasisKey{std::move(joined), x}, cu);
        }
        cur = std::move(next);
    }
    Element r(n);
    for (const auto& [k, c] : cur) r.add_term(k, c);
    return r;
}

}  // namespace

const Element& mul_basis(const BasisKey& a, const BasisKey& b) {
    if (a.w.size() != b.w.size()) throw SizeMismatch("mul: size mismatch");
    static std::shared_mutex mu;
    static std::unordered_map<MemoKey, Element, MemoHash> memo;
    const MemoKey key{a.w.size(), a.A.code(), a.w.code(), b.A.code(), b.w.code()};
    {
        std::shared_lock lock(mu);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
    }
    Element value = compute_mul_basis(a, b);
    std::unique_lock lock(mu);
    // References into an unordered_map stay valid across rehashing.
    return memo.try_emplace(key, std::move(value)).first->second;
}

Element operator*(const Element& x, const Element& y) {
    if (x.n() != y.n()) throw SizeMismatch("mul: size mismatch");
    Element r(x.n());
    for (const auto& [kx, cx] : x.terms()) {
        for (const auto& [ky, cy] : y.terms()) {
            const RatFunc c = cx * cy;
            for (const auto& [k, cz] : mul_basis(kx, ky).terms()) r.add_term(k, c * cz);
        }
    }
    return r;
}

Element mul(const Element& x, const Element& y) { return x * y; }

// ---------------------------------------------------------------- generators

Element gen(GenKind kind, int i, int n) {
    if (i < 1 || i >= n) throw std::out_of_range("gen: index " + std::to_string(i) + " out of range for n = " + std::to_string(n));
    const auto id = Permutation::identity(n);
    const auto si = Permutation::simple(i, n);
    const auto bottom = SetPartition::bottom(n);
    const auto tie = SetPartition::closure({{i, i + 1}}, n);
    switch (kind) {
        case GenKind::T:
            return Element::basis(BasisKey{bottom, si});
        case GenKind::E:
            return Element::basis(BasisKey{tie, id});
        case GenKind::Tinv: {
            const RatFunc c = RatFunc::u().inverse() - RatFunc(1);
            Element e = Element::basis(BasisKey{bottom, si});
            e.add_term(BasisKey{tie, id}, c);
            e.add_term(BasisKey{tie, si}, c);
            return e;
        }
    }
    throw std::logic_error("gen: unknown kind");
}

Element evaluate(const GeneratorWord& word, int n) {
    Element r = Element::one(n);
    for (const auto& l : word) r = r * gen(l.kind, l.index, n);
    return r;
}

Element t_element(const Permutation& w) { return Element::basis(BasisKey{SetPartition::bottom(w.size()), w}); }

Element t_inverse_element(const Permutation& w) {
    GeneratorWord word;
    const auto rw = w.reduced_word();
    for (auto it = rw.rbegin(); it != rw.rend(); ++it) word.push_back(Letter{GenKind::Tinv, *it});
    return evaluate(word, w.size());
}

namespace {

GeneratorWord e_pair_word(int i, int j) {
    GeneratorWord w;
    for (int k = i; k <= j - 2; ++k) w.push_back(Letter{GenKind::T, k});
    w.push_back(Letter{GenKind::E, j - 1});
    for (int k = j - 2; k >= i; --k) w.push_back(Letter{GenKind::Tinv, k});
    return w;
}

}  // namespace

Element e_pair(int i, int j, int n) {
    if (!(1 <= i && i < j && j <= n)) throw std::out_of_range("e_pair: need 1 <= i < j <= n");
    Element r = evaluate(e_pair_word(i, j), n);
    const BasisKey expect{SetPartition::closure({{i, j}}, n), Permutation::identity(n)};
    if (r.terms().size() != 1 || !r.coeff(expect).is_one())
        throw std::logic_error("e_pair: conjugation did not reduce to a single idempotent");
    return r;
}

Element e_set(const SetPartition& A) {
    const int n = A.size();
    Element r = Element::one(n);
    for (const auto& block : A.blocks())
        for (std::size_t k = 1; k < block.size(); ++k) r = r * e_pair(block.front(), block[k], n);
    const BasisKey expect{A, Permutation::identity(n)};
    if (r.terms().size() != 1 || !r.coeff(expect).is_one())
        throw std::logic_error("e_set: product did not reduce to E_A");
    return r;
}

GeneratorWord word_expand(const BasisKey& key) {
    GeneratorWord word;
    for (const auto& block : key.A.blocks())
        for (std::size_t k = 1; k < block.size(); ++k) {
            auto part = e_pair_word(block.front(), block[k]);
            word.insert(word.end(), part.begin(), part.end());
        }
    for (int i : key.w.reduced_word()) word.push_back(Letter{GenKind::T, i});
    return word;
}

// ---------------------------------------------------------------- involutions and the form

Element star(const Element& x) {
    Element r(x.n());
    for (const auto& [k, c] : x.terms()) {
        Permutation winv = k.w.inverse();
        r.add_term(BasisKey{k.A.apply(winv), winv}, c);
    }
    return r;
}

Element flip(const Element& x) {
    const int n = x.n();
    Element r(n);
    for (const auto& [k, c] : x.terms()) {
        GeneratorWord word = word_expand(k);
        for (auto& l : word) l.index = n - l.index;
        r += evaluate(word, n) * c;
    }
    return r;
}

RatFunc epsilon(const Element& x) {
    const int n = x.n();
    return x.coeff(BasisKey{SetPartition::top(n), Permutation::identity(n)});
}

RatFunc form(const Element& x, const Element& y) {
    if (x.n() != y.n()) throw SizeMismatch("form: size mismatch");
    return epsilon(star(x) * y);
}

Rational moebius_coefficient(const SetPartition& A0) {
    const int n = A0.size();
    Element r = e_set(A0);
    const Element one = Element::one(n);
    for (const auto& A : SetPartition::enumerate(n))
        if (!(A == A0) && sp_leq(A0, A)) r = (one - e_set(A)) * r;
    const RatFunc c = epsilon(r);
    if (!c.is_constant()) throw std::logic_error("moebius_coefficient: coefficient depends on u");
    return c.constant();
}

SpecializedElement specialize(const Element& x, const Rational& q) {
    SpecializedElement s;
    s.n = x.n();
    for (const auto& [k, c] : x.terms()) {
        Rational v = c.eval(q);
        if (!v.is_zero()) s.terms.emplace(k, std::move(v));
    }
    return s;
}

// ---------------------------------------------------------------- relations

std::string to_string(const Letter& l) {
    switch (l.kind) {
        case GenKind::T: return "T" + std::to_string(l.index);
        case GenKind::Tinv: return "T" + std::to_string(l.index) + "^-1";
        case GenKind::E: return "E" + std::to_string(l.index);
    }
    return "?";
}

std::string to_string(const GeneratorWord& w) {
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += "*";
        s += to_string(w[i]);
    }
    return s;
}

Element evaluate(const LinearWord& lw, int n) {
    Element r(n);
    for (const auto& [c, w] : lw.terms) r += evaluate(w, n) * c;
    return r;
}

std::vector<RelationInstance> relation_instances(int n) {
    std::vector<RelationInstance> out;
    auto T = [](int i) { return Letter{GenKind::T, i}; };
    auto E = [](int i) { return Letter{GenKind::E, i}; };
    auto Ti = [](int i) { return Letter{GenKind::Tinv, i}; };
    auto mono = [](GeneratorWord w) { return LinearWord{{{RatFunc(1), std::move(w)}}}; };
    auto text = [](const std::vector<GeneratorWord>& sides) {
        std::string s;
        for (std::size_t k = 0; k < sides.size(); ++k) {
            if (k) s += " = ";
            s += to_string(sides[k]);
        }
        return s;
    };
    auto simple = [&](const std::string& fam, std::vector<GeneratorWord> sides) {
        RelationInstance r{fam, text(sides), {}};
        for (auto& s : sides) r.sides.push_back(mono(std::move(s)));
        out.push_back(std::move(r));
    };
    const int m = n - 1;
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j)
            if (std::abs(i - j) > 1) simple("E1", {{T(i), T(j)}, {T(j), T(i)}});
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j) simple("E2", {{E(i), E(j)}, {E(j), E(i)}});
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j)
            if (std::abs(i - j) > 1) simple("E3", {{E(i), T(j)}, {T(j), E(i)}});
    for (int i = 1; i <= m; ++i) simple("E4", {{E(i), E(i)}, {E(i)}});
    for (int i = 1; i <= m; ++i) simple("E5", {{E(i), T(i)}, {T(i), E(i)}});
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j)
            if (std::abs(i - j) == 1) simple("E6", {{T(i), T(j), T(i)}, {T(j), T(i), T(j)}});
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j)
            if (std::abs(i - j) == 1) simple("E7", {{E(j), T(i), T(j)}, {T(i), T(j), E(i)}});
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j)
            if (std::abs(i - j) == 1) simple("E8", {{E(i), E(j), T(j)}, {E(i), T(j), E(i)}, {T(j), E(i), E(j)}});
    const RatFunc um1 = RatFunc::u() - RatFunc(1);
    for (int i = 1; i <= m; ++i) {
        RelationInstance r{"E9", "T" + std::to_string(i) + "*T" + std::to_string(i) + " = 1 + (u-1)*E" +
                                     std::to_string(i) + "*(1+T" + std::to_string(i) + ")",
                           {}};
        r.sides.push_back(mono({T(i), T(i)}));
        r.sides.push_back(LinearWord{{{RatFunc(1), {}}, {um1, {E(i)}}, {um1, {E(i), T(i)}}}});
        out.push_back(std::move(r));
    }
    for (int i = 1; i <= m; ++i) {
        simple("inverse", {{T(i), Ti(i)}, {}});
        simple("inverse", {{Ti(i), T(i)}, {}});
    }
    return out;
}

RelationReport verify_relations(int n) {
    RelationReport rep;
    rep.n = n;
    rep.pass = true;
    for (const auto& inst : relation_instances(n)) {
        const Element first = evaluate(inst.sides.front(), n);
        bool ok = true;
        for (std::size_t k = 1; k < inst.sides.size(); ++k) ok = ok && evaluate(inst.sides[k], n) == first;
        rep.checks.push_back(RelationCheck{inst.family, inst.text, ok});
        rep.pass = rep.pass && ok;
    }
    return rep;
}

}  // namespace braidties
