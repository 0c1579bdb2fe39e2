#include "braidties/specht.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

namespace braidties {

// ---------------------------------------------------------------- group algebra

GroupElement group_mul(const GroupElement& a, const GroupElement& b) {
    GroupElement r;
    for (const auto& [x, cx] : a)
        for (const auto& [y, cy] : b) {
            if (cx.is_zero() || cy.is_zero()) continue;
            auto [it, fresh] = r.try_emplace(x * y, cx * cy);
            if (!fresh) {
                it->second += cx * cy;
                if (it->second.is_zero()) r.erase(it);
            }
        }
    return r;
}

GroupElement group_add(GroupElement a, const GroupElement& b, const Rational& scale) {
    for (const auto& [w, c] : b) {
        if (c.is_zero() || scale.is_zero()) continue;
        auto [it, fresh] = a.try_emplace(w, c * scale);
        if (!fresh) {
            it->second += c * scale;
            if (it->second.is_zero()) a.erase(it);
        }
    }
    return a;
}

Symmetrizers symmetrizers(const IntPartition& lambda) {
    const auto t = tableau_data(lambda);
    Symmetrizers sy;
    for (const auto& w : t.row_stabilizer) sy.r.emplace(w, Rational(1));
    for (const auto& w : t.col_stabilizer) sy.c.emplace(w, Rational(w.sign()));
    sy.s = group_mul(sy.c, sy.r);
    const GroupElement sq = group_mul(sy.s, sy.s);
    const auto& [w0, c0] = *sy.s.begin();
    auto it = sq.find(w0);
    sy.scalar = it == sq.end() ? Rational(0) : it->second / c0;
    if (sy.scalar.is_zero() || group_add(sq, sy.s, -sy.scalar).size() != 0)
        throw std::logic_error("symmetrizers: s is not a preidempotent");
    return sy;
}

// ---------------------------------------------------------------- Hecke algebra

HeckeElement HeckeElement::T(const Permutation& w, RatFunc c) {
    HeckeElement h(w.size());
    h.add_term(w, c);
    return h;
}

RatFunc HeckeElement::coeff(const Permutation& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? RatFunc() : it->second;
}

void HeckeElement::add_term(const Permutation& w, const RatFunc& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
    if (n_ != o.n_) throw SizeMismatch("HeckeElement: size mismatch");
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& o) {
    if (n_ != o.n_) throw SizeMismatch("HeckeElement: size mismatch");
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

HeckeElement& HeckeElement::operator*=(const RatFunc& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, v] : terms_) v *= c;
    return *this;
}

HeckeElement operator*(const HeckeElement& a, const HeckeElement& b) {
    if (a.n() != b.n()) throw SizeMismatch("HeckeElement: size mismatch");
    const RatFunc u = RatFunc::u();
    const RatFunc um1 = u - RatFunc(1);
    HeckeElement r(a.n());
    for (const auto& [y, cy] : b.terms()) {
        const auto word = y.reduced_word();
        for (const auto& [x, cx] : a.terms()) {
            HeckeElement cur = HeckeElement::T(x, cx * cy);
            for (int i : word) {
                HeckeElement next(a.n());
                for (const auto& [z, c] : cur.terms()) {
                    if (z(i) < z(i + 1)) {
                        next.add_term(z.times_simple(i), c);
                    } else {
                        next.add_term(z.times_simple(i), c * u);
                        next.add_term(z, c * um1);
                    }
                }
                cur = std::move(next);
            }
            r += cur;
        }
    }
    return r;
}

HeckeElement hecke_iota(const std::vector<Permutation>& X, int n) {
    HeckeElement h(n);
    for (const auto& w : X) h.add_term(w, RatFunc(1));
    return h;
}

HeckeElement hecke_epsilon(const std::vector<Permutation>& X, int n) {
    HeckeElement h(n);
    const RatFunc m = -RatFunc::u().inverse();
    for (const auto& w : X) {
        RatFunc c(1);
        for (int k = 0; k < w.length(); ++k) c *= m;
        h.add_term(w, c);
    }
    return h;
}

GyojaElement gyoja_element(const IntPartition& lambda) {
    const int n = lambda.size();
    const auto t = tableau_data(lambda);
    const auto tc = tableau_data(lambda.conjugate());
    const HeckeElement y = hecke_epsilon(tc.row_stabilizer, n);
    GyojaElement g;
    g.c = HeckeElement::T(t.w_lambda.inverse()) * y * HeckeElement::T(t.w_lambda);
    g.r = hecke_iota(t.row_stabilizer, n);
    g.e = g.c * g.r;
    return g;
}

Element to_element(const HeckeElement& h, int n, int offset) {
    if (offset < 0 || offset + h.n() > n) throw std::out_of_range("to_element: block outside 1..n");
    Element x(n);
    const auto bottom = SetPartition::bottom(n);
    for (const auto& [w, c] : h.terms()) {
        std::vector<int> img(static_cast<std::size_t>(n));
        for (int i = 1; i <= n; ++i) img[static_cast<std::size_t>(i - 1)] = i;
        for (int i = 1; i <= h.n(); ++i) img[static_cast<std::size_t>(offset + i - 1)] = offset + w(i);
        x.add_term(BasisKey{bottom, Permutation(img)}, c);
    }
    return x;
}

HeckeElement collapse(const Element& x) {
    HeckeElement h(x.n());
    for (const auto& [k, c] : x.terms()) h.add_term(k.w, c);
    return h;
}

std::optional<RatFunc> proportionality(const HeckeElement& lhs, const HeckeElement& base) {
    if (base.is_zero()) return lhs.is_zero() ? std::optional<RatFunc>(RatFunc()) : std::nullopt;
    const auto& [w, c] = *base.terms().begin();
    const RatFunc C = lhs.coeff(w) / c;
    if (!(base * C == lhs)) return std::nullopt;
    return C;
}

// ---------------------------------------------------------------- labels

BlockStructure block_structure(const SpechtLabel& label) {
    label.validate();
    BlockStructure bs;
    bs.label = label;
    const int n = label.n();
    int next = 1;
    for (std::size_t s = 0; s < label.entries.size(); ++s) {
        const auto& e = label.entries[s];
        bs.first_block.push_back(static_cast<int>(bs.blocks.size()));
        for (int b = 0; b < e.m; ++b) {
            std::vector<int> block;
            for (int k = 0; k < e.lambda.size(); ++k) block.push_back(next++);
            bs.blocks.push_back(block);
            bs.group.push_back(static_cast<int>(s));
        }
    }
    bs.A = SetPartition::from_blocks(bs.blocks, n);
    return bs;
}

Permutation block_permutation(const BlockStructure& bs, int s, const Permutation& sigma) {
    const int n = bs.label.n();
    const int first = bs.first_block[static_cast<std::size_t>(s)];
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) img[static_cast<std::size_t>(i - 1)] = i;
    for (int k = 1; k <= sigma.size(); ++k) {
        const auto& from = bs.blocks[static_cast<std::size_t>(first + k - 1)];
        const auto& to = bs.blocks[static_cast<std::size_t>(first + sigma(k) - 1)];
        for (std::size_t p = 0; p < from.size(); ++p) img[static_cast<std::size_t>(from[p] - 1)] = to[p];
    }
    return Permutation(img);
}

TensorKey v_Lambda(const SpechtLabel& label) {
    const auto bs = block_structure(label);
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t b = 0; b < bs.blocks.size(); ++b) {
        const auto& lam = label.entries[static_cast<std::size_t>(bs.group[b])].lambda;
        for (int row = 1; row <= lam.length(); ++row)
            for (int k = 0; k < lam.parts()[static_cast<std::size_t>(row - 1)]; ++k)
                pairs.emplace_back(row, static_cast<int>(b) + 1);
    }
    return make_key(pairs);
}

namespace {

// prod_s sum_{sigma in X(mu^s)} sign^signed T_{iota_s(sigma)}
Element block_symmetrizer(const BlockStructure& bs, bool columns) {
    const int n = bs.label.n();
    Element acc = Element::one(n);
    for (std::size_t s = 0; s < bs.label.entries.size(); ++s) {
        const auto t = tableau_data(bs.label.entries[s].mu);
        Element f(n);
        for (const auto& sigma : columns ? t.col_stabilizer : t.row_stabilizer)
            f.add_term(BasisKey{SetPartition::bottom(n), block_permutation(bs, static_cast<int>(s), sigma)},
                       RatFunc(columns ? sigma.sign() : 1));
        acc = acc * f;
    }
    return acc;
}

}  // namespace

Element row_block_symmetrizer(const SpechtLabel& label) { return block_symmetrizer(block_structure(label), false); }

TensorVector<RatFunc> w_Lambda(const SpechtLabel& label) {
    const int n = label.n();
    return act(row_block_symmetrizer(label), TensorVector<RatFunc>::pure(n, v_Lambda(label)), RatFunc::u());
}

ELambdaFactors e_Lambda_factors(const SpechtLabel& label) {
    const auto bs = block_structure(label);
    const int n = label.n();
    ELambdaFactors f;
    f.column_blocks = block_symmetrizer(bs, true);
    f.hecke = Element::one(n);
    for (std::size_t b = 0; b < bs.blocks.size(); ++b) {
        const auto g = gyoja_element(label.entries[static_cast<std::size_t>(bs.group[b])].lambda);
        f.hecke = f.hecke * to_element(g.c, n, bs.blocks[b].front() - 1);
    }
    f.tie = e_set(bs.A);
    if (!(f.column_blocks * f.hecke == f.hecke * f.column_blocks) || !(f.column_blocks * f.tie == f.tie * f.column_blocks) ||
        !(f.hecke * f.tie == f.tie * f.hecke))
        throw std::logic_error("e_Lambda: factors do not commute for " + label.to_string());
    f.product = f.column_blocks * f.hecke * f.tie;
    return f;
}

Element e_Lambda(const SpechtLabel& label) { return e_Lambda_factors(label).product; }

// ---------------------------------------------------------------- modules

template <class F>
EchelonBasis<F> specht_span(const SpechtLabel& label, const F& q) {
    const int n = label.n();
    const Element e = e_Lambda(label);
    const auto w = act(row_block_symmetrizer(label), TensorVector<F>::pure(n, v_Lambda(label)), q);
    const auto seed = act(e, w, q);
    if (seed.is_zero()) throw std::logic_error("specht_module: e_Lambda w_Lambda vanishes for " + label.to_string());
    using V = SparseVec<F>;
    std::function<std::vector<V>(const V&)> step = [n, &q](const V& v) {
        std::vector<V> out;
        const TensorVector<F> tv{n, v};
        for (int k = 1; k < n; ++k) {
            out.push_back(act_T(k, tv, q).terms);
            out.push_back(act_E(k, tv).terms);
        }
        return out;
    };
    return span_closure<F>({seed.terms}, step);
}

template EchelonBasis<RatFunc> specht_span<RatFunc>(const SpechtLabel&, const RatFunc&);
template EchelonBasis<Rational> specht_span<Rational>(const SpechtLabel&, const Rational&);

SpechtModule specht_module(const SpechtLabel& label, const SpechtOptions& opts) {
    const int n = label.n();
    check_guard(n, 4, opts.force, "specht");
    SpechtModule m;
    m.label = label;
    if (n <= opts.exact_up_to) {
        const auto basis = specht_span<RatFunc>(label, RatFunc::u());
        m.exact = true;
        m.dim = basis.size();
        for (const auto& row : basis.rows()) m.basis.push_back(TensorVector<RatFunc>{n, row});
        return m;
    }
    std::mt19937_64 rng(opts.seed);
    auto at = [&](const Rational& q) {
        m.points.push_back(q);
        return specht_span<Rational>(label, q).size();
    };
    const std::size_t d1 = at(random_rational(rng));
    const std::size_t d2 = at(random_rational(rng));
    m.dim = d1 == d2 ? d1 : std::max({d1, d2, at(random_rational(rng))});
    return m;
}

ClassificationReport classification_report(int n, const SpechtOptions& opts) {
    check_guard(n, 4, opts.force, "specht");
    ClassificationReport rep;
    rep.n = n;
    rep.dim_algebra = factorial(n) * bell_number(n);
    using Fingerprint = std::tuple<std::vector<int>, std::vector<std::vector<int>>, std::vector<std::vector<int>>>;
    std::set<Fingerprint> seen;
    rep.distinct = true;
    for (const auto& label : enumerate_labels(n)) {
        const auto m = specht_module(label, opts);
        rep.entries.push_back(ClassificationEntry{label, m.dim});
        rep.sum_squares += static_cast<long>(m.dim * m.dim);
        const auto bs = block_structure(label);
        Fingerprint fp;
        for (const auto& b : bs.blocks) std::get<0>(fp).push_back(static_cast<int>(b.size()));
        for (const auto& e : label.entries) {
            std::get<1>(fp).push_back(e.lambda.parts());
            std::get<2>(fp).push_back(e.mu.parts());
        }
        rep.distinct = seen.insert(fp).second && rep.distinct;
    }
    rep.equal = rep.sum_squares == rep.dim_algebra;
    return rep;
}

// ---------------------------------------------------------------- checks

RatFunc tensor_weight(TensorKey k, int n) {
    int inv = 0;
    for (int p = 1; p <= n; ++p)
        for (int q = p + 1; q <= n; ++q)
            if (upper(k, p) == upper(k, q) && lower(k, p) > lower(k, q)) ++inv;
    RatFunc w(1);
    for (int i = 0; i < inv; ++i) w *= RatFunc::u();
    return w;
}

RatFunc tensor_form(const TensorVector<RatFunc>& v, const TensorVector<RatFunc>& w) {
    if (v.n != w.n) throw SizeMismatch("tensor_form: size mismatch");
    RatFunc s;
    for (const auto& [k, c] : v.terms) {
        auto it = w.terms.find(k);
        if (it != w.terms.end()) s += c * it->second * tensor_weight(k, v.n);
    }
    return s;
}

bool e_action_check(const SpechtLabel& label, const SetPartition& B) {
    const auto bs = block_structure(label);
    const auto w = w_Lambda(label);
    const auto img = act(e_set(B), w, RatFunc::u());
    return sp_leq(B, bs.A) ? img == w : img.is_zero();
}

std::size_t e_Lambda_image_rank(const SpechtLabel& label) {
    const int n = label.n();
    const Element e = e_Lambda(label);
    const auto basis = specht_span<RatFunc>(label, RatFunc::u());
    std::vector<SparseVec<RatFunc>> rows;
    for (const auto& b : basis.rows()) rows.push_back(act(e, TensorVector<RatFunc>{n, b}, RatFunc::u()).terms);
    return rank_of(rows);
}

std::vector<Rational> character(const SpechtLabel& label, const Rational& q) {
    const int n = label.n();
    const auto basis = specht_span<Rational>(label, q);
    std::vector<Rational> chi;
    for (const auto& g : basis_keys(n)) {
        const auto word = word_expand(g);
        Rational tr(0);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            const auto img = act_word(word, TensorVector<Rational>{n, basis.rows()[i]}, q);
            const auto coords = basis.coordinates(img.terms);
            if (!coords) throw std::logic_error("character: module not closed");
            tr += (*coords)[i];
        }
        chi.push_back(tr);
    }
    return chi;
}

}  // namespace braidties

namespace braidties {

std::size_t gyoja_weight_rank(const IntPartition& lambda, const IntPartition& mu) {
    const int n = lambda.size();
    if (mu.size() != n) throw SizeMismatch("gyoja_weight_rank: size mismatch");
    const Element c = to_element(gyoja_element(lambda).c, n);
    const RatFunc u = RatFunc::u();
    std::vector<int> content;
    for (std::size_t r = 0; r < mu.parts().size(); ++r)
        for (int k = 0; k < mu.parts()[r]; ++k) content.push_back(static_cast<int>(r) + 1);
    std::vector<SparseVec<RatFunc>> rows;
    do {
        std::vector<std::pair<int, int>> pairs;
        for (int i : content) pairs.emplace_back(i, 1);
        rows.push_back(act(c, TensorVector<RatFunc>::pure(n, make_key(pairs)), u).terms);
    } while (std::next_permutation(content.begin(), content.end()));
    return rank_of(rows);
}

}  // namespace braidties
