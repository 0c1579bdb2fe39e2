#include "braidties/io.hpp"

namespace braidties {

json to_json(const Rational& r) { return r.to_fraction_string(); }

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    return Rational::parse(j.get<std::string>());
}

namespace {
json poly_json(const Poly& p) {
    json a = json::array();
    for (const auto& c : p.coeffs()) a.push_back(to_json(c));
    return a;
}
Poly poly_from_json(const json& j) {
    std::vector<Rational> c;
    for (const auto& x : j) c.push_back(rational_from_json(x));
    return Poly(std::move(c));
}
}  // namespace

json to_json(const RatFunc& f) { return json{{"num", poly_json(f.num())}, {"den", poly_json(f.den())}}; }

RatFunc ratfunc_from_json(const json& j) { return RatFunc(poly_from_json(j.at("num")), poly_from_json(j.at("den"))); }

json to_json(const SetPartition& A) { return A.blocks(); }

SetPartition set_partition_from_json(const json& j) {
    const auto blocks = j.get<std::vector<std::vector<int>>>();
    int n = 0;
    for (const auto& b : blocks) n += static_cast<int>(b.size());
    return SetPartition::from_blocks(blocks, n);
}

json to_json(const Permutation& w) { return w.images(); }

Permutation permutation_from_json(const json& j) { return Permutation(j.get<std::vector<int>>()); }

json to_json(const Element& x) {
    json a = json::array();
    for (const auto& [k, c] : x.terms())
        a.push_back(json{{"partition", to_json(k.A)}, {"perm", to_json(k.w)}, {"coeff", to_json(c)}});
    return a;
}

Element element_from_json(const json& j, int n) {
    Element x(n);
    for (const auto& t : j) {
        BasisKey k{set_partition_from_json(t.at("partition")), permutation_from_json(t.at("perm"))};
        if (k.w.size() != n || k.A.size() != n) throw SizeMismatch("element_from_json: size mismatch");
        x.add_term(k, ratfunc_from_json(t.at("coeff")));
    }
    return x;
}

json tensor_key_to_json(TensorKey k, int n) {
    json a = json::array();
    for (const auto& [lo, up] : key_pairs(k, n)) a.push_back(json::array({lo, up}));
    return a;
}

json to_json(const TensorVector<RatFunc>& v) {
    json a = json::array();
    for (const auto& [k, c] : v.terms) a.push_back(json{{"tensor", tensor_key_to_json(k, v.n)}, {"coeff", to_json(c)}});
    return a;
}

json to_json(const IntPartition& p) { return p.parts(); }

json to_json(const SpechtLabel& l) {
    json a = json::array();
    for (const auto& e : l.entries) a.push_back(json{{"lambda", to_json(e.lambda)}, {"m", e.m}, {"mu", to_json(e.mu)}});
    return a;
}

namespace {
json checks_json(const std::vector<RelationCheck>& checks) {
    json a = json::array();
    for (const auto& c : checks) a.push_back(json{{"family", c.family}, {"relation", c.text}, {"pass", c.pass}});
    return a;
}
}  // namespace

json to_json(const RelationReport& r) { return json{{"n", r.n}, {"pass", r.pass}, {"checks", checks_json(r.checks)}}; }

json to_json(const TensorRelationReport& r) {
    json pts = json::array();
    for (const auto& q : r.points) pts.push_back(to_json(q));
    return json{{"n", r.n}, {"mode", r.mode}, {"points", pts}, {"tensors", r.tensors}, {"pass", r.pass}, {"checks", checks_json(r.checks)}};
}

json to_json(const FaithfulnessReport& r) {
    json conf = json::array();
    for (const auto& [q, rk] : r.confirmations) conf.push_back(json{{"u", to_json(q)}, {"rank", rk}});
    return json{{"n", r.n},          {"rank", r.rank},     {"expected", r.expected},   {"pass", r.pass},
                {"probes", r.probes}, {"method", r.method}, {"confirmations", conf}};
}

json to_json(const QuotientReport& r) {
    return json{{"n", r.n},
                {"M", {{"E_vanishes", r.m_e_zero}, {"T_squared_is_identity", r.m_t_square}, {"rank", r.m_rank}}},
                {"N", {{"E_is_identity", r.n_e_identity}, {"hecke_quadratic", r.n_hecke}, {"rank", r.n_rank}}},
                {"expected", r.expected},
                {"pass", r.pass}};
}

json to_json(const ClassificationReport& r) {
    json labels = json::array(), dims = json::array();
    for (const auto& e : r.entries) {
        json entry = to_json(e.label);
        labels.push_back(entry.size() == 1 ? entry[0] : entry);
        dims.push_back(e.dim);
    }
    return json{{"n", r.n},
                {"labels", labels},
                {"dims", dims},
                {"sumSquares", r.sum_squares},
                {"dimAlgebra", r.dim_algebra},
                {"equal", r.equal},
                {"distinct", r.distinct}};
}

json to_json(const IdentityReport& r) {
    json a = json::array();
    for (const auto& c : r.checks)
        a.push_back(json{{"name", c.name}, {"instances", c.instances}, {"failures", c.failures}, {"pass", c.pass()}});
    return json{{"n", r.n}, {"pass", r.pass}, {"checks", a}};
}

}  // namespace braidties
