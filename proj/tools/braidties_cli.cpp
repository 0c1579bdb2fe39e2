#include "braidties/expr.hpp"
#include "braidties/identities.hpp"
#include "braidties/io.hpp"
#include "braidties/specht.hpp"
#include "braidties/tensor.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <random>

using namespace braidties;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr std::uint64_t kDefaultSeed = 0x5eed;

struct Options {
    int n = 0;
    bool json = false;
    bool force = false;
    std::uint64_t seed = kDefaultSeed;
    std::string expr;
    bool tensor = false;
    int label = 0;
    int points = 1;
    std::string at;
    bool u1 = false;
};

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_dim(const Options& o) {
    check_guard(o.n, 6, o.force, "dim");
    const long d = factorial(o.n) * bell_number(o.n);
    const auto counted = static_cast<long>(basis_keys(o.n).size());
    if (o.json) {
        print_json({{"n", o.n}, {"dim", d}, {"factorial", factorial(o.n)}, {"bell", bell_number(o.n)}, {"basisCount", counted}});
    } else {
        std::cout << d << "\n";
    }
    return counted == d ? 0 : kExitFail;
}

int cmd_basis(const Options& o) {
    check_guard(o.n, 6, o.force, "basis");
    const auto keys = basis_keys(o.n);
    if (o.json) {
        json a = json::array();
        for (const auto& k : keys) a.push_back({{"partition", to_json(k.A)}, {"perm", to_json(k.w)}});
        print_json({{"n", o.n}, {"size", keys.size()}, {"basis", a}});
        return 0;
    }
    for (const auto& k : keys) std::cout << to_text(Element::basis(k)) << "\n";
    return 0;
}

int cmd_eval(const Options& o) {
    check_guard(o.n, 6, o.force, "eval");
    const Element x = parse_word(o.expr, o.n);
    if (o.json) {
        print_json({{"n", o.n}, {"expr", o.expr}, {"text", to_text(x)}, {"terms", to_json(x)}});
    } else {
        std::cout << to_text(x) << "\n";
    }
    return 0;
}

void print_checks(const std::string& title, const std::vector<RelationCheck>& checks) {
    std::map<std::string, std::pair<int, int>> families;
    for (const auto& c : checks) {
        auto& [total, failed] = families[c.family];
        ++total;
        if (!c.pass) {
            ++failed;
            std::cout << "  FAIL " << c.family << ": " << c.text << "\n";
        }
    }
    std::cout << title << "\n";
    for (const auto& [f, tf] : families)
        std::cout << "  " << f << ": " << tf.first << " instances, " << (tf.second == 0 ? "ok" : "FAILED") << "\n";
}

int cmd_verify(const Options& o) {
    check_guard(o.n, 6, o.force, "verify");
    std::mt19937_64 rng(o.seed);
    const auto rel = verify_relations(o.n);
    bool pass = rel.pass;
    json out = {{"relations", to_json(rel)}};
    std::optional<TensorRelationReport> ten;
    if (o.tensor) {
        check_guard(o.n, 4, o.force, "verify --tensor");
        ten = verify_tensor_relations(o.n, o.n <= 3, 3, rng);
        pass = pass && ten->pass;
        out["tensor"] = to_json(*ten);
    }
    out["pass"] = pass;
    if (o.json) {
        print_json(out);
    } else {
        print_checks("relations in E_" + std::to_string(o.n) + "(u) via the product:", rel.checks);
        if (ten) {
            std::string mode = ten->mode;
            if (!ten->points.empty()) {
                mode += " at u =";
                for (const auto& q : ten->points) mode += " " + q.to_string();
            }
            print_checks("relations as operators on " + std::to_string(ten->tensors) + " pure tensors (" + mode + "):",
                         ten->checks);
        }
        std::cout << (pass ? "PASS" : "FAIL") << "\n";
    }
    return pass ? 0 : kExitFail;
}

int cmd_specht(const Options& o) {
    check_guard(o.n, 4, o.force, "specht");
    SpechtOptions so;
    so.seed = o.seed;
    so.force = o.force;
    if (o.label > 0) {
        const auto labels = enumerate_labels(o.n);
        if (o.label > static_cast<int>(labels.size()))
            throw CLI::ValidationError("--label", "out of range 1.." + std::to_string(labels.size()));
        const auto m = specht_module(labels[static_cast<std::size_t>(o.label - 1)], so);
        if (o.json) {
            json basis = json::array();
            for (const auto& v : m.basis) basis.push_back(to_json(v));
            json pts = json::array();
            for (const auto& q : m.points) pts.push_back(to_json(q));
            print_json({{"n", o.n}, {"index", o.label}, {"label", to_json(m.label)}, {"dim", m.dim}, {"exact", m.exact},
                        {"points", pts}, {"basis", basis}});
            return 0;
        }
        std::cout << "label " << m.label.to_string() << "\ndim " << m.dim << (m.exact ? " (exact)" : " (specialized)") << "\n";
        for (std::size_t i = 0; i < m.basis.size(); ++i) {
            std::cout << "b" << i + 1 << " =";
            bool first = true;
            for (const auto& [k, c] : m.basis[i].terms) {
                std::cout << (first ? " " : " + ") << (c.needs_parens() ? "(" + c.to_string() + ")" : c.to_string()) << "*"
                          << key_to_string(k, o.n);
                first = false;
            }
            std::cout << "\n";
        }
        return 0;
    }
    const auto rep = classification_report(o.n, so);
    const bool ok = rep.sum_squares <= rep.dim_algebra;
    if (o.json) {
        print_json(to_json(rep));
    } else {
        for (std::size_t i = 0; i < rep.entries.size(); ++i)
            std::cout << i + 1 << "  " << rep.entries[i].label.to_string() << "  dim " << rep.entries[i].dim << "\n";
        std::cout << "labels " << rep.entries.size() << "\nsum of squares " << rep.sum_squares << "\ndim E_" << o.n
                  << "(u) " << rep.dim_algebra << "\n"
                  << (rep.equal ? "equal" : "not equal") << "\n";
    }
    return ok ? 0 : kExitFail;
}

int cmd_faithful(const Options& o) {
    FaithfulnessOptions fo;
    fo.seed = o.seed;
    fo.points = o.points;
    fo.force = o.force;
    const auto rep = faithfulness_certificate(o.n, fo);
    if (o.json) {
        print_json(to_json(rep));
    } else {
        std::cout << "method " << rep.method << "\nprobes " << rep.probes << "\nrank " << rep.rank << " of " << rep.expected << "\n";
        for (const auto& [q, r] : rep.confirmations) std::cout << "  u = " << q.to_fraction_string() << ": rank " << r << "\n";
        std::cout << (rep.pass ? "PASS" : "FAIL") << "\n";
    }
    return rep.pass ? 0 : kExitFail;
}

int cmd_gram(const Options& o) {
    check_guard(o.n, 4, o.force, "gram");
    const auto g = gram_matrix(o.n);
    std::size_t r = 0;
    std::string where;
    if (o.u1 || !o.at.empty()) {
        const Rational q = o.u1 ? Rational(1) : Rational::parse(o.at);
        const auto rows = g.specialized_rows(q);
        if (!rows) throw std::invalid_argument("gram: an entry has a pole at u = " + q.to_fraction_string());
        r = rank_of(*rows);
        where = "u = " + q.to_string();
    } else {
        std::mt19937_64 rng(o.seed);
        r = o.n <= 3 ? rank(g, RankMode::Exact, rng) : rank(g, RankMode::Specialized, rng);
        where = o.n <= 3 ? "exact" : "specialized";
    }
    const bool full = r == g.rows;
    if (o.json) {
        print_json({{"n", o.n}, {"size", g.rows}, {"rank", r}, {"at", where}, {"nondegenerate", full}});
    } else {
        std::cout << "Gram matrix " << g.rows << "x" << g.cols << " (" << where << "): rank " << r << "\n"
                  << (full ? "nondegenerate" : "degenerate") << "\n";
    }
    return full ? 0 : kExitFail;
}

int cmd_moebius(const Options& o) {
    check_guard(o.n, 5, o.force, "moebius");
    const auto top = SetPartition::top(o.n);
    bool classical = true, shifted = true, lattice = true;
    json rows = json::array();
    for (const auto& A0 : SetPartition::enumerate(o.n)) {
        const Rational c = moebius_coefficient(A0);
        const long mu = sp_moebius(A0, top);
        const int k = A0.num_blocks();
        const long sign = (k - 1) % 2 == 0 ? 1 : -1;
        const long cl = sign * factorial(k - 1), sh = sign * factorial(k);
        lattice = lattice && c == Rational(mu);
        classical = classical && c == Rational(cl);
        shifted = shifted && c == Rational(sh);
        rows.push_back({{"partition", to_json(A0)}, {"blocks", k}, {"coefficient", to_json(c)}, {"lattice", mu}});
        if (!o.json)
            std::cout << A0.to_string() << "  k=" << k << "  coefficient " << c.to_fraction_string() << "  lattice " << mu << "\n";
    }
    const std::string closed = classical ? "(-1)^(k-1) (k-1)!" : shifted ? "(-1)^(k-1) k!" : "neither";
    if (o.json) {
        print_json({{"n", o.n}, {"rows", rows}, {"matchesLattice", lattice}, {"closedForm", closed}});
    } else {
        std::cout << "matches lattice Moebius function: " << (lattice ? "yes" : "no") << "\nclosed form: " << closed << "\n";
    }
    return lattice ? 0 : kExitFail;
}

int cmd_labels(const Options& o) {
    check_guard(o.n, 8, o.force, "labels");
    const auto labels = enumerate_labels(o.n);
    if (o.json) {
        json a = json::array();
        for (const auto& l : labels) a.push_back(to_json(l));
        print_json({{"n", o.n}, {"count", labels.size()}, {"labels", a}});
        return 0;
    }
    for (std::size_t i = 0; i < labels.size(); ++i) std::cout << i + 1 << "  " << labels[i].to_string() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations in the algebra of braids and ties"};
    app.require_subcommand(1, 1);
    Options o;

    auto common = [&](CLI::App* sub, bool json_flag) {
        sub->add_option("--n", o.n, "size")->required()->check(CLI::PositiveNumber);
        if (json_flag) sub->add_flag("--json", o.json, "JSON output");
        sub->add_flag("--force", o.force, "ignore the size guard");
        sub->add_option("--seed", o.seed, "seed for randomized checks");
    };

    auto* dim = app.add_subcommand("dim", "dimension n! B_n");
    common(dim, true);
    auto* basis = app.add_subcommand("basis", "list the basis E_A T_w");
    common(basis, true);
    auto* eval = app.add_subcommand("eval", "normal form of an expression");
    common(eval, true);
    eval->add_option("--expr", o.expr, "expression in T_i, E_i, E{...}, u")->required();
    auto* verify = app.add_subcommand("verify", "check the defining relations");
    common(verify, true);
    verify->add_flag("--tensor", o.tensor, "also check them on the tensor space");
    auto* specht = app.add_subcommand("specht", "Specht module dimensions");
    common(specht, true);
    specht->add_option("--label", o.label, "1-based label index (see labels)")->check(CLI::PositiveNumber);
    auto* faithful = app.add_subcommand("faithful", "faithfulness of the tensor representation");
    common(faithful, true);
    faithful->add_option("--points", o.points, "random confirmation points")->check(CLI::NonNegativeNumber);
    auto* gram = app.add_subcommand("gram", "rank of the Gram matrix of the form");
    common(gram, true);
    auto* at = gram->add_option("--at", o.at, "specialize at u = P/Q");
    gram->add_flag("--u1", o.u1, "specialize at u = 1")->excludes(at);
    auto* moebius = app.add_subcommand("moebius", "Moebius coefficients of the tie idempotents");
    common(moebius, true);
    auto* labels = app.add_subcommand("labels", "Specht labels");
    common(labels, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (*dim) return cmd_dim(o);
        if (*basis) return cmd_basis(o);
        if (*eval) return cmd_eval(o);
        if (*verify) return cmd_verify(o);
        if (*specht) return cmd_specht(o);
        if (*faithful) return cmd_faithful(o);
        if (*gram) return cmd_gram(o);
        if (*moebius) return cmd_moebius(o);
        if (*labels) return cmd_labels(o);
    } catch (const ParseError& e) {
        std::cerr << "parse error at position " << e.position() << ": " << e.what() << "\n";
        return kExitUsage;
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
