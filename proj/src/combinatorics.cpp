#include "braidties/combinatorics.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <tuple>

namespace braidties {

namespace {

std::string join_ints(const std::vector<int>& v, const char* open, const char* close) {
    std::string s = open;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + close;
}

}  // namespace

// ---------------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size() + 1, false);
    for (int x : images_) {
        if (x < 1 || x > size() || seen[static_cast<std::size_t>(x)])
            throw std::invalid_argument("Permutation: not a bijection: " + join_ints(images_, "[", "]"));
        seen[static_cast<std::size_t>(x)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    Permutation p;
    p.images_ = std::move(v);
    return p;
}

Permutation Permutation::simple(int i, int n) {
    if (i < 1 || i >= n) throw std::out_of_range("Permutation::simple: index out of range");
    return identity(n).times_simple(i);
}

Permutation Permutation::from_word(const std::vector<int>& word, int n) {
    Permutation p = identity(n);
    for (int i : word) {
        if (i < 1 || i >= n) throw std::out_of_range("Permutation::from_word: letter out of range");
        p = p.times_simple(i);
    }
    return p;
}

std::vector<Permutation> Permutation::all(int n) {
    std::vector<Permutation> out;
    Permutation p = identity(n);
    do {
        out.push_back(p);
    } while (std::next_permutation(p.images_.begin(), p.images_.end()));
    return out;
}

Permutation Permutation::compose(const Permutation& w) const {
    if (size() != w.size()) throw SizeMismatch("Permutation::compose: size mismatch");
    Permutation r;
    r.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
        r.images_[i] = images_[static_cast<std::size_t>(w.images_[i] - 1)];
    return r;
}

Permutation Permutation::inverse() const {
    Permutation r;
    r.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
        r.images_[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
    return r;
}

Permutation Permutation::times_simple(int i) const {
    Permutation r = *this;
    std::swap(r.images_[static_cast<std::size_t>(i - 1)], r.images_[static_cast<std::size_t>(i)]);
    return r;
}

int Permutation::length() const {
    int inv = 0;
    for (std::size_t i = 0; i < images_.size(); ++i)
        for (std::size_t j = i + 1; j < images_.size(); ++j)
            if (images_[i] > images_[j]) ++inv;
    return inv;
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != static_cast<int>(i) + 1) return false;
    return true;
}

std::vector<int> Permutation::reduced_word() const {
    // Repeatedly strip the smallest left descent s_i (w^{-1}(i) > w^{-1}(i+1)).
    std::vector<int> word;
    Permutation inv = inverse();
    const int n = size();
    for (;;) {
        int d = 0;
        for (int i = 1; i < n; ++i) {
            if (inv(i) > inv(i + 1)) {
                d = i;
                break;
            }
        }
        if (d == 0) break;
        word.push_back(d);
        // s_d w has inverse w^{-1} s_d.
        inv = inv.times_simple(d);
    }
    return word;
}

std::uint64_t Permutation::code() const {
    std::uint64_t c = 0;
    for (int x : images_) c = (c << 4) | static_cast<std::uint64_t>(x);
    return c;
}

std::string Permutation::to_string() const { return join_ints(images_, "[", "]"); }

// ---------------------------------------------------------------- IntPartition

IntPartition::IntPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p < 1) throw std::invalid_argument("IntPartition: parts must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

int IntPartition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

IntPartition IntPartition::conjugate() const {
    std::vector<int> c;
    if (parts_.empty()) return IntPartition();
    for (int j = 1; j <= parts_.front(); ++j) {
        int cnt = 0;
        for (int p : parts_)
            if (p >= j) ++cnt;
        c.push_back(cnt);
    }
    return IntPartition(std::move(c));
}

std::vector<int> IntPartition::partial_sums(int k) const {
    std::vector<int> s(static_cast<std::size_t>(k));
    int acc = 0;
    for (int i = 0; i < k; ++i) {
        if (i < length()) acc += parts_[static_cast<std::size_t>(i)];
        s[static_cast<std::size_t>(i)] = acc;
    }
    return s;
}

namespace {
void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<IntPartition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<IntPartition> IntPartition::all(int n) {
    std::vector<IntPartition> out;
    std::vector<int> cur;
    partitions_rec(n, n, cur, out);
    std::sort(out.begin(), out.end(), total_lt);
    return out;
}

std::string IntPartition::to_string() const { return join_ints(parts_, "(", ")"); }

bool dominance_leq(const IntPartition& a, const IntPartition& b) {
    if (a.size() != b.size()) throw SizeMismatch("dominance_leq: partitions of different sizes");
    const int k = std::max(a.length(), b.length());
    auto sa = a.partial_sums(k), sb = b.partial_sums(k);
    for (int i = 0; i < k; ++i)
        if (sa[static_cast<std::size_t>(i)] > sb[static_cast<std::size_t>(i)]) return false;
    return true;
}

bool total_lt(const IntPartition& a, const IntPartition& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    const int k = std::max(a.length(), b.length());
    auto sa = a.partial_sums(k), sb = b.partial_sums(k);
    for (int i = 0; i < k; ++i)
        if (sa[static_cast<std::size_t>(i)] != sb[static_cast<std::size_t>(i)])
            return sa[static_cast<std::size_t>(i)] < sb[static_cast<std::size_t>(i)];
    return false;
}

// ---------------------------------------------------------------- SetPartition

SetPartition SetPartition::from_labels(const std::vector<int>& labels) {
    SetPartition p;
    std::map<int, int> relabel;
    p.labels_.reserve(labels.size());
    for (int l : labels) {
        auto [it, fresh] = relabel.emplace(l, static_cast<int>(relabel.size()));
        p.labels_.push_back(it->second);
    }
    p.build_blocks();
    return p;
}

SetPartition SetPartition::from_blocks(const std::vector<std::vector<int>>& blocks, int n) {
    std::vector<int> labels(static_cast<std::size_t>(n), -1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty()) throw std::invalid_argument("SetPartition: empty block");
        for (int x : blocks[b]) {
            if (x < 1 || x > n) throw std::out_of_range("SetPartition: element out of range");
            if (labels[static_cast<std::size_t>(x - 1)] != -1)
                throw std::invalid_argument("SetPartition: blocks overlap");
            labels[static_cast<std::size_t>(x - 1)] = static_cast<int>(b);
        }
    }
    for (int l : labels)
        if (l == -1) throw std::invalid_argument("SetPartition: blocks do not cover {1..n}");
    return from_labels(labels);
}

SetPartition SetPartition::bottom(int n) {
    std::vector<int> labels(static_cast<std::size_t>(n));
    std::iota(labels.begin(), labels.end(), 0);
    return from_labels(labels);
}

SetPartition SetPartition::top(int n) { return from_labels(std::vector<int>(static_cast<std::size_t>(n), 0)); }

namespace {
struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
    std::vector<int> labels() {
        std::vector<int> l(parent.size());
        for (std::size_t i = 0; i < parent.size(); ++i) l[i] = find(static_cast<int>(i));
        return l;
    }
};
}  // namespace

SetPartition SetPartition::closure(const std::vector<std::pair<int, int>>& R, int n) {
    UnionFind uf(n);
    for (auto [i, j] : R) {
        if (i < 1 || i > n || j < 1 || j > n) throw std::out_of_range("sp_closure: pair entry out of range");
        uf.unite(i - 1, j - 1);
    }
    return from_labels(uf.labels());
}

namespace {
void rgs_rec(std::vector<int>& cur, int max_label, int n, std::vector<SetPartition>& out) {
    if (static_cast<int>(cur.size()) == n) {
        out.push_back(SetPartition::from_labels(cur));
        return;
    }
    for (int l = 0; l <= max_label + 1; ++l) {
        cur.push_back(l);
        rgs_rec(cur, std::max(max_label, l), n, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<SetPartition> SetPartition::enumerate(int n) {
    std::vector<SetPartition> out;
    if (n <= 0) return out;
    std::vector<int> cur{0};
    rgs_rec(cur, 0, n, out);
    std::sort(out.begin(), out.end());
    return out;
}

void SetPartition::build_blocks() {
    int k = 0;
    for (int l : labels_) k = std::max(k, l + 1);
    blocks_.assign(static_cast<std::size_t>(k), {});
    for (std::size_t i = 0; i < labels_.size(); ++i)
        blocks_[static_cast<std::size_t>(labels_[i])].push_back(static_cast<int>(i) + 1);
}

SetPartition SetPartition::apply(const Permutation& w) const {
    if (w.size() != size()) throw SizeMismatch("sp_apply: size mismatch");
    std::vector<int> labels(labels_.size());
    for (int i = 1; i <= size(); ++i) labels[static_cast<std::size_t>(w(i) - 1)] = block_of(i);
    return from_labels(labels);
}

std::uint64_t SetPartition::code() const {
    std::uint64_t c = 0;
    for (int x : labels_) c = (c << 4) | static_cast<std::uint64_t>(x);
    return c;
}

std::string SetPartition::to_string() const {
    std::string s = "[";
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        if (b) s += ",";
        s += join_ints(blocks_[b], "[", "]");
    }
    return s + "]";
}

bool sp_leq(const SetPartition& a, const SetPartition& b) {
    if (a.size() != b.size()) throw SizeMismatch("sp_leq: size mismatch");
    for (const auto& block : a.blocks())
        for (int x : block)
            if (!b.same_block(block.front(), x)) return false;
    return true;
}

SetPartition sp_join(const SetPartition& a, const SetPartition& b) {
    if (a.size() != b.size()) throw SizeMismatch("sp_join: size mismatch");
    UnionFind uf(a.size());
    for (const auto* p : {&a, &b})
        for (const auto& block : p->blocks())
            for (int x : block) uf.unite(block.front() - 1, x - 1);
    return SetPartition::from_labels(uf.labels());
}

long sp_moebius(const SetPartition& a, const SetPartition& b) {
    if (!sp_leq(a, b)) throw std::invalid_argument("sp_moebius: first argument does not refine the second");
    static std::mutex mu;
    static std::map<std::tuple<int, std::uint64_t, std::uint64_t>, long> memo;
    const auto key = std::make_tuple(a.size(), a.code(), b.code());
    {
        std::lock_guard lock(mu);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
    }
    long value = 1;
    if (!(a == b)) {
        value = 0;
        for (const auto& c : SetPartition::enumerate(a.size()))
            if (!(c == b) && sp_leq(a, c) && sp_leq(c, b)) value -= sp_moebius(a, c);
    }
    std::lock_guard lock(mu);
    memo.emplace(key, value);
    return value;
}

long bell_number(int n) {
    // Bell triangle.
    std::vector<long> row{1};
    for (int i = 1; i <= n; ++i) {
        std::vector<long> next{row.back()};
        for (long x : row) next.push_back(next.back() + x);
        row = std::move(next);
    }
    return row.front();
}

long factorial(int n) {
    long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// ---------------------------------------------------------------- tableaux

std::vector<Permutation> young_subgroup(const std::vector<std::vector<int>>& sets, int n) {
    std::vector<Permutation> out{Permutation::identity(n)};
    for (const auto& set : sets) {
        if (set.size() < 2) continue;
        std::vector<int> sorted = set;
        std::sort(sorted.begin(), sorted.end());
        std::vector<Permutation> next;
        std::vector<int> img = sorted;
        do {
            std::vector<int> local = Permutation::identity(n).images();
            for (std::size_t k = 0; k < sorted.size(); ++k) local[static_cast<std::size_t>(sorted[k] - 1)] = img[k];
            Permutation g(local);
            for (const auto& p : out) next.push_back(g * p);
        } while (std::next_permutation(img.begin(), img.end()));
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

TableauData tableau_data(const IntPartition& shape) {
    TableauData t;
    t.shape = shape;
    const int n = shape.size();
    const auto& rows = shape.parts();
    int next = 1;
    for (int r : rows) {
        std::vector<int> row;
        for (int j = 0; j < r; ++j) row.push_back(next++);
        t.row_tableau.push_back(row);
    }
    t.col_tableau.assign(rows.size(), {});
    for (std::size_t r = 0; r < rows.size(); ++r) t.col_tableau[r].resize(static_cast<std::size_t>(rows[r]));
    next = 1;
    const auto cols = shape.conjugate().parts();
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (int r = 0; r < cols[c]; ++r) t.col_tableau[static_cast<std::size_t>(r)][c] = next++;

    std::vector<int> w(static_cast<std::size_t>(n));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < t.row_tableau[r].size(); ++c)
            w[static_cast<std::size_t>(t.row_tableau[r][c] - 1)] = t.col_tableau[r][c];
    t.w_lambda = Permutation(w);

    std::vector<std::vector<int>> column_sets(cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < t.row_tableau[r].size(); ++c) column_sets[c].push_back(t.row_tableau[r][c]);
    t.row_stabilizer = young_subgroup(t.row_tableau, n);
    t.col_stabilizer = young_subgroup(column_sets, n);
    return t;
}

// ---------------------------------------------------------------- labels

int SpechtLabel::n() const {
    int s = 0;
    for (const auto& e : entries) s += e.m * e.lambda.size();
    return s;
}

int SpechtLabel::num_blocks() const {
    int s = 0;
    for (const auto& e : entries) s += e.m;
    return s;
}

void SpechtLabel::validate() const {
    if (entries.empty()) throw std::invalid_argument("SpechtLabel: no entries");
    for (std::size_t s = 0; s < entries.size(); ++s) {
        const auto& e = entries[s];
        if (e.m < 1) throw std::invalid_argument("SpechtLabel: multiplicity must be positive");
        if (e.lambda.size() < 1) throw std::invalid_argument("SpechtLabel: empty lambda");
        if (e.mu.size() != e.m) throw std::invalid_argument("SpechtLabel: |mu| != m");
        if (s > 0 && !total_lt(entries[s - 1].lambda, e.lambda))
            throw std::invalid_argument("SpechtLabel: lambdas not strictly increasing");
    }
}

std::string SpechtLabel::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) s += ",";
        s += "(" + entries[i].lambda.to_string() + "," + std::to_string(entries[i].m) + "," +
             entries[i].mu.to_string() + ")";
    }
    return s;
}

bool label_less(const SpechtLabel& a, const SpechtLabel& b) {
    if (a.num_blocks() != b.num_blocks()) return a.num_blocks() < b.num_blocks();
    const std::size_t k = std::min(a.entries.size(), b.entries.size());
    for (std::size_t i = 0; i < k; ++i) {
        const auto& x = a.entries[i];
        const auto& y = b.entries[i];
        if (!(x.lambda == y.lambda)) return total_lt(x.lambda, y.lambda);
        if (x.m != y.m) return x.m < y.m;
        if (!(x.mu == y.mu)) return total_lt(x.mu, y.mu);
    }
    return a.entries.size() < b.entries.size();
}

namespace {
void labels_rec(const std::vector<IntPartition>& lambdas, std::size_t start, int remaining,
                std::vector<LabelEntry>& cur, std::vector<SpechtLabel>& out) {
    if (remaining == 0) {
        out.push_back(SpechtLabel{cur});
        return;
    }
    for (std::size_t idx = start; idx < lambdas.size(); ++idx) {
        const auto& lam = lambdas[idx];
        const int sz = lam.size();
        for (int m = 1; m * sz <= remaining; ++m) {
            for (const auto& mu : IntPartition::all(m)) {
                cur.push_back(LabelEntry{lam, m, mu});
                labels_rec(lambdas, idx + 1, remaining - m * sz, cur, out);
                cur.pop_back();
            }
        }
    }
}
}  // namespace

std::vector<SpechtLabel> enumerate_labels(int n) {
    if (n < 1) throw std::invalid_argument("enumerate_labels: n must be >= 1");
    std::vector<IntPartition> lambdas;
    for (int k = 1; k <= n; ++k)
        for (auto& p : IntPartition::all(k)) lambdas.push_back(std::move(p));
    std::vector<SpechtLabel> out;
    std::vector<LabelEntry> cur;
    labels_rec(lambdas, 0, n, cur, out);
    std::sort(out.begin(), out.end(), label_less);
    return out;
}

}  // namespace braidties
