#pragma once

/**
 * @file combinatorics.hpp
 * @brief Permutations, integer partitions, set partitions, tableaux and the
 * Specht label set.
 *
 * Conventions:
 *  - Permutations are one-line image lists, composition is (v*w)(i) = v(w(i)).
 *  - Set partitions are stored as restricted growth labels; blocks are ordered
 *    by minimum element and sorted ascending. Ordering of set partitions is
 *    the lexicographic order of the block lists, so the finest partition sorts
 *    first.
 */

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace braidties {

/// Raised when two combinatorial objects of different ground-set sizes meet.
class SizeMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// ---------------------------------------------------------------- Permutation

class Permutation {
public:
    Permutation() = default;
    /// One-line notation w(1), ..., w(n); throws if not a bijection of {1..n}.
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);
    /// The simple transposition s_i = (i, i+1).
    static Permutation simple(int i, int n);
    /// s_{w_1} s_{w_2} ... s_{w_k}.
    static Permutation from_word(const std::vector<int>& word, int n);
    /// All of S_n in lexicographic order of the image lists.
    static std::vector<Permutation> all(int n);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<int>& images() const { return images_; }

    /// (this * w)(i) = this(w(i)).
    Permutation compose(const Permutation& w) const;
    Permutation operator*(const Permutation& w) const { return compose(w); }
    Permutation inverse() const;
    /// Right multiplication by s_i: swaps the images at positions i, i+1.
    Permutation times_simple(int i) const;

    /// Number of inversions.
    int length() const;
    int sign() const { return length() % 2 == 0 ? 1 : -1; }
    bool is_identity() const;
    /// Lexicographically smallest reduced word [i_1, ..., i_k], w = s_{i_1} ... s_{i_k}.
    std::vector<int> reduced_word() const;

    std::uint64_t code() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

    std::string to_string() const;

private:
    std::vector<int> images_;
};

// ---------------------------------------------------------------- IntPartition

class IntPartition {
public:
    IntPartition() = default;
    /// Parts must be positive; they are sorted descending.
    explicit IntPartition(std::vector<int> parts);

    /// All partitions of n, ascending in the total order (so (1^n) first, (n) last).
    static std::vector<IntPartition> all(int n);

    const std::vector<int>& parts() const { return parts_; }
    int size() const;
    int length() const { return static_cast<int>(parts_.size()); }
    IntPartition conjugate() const;
    /// Partial sums p_1, p_1 + p_2, ... padded to length k with the total.
    std::vector<int> partial_sums(int k) const;

    friend bool operator==(const IntPartition&, const IntPartition&) = default;

    std::string to_string() const;

private:
    std::vector<int> parts_;
};

/// Dominance order; throws SizeMismatch when |a| != |b|.
bool dominance_leq(const IntPartition& a, const IntPartition& b);
/// Total order: size first, then the first differing partial sum decides.
bool total_lt(const IntPartition& a, const IntPartition& b);

// ---------------------------------------------------------------- SetPartition

class SetPartition {
public:
    SetPartition() = default;
    /// From blocks covering {1..n} exactly; throws otherwise.
    static SetPartition from_blocks(const std::vector<std::vector<int>>& blocks, int n);
    /// From block labels of 1..n (any labels; canonicalized).
    static SetPartition from_labels(const std::vector<int>& labels);
    static SetPartition bottom(int n);
    static SetPartition top(int n);
    /// Equivalence closure of the pairs in R; pair entries must lie in 1..n.
    static SetPartition closure(const std::vector<std::pair<int, int>>& R, int n);
    /// All B_n set partitions of {1..n}, ascending.
    static std::vector<SetPartition> enumerate(int n);

    int size() const { return static_cast<int>(labels_.size()); }
    int num_blocks() const { return static_cast<int>(blocks_.size()); }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    /// Block index of element i (1-based element, 0-based block).
    int block_of(int i) const { return labels_[static_cast<std::size_t>(i - 1)]; }
    bool same_block(int i, int j) const { return block_of(i) == block_of(j); }
    bool is_bottom() const { return num_blocks() == size(); }
    bool is_top() const { return num_blocks() == 1; }

    /// Relabels elements: {w(I_1), ..., w(I_k)}.
    SetPartition apply(const Permutation& w) const;

    std::uint64_t code() const;

    friend bool operator==(const SetPartition& a, const SetPartition& b) { return a.labels_ == b.labels_; }
    friend std::strong_ordering operator<=>(const SetPartition& a, const SetPartition& b) {
        return a.blocks_ <=> b.blocks_;
    }

    std::string to_string() const;

private:
    void build_blocks();
    std::vector<int> labels_;
    std::vector<std::vector<int>> blocks_;
};

/// Refinement order: every block of b is a union of blocks of a.
bool sp_leq(const SetPartition& a, const SetPartition& b);
/// Lattice join, by union-find over all blocks.
SetPartition sp_join(const SetPartition& a, const SetPartition& b);
/// Moebius function of the partition lattice via its defining recursion.
/// Throws std::invalid_argument unless sp_leq(a, b).
long sp_moebius(const SetPartition& a, const SetPartition& b);

long bell_number(int n);
long factorial(int n);

// ---------------------------------------------------------------- tableaux

struct TableauData {
    IntPartition shape;
    std::vector<Permutation> row_stabilizer;
    std::vector<Permutation> col_stabilizer;
    /// Maps the row-filled tableau onto the column-filled one.
    Permutation w_lambda;
    std::vector<std::vector<int>> row_tableau;
    std::vector<std::vector<int>> col_tableau;
};

TableauData tableau_data(const IntPartition& shape);

/// All elements of the Young subgroup fixing each given set (blocks of {1..n}).
std::vector<Permutation> young_subgroup(const std::vector<std::vector<int>>& sets, int n);

// ---------------------------------------------------------------- labels

struct LabelEntry {
    IntPartition lambda;
    int m = 1;
    IntPartition mu;

    friend bool operator==(const LabelEntry&, const LabelEntry&) = default;
};

struct SpechtLabel {
    std::vector<LabelEntry> entries;

    /// Sum of m_s |lambda^s|.
    int n() const;
    /// Number of blocks l = sum of m_s.
    int num_blocks() const;
    /// Throws std::invalid_argument when the invariants fail.
    void validate() const;

    friend bool operator==(const SpechtLabel&, const SpechtLabel&) = default;

    std::string to_string() const;
};

/**
 * All labels for n, ordered by number of blocks, then lexicographically by
 * (lambda in the total order, m, mu in the total order) per entry.
 */
std::vector<SpechtLabel> enumerate_labels(int n);
bool label_less(const SpechtLabel& a, const SpechtLabel& b);

}  // namespace braidties
