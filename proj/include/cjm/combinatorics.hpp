#pragma once

#include "cjm/rational.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

// Partitions, multipartitions, standard tableaux, the orders on them, and the
// content (residue) data attached to tableaux. Enumeration orders are fixed:
// partitions in reverse-lexicographic order, standard tableaux with the
// row-reading filling first and the rest sorted by row-reading word.

namespace cjm {

struct Partition {
    std::vector<int> parts; // strictly positive, non-increasing

    Partition() = default;
    explicit Partition(std::vector<int> p);

    int n() const;
    int rows() const { return static_cast<int>(parts.size()); }
    int row_len(int row1) const { // 1-based, 0 beyond the last row
        return (row1 >= 1 && row1 <= rows()) ? parts[static_cast<std::size_t>(row1 - 1)] : 0;
    }
    std::string str() const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts == b.parts; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts < b.parts; }
};

struct Multipartition {
    std::vector<Partition> components;

    Multipartition() = default;
    explicit Multipartition(std::vector<Partition> c) : components(std::move(c)) {}
    static Multipartition single(Partition p) { return Multipartition({std::move(p)}); }

    int m() const { return static_cast<int>(components.size()); }
    int n() const;
    std::vector<int> component_sizes() const;
    std::string str() const;

    friend bool operator==(const Multipartition& a, const Multipartition& b) { return a.components == b.components; }
    friend bool operator!=(const Multipartition& a, const Multipartition& b) { return !(a == b); }
    friend bool operator<(const Multipartition& a, const Multipartition& b) { return a.components < b.components; }
};

// 1-based row/column/component coordinates of a diagram node.
struct Node {
    int row = 0;
    int col = 0;
    int component = 1;

    friend bool operator==(const Node& a, const Node& b) {
        return a.row == b.row && a.col == b.col && a.component == b.component;
    }
};

inline int residue(const Node& x) { return x.col - x.row; }

class StandardTableau {
public:
    // rows[component][row] lists the entries of that row left to right.
    StandardTableau(Multipartition shape, std::vector<std::vector<std::vector<int>>> rows);

    static StandardTableau row_filling(const Multipartition& shape); // the initial tableau
    static StandardTableau row_filling(const Partition& shape);

    const Multipartition& shape() const { return shape_; }
    int n() const { return shape_.n(); }
    Node node_of(int entry) const; // entry 1..n
    int entry_at(const Node& x) const;
    Multipartition shape_restricted(int k) const; // shape of the entries 1..k
    std::vector<int> row_word() const;            // entries read along rows, components in order
    std::string str() const;

    friend bool operator==(const StandardTableau& a, const StandardTableau& b) {
        return a.shape_ == b.shape_ && a.rows_ == b.rows_;
    }

private:
    Multipartition shape_;
    std::vector<std::vector<std::vector<int>>> rows_;
    std::vector<Node> node_by_entry_;
};

std::vector<Partition> enumerate_partitions(int n);
std::vector<Multipartition> enumerate_multipartitions(int n, int m);
std::vector<StandardTableau> enumerate_standard_tableaux(const Multipartition& shape);
std::vector<StandardTableau> enumerate_standard_tableaux(const Partition& shape);

// a dominates b: every partial sum of a is >= the matching partial sum of b.
// Both orders require equal sizes (and equal component counts).
bool dominates(const Partition& a, const Partition& b);
bool dominates(const Multipartition& a, const Multipartition& b);

// s <= t iff for every k the shape of s restricted to 1..k is dominated by
// the shape of t restricted to 1..k. Defined for equal shapes only.
bool tableau_order_leq(const StandardTableau& s, const StandardTableau& t);

// Entry i of the result is the residue of the node containing i (entry 1 is 0).
std::vector<Rational> content_sequence_group(const StandardTableau& t);

// Entry i is u_j * q^(col-row) for the node of i in component j. Requires q != 0.
std::vector<Rational> content_sequence_ak(const StandardTableau& t, const Rational& q,
                                          const std::vector<Rational>& u);

// Content multiset of a whole diagram (equals the multiset of any of its
// standard tableaux's content sequence), sorted ascending.
std::vector<Rational> cell_content_multiset_group(const Partition& shape);
std::vector<Rational> cell_content_multiset_ak(const Multipartition& shape, const Rational& q,
                                               const std::vector<Rational>& u);

struct DistinctnessResult {
    bool distinct = true;
    // Indices into the input list of the first colliding pair, when any.
    std::optional<std::pair<std::size_t, std::size_t>> witness;
};

// Pairwise comparison of the given multisets (each is sorted internally).
DistinctnessResult content_multisets_distinct(const std::vector<std::vector<Rational>>& multisets);

// Residue multisets of two partitions of the same integer are equal iff the
// partitions are equal; this returns the multiset comparison.
bool residue_multisets_equal(const Partition& a, const Partition& b);

struct AkDistinctness {
    bool distinct = false;
    int fired_case = 0; // 1: a component size differs, 2: sizes equal but a component shape differs
    int component = 0;  // 1-based index of the component that fired
};

// Why the content multisets of two distinct multipartitions differ, computed
// exactly. Parameters must satisfy the separation polynomial. Throws when the
// multipartitions are equal or when a content value fits more than one
// u_j * q^x class (impossible for validated parameters).
AkDistinctness ak_contents_distinct(const Multipartition& a, const Multipartition& b, const Rational& q,
                                    const std::vector<Rational>& u);

class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images); // 0-based images, validated bijection
    static Permutation identity(int degree);
    static Permutation transposition(int degree, int a, int b); // 0-based
    static Permutation adjacent(int degree, int i);             // swaps i and i+1

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& images() const { return img_; }

    // Apply *this first, then next. Group products throughout the project use
    // this left-to-right convention.
    Permutation then(const Permutation& next) const;
    Permutation inverse() const;
    int inversions() const;
    bool is_identity() const;
    std::string str() const; // one-line notation, 1-based

    friend bool operator==(const Permutation& a, const Permutation& b) { return a.img_ == b.img_; }
    friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }
    friend bool operator<(const Permutation& a, const Permutation& b) { return a.img_ < b.img_; }

private:
    std::vector<int> img_;
};

std::vector<Permutation> all_permutations(int degree); // lex order of one-line images

// Row stabilizer of the initial tableau of the given shape: the Young
// subgroup permuting each row's entry set.
struct RowStabilizer {
    Partition shape;
    std::vector<Permutation> generators; // adjacent transpositions within rows
    std::vector<Permutation> elements;
};

RowStabilizer row_stabilizer(const Partition& shape, int degree);

// The permutation d with row_filling(shape) . d = t under the right action
// (t . w)(node) = w(t(node)).
Permutation tableau_word(const StandardTableau& t);

} // namespace cjm
