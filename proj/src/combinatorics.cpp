#include "cjm/combinatorics.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace cjm {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1]) throw std::invalid_argument("Partition: parts must be non-increasing");
    }
}

int Partition::n() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string Partition::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts[i]);
    }
    return s + ")";
}

int Multipartition::n() const {
    int total = 0;
    for (const auto& c : components) total += c.n();
    return total;
}

std::vector<int> Multipartition::component_sizes() const {
    std::vector<int> sizes;
    sizes.reserve(components.size());
    for (const auto& c : components) sizes.push_back(c.n());
    return sizes;
}

std::string Multipartition::str() const {
    if (m() == 1) return components[0].str();
    std::string s = "(";
    for (std::size_t i = 0; i < components.size(); ++i) {
        if (i) s += ",";
        s += components[i].str();
    }
    return s + ")";
}

StandardTableau::StandardTableau(Multipartition shape, std::vector<std::vector<std::vector<int>>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
    if (static_cast<int>(rows_.size()) != shape_.m())
        throw std::invalid_argument("StandardTableau: component count mismatch");
    int n = shape_.n();
    node_by_entry_.assign(static_cast<std::size_t>(n) + 1, Node{});
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int c = 0; c < shape_.m(); ++c) {
        const Partition& comp = shape_.components[static_cast<std::size_t>(c)];
        const auto& compRows = rows_[static_cast<std::size_t>(c)];
        if (static_cast<int>(compRows.size()) != comp.rows())
            throw std::invalid_argument("StandardTableau: row count mismatch");
        for (int r = 0; r < comp.rows(); ++r) {
            const auto& row = compRows[static_cast<std::size_t>(r)];
            if (static_cast<int>(row.size()) != comp.parts[static_cast<std::size_t>(r)])
                throw std::invalid_argument("StandardTableau: row length mismatch");
            for (int k = 0; k < static_cast<int>(row.size()); ++k) {
                int e = row[static_cast<std::size_t>(k)];
                if (e < 1 || e > n || seen[static_cast<std::size_t>(e)])
                    throw std::invalid_argument("StandardTableau: entries must be a permutation of 1..n");
                seen[static_cast<std::size_t>(e)] = true;
                node_by_entry_[static_cast<std::size_t>(e)] = Node{r + 1, k + 1, c + 1};
                if (k > 0 && row[static_cast<std::size_t>(k - 1)] > e)
                    throw std::invalid_argument("StandardTableau: rows must increase");
                if (r > 0 && compRows[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(k)] > e)
                    throw std::invalid_argument("StandardTableau: columns must increase");
            }
        }
    }
}

StandardTableau StandardTableau::row_filling(const Multipartition& shape) {
    std::vector<std::vector<std::vector<int>>> rows;
    int next = 1;
    for (const auto& comp : shape.components) {
        std::vector<std::vector<int>> compRows;
        for (int len : comp.parts) {
            std::vector<int> row(static_cast<std::size_t>(len));
            for (int k = 0; k < len; ++k) row[static_cast<std::size_t>(k)] = next++;
            compRows.push_back(std::move(row));
        }
        rows.push_back(std::move(compRows));
    }
    return StandardTableau(shape, std::move(rows));
}

StandardTableau StandardTableau::row_filling(const Partition& shape) {
    return row_filling(Multipartition::single(shape));
}

Node StandardTableau::node_of(int entry) const {
    if (entry < 1 || entry > n()) throw std::out_of_range("StandardTableau: entry out of range");
    return node_by_entry_[static_cast<std::size_t>(entry)];
}

int StandardTableau::entry_at(const Node& x) const {
    return rows_.at(static_cast<std::size_t>(x.component - 1))
        .at(static_cast<std::size_t>(x.row - 1))
        .at(static_cast<std::size_t>(x.col - 1));
}

Multipartition StandardTableau::shape_restricted(int k) const {
    std::vector<Partition> comps;
    for (int c = 0; c < shape_.m(); ++c) {
        std::vector<int> lens;
        for (const auto& row : rows_[static_cast<std::size_t>(c)]) {
            int len = 0;
            for (int e : row)
                if (e <= k) ++len;
            if (len == 0) break; // rows below are empty too (column-strict)
            lens.push_back(len);
        }
        comps.push_back(Partition(std::move(lens)));
    }
    return Multipartition(std::move(comps));
}

std::vector<int> StandardTableau::row_word() const {
    std::vector<int> word;
    word.reserve(static_cast<std::size_t>(n()));
    for (const auto& comp : rows_)
        for (const auto& row : comp) word.insert(word.end(), row.begin(), row.end());
    return word;
}

std::string StandardTableau::str() const {
    std::string s;
    for (std::size_t c = 0; c < rows_.size(); ++c) {
        if (c) s += ",";
        s += "[";
        for (std::size_t r = 0; r < rows_[c].size(); ++r) {
            if (r) s += "|";
            for (std::size_t k = 0; k < rows_[c][r].size(); ++k) {
                if (k) s += " ";
                s += std::to_string(rows_[c][r][k]);
            }
        }
        s += "]";
    }
    return s;
}

namespace {

void partitions_rec(int remaining, int maxPart, std::vector<int>& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(cur));
        return;
    }
    for (int p = std::min(remaining, maxPart); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_partitions: n must be >= 0");
    std::vector<Partition> out;
    std::vector<int> cur;
    partitions_rec(n, n, cur, out);
    if (n == 0) out = {Partition()};
    return out;
}

std::vector<Multipartition> enumerate_multipartitions(int n, int m) {
    if (n < 0 || m < 1) throw std::invalid_argument("enumerate_multipartitions: need n >= 0, m >= 1");
    std::vector<Multipartition> out;
    std::vector<Partition> cur;
    // Compositions of n into m parts, first component largest first.
    auto rec = [&](auto&& self, int idx, int remaining) -> void {
        if (idx == m - 1) {
            for (const auto& p : enumerate_partitions(remaining)) {
                cur.push_back(p);
                out.push_back(Multipartition(cur));
                cur.pop_back();
            }
            return;
        }
        for (int k = remaining; k >= 0; --k) {
            for (const auto& p : enumerate_partitions(k)) {
                cur.push_back(p);
                self(self, idx + 1, remaining - k);
                cur.pop_back();
            }
        }
    };
    rec(rec, 0, n);
    return out;
}

namespace {

void tableaux_rec(const Multipartition& shape, std::vector<std::vector<std::vector<int>>>& rows,
                  std::vector<std::vector<int>>& filled, int next, int n,
                  std::vector<StandardTableau>& out) {
    if (next > n) {
        out.push_back(StandardTableau(shape, rows));
        return;
    }
    for (int c = 0; c < shape.m(); ++c) {
        const Partition& comp = shape.components[static_cast<std::size_t>(c)];
        for (int r = 0; r < comp.rows(); ++r) {
            int col = filled[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)];
            if (col >= comp.parts[static_cast<std::size_t>(r)]) continue;
            if (r > 0 && filled[static_cast<std::size_t>(c)][static_cast<std::size_t>(r - 1)] <= col) continue;
            rows[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)].push_back(next);
            ++filled[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)];
            tableaux_rec(shape, rows, filled, next + 1, n, out);
            --filled[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)];
            rows[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)].pop_back();
        }
    }
}

} // namespace

std::vector<StandardTableau> enumerate_standard_tableaux(const Multipartition& shape) {
    std::vector<std::vector<std::vector<int>>> rows;
    std::vector<std::vector<int>> filled;
    for (const auto& comp : shape.components) {
        rows.emplace_back(static_cast<std::size_t>(comp.rows()));
        filled.emplace_back(static_cast<std::size_t>(comp.rows()), 0);
    }
    std::vector<StandardTableau> out;
    tableaux_rec(shape, rows, filled, 1, shape.n(), out);
    std::sort(out.begin(), out.end(),
              [](const StandardTableau& a, const StandardTableau& b) { return a.row_word() < b.row_word(); });
    return out;
}

std::vector<StandardTableau> enumerate_standard_tableaux(const Partition& shape) {
    return enumerate_standard_tableaux(Multipartition::single(shape));
}

bool dominates(const Partition& a, const Partition& b) {
    if (a.n() != b.n()) throw std::invalid_argument("dominates: partitions of different integers");
    int rows = std::max(a.rows(), b.rows());
    int ca = 0, cb = 0;
    for (int r = 1; r <= rows; ++r) {
        ca += a.row_len(r);
        cb += b.row_len(r);
        if (ca < cb) return false;
    }
    return true;
}

bool dominates(const Multipartition& a, const Multipartition& b) {
    if (a.m() != b.m()) throw std::invalid_argument("dominates: component count mismatch");
    if (a.n() != b.n()) throw std::invalid_argument("dominates: multipartitions of different integers");
    int carryA = 0, carryB = 0;
    for (int c = 0; c < a.m(); ++c) {
        const Partition& pa = a.components[static_cast<std::size_t>(c)];
        const Partition& pb = b.components[static_cast<std::size_t>(c)];
        int rows = std::max(pa.rows(), pb.rows());
        int ca = carryA, cb = carryB;
        for (int r = 1; r <= rows; ++r) {
            ca += pa.row_len(r);
            cb += pb.row_len(r);
            if (ca < cb) return false;
        }
        carryA += pa.n();
        carryB += pb.n();
    }
    return true;
}

bool tableau_order_leq(const StandardTableau& s, const StandardTableau& t) {
    if (!(s.shape() == t.shape())) throw std::invalid_argument("tableau_order_leq: shape mismatch");
    int n = s.n();
    for (int k = 1; k < n; ++k) {
        if (!dominates(t.shape_restricted(k), s.shape_restricted(k))) return false;
    }
    return true;
}

std::vector<Rational> content_sequence_group(const StandardTableau& t) {
    if (t.shape().m() != 1) throw std::invalid_argument("content_sequence_group: shape must be a partition");
    std::vector<Rational> seq;
    seq.reserve(static_cast<std::size_t>(t.n()));
    for (int i = 1; i <= t.n(); ++i) seq.push_back(Rational(residue(t.node_of(i))));
    return seq;
}

std::vector<Rational> content_sequence_ak(const StandardTableau& t, const Rational& q,
                                          const std::vector<Rational>& u) {
    if (q.is_zero()) throw std::invalid_argument("content_sequence_ak: q must be nonzero");
    if (static_cast<int>(u.size()) != t.shape().m())
        throw std::invalid_argument("content_sequence_ak: u size must match component count");
    std::vector<Rational> seq;
    seq.reserve(static_cast<std::size_t>(t.n()));
    for (int i = 1; i <= t.n(); ++i) {
        Node x = t.node_of(i);
        seq.push_back(u[static_cast<std::size_t>(x.component - 1)] * Rational::pow(q, residue(x)));
    }
    return seq;
}

std::vector<Rational> cell_content_multiset_group(const Partition& shape) {
    std::vector<Rational> out;
    for (int r = 1; r <= shape.rows(); ++r)
        for (int c = 1; c <= shape.row_len(r); ++c) out.push_back(Rational(c - r));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Rational> cell_content_multiset_ak(const Multipartition& shape, const Rational& q,
                                               const std::vector<Rational>& u) {
    if (q.is_zero()) throw std::invalid_argument("cell_content_multiset_ak: q must be nonzero");
    if (static_cast<int>(u.size()) != shape.m())
        throw std::invalid_argument("cell_content_multiset_ak: u size must match component count");
    std::vector<Rational> out;
    for (int j = 0; j < shape.m(); ++j) {
        const Partition& comp = shape.components[static_cast<std::size_t>(j)];
        for (int r = 1; r <= comp.rows(); ++r)
            for (int c = 1; c <= comp.row_len(r); ++c)
                out.push_back(u[static_cast<std::size_t>(j)] * Rational::pow(q, c - r));
    }
    std::sort(out.begin(), out.end());
    return out;
}

DistinctnessResult content_multisets_distinct(const std::vector<std::vector<Rational>>& multisets) {
    std::vector<std::vector<Rational>> sorted = multisets;
    for (auto& m : sorted) std::sort(m.begin(), m.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        for (std::size_t j = i + 1; j < sorted.size(); ++j) {
            if (sorted[i] == sorted[j]) return DistinctnessResult{false, std::make_pair(i, j)};
        }
    }
    return DistinctnessResult{true, std::nullopt};
}

bool residue_multisets_equal(const Partition& a, const Partition& b) {
    if (a.n() != b.n()) throw std::invalid_argument("residue_multisets_equal: partitions of different integers");
    return cell_content_multiset_group(a) == cell_content_multiset_group(b);
}

AkDistinctness ak_contents_distinct(const Multipartition& a, const Multipartition& b, const Rational& q,
                                    const std::vector<Rational>& u) {
    if (a == b) throw std::invalid_argument("ak_contents_distinct: multipartitions must differ");
    if (a.m() != b.m() || static_cast<int>(u.size()) != a.m())
        throw std::invalid_argument("ak_contents_distinct: component count mismatch");
    if (a.n() != b.n()) throw std::invalid_argument("ak_contents_distinct: sizes must agree");
    int n = a.n();
    int m = a.m();

    // Exact classification of a content value into its u_j * q^x class.
    auto classify = [&](const Rational& v) -> int {
        int found = -1;
        for (int j = 0; j < m; ++j) {
            for (int x = -(n - 1); x <= n - 1; ++x) {
                if (v == u[static_cast<std::size_t>(j)] * Rational::pow(q, x)) {
                    if (found >= 0 && found != j)
                        throw std::logic_error("ak_contents_distinct: ambiguous content class (parameters too degenerate)");
                    found = j;
                    break;
                }
            }
        }
        if (found < 0) throw std::logic_error("ak_contents_distinct: unclassifiable content value");
        return found;
    };

    auto class_multisets = [&](const Multipartition& shape) {
        std::vector<std::vector<Rational>> byClass(static_cast<std::size_t>(m));
        for (const Rational& v : cell_content_multiset_ak(shape, q, u))
            byClass[static_cast<std::size_t>(classify(v))].push_back(v);
        for (auto& c : byClass) std::sort(c.begin(), c.end());
        return byClass;
    };

    auto classesA = class_multisets(a);
    auto classesB = class_multisets(b);

    // Case 1: some component receives different numbers of boxes.
    for (int j = 0; j < m; ++j) {
        if (classesA[static_cast<std::size_t>(j)].size() != classesB[static_cast<std::size_t>(j)].size())
            return AkDistinctness{true, 1, j + 1};
    }
    // Case 2: equal sizes everywhere, so some component partition differs;
    // its class of contents separates the multisets.
    for (int j = 0; j < m; ++j) {
        if (a.components[static_cast<std::size_t>(j)] != b.components[static_cast<std::size_t>(j)]) {
            bool differ = classesA[static_cast<std::size_t>(j)] != classesB[static_cast<std::size_t>(j)];
            return AkDistinctness{differ, 2, j + 1};
        }
    }
    throw std::logic_error("ak_contents_distinct: unreachable (multipartitions compared equal)");
}

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
        if (v < 0 || v >= static_cast<int>(img_.size()) || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("Permutation: images must be a bijection on 0..d-1");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int degree) {
    std::vector<int> img(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i) img[static_cast<std::size_t>(i)] = i;
    return Permutation(std::move(img));
}

Permutation Permutation::transposition(int degree, int a, int b) {
    Permutation p = identity(degree);
    std::swap(p.img_[static_cast<std::size_t>(a)], p.img_[static_cast<std::size_t>(b)]);
    return p;
}

Permutation Permutation::adjacent(int degree, int i) { return transposition(degree, i, i + 1); }

Permutation Permutation::then(const Permutation& next) const {
    if (degree() != next.degree()) throw std::invalid_argument("Permutation: degree mismatch");
    std::vector<int> img(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) img[i] = next.img_[static_cast<std::size_t>(img_[i])];
    return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
    std::vector<int> img(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) img[static_cast<std::size_t>(img_[i])] = static_cast<int>(i);
    return Permutation(std::move(img));
}

int Permutation::inversions() const {
    int count = 0;
    for (std::size_t i = 0; i < img_.size(); ++i)
        for (std::size_t j = i + 1; j < img_.size(); ++j)
            if (img_[i] > img_[j]) ++count;
    return count;
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < img_.size(); ++i)
        if (img_[i] != static_cast<int>(i)) return false;
    return true;
}

std::string Permutation::str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < img_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(img_[i] + 1);
    }
    return s + "]";
}

std::vector<Permutation> all_permutations(int degree) {
    std::vector<int> img(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i) img[static_cast<std::size_t>(i)] = i;
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(img));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

RowStabilizer row_stabilizer(const Partition& shape, int degree) {
    if (shape.n() > degree) throw std::invalid_argument("row_stabilizer: shape larger than degree");
    RowStabilizer out;
    out.shape = shape;
    out.elements = {Permutation::identity(degree)};
    int start = 0;
    for (int len : shape.parts) {
        for (int k = 0; k + 1 < len; ++k) out.generators.push_back(Permutation::adjacent(degree, start + k));
        // Extend the element list by every permutation of this row's block.
        std::vector<int> block(static_cast<std::size_t>(len));
        for (int k = 0; k < len; ++k) block[static_cast<std::size_t>(k)] = start + k;
        std::vector<int> perm = block;
        std::vector<Permutation> blockPerms;
        do {
            Permutation p = Permutation::identity(degree);
            std::vector<int> img = p.images();
            for (int k = 0; k < len; ++k) img[static_cast<std::size_t>(block[static_cast<std::size_t>(k)])] = perm[static_cast<std::size_t>(k)];
            blockPerms.push_back(Permutation(std::move(img)));
        } while (std::next_permutation(perm.begin(), perm.end()));
        std::vector<Permutation> extended;
        extended.reserve(out.elements.size() * blockPerms.size());
        for (const auto& e : out.elements)
            for (const auto& b : blockPerms) extended.push_back(e.then(b));
        out.elements = std::move(extended);
        start += len;
    }
    std::sort(out.elements.begin(), out.elements.end());
    return out;
}

Permutation tableau_word(const StandardTableau& t) {
    StandardTableau initial = StandardTableau::row_filling(t.shape());
    int n = t.n();
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int entry = 1; entry <= n; ++entry) {
        Node x = initial.node_of(entry);
        img[static_cast<std::size_t>(entry - 1)] = t.entry_at(x) - 1;
    }
    return Permutation(std::move(img));
}

} // namespace cjm
