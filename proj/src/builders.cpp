#include "cjm/builders.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace cjm {

namespace {

// Products of coefficient vectors against a raw table, needed while the
// cellular columns are still being assembled (AlgebraTable does not exist yet).
VectorXq table_multiply(const std::vector<AlgebraTable::ProductRow>& products, Eigen::Index dim,
                        const VectorXq& a, const VectorXq& b) {
    VectorXq out = VectorXq::Zero(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        if (a[i] == Rational(0)) continue;
        for (Eigen::Index j = 0; j < dim; ++j) {
            if (b[j] == Rational(0)) continue;
            Rational f = a[i] * b[j];
            for (const auto& [k, c] : products[static_cast<std::size_t>(i * dim + j)]) out[k] += f * c;
        }
    }
    return out;
}

AlgebraTable::ProductRow to_row(const VectorXq& v) {
    AlgebraTable::ProductRow row;
    for (Eigen::Index k = 0; k < v.rows(); ++k)
        if (!(v[k] == Rational(0))) row.emplace_back(k, v[k]);
    return row;
}

// Cells ordered by reverse dominance (more dominant shapes sit lower, so the
// filtration ideals grow toward dominant shapes); members by reverse
// restriction dominance, putting the row-reading tableau first and lowest.
template <typename Shape>
CellDatum make_dominance_datum(const std::vector<Shape>& shapes,
                               const std::vector<std::vector<StandardTableau>>& tabs) {
    std::vector<CellInfo> cells;
    for (std::size_t c = 0; c < shapes.size(); ++c) {
        CellInfo info;
        info.label = shapes[c].str();
        std::size_t sz = tabs[c].size();
        info.member_leq.assign(sz, std::vector<bool>(sz, false));
        for (std::size_t a = 0; a < sz; ++a) {
            info.members.push_back(tabs[c][a].str());
            for (std::size_t b = 0; b < sz; ++b)
                info.member_leq[a][b] = tableau_order_leq(tabs[c][b], tabs[c][a]);
        }
        cells.push_back(std::move(info));
    }
    std::vector<std::vector<bool>> cell_leq(shapes.size(), std::vector<bool>(shapes.size(), false));
    for (std::size_t a = 0; a < shapes.size(); ++a)
        for (std::size_t b = 0; b < shapes.size(); ++b) cell_leq[a][b] = dominates(shapes[a], shapes[b]);
    return CellDatum(std::move(cells), std::move(cell_leq),
                     "cells: reverse dominance; members: reverse restriction dominance");
}

std::map<std::vector<int>, Eigen::Index> index_permutations(const std::vector<Permutation>& perms) {
    std::map<std::vector<int>, Eigen::Index> idx;
    for (std::size_t i = 0; i < perms.size(); ++i) idx[perms[i].images()] = static_cast<Eigen::Index>(i);
    return idx;
}

// Reduced word for w as left-to-right generator factors, peeling the smallest
// right descent of the running remainder. Letter i stands for the adjacent
// transposition of i+1 and i+2 (0-based positions i, i+1).
std::vector<int> reduced_word(const Permutation& w) {
    std::vector<int> peeled;
    Permutation u = w;
    int n = w.degree();
    while (!u.is_identity()) {
        Permutation uinv = u.inverse();
        int descent = -1;
        for (int i = 0; i + 1 < n; ++i) {
            if (uinv(i + 1) < uinv(i)) {
                descent = i;
                break;
            }
        }
        u = u.then(Permutation::adjacent(n, descent));
        peeled.push_back(descent);
    }
    return {peeled.rbegin(), peeled.rend()};
}

} // namespace

SeparationFactors separation_polynomial_factors(int n, int m, const Rational& q,
                                                const std::vector<Rational>& u) {
    if (q.is_zero()) throw std::invalid_argument("separation_polynomial_factors: q must be invertible");
    if (static_cast<int>(u.size()) != m)
        throw std::invalid_argument("separation_polynomial_factors: expected " + std::to_string(m) + " u values");
    SeparationFactors out;
    Rational qk(1);
    Rational sum(0);
    for (int k = 1; k <= n; ++k) {
        sum += qk; // 1 + q + ... + q^(k-1)
        qk *= q;
        out.factors.push_back({"[" + std::to_string(k) + "]_q", sum});
    }
    for (int i = 1; i <= m; ++i) {
        for (int j = i + 1; j <= m; ++j) {
            for (int d = -(n - 1); d <= n - 1; ++d) {
                Rational value = Rational::pow(q, d) * u[static_cast<std::size_t>(i - 1)] -
                                 u[static_cast<std::size_t>(j - 1)];
                out.factors.push_back({"q^" + std::to_string(d) + " u_" + std::to_string(i) + " - u_" +
                                           std::to_string(j),
                                       value});
            }
        }
    }
    for (const auto& f : out.factors)
        if (f.value.is_zero()) out.nonzero = false;
    return out;
}

std::optional<AKParams> make_validated_ak_params(int n, int m, const Rational& q,
                                                 const std::vector<Rational>& u, std::string* whyNot) {
    auto reject = [&](const std::string& why) -> std::optional<AKParams> {
        if (whyNot) *whyNot = why;
        return std::nullopt;
    };
    if (q.is_zero()) return reject("q must be invertible");
    if (q == Rational(1)) return reject("q = 1 is excluded");
    if (static_cast<int>(u.size()) != m)
        return reject("expected " + std::to_string(m) + " u values, got " + std::to_string(u.size()));
    SeparationFactors sep = separation_polynomial_factors(n, m, q, u);
    if (!sep.nonzero) {
        for (const auto& f : sep.factors)
            if (f.value.is_zero()) return reject("separation factor vanishes: " + f.label);
    }
    AKParams params;
    params.n = n;
    params.m = m;
    params.q = q;
    params.u = u;
    params.validated = true;
    return params;
}

AKParams find_valid_params(int n, int m) {
    if (n < 1 || m < 1) throw std::invalid_argument("find_valid_params: n and m must be positive");
    // 1 followed by the largest prime below each power of ten.
    static const long long pool[] = {1, 7, 97, 997, 9973, 99991, 999983, 9999991};
    const int poolSize = static_cast<int>(sizeof(pool) / sizeof(pool[0]));
    Rational q(2);
    for (int start = 0; start + m <= poolSize; ++start) {
        std::vector<Rational> u;
        for (int j = 0; j < m; ++j) u.emplace_back(pool[start + j]);
        if (auto params = make_validated_ak_params(n, m, q, u)) return *params;
    }
    throw std::logic_error("find_valid_params: candidate schedule exhausted");
}

AlgebraInstance build_group_algebra(int n) {
    if (n < 2 || n > 6) throw std::invalid_argument("build_group_algebra: n must be in 2..6");

    std::vector<Partition> shapes = enumerate_partitions(n);
    std::vector<std::vector<StandardTableau>> tabs;
    for (const auto& p : shapes) tabs.push_back(enumerate_standard_tableaux(p));
    CellDatum datum = make_dominance_datum(shapes, tabs);

    std::vector<Permutation> perms = all_permutations(n);
    auto idx = index_permutations(perms);
    Eigen::Index dim = static_cast<Eigen::Index>(perms.size());
    if (dim != datum.dim()) throw std::logic_error("build_group_algebra: tableau count mismatch");

    std::vector<AlgebraTable::ProductRow> products(static_cast<std::size_t>(dim * dim));
    for (Eigen::Index i = 0; i < dim; ++i)
        for (Eigen::Index j = 0; j < dim; ++j)
            products[static_cast<std::size_t>(i * dim + j)] = {
                {idx.at(perms[static_cast<std::size_t>(i)].then(perms[static_cast<std::size_t>(j)]).images()),
                 Rational(1)}};

    MatrixXq involution = MatrixXq::Zero(dim, dim);
    std::vector<std::string> names;
    for (Eigen::Index i = 0; i < dim; ++i) {
        involution(idx.at(perms[static_cast<std::size_t>(i)].inverse().images()), i) = Rational(1);
        names.push_back(perms[static_cast<std::size_t>(i)].str());
    }
    VectorXq identity = VectorXq::Zero(dim);
    identity[idx.at(Permutation::identity(n).images())] = Rational(1);

    // Murphy basis: m_{st} = d(s)^{-1} x_lambda d(t) with x_lambda the sum of
    // the row stabilizer of the row-reading tableau.
    MatrixXq cellToComp = MatrixXq::Zero(dim, dim);
    for (std::size_t c = 0; c < shapes.size(); ++c) {
        RowStabilizer stab = row_stabilizer(shapes[c], n);
        int sz = static_cast<int>(tabs[c].size());
        for (int s = 0; s < sz; ++s) {
            Permutation ds_inv = tableau_word(tabs[c][static_cast<std::size_t>(s)]).inverse();
            for (int t = 0; t < sz; ++t) {
                Permutation dt = tableau_word(tabs[c][static_cast<std::size_t>(t)]);
                Eigen::Index col = datum.basis_index(static_cast<int>(c), s, t);
                for (const auto& w : stab.elements)
                    cellToComp(idx.at(ds_inv.then(w).then(dt).images()), col) += Rational(1);
            }
        }
    }

    auto table = std::make_shared<AlgebraTable>(std::move(datum), std::move(products), std::move(involution),
                                                std::move(identity), std::move(cellToComp), std::move(names));
    const AlgebraTable& algebra = *table;

    std::vector<Element> jm;
    for (int k = 1; k <= n; ++k) {
        Element L = Element::zero(algebra);
        for (int j = 0; j < k - 1; ++j)
            L.coeffs[idx.at(Permutation::transposition(n, j, k - 1).images())] += Rational(1);
        jm.push_back(std::move(L));
    }

    MatrixXq contentOf(algebra.datum().member_count(), n);
    {
        int row = 0;
        for (const auto& cellTabs : tabs)
            for (const auto& t : cellTabs) {
                std::vector<Rational> seq = content_sequence_group(t);
                for (int i = 0; i < n; ++i) contentOf(row, i) = seq[static_cast<std::size_t>(i)];
                ++row;
            }
    }

    std::vector<Element> generators;
    for (int i = 0; i + 1 < n; ++i)
        generators.push_back(Element::unit(algebra, idx.at(Permutation::adjacent(n, i).images())));

    std::vector<std::vector<Rational>> multisets;
    for (const auto& p : shapes) multisets.push_back(cell_content_multiset_group(p));

    return {"symmetric-group", std::move(table),      std::move(jm),
            ContentTable(std::move(contentOf)),       std::move(generators),
            std::move(multisets)};
}

AlgebraInstance build_hecke_typeA(int n, const Rational& q) {
    if (n < 2 || n > 5) throw std::invalid_argument("build_hecke_typeA: n must be in 2..5");
    if (q.is_zero()) throw std::invalid_argument("build_hecke_typeA: q must be invertible");

    std::vector<Partition> shapes = enumerate_partitions(n);
    std::vector<std::vector<StandardTableau>> tabs;
    for (const auto& p : shapes) tabs.push_back(enumerate_standard_tableaux(p));
    CellDatum datum = make_dominance_datum(shapes, tabs);

    std::vector<Permutation> perms = all_permutations(n);
    auto idx = index_permutations(perms);
    Eigen::Index dim = static_cast<Eigen::Index>(perms.size());

    std::vector<int> length;
    std::vector<std::vector<int>> words;
    for (const auto& w : perms) {
        length.push_back(w.inversions());
        words.push_back(reduced_word(w));
    }

    // Right multiplication by the generator T_i on a coefficient vector:
    // T_w T_i = T_{w s_i} when the length goes up, else q T_{w s_i} + (q-1) T_w.
    auto mult_gen = [&](const VectorXq& a, int i) {
        VectorXq out = VectorXq::Zero(dim);
        Permutation s = Permutation::adjacent(n, i);
        for (Eigen::Index w = 0; w < dim; ++w) {
            if (a[w] == Rational(0)) continue;
            Eigen::Index ws = idx.at(perms[static_cast<std::size_t>(w)].then(s).images());
            if (length[static_cast<std::size_t>(ws)] > length[static_cast<std::size_t>(w)]) {
                out[ws] += a[w];
            } else {
                out[ws] += a[w] * q;
                out[w] += a[w] * (q - Rational(1));
            }
        }
        return out;
    };
    auto mult_word = [&](VectorXq a, const std::vector<int>& word) {
        for (int letter : word) a = mult_gen(a, letter);
        return a;
    };

    std::vector<AlgebraTable::ProductRow> products(static_cast<std::size_t>(dim * dim));
    for (Eigen::Index i = 0; i < dim; ++i) {
        VectorXq e = VectorXq::Zero(dim);
        e[i] = Rational(1);
        for (Eigen::Index j = 0; j < dim; ++j)
            products[static_cast<std::size_t>(i * dim + j)] = to_row(mult_word(e, words[static_cast<std::size_t>(j)]));
    }

    MatrixXq involution = MatrixXq::Zero(dim, dim);
    std::vector<std::string> names;
    for (Eigen::Index i = 0; i < dim; ++i) {
        involution(idx.at(perms[static_cast<std::size_t>(i)].inverse().images()), i) = Rational(1);
        names.push_back("T" + perms[static_cast<std::size_t>(i)].str());
    }
    VectorXq identity = VectorXq::Zero(dim);
    Eigen::Index idIdx = idx.at(Permutation::identity(n).images());
    identity[idIdx] = Rational(1);

    MatrixXq cellToComp = MatrixXq::Zero(dim, dim);
    for (std::size_t c = 0; c < shapes.size(); ++c) {
        RowStabilizer stab = row_stabilizer(shapes[c], n);
        VectorXq x = VectorXq::Zero(dim);
        for (const auto& w : stab.elements) x[idx.at(w.images())] += Rational(1);
        int sz = static_cast<int>(tabs[c].size());
        for (int s = 0; s < sz; ++s) {
            VectorXq left = VectorXq::Zero(dim);
            left[idx.at(tableau_word(tabs[c][static_cast<std::size_t>(s)]).inverse().images())] = Rational(1);
            VectorXq lx = table_multiply(products, dim, left, x);
            for (int t = 0; t < sz; ++t) {
                cellToComp.col(datum.basis_index(static_cast<int>(c), s, t)) =
                    mult_word(lx, words[static_cast<std::size_t>(
                                  idx.at(tableau_word(tabs[c][static_cast<std::size_t>(t)]).images()))]);
            }
        }
    }

    auto table = std::make_shared<AlgebraTable>(std::move(datum), std::move(products), std::move(involution),
                                                std::move(identity), std::move(cellToComp), std::move(names));
    const AlgebraTable& algebra = *table;

    std::vector<Element> jm;
    for (int k = 1; k <= n; ++k) {
        VectorXq v = VectorXq::Zero(dim);
        v[idIdx] = Rational(1);
        for (int i = k - 1; i >= 1; --i) v = mult_gen(v, i - 1);
        for (int i = 1; i <= k - 1; ++i) v = mult_gen(v, i - 1);
        jm.push_back(Element{&algebra, VectorXq(v * Rational::pow(q, 1 - k))});
    }

    std::vector<Rational> u1{Rational(1)};
    MatrixXq contentOf(algebra.datum().member_count(), n);
    {
        int row = 0;
        for (const auto& cellTabs : tabs)
            for (const auto& t : cellTabs) {
                std::vector<Rational> seq = content_sequence_ak(t, q, u1);
                for (int i = 0; i < n; ++i) contentOf(row, i) = seq[static_cast<std::size_t>(i)];
                ++row;
            }
    }

    std::vector<Element> generators;
    for (int i = 0; i + 1 < n; ++i)
        generators.push_back(Element::unit(algebra, idx.at(Permutation::adjacent(n, i).images())));

    std::vector<std::vector<Rational>> multisets;
    for (const auto& p : shapes) multisets.push_back(cell_content_multiset_ak(Multipartition::single(p), q, u1));

    return {"hecke-a",      std::move(table),            std::move(jm), ContentTable(std::move(contentOf)),
            std::move(generators), std::move(multisets)};
}

AlgebraInstance build_ak_seminormal(const AKParams& params) {
    if (!params.validated) throw std::invalid_argument("build_ak_seminormal: parameters not validated");
    if (params.n < 1 || params.n > 4) throw std::invalid_argument("build_ak_seminormal: n must be in 1..4");
    if (params.m < 1 || params.m > 3) throw std::invalid_argument("build_ak_seminormal: m must be in 1..3");

    std::vector<Multipartition> shapes = enumerate_multipartitions(params.n, params.m);
    std::vector<std::vector<StandardTableau>> tabs;
    for (const auto& sh : shapes) tabs.push_back(enumerate_standard_tableaux(sh));
    CellDatum datum = make_dominance_datum(shapes, tabs);
    Eigen::Index dim = datum.dim();

    std::vector<AlgebraTable::ProductRow> products(static_cast<std::size_t>(dim * dim));
    for (int c = 0; c < datum.cell_count(); ++c) {
        int sz = static_cast<int>(datum.cell(c).members.size());
        for (int s = 0; s < sz; ++s)
            for (int t = 0; t < sz; ++t)
                for (int v = 0; v < sz; ++v)
                    products[static_cast<std::size_t>(datum.basis_index(c, s, t) * dim +
                                                      datum.basis_index(c, t, v))] = {
                        {datum.basis_index(c, s, v), Rational(1)}};
    }

    MatrixXq involution = MatrixXq::Zero(dim, dim);
    VectorXq identity = VectorXq::Zero(dim);
    std::vector<std::string> names;
    for (Eigen::Index i = 0; i < dim; ++i) {
        CellDatum::BasisKey k = datum.basis_key(i);
        involution(datum.basis_index(k.cell, k.t, k.s), i) = Rational(1);
        if (k.s == k.t) identity[i] = Rational(1);
        names.push_back("e" + datum.basis_label(i).substr(1));
    }

    auto table = std::make_shared<AlgebraTable>(std::move(datum), std::move(products), std::move(involution),
                                                std::move(identity), MatrixXq(MatrixXq::Identity(dim, dim)),
                                                std::move(names));
    const AlgebraTable& algebra = *table;
    const CellDatum& D = algebra.datum();

    MatrixXq contentOf(D.member_count(), params.n);
    {
        int row = 0;
        for (const auto& cellTabs : tabs)
            for (const auto& t : cellTabs) {
                std::vector<Rational> seq = content_sequence_ak(t, params.q, params.u);
                for (int i = 0; i < params.n; ++i) contentOf(row, i) = seq[static_cast<std::size_t>(i)];
                ++row;
            }
    }
    ContentTable contents(std::move(contentOf));

    std::vector<Element> jm;
    for (int i = 1; i <= params.n; ++i) {
        Element L = Element::zero(algebra);
        for (int c = 0; c < D.cell_count(); ++c) {
            int sz = static_cast<int>(D.cell(c).members.size());
            for (int s = 0; s < sz; ++s)
                L.coeffs[D.basis_index(c, s, s)] = contents.content(D.global_member(c, s), i);
        }
        jm.push_back(std::move(L));
    }

    // Each cell's matrix algebra is generated by its first row and column.
    std::vector<Element> generators;
    for (int c = 0; c < D.cell_count(); ++c) {
        int sz = static_cast<int>(D.cell(c).members.size());
        for (int t = 0; t < sz; ++t) generators.push_back(Element::unit(algebra, D.basis_index(c, 0, t)));
        for (int s = 1; s < sz; ++s) generators.push_back(Element::unit(algebra, D.basis_index(c, s, 0)));
    }

    std::vector<std::vector<Rational>> multisets;
    for (const auto& sh : shapes) multisets.push_back(cell_content_multiset_ak(sh, params.q, params.u));

    return {"ariki-koike-model", std::move(table),      std::move(jm),
            std::move(contents),  std::move(generators), std::move(multisets)};
}

AlgebraInstance build_counterexample_pair(bool comparable_cells) {
    CellInfo lam{"lambda", {"s"}, {{true}}};
    CellInfo mu{"mu", {"t"}, {{true}}};
    std::vector<std::vector<bool>> cell_leq{{true, comparable_cells}, {false, true}};
    CellDatum datum({lam, mu}, cell_leq,
                    comparable_cells ? "two singleton cells, lambda below mu" : "two singleton cells, antichain");

    // K x K in the basis {1, b} with b = (0, 1); the cellular basis is the
    // pair of orthogonal idempotents 1 - b and b.
    Eigen::Index dim = 2;
    std::vector<AlgebraTable::ProductRow> products(4);
    products[0] = {{0, Rational(1)}};
    products[1] = {{1, Rational(1)}};
    products[2] = {{1, Rational(1)}};
    products[3] = {{1, Rational(1)}};
    MatrixXq involution = MatrixXq::Identity(dim, dim);
    VectorXq identity(dim);
    identity << Rational(1), Rational(0);
    MatrixXq cellToComp(dim, dim);
    cellToComp << Rational(1), Rational(0), Rational(-1), Rational(1);

    auto table = std::make_shared<AlgebraTable>(std::move(datum), std::move(products), std::move(involution),
                                                std::move(identity), std::move(cellToComp),
                                                std::vector<std::string>{"1", "b"});
    const AlgebraTable& algebra = *table;

    std::vector<Element> jm{Element::zero(algebra)};
    MatrixXq contentOf = MatrixXq::Zero(2, 1);

    std::vector<Element> generators{Element::unit(algebra, 1)};

    return {"counterexample",
            std::move(table),
            std::move(jm),
            ContentTable(std::move(contentOf)),
            std::move(generators),
            {{Rational(0)}, {Rational(0)}}};
}

} // namespace cjm
