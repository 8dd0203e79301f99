#pragma once

#include "cjm/cell_algebra.hpp"
#include "cjm/combinatorics.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

// Concrete instances: the symmetric group algebra and the type-A Hecke
// algebra with their Murphy cellular bases, the Ariki-Koike seminormal
// (matrix-unit) model, and a two-cell toy algebra whose cells carry equal
// contents. Each builder returns the algebra table, the JM family, the
// content table and a generating set for the cellularity check.
//
// Cell posets: the Murphy filtration places more dominant shapes lower, so
// both the cell order and the member order stored in the datum are the
// reverses of the dominance orders. The JM verifier reports the empirically
// confirmed triangularity direction rather than assuming one.

namespace cjm {

struct AlgebraInstance {
    std::string family;
    // Heap-held so the Element back-pointers in jm and generators stay valid
    // when the instance moves.
    std::shared_ptr<const AlgebraTable> table;
    std::vector<Element> jm;
    ContentTable contents;
    std::vector<Element> generators;
    // Per-cell content multiset representative (from the initial tableau).
    std::vector<std::vector<Rational>> cell_content_multisets;

    const AlgebraTable& algebra() const { return *table; }
};

struct AKParams {
    int n = 0;
    int m = 0;
    Rational q;
    std::vector<Rational> u;
    bool validated = false;
};

struct SeparationFactor {
    std::string label;
    Rational value;
};

struct SeparationFactors {
    bool nonzero = true;
    std::vector<SeparationFactor> factors;
};

// Factors [1]_q .. [n]_q and q^d u_i - u_j for 1 <= i < j <= m, |d| < n.
// Requires q != 0.
SeparationFactors separation_polynomial_factors(int n, int m, const Rational& q,
                                                const std::vector<Rational>& u);

// Validation wrapper: q != 0, q != 1 and all separation factors nonzero.
// Returns the validated parameter pack or the reason it was rejected.
std::optional<AKParams> make_validated_ak_params(int n, int m, const Rational& q,
                                                 const std::vector<Rational>& u,
                                                 std::string* whyNot = nullptr);

// Deterministic search: q = 2 and u drawn from the fixed candidate list
// 1, 7, 97, 997, ... (largest prime below each power of ten), shifting the
// window until the validator passes.
AKParams find_valid_params(int n, int m);

AlgebraInstance build_group_algebra(int n);                     // 2 <= n <= 6
AlgebraInstance build_hecke_typeA(int n, const Rational& q);    // 2 <= n <= 5, q != 0
AlgebraInstance build_ak_seminormal(const AKParams& params);    // 1 <= n <= 4, 1 <= m <= 3
AlgebraInstance build_counterexample_pair(bool comparable_cells = false);

} // namespace cjm
