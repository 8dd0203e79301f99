#pragma once

#include "cjm/cell_algebra.hpp"
#include "cjm/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace cjm {

// Symmetric polynomials written in the power-sum-product basis: a term keyed
// by the non-increasing exponent list (k_1, k_2, ...) stands for
// p_{k_1} p_{k_2} ..., and the empty key is the constant term. Over the
// rationals these products span all symmetric polynomials, and evaluation
// needs nothing beyond powers and products, which is what makes substitution
// of commuting algebra elements straightforward.
class SymPoly {
public:
    using Key = std::vector<int>;

    SymPoly() = default;

    static SymPoly one() { return constant(Rational(1)); }
    static SymPoly constant(const Rational& c);
    static SymPoly power_sum(int k);  // p_k, k >= 1
    static SymPoly elementary(int k); // e_k through Newton's identities, k >= 0

    bool is_zero() const { return terms_.empty(); }
    int degree() const; // 0 for constants and for the zero polynomial
    const std::map<Key, Rational>& terms() const { return terms_; }
    std::string str() const;

    SymPoly operator-() const;
    SymPoly operator+(const SymPoly& o) const;
    SymPoly operator-(const SymPoly& o) const;
    SymPoly operator*(const SymPoly& o) const;
    SymPoly operator*(const Rational& c) const;
    friend SymPoly operator*(const Rational& c, const SymPoly& p) { return p * c; }

    friend bool operator==(const SymPoly& a, const SymPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const SymPoly& a, const SymPoly& b) { return !(a == b); }

    Rational eval_at_contents(const std::vector<Rational>& values) const;

    // Substitutes p_k -> sum of L_i^k. The L_i must commute pairwise (checked
    // upstream by the JM verifier) and the list must be nonempty.
    Element eval_at_elements(const std::vector<Element>& L) const;

private:
    void prune();

    std::map<Key, Rational> terms_;
};

} // namespace cjm
