#include "cjm/sympoly.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace cjm {

void SymPoly::prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second.is_zero())
            it = terms_.erase(it);
        else
            ++it;
    }
}

SymPoly SymPoly::constant(const Rational& c) {
    SymPoly p;
    if (!c.is_zero()) p.terms_[{}] = c;
    return p;
}

SymPoly SymPoly::power_sum(int k) {
    if (k < 1) throw std::invalid_argument("SymPoly::power_sum: k must be positive");
    SymPoly p;
    p.terms_[{k}] = Rational(1);
    return p;
}

SymPoly SymPoly::elementary(int k) {
    if (k < 0) throw std::invalid_argument("SymPoly::elementary: k must be nonnegative");
    // k e_k = sum_{i=1..k} (-1)^(i-1) e_{k-i} p_i
    std::vector<SymPoly> e{one()};
    for (int j = 1; j <= k; ++j) {
        SymPoly acc;
        Rational sign(1);
        for (int i = 1; i <= j; ++i) {
            acc = acc + sign * e[static_cast<std::size_t>(j - i)] * power_sum(i);
            sign = -sign;
        }
        e.push_back(acc * Rational(1, j));
    }
    return e[static_cast<std::size_t>(k)];
}

int SymPoly::degree() const {
    int d = 0;
    for (const auto& [key, coeff] : terms_) {
        (void)coeff;
        d = std::max(d, std::accumulate(key.begin(), key.end(), 0));
    }
    return d;
}

std::string SymPoly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [key, coeff] : terms_) {
        if (!s.empty()) s += " + ";
        s += coeff.str();
        for (int k : key) s += "*p" + std::to_string(k);
    }
    return s;
}

SymPoly SymPoly::operator-() const {
    SymPoly out = *this;
    for (auto& [key, coeff] : out.terms_) {
        (void)key;
        coeff = -coeff;
    }
    return out;
}

SymPoly SymPoly::operator+(const SymPoly& o) const {
    SymPoly out = *this;
    for (const auto& [key, coeff] : o.terms_) out.terms_[key] += coeff;
    out.prune();
    return out;
}

SymPoly SymPoly::operator-(const SymPoly& o) const { return *this + (-o); }

SymPoly SymPoly::operator*(const SymPoly& o) const {
    SymPoly out;
    for (const auto& [ka, ca] : terms_) {
        for (const auto& [kb, cb] : o.terms_) {
            Key merged = ka;
            merged.insert(merged.end(), kb.begin(), kb.end());
            std::sort(merged.begin(), merged.end(), std::greater<int>());
            out.terms_[merged] += ca * cb;
        }
    }
    out.prune();
    return out;
}

SymPoly SymPoly::operator*(const Rational& c) const {
    SymPoly out;
    if (c.is_zero()) return out;
    out = *this;
    for (auto& [key, coeff] : out.terms_) {
        (void)key;
        coeff *= c;
    }
    return out;
}

Rational SymPoly::eval_at_contents(const std::vector<Rational>& values) const {
    int maxExp = 0;
    for (const auto& [key, coeff] : terms_) {
        (void)coeff;
        if (!key.empty()) maxExp = std::max(maxExp, key.front());
    }
    // powerSums[k-1] = sum of values[i]^k
    std::vector<Rational> powerSums;
    std::vector<Rational> powers(values);
    for (int k = 1; k <= maxExp; ++k) {
        Rational sum(0);
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (k > 1) powers[i] *= values[i];
            sum += powers[i];
        }
        powerSums.push_back(sum);
    }
    Rational total(0);
    for (const auto& [key, coeff] : terms_) {
        Rational term = coeff;
        for (int k : key) term *= powerSums[static_cast<std::size_t>(k - 1)];
        total += term;
    }
    return total;
}

Element SymPoly::eval_at_elements(const std::vector<Element>& L) const {
    if (L.empty()) throw std::invalid_argument("SymPoly::eval_at_elements: empty element list");
    const AlgebraTable& A = *L.front().alg;
    int maxExp = 0;
    for (const auto& [key, coeff] : terms_) {
        (void)coeff;
        if (!key.empty()) maxExp = std::max(maxExp, key.front());
    }
    std::vector<Element> powerSums;
    std::vector<Element> powers(L);
    for (int k = 1; k <= maxExp; ++k) {
        Element sum = Element::zero(A);
        for (std::size_t i = 0; i < L.size(); ++i) {
            if (k > 1) powers[i] = powers[i] * L[i];
            sum = sum + powers[i];
        }
        powerSums.push_back(std::move(sum));
    }
    Element total = Element::zero(A);
    for (const auto& [key, coeff] : terms_) {
        Element term = Element::identity(A) * coeff;
        for (int k : key) term = term * powerSums[static_cast<std::size_t>(k - 1)];
        total = total + term;
    }
    return total;
}

} // namespace cjm
