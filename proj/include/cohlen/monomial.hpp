#pragma once

/**
 * @file monomial.hpp
 * @brief Monomial ideals in a polynomial ring: minimal generators,
 *        products and powers, colon ideals, intersections, and saturation
 *        at the irrelevant maximal ideal.
 *
 * An ideal is held as its unique minimal generating set (an antichain
 * under componentwise divisibility), kept sorted by (degree, lex). The
 * zero ideal has no generators; the unit ideal is generated by the
 * all-zeros exponent vector.
 */

#include <algorithm>
#include <compare>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cohlen {

/// Exponent vector of a monomial in d variables.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exponents) : e_(std::move(exponents)) {
        for (int v : e_)
            if (v < 0) throw std::invalid_argument("Monomial: negative exponent");
    }

    static Monomial one(int vars) { return Monomial(std::vector<int>(vars, 0)); }

    int vars() const { return static_cast<int>(e_.size()); }
    int operator[](int i) const { return e_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& exponents() const { return e_; }

    int degree() const {
        int d = 0;
        for (int v : e_) d += v;
        return d;
    }

    bool divides(const Monomial& other) const {
        if (e_.size() != other.e_.size()) return false;
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > other.e_[i]) return false;
        return true;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        if (a.e_.size() != b.e_.size())
            throw std::invalid_argument("Monomial: mixed variable counts");
        std::vector<int> e(a.e_.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = a.e_[i] + b.e_[i];
        return Monomial(std::move(e));
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        if (a.e_.size() != b.e_.size())
            throw std::invalid_argument("Monomial: mixed variable counts");
        std::vector<int> e(a.e_.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.e_[i], b.e_[i]);
        return Monomial(std::move(e));
    }

    friend bool operator==(const Monomial& a, const Monomial& b) = default;

    // degree-then-lex; the degree-major order is what makes antichain
    // filtering a single forward pass
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
        if (int c = a.degree() - b.degree(); c != 0) return c <=> 0;
        return a.e_ <=> b.e_;
    }

private:
    std::vector<int> e_;
};

class MonomialIdeal {
public:
    /// Builds the ideal generated by `gens`, reduced to the minimal
    /// generating antichain. Mixed exponent-vector lengths are rejected.
    MonomialIdeal(int ambient_dim, std::vector<Monomial> gens) : dim_(ambient_dim) {
        if (dim_ < 1) throw std::invalid_argument("MonomialIdeal: ambient dimension must be >= 1");
        for (const Monomial& g : gens)
            if (g.vars() != dim_)
                throw std::invalid_argument("MonomialIdeal: generator length mismatch");
        std::sort(gens.begin(), gens.end());
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
        for (Monomial& g : gens) {
            bool redundant = false;
            for (const Monomial& kept : gens_) {
                if (kept.degree() >= g.degree()) break;  // sorted: no divisor beyond here
                if (kept.divides(g)) {
                    redundant = true;
                    break;
                }
            }
            if (!redundant) gens_.push_back(std::move(g));
        }
    }

    static MonomialIdeal zero(int ambient_dim) { return MonomialIdeal(ambient_dim, {}); }
    static MonomialIdeal unit(int ambient_dim) {
        return MonomialIdeal(ambient_dim, {Monomial::one(ambient_dim)});
    }

    int dim() const { return dim_; }
    const std::vector<Monomial>& generators() const { return gens_; }

    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return !gens_.empty() && gens_.front().degree() == 0; }
    bool is_proper() const { return !is_unit(); }

    bool contains(const Monomial& m) const {
        for (const Monomial& g : gens_) {
            if (g.degree() > m.degree()) break;
            if (g.divides(m)) return true;
        }
        return false;
    }

    bool contains(const MonomialIdeal& other) const {
        for (const Monomial& g : other.gens_)
            if (!contains(g)) return false;
        return true;
    }

    int max_generator_degree() const { return gens_.empty() ? 0 : gens_.back().degree(); }

    /// Componentwise max over all generators (the zero vector for the
    /// zero ideal). Every monomial of sat(I) \ I divides this.
    Monomial generator_lcm() const {
        std::vector<int> e(static_cast<std::size_t>(dim_), 0);
        for (const Monomial& g : gens_)
            for (int i = 0; i < dim_; ++i) e[static_cast<std::size_t>(i)] = std::max(e[i], g[i]);
        return Monomial(std::move(e));
    }

    friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) = default;

private:
    int dim_;
    std::vector<Monomial> gens_;
};

/// The antichain of the input set; the generated ideal is unchanged.
inline MonomialIdeal minimalize(int ambient_dim, std::vector<Monomial> gens) {
    return MonomialIdeal(ambient_dim, std::move(gens));
}

inline MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("sum: ambient dimension mismatch");
    std::vector<Monomial> gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return MonomialIdeal(a.dim(), std::move(gens));
}

inline MonomialIdeal add_variable(const MonomialIdeal& ideal, int var) {
    if (var < 0 || var >= ideal.dim())
        throw std::out_of_range("add_variable: variable index out of range");
    std::vector<int> e(static_cast<std::size_t>(ideal.dim()), 0);
    e[static_cast<std::size_t>(var)] = 1;
    std::vector<Monomial> gens = ideal.generators();
    gens.push_back(Monomial(std::move(e)));
    return MonomialIdeal(ideal.dim(), std::move(gens));
}

inline MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("multiply: ambient dimension mismatch");
    if (a.is_zero() || b.is_zero()) return MonomialIdeal::zero(a.dim());
    std::vector<Monomial> gens;
    gens.reserve(a.generators().size() * b.generators().size());
    for (const Monomial& ga : a.generators())
        for (const Monomial& gb : b.generators()) gens.push_back(ga * gb);
    return MonomialIdeal(a.dim(), std::move(gens));
}

/// Iterated multiply with re-minimalization at every step; n >= 1.
inline MonomialIdeal power(const MonomialIdeal& ideal, long long n) {
    if (n <= 0) throw std::invalid_argument("power: exponent must be positive");
    MonomialIdeal result = ideal;
    for (long long i = 1; i < n; ++i) result = multiply(result, ideal);
    return result;
}

/// I : x_var (a single colon step).
inline MonomialIdeal colon_variable(const MonomialIdeal& ideal, int var) {
    if (var < 0 || var >= ideal.dim())
        throw std::out_of_range("colon_variable: variable index out of range");
    std::vector<Monomial> gens;
    gens.reserve(ideal.generators().size());
    for (const Monomial& g : ideal.generators()) {
        std::vector<int> e = g.exponents();
        if (e[static_cast<std::size_t>(var)] > 0) --e[static_cast<std::size_t>(var)];
        gens.push_back(Monomial(std::move(e)));
    }
    return MonomialIdeal(ideal.dim(), std::move(gens));
}

/// I : x_var^inf — zero the var-th exponent of every generator.
inline MonomialIdeal colon_variable_infinity(const MonomialIdeal& ideal, int var) {
    if (var < 0 || var >= ideal.dim())
        throw std::out_of_range("colon_variable_infinity: variable index out of range");
    std::vector<Monomial> gens;
    gens.reserve(ideal.generators().size());
    for (const Monomial& g : ideal.generators()) {
        std::vector<int> e = g.exponents();
        e[static_cast<std::size_t>(var)] = 0;
        gens.push_back(Monomial(std::move(e)));
    }
    return MonomialIdeal(ideal.dim(), std::move(gens));
}

/// Generated by the pairwise lcms, minimalized.
inline MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("intersect: ambient dimension mismatch");
    if (a.is_zero() || b.is_zero()) return MonomialIdeal::zero(a.dim());
    std::vector<Monomial> gens;
    gens.reserve(a.generators().size() * b.generators().size());
    for (const Monomial& ga : a.generators())
        for (const Monomial& gb : b.generators()) gens.push_back(lcm(ga, gb));
    return MonomialIdeal(a.dim(), std::move(gens));
}

/// I : m^inf at m = (x_1,...,x_d), computed as the intersection of the
/// single-variable saturations. A direct colon by the product x_1...x_d
/// is wrong — (x_1) : (x_1...x_d)^inf would be the unit ideal.
inline MonomialIdeal saturate_irrelevant(const MonomialIdeal& ideal) {
    MonomialIdeal result = colon_variable_infinity(ideal, 0);
    for (int i = 1; i < ideal.dim(); ++i)
        result = intersect(result, colon_variable_infinity(ideal, i));
    return result;
}

}  // namespace cohlen
