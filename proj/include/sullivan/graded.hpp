#pragma once

#include "sullivan/errors.hpp"
#include "sullivan/rational.hpp"
#include "sullivan/tower.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sullivan {

struct Generator {
    std::string name;
    int degree = 0;
    bool operator==(const Generator& o) const = default;
};

// Monomial in a fixed generator list: sorted (generator index, exponent)
// pairs, exponents >= 1. Odd-degree generators never carry exponent > 1;
// the multiplication routine returns sign 0 instead.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<std::pair<int, int>> factors) : f_(std::move(factors)) {
        normalize();
    }
    static Monomial one() { return Monomial(); }
    static Monomial power(int gen, int exp) {
        return exp == 0 ? Monomial() : Monomial({{gen, exp}});
    }

    bool is_one() const { return f_.empty(); }
    const std::vector<std::pair<int, int>>& factors() const { return f_; }
    int exponent_of(int gen) const;
    int total_exponent() const;  // word length, for decomposability checks

    bool operator==(const Monomial& o) const { return f_ == o.f_; }

private:
    void normalize();  // sort by generator, merge repeats, drop zero powers
    std::vector<std::pair<int, int>> f_;
};

// Column order: monomials with higher exponents on earlier generators come
// first. Used for quotient bases and as the map order everywhere, so all
// bases and printouts are deterministic.
struct ColumnLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

template <class C>
using TermMap = std::map<Monomial, C, ColumnLess>;

// Linear combination of monomials over a coefficient ring C (exact
// rationals, or tower elements for radical extensions). Zero coefficients
// are never stored.
template <class C>
class BasicGradedPoly {
public:
    BasicGradedPoly() = default;
    static BasicGradedPoly term(const Monomial& m, C c) {
        BasicGradedPoly p;
        p.add_term(m, std::move(c));
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    const TermMap<C>& terms() const { return terms_; }

    void add_term(const Monomial& m, C c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, std::move(c));
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    BasicGradedPoly operator-() const {
        BasicGradedPoly r;
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    friend BasicGradedPoly operator+(const BasicGradedPoly& a, const BasicGradedPoly& b) {
        BasicGradedPoly r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }
    friend BasicGradedPoly operator-(const BasicGradedPoly& a, const BasicGradedPoly& b) {
        return a + (-b);
    }
    BasicGradedPoly scaled(const Rational& s) const {
        BasicGradedPoly r;
        if (s.is_zero()) return r;
        for (const auto& [m, c] : terms_) r.add_term(m, c * s);
        return r;
    }
    BasicGradedPoly scaled_by(const C& s) const {
        BasicGradedPoly r;
        if (s.is_zero()) return r;
        for (const auto& [m, c] : terms_) r.add_term(m, c * s);
        return r;
    }

    bool operator==(const BasicGradedPoly& o) const { return (*this - o).is_zero(); }

private:
    TermMap<C> terms_;
};

using GradedPoly = BasicGradedPoly<Rational>;
using ExtGradedPoly = BasicGradedPoly<TowerElem>;

// Free graded-commutative algebra on an ordered generator list: polynomial
// on even generators tensor exterior on odd ones. Monomial arithmetic with
// Koszul signs lives here.
class FreeGCA {
public:
    FreeGCA() = default;
    explicit FreeGCA(std::vector<Generator> gens);

    int size() const { return (int)gens_.size(); }
    const std::vector<Generator>& generators() const { return gens_; }
    const Generator& gen(int i) const { return gens_[i]; }
    bool odd(int i) const { return gens_[i].degree % 2 == 1; }
    int find(const std::string& name) const;  // -1 when absent
    int add_generator(const std::string& name, int degree);

    int degree(const Monomial& m) const;
    std::optional<int> degree_of(const BasicGradedPoly<Rational>& p) const;

    // Koszul product: sign is 0 when an odd generator repeats, otherwise
    // the parity of odd-odd transpositions needed to sort the word.
    std::pair<int, Monomial> mul_monomials(const Monomial& a, const Monomial& b) const;

    // All monomials of the given total degree, in column order.
    std::vector<Monomial> monomials_of_degree(int d) const;

    template <class C>
    BasicGradedPoly<C> mul(const BasicGradedPoly<C>& a, const BasicGradedPoly<C>& b) const {
        BasicGradedPoly<C> out;
        for (const auto& [ma, ca] : a.terms())
            for (const auto& [mb, cb] : b.terms()) {
                auto [sign, m] = mul_monomials(ma, mb);
                if (sign == 0) continue;
                C c = ca * cb;
                if (sign < 0) c = -c;
                out.add_term(m, std::move(c));
            }
        return out;
    }

    std::string monomial_str(const Monomial& m) const;
    std::string poly_str(const GradedPoly& p) const;
    template <class C>
    std::string poly_str_generic(const BasicGradedPoly<C>& p) const {
        if (p.is_zero()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [m, c] : p.terms()) {
            if (!first) out += " + ";
            out += "(" + c.str() + ")";
            if (!m.is_one()) out += "*" + monomial_str(m);
            first = false;
        }
        return out;
    }

private:
    std::vector<Generator> gens_;
};

// Generators plus homogeneous relation polynomials; the input form of every
// cohomology ring here.
struct Presentation {
    FreeGCA algebra;
    std::vector<GradedPoly> relations;
    std::optional<int> formal_dimension;

    // Throws MalformedPresentation on inhomogeneous/zero/constant relations.
    void validate() const;
    int relation_degree(const GradedPoly& r) const;
    int default_cap() const;
};

// Promote rational coefficients into a scalar tower.
ExtGradedPoly to_tower(const GradedPoly& p, const TowerPtr& tower);

}  // namespace sullivan
