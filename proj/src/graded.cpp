#include "sullivan/graded.hpp"

#include <algorithm>
#include <sstream>

namespace sullivan {

void Monomial::normalize() {
    std::sort(f_.begin(), f_.end());
    size_t w = 0;
    for (size_t i = 0; i < f_.size(); ++i) {
        if (w > 0 && f_[w - 1].first == f_[i].first) {
            f_[w - 1].second += f_[i].second;
        } else {
            f_[w++] = f_[i];
        }
    }
    f_.resize(w);
    std::erase_if(f_, [](const auto& p) { return p.second == 0; });
}

int Monomial::exponent_of(int gen) const {
    for (const auto& [g, e] : f_)
        if (g == gen) return e;
    return 0;
}

int Monomial::total_exponent() const {
    int t = 0;
    for (const auto& [g, e] : f_) t += e;
    return t;
}

bool ColumnLess::operator()(const Monomial& a, const Monomial& b) const {
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    // Generator powers come before mixed monomials, so relations such as
    // x2^2 + b1 x1 x2 rewrite the square in terms of the products.
    bool pure_a = fa.size() <= 1, pure_b = fb.size() <= 1;
    if (pure_a != pure_b) return pure_a;
    if (pure_a) {
        int ga = fa.empty() ? INT32_MAX : fa[0].first;
        int gb = fb.empty() ? INT32_MAX : fb[0].first;
        if (ga != gb) return ga < gb;
        int ea = fa.empty() ? 0 : fa[0].second;
        int eb = fb.empty() ? 0 : fb[0].second;
        return ea > eb;
    }
    // Mixed monomials: larger exponents on earlier generators first.
    size_t i = 0, j = 0;
    while (i < fa.size() || j < fb.size()) {
        int ga = i < fa.size() ? fa[i].first : INT32_MAX;
        int gb = j < fb.size() ? fb[j].first : INT32_MAX;
        if (ga < gb) return true;
        if (gb < ga) return false;
        int ea = fa[i].second, eb = fb[j].second;
        if (ea != eb) return ea > eb;
        ++i;
        ++j;
    }
    return false;
}

FreeGCA::FreeGCA(std::vector<Generator> gens) : gens_(std::move(gens)) {
    for (size_t i = 0; i < gens_.size(); ++i) {
        if (gens_[i].degree < 1)
            throw MalformedPresentation("generator '" + gens_[i].name +
                                        "' must have positive degree");
        for (size_t j = i + 1; j < gens_.size(); ++j)
            if (gens_[i].name == gens_[j].name)
                throw MalformedPresentation("duplicate generator '" + gens_[i].name + "'");
    }
}

int FreeGCA::find(const std::string& name) const {
    for (size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == name) return (int)i;
    return -1;
}

int FreeGCA::add_generator(const std::string& name, int degree) {
    if (find(name) >= 0)
        throw MalformedPresentation("duplicate generator '" + name + "'");
    if (degree < 1) throw MalformedPresentation("generator degree must be positive");
    gens_.push_back({name, degree});
    return (int)gens_.size() - 1;
}

int FreeGCA::degree(const Monomial& m) const {
    int d = 0;
    for (const auto& [g, e] : m.factors()) d += gens_[g].degree * e;
    return d;
}

std::optional<int> FreeGCA::degree_of(const GradedPoly& p) const {
    std::optional<int> d;
    for (const auto& [m, c] : p.terms()) {
        int dm = degree(m);
        if (d && *d != dm) return std::nullopt;
        d = dm;
    }
    return d;
}

std::pair<int, Monomial> FreeGCA::mul_monomials(const Monomial& a, const Monomial& b) const {
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    std::vector<std::pair<int, int>> out;
    out.reserve(fa.size() + fb.size());

    // Sign bookkeeping: each odd generator of b moving into place crosses
    // every odd-degree factor of a that sits strictly to its right.
    int odd_suffix_total = 0;  // odd-degree word length of a
    for (const auto& [g, e] : fa)
        if (odd(g)) odd_suffix_total += e;

    int parity = 0;
    size_t i = 0, j = 0;
    int odd_seen_in_a = 0;  // odd factors of a with index <= current merge point
    while (i < fa.size() || j < fb.size()) {
        int ga = i < fa.size() ? fa[i].first : INT32_MAX;
        int gb = j < fb.size() ? fb[j].first : INT32_MAX;
        if (ga < gb) {
            if (odd(ga)) odd_seen_in_a += fa[i].second;
            out.push_back(fa[i]);
            ++i;
        } else if (ga > gb) {
            if (odd(gb)) parity += odd_suffix_total - odd_seen_in_a;
            out.push_back(fb[j]);
            ++j;
        } else {
            if (odd(ga)) return {0, Monomial()};  // odd square vanishes
            out.emplace_back(ga, fa[i].second + fb[j].second);
            ++i;
            ++j;
        }
    }
    return {parity % 2 == 0 ? 1 : -1, Monomial(std::move(out))};
}

std::vector<Monomial> FreeGCA::monomials_of_degree(int d) const {
    std::vector<Monomial> out;
    std::vector<std::pair<int, int>> current;
    // Depth-first over generators in order.
    auto rec = [&](auto&& self, int gen, int remaining) -> void {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        if (gen >= size()) return;
        int gd = gens_[gen].degree;
        int max_e = odd(gen) ? 1 : remaining / gd;
        for (int e = max_e; e >= 0; --e) {
            if (e * gd > remaining) continue;
            if (e > 0) current.emplace_back(gen, e);
            self(self, gen + 1, remaining - e * gd);
            if (e > 0) current.pop_back();
        }
    };
    if (d == 0) return {Monomial::one()};
    rec(rec, 0, d);
    std::sort(out.begin(), out.end(), ColumnLess{});
    return out;
}

std::string FreeGCA::monomial_str(const Monomial& m) const {
    if (m.is_one()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [g, e] : m.factors()) {
        if (!first) os << "*";
        os << gens_[g].name;
        if (e > 1) os << "^" << e;
        first = false;
    }
    return os.str();
}

std::string FreeGCA::poly_str(const GradedPoly& p) const {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        Rational mag = c.abs();
        bool neg = c.sign() < 0;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        if (m.is_one()) {
            os << mag.str();
        } else {
            if (!mag.is_one())
                os << mag.str() << "*";
            else if (first && neg)
                os << "1*";  // a leading "-x" would fall outside the file grammar
            os << monomial_str(m);
        }
        first = false;
    }
    return os.str();
}

void Presentation::validate() const {
    for (const auto& r : relations) {
        if (r.is_zero())
            throw MalformedPresentation("zero relation polynomial");
        auto d = algebra.degree_of(r);
        if (!d) throw MalformedPresentation("inhomogeneous relation: " + algebra.poly_str(r));
        int min_gen = INT32_MAX;
        for (const auto& g : algebra.generators()) min_gen = std::min(min_gen, g.degree);
        if (algebra.size() > 0 && *d < 2 * min_gen)
            throw MalformedPresentation("relation of degree " + std::to_string(*d) +
                                        " below twice the minimal generator degree");
        for (const auto& [m, c] : r.terms())
            for (const auto& [g, e] : m.factors())
                if (g < 0 || g >= algebra.size())
                    throw MalformedPresentation("relation references unknown generator");
    }
}

int Presentation::relation_degree(const GradedPoly& r) const {
    auto d = algebra.degree_of(r);
    if (!d || r.is_zero()) throw MalformedPresentation("relation must be homogeneous and nonzero");
    return *d;
}

int Presentation::default_cap() const {
    if (formal_dimension) return *formal_dimension;
    int m = 0;
    for (const auto& r : relations) m = std::max(m, relation_degree(r));
    if (m > 0) return 2 * m;
    for (const auto& g : algebra.generators()) m = std::max(m, g.degree);
    return 2 * m;
}

ExtGradedPoly to_tower(const GradedPoly& p, const TowerPtr& tower) {
    ExtGradedPoly out;
    for (const auto& [m, c] : p.terms())
        out.add_term(m, TowerElem::from_rational(tower, c));
    return out;
}

}  // namespace sullivan
