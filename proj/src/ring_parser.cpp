#include "sullivan/ring_parser.hpp"

#include "sullivan/errors.hpp"

#include <cctype>
#include <sstream>

namespace sullivan {

namespace {

// Single-line cursor with 1-based line/column tracking for diagnostics.
class LineScanner {
public:
    LineScanner(const std::string& s, int line) : s_(s), line_(line) {}

    void skip_ws() {
        while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
    }
    bool at_end() {
        skip_ws();
        return pos_ >= s_.size();
    }
    int col() const { return (int)pos_ + 1; }
    int line() const { return line_; }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool consume(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c, const char* what) {
        if (!consume(c))
            throw SyntaxError(std::string("expected '") + c + "' (" + what + ")", line_, col());
    }

    std::string identifier() {
        skip_ws();
        if (pos_ >= s_.size() || !(std::isalpha((unsigned char)s_[pos_])))
            throw SyntaxError("expected an identifier", line_, col());
        size_t start = pos_;
        while (pos_ < s_.size() &&
               (std::isalnum((unsigned char)s_[pos_]) || s_[pos_] == '_'))
            ++pos_;
        return s_.substr(start, pos_ - start);
    }

    BigInt integer() {
        skip_ws();
        size_t start = pos_;
        if (pos_ < s_.size() && s_[pos_] == '-') ++pos_;
        size_t digits = pos_;
        while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) ++pos_;
        if (pos_ == digits) throw SyntaxError("expected an integer", line_, col());
        return BigInt(s_.substr(start, pos_ - start));
    }

    bool looks_like_number() {
        skip_ws();
        if (pos_ >= s_.size()) return false;
        return std::isdigit((unsigned char)s_[pos_]) || s_[pos_] == '-';
    }

private:
    const std::string& s_;
    size_t pos_ = 0;
    int line_;
};

Rational parse_rational(LineScanner& sc) {
    BigInt num = sc.integer();
    if (sc.consume('/')) {
        int col = sc.col();
        BigInt den = sc.integer();
        if (den <= 0)
            throw SyntaxError("denominator must be a positive integer", sc.line(), col);
        return Rational(num, den);
    }
    return Rational(num);
}

// factor := name ('^' int)?; returns the factor as a polynomial so odd
// squares collapse naturally later.
GradedPoly parse_factor(const FreeGCA& algebra, LineScanner& sc) {
    int col = sc.col();
    std::string name = sc.identifier();
    int gen = algebra.find(name);
    if (gen < 0)
        throw UnknownGenerator("unknown generator '" + name + "' at line " +
                                   std::to_string(sc.line()) + ", column " + std::to_string(col),
                               sc.line());
    int exp = 1;
    if (sc.consume('^')) {
        int ecol = sc.col();
        BigInt e = sc.integer();
        if (e < 0) throw SyntaxError("negative exponent", sc.line(), ecol);
        if (e > 64) throw SyntaxError("exponent too large", sc.line(), ecol);
        exp = (int)e;
    }
    GradedPoly p = GradedPoly::term(Monomial::one(), Rational(1));
    for (int i = 0; i < exp; ++i)
        p = algebra.mul(p, GradedPoly::term(Monomial::power(gen, 1), Rational(1)));
    return p;
}

GradedPoly parse_term(const FreeGCA& algebra, LineScanner& sc) {
    GradedPoly acc;
    if (sc.looks_like_number()) {
        acc = GradedPoly::term(Monomial::one(), parse_rational(sc));
        while (sc.consume('*')) acc = algebra.mul(acc, parse_factor(algebra, sc));
        return acc;
    }
    acc = parse_factor(algebra, sc);
    while (sc.consume('*')) acc = algebra.mul(acc, parse_factor(algebra, sc));
    return acc;
}

GradedPoly parse_expr(const FreeGCA& algebra, LineScanner& sc) {
    GradedPoly acc = parse_term(algebra, sc);
    while (true) {
        if (sc.consume('+')) {
            acc = acc + parse_term(algebra, sc);
        } else if (sc.consume('-')) {
            acc = acc - parse_term(algebra, sc);
        } else {
            break;
        }
    }
    if (!sc.at_end())
        throw SyntaxError("unexpected trailing input", sc.line(), sc.col());
    return acc;
}

}  // namespace

Presentation parse_presentation(const std::string& text) {
    Presentation p;
    bool have_dim = false;

    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    struct PendingRelation {
        std::string expr;
        int line;
    };
    std::vector<PendingRelation> pending;
    std::vector<std::pair<std::string, int>> gen_lines;

    while (std::getline(in, raw)) {
        ++lineno;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        LineScanner head(raw, lineno);
        if (head.at_end()) continue;
        std::string keyword = head.identifier();

        if (keyword == "dim") {
            head.expect('=', "dim line reads 'dim = <int>'");
            BigInt d = head.integer();
            if (d < 1 || d > 64)
                throw SyntaxError("dim must be a small positive integer", lineno, head.col());
            if (have_dim)
                throw SyntaxError("dim declared twice", lineno, 1);
            p.formal_dimension = (int)d;
            have_dim = true;
            if (!head.at_end())
                throw SyntaxError("unexpected trailing input", lineno, head.col());
        } else if (keyword == "generator") {
            int col = head.col();
            std::string name = head.identifier();
            BigInt deg = head.integer();
            if (deg < 1 || deg > 64)
                throw SyntaxError("generator degree must be a small positive integer",
                                  lineno, col);
            if (!head.at_end())
                throw SyntaxError("unexpected trailing input", lineno, head.col());
            for (const auto& [n, l] : gen_lines)
                if (n == name)
                    throw DuplicateGenerator("generator '" + name + "' redeclared at line " +
                                                 std::to_string(lineno) +
                                                 " (first declared at line " +
                                                 std::to_string(l) + ")",
                                             lineno);
            gen_lines.emplace_back(name, lineno);
            p.algebra.add_generator(name, (int)deg);
        } else if (keyword == "relation") {
            // Relations may reference generators declared later; defer.
            size_t kw = raw.find("relation");
            pending.push_back({raw.substr(kw + 8), lineno});
        } else {
            throw SyntaxError("unknown directive '" + keyword + "'", lineno, 1);
        }
    }

    for (const auto& [expr, line] : pending) {
        LineScanner sc(expr, line);
        GradedPoly poly = parse_expr(p.algebra, sc);
        if (poly.is_zero())
            throw SyntaxError("relation is identically zero", line, 1);
        auto deg = p.algebra.degree_of(poly);
        if (!deg)
            throw InhomogeneousRelation("relation at line " + std::to_string(line) +
                                            " mixes degrees",
                                        line);
        if (*deg < 2)
            throw SyntaxError("relation must have degree at least 2", line, 1);
        p.relations.push_back(std::move(poly));
    }

    p.validate();
    return p;
}

std::string print_presentation(const Presentation& p) {
    std::ostringstream os;
    if (p.formal_dimension) os << "dim = " << *p.formal_dimension << "\n";
    for (const auto& g : p.algebra.generators())
        os << "generator " << g.name << " " << g.degree << "\n";
    for (const auto& r : p.relations)
        os << "relation " << p.algebra.poly_str(r) << "\n";
    return os.str();
}

}  // namespace sullivan
