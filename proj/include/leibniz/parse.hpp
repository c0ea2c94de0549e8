#pragma once

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "leibniz/algebra.hpp"
#include "leibniz/rational.hpp"

namespace leibniz {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t col, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(col) +
                             ": " + message),
          line_(line),
          col_(col) {}

    std::size_t line() const { return line_; }
    std::size_t col() const { return col_; }

private:
    std::size_t line_;
    std::size_t col_;
};

/// One product line [[e_i, e_j]] = sum of (coefficient, k) terms. 1-based.
struct ProductLine {
    std::size_t i = 0, j = 0;
    std::vector<std::pair<Rational, std::size_t>> terms;
};

struct BracketTableDoc {
    std::size_t dim = 0;
    std::vector<ProductLine> products;
};

namespace detail {

/// Character scanner for one line; columns are 1-based.
class LineScanner {
public:
    LineScanner(std::string_view text, std::size_t line_no)
        : text_(text), line_(line_no) {}

    void skip_ws() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
    }
    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    std::size_t col() const { return pos_ + 1; }

    void expect(char c, const std::string& what) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c)
            throw ParseError(line_, col(), "expected '" + std::string(1, c) + "' " + what);
        ++pos_;
    }
    bool consume(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::string digits(const std::string& what) {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') ++pos_;
        if (pos_ == start)
            throw ParseError(line_, start + 1, "expected " + what);
        return std::string(text_.substr(start, pos_ - start));
    }

    /// e<k> with a 1-based bound check against dim.
    std::size_t basis_index(std::size_t dim) {
        skip_ws();
        const std::size_t at = col();
        if (pos_ >= text_.size() || text_[pos_] != 'e')
            throw ParseError(line_, at, "expected basis symbol e<k>");
        ++pos_;
        const std::string num = digits("basis index after 'e'");
        if (num.size() > 4)
            throw ParseError(line_, at, "basis index e" + num + " out of range 1..e" +
                                            std::to_string(dim));
        const unsigned long k = std::stoul(num);
        if (k < 1 || k > dim)
            throw ParseError(line_, at, "basis index e" + num + " out of range 1..e" +
                                            std::to_string(dim));
        return k;
    }

    /// [-]p[/q]; the caller handles separator signs.
    Rational rational() {
        skip_ws();
        bool neg = consume('-');
        if (!neg && consume('+')) neg = false;
        std::string p = digits("numerator digits");
        BigInt den = 1;
        if (consume('/')) {
            den = BigInt(digits("denominator digits"));
            if (den == 0) throw error("zero denominator in coefficient");
        }
        Rational r(BigInt(p), den);
        return neg ? -r : r;
    }

    ParseError error(const std::string& message) { return ParseError(line_, col(), message); }

private:
    std::string_view text_;
    std::size_t line_;
    std::size_t pos_ = 0;
};

inline bool starts_number(char c) { return (c >= '0' && c <= '9') || c == '-' || c == '+'; }

}  // namespace detail

/// Parses the bracket-table text format:
///
///   # comment
///   dim 4
///   [e1,e1] = e2
///   [e2,e1] = -e3 + 1/2 e4
///
/// Whitespace-insensitive; an omitted coefficient means 1; '*' between the
/// coefficient and the basis symbol is optional; duplicate (i, j) lines and
/// out-of-range indices are errors.
inline BracketTableDoc parse_bracket_table(std::string_view text) {
    BracketTableDoc doc;
    bool have_dim = false;
    std::set<std::pair<std::size_t, std::size_t>> seen;

    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(start, end - start);
        ++line_no;
        start = end + 1;

        if (auto hash = raw.find('#'); hash != std::string_view::npos)
            raw = raw.substr(0, hash);
        detail::LineScanner sc(raw, line_no);
        if (sc.at_end()) {
            if (end == text.size()) break;
            continue;
        }

        if (!have_dim) {
            // first significant line must be "dim <n>"
            if (sc.peek() != 'd')
                throw sc.error("expected 'dim <n>' as the first line");
            for (char c : std::string_view("dim")) sc.expect(c, "in 'dim' keyword");
            const std::string num = sc.digits("dimension");
            if (!sc.at_end()) throw sc.error("trailing text after dimension");
            if (num.size() > 4) throw sc.error("dimension too large");
            doc.dim = std::stoul(num);
            if (doc.dim < 1) throw sc.error("dimension must be >= 1");
            have_dim = true;
            continue;
        }

        ProductLine prod;
        sc.expect('[', "to open a product");
        prod.i = sc.basis_index(doc.dim);
        sc.expect(',', "between the factors");
        prod.j = sc.basis_index(doc.dim);
        sc.expect(']', "to close the product");
        sc.expect('=', "after the product");
        if (!seen.insert({prod.i, prod.j}).second)
            throw sc.error("duplicate product line for [e" + std::to_string(prod.i) + ",e" +
                           std::to_string(prod.j) + "]");

        bool first = true;
        while (true) {
            Rational sign(1);
            if (first) {
                if (sc.consume('-')) sign = Rational(-1);
                first = false;
            } else if (sc.consume('+')) {
                sign = Rational(1);
            } else if (sc.consume('-')) {
                sign = Rational(-1);
            } else {
                throw sc.error("expected '+' or '-' between terms");
            }
            Rational coeff(1);
            if (detail::starts_number(sc.peek())) {
                coeff = sc.rational();
                sc.consume('*');
            }
            const std::size_t k = sc.basis_index(doc.dim);
            prod.terms.emplace_back(sign * coeff, k);
            if (sc.at_end()) break;
        }
        doc.products.push_back(std::move(prod));
    }
    if (!have_dim) throw ParseError(1, 1, "missing 'dim <n>' line");
    return doc;
}

inline Algebra algebra_from_doc(const BracketTableDoc& doc, std::string name = "algebra") {
    Algebra a(std::move(name), doc.dim);
    for (const auto& p : doc.products)
        for (const auto& [c, k] : p.terms) a.gamma(p.i - 1, p.j - 1, k - 1) += c;
    return a;
}

inline Algebra parse_algebra(std::string_view text, std::string name = "algebra") {
    return algebra_from_doc(parse_bracket_table(text), std::move(name));
}

/// Nonzero products of an algebra in (i, j) lexicographic order, terms in
/// basis order — the canonical document for rendering.
inline BracketTableDoc doc_from_algebra(const Algebra& a) {
    BracketTableDoc doc;
    doc.dim = a.dim();
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            ProductLine p;
            p.i = i + 1;
            p.j = j + 1;
            for (std::size_t k = 0; k < a.dim(); ++k)
                if (!a.gamma(i, j, k).is_zero()) p.terms.emplace_back(a.gamma(i, j, k), k + 1);
            if (!p.terms.empty()) doc.products.push_back(std::move(p));
        }
    return doc;
}

/// Canonical text rendering; parse_bracket_table(render_bracket_table(doc))
/// reproduces the same algebra.
inline std::string render_bracket_table(const BracketTableDoc& doc) {
    std::string out = "dim " + std::to_string(doc.dim) + "\n";
    for (const auto& p : doc.products) {
        out += "[e" + std::to_string(p.i) + ",e" + std::to_string(p.j) + "] = ";
        for (std::size_t t = 0; t < p.terms.size(); ++t) {
            const auto& [c, k] = p.terms[t];
            const bool neg = c.sign() < 0;
            const Rational mag = neg ? -c : c;
            if (t == 0) {
                if (neg) out += "-";
            } else {
                out += neg ? " - " : " + ";
            }
            if (!mag.is_one()) out += mag.str() + " ";
            out += "e" + std::to_string(k);
        }
        out += "\n";
    }
    return out;
}

}  // namespace leibniz
