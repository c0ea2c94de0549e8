#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "leibniz/matrix.hpp"
#include "leibniz/rational.hpp"

namespace leibniz {

/// Finite-dimensional algebra presented by structure constants:
/// [[e_i, e_j]] = sum_k gamma(i,j,k) e_k, indices 0-based internally.
class Algebra {
public:
    Algebra(std::string name, std::size_t dim)
        : name_(std::move(name)), dim_(dim), gamma_(dim * dim * dim) {
        if (dim_ == 0) throw std::invalid_argument("Algebra: dim must be >= 1");
    }

    const std::string& name() const { return name_; }
    std::size_t dim() const { return dim_; }

    Rational& gamma(std::size_t i, std::size_t j, std::size_t k) {
        return gamma_[(i * dim_ + j) * dim_ + k];
    }
    const Rational& gamma(std::size_t i, std::size_t j, std::size_t k) const {
        return gamma_[(i * dim_ + j) * dim_ + k];
    }

    friend bool operator==(const Algebra& a, const Algebra& b) {
        return a.dim_ == b.dim_ && a.gamma_ == b.gamma_;
    }

    /// Bilinear product of coefficient vectors.
    std::vector<Rational> bracket(const std::vector<Rational>& x,
                                  const std::vector<Rational>& y) const {
        if (x.size() != dim_ || y.size() != dim_)
            throw std::invalid_argument("bracket: vector length != dim");
        std::vector<Rational> out(dim_);
        for (std::size_t i = 0; i < dim_; ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                if (y[j].is_zero()) continue;
                const Rational c = x[i] * y[j];
                for (std::size_t k = 0; k < dim_; ++k)
                    if (!gamma(i, j, k).is_zero()) out[k] += c * gamma(i, j, k);
            }
        }
        return out;
    }

    std::vector<Rational> basis_vector(std::size_t i) const {
        std::vector<Rational> e(dim_);
        e[i] = Rational(1);
        return e;
    }

private:
    std::string name_;
    std::size_t dim_;
    std::vector<Rational> gamma_;
};

struct IdentityViolation {
    std::size_t i = 0, j = 0, k = 0;  // 1-based basis indices
    std::vector<Rational> residual;
};

struct IdentityReport {
    bool holds = true;
    std::vector<IdentityViolation> violations;
};

/// Checks [[x,[[y,z]]]] = [[[[x,y]],z]] - [[[[x,z]],y]] on all basis triples;
/// bilinearity makes that sufficient.
inline IdentityReport check_leibniz(const Algebra& a) {
    IdentityReport report;
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const auto ei = a.basis_vector(i);
                const auto ej = a.basis_vector(j);
                const auto ek = a.basis_vector(k);
                const auto lhs = a.bracket(ei, a.bracket(ej, ek));
                const auto r1 = a.bracket(a.bracket(ei, ej), ek);
                const auto r2 = a.bracket(a.bracket(ei, ek), ej);
                std::vector<Rational> residual(n);
                bool zero = true;
                for (std::size_t t = 0; t < n; ++t) {
                    residual[t] = lhs[t] - (r1[t] - r2[t]);
                    zero = zero && residual[t].is_zero();
                }
                if (!zero)
                    report.violations.push_back({i + 1, j + 1, k + 1, std::move(residual)});
            }
    report.holds = report.violations.empty();
    return report;
}

struct SeriesReport {
    std::vector<std::size_t> dims;  // dims of L^1, L^2, ...
    bool nilpotent = false;
    std::optional<std::size_t> nil_index;  // smallest s with L^s = 0
};

/// Descending series L^1 = L, L^{k+1} = span{ [[u, v]] : u in L^k, v in L }.
/// Stops at 0 (nilpotent) or when the dimension stabilizes.
inline SeriesReport lower_central_series(const Algebra& a) {
    const std::size_t n = a.dim();
    SeriesReport report;
    std::vector<std::vector<Rational>> current;
    for (std::size_t i = 0; i < n; ++i) current.push_back(a.basis_vector(i));
    report.dims.push_back(n);
    while (true) {
        std::vector<std::vector<Rational>> products;
        for (const auto& u : current)
            for (std::size_t j = 0; j < n; ++j) products.push_back(a.bracket(u, a.basis_vector(j)));
        RatMatrix stacked(products.size(), n);
        for (std::size_t r = 0; r < products.size(); ++r)
            for (std::size_t c = 0; c < n; ++c) stacked(r, c) = products[r][c];
        const RrefResult rr = rref(stacked);
        std::vector<std::vector<Rational>> next;
        for (std::size_t r = 0; r < rr.rank; ++r) {
            std::vector<Rational> row(n);
            for (std::size_t c = 0; c < n; ++c) row[c] = rr.rref(r, c);
            next.push_back(std::move(row));
        }
        const std::size_t d = next.size();
        report.dims.push_back(d);
        if (d == 0) {
            report.nilpotent = true;
            report.nil_index = report.dims.size();
            return report;
        }
        if (d == report.dims[report.dims.size() - 2]) return report;  // stabilized
        current = std::move(next);
    }
}

}  // namespace leibniz
