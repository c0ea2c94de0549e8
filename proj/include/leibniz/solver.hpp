#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "leibniz/algebra.hpp"
#include "leibniz/catalog.hpp"
#include "leibniz/matrix.hpp"
#include "leibniz/rational.hpp"

namespace leibniz {

enum class SpaceKind { der, antider, bider };

inline std::string to_string(SpaceKind k) {
    switch (k) {
        case SpaceKind::der: return "der";
        case SpaceKind::antider: return "antider";
        case SpaceKind::bider: return "bider";
    }
    return "?";
}

/// Name of one matrix unknown: d_{rc} or D_{rc}, 1-based.
struct ParamLabel {
    bool anti = false;  // D-component unknown
    std::size_t row = 1, col = 1;
    std::size_t n = 4;

    std::string text() const {
        std::string s(1, anti ? 'D' : 'd');
        s += std::to_string(row);
        if (n > 9) s += '_';
        s += std::to_string(col);
        return s;
    }
    std::string latex() const {
        std::string s(1, anti ? 'D' : 'd');
        s += "_{" + std::to_string(row);
        if (n > 9) s += ",";
        s += std::to_string(col) + "}";
        return s;
    }
    friend bool operator==(const ParamLabel& a, const ParamLabel& b) {
        return a.anti == b.anti && a.row == b.row && a.col == b.col;
    }
};

inline ParamLabel label_for_column(std::size_t column, std::size_t n) {
    ParamLabel l;
    l.anti = column >= n * n;
    const std::size_t flat = column % (n * n);
    l.row = flat / n + 1;
    l.col = flat % n + 1;
    l.n = n;
    return l;
}

/// Homogeneous system whose nullspace is the requested space. Unknowns are
/// d_{11}..d_{nn} row-major (plus D_{11}..D_{nn} for biderivations); one
/// equation per (i, j, t) in lexicographic order.
struct LinearSystem {
    SpaceKind kind = SpaceKind::der;
    std::size_t n = 0;
    RatMatrix matrix;
    std::vector<ParamLabel> unknown_labels;
};

namespace detail {

inline std::vector<ParamLabel> make_labels(std::size_t n, bool with_anti) {
    std::vector<ParamLabel> labels;
    const std::size_t total = with_anti ? 2 * n * n : n * n;
    for (std::size_t c = 0; c < total; ++c) labels.push_back(label_for_column(c, n));
    return labels;
}

// Row block of the derivation rule d([[e_i,e_j]]) = [[d(e_i),e_j]] + [[e_i,d(e_j)]]:
//   sum_k gamma^k_ij d_{tk} - sum_k (d_{ki} gamma^t_kj + d_{kj} gamma^t_ik) = 0.
inline void der_row(const Algebra& a, std::size_t i, std::size_t j, std::size_t t,
                    RatMatrix& m, std::size_t r, std::size_t col_offset) {
    const std::size_t n = a.dim();
    for (std::size_t k = 0; k < n; ++k) {
        m(r, col_offset + t * n + k) += a.gamma(i, j, k);
        m(r, col_offset + k * n + i) -= a.gamma(k, j, t);
        m(r, col_offset + k * n + j) -= a.gamma(i, k, t);
    }
}

// Row block of the antiderivation rule D([[e_i,e_j]]) = [[e_i,D(e_j)]] - [[e_j,D(e_i)]]:
//   sum_k gamma^k_ij D_{tk} - sum_k (D_{kj} gamma^t_ik - D_{ki} gamma^t_jk) = 0.
inline void antider_row(const Algebra& a, std::size_t i, std::size_t j, std::size_t t,
                        RatMatrix& m, std::size_t r, std::size_t col_offset) {
    const std::size_t n = a.dim();
    for (std::size_t k = 0; k < n; ++k) {
        m(r, col_offset + t * n + k) += a.gamma(i, j, k);
        m(r, col_offset + k * n + j) -= a.gamma(i, k, t);
        m(r, col_offset + k * n + i) += a.gamma(j, k, t);
    }
}

}  // namespace detail

inline LinearSystem build_der_system(const Algebra& a) {
    const std::size_t n = a.dim();
    LinearSystem sys{SpaceKind::der, n, RatMatrix(n * n * n, n * n), detail::make_labels(n, false)};
    std::size_t r = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t t = 0; t < n; ++t) detail::der_row(a, i, j, t, sys.matrix, r++, 0);
    return sys;
}

inline LinearSystem build_antider_system(const Algebra& a) {
    const std::size_t n = a.dim();
    LinearSystem sys{SpaceKind::antider, n, RatMatrix(n * n * n, n * n),
                     detail::make_labels(n, false)};
    for (auto& l : sys.unknown_labels) l.anti = true;
    std::size_t r = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t t = 0; t < n; ++t) detail::antider_row(a, i, j, t, sys.matrix, r++, 0);
    return sys;
}

/// Stacks the derivation block (d-unknowns), the antiderivation block
/// (D-unknowns) and the coupling [[d(e_i),e_j]] = [[D(e_i),e_j]], i.e.
/// sum_k (d_{ki} - D_{ki}) gamma^t_kj = 0.
inline LinearSystem build_bider_system(const Algebra& a) {
    const std::size_t n = a.dim();
    const std::size_t nn = n * n;
    LinearSystem sys{SpaceKind::bider, n, RatMatrix(3 * n * n * n, 2 * nn),
                     detail::make_labels(n, true)};
    std::size_t r = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t t = 0; t < n; ++t) detail::der_row(a, i, j, t, sys.matrix, r++, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t t = 0; t < n; ++t) detail::antider_row(a, i, j, t, sys.matrix, r++, nn);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t t = 0; t < n; ++t) {
                for (std::size_t k = 0; k < n; ++k) {
                    sys.matrix(r, k * n + i) += a.gamma(k, j, t);
                    sys.matrix(r, nn + k * n + i) -= a.gamma(k, j, t);
                }
                ++r;
            }
    return sys;
}

inline LinearSystem build_system(const Algebra& a, SpaceKind kind) {
    switch (kind) {
        case SpaceKind::der: return build_der_system(a);
        case SpaceKind::antider: return build_antider_system(a);
        case SpaceKind::bider: return build_bider_system(a);
    }
    throw std::logic_error("build_system: bad kind");
}

/// Basis of Der/AntiDer/BiDer, one matrix (pair) per free parameter.
/// raw_basis keeps the flat coordinate vectors in unknown order.
struct SolutionSpace {
    SpaceKind kind = SpaceKind::der;
    std::size_t n = 0;
    std::size_t dim = 0;
    std::vector<RatMatrix> d_basis;
    std::vector<RatMatrix> D_basis;  // populated only for bider
    std::vector<ParamLabel> free_labels;
    std::vector<std::vector<Rational>> raw_basis;
};

namespace detail {

inline RatMatrix reshape(const std::vector<Rational>& flat, std::size_t n,
                         std::size_t offset) {
    RatMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m(r, c) = flat[offset + r * n + c];
    return m;
}

}  // namespace detail

/// Solves the system. The elimination runs with reversed column preference so
/// that the earliest unknown of each dependency chain becomes the free
/// parameter; this reproduces the published tables' parameter labels (e.g.
/// d11, d21, d31, d41 for Der of L1). The forward elimination is kept as an
/// independent cross-check, see oracle_dimension().
inline SolutionSpace solve_space(const LinearSystem& sys) {
    SolutionSpace sp;
    sp.kind = sys.kind;
    sp.n = sys.n;
    sp.raw_basis = nullspace_reversed(sys.matrix);
    sp.dim = sp.raw_basis.size();
    const std::size_t nn = sys.n * sys.n;
    for (const auto& v : sp.raw_basis) {
        // the designated free column holds the vector's 1
        std::size_t fc = 0;
        for (std::size_t c = 0; c < v.size(); ++c) {
            if (!v[c].is_zero()) { fc = c; break; }
        }
        sp.free_labels.push_back(sys.unknown_labels[fc]);
        sp.d_basis.push_back(detail::reshape(v, sys.n, 0));
        if (sys.kind == SpaceKind::bider) sp.D_basis.push_back(detail::reshape(v, sys.n, nn));
    }
    return sp;
}

inline SolutionSpace solve_space(const Algebra& a, SpaceKind kind) {
    return solve_space(build_system(a, kind));
}

/// Nullity by the plain forward elimination — the independent path used to
/// cross-check every dimension.
inline std::size_t oracle_dimension(const LinearSystem& sys) {
    return nullspace(sys.matrix).size();
}

/// Matrix entries as exact linear forms sum_i coeff_i * param_i over the
/// solution space's free parameters.
struct LinearForm {
    // (free parameter index, coefficient), sorted by index, no zero coeffs
    std::vector<std::pair<std::size_t, Rational>> terms;

    bool is_zero() const { return terms.empty(); }
};

struct GeneralElement {
    SpaceKind kind = SpaceKind::der;
    std::size_t n = 0;
    std::vector<ParamLabel> params;
    std::vector<LinearForm> d_entries;  // n*n, row-major
    std::vector<LinearForm> D_entries;  // n*n for bider, else empty

    const LinearForm& d_entry(std::size_t r, std::size_t c) const {
        return d_entries[r * n + c];
    }
    const LinearForm& D_entry(std::size_t r, std::size_t c) const {
        return D_entries[r * n + c];
    }
};

inline GeneralElement general_element(const SolutionSpace& sp) {
    GeneralElement ge;
    ge.kind = sp.kind;
    ge.n = sp.n;
    ge.params = sp.free_labels;
    const std::size_t nn = sp.n * sp.n;
    ge.d_entries.resize(nn);
    if (sp.kind == SpaceKind::bider) ge.D_entries.resize(nn);
    for (std::size_t p = 0; p < sp.raw_basis.size(); ++p) {
        const auto& v = sp.raw_basis[p];
        for (std::size_t e = 0; e < nn; ++e)
            if (!v[e].is_zero()) ge.d_entries[e].terms.emplace_back(p, v[e]);
        if (sp.kind == SpaceKind::bider)
            for (std::size_t e = 0; e < nn; ++e)
                if (!v[nn + e].is_zero()) ge.D_entries[e].terms.emplace_back(p, v[nn + e]);
    }
    return ge;
}

/// Exact residual checks straight from the defining identities.
inline bool satisfies_derivation_rule(const Algebra& a, const RatMatrix& d) {
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto ei = a.basis_vector(i);
            const auto ej = a.basis_vector(j);
            const auto lhs = matvec(d, a.bracket(ei, ej));
            const auto r1 = a.bracket(matvec(d, ei), ej);
            const auto r2 = a.bracket(ei, matvec(d, ej));
            for (std::size_t t = 0; t < n; ++t)
                if (lhs[t] != r1[t] + r2[t]) return false;
        }
    return true;
}

inline bool satisfies_antiderivation_rule(const Algebra& a, const RatMatrix& D) {
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto ei = a.basis_vector(i);
            const auto ej = a.basis_vector(j);
            const auto lhs = matvec(D, a.bracket(ei, ej));
            const auto r1 = a.bracket(ei, matvec(D, ej));
            const auto r2 = a.bracket(ej, matvec(D, ei));
            for (std::size_t t = 0; t < n; ++t)
                if (lhs[t] != r1[t] - r2[t]) return false;
        }
    return true;
}

/// Coupling [[d(x), y]] = [[D(x), y]] on all basis pairs.
inline bool satisfies_coupling(const Algebra& a, const RatMatrix& d, const RatMatrix& D) {
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto ei = a.basis_vector(i);
            const auto ej = a.basis_vector(j);
            const auto lhs = a.bracket(matvec(d, ei), ej);
            const auto rhs = a.bracket(matvec(D, ei), ej);
            if (lhs != rhs) return false;
        }
    return true;
}

inline std::vector<Rational> flatten(const RatMatrix& m) {
    return m.entries();
}

inline std::vector<Rational> flatten_pair(const RatMatrix& d, const RatMatrix& D) {
    std::vector<Rational> v = d.entries();
    const auto& e = D.entries();
    v.insert(v.end(), e.begin(), e.end());
    return v;
}

struct ClosureReport {
    bool closed = true;
    std::optional<std::pair<std::size_t, std::size_t>> witness;  // first failing pair
};

/// Der(L) under the commutator: checks d1 d2 - d2 d1 in span for all pairs.
inline ClosureReport check_der_closure(const SolutionSpace& sp, const Algebra& a) {
    if (sp.kind != SpaceKind::der)
        throw std::invalid_argument("check_der_closure: expected a derivation space");
    if (a.dim() != sp.n)
        throw std::invalid_argument("check_der_closure: algebra/space dimension mismatch");
    ClosureReport report;
    for (std::size_t i = 0; i < sp.dim; ++i)
        for (std::size_t j = 0; j < sp.dim; ++j) {
            const RatMatrix comm = sp.d_basis[i] * sp.d_basis[j] - sp.d_basis[j] * sp.d_basis[i];
            if (!in_span(sp.raw_basis, flatten(comm))) {
                report.closed = false;
                report.witness = {i, j};
                return report;
            }
        }
    return report;
}

/// BiDer(L) under [[ (d,D), (d',D') ]] = (d d' - d' d, D d' - d' D).
inline ClosureReport check_bider_closure(const SolutionSpace& sp, const Algebra& a) {
    if (sp.kind != SpaceKind::bider)
        throw std::invalid_argument("check_bider_closure: expected a biderivation space");
    if (a.dim() != sp.n)
        throw std::invalid_argument("check_bider_closure: algebra/space dimension mismatch");
    ClosureReport report;
    for (std::size_t i = 0; i < sp.dim; ++i)
        for (std::size_t j = 0; j < sp.dim; ++j) {
            const RatMatrix dpart =
                sp.d_basis[i] * sp.d_basis[j] - sp.d_basis[j] * sp.d_basis[i];
            const RatMatrix Dpart =
                sp.D_basis[i] * sp.d_basis[j] - sp.d_basis[j] * sp.D_basis[i];
            if (!in_span(sp.raw_basis, flatten_pair(dpart, Dpart))) {
                report.closed = false;
                report.witness = {i, j};
                return report;
            }
        }
    return report;
}

struct GenericDimension {
    std::size_t generic = 0;  // min over samples; specialization only enlarges
    std::vector<std::pair<Rational, std::size_t>> per_sample;
};

/// Generic nullity of a parameterized family, realized by specialization at
/// the given admissible samples.
inline GenericDimension generic_dimension(const std::string& id, SpaceKind kind,
                                          const std::vector<Rational>& samples) {
    const auto& e = catalog::entry(id);
    if (!e.parameterized)
        throw std::invalid_argument(id + " is not parameterized");
    if (samples.empty())
        throw std::invalid_argument("generic_dimension: no samples given");
    GenericDimension out;
    out.generic = static_cast<std::size_t>(-1);
    for (const Rational& alpha : samples) {
        catalog::check_constraint(e, alpha);
        const Algebra a = catalog::get(id, alpha);
        const std::size_t d = solve_space(a, kind).dim;
        out.per_sample.emplace_back(alpha, d);
        out.generic = std::min(out.generic, d);
    }
    return out;
}

}  // namespace leibniz
