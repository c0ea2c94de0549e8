#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "leibniz/algebra.hpp"
#include "leibniz/matrix.hpp"
#include "leibniz/solver.hpp"

namespace leibniz {

enum class Side { left, right };

/// Multiplication operator by a fixed element x.
///   right: column j = coordinates of [[e_j, x]]   (v -> [[v, x]])
///   left:  column j = coordinates of [[x, e_j]]   (v -> [[x, v]])
struct MultOperator {
    Side side = Side::right;
    std::vector<Rational> x;
    RatMatrix matrix;
};

inline MultOperator mult_operator(const Algebra& a, Side side, std::vector<Rational> x) {
    if (x.size() != a.dim())
        throw std::invalid_argument("mult_operator: |x| != dim");
    const std::size_t n = a.dim();
    MultOperator op{side, std::move(x), RatMatrix(n, n)};
    for (std::size_t j = 0; j < n; ++j) {
        const auto ej = a.basis_vector(j);
        const auto col = side == Side::right ? a.bracket(ej, op.x) : a.bracket(op.x, ej);
        for (std::size_t t = 0; t < n; ++t) op.matrix(t, j) = col[t];
    }
    return op;
}

/// Span of the right multiplications R_{e_1}..R_{e_n}. In a right Leibniz
/// algebra every R_x is a derivation; containment in Der is verified by
/// membership solves, not assumed.
struct InnerDerivationSpace {
    std::vector<RatMatrix> generators;               // R_{e_i}
    std::vector<std::vector<Rational>> basis;        // echelon basis of the span
    std::size_t dim = 0;
    bool contained_in_der = true;
    std::optional<std::size_t> violation;  // index of a generator outside Der
};

inline InnerDerivationSpace inner_derivation_space(const Algebra& a) {
    const std::size_t n = a.dim();
    InnerDerivationSpace sp;
    std::vector<std::vector<Rational>> rows;
    for (std::size_t i = 0; i < n; ++i) {
        sp.generators.push_back(mult_operator(a, Side::right, a.basis_vector(i)).matrix);
        rows.push_back(flatten(sp.generators.back()));
    }
    RatMatrix stacked(n, n * n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n * n; ++c) stacked(r, c) = rows[r][c];
    const RrefResult rr = rref(stacked);
    for (std::size_t r = 0; r < rr.rank; ++r) {
        std::vector<Rational> row(n * n);
        for (std::size_t c = 0; c < n * n; ++c) row[c] = rr.rref(r, c);
        sp.basis.push_back(std::move(row));
    }
    sp.dim = sp.basis.size();
    const SolutionSpace der = solve_space(a, SpaceKind::der);
    for (std::size_t i = 0; i < n; ++i) {
        if (!in_span(der.raw_basis, rows[i])) {
            sp.contained_in_der = false;
            sp.violation = i;
            break;
        }
    }
    return sp;
}

/// The published inner-biderivation map x -> (-ad_x, Ad_x) leaves ad/Ad
/// undefined, so candidate pairs are generated under explicit conventions
/// and their membership in BiDer is measured, never asserted.
enum class PairConvention {
    c1,  // (-R_x, L_x), default
    c2,  // (+R_x, L_x)
    c3,  // (-L_x, R_x)
    c4   // (+L_x, R_x)
};

inline std::string to_string(PairConvention c) {
    switch (c) {
        case PairConvention::c1: return "c1 (-right, left)";
        case PairConvention::c2: return "c2 (+right, left)";
        case PairConvention::c3: return "c3 (-left, right)";
        case PairConvention::c4: return "c4 (+left, right)";
    }
    return "?";
}

inline PairConvention parse_convention(const std::string& s) {
    if (s == "c1") return PairConvention::c1;
    if (s == "c2") return PairConvention::c2;
    if (s == "c3") return PairConvention::c3;
    if (s == "c4") return PairConvention::c4;
    throw std::invalid_argument("unknown convention '" + s + "' (expected c1..c4)");
}

struct InnerPairVerdict {
    std::size_t basis_index = 0;  // x = e_{basis_index+1}
    RatMatrix d;
    RatMatrix D;
    bool d_in_der = false;
    bool D_in_antider = false;
    bool coupling_ok = false;
    bool in_bider = false;  // membership in the computed BiDer space
};

struct InnerPairReport {
    PairConvention convention = PairConvention::c1;
    std::vector<InnerPairVerdict> pairs;
};

inline InnerPairReport inner_bider_pairs(const Algebra& a,
                                         PairConvention convention = PairConvention::c1) {
    const std::size_t n = a.dim();
    InnerPairReport report;
    report.convention = convention;
    const SolutionSpace der = solve_space(a, SpaceKind::der);
    const SolutionSpace antider = solve_space(a, SpaceKind::antider);
    const SolutionSpace bider = solve_space(a, SpaceKind::bider);
    for (std::size_t i = 0; i < n; ++i) {
        const RatMatrix right = mult_operator(a, Side::right, a.basis_vector(i)).matrix;
        const RatMatrix left = mult_operator(a, Side::left, a.basis_vector(i)).matrix;
        InnerPairVerdict v;
        v.basis_index = i;
        switch (convention) {
            case PairConvention::c1: v.d = right * Rational(-1); v.D = left; break;
            case PairConvention::c2: v.d = right; v.D = left; break;
            case PairConvention::c3: v.d = left * Rational(-1); v.D = right; break;
            case PairConvention::c4: v.d = left; v.D = right; break;
        }
        v.d_in_der = in_span(der.raw_basis, flatten(v.d));
        v.D_in_antider = in_span(antider.raw_basis, flatten(v.D));
        v.coupling_ok = satisfies_coupling(a, v.d, v.D);
        v.in_bider = in_span(bider.raw_basis, flatten_pair(v.d, v.D));
        report.pairs.push_back(std::move(v));
    }
    return report;
}

}  // namespace leibniz
