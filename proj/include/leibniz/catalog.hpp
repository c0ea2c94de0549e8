#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "leibniz/algebra.hpp"
#include "leibniz/rational.hpp"

namespace leibniz {
namespace catalog {

enum class ParamConstraint {
    none,                 // not parameterized
    zero_or_one,          // alpha in {0, 1}
    any_rational,         // alpha in Q (rational samples of "alpha in C")
    any_rational_not_one  // alpha in Q \ {1}
};

struct CatalogEntry {
    std::string id;
    bool parameterized = false;
    ParamConstraint constraint = ParamConstraint::none;
};

inline std::string to_string(ParamConstraint c) {
    switch (c) {
        case ParamConstraint::none: return "none";
        case ParamConstraint::zero_or_one: return "{0,1}";
        case ParamConstraint::any_rational: return "rational";
        case ParamConstraint::any_rational_not_one: return "rational, != 1";
    }
    return "?";
}

inline const std::vector<CatalogEntry>& list() {
    static const std::vector<CatalogEntry> entries = [] {
        std::vector<CatalogEntry> v;
        for (int i = 1; i <= 21; ++i) v.push_back({"L" + std::to_string(i), false, ParamConstraint::none});
        v[3] = {"L4", true, ParamConstraint::zero_or_one};
        v[12] = {"L13", true, ParamConstraint::any_rational};
        v[13] = {"L14", true, ParamConstraint::any_rational};
        v[19] = {"L20", true, ParamConstraint::any_rational_not_one};
        return v;
    }();
    return entries;
}

inline const CatalogEntry& entry(const std::string& id) {
    for (const auto& e : list())
        if (e.id == id) return e;
    throw std::invalid_argument("unknown catalog id '" + id + "' (expected L1..L21)");
}

inline void check_constraint(const CatalogEntry& e, const Rational& alpha) {
    switch (e.constraint) {
        case ParamConstraint::none:
            return;
        case ParamConstraint::zero_or_one:
            if (alpha != Rational(0) && alpha != Rational(1))
                throw std::domain_error(e.id + ": alpha must lie in {0, 1}");
            return;
        case ParamConstraint::any_rational:
            return;
        case ParamConstraint::any_rational_not_one:
            if (alpha == Rational(1))
                throw std::domain_error(e.id + ": alpha = 1 is excluded");
            return;
    }
}

/// The 21 four-dimensional nilpotent complex Leibniz algebras, by their
/// structure constants. Parameterized families (L4, L13, L14, L20) require
/// an admissible alpha; all other ids reject one.
inline Algebra get(const std::string& id, std::optional<Rational> alpha = std::nullopt) {
    const CatalogEntry& e = entry(id);
    if (e.parameterized && !alpha)
        throw std::invalid_argument(id + " is parameterized: an alpha value is required");
    if (!e.parameterized && alpha)
        throw std::invalid_argument(id + " is not parameterized: no alpha accepted");
    if (alpha) check_constraint(e, *alpha);

    std::string name = id;
    if (alpha) name += "(" + alpha->str() + ")";
    Algebra a(name, 4);
    auto set = [&a](int i, int j, int k, Rational c) { a.gamma(i - 1, j - 1, k - 1) = c; };
    const Rational one(1);

    if (id == "L1") {
        set(1, 1, 2, one); set(2, 1, 3, one); set(3, 1, 4, one);
    } else if (id == "L2") {
        set(1, 1, 3, one); set(1, 2, 4, one); set(2, 1, 3, one); set(3, 1, 4, one);
    } else if (id == "L3") {
        set(1, 1, 3, one); set(2, 1, 3, one); set(3, 1, 4, one);
    } else if (id == "L4") {
        set(1, 1, 3, one); set(1, 2, 4, *alpha); set(2, 1, 3, one);
        set(2, 2, 4, one); set(3, 1, 4, one);
    } else if (id == "L5") {
        set(1, 1, 3, one); set(1, 2, 4, one); set(3, 1, 4, one);
    } else if (id == "L6") {
        set(1, 1, 3, one); set(2, 2, 4, one); set(3, 1, 4, one);
    } else if (id == "L7") {
        set(1, 1, 4, one); set(1, 2, 3, -one); set(1, 3, 4, -one);
        set(2, 1, 3, one); set(3, 1, 4, one);
    } else if (id == "L8") {
        set(1, 1, 4, one); set(1, 2, 3, -one); set(1, 2, 4, one);
        set(1, 3, 4, -one); set(2, 1, 3, one); set(3, 1, 4, one);
    } else if (id == "L9") {
        set(1, 1, 4, one); set(1, 2, 3, -one); set(1, 2, 4, Rational(2));
        set(1, 3, 4, -one); set(2, 1, 3, one); set(2, 2, 4, one); set(3, 1, 4, one);
    } else if (id == "L10") {
        set(1, 1, 4, one); set(1, 2, 3, -one); set(1, 3, 4, -one);
        set(2, 1, 3, one); set(2, 2, 4, one); set(3, 1, 4, one);
    } else if (id == "L11") {
        set(1, 1, 4, one); set(1, 2, 3, one); set(2, 1, 3, -one);
        set(2, 2, 3, Rational(-2)); set(2, 2, 4, one);
    } else if (id == "L12") {
        set(1, 2, 3, one); set(2, 1, 4, one); set(2, 2, 3, -one);
    } else if (id == "L13") {
        set(1, 1, 3, one); set(1, 2, 4, one); set(2, 1, 3, -*alpha); set(2, 2, 4, -one);
    } else if (id == "L14") {
        set(1, 1, 4, one); set(1, 2, 4, *alpha); set(2, 1, 4, -*alpha);
        set(2, 2, 4, one); set(3, 3, 4, one);
    } else if (id == "L15") {
        set(1, 2, 4, one); set(1, 3, 4, one); set(2, 1, 4, -one);
        set(2, 2, 4, one); set(3, 1, 4, one);
    } else if (id == "L16") {
        set(1, 1, 4, one); set(1, 2, 4, one); set(2, 1, 4, -one); set(3, 3, 4, one);
    } else if (id == "L17") {
        set(1, 2, 3, one); set(2, 1, 4, one);
    } else if (id == "L18") {
        set(1, 2, 3, one); set(2, 1, 3, -one); set(2, 2, 4, one);
    } else if (id == "L19") {
        set(2, 1, 4, one); set(2, 2, 3, one);
    } else if (id == "L20") {
        // [[e2,e1]] carries (1+alpha)/(1-alpha).
        set(1, 2, 4, one);
        set(2, 1, 4, (one + *alpha) / (one - *alpha));
        set(2, 2, 3, one);
    } else if (id == "L21") {
        set(1, 2, 4, one); set(2, 1, 4, -one); set(3, 3, 4, one);
    }
    return a;
}

/// Parses "catalog:L7" or "catalog:L20(2/3)"; returns nullopt when the text
/// is not a catalog reference at all.
struct CatalogRef {
    std::string id;
    std::optional<Rational> alpha;
};

inline std::optional<CatalogRef> parse_ref(std::string_view text) {
    constexpr std::string_view prefix = "catalog:";
    if (text.substr(0, prefix.size()) != prefix) return std::nullopt;
    std::string_view rest = text.substr(prefix.size());
    CatalogRef ref;
    if (auto open = rest.find('('); open != std::string_view::npos) {
        if (rest.empty() || rest.back() != ')')
            throw std::invalid_argument("catalog reference: expected ')' in '" + std::string(text) + "'");
        ref.id = std::string(rest.substr(0, open));
        ref.alpha = Rational::parse(rest.substr(open + 1, rest.size() - open - 2));
    } else {
        ref.id = std::string(rest);
    }
    return ref;
}

inline Algebra resolve_ref(const CatalogRef& ref) { return get(ref.id, ref.alpha); }

}  // namespace catalog
}  // namespace leibniz
