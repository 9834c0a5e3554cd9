#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "birmax/classify.hpp"

namespace birmax {

/// A ruled surface over the curve.
struct RuledBase {
    enum class Kind { TrivialCxP1, A20, A21, Dec };
    Kind kind = Kind::TrivialCxP1;
    std::optional<PicElement> line;  // L for P(O + L); set iff kind == Dec

    static RuledBase trivial() { return {Kind::TrivialCxP1, std::nullopt}; }
    static RuledBase a20() { return {Kind::A20, std::nullopt}; }
    static RuledBase a21() { return {Kind::A21, std::nullopt}; }
    static RuledBase dec(PicElement l) { return {Kind::Dec, std::move(l)}; }

    std::string to_string() const;
    bool operator==(const RuledBase& o) const;
};

/// Decomposable P^1-bundle P(O_S + O_S(b sigma) (x) tau^*(D)) over a ruled
/// surface S, or the family member A_(S, b, D) with D = n * M.
struct P1OverRuled {
    RuledBase base;
    std::int64_t b = 0;
    PicElement inv;
    std::optional<std::int64_t> family_n;  // set for the A-family

    bool operator==(const P1OverRuled& o) const;
};

struct FibreProduct {
    RuledBase left;
    RuledBase right;

    bool operator==(const FibreProduct&) const = default;
};

/// Mori Del Pezzo fibration of degree d other than a P^2-bundle, recorded by
/// a structural description only.
struct DelPezzoFibration {
    int degree = 0;
    std::string structure;

    bool operator==(const DelPezzoFibration& o) const { return degree == o.degree; }
};

struct P2Bundle {
    ProjBundle bundle;

    bool operator==(const P2Bundle& o) const { return proj_iso(bundle, o.bundle); }
};

using MfsDescriptor = std::variant<P2Bundle, P1OverRuled, FibreProduct, DelPezzoFibration>;

/// One-line text form; the descriptor grammar parses it back.
std::string to_string(const MfsDescriptor& d);
std::string kind_name(const MfsDescriptor& d);

using IntMatrix2 = std::array<std::array<std::int64_t, 2>, 2>;

/// All integer matrices with entries in [-bound, bound] and determinant 1,
/// in lexicographic order.
std::vector<IntMatrix2> sl2_enumerate(int bound);

std::pair<MfsDescriptor, MfsDescriptor> conjugates_OLM(const PicElement& l, const PicElement& m,
                                                       const IntMatrix2& mat, std::int64_t b);
std::vector<MfsDescriptor> conjugates_OOM(const PicElement& m);
std::vector<MfsDescriptor> conjugates_E20M(const PicElement& m, std::int64_t b_lo,
                                           std::int64_t b_hi);

struct ConjugateSearch {
    int sl2_bound = 2;
    std::int64_t b_lo = -2;
    std::int64_t b_hi = 2;
};

/// Every Mori fibre space whose automorphism group is conjugate to Aut°(X),
/// for a P^2-bundle X whose report is not No.  P^2-bundle members are
/// deduplicated up to isomorphism.
std::vector<MfsDescriptor> conjugates(const ProjBundle& x, const ConjugateSearch& search = {});

/// Throws ContractError when the report says the group is not maximal.
Verdict is_superrigid(const AutReport& report);

/// A checkable reason for a catalog entry to be present.
struct Witness {
    enum class Kind {
        Always,
        NontrivialDegreeZero,  // line
        NotTwoTorsion,         // line
        InfiniteOrder,         // line
        NoCoprimeRelation,     // line, other
        DegreeZeroAndBAtLeast2,  // line, b
        Nontrivial2Divisor,    // line = D, other = D0
        SlopesMatch,           // line = det, other = M
    };
    Kind kind = Kind::Always;
    std::optional<PicElement> line;
    std::optional<PicElement> other;
    std::int64_t b = 0;

    bool holds() const;
    std::string to_string() const;
};

struct CatalogEntry {
    MfsDescriptor descriptor;
    Witness witness;
    std::string family;
};

struct CatalogParams {
    /// Degree-zero classes tried for L, M, D; defaults to small combinations
    /// of the declared generators.
    std::vector<PicElement> pic0_classes;
    /// Classes D tried in the 2-divisor family; defaults to degrees 0..2 over
    /// pic0_classes.
    std::vector<PicElement> divisor_classes;
    std::int64_t b_lo = -2;
    std::int64_t b_hi = 2;
    /// Degree-2 class for the 2-divisor test; defaults to 2 * p0.
    std::optional<PicElement> d0;
    /// Positive degrees tried for the stable rank-2 family in genus >= 2.
    std::vector<std::int64_t> stable_degrees{2, 4};
};

struct Catalog {
    std::vector<CatalogEntry> entries;
    std::vector<std::string> notes;
};

std::vector<PicElement> default_pic0_classes(const CurvePtr& ctx);
Catalog maximal_catalog(const CurvePtr& ctx, const CatalogParams& params = {});

}  // namespace birmax
