#pragma once

#include <vector>

#include <string>

#include "birmax/bundles.hpp"
#include "birmax/group_tag.hpp"

namespace birmax {

enum class CaseTag {
    // rank 3
    TrivialProduct,
    A30,
    A31,
    A32,
    E20plusM,
    E21plusM,
    OplusOplusM,
    OplusLplusM,
    StablePlusLine,
    // rank 2: ruled surfaces
    RuledTrivial,
    RuledA20,
    RuledA21,
    RuledDecomposable,
    Nonstandard,
};

std::string to_string(CaseTag t);

/// A projective bundle P(E), stored through a canonical representative E.
struct ProjBundle {
    VBundle rep;
    CaseTag tag;

    const CurvePtr& ctx() const { return rep.ctx(); }
    int rank() const { return rep.rank(); }
    std::string to_string() const;
};

/// Canonical representative of P(E): a fixed twist of E chosen so that
/// twist-equivalent bundles give identical output.
ProjBundle canonicalize(const VBundle& e);

/// Line classes of a line-sum representative with one trivial summand
/// removed, in representative order.  For OplusLplusM these are L and M.
std::vector<PicElement> line_classes_beyond_trivial(const ProjBundle& x);

/// Whether P(X) and P(Y) are isomorphic over the curve, decided by searching
/// for a line class N with X (x) N = Y.  Ranks must agree.
bool proj_iso(const VBundle& x, const VBundle& y);
bool proj_iso(const ProjBundle& x, const ProjBundle& y);

/// P(E^dual), canonicalized.
ProjBundle proj_dual(const ProjBundle& x);

bool is_semi_homogeneous(const ProjBundle& x);

/// Group of line classes N with E (x) N = E.  Elliptic curves only.
GroupTag omega_group(const ProjBundle& x);

}  // namespace birmax
