#pragma once

#include <string>
#include <vector>

#include "birmax/group_tag.hpp"
#include "birmax/projbundles.hpp"

namespace birmax {

enum class Verdict { Yes, No, Undetermined, NotApplicable };
enum class BaseAction { Trivial, Transitive, NotApplicable };

std::string to_string(Verdict v);
std::string to_string(BaseAction b);

/// Verdict on whether Aut°(X) is a maximal connected algebraic subgroup of
/// Bir(X) for a P^2-bundle X over a curve.
struct AutReport {
    Verdict maximal = Verdict::No;
    GroupTag vertical;  // Aut°(X)_C, the automorphisms acting trivially on the base
    BaseAction base_action = BaseAction::Trivial;
    std::string ses;
    Verdict superrigid = Verdict::NotApplicable;
    CaseTag case_tag = CaseTag::Nonstandard;
    int genus = 1;
    std::vector<std::string> citations;

    bool operator==(const AutReport&) const = default;
};

struct DegreeReport {
    int degree = 0;
    bool occurs = true;
    GroupTag aut_if_maximal;
    /// Set for d = 9, where the answer depends on the P^2-bundle.
    bool delegated_to_p2_bundle = false;
    std::string structure;
    bool birational_to_trivial = false;
    std::string equivariant_targets;
    std::vector<std::string> citations;
};

/// Throws ContractError unless X has rank 3.
AutReport classify_p2_bundle(const ProjBundle& x);
inline AutReport classify_p2_bundle(const VBundle& e) { return classify_p2_bundle(canonicalize(e)); }

/// Throws ContractError unless 1 <= d <= 9.
DegreeReport classify_mdp_degree(const CurveCtx& ctx, int d);

/// Automorphisms of X acting trivially on the base, for the semi-homogeneous
/// P^2-bundles over an elliptic curve.  Throws ContractError otherwise.
GroupTag vertical_group(const ProjBundle& x);

/// Sum of hom_dim over all ordered pairs of summands, minus one.
int hom_dimension_count(const VBundle& e);

}  // namespace birmax
