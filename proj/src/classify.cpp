#include "birmax/classify.hpp"

namespace birmax {

int GroupTag::dim() const {
    switch (kind) {
        case Kind::Trivial:
        case Kind::FiniteZ3:
        case Kind::FiniteZ3Sq:
        case Kind::FiniteZ2r: return 0;
        case Kind::Gm:
        case Kind::TorusDim: return param;
        case Kind::GL2: return 4;
        case Kind::PGL2: return 3;
        case Kind::PGL3: return 8;
        case Kind::GmSemidirectGa: return 2;
        case Kind::EllipticCurve: return 1;
        case Kind::Unknown: return -1;
    }
    return -1;
}

std::optional<int> GroupTag::finite_order() const {
    switch (kind) {
        case Kind::Trivial: return 1;
        case Kind::FiniteZ3: return 3;
        case Kind::FiniteZ3Sq: return 9;
        case Kind::FiniteZ2r: return 1 << param;
        default: return std::nullopt;
    }
}

std::string GroupTag::to_string() const {
    switch (kind) {
        case Kind::Trivial: return "trivial";
        case Kind::FiniteZ3: return "Z3";
        case Kind::FiniteZ3Sq: return "Z3xZ3";
        case Kind::FiniteZ2r: return param == 0 ? "trivial" : param == 1 ? "Z2" : "Z2xZ2";
        case Kind::Gm: return param == 1 ? "Gm" : "Gm^" + std::to_string(param);
        case Kind::GL2: return "GL2";
        case Kind::PGL2: return "PGL2";
        case Kind::PGL3: return "PGL3";
        case Kind::GmSemidirectGa: return "Gm:Ga";
        case Kind::EllipticCurve: return "elliptic_curve";
        case Kind::TorusDim: return "torus^" + std::to_string(param);
        case Kind::Unknown: return "unknown";
    }
    return "unknown";
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Yes: return "yes";
        case Verdict::No: return "no";
        case Verdict::Undetermined: return "undetermined";
        case Verdict::NotApplicable: return "not_applicable";
    }
    return "?";
}

std::string to_string(BaseAction b) {
    switch (b) {
        case BaseAction::Trivial: return "trivial";
        case BaseAction::Transitive: return "transitive";
        case BaseAction::NotApplicable: return "not_applicable";
    }
    return "?";
}

namespace {

const PicElement& line_at(const ProjBundle& x, std::size_t i) {
    return x.rep.summands().at(i).as_line()->cls;
}

bool all_degree_zero(const ProjBundle& x) {
    for (const auto& a : x.rep.summands())
        if (a.degree() != 0) return false;
    return true;
}

bool vertical_covered(const ProjBundle& x) {
    if (x.ctx()->genus() != 1 || x.rank() != 3) return false;
    switch (x.tag) {
        case CaseTag::A31:
        case CaseTag::A32:
            return true;
        case CaseTag::TrivialProduct:
        case CaseTag::OplusOplusM:
        case CaseTag::OplusLplusM:
            return all_degree_zero(x);
        case CaseTag::E20plusM:
            return all_degree_zero(x) && !line_at(x, 1).is_zero();
        default:
            return false;
    }
}

std::string extension_text(const GroupTag& kernel) {
    return "1 -> " + kernel.to_string() + " -> Aut0(X) -> Aut0(C) -> 1";
}

AutReport classify_elliptic(const ProjBundle& x) {
    AutReport r;
    r.case_tag = x.tag;
    r.genus = 1;
    r.vertical = vertical_covered(x) ? vertical_group(x) : GroupTag::unknown();

    if (!is_semi_homogeneous(x)) {
        r.maximal = Verdict::No;
        r.base_action = BaseAction::Trivial;
        r.ses = "Aut0(X) = Aut0(X)_C";
        r.citations = {"p2-bundle/base-action-trivial-not-maximal"};
        return r;
    }

    r.base_action = BaseAction::Transitive;
    r.ses = extension_text(r.vertical);
    auto yes = [&](Verdict superrigid, std::string rule) {
        r.maximal = Verdict::Yes;
        r.superrigid = superrigid;
        r.citations = {"p2-bundle/elliptic-maximal-list", std::move(rule)};
        return r;
    };
    auto no = [&](std::string rule) {
        r.maximal = Verdict::No;
        r.citations = {std::move(rule)};
        return r;
    };

    switch (x.tag) {
        case CaseTag::A31:
        case CaseTag::A32:
            return yes(Verdict::Yes, "p2-bundle/stable-atiyah");
        case CaseTag::A30:
            return no("p2-bundle/unipotent-atiyah-not-maximal");
        case CaseTag::E20plusM: {
            const auto& m = line_at(x, 1);
            if (m.is_zero()) return no("p2-bundle/e20-plus-trivial-not-maximal");
            if (element_order(m)) return no("p2-bundle/e20-plus-torsion-not-maximal");
            return yes(Verdict::No, "p2-bundle/e20-plus-infinite-order");
        }
        case CaseTag::TrivialProduct:
            return yes(Verdict::Yes, "p2-bundle/trivial-product");
        case CaseTag::OplusOplusM:
            return yes(Verdict::No, "p2-bundle/two-trivial-summands");
        case CaseTag::OplusLplusM: {
            auto lm = line_classes_beyond_trivial(x);
            if (auto rel = coprime_relation(lm[0], lm[1])) {
                return no("p2-bundle/coprime-relation(" + std::to_string(rel->first) + "," +
                          std::to_string(rel->second) + ")-not-maximal");
            }
            return yes(Verdict::No, "p2-bundle/no-coprime-relation");
        }
        default:
            return no("p2-bundle/not-in-elliptic-maximal-list");
    }
}

AutReport classify_higher_genus(const ProjBundle& x) {
    AutReport r;
    r.case_tag = x.tag;
    r.genus = x.ctx()->genus();
    r.base_action = BaseAction::Trivial;
    r.vertical = GroupTag::unknown();
    r.ses = "Aut0(X) = Aut0(X)_C";

    if (stability_class(x.rep) == StabilityClass::Unstable) {
        r.maximal = Verdict::No;
        r.citations = {"p2-bundle/unstable-higher-genus-not-maximal"};
        return r;
    }
    if (x.tag == CaseTag::TrivialProduct) {
        r.maximal = Verdict::Yes;
        r.superrigid = Verdict::Yes;
        r.vertical = GroupTag::pgl3();
        r.ses = "Aut0(X) = PGL3";
        r.citations = {"p2-bundle/higher-genus-maximal-list", "p2-bundle/trivial-product"};
        return r;
    }
    if (x.tag == CaseTag::StablePlusLine) {
        const auto& s = x.rep.summands();
        auto det_deg = s[0].as_stable2()->ext_quotient().deg();
        if (det_deg == 2 * s[1].degree() && det_deg > 0) {
            r.maximal = Verdict::Undetermined;
            r.superrigid = Verdict::Undetermined;
            r.citations = {"p2-bundle/higher-genus-maximal-list", "p2-bundle/stable-plus-line-open"};
            return r;
        }
    }
    r.maximal = Verdict::No;
    r.citations = {"p2-bundle/semistable-socle-analysis-not-maximal"};
    return r;
}

}  // namespace

AutReport classify_p2_bundle(const ProjBundle& x) {
    if (x.rank() != 3) throw ContractError("classify_p2_bundle needs a rank-3 bundle");
    return x.ctx()->genus() == 1 ? classify_elliptic(x) : classify_higher_genus(x);
}

int hom_dimension_count(const VBundle& e) {
    int total = 0;
    for (const auto& a : e.summands())
        for (const auto& b : e.summands()) total += static_cast<int>(hom_dim(a, b));
    return total - 1;
}

GroupTag vertical_group(const ProjBundle& x) {
    if (!vertical_covered(x))
        throw ContractError("vertical group of " + x.to_string() + " is not tabulated");
    GroupTag g;
    switch (x.tag) {
        case CaseTag::A31:
        case CaseTag::A32: return GroupTag::z3_squared();
        case CaseTag::TrivialProduct: g = GroupTag::pgl3(); break;
        case CaseTag::OplusOplusM: g = GroupTag::gl2(); break;
        case CaseTag::OplusLplusM: g = GroupTag::gm(2); break;
        case CaseTag::E20plusM: g = GroupTag::gm_semidirect_ga(); break;
        default: throw ContractError("vertical group is not tabulated");
    }
    if (g.dim() != hom_dimension_count(x.rep))
        throw std::logic_error("vertical group dimension disagrees with Hom count for " + x.to_string());
    return g;
}

DegreeReport classify_mdp_degree(const CurveCtx& ctx, int d) {
    if (d < 1 || d > 9) throw ContractError("Del Pezzo degree must lie in 1..9");
    DegreeReport r;
    r.degree = d;
    r.birational_to_trivial = d >= 5;
    bool elliptic = ctx.genus() == 1;

    switch (d) {
        case 7:
            r.occurs = false;
            r.aut_if_maximal = GroupTag::unknown();
            r.structure = "no Mori Del Pezzo fibration has degree 7";
            r.equivariant_targets = "none";
            r.citations = {"degree/seven-excluded"};
            break;
        case 5:
            r.aut_if_maximal = GroupTag::trivial();
            r.structure = "Aut0(X) is trivial";
            r.equivariant_targets = "none";
            r.citations = {"degree/five-trivial"};
            break;
        case 8:
            r.aut_if_maximal = GroupTag::pgl2();
            r.structure = "PGL2 acting diagonally on a general fibre";
            r.equivariant_targets = "unconstrained";
            r.citations = {"degree/eight-diagonal-pgl2"};
            break;
        case 9:
            r.aut_if_maximal = GroupTag::unknown();
            r.delegated_to_p2_bundle = true;
            r.structure = "reduces to a P2-bundle; classify the bundle";
            r.equivariant_targets = "see P2-bundle report";
            r.citations = {"degree/nine-reduces-to-p2-bundle"};
            break;
        default:
            if (elliptic) {
                r.aut_if_maximal = GroupTag::elliptic_curve();
                r.structure = "contracted product Aut0(X) x^{Aut0(X)_C} F, F del Pezzo of degree " +
                              std::to_string(d);
                if (d == 6)
                    r.equivariant_targets = "isomorphisms only";
                else if (d == 4)
                    r.equivariant_targets = "unconstrained";
                else
                    r.equivariant_targets =
                        "Mori Del Pezzo fibration of degree " + std::to_string(d);
                r.citations = {"degree/low-elliptic-curve"};
            } else {
                r.aut_if_maximal = GroupTag::trivial();
                r.structure = "Aut0(X) is trivial";
                r.equivariant_targets = "none";
                r.citations = {"degree/low-higher-genus-trivial"};
            }
    }
    return r;
}

}  // namespace birmax
