#include "birmax/projbundles.hpp"

#include <algorithm>
#include <tuple>

namespace birmax {

namespace {

bool atoms_less(const std::vector<Atom>& a, const std::vector<Atom>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), atom_less);
}

// Among the twists making some summand trivial, prefer the most trivial
// summands, then no negative degrees, then the least normal form.
VBundle canonical_line_sum(const VBundle& e) {
    std::optional<VBundle> best;
    std::tuple<int, int> best_key{};
    for (const auto& a : e.summands()) {
        VBundle cand = normal_form(tensor_line(e, -a.as_line()->cls));
        int zeros = 0, negative = 0;
        for (const auto& s : cand.summands()) {
            zeros += s.as_line()->cls.is_zero();
            negative += s.degree() < 0;
        }
        std::tuple<int, int> key{-zeros, negative > 0};
        if (!best || key < best_key ||
            (key == best_key && atoms_less(cand.summands(), best->summands()))) {
            best = cand;
            best_key = key;
        }
    }
    return *best;
}

CaseTag line_sum_tag(const VBundle& rep) {
    int zeros = 0;
    for (const auto& s : rep.summands()) zeros += s.as_line()->cls.is_zero();
    if (zeros == rep.rank()) return rep.rank() == 3 ? CaseTag::TrivialProduct : CaseTag::RuledTrivial;
    if (rep.rank() == 2) return CaseTag::RuledDecomposable;
    return zeros == 2 ? CaseTag::OplusOplusM : CaseTag::OplusLplusM;
}

}  // namespace

std::string to_string(CaseTag t) {
    switch (t) {
        case CaseTag::TrivialProduct: return "TrivialProduct";
        case CaseTag::A30: return "A30";
        case CaseTag::A31: return "A31";
        case CaseTag::A32: return "A32";
        case CaseTag::E20plusM: return "E20plusM";
        case CaseTag::E21plusM: return "E21plusM";
        case CaseTag::OplusOplusM: return "OplusOplusM";
        case CaseTag::OplusLplusM: return "OplusLplusM";
        case CaseTag::StablePlusLine: return "StablePlusLine";
        case CaseTag::RuledTrivial: return "RuledTrivial";
        case CaseTag::RuledA20: return "RuledA20";
        case CaseTag::RuledA21: return "RuledA21";
        case CaseTag::RuledDecomposable: return "RuledDecomposable";
        case CaseTag::Nonstandard: return "Nonstandard";
    }
    return "?";
}

std::string ProjBundle::to_string() const {
    switch (tag) {
        case CaseTag::A30: return "A30";
        case CaseTag::A31: return "A31";
        case CaseTag::A32: return "A32";
        default: return "P(" + rep.to_string() + ")";
    }
}

ProjBundle canonicalize(const VBundle& e) {
    VBundle nf = normal_form(e);
    const auto& s = nf.summands();
    const auto& ctx = nf.ctx();
    bool all_lines = std::all_of(s.begin(), s.end(), [](const Atom& a) { return a.as_line(); });

    if (nf.rank() == 1) return {VBundle(ctx, {Atom::line(PicElement::zero(ctx))}), CaseTag::Nonstandard};
    if (all_lines) {
        VBundle rep = canonical_line_sum(nf);
        return {rep, line_sum_tag(rep)};
    }
    if (auto at = s[0].as_atiyah()) {
        if (at->rank == 3) {
            static constexpr CaseTag tags[] = {CaseTag::A30, CaseTag::A31, CaseTag::A32};
            return {VBundle(ctx, {Atom::atiyah(3, at->index, ctx)}), tags[at->index]};
        }
        if (s.size() == 1) {
            return {VBundle(ctx, {Atom::atiyah(2, at->index, ctx)}),
                    at->index == 0 ? CaseTag::RuledA20 : CaseTag::RuledA21};
        }
        // E_{2,1} is fixed by 2-torsion twists, which move the line summand.
        PicElement m = s[1].as_line()->cls - at->twist;
        if (at->index == 1) m = reduce_mod_torsion(m, 2);
        VBundle rep(ctx, {Atom::atiyah(2, at->index, ctx), Atom::line(m)});
        return {rep, at->index == 0 ? CaseTag::E20plusM : CaseTag::E21plusM};
    }
    if (s[0].as_stable2() && s.size() == 2) return {nf, CaseTag::StablePlusLine};
    return {nf, CaseTag::Nonstandard};
}

std::vector<PicElement> line_classes_beyond_trivial(const ProjBundle& x) {
    std::vector<PicElement> out;
    bool skipped = false;
    for (const auto& a : x.rep.summands()) {
        const auto* l = a.as_line();
        if (!l) throw ContractError("expected a sum of line bundles");
        if (!skipped && l->cls.is_zero()) {
            skipped = true;
            continue;
        }
        out.push_back(l->cls);
    }
    if (!skipped) throw ContractError("representative has no trivial summand");
    return out;
}

bool proj_iso(const VBundle& x, const VBundle& y) {
    if (x.rank() != y.rank()) throw ContractError("proj_iso needs bundles of equal rank");
    require_same_curve(PicElement::zero(x.ctx()), PicElement::zero(y.ctx()));

    // Krull-Schmidt: a twist matching the bundles pairs off summands of the
    // same kind, so N is a difference of classes of a fixed summand of X.
    const Atom& anchor = [&]() -> const Atom& {
        for (const auto& a : x.summands())
            if (a.as_line()) return a;
        return x.summands()[0];
    }();
    auto anchor_class = [](const Atom& a) -> std::optional<PicElement> {
        if (auto l = a.as_line()) return l->cls;
        if (auto at = a.as_atiyah()) return at->twist;
        return a.as_stable2()->det;
    };
    PicElement from = *anchor_class(anchor);

    for (const auto& b : y.summands()) {
        if (b.payload().index() != anchor.payload().index()) continue;
        PicElement n = *anchor_class(b) - from;
        if (anchor.as_stable2() && !n.is_zero()) continue;
        try {
            if (tensor_line(x, n) == y) return true;
        } catch (const ContractError&) {
            // the twist is not representable on some summand of x
        }
    }
    return false;
}

bool proj_iso(const ProjBundle& x, const ProjBundle& y) { return proj_iso(x.rep, y.rep); }

ProjBundle proj_dual(const ProjBundle& x) {
    const auto& ctx = x.ctx();
    for (const auto& a : x.rep.summands())
        if (a.as_stable2()) throw ContractError("projective dual of a declared stable summand is not modelled");
    switch (x.tag) {
        case CaseTag::A30:
        case CaseTag::A31:
        case CaseTag::A32: {
            int d = x.rep.summands()[0].as_atiyah()->index;
            return canonicalize(VBundle(ctx, {Atom::atiyah(3, (3 - d) % 3, ctx)}));
        }
        case CaseTag::RuledA20:
        case CaseTag::RuledA21:
            return x;
        case CaseTag::E21plusM: {
            // E_{2,1}^dual = E_{2,1}(-p0); twist back by p0.
            const auto& m = x.rep.summands()[1].as_line()->cls;
            return canonicalize(VBundle(
                ctx, {Atom::atiyah(2, 1, ctx), Atom::line(PicElement::point(ctx) - m)}));
        }
        default:
            return canonicalize(dual(x.rep));
    }
}

bool is_semi_homogeneous(const ProjBundle& x) {
    if (x.ctx()->genus() != 1) throw ContractError("semi-homogeneity is decided on elliptic curves");
    switch (x.tag) {
        case CaseTag::A30:
        case CaseTag::A31:
        case CaseTag::A32:
        case CaseTag::RuledA20:
        case CaseTag::RuledA21:
            return true;
        case CaseTag::E20plusM:
        case CaseTag::TrivialProduct:
        case CaseTag::OplusOplusM:
        case CaseTag::OplusLplusM:
        case CaseTag::RuledTrivial:
        case CaseTag::RuledDecomposable:
            return std::all_of(x.rep.summands().begin(), x.rep.summands().end(),
                               [](const Atom& a) { return a.degree() == 0; });
        default:
            return false;
    }
}

GroupTag omega_group(const ProjBundle& x) {
    if (x.ctx()->genus() != 1) throw ContractError("omega_group is tabulated on elliptic curves");
    switch (x.tag) {
        case CaseTag::A31:
        case CaseTag::A32:
            return GroupTag::z3_squared();
        case CaseTag::RuledA21:
            return GroupTag::z2_power(2);
        case CaseTag::OplusLplusM: {
            auto lm = line_classes_beyond_trivial(x);
            const auto& l = lm[0];
            const auto& m = lm[1];
            if (element_order(l) == 3 && m == l * 2) return GroupTag::z3();
            return GroupTag::trivial();
        }
        case CaseTag::RuledDecomposable: {
            if (element_order(line_classes_beyond_trivial(x)[0]) == 2) return GroupTag::z2_power(1);
            return GroupTag::trivial();
        }
        case CaseTag::Nonstandard:
            return GroupTag::unknown();
        default:
            return GroupTag::trivial();
    }
}

}  // namespace birmax
