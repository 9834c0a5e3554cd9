#include "birmax/conjugacy.hpp"

#include <algorithm>
#include <set>

namespace birmax {

std::string RuledBase::to_string() const {
    switch (kind) {
        case Kind::TrivialCxP1: return "CxP1";
        case Kind::A20: return "A20";
        case Kind::A21: return "A21";
        case Kind::Dec: return "Dec(" + line->to_string() + ")";
    }
    return "?";
}

bool RuledBase::operator==(const RuledBase& o) const {
    if (kind != o.kind) return false;
    return kind != Kind::Dec || *line == *o.line;
}

bool P1OverRuled::operator==(const P1OverRuled& o) const {
    return base == o.base && b == o.b && inv == o.inv && family_n == o.family_n;
}

std::string to_string(const MfsDescriptor& d) {
    struct {
        std::string operator()(const P2Bundle& p) const { return p.bundle.to_string(); }
        std::string operator()(const P1OverRuled& p) const {
            std::string s = "P1over(" + p.base.to_string() + ", b=" + std::to_string(p.b) +
                            ", D=" + p.inv.to_string();
            if (p.family_n) s += ", n=" + std::to_string(*p.family_n);
            return s + ")";
        }
        std::string operator()(const FibreProduct& p) const {
            return "FP(" + p.left.to_string() + ", " + p.right.to_string() + ")";
        }
        std::string operator()(const DelPezzoFibration& p) const {
            return "DP(" + std::to_string(p.degree) + ")";
        }
    } visitor;
    return std::visit(visitor, d);
}

std::string kind_name(const MfsDescriptor& d) {
    static const char* names[] = {"p2_bundle", "p1_over_ruled", "fibre_product", "del_pezzo"};
    return names[d.index()];
}

std::vector<IntMatrix2> sl2_enumerate(int bound) {
    if (bound < 1) throw ContractError("sl2_enumerate needs a positive bound");
    std::vector<IntMatrix2> out;
    for (std::int64_t a = -bound; a <= bound; ++a)
        for (std::int64_t b = -bound; b <= bound; ++b)
            for (std::int64_t c = -bound; c <= bound; ++c)
                for (std::int64_t d = -bound; d <= bound; ++d)
                    if (a * d - b * c == 1) out.push_back({{{a, b}, {c, d}}});
    return out;
}

namespace {

void require_nontrivial_degree_zero(const PicElement& x, const char* what) {
    if (x.deg() != 0) throw ContractError(std::string(what) + " must have degree 0");
    if (x.is_zero()) throw ContractError(std::string(what) + " must be nontrivial");
}

P2Bundle p2_of(std::vector<Atom> atoms, const CurvePtr& ctx) {
    return {canonicalize(VBundle(ctx, std::move(atoms)))};
}

void sort_descriptors(std::vector<MfsDescriptor>& v) {
    std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
        if (a.index() != b.index()) return a.index() < b.index();
        return to_string(a) < to_string(b);
    });
}

// Append unless an equal descriptor (isomorphic, for P^2-bundles) is present.
void push_unique(std::vector<MfsDescriptor>& v, MfsDescriptor d) {
    for (const auto& e : v)
        if (e == d) return;
    v.push_back(std::move(d));
}

}  // namespace

std::pair<MfsDescriptor, MfsDescriptor> conjugates_OLM(const PicElement& l, const PicElement& m,
                                                       const IntMatrix2& mat, std::int64_t b) {
    if (mat[0][0] * mat[1][1] - mat[0][1] * mat[1][0] != 1)
        throw ContractError("matrix must have determinant 1");
    require_nontrivial_degree_zero(l, "L");
    require_nontrivial_degree_zero(m, "M");
    if (l == m) throw ContractError("L and M must be non-isomorphic");
    if (coprime_relation(l, m)) throw ContractError("L and M satisfy a coprime relation");

    PicElement fibre = pic_combine(l, mat[0][0], m, mat[0][1]);
    PicElement section = pic_combine(l, mat[1][0], m, mat[1][1]);
    const auto& ctx = l.ctx();
    MfsDescriptor first = P1OverRuled{RuledBase::dec(section), b, fibre, std::nullopt};
    MfsDescriptor second = p2_of(
        {Atom::line(PicElement::zero(ctx)), Atom::line(fibre), Atom::line(section)}, ctx);
    return {std::move(first), std::move(second)};
}

std::vector<MfsDescriptor> conjugates_OOM(const PicElement& m) {
    require_nontrivial_degree_zero(m, "M");
    const auto& ctx = m.ctx();
    auto o = Atom::line(PicElement::zero(ctx));
    return {p2_of({o, o, Atom::line(m)}, ctx), P1OverRuled{RuledBase::trivial(), 1, m, std::nullopt}};
}

std::vector<MfsDescriptor> conjugates_E20M(const PicElement& m, std::int64_t b_lo,
                                           std::int64_t b_hi) {
    require_nontrivial_degree_zero(m, "M");
    if (element_order(m)) throw ContractError("M must have infinite order");
    const auto& ctx = m.ctx();
    std::vector<MfsDescriptor> out;
    for (auto b = b_lo; b <= b_hi; ++b) out.push_back(P1OverRuled{RuledBase::a20(), b, m, std::nullopt});
    for (auto b = std::max<std::int64_t>(b_lo, 0); b <= b_hi; ++b)
        for (std::int64_t n = 0; n <= b; ++n)
            out.push_back(P1OverRuled{RuledBase::dec(m), b, m * n, n});
    auto e20 = Atom::atiyah(2, 0, ctx);
    out.push_back(p2_of({e20, Atom::line(m)}, ctx));
    out.push_back(p2_of({e20, Atom::line(-m)}, ctx));
    return out;
}

std::vector<MfsDescriptor> conjugates(const ProjBundle& x, const ConjugateSearch& search) {
    AutReport report = classify_p2_bundle(x);
    if (report.maximal == Verdict::No) throw ContractError("Aut0(X) is not maximal");
    if (report.maximal == Verdict::Undetermined)
        throw ContractError("conjugates are not classified for this case");

    std::vector<MfsDescriptor> out;
    const auto& s = x.rep.summands();
    switch (x.tag) {
        case CaseTag::E20plusM:
            out = conjugates_E20M(s[1].as_line()->cls, search.b_lo, search.b_hi);
            break;
        case CaseTag::OplusOplusM: {
            auto cls = line_classes_beyond_trivial(x);
            out = conjugates_OOM(cls[0].is_zero() ? cls[1] : cls[0]);
            break;
        }
        case CaseTag::OplusLplusM: {
            auto lm = line_classes_beyond_trivial(x);
            const auto& l = lm[0];
            const auto& m = lm[1];
            std::vector<MfsDescriptor> p1s, p2s;
            for (const auto& mat : sl2_enumerate(search.sl2_bound)) {
                for (auto b = search.b_lo; b <= search.b_hi; ++b) {
                    auto [first, second] = conjugates_OLM(l, m, mat, b);
                    push_unique(p1s, std::move(first));
                    if (b == search.b_lo) push_unique(p2s, std::move(second));
                }
            }
            out = std::move(p2s);
            out.insert(out.end(), p1s.begin(), p1s.end());
            break;
        }
        default:
            out.push_back(P2Bundle{x});
    }
    sort_descriptors(out);
    return out;
}

Verdict is_superrigid(const AutReport& report) {
    if (report.maximal == Verdict::No) throw ContractError("superrigidity is asked only for maximal groups");
    switch (report.case_tag) {
        case CaseTag::A31:
        case CaseTag::A32:
        case CaseTag::TrivialProduct: return Verdict::Yes;
        case CaseTag::E20plusM:
        case CaseTag::OplusOplusM:
        case CaseTag::OplusLplusM: return Verdict::No;
        case CaseTag::StablePlusLine: return Verdict::Undetermined;
        default: throw ContractError("no superrigidity statement for " + to_string(report.case_tag));
    }
}

bool Witness::holds() const {
    switch (kind) {
        case Kind::Always: return true;
        case Kind::NontrivialDegreeZero: return line->deg() == 0 && !line->is_zero();
        case Kind::NotTwoTorsion: {
            auto o = element_order(*line);
            return !o || (*o != 1 && *o != 2);
        }
        case Kind::InfiniteOrder: return line->deg() == 0 && !element_order(*line);
        case Kind::NoCoprimeRelation:
            return line->deg() == 0 && other->deg() == 0 && !line->is_zero() && !other->is_zero() &&
                   !(*line == *other) && !coprime_relation(*line, *other);
        case Kind::DegreeZeroAndBAtLeast2: return line->deg() == 0 && b >= 2;
        case Kind::Nontrivial2Divisor: return is_nontrivial_2divisor(*line, *other);
        case Kind::SlopesMatch: return line->deg() > 0 && line->deg() == 2 * other->deg();
    }
    return false;
}

std::string Witness::to_string() const {
    switch (kind) {
        case Kind::Always: return "unconditional";
        case Kind::NontrivialDegreeZero: return line->to_string() + " is nontrivial of degree 0";
        case Kind::NotTwoTorsion: return line->to_string() + " is not two-torsion";
        case Kind::InfiniteOrder: return line->to_string() + " has infinite order";
        case Kind::NoCoprimeRelation:
            return "no coprime relation between " + line->to_string() + " and " + other->to_string();
        case Kind::DegreeZeroAndBAtLeast2:
            return "deg(" + line->to_string() + ") = 0 and b = " + std::to_string(b) + " >= 2";
        case Kind::Nontrivial2Divisor:
            return line->to_string() + " is a nontrivial 2-divisor for D0 = " + other->to_string();
        case Kind::SlopesMatch:
            return "deg(" + line->to_string() + ") = 2 deg(" + other->to_string() + ") > 0";
    }
    return "?";
}

std::vector<PicElement> default_pic0_classes(const CurvePtr& ctx) {
    std::vector<PicElement> out;
    auto add = [&](PicElement e) {
        if (e.is_zero()) return;
        for (const auto& x : out)
            if (x == e) return;
        out.push_back(std::move(e));
    };
    const auto& gens = ctx->generators();
    for (const auto& g : gens) add(PicElement::generator(ctx, g.name));
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            auto gi = PicElement::generator(ctx, gens[i].name);
            auto gj = PicElement::generator(ctx, gens[j].name);
            add(gi + gj);
            add(gi - gj);
        }
    return out;
}

namespace {

void add_entry(Catalog& cat, MfsDescriptor d, Witness w, std::string family) {
    if (!w.holds()) return;
    for (const auto& e : cat.entries)
        if (e.descriptor == d) return;
    cat.entries.push_back({std::move(d), std::move(w), std::move(family)});
}

Witness always() { return {}; }
Witness of_line(Witness::Kind k, const PicElement& l) { return {k, l, std::nullopt, 0}; }

void elliptic_catalog(Catalog& cat, const CurvePtr& ctx, const CatalogParams& p,
                      const std::vector<PicElement>& classes) {
    using K = Witness::Kind;
    PicElement zero = PicElement::zero(ctx);
    auto o = Atom::line(zero);

    add_entry(cat, DelPezzoFibration{6, "elliptic curve acting on C, degree-6 fibres"}, always(),
              "del Pezzo fibration, d = 6");
    add_entry(cat, DelPezzoFibration{8, "PGL2 acting diagonally on a general fibre"}, always(),
              "del Pezzo fibration, d = 8");
    for (int d : {1, 2})
        add_entry(cat, P2Bundle{canonicalize(VBundle(ctx, {Atom::atiyah(3, d, ctx)}))}, always(),
                  "P2-bundle, stable Atiyah");
    add_entry(cat, p2_of({o, o, o}, ctx), always(), "P2-bundle, trivial product");
    for (const auto& m : classes)
        add_entry(cat, p2_of({Atom::atiyah(2, 0, ctx), Atom::line(m)}, ctx), of_line(K::InfiniteOrder, m),
                  "P2-bundle, E20 + M");
    for (const auto& m : classes)
        add_entry(cat, p2_of({o, o, Atom::line(m)}, ctx), of_line(K::NontrivialDegreeZero, m),
                  "P2-bundle, O + O + M");
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (std::size_t j = i + 1; j < classes.size(); ++j)
            add_entry(cat, p2_of({o, Atom::line(classes[i]), Atom::line(classes[j])}, ctx),
                      {K::NoCoprimeRelation, classes[i], classes[j], 0}, "P2-bundle, O + L + M");

    for (auto base : {RuledBase::trivial(), RuledBase::a20(), RuledBase::a21()})
        add_entry(cat, P1OverRuled{base, 0, zero, std::nullopt}, always(), "product S' x P1");
    for (const auto& l : classes)
        add_entry(cat, P1OverRuled{RuledBase::dec(l), 0, zero, std::nullopt},
                  of_line(K::NontrivialDegreeZero, l), "product S' x P1");

    add_entry(cat, FibreProduct{RuledBase::a21(), RuledBase::a21()}, always(), "fibre product A21 x_C A21");
    for (const auto& l : classes)
        add_entry(cat, FibreProduct{RuledBase::dec(l), RuledBase::a21()}, of_line(K::NotTwoTorsion, l),
                  "fibre product P(O + L) x_C A21");

    std::vector<PicElement> with_zero{zero};
    with_zero.insert(with_zero.end(), classes.begin(), classes.end());
    for (auto b = std::max<std::int64_t>(p.b_lo, 2); b <= p.b_hi; ++b)
        for (const auto& d : with_zero)
            add_entry(cat, P1OverRuled{RuledBase::trivial(), b, d, std::nullopt},
                      {K::DegreeZeroAndBAtLeast2, d, std::nullopt, b}, "decomposable over CxP1");

    PicElement d0 = p.d0 ? *p.d0 : PicElement::point(ctx, 2);
    std::vector<PicElement> divisors = p.divisor_classes;
    if (divisors.empty())
        for (std::int64_t k = 0; k <= 2; ++k)
            for (const auto& c : with_zero) divisors.push_back(PicElement::point(ctx, k) + c);
    for (const auto& d : divisors)
        add_entry(cat, P1OverRuled{RuledBase::a21(), 2, d, std::nullopt},
                  {K::Nontrivial2Divisor, d, d0, 2}, "decomposable over A21, b = 2");

    cat.notes.push_back(
        "decomposable P1-bundles over CxP1 are listed for b >= 2; the b = 1 case with D nontrivial "
        "is conjugate to P(O + O + D) and appears among the P2-bundles");
}

void higher_genus_catalog(Catalog& cat, const CurvePtr& ctx, const CatalogParams& p) {
    using K = Witness::Kind;
    PicElement zero = PicElement::zero(ctx);
    auto o = Atom::line(zero);
    add_entry(cat, DelPezzoFibration{8, "PGL2 acting diagonally on a general fibre"}, always(),
              "del Pezzo fibration, d = 8");
    add_entry(cat, p2_of({o, o, o}, ctx), always(), "P2-bundle, trivial product");
    for (auto k : p.stable_degrees) {
        if (k <= 0 || k % 2 != 0) continue;
        PicElement det = PicElement::point(ctx, k);
        PicElement m = PicElement::point(ctx, k / 2);
        add_entry(cat, p2_of({Atom::stable2(det), Atom::line(m)}, ctx), {K::SlopesMatch, det, m, 0},
                  "P2-bundle, stable rank 2 + line (maximality open)");
    }
    add_entry(cat, P1OverRuled{RuledBase::trivial(), 0, zero, std::nullopt}, always(),
              "trivial product C x P1 x P1");
}

}  // namespace

Catalog maximal_catalog(const CurvePtr& ctx, const CatalogParams& params) {
    Catalog cat;
    if (ctx->genus() == 1) {
        auto classes = params.pic0_classes.empty() ? default_pic0_classes(ctx) : params.pic0_classes;
        elliptic_catalog(cat, ctx, params, classes);
    } else {
        higher_genus_catalog(cat, ctx, params);
    }
    return cat;
}

}  // namespace birmax
