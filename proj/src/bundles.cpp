#include "birmax/bundles.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <tuple>

namespace birmax {

Rational::Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw ContractError("zero denominator");
    if (d < 0) n = -n, d = -d;
    auto g = std::gcd(n, d);
    num = n / g;
    den = d / g;
}

std::string Rational::to_string() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

namespace {

int kind_order(const Atom& a) {
    if (a.as_atiyah()) return 0;
    if (a.as_stable2()) return 1;
    return 2;
}

const PicElement& atom_class(const Atom& a) {
    if (auto l = a.as_line()) return l->cls;
    if (auto at = a.as_atiyah()) return at->twist;
    return a.as_stable2()->det;
}

std::string with_class(const std::string& head, const PicElement& cls) {
    if (cls.is_zero()) return head;
    return head + "(" + cls.to_string() + ")";
}

}  // namespace

Atom Atom::line(PicElement cls) {
    if (!cls.ctx()) throw ContractError("line class without a curve");
    return Atom(LineAtom{std::move(cls)});
}

Atom Atom::atiyah(int r, int d, PicElement twist) {
    if (r != 2 && r != 3) throw ContractError("Atiyah bundles are modelled in rank 2 and 3");
    if (d < 0 || d >= r) throw ContractError("Atiyah index must lie in [0, rank)");
    if (twist.ctx()->genus() != 1) throw ContractError("Atiyah bundles need an elliptic curve");
    if (twist.deg() != 0) throw ContractError("Atiyah twist must have degree 0");
    auto fixing = r / std::gcd(r, d);
    return Atom(AtiyahAtom{r, d, reduce_mod_torsion(twist, fixing)});
}

Atom Atom::stable2(PicElement det) {
    if (det.ctx()->genus() < 2) throw ContractError("declared stable rank-2 bundles need genus >= 2");
    if (det.deg() <= 0) throw ContractError("declared stable rank-2 bundle needs positive degree");
    return Atom(StableRank2Atom{std::move(det)});
}

int Atom::rank() const {
    if (as_line()) return 1;
    if (auto a = as_atiyah()) return a->rank;
    return 2;
}

std::int64_t Atom::degree() const {
    if (auto l = as_line()) return l->cls.deg();
    if (auto a = as_atiyah()) return a->index;
    return as_stable2()->det.deg();
}

const CurvePtr& Atom::ctx() const { return atom_class(*this).ctx(); }

bool Atom::is_stable() const {
    if (auto a = as_atiyah()) return a->index != 0;
    return true;
}

bool Atom::operator==(const Atom& o) const {
    if (payload_.index() != o.payload_.index()) return false;
    if (auto a = as_atiyah()) {
        auto b = o.as_atiyah();
        if (a->rank != b->rank || a->index != b->index) return false;
    }
    return atom_class(*this) == atom_class(o);
}

std::string Atom::to_string() const {
    if (auto l = as_line()) return with_class("O", l->cls);
    if (auto a = as_atiyah())
        return with_class("E" + std::to_string(a->rank) + std::to_string(a->index), a->twist);
    return "S2(det=" + as_stable2()->det.to_string() + ")";
}

std::string to_string(StabilityClass s) {
    switch (s) {
        case StabilityClass::Stable: return "stable";
        case StabilityClass::PolystableStrict: return "polystable";
        case StabilityClass::SemistableNotPolystable: return "semistable";
        case StabilityClass::Unstable: return "unstable";
    }
    return "?";
}

VBundle::VBundle(CurvePtr ctx, std::vector<Atom> summands)
    : ctx_(std::move(ctx)), summands_(std::move(summands)) {
    if (summands_.empty()) throw ContractError("bundle needs at least one summand");
    PicElement probe = PicElement::zero(ctx_);
    for (const auto& a : summands_) require_same_curve(probe, atom_class(a));
    int r = rank();
    if (r < 1 || r > 3) throw ContractError("bundle rank must lie in 1..3");
}

int VBundle::rank() const {
    int r = 0;
    for (const auto& a : summands_) r += a.rank();
    return r;
}

std::int64_t VBundle::degree() const {
    std::int64_t d = 0;
    for (const auto& a : summands_) d += a.degree();
    return d;
}

bool VBundle::operator==(const VBundle& o) const {
    if (!(*ctx_ == *o.ctx_)) return false;
    auto a = normal_form(*this), b = normal_form(o);
    return a.summands_ == b.summands_;
}

std::string VBundle::to_string() const {
    std::string out;
    for (const auto& a : summands_) {
        if (!out.empty()) out += " + ";
        out += a.to_string();
    }
    return out;
}

bool atom_less(const Atom& a, const Atom& b) {
    auto key = [](const Atom& x) {
        const auto& c = atom_class(x);
        int idx = x.as_atiyah() ? x.as_atiyah()->index : 0;
        return std::make_tuple(-x.rank(), kind_order(x), idx, x.degree(), c.deg(),
                               c.coeffs());
    };
    return key(a) < key(b);
}

VBundle normal_form(const VBundle& e) {
    auto atoms = e.summands();
    std::stable_sort(atoms.begin(), atoms.end(), atom_less);
    return VBundle(e.ctx(), std::move(atoms));
}

VBundle tensor_line(const VBundle& e, const PicElement& n) {
    std::vector<Atom> out;
    for (const auto& a : e.summands()) {
        if (auto l = a.as_line()) {
            out.push_back(Atom::line(l->cls + n));
        } else if (auto at = a.as_atiyah()) {
            if (n.deg() != 0)
                throw ContractError("twisting an Atiyah summand needs a degree-0 class");
            out.push_back(Atom::atiyah(at->rank, at->index, at->twist + n));
        } else {
            if (!n.is_zero())
                throw ContractError("twist of a declared stable rank-2 summand is not modelled");
            out.push_back(a);
        }
    }
    return VBundle(e.ctx(), std::move(out));
}

VBundle dual(const VBundle& e) {
    std::vector<Atom> out;
    for (const auto& a : e.summands()) {
        if (auto l = a.as_line()) {
            out.push_back(Atom::line(-l->cls));
        } else if (auto at = a.as_atiyah(); at && at->rank == 2 && at->index == 0) {
            out.push_back(Atom::atiyah(2, 0, -at->twist));
        } else {
            throw ContractError("dual of " + a.to_string() + " is not modelled");
        }
    }
    return VBundle(e.ctx(), std::move(out));
}

std::int64_t h0(const PicElement& l) {
    if (l.ctx()->genus() != 1) throw ContractError("h0 is tabulated on elliptic curves only");
    if (l.deg() < 0) return 0;
    if (l.deg() > 0) return l.deg();
    return l.is_zero() ? 1 : 0;
}

std::int64_t hom_dim(const Atom& a, const Atom& b) {
    auto la = a.as_line(), lb = b.as_line();
    auto aa = a.as_atiyah(), ab = b.as_atiyah();
    auto is_e20 = [](const AtiyahAtom* x) { return x && x->rank == 2 && x->index == 0; };
    if (la && lb) return h0(lb->cls - la->cls);
    if (la && is_e20(ab) && la->cls.deg() == 0) return la->cls == ab->twist ? 1 : 0;
    if (is_e20(aa) && lb && lb->cls.deg() == 0) return aa->twist == lb->cls ? 1 : 0;
    if (is_e20(aa) && is_e20(ab)) return aa->twist == ab->twist ? 2 : 0;
    throw TableError("Hom(" + a.to_string() + ", " + b.to_string() + ") is not tabulated");
}

StabilityClass stability_class(const VBundle& e) {
    const auto& s = e.summands();
    if (s.size() == 1)
        return s[0].is_stable() ? StabilityClass::Stable : StabilityClass::SemistableNotPolystable;
    auto mu = s[0].slope();
    for (const auto& a : s)
        if (!(a.slope() == mu)) return StabilityClass::Unstable;
    bool all_stable = std::all_of(s.begin(), s.end(), [](const Atom& a) { return a.is_stable(); });
    return all_stable ? StabilityClass::PolystableStrict : StabilityClass::SemistableNotPolystable;
}

VBundle max_destabilizing(const VBundle& e) {
    if (stability_class(e) != StabilityClass::Unstable)
        throw ContractError("max_destabilizing needs an unstable bundle");
    Rational top = e.summands()[0].slope();
    for (const auto& a : e.summands()) top = std::max(top, a.slope());
    std::vector<Atom> out;
    for (const auto& a : e.summands())
        if (a.slope() == top) out.push_back(a);
    return normal_form(VBundle(e.ctx(), std::move(out)));
}

VBundle socle(const VBundle& e) {
    if (stability_class(e) == StabilityClass::Unstable)
        throw ContractError("socle needs a semistable bundle");
    std::vector<Atom> out;
    for (const auto& a : e.summands()) {
        if (a.is_stable()) out.push_back(a);
        else out.push_back(Atom::line(a.as_atiyah()->twist));
    }
    return normal_form(VBundle(e.ctx(), std::move(out)));
}

}  // namespace birmax
