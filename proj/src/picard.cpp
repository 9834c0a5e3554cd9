#include "birmax/picard.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

namespace birmax {

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t n) {
    std::int64_t r = a % n;
    return r < 0 ? r + n : r;
}

std::int64_t gcd3(std::int64_t a, std::int64_t b, std::int64_t c) {
    return std::gcd(std::gcd(a, b), c);
}

using Pair = std::pair<std::int64_t, std::int64_t>;

// Flip to n > 0, or n == 0 and m > 0.
Pair normalize_sign(Pair p) {
    if (p.first < 0 || (p.first == 0 && p.second < 0)) return {-p.first, -p.second};
    return p;
}

auto pair_score(const Pair& p) {
    auto an = p.first < 0 ? -p.first : p.first;
    auto am = p.second < 0 ? -p.second : p.second;
    return std::make_tuple(std::max(an, am), an + am, -p.first, -p.second);
}

}  // namespace

CurveCtx::CurveCtx(int genus, std::vector<Generator> generators)
    : genus_(genus), gens_(std::move(generators)) {
    if (genus_ < 1) throw ContractError("curve genus must be at least 1");
    std::set<std::string> seen;
    for (const auto& g : gens_) {
        if (g.name.empty() || g.name == "p0")
            throw ContractError("invalid generator name '" + g.name + "'");
        if (!seen.insert(g.name).second)
            throw ContractError("duplicate generator name '" + g.name + "'");
        if (g.order && *g.order < 2)
            throw ContractError("generator '" + g.name + "' must have order >= 2 or inf");
    }
}

std::optional<std::size_t> CurveCtx::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == name) return i;
    return std::nullopt;
}

CurvePtr make_curve(int genus, std::vector<Generator> generators) {
    return std::make_shared<const CurveCtx>(genus, std::move(generators));
}

PicElement::PicElement(CurvePtr ctx) : ctx_(std::move(ctx)) {
    coeffs_.assign(ctx_->rank(), 0);
}

PicElement::PicElement(CurvePtr ctx, std::int64_t deg, std::vector<std::int64_t> coeffs)
    : ctx_(std::move(ctx)), deg_(deg), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != ctx_->rank())
        throw ContractError("coefficient vector does not match the curve's generators");
    reduce();
}

PicElement PicElement::point(CurvePtr ctx, std::int64_t multiple) {
    PicElement e(std::move(ctx));
    e.deg_ = multiple;
    return e;
}

PicElement PicElement::generator(CurvePtr ctx, const std::string& name) {
    auto idx = ctx->index_of(name);
    if (!idx) throw ContractError("undeclared generator '" + name + "'");
    PicElement e(std::move(ctx));
    e.coeffs_[*idx] = 1;
    return e;
}

void PicElement::reduce() {
    const auto& gens = ctx_->generators();
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (gens[i].order) coeffs_[i] = floor_mod(coeffs_[i], *gens[i].order);
}

bool PicElement::is_zero() const {
    return deg_ == 0 && std::all_of(coeffs_.begin(), coeffs_.end(), [](auto c) { return c == 0; });
}

PicElement PicElement::pic0_part() const {
    PicElement e = *this;
    e.deg_ = 0;
    return e;
}

void require_same_curve(const PicElement& a, const PicElement& b) {
    if (!a.ctx() || !b.ctx()) throw ContractError("uninitialised Picard element");
    if (a.ctx() != b.ctx() && !(*a.ctx() == *b.ctx()))
        throw ContractError("Picard elements live over different curves");
}

PicElement pic_combine(const PicElement& a, std::int64_t ca, const PicElement& b,
                       std::int64_t cb) {
    require_same_curve(a, b);
    std::vector<std::int64_t> c(a.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = ca * a.coeff(i) + cb * b.coeff(i);
    return PicElement(a.ctx(), ca * a.deg() + cb * b.deg(), std::move(c));
}

PicElement PicElement::operator+(const PicElement& o) const { return pic_combine(*this, 1, o, 1); }
PicElement PicElement::operator-(const PicElement& o) const { return pic_combine(*this, 1, o, -1); }
PicElement PicElement::operator-() const { return pic_combine(*this, -1, *this, 0); }
PicElement PicElement::operator*(std::int64_t k) const { return pic_combine(*this, k, *this, 0); }

bool PicElement::operator==(const PicElement& o) const {
    require_same_curve(*this, o);
    return deg_ == o.deg_ && coeffs_ == o.coeffs_;
}

bool PicElement::operator<(const PicElement& o) const {
    return std::tie(deg_, coeffs_) < std::tie(o.deg_, o.coeffs_);
}

std::string PicElement::to_string() const {
    std::ostringstream out;
    bool first = true;
    auto emit = [&](std::int64_t c, const std::string& name) {
        if (c == 0) return;
        std::int64_t mag = c < 0 ? -c : c;
        if (first) {
            if (c < 0) out << '-';
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (mag != 1) out << mag << '*';
        out << name;
        first = false;
    };
    emit(deg_, "p0");
    const auto& gens = ctx_->generators();
    for (std::size_t i = 0; i < coeffs_.size(); ++i) emit(coeffs_[i], gens[i].name);
    if (first) return "0*p0";
    return out.str();
}

Order element_order(const PicElement& a) {
    if (a.deg() != 0) return std::nullopt;
    const auto& gens = a.ctx()->generators();
    std::int64_t result = 1;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        auto c = a.coeff(i);
        if (c == 0) continue;
        if (!gens[i].order) return std::nullopt;
        auto n = *gens[i].order;
        result = std::lcm(result, n / std::gcd(n, c));
    }
    return result;
}

PicElement reduce_mod_torsion(const PicElement& a, std::int64_t k) {
    if (k == 1) return a;
    const auto& gens = a.ctx()->generators();
    auto c = a.coeffs();
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (!gens[i].order) continue;
        auto o = *gens[i].order;
        c[i] %= o / std::gcd(o, k);
    }
    return PicElement(a.ctx(), a.deg(), std::move(c));
}

std::optional<Pair> coprime_relation(const PicElement& a, const PicElement& b) {
    require_same_curve(a, b);
    if (a.deg() != 0 || b.deg() != 0)
        throw ContractError("coprime_relation needs degree-zero classes");
    const auto& gens = a.ctx()->generators();

    std::vector<std::size_t> free_idx, tors_idx;
    for (std::size_t i = 0; i < gens.size(); ++i)
        (gens[i].order ? tors_idx : free_idx).push_back(i);

    auto torsion_vanishes = [&](std::int64_t n, std::int64_t m) {
        for (auto i : tors_idx)
            if (floor_mod(n * a.coeff(i) + m * b.coeff(i), *gens[i].order) != 0) return false;
        return true;
    };

    bool free_zero = std::all_of(free_idx.begin(), free_idx.end(),
                                 [&](auto i) { return a.coeff(i) == 0 && b.coeff(i) == 0; });

    if (!free_zero) {
        // Kernel of the two-column matrix of free parts.  If it has rank one,
        // its primitive generator is the only coprime candidate up to sign.
        std::size_t pivot = *std::find_if(free_idx.begin(), free_idx.end(), [&](auto i) {
            return a.coeff(i) != 0 || b.coeff(i) != 0;
        });
        std::int64_t n0 = b.coeff(pivot), m0 = -a.coeff(pivot);
        std::int64_t g = std::gcd(n0, m0);
        n0 /= g;
        m0 /= g;
        for (auto i : free_idx)
            if (n0 * a.coeff(i) + m0 * b.coeff(i) != 0) return std::nullopt;
        if (!torsion_vanishes(n0, m0)) return std::nullopt;
        return normalize_sign({n0, m0});
    }

    // Pure torsion: the solution lattice contains N*Z^2, and a residue class
    // (r, s) mod N lifts to a coprime pair exactly when gcd(r, s, N) = 1.
    std::int64_t n_mod = 1;
    for (auto i : tors_idx) {
        auto o = *gens[i].order;
        n_mod = std::lcm(n_mod, o / std::gcd(o, a.coeff(i)));
        n_mod = std::lcm(n_mod, o / std::gcd(o, b.coeff(i)));
    }

    std::optional<Pair> best;
    auto consider = [&](Pair p) {
        if (std::gcd(p.first, p.second) != 1) return false;
        p = normalize_sign(p);
        if (!best || pair_score(p) < pair_score(*best)) best = p;
        return true;
    };

    for (std::int64_t r = 0; r < n_mod; ++r) {
        for (std::int64_t s = 0; s < n_mod; ++s) {
            if (gcd3(r, s, n_mod) != 1 || !torsion_vanishes(r, s)) continue;
            bool found = false;
            for (auto rr : {r, r - n_mod})
                for (auto ss : {s, s - n_mod}) found = consider({rr, ss}) || found;
            if (found) continue;
            // r != 0 here; some s + kN avoids every prime factor of r.
            for (std::int64_t k = 1;; ++k)
                if (consider({r, s + k * n_mod})) break;
        }
    }
    return best;
}

PicElement pullback_m2(const PicElement& d, const std::optional<PicElement>& p0_image) {
    if (d.ctx()->genus() != 1) throw ContractError("pullback_m2 needs an elliptic curve");
    PicElement image = p0_image ? *p0_image : PicElement::point(d.ctx(), 4);
    require_same_curve(d, image);
    if (image.deg() != 4) throw ContractError("m_2^*(p0) must have degree 4");
    return pic_combine(image, d.deg(), d.pic0_part(), 2);
}

bool is_nontrivial_2divisor(const PicElement& d, const PicElement& d0,
                            const std::optional<PicElement>& p0_image) {
    require_same_curve(d, d0);
    if (d0.deg() != 2) throw ContractError("D0 must have degree 2");
    PicElement e = pic_combine(pullback_m2(d, p0_image), 1, d0, -2 * d.deg());
    if (e.deg() != 0) throw std::logic_error("m_2^*(D) - 2deg(D)D0 has nonzero degree");
    return !e.is_zero();
}

}  // namespace birmax
