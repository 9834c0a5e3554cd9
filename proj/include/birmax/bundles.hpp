#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "birmax/picard.hpp"

namespace birmax {

/// Raised by hom_dim for pairs outside its table.
struct TableError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d = 1);

    auto operator<=>(const Rational& o) const { return num * o.den <=> o.num * den; }
    bool operator==(const Rational& o) const { return num * o.den == o.num * den; }
    std::string to_string() const;
};

struct LineAtom {
    PicElement cls;
};

/// Indecomposable bundle E_{r,d} tensored with a degree-zero twist, on an
/// elliptic curve.  The twist is stored modulo the classes that fix E_{r,d}.
struct AtiyahAtom {
    int rank;
    int index;
    PicElement twist;
};

/// A stable rank-2 bundle on a curve of genus >= 2 given as a nonsplit
/// extension of its determinant by O.
struct StableRank2Atom {
    PicElement det;

    const PicElement& ext_quotient() const { return det; }
};

class Atom {
public:
    using Payload = std::variant<LineAtom, AtiyahAtom, StableRank2Atom>;

    static Atom line(PicElement cls);
    /// Throws ContractError unless r in {2,3}, 0 <= d < r, deg(twist) = 0 and
    /// the curve is elliptic.
    static Atom atiyah(int r, int d, PicElement twist);
    static Atom atiyah(int r, int d, const CurvePtr& ctx) {
        return atiyah(r, d, PicElement::zero(ctx));
    }
    /// Throws ContractError unless genus >= 2 and deg(det) > 0.
    static Atom stable2(PicElement det);

    const Payload& payload() const { return payload_; }
    const LineAtom* as_line() const { return std::get_if<LineAtom>(&payload_); }
    const AtiyahAtom* as_atiyah() const { return std::get_if<AtiyahAtom>(&payload_); }
    const StableRank2Atom* as_stable2() const { return std::get_if<StableRank2Atom>(&payload_); }

    int rank() const;
    std::int64_t degree() const;
    Rational slope() const { return Rational(degree(), rank()); }
    const CurvePtr& ctx() const;
    bool is_stable() const;

    bool operator==(const Atom& o) const;
    std::string to_string() const;

private:
    explicit Atom(Payload p) : payload_(std::move(p)) {}
    Payload payload_;
};

enum class StabilityClass { Stable, PolystableStrict, SemistableNotPolystable, Unstable };

std::string to_string(StabilityClass s);

/// A vector bundle of rank 1 to 3, written as a direct sum of atoms.
class VBundle {
public:
    /// Throws ContractError on mixed curves or total rank outside 1..3.
    VBundle(CurvePtr ctx, std::vector<Atom> summands);

    const CurvePtr& ctx() const { return ctx_; }
    const std::vector<Atom>& summands() const { return summands_; }
    int rank() const;
    std::int64_t degree() const;
    Rational slope() const { return Rational(degree(), rank()); }

    /// Equality of normal forms, i.e. isomorphism of vector bundles.
    bool operator==(const VBundle& o) const;
    std::string to_string() const;

private:
    CurvePtr ctx_;
    std::vector<Atom> summands_;
};

VBundle tensor_line(const VBundle& e, const PicElement& n);
VBundle dual(const VBundle& e);
VBundle normal_form(const VBundle& e);

/// Strict ordering used by normal_form.
bool atom_less(const Atom& a, const Atom& b);

/// h^0 of a line bundle on an elliptic curve.
std::int64_t h0(const PicElement& l);
std::int64_t hom_dim(const Atom& a, const Atom& b);

StabilityClass stability_class(const VBundle& e);
VBundle max_destabilizing(const VBundle& e);
VBundle socle(const VBundle& e);

}  // namespace birmax
