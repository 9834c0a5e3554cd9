#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "birmax/errors.hpp"

namespace birmax {

/// Order of a group element or generator; nullopt means infinite.
using Order = std::optional<std::int64_t>;

struct Generator {
    std::string name;
    Order order;

    bool operator==(const Generator&) const = default;
};

/// A smooth projective curve, described by its genus and a finitely
/// generated subgroup of Pic^0 given by named generators.
class CurveCtx {
public:
    /// Throws ContractError on genus < 1, duplicate names, or orders < 2.
    CurveCtx(int genus, std::vector<Generator> generators);

    int genus() const { return genus_; }
    const std::vector<Generator>& generators() const { return gens_; }
    std::size_t rank() const { return gens_.size(); }

    /// Index of the named generator, or nullopt if undeclared.
    std::optional<std::size_t> index_of(const std::string& name) const;

    bool operator==(const CurveCtx& other) const {
        return genus_ == other.genus_ && gens_ == other.gens_;
    }

private:
    int genus_;
    std::vector<Generator> gens_;
};

using CurvePtr = std::shared_ptr<const CurveCtx>;

CurvePtr make_curve(int genus, std::vector<Generator> generators);

/// A line bundle class deg * p0 + sum c_i * g_i.  Coefficients of finite
/// generators are kept reduced in [0, order).
class PicElement {
public:
    PicElement() = default;
    explicit PicElement(CurvePtr ctx);
    PicElement(CurvePtr ctx, std::int64_t deg, std::vector<std::int64_t> coeffs);

    static PicElement zero(CurvePtr ctx) { return PicElement(std::move(ctx)); }
    static PicElement point(CurvePtr ctx, std::int64_t multiple = 1);
    /// The named generator; throws ContractError if it is not declared.
    static PicElement generator(CurvePtr ctx, const std::string& name);

    const CurvePtr& ctx() const { return ctx_; }
    std::int64_t deg() const { return deg_; }
    const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
    std::int64_t coeff(std::size_t i) const { return coeffs_.at(i); }

    bool is_zero() const;
    /// The degree-zero part, i.e. this minus deg * p0.
    PicElement pic0_part() const;

    PicElement operator+(const PicElement& o) const;
    PicElement operator-(const PicElement& o) const;
    PicElement operator-() const;
    PicElement operator*(std::int64_t k) const;

    bool operator==(const PicElement& o) const;
    /// Lexicographic on (deg, coeffs); for sorting only.
    bool operator<(const PicElement& o) const;

    /// Text form such as `3*p0 + 2*T - L`; the zero class prints as `0*p0`.
    std::string to_string() const;

private:
    void reduce();

    CurvePtr ctx_;
    std::int64_t deg_ = 0;
    std::vector<std::int64_t> coeffs_;
};

inline PicElement operator*(std::int64_t k, const PicElement& a) { return a * k; }

/// Throws ContractError unless both elements live over the same curve.
void require_same_curve(const PicElement& a, const PicElement& b);

/// ca * a + cb * b.
PicElement pic_combine(const PicElement& a, std::int64_t ca, const PicElement& b,
                       std::int64_t cb);

Order element_order(const PicElement& a);

/// Canonical representative of a modulo the k-torsion subgroup of the
/// declared group; the degree is kept.
PicElement reduce_mod_torsion(const PicElement& a, std::int64_t k);

/// Some coprime (n, m) with n*a + m*b = 0, or nullopt if none exists.
/// Both arguments must have degree zero.
std::optional<std::pair<std::int64_t, std::int64_t>> coprime_relation(const PicElement& a,
                                                                      const PicElement& b);

/// Class of m_2^*(D) for multiplication by 2 on an elliptic curve, with
/// m_2^*(p0) taken as 4 * p0 unless another degree-4 class is supplied.
PicElement pullback_m2(const PicElement& d,
                       const std::optional<PicElement>& p0_image = std::nullopt);

/// Whether m_2^*(D) - 2 deg(D) * D0 is nontrivial.  D0 must have degree 2.
bool is_nontrivial_2divisor(const PicElement& d, const PicElement& d0,
                            const std::optional<PicElement>& p0_image = std::nullopt);

}  // namespace birmax
