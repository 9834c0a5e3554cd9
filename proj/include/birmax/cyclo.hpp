#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "birmax/errors.hpp"

namespace birmax {

/// a + b*w in Z[w], w a primitive cube root of unity.
struct Eisenstein {
    std::int64_t a = 0;
    std::int64_t b = 0;

    static Eisenstein omega() { return {0, 1}; }

    Eisenstein operator+(const Eisenstein& o) const { return {a + o.a, b + o.b}; }
    Eisenstein operator-(const Eisenstein& o) const { return {a - o.a, b - o.b}; }
    Eisenstein operator-() const { return {-a, -b}; }
    Eisenstein operator*(const Eisenstein& o) const {
        return {a * o.a - b * o.b, a * o.b + b * o.a - b * o.b};
    }
    bool operator==(const Eisenstein&) const = default;

    bool is_zero() const { return a == 0 && b == 0; }
    /// Complex conjugate a + b*w^2.
    Eisenstein conj() const { return {a - b, -b}; }
    std::int64_t norm() const { return a * a - a * b + b * b; }
    std::string to_string() const;
};

/// x / y, throwing ContractError unless y divides x.
Eisenstein exact_div(const Eisenstein& x, const Eisenstein& y);

/// Polynomial in a formal symbol lambda with Eisenstein coefficients.
class Poly {
public:
    Poly() = default;
    Poly(Eisenstein c) : coeffs_{c} { trim(); }
    Poly(std::int64_t c) : Poly(Eisenstein{c, 0}) {}
    static Poly lambda_power(int k, Eisenstein c = {1, 0});

    const std::vector<Eisenstein>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    Eisenstein constant() const { return coeffs_.empty() ? Eisenstein{} : coeffs_[0]; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }

    /// Reduce modulo lambda^n - 1.
    Poly reduce_cyclic(int n) const;

private:
    void trim();
    std::vector<Eisenstein> coeffs_;
};

using Mat3 = std::array<std::array<Poly, 3>, 3>;

Mat3 identity3();
Mat3 diag3(const Poly& x, const Poly& y, const Poly& z);
Mat3 mat_mul(const Mat3& a, const Mat3& b);
Mat3 scale(const Poly& c, const Mat3& a);
Mat3 transpose(const Mat3& a);
Mat3 reduce_cyclic(const Mat3& a, int n);
bool is_constant(const Mat3& a);

/// Determinant of a constant matrix.
Eisenstein det(const Mat3& a);
/// Inverse of a constant matrix whose determinant is a unit.
Mat3 inverse(const Mat3& a);

/// Equality in PGL3: a = c*b for a nonzero scalar c.  Both matrices must be
/// constant and invertible.
bool proj_eq(const Mat3& a, const Mat3& b);
/// The scalar c if a = c*I.
std::optional<Eisenstein> scalar_value(const Mat3& a);
/// Least n >= 1 with a^n scalar, searched up to max_power.
std::optional<int> proj_order(const Mat3& a, int max_power = 12);

/// Whether a and b share an eigenvector over Q(w).  Both must satisfy M^3 = I.
bool has_common_eigenvector(const Mat3& a, const Mat3& b);
/// No common invariant line or plane.
bool irreducible_pair(const Mat3& a, const Mat3& b);

struct HeisenbergReport {
    std::optional<int> order_diagonal;
    std::optional<int> order_permutation;
    std::optional<Eisenstein> commutator_scalar;
    bool irreducible = false;

    bool ok() const;
};

/// The diagonal generator diag(1, w, w^2), or diag(1, w^2, w) when dualized.
Mat3 heisenberg_diagonal(bool dualized);
/// The cyclic permutation sending e_{i+1} to e_i.
Mat3 heisenberg_permutation();
HeisenbergReport verify_heisenberg(bool dualized);

/// diag(1, lambda, lambda^2).
Mat3 omega_phi();
/// The 3-cycle intertwining phi with its twist by lambda.
Mat3 omega_cycle();
/// Whether phi * a = a * (lambda^k * phi) in Z[w][lambda]/(lambda^3 - 1).
bool verify_omega_identity(const Mat3& a, int twist_power = 1);
inline bool verify_omega_identity() { return verify_omega_identity(omega_cycle()); }

}  // namespace birmax
