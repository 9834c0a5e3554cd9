#pragma once

#include <optional>
#include <string>

namespace birmax {

/// Isomorphism type of an automorphism group, as far as it is tabulated.
struct GroupTag {
    enum class Kind {
        Trivial,
        FiniteZ3,
        FiniteZ3Sq,
        FiniteZ2r,
        Gm,
        GL2,
        PGL2,
        PGL3,
        GmSemidirectGa,
        EllipticCurve,
        TorusDim,
        Unknown,
    };

    Kind kind = Kind::Unknown;
    int param = 0;  // r for FiniteZ2r, n for Gm and TorusDim

    static GroupTag trivial() { return {Kind::Trivial}; }
    static GroupTag z3() { return {Kind::FiniteZ3}; }
    static GroupTag z3_squared() { return {Kind::FiniteZ3Sq}; }
    static GroupTag z2_power(int r) { return {Kind::FiniteZ2r, r}; }
    static GroupTag gm(int n) { return {Kind::Gm, n}; }
    static GroupTag gl2() { return {Kind::GL2}; }
    static GroupTag pgl2() { return {Kind::PGL2}; }
    static GroupTag pgl3() { return {Kind::PGL3}; }
    static GroupTag gm_semidirect_ga() { return {Kind::GmSemidirectGa}; }
    static GroupTag elliptic_curve() { return {Kind::EllipticCurve}; }
    static GroupTag torus(int n) { return {Kind::TorusDim, n}; }
    static GroupTag unknown() { return {Kind::Unknown}; }

    /// Dimension as an algebraic group; -1 when unknown.
    int dim() const;
    /// Group order for finite tags.
    std::optional<int> finite_order() const;
    std::string to_string() const;

    bool operator==(const GroupTag&) const = default;
};

}  // namespace birmax
