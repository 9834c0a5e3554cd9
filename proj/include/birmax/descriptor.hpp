#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include "birmax/conjugacy.hpp"

namespace birmax {

/// Error tied to a position in the query text (1-based).
struct PositionedError : std::runtime_error {
    PositionedError(const std::string& msg, int line, int column);
    int line;
    int column;
};

/// Malformed query text.
struct ParseError : PositionedError {
    using PositionedError::PositionedError;
};

/// Well-formed text that names an impossible object.
struct SemanticError : PositionedError {
    using PositionedError::PositionedError;
};

using Payload = std::variant<VBundle, MfsDescriptor>;

struct Query {
    CurvePtr curve;
    std::optional<Payload> payload;
};

/// Parses `curve ... ; payload`.  With allow_bare_curve the `; payload`
/// part may be omitted.
Query parse_query(const std::string& text, bool allow_bare_curve = false);

/// Parses a Picard class over an existing curve.
PicElement parse_pic(const std::string& text, const CurvePtr& curve);

std::string print_curve(const CurveCtx& curve);
/// Payload text; vector bundles print in normal form.
std::string print_payload(const Payload& p);
std::string print_query(const Query& q);

bool same_query(const Query& a, const Query& b);

}  // namespace birmax
