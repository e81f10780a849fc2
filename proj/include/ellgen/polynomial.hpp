#pragma once

#include <optional>
#include <string>

#include "ellgen/laurent.hpp"

namespace ellgen {

/// Splits p = s^shift * q with q(0) != 0. Returns q (lowest exponent 0).
SPoly strip_monomial(const SPoly& p, long* shift = nullptr);

/// Greatest common divisor of two polynomials over Q, computed by a primitive
/// pseudo-remainder sequence over Z. Inputs are treated as ordinary polynomials
/// after stripping their monomial factor; the result is primitive with a
/// positive leading coefficient (1 when the inputs are coprime).
SPoly poly_gcd(const SPoly& a, const SPoly& b);

/// a / b when b divides a in Q[s, 1/s]; std::nullopt otherwise.
std::optional<SPoly> exact_divide(const SPoly& a, const SPoly& b);

/// The d-th cyclotomic polynomial in s, with the given root order.
SPoly cyclotomic(long d, int root);

/// Canonical rendering: terms by increasing exponent, exponents shown as
/// rationals in y = s^root, e.g. "1 - 2*y^(1/2) + y^3".
std::string render(const SPoly& p);

}  // namespace ellgen
