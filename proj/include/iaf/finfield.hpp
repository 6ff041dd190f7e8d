#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "iaf/errors.hpp"

namespace iaf::finfield {

using Residue = std::uint32_t;

// An element of F_{p^n}: n residues mod p, little-endian polynomial
// coefficients (coeffs[i] multiplies X^i). Always fully reduced.
struct FieldElement {
    std::vector<Residue> coeffs;

    bool operator==(const FieldElement&) const = default;
};

// Exact arithmetic in F_{p^n}, q = p^n <= 2^20. The modulus is the
// lexicographically least monic irreducible polynomial of degree n over
// F_p (coefficients compared low-degree-first); for n = 1 it is X.
//
// Canonical element order: index(a) = sum coeffs[i] * p^i, i.e. counting
// order with the constant coefficient as the least significant digit.
// F_4 enumerates as 0, 1, X, X+1.
class Field {
public:
    static constexpr std::uint64_t kMaxQ = 1u << 20;

    // Errors: NotPrime, DegreeZero, Overflow.
    static Field make(std::uint64_t p, unsigned n);

    std::uint64_t p() const { return p_; }
    unsigned degree() const { return n_; }
    std::uint64_t q() const { return q_; }
    // Monic, length degree+1, little-endian.
    const std::vector<Residue>& modulus() const { return modulus_; }

    FieldElement zero() const;
    FieldElement one() const;
    // Reduces v mod p and embeds it as a constant polynomial.
    FieldElement from_integer(std::int64_t v) const;

    FieldElement element(std::uint64_t index) const;
    std::uint64_t index_of(const FieldElement& a) const;

    FieldElement add(const FieldElement& a, const FieldElement& b) const;
    FieldElement sub(const FieldElement& a, const FieldElement& b) const;
    FieldElement neg(const FieldElement& a) const;
    FieldElement mul(const FieldElement& a, const FieldElement& b) const;
    // Error: ZeroInverse.
    FieldElement inv(const FieldElement& a) const;
    FieldElement pow(const FieldElement& a, std::uint64_t e) const;

    bool is_zero(const FieldElement& a) const;

    // True iff a != 0 and a = b^2 for some b. Euler criterion for odd q;
    // in characteristic 2 every element is a square.
    bool is_nonzero_square(const FieldElement& a) const;

    // Least alpha (canonical order) with alpha^2 = -1, if one exists.
    // Present iff q % 4 == 1 or p == 2 (where -1 = 1); absent for
    // q % 4 == 3.
    std::optional<FieldElement> sqrt_of_minus_one() const;

    // All q elements in canonical order.
    std::vector<FieldElement> enumerate() const;

    // "c0,c1,..." low-degree-first; prime fields print a bare integer.
    std::string to_string(const FieldElement& a) const;
    FieldElement parse(const std::string& text) const;

    // "p" or "p^n".
    std::string q_string() const;

    bool operator==(const Field&) const = default;

private:
    Field() = default;

    // Error: FieldMismatch when a is not a reduced element of this field.
    void check(const FieldElement& a) const;

    std::uint64_t p_ = 0;
    unsigned n_ = 0;
    std::uint64_t q_ = 0;
    std::vector<Residue> modulus_;
};

// True for prime p (deterministic trial division; inputs are < 2^20).
bool is_prime(std::uint64_t p);

// Factors q as p^n with p prime, if q is a prime power >= 2.
std::optional<std::pair<std::uint64_t, unsigned>> factor_prime_power(std::uint64_t q);

}  // namespace iaf::finfield
