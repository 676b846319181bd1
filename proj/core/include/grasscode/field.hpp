#pragma once

#include <cstdint>
#include <string>

#include "grasscode/errors.hpp"

namespace grasscode {

// Field elements are polynomials over GF(2) packed into the low m bits of a
// word. The base prime is fixed to 2 throughout.
using FieldElem = std::uint32_t;

constexpr unsigned max_extension_degree = 32;

// Reduction polynomial used for GF(2^m), degree m, bit i = coefficient of x^i.
// Lexicographically smallest irreducible with nonzero constant term per degree;
// the choice is frozen so encodings are reproducible across runs.
std::uint64_t default_reduction_poly(unsigned m);

// Trial-division irreducibility check over GF(2), for m <= 32.
bool is_irreducible_gf2(std::uint64_t poly);

struct FieldSpec {
    unsigned q = 2;  // base prime, always 2
    unsigned m = 1;  // extension degree
    std::uint64_t reduction_poly = 0x3;

    static FieldSpec gf2() { return FieldSpec{2, 1, default_reduction_poly(1)}; }

    // GF(2^m) with the shipped reduction polynomial.
    static FieldSpec gf2m(unsigned m);

    // Explicit reduction polynomial; must be irreducible of degree m.
    static FieldSpec with_poly(unsigned m, std::uint64_t poly);

    std::uint64_t order() const { return std::uint64_t(1) << m; }
    bool operator==(const FieldSpec&) const = default;
};

// Arithmetic in GF(2^m) under a FieldSpec.
class Gf {
public:
    explicit Gf(FieldSpec spec) : spec_(spec) {}

    const FieldSpec& spec() const { return spec_; }
    unsigned m() const { return spec_.m; }

    bool valid(FieldElem a) const { return spec_.m >= 32 || a < (FieldElem(1) << spec_.m); }

    static FieldElem add(FieldElem a, FieldElem b) { return a ^ b; }
    static FieldElem sub(FieldElem a, FieldElem b) { return a ^ b; }

    FieldElem mul(FieldElem a, FieldElem b) const;
    FieldElem inv(FieldElem a) const;
    FieldElem div(FieldElem a, FieldElem b) const { return mul(a, inv(b)); }
    FieldElem pow(FieldElem a, std::uint64_t e) const;

    // x^(q^j), q = 2: j repeated squarings.
    FieldElem frobenius_power(FieldElem x, std::uint64_t j) const;

private:
    FieldSpec spec_;
};

std::string field_elem_to_hex(FieldElem e);
FieldElem field_elem_from_hex(const std::string& s);

} // namespace grasscode
