#include "grasscode/field.hpp"

#include <array>
#include <charconv>
#include <sstream>

namespace grasscode {

namespace {

// bit i of entry [m-1] = coefficient of x^i; index = degree - 1
constexpr std::array<std::uint64_t, 32> k_reduction_table = {
    0x3,        0x7,        0xb,        0x13,       0x25,       0x43,
    0x83,       0x11b,      0x203,      0x409,      0x805,      0x1009,
    0x201b,     0x4021,     0x8003,     0x1002b,    0x20009,    0x40009,
    0x80027,    0x100009,   0x200005,   0x400003,   0x800021,   0x100001b,
    0x2000009,  0x400001b,  0x8000027,  0x10000003, 0x20000005, 0x40000003,
    0x80000009, 0x10000008dULL,
};

int poly_degree(std::uint64_t p) {
    if (p == 0) return -1;
    return 63 - __builtin_clzll(p);
}

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t b) {
    int db = poly_degree(b);
    int da = poly_degree(a);
    while (a != 0 && da >= db) {
        a ^= b << (da - db);
        da = poly_degree(a);
    }
    return a;
}

} // namespace

std::uint64_t default_reduction_poly(unsigned m) {
    if (m < 1 || m > max_extension_degree)
        throw std::invalid_argument("extension degree must be in 1..32, got " + std::to_string(m));
    return k_reduction_table[m - 1];
}

bool is_irreducible_gf2(std::uint64_t poly) {
    int d = poly_degree(poly);
    if (d < 1) return false;
    if (d == 1) return true;
    if ((poly & 1) == 0) return false;  // divisible by x
    // trial division by every polynomial of degree 1..d/2
    for (int dd = 1; dd <= d / 2; ++dd) {
        std::uint64_t lo = std::uint64_t(1) << dd;
        std::uint64_t hi = std::uint64_t(1) << (dd + 1);
        for (std::uint64_t q = lo; q < hi; ++q) {
            if (poly_mod(poly, q) == 0) return false;
        }
    }
    return true;
}

FieldSpec FieldSpec::gf2m(unsigned m) {
    return FieldSpec{2, m, default_reduction_poly(m)};
}

FieldSpec FieldSpec::with_poly(unsigned m, std::uint64_t poly) {
    if (m < 1 || m > max_extension_degree)
        throw std::invalid_argument("extension degree must be in 1..32");
    if (poly_degree(poly) != int(m))
        throw std::invalid_argument("reduction polynomial degree does not match m");
    if (!is_irreducible_gf2(poly))
        throw std::invalid_argument("reduction polynomial is not irreducible over GF(2)");
    return FieldSpec{2, m, poly};
}

FieldElem Gf::mul(FieldElem a, FieldElem b) const {
    if (spec_.m == 1) return a & b;
    std::uint64_t acc = 0;
    std::uint64_t x = a;
    std::uint64_t y = b;
    while (y) {
        if (y & 1) acc ^= x;
        y >>= 1;
        x <<= 1;
    }
    // reduce: degree of acc is at most 2m-2
    const std::uint64_t red = spec_.reduction_poly;
    for (int d = poly_degree(acc); d >= int(spec_.m); d = poly_degree(acc)) {
        acc ^= red << (d - int(spec_.m));
    }
    return FieldElem(acc);
}

FieldElem Gf::pow(FieldElem a, std::uint64_t e) const {
    FieldElem r = 1;
    FieldElem base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

FieldElem Gf::inv(FieldElem a) const {
    if (a == 0) throw std::invalid_argument("inverse of zero field element");
    // a^(2^m - 2)
    return pow(a, spec_.order() - 2);
}

FieldElem Gf::frobenius_power(FieldElem x, std::uint64_t j) const {
    FieldElem r = x;
    // Frobenius has order m; reduce the exponent first.
    j %= spec_.m;
    for (std::uint64_t i = 0; i < j; ++i) r = mul(r, r);
    return r;
}

std::string field_elem_to_hex(FieldElem e) {
    std::ostringstream os;
    os << std::hex << e;
    return os.str();
}

FieldElem field_elem_from_hex(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty field element");
    std::uint32_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v, 16);
    if (ec != std::errc() || p != s.data() + s.size())
        throw std::invalid_argument("bad hex field element: " + s);
    return v;
}

} // namespace grasscode
