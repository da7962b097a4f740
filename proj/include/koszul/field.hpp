#pragma once

#include <cstdint>

#include "koszul/errors.hpp"

namespace koszul {

// Exact arithmetic in GF(p), p an odd prime below 2^32. Values are canonical
// residues in [0, p); every operation reduces its result.
class PrimeField {
public:
    static constexpr std::uint32_t kDefaultCharacteristic = 32003;

    explicit PrimeField(std::uint32_t p = kDefaultCharacteristic);

    std::uint32_t characteristic() const { return p_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const
    {
        std::uint32_t s = a + b;
        return s >= p_ || s < a ? s - p_ : s;
    }

    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const
    {
        return a >= b ? a - b : a + (p_ - b);
    }

    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const
    {
        return static_cast<std::uint32_t>((std::uint64_t)a * b % p_);
    }

    // Multiplicative inverse by extended Euclid.
    std::uint32_t inv(std::uint32_t a) const;

    std::uint32_t div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }

    std::uint32_t reduce_int(long long v) const
    {
        long long r = v % (long long)p_;
        if (r < 0) r += p_;
        return static_cast<std::uint32_t>(r);
    }

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }
    bool operator!=(const PrimeField& o) const { return p_ != o.p_; }

private:
    std::uint32_t p_;
};

inline void require_same_field(const PrimeField& a, const PrimeField& b)
{
    if (a != b) throw FieldMismatch();
}

// A field element that remembers its characteristic. The engine's inner loops
// carry raw residues plus a PrimeField; this type is the checked boundary API.
struct FieldElem {
    std::uint32_t value = 0;
    std::uint32_t p = PrimeField::kDefaultCharacteristic;
};

enum class FieldOp { Add, Sub, Mul, Div };

FieldElem field_arith(FieldElem a, FieldElem b, FieldOp op);

bool is_prime_u32(std::uint32_t p);

} // namespace koszul
