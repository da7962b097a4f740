#include "koszul/field.hpp"

namespace koszul {

bool is_prime_u32(std::uint32_t p)
{
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::uint64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p)
{
    if (!is_prime_u32(p)) throw InvalidParameter("characteristic " + std::to_string(p) + " is not prime");
    if (p == 2) throw InvalidParameter("characteristic must be an odd prime");
}

std::uint32_t PrimeField::inv(std::uint32_t a) const
{
    if (a == 0) throw DivisionByZero();
    std::int64_t r0 = p_, r1 = a, t0 = 0, t1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1;
        std::int64_t t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    // r0 == gcd(p, a) == 1 since p prime and a != 0 mod p
    if (t0 < 0) t0 += p_;
    return static_cast<std::uint32_t>(t0);
}

FieldElem field_arith(FieldElem a, FieldElem b, FieldOp op)
{
    if (a.p != b.p) throw FieldMismatch();
    PrimeField F(a.p);
    std::uint32_t r = 0;
    switch (op) {
    case FieldOp::Add: r = F.add(a.value, b.value); break;
    case FieldOp::Sub: r = F.sub(a.value, b.value); break;
    case FieldOp::Mul: r = F.mul(a.value, b.value); break;
    case FieldOp::Div: r = F.div(a.value, b.value); break;
    }
    return FieldElem{r, a.p};
}

} // namespace koszul
