#include "koszul/poly.hpp"

#include <algorithm>
#include <sstream>

namespace koszul {

const Term& Poly::lead() const
{
    if (t_.empty()) throw InternalError("lead of zero polynomial");
    return t_.front();
}

bool Poly::operator==(const Poly& o) const
{
    if (t_.size() != o.t_.size()) return false;
    for (size_t i = 0; i < t_.size(); ++i)
        if (t_[i].c != o.t_[i].c || t_[i].m != o.t_[i].m) return false;
    return true;
}

Poly poly_from_terms(const PolyRing& R, std::vector<Term> raw)
{
    std::sort(raw.begin(), raw.end(), [](const Term& a, const Term& b) {
        return grevlex_compare(a.m, b.m) > 0;
    });
    const auto& F = R.field();
    std::vector<Term> out;
    for (auto& t : raw) {
        if (!out.empty() && out.back().m == t.m) {
            out.back().c = F.add(out.back().c, t.c);
            if (out.back().c == 0) out.pop_back();
        } else if (t.c != 0) {
            out.push_back(std::move(t));
        }
    }
    return Poly(std::move(out));
}

Poly poly_zero() { return Poly(); }

Poly poly_const(const PolyRing& R, std::uint32_t c)
{
    if (c % R.field().characteristic() == 0) return Poly();
    return Poly({Term{Monomial::one(R.nvars()), c % R.field().characteristic()}});
}

Poly poly_var(const PolyRing& R, int i)
{
    return Poly({Term{Monomial::var(R.nvars(), i), 1}});
}

Poly poly_term(const PolyRing& R, Monomial m, std::uint32_t c)
{
    c %= R.field().characteristic();
    if (c == 0) return Poly();
    (void)R;
    return Poly({Term{std::move(m), c}});
}

// merge sign: out = a + sign * b with sign 1 or -1 folded into field ops
static Poly merge(const PolyRing& R, const Poly& a, const Poly& b, bool subtract)
{
    const auto& F = R.field();
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    while (i < ta.size() && j < tb.size()) {
        int cmp = grevlex_compare(ta[i].m, tb[j].m);
        if (cmp > 0) {
            out.push_back(ta[i++]);
        } else if (cmp < 0) {
            std::uint32_t c = subtract ? F.neg(tb[j].c) : tb[j].c;
            out.push_back(Term{tb[j].m, c});
            ++j;
        } else {
            std::uint32_t c = subtract ? F.sub(ta[i].c, tb[j].c) : F.add(ta[i].c, tb[j].c);
            if (c != 0) out.push_back(Term{ta[i].m, c});
            ++i;
            ++j;
        }
    }
    for (; i < ta.size(); ++i) out.push_back(ta[i]);
    for (; j < tb.size(); ++j) {
        std::uint32_t c = subtract ? F.neg(tb[j].c) : tb[j].c;
        out.push_back(Term{tb[j].m, c});
    }
    return Poly(std::move(out));
}

Poly poly_add(const PolyRing& R, const Poly& a, const Poly& b) { return merge(R, a, b, false); }
Poly poly_sub(const PolyRing& R, const Poly& a, const Poly& b) { return merge(R, a, b, true); }

Poly poly_neg(const PolyRing& R, const Poly& a)
{
    std::vector<Term> out = a.terms();
    for (auto& t : out) t.c = R.field().neg(t.c);
    return Poly(std::move(out));
}

Poly poly_scale(const PolyRing& R, const Poly& a, std::uint32_t c)
{
    c %= R.field().characteristic();
    if (c == 0) return Poly();
    if (c == 1) return a;
    std::vector<Term> out = a.terms();
    for (auto& t : out) t.c = R.field().mul(t.c, c);
    return Poly(std::move(out));
}

Poly poly_mul_term(const PolyRing& R, const Term& t, const Poly& a)
{
    if (t.c == 0) return Poly();
    std::vector<Term> out;
    out.reserve(a.size());
    // multiplying by a fixed monomial preserves grevlex order
    for (const auto& s : a.terms())
        out.push_back(Term{mono_mul(t.m, s.m), R.field().mul(t.c, s.c)});
    return Poly(std::move(out));
}

Poly poly_mul(const PolyRing& R, const Poly& a, const Poly& b)
{
    Poly acc;
    for (const auto& t : a.terms())
        acc = poly_add(R, acc, poly_mul_term(R, t, b));
    return acc;
}

Poly poly_pow(const PolyRing& R, const Poly& a, int k)
{
    if (k < 0) throw InvalidParameter("negative power");
    Poly acc = poly_const(R, 1);
    for (int i = 0; i < k; ++i) acc = poly_mul(R, acc, a);
    return acc;
}

Poly poly_axpy(const PolyRing& R, const Poly& a, const Term& t, const Poly& b)
{
    return poly_sub(R, a, poly_mul_term(R, t, b));
}

Poly poly_monic(const PolyRing& R, const Poly& a)
{
    if (a.is_zero()) return a;
    return poly_scale(R, a, R.field().inv(a.lead().c));
}

bool poly_is_homogeneous(const Poly& a)
{
    if (a.is_zero()) return true;
    int d = a.terms().front().m.deg;
    for (const auto& t : a.terms())
        if (t.m.deg != d) return false;
    return true;
}

std::optional<int> poly_degree_checked(const Poly& a)
{
    if (a.is_zero()) return std::nullopt;
    if (!poly_is_homogeneous(a)) throw NotHomogeneous("inhomogeneous polynomial");
    return a.terms().front().m.deg;
}

std::optional<int> poly_top_degree(const Poly& a)
{
    if (a.is_zero()) return std::nullopt;
    int d = 0;
    for (const auto& t : a.terms()) d = std::max(d, t.m.deg);
    return d;
}

Poly poly_exact_div(const PolyRing& R, const Poly& a, const Poly& b)
{
    if (b.is_zero()) throw DivisionByZero();
    Poly rem = a;
    std::vector<Term> q;
    const auto& F = R.field();
    std::uint32_t lead_inv = F.inv(b.lead().c);
    while (!rem.is_zero()) {
        const Term& lt = rem.lead();
        if (!mono_divides(b.lead().m, lt.m))
            throw InternalError("poly_exact_div: division not exact");
        Term t{mono_div(lt.m, b.lead().m), F.mul(lt.c, lead_inv)};
        q.push_back(t);
        rem = poly_axpy(R, rem, t, b);
    }
    return poly_from_terms(R, std::move(q));
}

Poly substitute_linear(const PolyRing& R, const Poly& a,
                       const std::vector<std::vector<std::uint32_t>>& M)
{
    int n = R.nvars();
    if ((int)M.size() != n) throw InvalidParameter("substitution matrix has wrong shape");
    std::vector<Poly> images(n);
    for (int j = 0; j < n; ++j) {
        if ((int)M[j].size() != n) throw InvalidParameter("substitution matrix has wrong shape");
        std::vector<Term> ts;
        for (int k = 0; k < n; ++k)
            if (M[j][k] % R.field().characteristic() != 0)
                ts.push_back(Term{Monomial::var(n, k), M[j][k] % R.field().characteristic()});
        images[j] = poly_from_terms(R, std::move(ts));
    }
    // cache powers of each image up to the largest exponent that occurs
    std::vector<std::vector<Poly>> pow(n);
    for (int j = 0; j < n; ++j) pow[j].push_back(poly_const(R, 1));
    Poly acc;
    for (const auto& t : a.terms()) {
        Poly prod = poly_const(R, t.c);
        for (int j = 0; j < n && !prod.is_zero(); ++j) {
            int e = t.m.e[j];
            while ((int)pow[j].size() <= e)
                pow[j].push_back(poly_mul(R, pow[j].back(), images[j]));
            if (e > 0) prod = poly_mul(R, prod, pow[j][e]);
        }
        acc = poly_add(R, acc, prod);
    }
    return acc;
}

std::string poly_str(const PolyRing& R, const Poly& a)
{
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : a.terms()) {
        if (!first) os << " + ";
        first = false;
        if (t.m.is_one()) {
            os << t.c;
        } else if (t.c == 1) {
            os << mono_str(R, t.m);
        } else {
            os << t.c << "*" << mono_str(R, t.m);
        }
    }
    return os.str();
}

} // namespace koszul
