#include "koszul/freemod.hpp"

#include <algorithm>
#include <sstream>

namespace koszul {

OrderPtr ModuleOrder::pot()
{
    return std::shared_ptr<const ModuleOrder>(new ModuleOrder(Kind::POT));
}

OrderPtr ModuleOrder::top()
{
    return std::shared_ptr<const ModuleOrder>(new ModuleOrder(Kind::TOP));
}

OrderPtr ModuleOrder::schreyer(std::vector<std::pair<Monomial, int>> gen_leads, OrderPtr base)
{
    if (!base) throw InternalError("schreyer order needs a base order");
    auto o = std::shared_ptr<ModuleOrder>(new ModuleOrder(Kind::Schreyer));
    o->gen_leads_ = std::move(gen_leads);
    o->base_ = std::move(base);
    return o;
}

OrderPtr ModuleOrder::elim(int primary_rank, OrderPtr primary)
{
    if (!primary) throw InternalError("elim order needs a primary order");
    auto o = std::shared_ptr<ModuleOrder>(new ModuleOrder(Kind::Elim));
    o->primary_rank_ = primary_rank;
    o->base_ = std::move(primary);
    return o;
}

int ModuleOrder::compare(const Monomial& ma, int ca, const Monomial& mb, int cb) const
{
    switch (kind_) {
    case Kind::POT: {
        if (ca != cb) return ca < cb ? 1 : -1;
        return grevlex_compare(ma, mb);
    }
    case Kind::TOP: {
        int cmp = grevlex_compare(ma, mb);
        if (cmp != 0) return cmp;
        if (ca != cb) return ca < cb ? 1 : -1;
        return 0;
    }
    case Kind::Schreyer: {
        const auto& la = gen_leads_[ca];
        const auto& lb = gen_leads_[cb];
        int cmp = base_->compare(mono_mul(ma, la.first), la.second,
                                 mono_mul(mb, lb.first), lb.second);
        if (cmp != 0) return cmp;
        if (ca != cb) return ca < cb ? 1 : -1;
        return 0;
    }
    case Kind::Elim: {
        bool pa = ca < primary_rank_;
        bool pb = cb < primary_rank_;
        if (pa != pb) return pa ? 1 : -1;
        if (pa) return base_->compare(ma, ca, mb, cb);
        int cmp = grevlex_compare(ma, mb);
        if (cmp != 0) return cmp;
        if (ca != cb) return ca < cb ? 1 : -1;
        return 0;
    }
    }
    throw InternalError("unreachable order kind");
}

const ModTerm& FreeElem::lead() const
{
    if (t_.empty()) throw InternalError("lead of zero element");
    return t_.front();
}

bool FreeElem::operator==(const FreeElem& o) const
{
    if (t_.size() != o.t_.size()) return false;
    for (size_t i = 0; i < t_.size(); ++i)
        if (t_[i].c != o.t_[i].c || t_[i].comp != o.t_[i].comp || t_[i].m != o.t_[i].m)
            return false;
    return true;
}

FreeElem fe_from_terms(const PolyRing& R, const ModuleOrder& ord, std::vector<ModTerm> raw)
{
    std::sort(raw.begin(), raw.end(), [&](const ModTerm& a, const ModTerm& b) {
        int cmp = ord.compare(a.m, a.comp, b.m, b.comp);
        if (cmp != 0) return cmp > 0;
        return a.comp < b.comp; // stable fallback for equal monomials
    });
    const auto& F = R.field();
    std::vector<ModTerm> out;
    for (auto& t : raw) {
        if (!out.empty() && out.back().comp == t.comp && out.back().m == t.m) {
            out.back().c = F.add(out.back().c, t.c);
            if (out.back().c == 0) out.pop_back();
        } else if (t.c % F.characteristic() != 0) {
            t.c %= F.characteristic();
            out.push_back(std::move(t));
        }
    }
    return FreeElem(std::move(out));
}

FreeElem fe_gen(const PolyRing& R, int comp)
{
    return FreeElem({ModTerm{Monomial::one(R.nvars()), comp, 1}});
}

static FreeElem fe_merge(const PolyRing& R, const ModuleOrder& ord, const FreeElem& a,
                         const FreeElem& b, bool subtract)
{
    const auto& F = R.field();
    std::vector<ModTerm> out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    while (i < ta.size() && j < tb.size()) {
        int cmp = ord.compare(ta[i].m, ta[i].comp, tb[j].m, tb[j].comp);
        if (cmp == 0 && ta[i].comp != tb[j].comp)
            cmp = ta[i].comp < tb[j].comp ? 1 : -1;
        if (cmp > 0) {
            out.push_back(ta[i++]);
        } else if (cmp < 0) {
            std::uint32_t c = subtract ? F.neg(tb[j].c) : tb[j].c;
            out.push_back(ModTerm{tb[j].m, tb[j].comp, c});
            ++j;
        } else {
            std::uint32_t c = subtract ? F.sub(ta[i].c, tb[j].c) : F.add(ta[i].c, tb[j].c);
            if (c != 0) out.push_back(ModTerm{ta[i].m, ta[i].comp, c});
            ++i;
            ++j;
        }
    }
    for (; i < ta.size(); ++i) out.push_back(ta[i]);
    for (; j < tb.size(); ++j) {
        std::uint32_t c = subtract ? F.neg(tb[j].c) : tb[j].c;
        out.push_back(ModTerm{tb[j].m, tb[j].comp, c});
    }
    return FreeElem(std::move(out));
}

FreeElem fe_add(const PolyRing& R, const ModuleOrder& ord, const FreeElem& a, const FreeElem& b)
{
    return fe_merge(R, ord, a, b, false);
}

FreeElem fe_sub(const PolyRing& R, const ModuleOrder& ord, const FreeElem& a, const FreeElem& b)
{
    return fe_merge(R, ord, a, b, true);
}

FreeElem fe_neg(const PolyRing& R, const FreeElem& a)
{
    std::vector<ModTerm> out = a.terms();
    for (auto& t : out) t.c = R.field().neg(t.c);
    return FreeElem(std::move(out));
}

FreeElem fe_scale(const PolyRing& R, const FreeElem& a, std::uint32_t c)
{
    c %= R.field().characteristic();
    if (c == 0) return FreeElem();
    if (c == 1) return a;
    std::vector<ModTerm> out = a.terms();
    for (auto& t : out) t.c = R.field().mul(t.c, c);
    return FreeElem(std::move(out));
}

FreeElem fe_mul_term(const PolyRing& R, const Term& t, const FreeElem& a)
{
    if (t.c == 0) return FreeElem();
    std::vector<ModTerm> out;
    out.reserve(a.size());
    // order compatibility with multiplication keeps the terms sorted
    for (const auto& s : a.terms())
        out.push_back(ModTerm{mono_mul(t.m, s.m), s.comp, R.field().mul(t.c, s.c)});
    return FreeElem(std::move(out));
}

FreeElem fe_axpy(const PolyRing& R, const ModuleOrder& ord, const FreeElem& a, const Term& t,
                 const FreeElem& b)
{
    return fe_sub(R, ord, a, fe_mul_term(R, t, b));
}

FreeElem fe_monic(const PolyRing& R, const FreeElem& a)
{
    if (a.is_zero()) return a;
    return fe_scale(R, a, R.field().inv(a.lead().c));
}

FreeElem fe_from_polys(const PolyRing& R, const ModuleOrder& ord, const std::vector<Poly>& comps)
{
    std::vector<ModTerm> raw;
    for (int i = 0; i < (int)comps.size(); ++i)
        for (const auto& t : comps[i].terms())
            raw.push_back(ModTerm{t.m, i, t.c});
    return fe_from_terms(R, ord, std::move(raw));
}

std::vector<Poly> fe_to_polys(const PolyRing& R, const FreeElem& a, int rank)
{
    std::vector<std::vector<Term>> buckets(rank);
    for (const auto& t : a.terms()) {
        if (t.comp < 0 || t.comp >= rank) throw InternalError("component out of range");
        buckets[t.comp].push_back(Term{t.m, t.c});
    }
    std::vector<Poly> out;
    out.reserve(rank);
    for (auto& b : buckets) out.push_back(poly_from_terms(R, std::move(b)));
    return out;
}

Poly fe_component(const PolyRing& R, const FreeElem& a, int comp)
{
    std::vector<Term> ts;
    for (const auto& t : a.terms())
        if (t.comp == comp) ts.push_back(Term{t.m, t.c});
    return poly_from_terms(R, std::move(ts));
}

bool fe_is_homogeneous(const FreeModule& F, const FreeElem& a)
{
    if (a.is_zero()) return true;
    int d = a.terms().front().m.deg + F.gen_degs[a.terms().front().comp];
    for (const auto& t : a.terms())
        if (t.m.deg + F.gen_degs[t.comp] != d) return false;
    return true;
}

std::optional<int> fe_degree_checked(const FreeModule& F, const FreeElem& a)
{
    if (a.is_zero()) return std::nullopt;
    if (!fe_is_homogeneous(F, a)) throw NotHomogeneous("inhomogeneous module element");
    return a.terms().front().m.deg + F.gen_degs[a.terms().front().comp];
}

std::string fe_str(const PolyRing& R, const FreeElem& a)
{
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : a.terms()) {
        if (!first) os << " + ";
        first = false;
        if (t.c != 1 || t.m.is_one())
            os << t.c << "*";
        if (!t.m.is_one()) os << mono_str(R, t.m) << "*";
        os << "e" << t.comp;
    }
    return os.str();
}

} // namespace koszul
