#include "koszul/gb.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace koszul {

static NFResult nf_impl(const PolyRing& R, const ModuleOrder& ord, const FreeElem& f,
                        const std::vector<FreeElem>& basis, bool want_q)
{
    const auto& F = R.field();
    std::vector<std::vector<Term>> q;
    if (want_q) q.resize(basis.size());
    std::vector<ModTerm> acc; // settled irreducible terms, stays descending
    // inputs may carry a different term order (e.g. out of an elimination
    // computation), so re-sort under ours before trusting lead()
    FreeElem rem = fe_from_terms(R, ord, f.terms());
    while (!rem.is_zero()) {
        const ModTerm lt = rem.lead();
        bool reduced = false;
        for (size_t k = 0; k < basis.size(); ++k) {
            if (basis[k].is_zero()) continue;
            const ModTerm& bl = basis[k].lead();
            if (bl.comp != lt.comp || !mono_divides(bl.m, lt.m)) continue;
            Term t{mono_div(lt.m, bl.m), F.div(lt.c, bl.c)};
            if (want_q) q[k].push_back(t);
            rem = fe_axpy(R, ord, rem, t, basis[k]);
            reduced = true;
            break;
        }
        if (!reduced) {
            acc.push_back(lt);
            std::vector<ModTerm> rest(rem.terms().begin() + 1, rem.terms().end());
            rem = FreeElem(std::move(rest));
        }
    }
    NFResult res;
    res.rem = FreeElem(std::move(acc));
    if (want_q) {
        res.quotients.reserve(basis.size());
        for (auto& terms : q) res.quotients.push_back(poly_from_terms(R, std::move(terms)));
    }
    return res;
}

FreeElem normal_form(const PolyRing& R, const ModuleOrder& ord, const FreeElem& f,
                     const std::vector<FreeElem>& basis)
{
    return nf_impl(R, ord, f, basis, false).rem;
}

NFResult nf_with_quotients(const PolyRing& R, const ModuleOrder& ord, const FreeElem& f,
                           const std::vector<FreeElem>& basis)
{
    return nf_impl(R, ord, f, basis, true);
}

namespace {

struct SPair {
    int i, j;
    Monomial lcm;
};

} // namespace

std::vector<FreeElem> interreduce_gb(const PolyRing& R, const ModuleOrder& ord,
                                     std::vector<FreeElem> elems)
{
    std::vector<FreeElem> in;
    for (auto& g : elems)
        if (!g.is_zero()) in.push_back(fe_monic(R, g));
    std::stable_sort(in.begin(), in.end(), [&](const FreeElem& a, const FreeElem& b) {
        return ord.compare(a.lead().m, a.lead().comp, b.lead().m, b.lead().comp) < 0;
    });
    // minimal: processing leads from small to large, a lead is redundant iff
    // some already kept lead divides it
    std::vector<FreeElem> kept;
    for (auto& g : in) {
        bool redundant = false;
        for (const auto& h : kept)
            if (h.lead().comp == g.lead().comp && mono_divides(h.lead().m, g.lead().m)) {
                redundant = true;
                break;
            }
        if (!redundant) kept.push_back(std::move(g));
    }
    // tail reduction: leads are pairwise irreducible and never change, so a
    // single pass leaves every term irreducible against the other leads
    for (size_t i = 0; i < kept.size(); ++i) {
        std::vector<FreeElem> others;
        others.reserve(kept.size() - 1);
        for (size_t j = 0; j < kept.size(); ++j)
            if (j != i) others.push_back(kept[j]);
        kept[i] = normal_form(R, ord, kept[i], others);
    }
    std::sort(kept.begin(), kept.end(), [&](const FreeElem& a, const FreeElem& b) {
        return ord.compare(a.lead().m, a.lead().comp, b.lead().m, b.lead().comp) > 0;
    });
    return kept;
}

std::vector<FreeElem> buchberger(const PolyRing& R, const FreeModule& F, const ModuleOrder& ord,
                                 const std::vector<FreeElem>& gens)
{
    std::vector<FreeElem> basis;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        if (!fe_is_homogeneous(F, g)) throw NotHomogeneous("inhomogeneous generator");
        // re-sort under the working order: generators may come from a
        // computation under a different one
        basis.push_back(fe_monic(R, fe_from_terms(R, ord, g.terms())));
    }

    std::map<int, std::vector<SPair>> queue; // degree -> FIFO
    auto push_pairs = [&](int j) {
        for (int i = 0; i < j; ++i) {
            if (basis[i].lead().comp != basis[j].lead().comp) continue;
            Monomial l = mono_lcm(basis[i].lead().m, basis[j].lead().m);
            int deg = l.deg + F.gen_degs[basis[i].lead().comp];
            queue[deg].push_back(SPair{i, j, std::move(l)});
        }
    };
    for (int j = 0; j < (int)basis.size(); ++j) push_pairs(j);

    std::set<std::pair<int, int>> done;
    const bool rank1 = F.rank() == 1;

    while (!queue.empty()) {
        auto it = queue.begin();
        SPair p = it->second.front();
        it->second.erase(it->second.begin());
        if (it->second.empty()) queue.erase(it);
        done.insert({p.i, p.j});

        const Monomial& lmi = basis[p.i].lead().m;
        const Monomial& lmj = basis[p.j].lead().m;
        // product criterion is only sound for ideals
        if (rank1 && mono_coprime(lmi, lmj)) continue;
        // chain criterion
        bool skip = false;
        for (int k = 0; k < (int)basis.size() && !skip; ++k) {
            if (k == p.i || k == p.j) continue;
            if (basis[k].lead().comp != basis[p.i].lead().comp) continue;
            if (!mono_divides(basis[k].lead().m, p.lcm)) continue;
            if (mono_lcm(lmi, basis[k].lead().m) == p.lcm) continue;
            if (mono_lcm(lmj, basis[k].lead().m) == p.lcm) continue;
            auto key = [](int a, int b) { return std::pair<int, int>(std::min(a, b), std::max(a, b)); };
            if (done.count(key(p.i, k)) && done.count(key(p.j, k))) skip = true;
        }
        if (skip) continue;

        Term ti{mono_div(p.lcm, lmi), 1};
        Term tj{mono_div(p.lcm, lmj), 1};
        FreeElem s = fe_sub(R, ord, fe_mul_term(R, ti, basis[p.i]), fe_mul_term(R, tj, basis[p.j]));
        FreeElem r = normal_form(R, ord, s, basis);
        if (!r.is_zero()) {
            basis.push_back(fe_monic(R, r));
            push_pairs((int)basis.size() - 1);
        }
    }
    return interreduce_gb(R, ord, std::move(basis));
}

bool gb_contains(const PolyRing& R, const ModuleOrder& ord, const std::vector<FreeElem>& gb,
                 const FreeElem& v)
{
    return normal_form(R, ord, v, gb).is_zero();
}

TaggedGB tagged_gb(const PolyRing& R, const FreeModule& G, const FreeModule& T,
                   const std::vector<std::pair<FreeElem, FreeElem>>& graph, OrderPtr g_order)
{
    if (!g_order) g_order = ModuleOrder::pot();
    TaggedGB tg;
    tg.rank_g = G.rank();
    tg.ambient.gen_degs = G.gen_degs;
    tg.ambient.gen_degs.insert(tg.ambient.gen_degs.end(), T.gen_degs.begin(), T.gen_degs.end());
    tg.ord = ModuleOrder::elim(tg.rank_g, g_order);

    std::vector<FreeElem> gens;
    gens.reserve(graph.size());
    for (const auto& [w, u] : graph) {
        std::vector<ModTerm> ts;
        for (const auto& t : w.terms()) ts.push_back(t);
        for (const auto& t : u.terms()) ts.push_back(ModTerm{t.m, t.comp + tg.rank_g, t.c});
        gens.push_back(fe_from_terms(R, *tg.ord, std::move(ts)));
    }
    tg.elems = buchberger(R, tg.ambient, *tg.ord, gens);
    return tg;
}

std::pair<FreeElem, FreeElem> tagged_nf(const PolyRing& R, const TaggedGB& tg, const FreeElem& v)
{
    for (const auto& t : v.terms())
        if (t.comp >= tg.rank_g) throw InternalError("tagged_nf: input not in the G block");
    FreeElem r = normal_form(R, *tg.ord, v, tg.elems);
    std::vector<ModTerm> gpart, tpart;
    for (const auto& t : r.terms()) {
        if (t.comp < tg.rank_g)
            gpart.push_back(t);
        else
            tpart.push_back(ModTerm{t.m, t.comp - tg.rank_g, t.c});
    }
    // within one block the elimination order keeps terms sorted
    return {FreeElem(std::move(gpart)), FreeElem(std::move(tpart))};
}

bool tagged_contains(const PolyRing& R, const TaggedGB& tg, const FreeElem& v)
{
    return tagged_nf(R, tg, v).first.is_zero();
}

std::optional<FreeElem> tagged_express(const PolyRing& R, const TaggedGB& tg, const FreeElem& v)
{
    auto [r, s] = tagged_nf(R, tg, v);
    if (!r.is_zero()) return std::nullopt;
    // (v, 0) reduced to (0, s) means v = -(s applied to the w_i)
    return fe_neg(R, s);
}

std::vector<FreeElem> tagged_pure(const PolyRing& R, const TaggedGB& tg)
{
    (void)R;
    std::vector<FreeElem> out;
    for (const auto& g : tg.elems) {
        if (g.lead().comp < tg.rank_g) continue;
        std::vector<ModTerm> ts;
        for (const auto& t : g.terms()) {
            if (t.comp < tg.rank_g)
                throw InternalError("tag-led element with a G term");
            ts.push_back(ModTerm{t.m, t.comp - tg.rank_g, t.c});
        }
        out.push_back(FreeElem(std::move(ts)));
    }
    return out;
}

void sort_for_schreyer(const PolyRing& R, std::vector<FreeElem>& gb)
{
    (void)R;
    std::stable_sort(gb.begin(), gb.end(), [](const FreeElem& a, const FreeElem& b) {
        if (a.lead().comp != b.lead().comp) return a.lead().comp < b.lead().comp;
        return lex_compare(a.lead().m, b.lead().m) > 0;
    });
}

SchreyerLevel schreyer_syzygies(const PolyRing& R, const FreeModule& F, OrderPtr ordF,
                                const std::vector<FreeElem>& gb)
{
    SchreyerLevel lv;
    std::vector<std::pair<Monomial, int>> leads;
    for (const auto& g : gb) {
        if (g.is_zero()) throw InternalError("zero element in Groebner basis");
        auto d = fe_degree_checked(F, g);
        lv.G.gen_degs.push_back(*d);
        leads.emplace_back(g.lead().m, g.lead().comp);
    }
    lv.ord = ModuleOrder::schreyer(std::move(leads), ordF);

    const auto& Fld = R.field();
    for (int i = 0; i < (int)gb.size(); ++i) {
        for (int j = i + 1; j < (int)gb.size(); ++j) {
            if (gb[i].lead().comp != gb[j].lead().comp) continue;
            Monomial l = mono_lcm(gb[i].lead().m, gb[j].lead().m);
            Term ti{mono_div(l, gb[i].lead().m), 1};
            Term tj{mono_div(l, gb[j].lead().m), 1};
            FreeElem s = fe_sub(R, *ordF, fe_mul_term(R, ti, gb[i]), fe_mul_term(R, tj, gb[j]));
            NFResult nf = nf_with_quotients(R, *ordF, s, gb);
            if (!nf.rem.is_zero())
                throw InternalError("S-element did not reduce to zero over a Groebner basis");
            std::vector<ModTerm> ts;
            ts.push_back(ModTerm{ti.m, i, 1});
            ts.push_back(ModTerm{tj.m, j, Fld.neg(1)});
            for (int k = 0; k < (int)gb.size(); ++k)
                for (const auto& t : nf.quotients[k].terms())
                    ts.push_back(ModTerm{t.m, k, Fld.neg(t.c)});
            lv.syz.push_back(fe_from_terms(R, *lv.ord, std::move(ts)));
        }
    }
    lv.syz = interreduce_gb(R, *lv.ord, std::move(lv.syz));
    return lv;
}

FreeElem poly_as_fe(const Poly& p)
{
    std::vector<ModTerm> ts;
    ts.reserve(p.size());
    for (const auto& t : p.terms()) ts.push_back(ModTerm{t.m, 0, t.c});
    return FreeElem(std::move(ts));
}

Poly fe_as_poly(const PolyRing& R, const FreeElem& v)
{
    std::vector<Term> ts;
    ts.reserve(v.size());
    for (const auto& t : v.terms()) {
        if (t.comp != 0) throw InternalError("fe_as_poly: rank > 1");
        ts.push_back(Term{t.m, t.c});
    }
    return poly_from_terms(R, std::move(ts));
}

static FreeModule rank1()
{
    return FreeModule{{0}};
}

Ideal make_ideal(const PolyRing& R, std::vector<Poly> gens)
{
    Ideal I;
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        poly_degree_checked(g); // homogeneity
        I.gens.push_back(std::move(g));
    }
    std::vector<FreeElem> fes;
    for (const auto& g : I.gens) fes.push_back(poly_as_fe(g));
    auto gb = buchberger(R, rank1(), *ModuleOrder::pot(), fes);
    for (const auto& g : gb) I.gb.push_back(fe_as_poly(R, g));
    return I;
}

bool ideal_is_zero(const Ideal& I) { return I.gb.empty(); }

bool ideal_is_unit(const Ideal& I)
{
    return I.gb.size() == 1 && I.gb[0].lead().m.is_one();
}

bool ideal_contains(const PolyRing& R, const Ideal& I, const Poly& f)
{
    return ideal_nf(R, I, f).is_zero();
}

bool ideal_contains_ideal(const PolyRing& R, const Ideal& I, const Ideal& J)
{
    for (const auto& g : J.gb)
        if (!ideal_contains(R, I, g)) return false;
    return true;
}

bool ideal_equal(const PolyRing& R, const Ideal& I, const Ideal& J)
{
    (void)R; // reduced monic GBs are canonical
    return I.gb == J.gb;
}

Poly ideal_nf(const PolyRing& R, const Ideal& I, const Poly& f)
{
    std::vector<FreeElem> gb;
    for (const auto& g : I.gb) gb.push_back(poly_as_fe(g));
    return fe_as_poly(R, normal_form(R, *ModuleOrder::pot(), poly_as_fe(f), gb));
}

Ideal ideal_sum(const PolyRing& R, const Ideal& I, const Ideal& J)
{
    std::vector<Poly> gens = I.gens;
    gens.insert(gens.end(), J.gens.begin(), J.gens.end());
    return make_ideal(R, std::move(gens));
}

Ideal ideal_product(const PolyRing& R, const Ideal& I, const Ideal& J)
{
    std::vector<Poly> gens;
    for (const auto& f : I.gens)
        for (const auto& g : J.gens) gens.push_back(poly_mul(R, f, g));
    return make_ideal(R, std::move(gens));
}

Ideal ideal_power(const PolyRing& R, const Ideal& I, int k)
{
    if (k < 0) throw InvalidParameter("negative ideal power");
    if (k == 0) return make_ideal(R, {poly_const(R, 1)});
    Ideal acc = I;
    for (int t = 1; t < k; ++t) {
        // multiply against the GB to keep generator counts down
        std::vector<Poly> gens;
        for (const auto& f : acc.gb)
            for (const auto& g : I.gens) gens.push_back(poly_mul(R, f, g));
        acc = make_ideal(R, std::move(gens));
    }
    return acc;
}

Ideal ideal_intersect(const PolyRing& R, const Ideal& I, const Ideal& J)
{
    // graph {(f, f) : f in I} + {(g, 0) : g in J}; tag-only combinations are
    // exactly the elements of I that also lie in J
    std::vector<std::pair<FreeElem, FreeElem>> graph;
    for (const auto& f : I.gb) graph.emplace_back(poly_as_fe(f), poly_as_fe(f));
    for (const auto& g : J.gb) graph.emplace_back(poly_as_fe(g), FreeElem());
    TaggedGB tg = tagged_gb(R, rank1(), rank1(), graph);
    std::vector<Poly> gens;
    for (const auto& v : tagged_pure(R, tg)) gens.push_back(fe_as_poly(R, v));
    Ideal out;
    out.gens = gens;
    out.gb = std::move(gens); // pure tags of a reduced GB form a reduced GB
    return out;
}

Ideal ideal_colon_poly(const PolyRing& R, const Ideal& I, const Poly& f)
{
    if (f.is_zero()) return make_ideal(R, {poly_const(R, 1)});
    poly_degree_checked(f);
    Ideal F = make_ideal(R, {f});
    Ideal K = ideal_intersect(R, I, F);
    std::vector<Poly> gens;
    for (const auto& g : K.gb) gens.push_back(poly_exact_div(R, g, f));
    return make_ideal(R, std::move(gens));
}

std::optional<std::vector<Poly>> ideal_membership_certificate(const PolyRing& R, const Ideal& I,
                                                              const Poly& f)
{
    if (f.is_zero()) return std::vector<Poly>(I.gens.size());
    FreeModule T;
    for (const auto& g : I.gens) T.gen_degs.push_back(*poly_degree_checked(g));
    std::vector<std::pair<FreeElem, FreeElem>> graph;
    for (int i = 0; i < (int)I.gens.size(); ++i)
        graph.emplace_back(poly_as_fe(I.gens[i]), fe_gen(R, i));
    TaggedGB tg = tagged_gb(R, rank1(), T, graph);
    auto s = tagged_express(R, tg, poly_as_fe(f));
    if (!s) return std::nullopt;
    return fe_to_polys(R, *s, T.rank());
}

} // namespace koszul
