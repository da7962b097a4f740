#include "koszul/approx.hpp"

#include <algorithm>
#include <utility>

#include "json.hpp"

#include "koszul/resolution.hpp"
#include "koszul/tor.hpp"

namespace koszul {

static OrderPtr pot()
{
    static OrderPtr o = ModuleOrder::pot();
    return o;
}

static FreeElem poly_times_gen(const Poly& g, int comp)
{
    std::vector<ModTerm> ts;
    ts.reserve(g.size());
    for (const auto& t : g.terms()) ts.push_back(ModTerm{t.m, comp, t.c});
    return FreeElem(std::move(ts));
}

static FreeElem poly_mul_fe(const PolyRing& R, const Poly& g, const FreeElem& v)
{
    FreeElem acc;
    for (const auto& t : g.terms()) acc = fe_add(R, *pot(), acc, fe_mul_term(R, t, v));
    return acc;
}

// w tensor v in the (g, u) -> g * rank_v + u component layout
static FreeElem tensor_elem(const PolyRing& R, const FreeElem& w, const FreeElem& v, int rank_v)
{
    const auto& F = R.field();
    std::vector<ModTerm> ts;
    ts.reserve(w.terms().size() * v.terms().size());
    for (const auto& a : w.terms())
        for (const auto& b : v.terms())
            ts.push_back(ModTerm{mono_mul(a.m, b.m), a.comp * rank_v + b.comp, F.mul(a.c, b.c)});
    return fe_from_terms(R, *pot(), std::move(ts));
}

static std::vector<int> tensor_degs(const FreeModule& G, const FreeModule& T)
{
    std::vector<int> out;
    out.reserve((size_t)G.rank() * T.rank());
    for (int g = 0; g < G.rank(); ++g)
        for (int u = 0; u < T.rank(); ++u) out.push_back(G.gen_degs[g] + T.gen_degs[u]);
    return out;
}

static std::vector<FreeElem> gens_of(const PolyRing& R, int rank)
{
    std::vector<FreeElem> out;
    for (int k = 0; k < rank; ++k) out.push_back(fe_gen(R, k));
    return out;
}

WitnessReport verify_witness(const ApproximationWitness& w)
{
    WitnessReport rep;
    auto note = [&](const char* name, bool pass) {
        rep.conditions.emplace_back(name, pass);
        if (!pass && rep.failing.empty()) rep.failing = name;
        return pass;
    };

    bool shapes = w.phi.degree == 0 && w.alpha.degree == 0 && w.beta.degree == 0 &&
                  presentations_match(w.phi.src, w.alpha.src) &&
                  presentations_match(w.alpha.tgt, w.mid) &&
                  presentations_match(w.mid, w.beta.src) &&
                  presentations_match(w.beta.tgt, w.phi.tgt);
    if (!note("shapes", shapes)) return rep; // nothing else is well-posed

    const PolyRing& R = w.phi.src.ring;
    ModuleMap both = compose(w.beta, w.alpha);
    bool factors = true;
    for (size_t k = 0; k < both.images.size(); ++k)
        if (!element_is_zero_in(w.phi.tgt, fe_sub(R, *pot(), both.images[k], w.phi.images[k]))) {
            factors = false;
            break;
        }
    note("beta after alpha equals phi", factors);

    note("alpha injective", is_zero_module(map_kernel(w.alpha)));
    note("beta surjective", map_is_surjective(w.beta));

    PresentedModule C = map_cokernel(w.alpha);
    auto cfail = annihilation_failure(C, w.ideal);
    note("ideal kills coker(alpha)", !cfail);
    if (cfail && rep.offender.empty())
        rep.offender = "in coker(alpha): " +
                       fe_str(R, poly_times_gen(w.ideal.gens[cfail->first], cfail->second));

    Submodule K = map_kernel_sub(w.beta);
    auto kfail = annihilation_failure(K.module, w.ideal);
    note("ideal kills ker(beta)", !kfail);
    if (kfail && rep.offender.empty())
        rep.offender = "in ker(beta): " +
                       fe_str(R, poly_mul_fe(R, w.ideal.gens[kfail->first],
                                             K.gens_in_ambient[kfail->second]));

    rep.ok = std::all_of(rep.conditions.begin(), rep.conditions.end(),
                         [](const auto& c) { return c.second; });
    return rep;
}

static nlohmann::json witness_json_obj(const WitnessReport& r)
{
    nlohmann::json j;
    j["ok"] = r.ok;
    j["failing"] = r.failing;
    j["offender"] = r.offender;
    auto conds = nlohmann::json::array();
    for (const auto& [name, pass] : r.conditions) conds.push_back({{"name", name}, {"pass", pass}});
    j["conditions"] = conds;
    return j;
}

std::string witness_report_json(const WitnessReport& r) { return witness_json_obj(r).dump(); }

ApproximationWitness witness_for_surjective(const ModuleMap& phi, const Ideal& I)
{
    if (!map_is_surjective(phi)) throw NotSurjective();
    return ApproximationWitness{phi, I, phi.src, identity_map(phi.src), phi};
}

ApproximationWitness witness_for_injective(const ModuleMap& phi, const Ideal& I)
{
    if (!is_zero_module(map_kernel(phi))) throw InvalidParameter("map is not injective");
    return ApproximationWitness{phi, I, phi.tgt, phi, identity_map(phi.tgt)};
}

ApproximationWitness witness_from_sandwich(const SandwichData& s)
{
    const PolyRing& R = s.ambient.ring;
    const FreeModule& Qc = s.ambient.cover;
    auto clean = [&](const std::vector<FreeElem>& v) {
        std::vector<FreeElem> out;
        for (const auto& f : v)
            if (!f.is_zero()) out.push_back(f);
        return out;
    };
    std::vector<FreeElem> m = clean(s.m_gens), p = clean(s.p_gens);
    std::vector<FreeElem> mp = clean(s.mp_gens), pp = clean(s.pp_gens);

    auto span_gb = [&](const std::vector<FreeElem>& gens) {
        std::vector<FreeElem> all = gens;
        all.insert(all.end(), s.ambient.rel_gb.begin(), s.ambient.rel_gb.end());
        return buchberger(R, Qc, *pot(), all);
    };
    auto contained = [&](const std::vector<FreeElem>& elems, const std::vector<FreeElem>& gb) {
        for (const auto& e : elems)
            if (!normal_form(R, *pot(), e, gb).is_zero()) return false;
        return true;
    };
    auto times_ideal = [&](const std::vector<FreeElem>& gens) {
        std::vector<FreeElem> out;
        for (const auto& g : s.ideal.gens)
            for (const auto& v : gens) out.push_back(poly_mul_fe(R, g, v));
        return out;
    };

    auto gb_m = span_gb(m), gb_p = span_gb(p), gb_mp = span_gb(mp), gb_pp = span_gb(pp);
    if (!contained(m, gb_p)) throw NotASandwich("M is not contained in P");
    if (!contained(mp, gb_pp)) throw NotASandwich("M' is not contained in P'");
    if (!contained(m, gb_mp)) throw NotASandwich("M is not contained in M'");
    if (!contained(p, gb_pp)) throw NotASandwich("P is not contained in P'");
    if (!contained(times_ideal(mp), gb_m)) throw NotASandwich("I M' is not contained in M");
    if (!contained(times_ideal(pp), gb_p)) throw NotASandwich("I P' is not contained in P");

    auto degs_of = [&](const std::vector<FreeElem>& gens) {
        std::vector<int> d;
        for (const auto& g : gens) d.push_back(*fe_degree_checked(Qc, g));
        return d;
    };
    std::vector<FreeElem> m_rel = m, mp_rel = mp;
    m_rel.insert(m_rel.end(), s.ambient.rel_gb.begin(), s.ambient.rel_gb.end());
    mp_rel.insert(mp_rel.end(), s.ambient.rel_gb.begin(), s.ambient.rel_gb.end());

    FreeModule TP{degs_of(p)}, TPP{degs_of(pp)};
    PresentedModule N = make_module(R, s.ambient.quotient, TP, preimage_gb(R, Qc, TP, p, m_rel));
    PresentedModule Z = make_module(R, s.ambient.quotient, TPP, preimage_gb(R, Qc, TPP, pp, m_rel));
    PresentedModule NP =
        make_module(R, s.ambient.quotient, TPP, preimage_gb(R, Qc, TPP, pp, mp_rel));

    std::vector<FreeElem> alpha_imgs;
    for (const auto& pk : p) {
        auto ex = express_modulo(R, Qc, TPP, pp, m_rel, pk);
        if (!ex) throw InternalError("sandwich element failed to lift into P'");
        alpha_imgs.push_back(*ex);
    }
    ModuleMap alpha = make_map(N, Z, std::move(alpha_imgs));
    ModuleMap beta = make_map(Z, NP, gens_of(R, TPP.rank()));
    ModuleMap phi = compose(beta, alpha);

    ApproximationWitness w{std::move(phi), s.ideal, std::move(Z), std::move(alpha), std::move(beta)};
    WitnessReport rep = verify_witness(w);
    if (!rep.ok) throw InternalError("sandwich produced an invalid witness: " + rep.failing);
    return w;
}

bool check_kernel_cokernel(const ModuleMap& phi, const Ideal& I)
{
    return !annihilation_failure(map_kernel(phi), I) &&
           !annihilation_failure(map_cokernel(phi), I);
}

static void require_verified(const ApproximationWitness& w)
{
    WitnessReport rep = verify_witness(w);
    if (!rep.ok) throw InvalidParameter("witness does not verify: " + rep.failing);
}

ApproximationWitness induced_tensor_witness(const ApproximationWitness& w,
                                            const PresentedModule& B)
{
    require_verified(w);
    const PolyRing& R = w.phi.src.ring;
    require_same_ring(R, B.ring);
    if (!same_quotient(w.phi.src, B)) throw DifferentQuotients();

    const PresentedModule& N = w.phi.src;
    const PresentedModule& NP = w.phi.tgt;
    const FreeModule& G = B.cover;

    // X tensor B = (G tensor X) / span{ w_k tensor x_u } for each relation w_k
    // of B; the middle module replaces that grid by { w_k tensor alpha(x_u) }
    auto with_grid = [&](const PresentedModule& GX, const std::vector<FreeElem>& imgs,
                         int rank_x) {
        std::vector<FreeElem> rels = GX.relations;
        for (const auto& wk : B.relations)
            for (const auto& img : imgs) rels.push_back(tensor_elem(R, wk, img, rank_x));
        return make_module(R, N.quotient, GX.cover, std::move(rels));
    };
    PresentedModule NB =
        with_grid(tensor_free_with_module(R, G, N), gens_of(R, N.cover.rank()), N.cover.rank());
    PresentedModule ZT =
        with_grid(tensor_free_with_module(R, G, w.mid), w.alpha.images, w.mid.cover.rank());
    PresentedModule NPB =
        with_grid(tensor_free_with_module(R, G, NP), gens_of(R, NP.cover.rank()), NP.cover.rank());

    auto block_images = [&](const std::vector<FreeElem>& imgs, int tgt_rank) {
        std::vector<FreeElem> out;
        for (int g = 0; g < G.rank(); ++g)
            for (const auto& img : imgs) out.push_back(tensor_elem(R, fe_gen(R, g), img, tgt_rank));
        return out;
    };
    ModuleMap albar = make_map(NB, ZT, block_images(w.alpha.images, w.mid.cover.rank()));
    ModuleMap bebar = make_map(ZT, NPB, block_images(w.beta.images, NP.cover.rank()));
    ModuleMap pibar = make_map(NB, NPB, block_images(w.phi.images, NP.cover.rank()));

    ApproximationWitness out{std::move(pibar), w.ideal, std::move(ZT), std::move(albar),
                             std::move(bebar)};
    WitnessReport rep = verify_witness(out);
    if (!rep.ok) throw InternalError("induced tensor witness failed: " + rep.failing);
    return out;
}

ApproximationWitness induced_W_witness(const ApproximationWitness& w, const FreeModule& G,
                                       const std::vector<FreeElem>& w_gens)
{
    require_verified(w);
    const PolyRing& R = w.phi.src.ring;
    std::vector<FreeElem> ws;
    for (const auto& f : w_gens)
        if (!f.is_zero()) ws.push_back(f);

    // W(X) = span{ w_k tensor x_u } inside G tensor X, presented on the grid
    auto wmod = [&](const PresentedModule& X) {
        PresentedModule GX = tensor_free_with_module(R, G, X);
        std::vector<FreeElem> grid;
        for (const auto& wk : ws)
            for (int u = 0; u < X.cover.rank(); ++u)
                grid.push_back(tensor_elem(R, wk, fe_gen(R, u), X.cover.rank()));
        return submodule_from_elements(GX, std::move(grid));
    };
    Submodule WN = wmod(w.phi.src), WZ = wmod(w.mid), WNP = wmod(w.phi.tgt);

    // grid generator (k, u) maps to w_k tensor imgs[u], i.e. imgs[u] relocated
    // into the k-th row of the target grid
    auto grid_images = [&](const std::vector<FreeElem>& imgs, int tgt_rank) {
        std::vector<FreeElem> out;
        for (int k = 0; k < (int)ws.size(); ++k)
            for (const auto& img : imgs) {
                std::vector<ModTerm> ts;
                for (const auto& t : img.terms())
                    ts.push_back(ModTerm{t.m, k * tgt_rank + t.comp, t.c});
                out.push_back(fe_from_terms(R, *pot(), std::move(ts)));
            }
        return out;
    };
    ModuleMap phiw =
        make_map(WN.module, WNP.module, grid_images(w.phi.images, w.phi.tgt.cover.rank()));
    ModuleMap alw = make_map(WN.module, WZ.module, grid_images(w.alpha.images, w.mid.cover.rank()));
    ModuleMap bew =
        make_map(WZ.module, WNP.module, grid_images(w.beta.images, w.phi.tgt.cover.rank()));

    ApproximationWitness out{std::move(phiw), w.ideal, WZ.module, std::move(alw), std::move(bew)};
    WitnessReport rep = verify_witness(out);
    if (!rep.ok) throw InternalError("induced submodule witness failed: " + rep.failing);
    return out;
}

static PresentedModule syzygy_of(const PresentedModule& X)
{
    const PolyRing& R = X.ring;
    PresentedModule cover = make_free_module(R, X.quotient, X.cover.gen_degs);
    return map_kernel(make_map(std::move(cover), X, gens_of(R, X.cover.rank())));
}

ApproximationWitness induced_tor_witness(const ApproximationWitness& w, const PresentedModule& B,
                                         int i)
{
    if (i < 1) throw InvalidParameter("homological index must be at least 1");
    if (!map_is_surjective(w.phi)) throw NotSurjective();
    require_verified(w);
    const PolyRing& R = w.phi.src.ring;
    require_same_ring(R, B.ring);
    if (!same_quotient(w.phi.src, B)) throw DifferentQuotients();

    // Tor_i(-, B) = Tor_1(-, (i-1)-th syzygy of B)
    PresentedModule Bi = B;
    for (; i > 1; --i) Bi = syzygy_of(Bi);

    const PresentedModule& N = w.phi.src;
    const FreeModule& F = N.cover;
    const std::vector<FreeElem>& U = N.rel_gb;
    std::vector<FreeElem> V =
        preimage_gb(R, w.phi.tgt.cover, F, w.phi.images, w.phi.tgt.rel_gb);
    const FreeModule& G = Bi.cover;
    const std::vector<FreeElem>& W = Bi.rel_gb;

    // Both Tor_1 modules live inside the free module G tensor F:
    // Tor_1(N, B) = (GU cap WF) / WU and likewise with V for the target.
    FreeModule GF{tensor_degs(G, F)};
    auto grid = [&](const std::vector<FreeElem>& a, const std::vector<FreeElem>& b) {
        std::vector<FreeElem> out;
        for (const auto& x : a)
            for (const auto& y : b) out.push_back(tensor_elem(R, x, y, F.rank()));
        return out;
    };
    auto intersect = [&](const std::vector<FreeElem>& a, const std::vector<FreeElem>& b) {
        std::vector<std::pair<FreeElem, FreeElem>> graph;
        for (const auto& f : a) graph.emplace_back(f, f);
        for (const auto& f : b) graph.emplace_back(f, FreeElem{});
        return tagged_pure(R, tagged_gb(R, GF, GF, graph));
    };
    std::vector<FreeElem> eg = gens_of(R, G.rank()), ef = gens_of(R, F.rank());
    std::vector<FreeElem> P = intersect(grid(eg, U), grid(W, ef));
    std::vector<FreeElem> PP = intersect(grid(eg, V), grid(W, ef));

    SandwichData sd{make_free_module(R, N.quotient, GF.gen_degs), w.ideal, grid(W, U), std::move(P),
                    grid(W, V), std::move(PP)};
    return witness_from_sandwich(sd);
}

static nlohmann::json kerann_json_obj(const KerannReport& r)
{
    nlohmann::json j;
    j["kernel"] = r.kernel;
    j["square"] = r.square;
    j["cokernel"] = r.cokernel;
    j["offender"] = r.offender;
    return j;
}

std::string kerann_report_json(const KerannReport& r) { return kerann_json_obj(r).dump(); }

static KerannReport kerann_core(const PolyRing& R, const ModuleMap& pi, const Ideal& I)
{
    KerannReport rep;
    Submodule K = map_kernel_sub(pi);
    auto kf = annihilation_failure(K.module, I);
    rep.kernel = !kf;
    if (kf)
        rep.offender =
            fe_str(R, poly_mul_fe(R, I.gens[kf->first], K.gens_in_ambient[kf->second]));
    rep.square = rep.kernel || !annihilation_failure(K.module, ideal_product(R, I, I));
    rep.cokernel = !annihilation_failure(map_cokernel(pi), I);
    return rep;
}

KerannReport check_kerann(const ApproximationWitness& w, const PresentedModule& B)
{
    require_verified(w);
    ModuleMap pi = tensor_map_with_module(w.phi, B);
    KerannReport rep = kerann_core(B.ring, pi, w.ideal);
    if (!rep.kernel)
        throw AssertionFailed("ideal fails to kill ker(phi tensor B): " + rep.offender);
    if (!rep.cokernel) throw AssertionFailed("ideal fails to kill coker(phi tensor B)");
    return rep;
}

KerannReport check_kerann_weak(const ModuleMap& phi, const Ideal& I, const PresentedModule& B)
{
    if (!check_kernel_cokernel(phi, I))
        throw InvalidParameter("map does not satisfy the kernel/cokernel annihilation hypothesis");
    ModuleMap pi = tensor_map_with_module(phi, B);
    KerannReport rep = kerann_core(B.ring, pi, I);
    if (!rep.square) throw AssertionFailed("ideal squared fails to kill ker(phi tensor B)");
    if (!rep.cokernel) throw AssertionFailed("ideal fails to kill coker(phi tensor B)");
    return rep;
}

bool is_filter_regular(const PresentedModule& N, const Poly& y)
{
    if (y.is_zero() || poly_degree_checked(y) != 1)
        throw InvalidParameter("filter-regular candidates must be nonzero linear forms");
    return is_finite_length(module_colon_zero(N, y).module);
}

Poly find_filter_regular(const std::vector<PresentedModule>& mods, std::uint64_t seed,
                         int max_tries)
{
    if (mods.empty()) throw InvalidParameter("no modules to be filter-regular for");
    const PolyRing& R = mods.front().ring;
    std::uint64_t p = R.field().characteristic();
    Rng rng(seed);
    for (int k = 0; k < max_tries; ++k) {
        std::vector<Term> ts;
        for (int i = 0; i < R.nvars(); ++i) {
            auto c = (std::uint32_t)rng.below(p);
            if (c) ts.push_back(Term{Monomial::var(R.nvars(), i), c});
        }
        Poly y = poly_from_terms(R, std::move(ts));
        if (y.is_zero()) continue;
        bool ok = true;
        for (const auto& M : mods)
            if (!is_filter_regular(M, y)) {
                ok = false;
                break;
            }
        if (ok) return y;
    }
    throw NoFilterRegularFound(max_tries);
}

RegValue a0(const PresentedModule& N)
{
    Saturation s = saturate_zero(N);
    if (is_zero_module(s.h0)) return minus_infinity();
    return top_degree(s.h0);
}

static void monomials_rec(int var, int nvars, int left, std::vector<std::uint16_t>& exps,
                          std::vector<Monomial>& out)
{
    if (var == nvars - 1) {
        exps[var] = (std::uint16_t)left;
        out.push_back(Monomial::of(exps));
        return;
    }
    for (int e = left; e >= 0; --e) {
        exps[var] = (std::uint16_t)e;
        monomials_rec(var + 1, nvars, left - e, exps, out);
    }
}

static bool covers_power(const PolyRing& R, const Ideal& I, int t)
{
    std::vector<Monomial> ms;
    std::vector<std::uint16_t> exps(R.nvars(), 0);
    monomials_rec(0, R.nvars(), t, exps, ms);
    for (const auto& m : ms)
        if (!ideal_contains(R, I, poly_term(R, m, 1))) return false;
    return true;
}

SystemReport verify_system(const PresentedModule& N,
                           const std::vector<ApproximationWitness>& entries, int t)
{
    SystemReport rep;
    bool all = true;
    for (size_t k = 0; k < entries.size(); ++k) {
        rep.entries.push_back(verify_witness(entries[k]));
        if (!rep.entries.back().ok) {
            all = false;
            if (rep.failing.empty())
                rep.failing =
                    "entry " + std::to_string(k) + ": " + rep.entries.back().failing;
        } else if (!presentations_match(entries[k].phi.src, N)) {
            all = false;
            if (rep.failing.empty())
                rep.failing = "entry " + std::to_string(k) + ": source is not the base module";
        }
    }
    const PolyRing& R = N.ring;
    Ideal sum = make_ideal(R, {});
    for (const auto& e : entries) sum = ideal_sum(R, sum, e.ideal);
    rep.coverage = covers_power(R, sum, t);
    if (!rep.coverage && rep.failing.empty())
        rep.failing = "ideal sum misses a monomial of degree " + std::to_string(t);
    rep.ok = all && rep.coverage;
    return rep;
}

std::string system_report_json(const SystemReport& r)
{
    nlohmann::json j;
    j["ok"] = r.ok;
    j["coverage"] = r.coverage;
    j["failing"] = r.failing;
    auto es = nlohmann::json::array();
    for (const auto& e : r.entries) es.push_back(witness_json_obj(e));
    j["entries"] = es;
    return j.dump();
}

GeneralizedApproxSystem make_system(PresentedModule N, std::vector<ApproximationWitness> entries,
                                    int t)
{
    if (t < 1) throw InvalidParameter("approximation degree t must be positive");
    if (entries.empty() || entries.size() > 16)
        throw InvalidParameter("approximation systems need between 1 and 16 entries");
    if (N.over_quotient())
        throw UnsupportedQuotient("approximation systems live over the polynomial ring");
    SystemReport rep = verify_system(N, entries, t);
    if (!rep.ok) throw InvalidParameter("invalid approximation system: " + rep.failing);
    return GeneralizedApproxSystem{std::move(N), std::move(entries), t};
}

DS33Report check_DS33(const GeneralizedApproxSystem& sys, const Poly& y)
{
    if (!is_filter_regular(sys.base, y))
        throw FilterRegularityViolated("y is not filter-regular for the base module");
    for (size_t k = 0; k < sys.entries.size(); ++k)
        if (!is_filter_regular(sys.entries[k].phi.tgt, y))
            throw FilterRegularityViolated("y is not filter-regular for target " +
                                           std::to_string(k));

    DS33Report rep;
    rep.lhs = regularity(sys.base);
    RegValue emax = minus_infinity();
    for (const auto& e : sys.entries) {
        rep.entry_regs.push_back(regularity(e.phi.tgt));
        emax = reg_max(emax, reg_add(rep.entry_regs.back(), 1));
    }
    std::vector<FreeElem> ymult;
    for (int c = 0; c < sys.base.cover.rank(); ++c) ymult.push_back(poly_times_gen(y, c));
    rep.reg_mod_y = regularity(quotient_by_elements(sys.base, ymult));
    rep.a0_value = a0(sys.base);
    rep.rhs = reg_add(reg_max(emax, rep.reg_mod_y), sys.t - 1);
    rep.holds = reg_le(rep.lhs, rep.rhs);

    if (rep.lhs != reg_max(rep.reg_mod_y, rep.a0_value))
        throw BoundViolated("filter-regular recursion failed: reg " + reg_str(rep.lhs) +
                            " vs max(" + reg_str(rep.reg_mod_y) + ", " + reg_str(rep.a0_value) +
                            ")");
    if (!rep.holds)
        throw BoundViolated("regularity bound failed: " + reg_str(rep.lhs) + " > " +
                            reg_str(rep.rhs));
    return rep;
}

DS35Report check_DS35(const GeneralizedApproxSystem& sys)
{
    DS35Report rep;
    rep.lhs = regularity(sys.base);
    RegValue emax = minus_infinity();
    for (const auto& e : sys.entries) {
        rep.entry_regs.push_back(regularity(e.phi.tgt));
        emax = reg_max(emax, reg_add(rep.entry_regs.back(), 1));
    }
    BettiTable B = betti_table(sys.base);
    rep.top_gen = minus_infinity();
    for (const auto& [key, count] : B.entries)
        if (key.first == 0 && count > 0) rep.top_gen = reg_max(rep.top_gen, key.second);
    rep.rhs = reg_add(reg_max(emax, rep.top_gen), (sys.t - 1) * sys.base.ring.nvars());
    rep.holds = reg_le(rep.lhs, rep.rhs);
    if (!rep.holds)
        throw BoundViolated("generator-degree regularity bound failed: " + reg_str(rep.lhs) +
                            " > " + reg_str(rep.rhs));
    return rep;
}

} // namespace koszul
