#include "koszul/linprod.hpp"

#include <algorithm>

#include "json.hpp"

#include "koszul/resolution.hpp"
#include "koszul/rng.hpp"

namespace koszul {

namespace {

// coefficient row of a linear form
std::vector<std::uint32_t> form_coeffs(const PolyRing& R, const Poly& p)
{
    std::vector<std::uint32_t> row(R.nvars(), 0);
    for (const Term& t : p.terms()) {
        if (t.m.deg != 1) throw InvalidParameter("family members must be linear forms");
        for (int k = 0; k < R.nvars(); ++k)
            if (t.m.e[k]) row[k] = t.c;
    }
    return row;
}

Poly row_as_form(const PolyRing& R, const std::uint32_t* row)
{
    std::vector<Term> ts;
    for (int k = 0; k < R.nvars(); ++k)
        if (row[k]) ts.push_back(Term{Monomial::var(R.nvars(), k), row[k]});
    return poly_from_terms(R, std::move(ts));
}

Ideal unit_ideal(const PolyRing& R) { return make_ideal(R, {poly_const(R, 1)}); }

void check_member_index(const LinearIdealFamily& F, int i)
{
    if (i < 0 || i >= F.size()) throw InvalidParameter("family index out of range");
}

// num/den where the containment is a step of a proved statement, so a
// failure means the engine itself is wrong
SubquotientModule certified_subquotient(const PolyRing& R, const Ideal& num, const Ideal& den,
                                        const std::string& name)
{
    try {
        return subquotient(R, num, den);
    }
    catch (const NotContained&) {
        throw CheckFailed("containment defining " + name + " failed");
    }
}

} // namespace

LinearIdealFamily make_family(const PolyRing& R, const std::vector<std::vector<Poly>>& forms)
{
    if (forms.empty()) throw InvalidParameter("a family needs at least one member");
    LinearIdealFamily F{R, {}};
    for (const auto& member : forms) {
        FpMatrix m(0, R.nvars(), R.field());
        for (const Poly& p : member) {
            if (p.is_zero()) continue;
            m.append_row(form_coeffs(R, p));
        }
        int r = rref(m);
        FpMatrix reduced(r, R.nvars(), R.field());
        for (int i = 0; i < r; ++i)
            for (int k = 0; k < R.nvars(); ++k) reduced.set(i, k, m.at(i, k));
        F.spaces.push_back(std::move(reduced));
    }
    return F;
}

std::vector<Poly> family_forms(const LinearIdealFamily& F, int i)
{
    check_member_index(F, i);
    std::vector<Poly> out;
    for (int r = 0; r < F.spaces[i].rows(); ++r)
        out.push_back(row_as_form(F.ring, F.spaces[i].row(r)));
    return out;
}

Ideal family_ideal(const LinearIdealFamily& F, int i)
{
    return make_ideal(F.ring, family_forms(F, i));
}

Ideal product_ideal(const LinearIdealFamily& F)
{
    Ideal I = family_ideal(F, 0);
    for (int i = 1; i < F.size(); ++i) I = ideal_product(F.ring, I, family_ideal(F, i));
    return I;
}

Ideal index_ideal(const LinearIdealFamily& F, const std::vector<int>& A)
{
    if (A.empty()) throw EmptyIndexSet();
    std::vector<bool> in(F.size(), false);
    for (int i : A) {
        check_member_index(F, i);
        in[i] = true;
    }
    Ideal I = make_ideal(F.ring, {});
    for (int i = 0; i < F.size(); ++i)
        if (in[i]) I = ideal_sum(F.ring, I, family_ideal(F, i));
    return I;
}

Ideal complementary_product(const LinearIdealFamily& F, const std::vector<int>& drop)
{
    std::vector<bool> out(F.size(), false);
    for (int i : drop) {
        check_member_index(F, i);
        out[i] = true;
    }
    Ideal I = unit_ideal(F.ring);
    bool first = true;
    for (int i = 0; i < F.size(); ++i) {
        if (out[i]) continue;
        Ideal Ii = family_ideal(F, i);
        I = first ? Ii : ideal_product(F.ring, I, Ii);
        first = false;
    }
    return I;
}

PrimaryDecomposition primary_decomposition_linprod(const LinearIdealFamily& F)
{
    const PolyRing& R = F.ring;
    int d = F.size();
    if (d > 6) throw InvalidParameter("decomposition materializes 2^d - 1 components; d <= 6");

    PrimaryDecomposition out{product_ideal(F), {}, Ideal{}, Ideal{}};
    bool first = true;
    for (unsigned mask = 1; mask < (1u << d); ++mask) {
        std::vector<int> A;
        for (int i = 0; i < d; ++i)
            if (mask & (1u << i)) A.push_back(i);
        Ideal base = index_ideal(F, A);
        int e = (int)A.size();
        Ideal comp = ideal_power(R, base, e);
        out.fine = first ? comp : ideal_intersect(R, out.fine, comp);
        first = false;
        out.components.push_back(PrimaryComponent{std::move(A), std::move(base), e, comp});
    }

    std::vector<int> all(d);
    for (int i = 0; i < d; ++i) all[i] = i;
    out.coarse = ideal_power(R, index_ideal(F, all), d);
    for (int i = 0; i < d; ++i)
        out.coarse = ideal_intersect(R, out.coarse, complementary_product(F, {i}));

    if (!ideal_equal(R, out.product, out.fine))
        throw EqualityFailed("product does not match the intersection of primary components");
    if (!ideal_equal(R, out.product, out.coarse))
        throw EqualityFailed("product does not match the coarse intersection");
    return out;
}

ColonSubringCheck colon_subring_check(const LinearIdealFamily& F, const Poly& f)
{
    const PolyRing& R = F.ring;
    if (f.is_zero()) throw ZeroDivisorArgument();
    poly_degree_checked(f);
    int n = R.nvars();

    ColonSubringCheck out;
    out.colon = ideal_colon_poly(R, product_ideal(F), f);

    // basis of V = sum of the spaces, extended to a basis of all linear forms
    FpMatrix span(0, n, R.field());
    for (const FpMatrix& m : F.spaces)
        for (int r = 0; r < m.rows(); ++r)
            span.append_row(std::vector<std::uint32_t>(m.row(r), m.row(r) + n));
    std::vector<int> pivots;
    int m = rref(span, &pivots);
    out.subring_dim = m;

    FpMatrix W(0, n, R.field());
    for (int r = 0; r < m; ++r)
        W.append_row(std::vector<std::uint32_t>(span.row(r), span.row(r) + n));
    std::vector<bool> is_pivot(n, false);
    for (int k = 0; k < m; ++k) is_pivot[pivots[k]] = true;
    for (int c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        std::vector<std::uint32_t> unit(n, 0);
        unit[c] = 1;
        W.append_row(unit);
    }

    FpMatrix aug(n, 2 * n, R.field());
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) aug.set(r, c, W.at(r, c));
        aug.set(r, n + r, 1);
    }
    if (rref(aug) != n) throw InternalError("coordinate change is singular");

    out.to_new.assign(n, std::vector<std::uint32_t>(n, 0));
    out.to_old.assign(n, std::vector<std::uint32_t>(n, 0));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            out.to_new[r][c] = W.at(r, c);
            out.to_old[r][c] = aug.at(r, n + c);
        }

    std::vector<Poly> moved;
    for (const Poly& g : out.colon.gens) moved.push_back(substitute_linear(R, g, out.to_old));
    out.certified = make_ideal(R, std::move(moved)).gb;

    for (const Poly& g : out.certified)
        for (const Term& t : g.terms())
            for (int k = m; k < n; ++k)
                if (t.m.e[k])
                    throw CheckFailed("colon generator " + poly_str(R, g) +
                                      " leaves the subring block");
    return out;
}

SubquotientModule subquotient(const PolyRing& R, const Ideal& num, const Ideal& den)
{
    if (!ideal_contains_ideal(R, num, den)) throw NotContained();
    SubquotientModule out{num, den, make_module(R, Ideal{}, FreeModule{std::vector<int>{}}, {})};
    if (num.gens.empty()) return out;

    std::vector<int> degs;
    for (const Poly& g : num.gens) degs.push_back(*poly_degree_checked(g));
    PresentedModule F = make_free_module(R, Ideal{}, degs);
    PresentedModule tgt = cyclic_module(R, Ideal{}, den);
    std::vector<FreeElem> images;
    for (const Poly& g : num.gens) images.push_back(poly_as_fe(g));
    Submodule K = map_kernel_sub(make_map(F, tgt, std::move(images)));
    out.realized = make_module(R, Ideal{}, F.cover, K.gens_in_ambient);
    return out;
}

ProofTrace proof_trace(const LinearIdealFamily& F, const Poly& f, int i_lo, int i_hi)
{
    const PolyRing& R = F.ring;
    if (f.is_zero()) throw ZeroDivisorArgument();
    int d = F.size();

    ProofTrace out;
    out.d = d;
    out.deg_f = *poly_degree_checked(f);

    Ideal I = product_ideal(F);
    Ideal C = ideal_colon_poly(R, I, f);
    std::vector<Ideal> J; // J[t] drops member t
    for (int t = 0; t < d; ++t) J.push_back(complementary_product(F, {t}));

    // inter[i] = (I:f) cap J[0] cap ... cap J[i-1]
    std::vector<Ideal> inter{C};
    for (int i = 1; i <= d; ++i) inter.push_back(ideal_intersect(R, inter[i - 1], J[i - 1]));

    auto record = [&](const std::string& name, const PresentedModule& M, int bound) {
        RegValue r = regularity(M);
        out.entries.push_back(TraceEntry{name, r, bound, reg_le(r, bound)});
        if (!out.entries.back().within) out.all_within = false;
    };

    i_lo = std::max(i_lo, 0);
    i_hi = std::min(i_hi, d);
    for (int i = i_lo; i <= i_hi; ++i) {
        auto M = certified_subquotient(R, inter[i], I, "M_" + std::to_string(i));
        record("M_" + std::to_string(i), M.realized, d - 1);
    }
    for (int t = 0; t < d; ++t) {
        auto N = certified_subquotient(R, ideal_sum(R, inter[t], J[t]), J[t],
                                       "N_" + std::to_string(t));
        record("N_" + std::to_string(t), N.realized, d - 1);
    }

    if (d >= 2) {
        // the displayed case of the inductive step, at tower position i = 1
        int i = 1;
        out.aux_i = i;
        Ideal num_aux = ideal_colon_poly(R, J[i], f);
        for (int k = 0; k < i; ++k)
            num_aux = ideal_intersect(R, num_aux, complementary_product(F, {k, i}));
        auto P0 = certified_subquotient(R, num_aux, J[i], "P_0");
        record("P_0", P0.realized, d - 2);
        auto P1 = certified_subquotient(R, num_aux, ideal_sum(R, inter[i], J[i]), "P_1");
        record("P_1", P1.realized, d - 2);

        if (d >= 3) {
            int j = d - 1; // any index past i + 1 works; take the last
            out.aux_j = j;
            Ideal U = ideal_colon_poly(R, complementary_product(F, {i, j}), f);
            for (int k = 0; k < i; ++k)
                U = ideal_intersect(R, U, complementary_product(F, {k, i, j}));
            Ideal Y = ideal_colon_poly(R, J[j], f);
            for (int k = 0; k < i; ++k)
                Y = ideal_intersect(R, Y, complementary_product(F, {k, j}));
            Y = ideal_sum(R, Y, complementary_product(F, {i, j}));
            std::string name = "P_1," + std::to_string(j);
            auto P1j = certified_subquotient(R, U, Y, name);
            record(name, P1j.realized, d - 3);
        }
    }

    if (!out.all_within) {
        for (const TraceEntry& e : out.entries)
            if (!e.within)
                throw BoundViolated("reg " + e.name + " = " + reg_str(e.reg) + " exceeds " +
                                    std::to_string(e.bound));
    }
    return out;
}

std::string proof_trace_json(const LinearIdealFamily& F, const Poly& f, const ProofTrace& t)
{
    nlohmann::json j;
    j["d"] = t.d;
    j["f"] = poly_str(F.ring, f);
    j["deg_f"] = t.deg_f;
    nlohmann::json fam = nlohmann::json::array();
    for (int i = 0; i < F.size(); ++i) {
        nlohmann::json member = nlohmann::json::array();
        for (const Poly& p : family_forms(F, i)) member.push_back(poly_str(F.ring, p));
        fam.push_back(member);
    }
    j["family"] = fam;
    j["aux_i"] = t.aux_i;
    j["aux_j"] = t.aux_j;
    nlohmann::json mods = nlohmann::json::array();
    for (const TraceEntry& e : t.entries) {
        nlohmann::json m;
        m["name"] = e.name;
        if (e.reg)
            m["reg"] = *e.reg;
        else
            m["reg"] = nullptr;
        m["bound"] = e.bound;
        m["pass"] = e.within;
        mods.push_back(m);
    }
    j["modules"] = mods;
    j["all_within"] = t.all_within;
    return j.dump();
}

LinearIdealFamily random_family(const PolyRing& R, int d, int max_forms, std::uint64_t seed)
{
    if (d < 1) throw InvalidParameter("family size must be positive");
    if (max_forms < 1) throw InvalidParameter("max forms per member must be positive");
    Rng rng(seed);
    std::vector<std::vector<Poly>> forms(d);
    for (int i = 0; i < d; ++i) {
        int nf = rng.range_int(1, max_forms);
        for (int k = 0; k < nf; ++k) {
            Poly p;
            do {
                std::vector<Term> ts;
                for (int v = 0; v < R.nvars(); ++v) {
                    auto c = (std::uint32_t)rng.below(R.field().characteristic());
                    if (c) ts.push_back(Term{Monomial::var(R.nvars(), v), c});
                }
                p = poly_from_terms(R, std::move(ts));
            } while (p.is_zero());
            forms[i].push_back(p);
        }
    }
    return make_family(R, forms);
}

} // namespace koszul
