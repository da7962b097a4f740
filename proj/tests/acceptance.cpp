// Acceptance gate: ten top-level checks, one line of output each, nonzero
// exit when any of them fails. Criteria 1-9 drive the seeded scenario suites
// at full scale; criterion 10 cross-checks the engine against brute-force
// degreewise linear algebra that shares no code with the Groebner machinery.

#include <cstdio>
#include <string>

#include "koszul/cli.hpp"
#include "koszul/resolution.hpp"
#include "koszul/rng.hpp"
#include "support/gen.hpp"
#include "support/oracle.hpp"

using namespace koszul;

namespace {

int failures = 0;

void report(int k, bool ok, const std::string& what)
{
    std::printf("criterion %2d: %s  %s\n", k, ok ? "PASS" : "FAIL", what.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

bool scenario_clean(const char* name, int trials)
{
    ScenarioReport r = run_scenario(name, 42, trials);
    return r.failed == 0 && r.passed >= 1;
}

PolyRing small_ring(Rng& rng)
{
    int n = rng.range_int(2, 3);
    std::vector<std::string> vs;
    for (int i = 1; i <= n; ++i) vs.push_back("x" + std::to_string(i));
    return PolyRing(PrimeField(32003), vs);
}

// Hilbert functions of random presented modules against ambient-minus-span
// dimension counts, degrees 0..6.
bool hilbert_matches_oracle()
{
    for (int trial = 0; trial < 50; ++trial) {
        Rng rng = Rng::for_trial(777, (std::uint64_t)trial);
        PolyRing R = small_ring(rng);
        int rank = rng.range_int(1, 2);
        std::vector<int> shifts;
        for (int c = 0; c < rank; ++c) shifts.push_back(rng.range_int(0, 1));
        FreeModule F{shifts};
        auto pot = ModuleOrder::pot();
        std::vector<FreeElem> rels;
        int nrel = rng.range_int(0, 3);
        for (int k = 0; k < nrel; ++k) {
            FreeElem v = gen::random_fe(R, *pot, F, rng, rng.range_int(1, 3));
            if (!v.is_zero()) rels.push_back(std::move(v));
        }
        PresentedModule M = make_module(R, Ideal{}, F, rels);
        HilbertSeries H = hilbert_series(M);
        for (int d = 0; d <= 6; ++d) {
            long long engine = hilbert_function(H, d);
            long long brute = oracle::degree_basis(R, F, d).dim() -
                              oracle::submodule_dim(R, F, M.relations, d);
            if (engine != brute) return false;
        }
    }
    return true;
}

// degree-d dimension of (I : f) from scratch: kernel of multiplication by f
// into the quotient by I
int colon_dim_oracle(const PolyRing& R, const std::vector<Poly>& igens, const Poly& f, int d)
{
    FreeModule F1{{0}};
    int df = *poly_degree_checked(f);
    oracle::DegBasis Bs = oracle::degree_basis(R, F1, d);
    oracle::DegBasis Bt = oracle::degree_basis(R, F1, d + df);
    std::vector<FreeElem> ig;
    for (const auto& g : igens) ig.push_back(poly_as_fe(g));
    FpMatrix span = oracle::span_matrix(R, F1, ig, d + df);
    int r_ideal = rank(span);
    FpMatrix both = span;
    for (const auto& [m, comp] : Bs.elems) {
        (void)comp;
        Poly prod = poly_mul(R, poly_term(R, m, 1), f);
        both.append_row(oracle::coord_vector(R, Bt, poly_as_fe(prod)));
    }
    int image = rank(both) - r_ideal;
    return Bs.dim() - image;
}

bool ideal_ops_match_oracle()
{
    for (int trial = 0; trial < 50; ++trial) {
        Rng rng = Rng::for_trial(778, (std::uint64_t)trial);
        PolyRing R = small_ring(rng);
        Ideal I = make_ideal(R, gen::random_ideal_gens(R, rng, rng.range_int(1, 2), 2));
        Ideal J = make_ideal(R, gen::random_ideal_gens(R, rng, rng.range_int(1, 2), 2));

        Ideal K = ideal_intersect(R, I, J);
        std::vector<Poly> both = I.gens;
        both.insert(both.end(), J.gens.begin(), J.gens.end());
        for (int d = 0; d <= 4; ++d) {
            int di = oracle::ideal_dim(R, I.gens, d);
            int dj = oracle::ideal_dim(R, J.gens, d);
            int du = oracle::ideal_dim(R, both, d);
            if (oracle::ideal_dim(R, K.gb, d) != di + dj - du) return false;
        }
        for (const auto& g : K.gb)
            if (!oracle::ideal_member(R, I.gens, g) || !oracle::ideal_member(R, J.gens, g))
                return false;

        Poly f = gen::random_nonzero_poly(R, rng, rng.range_int(1, 2), 2);
        Ideal C = ideal_colon_poly(R, I, f);
        for (int d = 0; d <= 4; ++d)
            if (oracle::ideal_dim(R, C.gb, d) != colon_dim_oracle(R, I.gens, f, d))
                return false;
        for (const auto& g : C.gb)
            if (!oracle::ideal_member(R, I.gens, poly_mul(R, g, f))) return false;
    }
    return true;
}

} // namespace

int main()
{
    report(1, scenario_clean("example-nontorlin", 1),
           "worked example: Tor regularity 3 and failure margin 2 over the determinantal "
           "quotient");
    report(2, scenario_clean("example-quadric-fail", 1),
           "worked example: regularity-2 ideal exceeds regularity 2 over a quadric "
           "hypersurface");
    report(3, scenario_clean("reg-quotient", 100),
           "mixed regularity splits as reg S/I + reg S/(f) on 100 random product ideals");
    report(4, scenario_clean("primary-decomp", 100),
           "both primary-decomposition identities certified on 100 random families");
    report(5, scenario_clean("conca-herzog", 100),
           "products of linear-form ideals resolve linearly on 100 random instances");
    report(6, scenario_clean("quadric-ustar", 50),
           "linear strands over random quadric hypersurfaces through homological degree 6");
    report(7,
           scenario_clean("kerann", 50) && scenario_clean("example-notannihilated", 1),
           "approximation maps: tensored annihilation, sandwich round-trips, both "
           "factorization criteria");
    report(8, scenario_clean("ds-bounds", 50) && scenario_clean("proof-trace", 20),
           "regularity bounds via approximation systems hold, with traced certificates");
    report(9, scenario_clean("chardin", 100),
           "mixed-regularity lower bound on 100 module pairs, equality on the "
           "low-dimensional subset");
    report(10, hilbert_matches_oracle() && ideal_ops_match_oracle(),
           "Hilbert functions and ideal intersections/colons match brute-force linear "
           "algebra");

    if (failures) std::printf("%d criterion(s) FAILED\n", failures);
    return failures ? 1 : 0;
}
