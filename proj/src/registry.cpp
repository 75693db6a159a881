#include "ratcomb/verify.hpp"

namespace ratcomb {

// Pinned values for every row or displayed formula in the source tables that
// contradicts the definitions it accompanies. "printed" is what the source
// asserts; "computed" is what the definitions force, cross-checked by an
// independent route wherever one exists. DISCREPANCIES.md documents each id.
const std::vector<DiscrepancyPin>& discrepancy_registry() {
    static const std::vector<DiscrepancyPin> registry = {
        {"recursion-sign",
         "displayed recursion for B_{N,n}^f, evaluated at (exp, N=1, n=1)",
         "1/2", "-1/2",
         "The printed recursion omits a leading minus sign; as printed it "
         "yields B_1 = 1/2, contradicting the classical table value -1/2. "
         "The implemented recursion carries the sign forced by the defining "
         "identity."},
        {"trig-display",
         "displayed closed sum for B_{2L,2n}^cos, evaluated at (L=1, n=2)",
         "7/30", "-1/10",
         "The displayed trig composition sums assume the pivot F([N]) = 1, "
         "but sin_{2L+1} = cos_{2L} = (-1)^L, so for odd L every even-k term "
         "carries the wrong sign. The oracle multiplies in the pivot powers "
         "(-1)^{L(k+1)}; the corrected sum matches the tables everywhere."},
        {"zeta-closed-form",
         "displayed closed formula for B_{N,n}^{Z^M} with a global (-1)^n, "
         "evaluated at (N=1, M=2, n=2)",
         "59/864", "-5/864",
         "The printed formula carries a global (-1)^n with N!^k; the series "
         "definition forces the per-term sign (-N!)^k. The two agree only "
         "when k and n have equal parity."},
        {"s-table/n=0",
         "table of B_{1,n}^S, entry n = 0",
         "-1", "1",
         "The definition forces B_{1,0}^S = 1/f_1 = 1, consistent with the "
         "displayed polynomial B_{1,0}^S(x) = 1 on the same page."},
        {"s-table/n=3",
         "table of B_{1,n}^S, entry n = 3",
         "1/48", "-1/48",
         "Sign typo: the displayed polynomial B_{1,3}^S(x) ends in -1/48 and "
         "its constant term equals B_{1,3}^S by the same section's theorem."},
        {"zsq-table/n=2", "table of B_{1,n}^{Z^2}, entry n = 2",
         "11/432", "-5/864",
         "Definition value confirmed by the composition-sum route."},
        {"zsq-table/n=3", "table of B_{1,n}^{Z^2}, entry n = 3",
         "1/144", "1/2304",
         "Definition value confirmed by the composition-sum route."},
        {"zsq-table/n=4", "table of B_{1,n}^{Z^2}, entry n = 4",
         "-217/324000", "13709/15552000",
         "Definition value confirmed by the composition-sum route."},
        {"zsq-table/n=5", "table of B_{1,n}^{Z^2}, entry n = 5",
         "-157/64800", "4669/8294400",
         "Definition value confirmed by the composition-sum route."},
        {"zsq-table/n=6", "table of B_{1,n}^{Z^2}, entry n = 6",
         "-21503/16669800", "62582129/307257753600",
         "Definition value confirmed by the composition-sum route."},
        {"z3-table/n=1", "table of B_{3,n}^{Z^{(3)}}, entry n = 1",
         "-15/12", "-15/2",
         "Definition value confirmed by the composition-sum route; the other "
         "entries of this table match the definition."},
        {"c2-table/n=6", "table of C_{2,n}, entry n = 6",
         "-655/53", "-655/63",
         "Digit typo (53 for 63): the matching numerator and the reversion, "
         "round-trip, and Lagrange-inversion routes all give -655/63."},
        {"c1-poly-table/n=2", "displayed C_{1,2}(x)",
         "1/2*x^2 - x", "x^2 - x",
         "The same section's definition and theorem force C_{1,n}(x) = "
         "x(x-1)...(x-n+1), the expansion of (1+y)^x."},
        {"c1-poly-table/n=3", "displayed C_{1,3}(x)",
         "1/6*x^3 - x^2 - 2*x", "x^3 - 3*x^2 + 2*x",
         "Falling factorial forced by the definition; see c1-poly-table/n=2."},
        {"c1-poly-table/n=4", "displayed C_{1,4}(x)",
         "1/24*x^4 - 1/2*x^3 + 5/2*x^2 - 6*x", "x^4 - 6*x^3 + 11*x^2 - 6*x",
         "Falling factorial forced by the definition; see c1-poly-table/n=2."},
        {"c1-poly-table/n=5", "displayed C_{1,5}(x)",
         "1/120*x^5 - 1/6*x^4 + 3/2*x^3 - 8*x^2 + 24*x",
         "x^5 - 10*x^4 + 35*x^3 - 50*x^2 + 24*x",
         "Falling factorial forced by the definition; see c1-poly-table/n=2."},
        {"c1-poly-table/n=6", "displayed C_{1,6}(x)",
         "1/720*x^6 - 1/24*x^5 - 7/12*x^4 - 31/6*x^3 + 32*x^2 - 120*x",
         "x^6 - 15*x^5 + 85*x^4 - 225*x^3 + 274*x^2 - 120*x",
         "Falling factorial forced by the definition; see c1-poly-table/n=2."},
        {"c1-poly-table/n=7", "displayed C_{1,7}(x)",
         "1/5040*x^7 - 1/120*x^6 + 1/6*x^5 - 13/6*x^4 + 21*x^3 - 156*x^2 + 720*x",
         "x^7 - 21*x^6 + 175*x^5 - 735*x^4 + 1624*x^3 - 1764*x^2 + 720*x",
         "Falling factorial forced by the definition; see c1-poly-table/n=2."},
        {"chain-sum/n=3",
         "chain-sum species for C_{N,n}, specialized to (exp, N=2, n=3)",
         "5/6", "-1/2",
         "No Par_d^2 chain exists on a 3-set, so the chain sum reduces to its "
         "first term -2 v(3) = -1/2, while the definition gives C_{2,3} = 5/6."},
        {"chain-sum/n=4",
         "chain-sum species for C_{N,n}, specialized to (exp, N=2, n=4)",
         "-68/45", "2/45",
         "Chain sum: -2/5 + 3*(4/27) = 2/45; the definition gives -68/45."},
        {"xf-theorem/order3",
         "theorem |(X+F)^{<-1>}| = (X+|F|)^{<-1>}, x^3 coefficient for "
         "f = x + x^2/2",
         "3", "0",
         "Reversion gives h_3 = 3 (EGF), but Par_d^2 on a 3-set is empty, so "
         "the asserted chain expansion gives 0. The chain sum is kept "
         "verbatim as an oracle and this disagreement is the pin."},
        {"pard-top",
         "iterate formula F^{<d+1>} over Par_d^1, at (exp - 1, d=1, n=4)",
         "14", "15",
         "Par_d^s requires at least two top-level blocks, which drops the "
         "single-block partition term needed for plain iterated composition; "
         "composing exp - 1 with itself gives Bell(4) = 15."},
        {"pard-formula",
         "generating-series formula for |Par_d^s|, at (n=4, d=2, s=1)",
         "494", "45",
         "The printed nested-multinomial sum carries 1/l(a_d)! only at the "
         "top level; unordering is needed at every level (and the printed "
         "top constraint l(a_d) >= s should read >= 2). The corrected sum "
         "matches direct enumeration."},
    };
    return registry;
}

const DiscrepancyPin* find_pin(std::string_view id) {
    for (const DiscrepancyPin& pin : discrepancy_registry())
        if (pin.id == id) return &pin;
    return nullptr;
}

} // namespace ratcomb
