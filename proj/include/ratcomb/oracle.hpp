#pragma once

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "ratcomb/rational.hpp"
#include "ratcomb/series.hpp"

namespace ratcomb {

// Brute-force recomputation layer: integer compositions, set partitions,
// partition chains, and the composition/chain sums they feed. Everything
// here is an independent route to values the series engine computes by
// algebra; enumeration orders are canonical so output is reproducible.

// Ordered sequence of positive parts summing to n.
struct Composition {
    std::vector<unsigned> parts;

    unsigned total() const;
    unsigned length() const { return static_cast<unsigned>(parts.size()); }
};

// All compositions of n with parts >= min_part (all parts even when
// even_only), in lexicographic order of the part sequences.
std::vector<Composition> compositions(unsigned n, unsigned min_part = 1,
                                      bool even_only = false);
void for_each_composition(unsigned n, unsigned min_part, bool even_only,
                          const std::function<void(const std::vector<unsigned>&)>& fn);

// A partition of {0..n-1} as blocks sorted by minimum element.
using SetPartition = std::vector<std::vector<int>>;

// All partitions of {0..n-1} with block sizes >= min_block.
std::vector<SetPartition> set_partitions(int n, int min_block = 1);
void for_each_set_partition(int n, int min_block,
                            const std::function<void(const SetPartition&)>& fn);

// Tower of partitions: levels[0] partitions {0..n-1}; levels[i] partitions
// the block-index set {0..k-1} of the previous level. Block sizes at level i
// are counted in level-(i-1) blocks.
struct PartitionChain {
    std::vector<SetPartition> levels;

    // Number of blocks at the top level.
    std::size_t top_count() const { return levels.back().size(); }
};

// All chains of depth d with every block size >= min_block and, when
// require_top_ge2 is set, at least two blocks at the top level (the Par_d^s
// convention).
std::vector<PartitionChain> partition_chains(int n, int depth, int min_block,
                                             bool require_top_ge2);
void for_each_partition_chain(int n, int depth, int min_block, bool require_top_ge2,
                              const std::function<void(const PartitionChain&)>& fn);

// (enumerated count, nested-multinomial formula count) for Par_d^s([n]).
// The formula carries a 1/l(a_i)! unordering factor at every level and the
// top-level "at least two blocks" constraint; see DISCREPANCIES.md for how
// this differs from the printed form.
std::pair<unsigned long long, unsigned long long>
chains_count_check(int n, int depth, int min_block);

// Composition-sum route to B_{N,n}: n! sum over a |- n of
// (-N!)^k / f_N^{k+1} * prod f_{a_i+N}/(a_i+N)!. The pivot powers reduce to 1
// when f_N = 1 (the normalized case the displayed species formula assumes).
Rational comp_sum_bernoulli(const EgfSeries& f, unsigned n_shift, unsigned n);

enum class TrigKind { Sin, Cos };

// Even-part composition sums for B_{2L+1,2n}^sin and B_{2L,2n}^cos, with the
// pivot correction (-1)^{L(k+1)} that the displayed sums assume away.
Rational parity_sum_trig(TrigKind kind, unsigned ell, unsigned n);

// Composition-sum route to B_{N,n}^{Z^M} with per-term sign (-N!)^k and the
// same pivot correction (f_N = 1/N^M).
Rational comp_sum_zeta(unsigned n_shift, unsigned m_power, unsigned n);

// Chain-sum route to the x^n/n! coefficient of f composed with itself d+1
// times: sum over chains of f_{|pi_d|} prod f_{|b|}. With allow_trivial_top
// the top level may have a single block, which is what plain iterated
// composition requires.
Rational iterated_compose_oracle(const EgfSeries& f, unsigned depth, unsigned n,
                                 bool allow_trivial_top);

// Faa di Bruno: the x^n/n! coefficient of f(g(x)) as a sum over set
// partitions, f_{|pi|} prod over blocks of g_{|b|}.
Rational faa_di_bruno_sum(const EgfSeries& f, const EgfSeries& g, unsigned n);

// Chain sum for compositional Bernoulli numbers: with
// v(m) = f_{m+N-1} m!/(m+N-1)!, the value is
// -N! v(n) + sum over chains in Par_d^2([n]), d >= 1, of
// (-N!)^{d+1} v(|pi_d|) prod v(|b|). Finite since all blocks have size >= 2.
Rational chain_sum_comp_bernoulli(const EgfSeries& f, unsigned n_shift, unsigned n);

// Chain-sum expansion the source theorem asserts for (X+F)^{<-1>} at n >= 2:
// -f_n + sum over Par_d^2([n]) of (-1)^{d+1} f_{|pi_d|} prod f_{|b|}.
// Requires f_0 = f_1 = 0. Disagrees with series reversion from order 3 on;
// kept verbatim as a pinned oracle.
Rational xf_inverse_chain_sum(const EgfSeries& f, unsigned n);

} // namespace ratcomb
