#include "ratcomb/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "ratcomb/error.hpp"

namespace ratcomb {

namespace {

void compositions_rec(unsigned remaining, unsigned min_part, bool even_only,
                      std::vector<unsigned>& parts,
                      const std::function<void(const std::vector<unsigned>&)>& fn) {
    if (remaining == 0) {
        fn(parts);
        return;
    }
    unsigned first = std::max(min_part, 1u);
    if (even_only && first % 2 != 0) ++first;
    const unsigned step = even_only ? 2 : 1;
    for (unsigned p = first; p <= remaining; p += step) {
        parts.push_back(p);
        compositions_rec(remaining - p, min_part, even_only, parts, fn);
        parts.pop_back();
    }
}

void partitions_rec(int n, int next, SetPartition& blocks,
                    const std::function<void(const SetPartition&)>& filtered) {
    if (next == n) {
        filtered(blocks);
        return;
    }
    // Index-based: the recursion below appends to `blocks`, which may
    // reallocate.
    const std::size_t existing = blocks.size();
    for (std::size_t i = 0; i < existing; ++i) {
        blocks[i].push_back(next);
        partitions_rec(n, next + 1, blocks, filtered);
        blocks[i].pop_back();
    }
    blocks.push_back({next});
    partitions_rec(n, next + 1, blocks, filtered);
    blocks.pop_back();
}

void chains_rec(int level_size, int depth_left, int min_block, bool require_top_ge2,
                std::vector<SetPartition>& levels,
                const std::function<void(const PartitionChain&)>& fn) {
    for_each_set_partition(level_size, min_block, [&](const SetPartition& part) {
        if (depth_left == 1 && require_top_ge2 && part.size() < 2) return;
        levels.push_back(part);
        if (depth_left == 1) {
            fn(PartitionChain{levels});
        } else {
            chains_rec(static_cast<int>(part.size()), depth_left - 1, min_block,
                       require_top_ge2, levels, fn);
        }
        levels.pop_back();
    });
}

// Nested composition sum for |Par_d^s([n])|, unordering each level by
// 1/l(a_i)! and requiring at least two top-level blocks.
Rational chains_formula(int level_size, int depth_left, int min_block) {
    Rational total(0);
    for_each_composition(static_cast<unsigned>(level_size),
                         static_cast<unsigned>(min_block), false,
                         [&](const std::vector<unsigned>& parts) {
        const unsigned len = static_cast<unsigned>(parts.size());
        if (depth_left == 1 && len < 2) return;
        const Rational weight =
            Rational(multinomial(static_cast<unsigned long>(level_size), parts)) /
            Rational(factorial(len));
        if (depth_left == 1) {
            total += weight;
        } else {
            total += weight * chains_formula(static_cast<int>(len), depth_left - 1,
                                             min_block);
        }
    });
    return total;
}

} // namespace

unsigned Composition::total() const {
    return std::accumulate(parts.begin(), parts.end(), 0u);
}

void for_each_composition(unsigned n, unsigned min_part, bool even_only,
                          const std::function<void(const std::vector<unsigned>&)>& fn) {
    if (n == 0) return;
    std::vector<unsigned> parts;
    compositions_rec(n, min_part, even_only, parts, fn);
}

std::vector<Composition> compositions(unsigned n, unsigned min_part, bool even_only) {
    std::vector<Composition> out;
    for_each_composition(n, min_part, even_only,
                         [&](const std::vector<unsigned>& parts) {
                             out.push_back(Composition{parts});
                         });
    return out;
}

void for_each_set_partition(int n, int min_block,
                            const std::function<void(const SetPartition&)>& fn) {
    if (n < 0) throw Error("set_partitions: negative ground-set size");
    if (n == 0) {
        fn(SetPartition{});
        return;
    }
    SetPartition blocks;
    partitions_rec(n, 0, blocks, [&](const SetPartition& part) {
        for (const auto& b : part)
            if (static_cast<int>(b.size()) < min_block) return;
        fn(part);
    });
}

std::vector<SetPartition> set_partitions(int n, int min_block) {
    std::vector<SetPartition> out;
    for_each_set_partition(n, min_block, [&](const SetPartition& p) { out.push_back(p); });
    return out;
}

void for_each_partition_chain(int n, int depth, int min_block, bool require_top_ge2,
                              const std::function<void(const PartitionChain&)>& fn) {
    if (n < 1 || depth < 1) throw Error("partition_chains: need n >= 1 and depth >= 1");
    std::vector<SetPartition> levels;
    chains_rec(n, depth, min_block, require_top_ge2, levels, fn);
}

std::vector<PartitionChain> partition_chains(int n, int depth, int min_block,
                                             bool require_top_ge2) {
    std::vector<PartitionChain> out;
    for_each_partition_chain(n, depth, min_block, require_top_ge2,
                             [&](const PartitionChain& c) { out.push_back(c); });
    return out;
}

std::pair<unsigned long long, unsigned long long>
chains_count_check(int n, int depth, int min_block) {
    unsigned long long enumerated = 0;
    for_each_partition_chain(n, depth, min_block, true,
                             [&](const PartitionChain&) { ++enumerated; });
    const Rational formula = chains_formula(n, depth, min_block);
    if (!Rational(formula.den()).is_one())
        throw Error("chains_count_check: formula value is not an integer");
    return {enumerated, formula.num().get_ui()};
}

Rational comp_sum_bernoulli(const EgfSeries& f, unsigned n_shift, unsigned n) {
    if (n < 1) throw Error("comp_sum_bernoulli: n must be >= 1");
    if (f.order() < n_shift + n)
        throw OrderTooSmall("comp_sum_bernoulli: need f up to order N + n");
    if (f[n_shift].is_zero()) throw ZeroPivot("comp_sum_bernoulli: f_N = 0");
    const Rational nfact(factorial(n_shift));
    const Rational pivot = f[n_shift];
    Rational total(0);
    for_each_composition(n, 1, false, [&](const std::vector<unsigned>& parts) {
        Rational term = (-nfact).pow(static_cast<long>(parts.size())) /
                        pivot.pow(static_cast<long>(parts.size()) + 1);
        for (unsigned a : parts)
            term *= f[a + n_shift] / Rational(factorial(a + n_shift));
        total += term;
    });
    return Rational(factorial(n)) * total;
}

Rational parity_sum_trig(TrigKind kind, unsigned ell, unsigned n) {
    if (n < 1) throw Error("parity_sum_trig: n must be >= 1");
    if (kind == TrigKind::Cos && ell < 1)
        throw Error("parity_sum_trig: cos requires L >= 1");
    const unsigned n_shift = kind == TrigKind::Sin ? 2 * ell + 1 : 2 * ell;
    const Rational nfact(factorial(n_shift));
    Rational total(0);
    for_each_composition(2 * n, 2, true, [&](const std::vector<unsigned>& parts) {
        const long k = static_cast<long>(parts.size());
        // (-1)^{k(L+1)} from the display, times the pivot powers
        // (-1)^{L(k+1)} of f_N = (-1)^L.
        const long sign_exp = k * static_cast<long>(ell + 1) +
                              static_cast<long>(ell) * (k + 1);
        Rational term = sign_exp % 2 == 0 ? Rational(1) : Rational(-1);
        term *= Rational(pow_ui(nfact.num(), static_cast<unsigned long>(k)));
        for (unsigned a : parts) term /= Rational(factorial(a + n_shift));
        total += term;
    });
    const Rational outer = n % 2 == 0 ? Rational(1) : Rational(-1);
    return outer * Rational(factorial(2 * n)) * total;
}

Rational comp_sum_zeta(unsigned n_shift, unsigned m_power, unsigned n) {
    if (n < 1 || n_shift < 1 || m_power < 1)
        throw Error("comp_sum_zeta: need n, N, M >= 1");
    const Rational nfact(factorial(n_shift));
    const Rational pivot = Rational(1) / Rational(pow_ui(mpz_class(n_shift), m_power));
    Rational total(0);
    for_each_composition(n, 1, false, [&](const std::vector<unsigned>& parts) {
        Rational term = (-nfact).pow(static_cast<long>(parts.size())) /
                        pivot.pow(static_cast<long>(parts.size()) + 1);
        for (unsigned a : parts)
            term /= Rational(factorial(a + n_shift)) *
                    Rational(pow_ui(mpz_class(a + n_shift), m_power));
        total += term;
    });
    return Rational(factorial(n)) * total;
}

Rational iterated_compose_oracle(const EgfSeries& f, unsigned depth, unsigned n,
                                 bool allow_trivial_top) {
    if (n < 1) throw Error("iterated_compose_oracle: n must be >= 1");
    if (!f[0].is_zero())
        throw NonzeroConstantInner("iterated_compose_oracle: f_0 must be zero");
    if (f.order() < n) throw OrderTooSmall("iterated_compose_oracle: need f up to order n");
    Rational total(0);
    for_each_partition_chain(static_cast<int>(n), static_cast<int>(depth), 1,
                             !allow_trivial_top, [&](const PartitionChain& chain) {
        Rational term = f[chain.top_count()];
        for (const auto& level : chain.levels)
            for (const auto& block : level) term *= f[block.size()];
        total += term;
    });
    return total;
}

Rational faa_di_bruno_sum(const EgfSeries& f, const EgfSeries& g, unsigned n) {
    if (!g[0].is_zero())
        throw NonzeroConstantInner("faa_di_bruno_sum: inner constant term must be zero");
    if (n == 0) return f[0];
    Rational total(0);
    for_each_set_partition(static_cast<int>(n), 1, [&](const SetPartition& part) {
        Rational term = f[part.size()];
        for (const auto& block : part) term *= g[block.size()];
        total += term;
    });
    return total;
}

Rational chain_sum_comp_bernoulli(const EgfSeries& f, unsigned n_shift, unsigned n) {
    if (n < 2) throw Error("chain_sum_comp_bernoulli: n must be >= 2");
    if (n_shift < 1) throw Error("chain_sum_comp_bernoulli: N must be >= 1");
    if (f.order() < n + n_shift - 1)
        throw OrderTooSmall("chain_sum_comp_bernoulli: need f up to order n + N - 1");
    if (f[n_shift].is_zero()) throw ZeroPivot("chain_sum_comp_bernoulli: f_N = 0");
    const Rational nfact(factorial(n_shift));
    const auto weight = [&](std::size_t m) {
        return f[m + n_shift - 1] * Rational(factorial(m)) /
               Rational(factorial(m + n_shift - 1));
    };
    Rational total = -(nfact * weight(n));
    // Blocks of size >= 2 halve the count per level, so depth is bounded.
    for (int depth = 1; (n >> depth) >= 2 || depth == 1; ++depth) {
        bool any = false;
        for_each_partition_chain(static_cast<int>(n), depth, 2, true,
                                 [&](const PartitionChain& chain) {
            any = true;
            Rational term = (-nfact).pow(depth + 1) * weight(chain.top_count());
            for (const auto& level : chain.levels)
                for (const auto& block : level) term *= weight(block.size());
            total += term;
        });
        if (!any) break;
    }
    return total;
}

Rational xf_inverse_chain_sum(const EgfSeries& f, unsigned n) {
    if (n < 2) throw Error("xf_inverse_chain_sum: n must be >= 2");
    if (!f[0].is_zero() || f.order() < 1 || !f[1].is_zero())
        throw Error("xf_inverse_chain_sum: requires f_0 = f_1 = 0");
    if (f.order() < n) throw OrderTooSmall("xf_inverse_chain_sum: need f up to order n");
    Rational total = -f[n];
    for (int depth = 1; (n >> depth) >= 2 || depth == 1; ++depth) {
        bool any = false;
        for_each_partition_chain(static_cast<int>(n), depth, 2, true,
                                 [&](const PartitionChain& chain) {
            any = true;
            Rational term = depth % 2 == 0 ? Rational(-1) : Rational(1);
            term *= f[chain.top_count()];
            for (const auto& level : chain.levels)
                for (const auto& block : level) term *= f[block.size()];
            total += term;
        });
        if (!any) break;
    }
    return total;
}

} // namespace ratcomb
