#pragma once

#include <cstdint>
#include <vector>

#include "ratcomb/catalog.hpp"
#include "ratcomb/rational.hpp"

namespace ratcomb {

// Z2-graded finite groupoid abstracted to its multiset of isomorphism
// classes: automorphism-group size, parity, multiplicity. The graded
// cardinality sum((-1)^parity * multiplicity / aut) is all the valuation
// needs, so products stay tractable.
struct GroupoidClass {
    std::uint64_t aut = 1;       // >= 1
    unsigned parity = 0;         // 0 or 1
    std::uint64_t multiplicity = 1;
};

class GroupoidCard {
public:
    GroupoidCard() = default;  // empty groupoid, cardinality 0
    explicit GroupoidCard(std::vector<GroupoidClass> classes);

    const std::vector<GroupoidClass>& classes() const { return classes_; }
    std::size_t class_count() const { return classes_.size(); }
    bool empty() const { return classes_.empty(); }

private:
    std::vector<GroupoidClass> classes_;
};

Rational groupoid_cardinality(const GroupoidCard& g);

GroupoidCard groupoid_union(const GroupoidCard& g, const GroupoidCard& h);
// Pairwise classes: aut multiplied, parity added mod 2 (SizeExplosion past
// the desk-scale class bound).
GroupoidCard groupoid_product(const GroupoidCard& g, const GroupoidCard& h);
GroupoidCard groupoid_negate(const GroupoidCard& g);

// Constructors mirroring the standard conventions.
GroupoidCard discrete_groupoid(std::uint64_t m);
// One object with cyclic automorphism group Z_|m|; negative m flips parity.
GroupoidCard cyclic_groupoid(long long m);
// m-fold Cartesian power; |G^x| = |G|^|x|.
GroupoidCard power_groupoid(const GroupoidCard& g, unsigned m);
// (G)_{n,K} = prod over i < n of (G disjoint-union K x [i]);
// |(G)_{n,K}| = (|G|)_{n,|K|}.
GroupoidCard pochhammer_groupoid(const GroupoidCard& g, unsigned n,
                                 const GroupoidCard& k);
// Z-bar_{m,n,l} = prod over i < n of cyclic(m + i l); cardinality 1/(m)_{n,l}.
// Throws PochhammerZeroDenominator when a factor m + i l vanishes.
GroupoidCard cyclic_chain_groupoid(long long m, unsigned n, unsigned l);

// Cardinality of the hypergeometric groupoid
// (+-[a])_{n,[b]} (+-[c])_{n,[d]} Zbar_b^[n] Zbar_d^[n] Zbar_{+-e,n,f} [f]^[n];
// equals the x^n/n! coefficient of hypergeom_series(r1, r2, r3).
Rational hyper_groupoid_card(const SignedRatio& r1, const SignedRatio& r2,
                             const SignedRatio& r3, unsigned n);

// Cardinalities of action groupoids by explicit orbit-stabilizer
// enumeration over the acting permutation group (never the closed formula).
// subsets(n): subsets of [n] under S_n, equals 2^n/n!; n <= 8.
Rational action_groupoid_subsets(unsigned n);
// Ek(n,k): (k-1)-tuples of subsets under S_n^{k-1}, equals
// 2^{(k-1)n}/(n!)^{k-1}; n <= 5, k <= 3.
Rational action_groupoid_ek(unsigned n, unsigned k);

} // namespace ratcomb
