#include "ratcomb/groupoid.hpp"

#include <algorithm>
#include <numeric>

#include "ratcomb/error.hpp"

namespace ratcomb {

namespace {

constexpr std::size_t kClassBound = 1'000'000;

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > UINT64_MAX / a)
        throw SizeExplosion("groupoid class data overflows 64 bits");
    return a * b;
}

std::vector<GroupoidClass> canonicalize(std::vector<GroupoidClass> classes) {
    std::erase_if(classes, [](const GroupoidClass& c) { return c.multiplicity == 0; });
    for (const GroupoidClass& c : classes)
        if (c.aut == 0) throw Error("groupoid class with empty automorphism group");
    std::sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) {
        return a.aut != b.aut ? a.aut < b.aut : a.parity < b.parity;
    });
    std::vector<GroupoidClass> merged;
    for (const GroupoidClass& c : classes) {
        if (!merged.empty() && merged.back().aut == c.aut &&
            merged.back().parity == c.parity) {
            merged.back().multiplicity += c.multiplicity;
        } else {
            merged.push_back(c);
        }
    }
    return merged;
}

} // namespace

GroupoidCard::GroupoidCard(std::vector<GroupoidClass> classes)
    : classes_(canonicalize(std::move(classes))) {}

Rational groupoid_cardinality(const GroupoidCard& g) {
    Rational total(0);
    for (const GroupoidClass& c : g.classes()) {
        Rational term(mpz_class(c.multiplicity), mpz_class(c.aut));
        total += c.parity == 0 ? term : -term;
    }
    return total;
}

GroupoidCard groupoid_union(const GroupoidCard& g, const GroupoidCard& h) {
    std::vector<GroupoidClass> classes = g.classes();
    classes.insert(classes.end(), h.classes().begin(), h.classes().end());
    return GroupoidCard(std::move(classes));
}

GroupoidCard groupoid_product(const GroupoidCard& g, const GroupoidCard& h) {
    if (g.class_count() * h.class_count() > kClassBound)
        throw SizeExplosion("groupoid product exceeds the class-count bound");
    std::vector<GroupoidClass> classes;
    classes.reserve(g.class_count() * h.class_count());
    for (const GroupoidClass& a : g.classes())
        for (const GroupoidClass& b : h.classes())
            classes.push_back(GroupoidClass{checked_mul(a.aut, b.aut),
                                            (a.parity + b.parity) % 2,
                                            checked_mul(a.multiplicity, b.multiplicity)});
    return GroupoidCard(std::move(classes));
}

GroupoidCard groupoid_negate(const GroupoidCard& g) {
    std::vector<GroupoidClass> classes = g.classes();
    for (GroupoidClass& c : classes) c.parity ^= 1u;
    return GroupoidCard(std::move(classes));
}

GroupoidCard discrete_groupoid(std::uint64_t m) {
    if (m == 0) return GroupoidCard();
    return GroupoidCard({GroupoidClass{1, 0, m}});
}

GroupoidCard cyclic_groupoid(long long m) {
    if (m == 0) throw Error("cyclic_groupoid: order must be nonzero");
    const std::uint64_t order = m < 0 ? static_cast<std::uint64_t>(-m)
                                      : static_cast<std::uint64_t>(m);
    GroupoidCard g({GroupoidClass{order, 0, 1}});
    return m < 0 ? groupoid_negate(g) : g;
}

GroupoidCard power_groupoid(const GroupoidCard& g, unsigned m) {
    GroupoidCard acc = discrete_groupoid(1);  // unit for the product
    for (unsigned i = 0; i < m; ++i) acc = groupoid_product(acc, g);
    return acc;
}

GroupoidCard pochhammer_groupoid(const GroupoidCard& g, unsigned n,
                                 const GroupoidCard& k) {
    GroupoidCard acc = discrete_groupoid(1);
    for (unsigned i = 0; i < n; ++i) {
        const GroupoidCard factor =
            groupoid_union(g, groupoid_product(k, discrete_groupoid(i)));
        acc = groupoid_product(acc, factor);
    }
    return acc;
}

GroupoidCard cyclic_chain_groupoid(long long m, unsigned n, unsigned l) {
    GroupoidCard acc = discrete_groupoid(1);
    for (unsigned i = 0; i < n; ++i) {
        const long long order = m + static_cast<long long>(i) * l;
        if (order == 0)
            throw PochhammerZeroDenominator(
                "cyclic chain hits a zero factor at i = " + std::to_string(i), i);
        acc = groupoid_product(acc, cyclic_groupoid(order));
    }
    return acc;
}

Rational hyper_groupoid_card(const SignedRatio& r1, const SignedRatio& r2,
                             const SignedRatio& r3, unsigned n) {
    const auto signed_discrete = [](const SignedRatio& r) {
        const GroupoidCard d = discrete_groupoid(r.num);
        return r.sign < 0 ? groupoid_negate(d) : d;
    };
    GroupoidCard g = pochhammer_groupoid(signed_discrete(r1), n,
                                         discrete_groupoid(r1.den));
    g = groupoid_product(g, pochhammer_groupoid(signed_discrete(r2), n,
                                                discrete_groupoid(r2.den)));
    g = groupoid_product(g, power_groupoid(cyclic_groupoid(r1.den), n));
    g = groupoid_product(g, power_groupoid(cyclic_groupoid(r2.den), n));
    g = groupoid_product(
        g, cyclic_chain_groupoid(static_cast<long long>(r3.sign) * r3.num, n, r3.den));
    g = groupoid_product(g, power_groupoid(discrete_groupoid(r3.den), n));
    return groupoid_cardinality(g);
}

namespace {

std::vector<std::vector<unsigned>> all_permutations(unsigned n) {
    std::vector<unsigned> p(n);
    std::iota(p.begin(), p.end(), 0u);
    std::vector<std::vector<unsigned>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

unsigned apply_perm_to_mask(const std::vector<unsigned>& perm, unsigned mask) {
    unsigned out = 0;
    for (unsigned i = 0; i < perm.size(); ++i)
        if (mask & (1u << i)) out |= 1u << perm[i];
    return out;
}

} // namespace

Rational action_groupoid_subsets(unsigned n) {
    if (n > 8) throw SizeExplosion("action_groupoid_subsets: n must be <= 8");
    const auto perms = all_permutations(n);
    const unsigned object_count = 1u << n;
    std::vector<bool> seen(object_count, false);
    Rational total(0);
    for (unsigned rep = 0; rep < object_count; ++rep) {
        if (seen[rep]) continue;
        std::uint64_t stabilizer = 0;
        for (const auto& perm : perms) {
            const unsigned image = apply_perm_to_mask(perm, rep);
            seen[image] = true;
            if (image == rep) ++stabilizer;
        }
        total += Rational(1, static_cast<long>(stabilizer));
    }
    return total;
}

Rational action_groupoid_ek(unsigned n, unsigned k) {
    if (k < 1) throw Error("action_groupoid_ek: k must be >= 1");
    if (n > 5 || k > 3)
        throw SizeExplosion("action_groupoid_ek: bounds are n <= 5, k <= 3");
    const unsigned tuple_len = k - 1;
    if (tuple_len == 0) return Rational(1);  // one object, trivial group
    const auto perms = all_permutations(n);
    const unsigned bits = tuple_len * n;
    const unsigned object_count = 1u << bits;
    const unsigned mask_n = (1u << n) - 1;

    // Group elements are tuple_len-tuples of permutation indices acting
    // componentwise on tuples of subsets.
    std::vector<std::vector<std::size_t>> group;
    {
        std::vector<std::size_t> idx(tuple_len, 0);
        while (true) {
            group.push_back(idx);
            std::size_t pos = 0;
            while (pos < tuple_len && ++idx[pos] == perms.size()) {
                idx[pos] = 0;
                ++pos;
            }
            if (pos == tuple_len) break;
        }
    }

    std::vector<bool> seen(object_count, false);
    Rational total(0);
    for (unsigned rep = 0; rep < object_count; ++rep) {
        if (seen[rep]) continue;
        std::uint64_t stabilizer = 0;
        for (const auto& element : group) {
            unsigned image = 0;
            for (unsigned slot = 0; slot < tuple_len; ++slot) {
                const unsigned part = (rep >> (slot * n)) & mask_n;
                image |= apply_perm_to_mask(perms[element[slot]], part) << (slot * n);
            }
            seen[image] = true;
            if (image == rep) ++stabilizer;
        }
        total += Rational(1, static_cast<long>(stabilizer));
    }
    return total;
}

} // namespace ratcomb
