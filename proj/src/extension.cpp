#include "cohomotopy/extension.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>

namespace cohomotopy {

int eval_functional(const Z2Functional& phi, const GroupElement& x) {
    if (x.group() != phi.base)
        throw std::invalid_argument("eval_functional: element not in the base group");
    if (!phi.well_formed())
        throw std::invalid_argument("eval_functional: bit count does not match base");
    if (!x.is_two_torsion())
        throw std::invalid_argument("eval_functional: element has order > 2");
    int acc = 0;
    const auto even = phi.base.even_factor_indices();
    for (std::size_t p = 0; p < even.size(); ++p)
        if (x.coords()[even[p]] != 0) acc ^= phi.bits[p];
    return acc;
}

namespace {

int two_adic_valuation(Int d) {
    int v = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++v;
    }
    return v;
}

}  // namespace

FinAbGroup classify_extension(const FinAbGroup& b, const Z2Functional& phi) {
    if (phi.base != b || !phi.well_formed())
        throw std::invalid_argument("classify_extension: functional does not match base group");

    if (phi.is_zero()) {
        std::vector<Int> orders = b.torsion();
        orders.push_back(2);
        FinAbGroup g = FinAbGroup::from_orders(orders);
        return FinAbGroup(g.torsion(), b.free_rank());
    }

    // Primary pieces; each even invariant factor contributes one 2-power
    // summand carrying its bit.
    std::vector<Int> orders;
    struct TwoPart {
        int k;
        int bit;
    };
    std::vector<TwoPart> twos;
    const auto even = b.even_factor_indices();
    std::size_t even_pos = 0;
    for (std::size_t i = 0; i < b.torsion_rank(); ++i) {
        Int d = b.torsion()[i];
        int v = two_adic_valuation(d);
        if (v == 0) {
            orders.push_back(d);
            continue;
        }
        Int odd = d >> v;
        if (odd > 1) orders.push_back(odd);
        twos.push_back({v, phi.bits[even_pos++]});
    }

    int kmax = 0;
    for (const auto& t : twos)
        if (t.bit) kmax = std::max(kmax, t.k);
    bool bumped = false;
    for (auto& t : twos) {
        int k = t.k;
        if (!bumped && t.bit && t.k == kmax) {
            ++k;
            bumped = true;
        }
        orders.push_back(Int(1) << k);
    }

    FinAbGroup g = FinAbGroup::from_orders(orders);
    return FinAbGroup(g.torsion(), b.free_rank());
}

namespace {

// The oracle works with explicit tuples over small cyclic orders; plain
// machine ints are plenty for |E| <= 512.
using Tuple = std::vector<int32_t>;

struct SmallGroup {
    std::vector<int32_t> orders;

    std::vector<Tuple> elements() const {
        std::vector<Tuple> out{Tuple(orders.size(), 0)};
        for (std::size_t i = 0; i < orders.size(); ++i) {
            std::vector<Tuple> next;
            next.reserve(out.size() * orders[i]);
            for (const auto& e : out)
                for (int32_t v = 0; v < orders[i]; ++v) {
                    Tuple t = e;
                    t[i] = v;
                    next.push_back(std::move(t));
                }
            out = std::move(next);
        }
        return out;
    }
    Tuple add(const Tuple& a, const Tuple& b) const {
        Tuple c(orders.size());
        for (std::size_t i = 0; i < orders.size(); ++i) c[i] = (a[i] + b[i]) % orders[i];
        return c;
    }
    Tuple dbl(const Tuple& a) const { return add(a, a); }
    bool is_zero(const Tuple& a) const {
        for (int32_t v : a)
            if (v) return false;
        return true;
    }
    int order_of(const Tuple& x) const {
        Tuple acc = x;
        int m = 1;
        while (!is_zero(acc)) {
            acc = add(acc, x);
            ++m;
        }
        return m;
    }
};

// Order statistics determine a finite abelian group up to isomorphism.
using OrderStats = std::map<int, std::size_t>;

// Quotient of E by the order-2 subgroup {0, z}, scanned once: cosets are
// canonicalized to min(x, x + z); the induced functional on the socle of
// the quotient sends [x] to (2x == z).  The quotient's isomorphism type
// and the largest 2-height at which the functional is 1 (the orbit
// invariant of the functional under automorphisms; -1 when it vanishes)
// are all the oracle needs to retain.
struct QuotientScan {
    OrderStats stats;
    int depth = -1;
};

QuotientScan scan_quotient(const SmallGroup& e, const std::vector<Tuple>& elements, const Tuple& z) {
    auto rep = [&](const Tuple& x) {
        Tuple y = e.add(x, z);
        return x <= y ? x : y;
    };
    std::set<Tuple> reps;
    for (const auto& x : elements) reps.insert(rep(x));

    QuotientScan out;
    auto coset_order = [&](const Tuple& x) {
        Tuple acc = x;
        int m = 1;
        while (!(e.is_zero(acc) || acc == z)) {
            acc = e.add(acc, x);
            ++m;
        }
        return m;
    };
    for (const auto& x : reps) ++out.stats[coset_order(x)];

    // power_images[m] = reps of 2^m Q; stabilizes at the odd part
    std::vector<std::set<Tuple>> power_images{reps};
    while (true) {
        std::set<Tuple> next;
        for (const auto& x : power_images.back()) next.insert(rep(e.dbl(x)));
        if (next == power_images.back()) break;
        power_images.push_back(std::move(next));
    }
    for (const auto& x : reps) {
        if (e.dbl(x) != z) continue;  // functional value 0, or order > 2
        int h = 0;
        for (std::size_t m = 1; m < power_images.size(); ++m)
            if (power_images[m].count(x)) h = static_cast<int>(m);
        out.depth = std::max(out.depth, h);
    }
    return out;
}

// depth of phi itself, by brute force over the torsion part of its base
int functional_depth(const FinAbGroup& b, const Z2Functional& phi) {
    SmallGroup sg;
    for (const Int& d : b.torsion()) sg.orders.push_back(static_cast<int32_t>(d));
    auto elements = sg.elements();
    std::vector<std::set<Tuple>> power_images{{elements.begin(), elements.end()}};
    while (true) {
        std::set<Tuple> next;
        for (const auto& x : power_images.back()) next.insert(sg.dbl(x));
        if (next == power_images.back()) break;
        power_images.push_back(std::move(next));
    }
    int depth = -1;
    for (const auto& x : elements) {
        if (!sg.is_zero(sg.dbl(x))) continue;
        std::vector<Int> coords(b.num_generators());
        for (std::size_t i = 0; i < x.size(); ++i) coords[i] = x[i];
        if (eval_functional(phi, GroupElement(b, coords)) != 1) continue;
        int h = 0;
        for (std::size_t m = 1; m < power_images.size(); ++m)
            if (power_images[m].count(x)) h = static_cast<int>(m);
        depth = std::max(depth, h);
    }
    return depth;
}

// All multisets of prime-power cyclic orders with the given product.
void partitions(unsigned n, unsigned maxpart, std::vector<unsigned>& cur,
                std::vector<std::vector<unsigned>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (unsigned p = std::min(n, maxpart); p >= 1; --p) {
        cur.push_back(p);
        partitions(n - p, p, cur, out);
        cur.pop_back();
    }
}

std::vector<SmallGroup> abelian_groups_of_order(Int n) {
    std::map<Int, unsigned> fact;
    for (Int p = 2; p * p <= n; ++p)
        while (n % p == 0) {
            ++fact[p];
            n /= p;
        }
    if (n > 1) ++fact[n];

    std::vector<SmallGroup> out{SmallGroup{}};
    for (const auto& [p, e] : fact) {
        std::vector<std::vector<unsigned>> parts;
        std::vector<unsigned> cur;
        partitions(e, e, cur, parts);
        std::vector<SmallGroup> next;
        for (const auto& g : out)
            for (const auto& part : parts) {
                SmallGroup h = g;
                for (unsigned k : part) {
                    int32_t pe = 1;
                    for (unsigned i = 0; i < k; ++i) pe *= static_cast<int32_t>(p);
                    h.orders.push_back(pe);
                }
                next.push_back(std::move(h));
            }
        out = std::move(next);
    }
    return out;
}

// For every abelian E of order 2|B| and every order-2 z with E/<z>
// isomorphic to B, the set of functional depths E realizes.
struct OracleTable {
    std::vector<std::pair<FinAbGroup, std::set<int>>> candidates;
};

OracleTable build_oracle_table(const FinAbGroup& b) {
    SmallGroup sb;
    for (const Int& d : b.torsion()) sb.orders.push_back(static_cast<int32_t>(d));
    OrderStats b_stats;
    for (const auto& x : sb.elements()) ++b_stats[sb.order_of(x)];

    OracleTable table;
    for (const auto& e : abelian_groups_of_order(2 * b.order())) {
        auto elements = e.elements();
        std::set<int> realized;
        for (const auto& z : elements) {
            if (e.order_of(z) != 2) continue;
            QuotientScan scan = scan_quotient(e, elements, z);
            if (scan.stats != b_stats) continue;
            realized.insert(scan.depth);
        }
        std::vector<Int> orders(e.orders.begin(), e.orders.end());
        table.candidates.emplace_back(FinAbGroup::from_orders(orders), std::move(realized));
    }
    return table;
}

FinAbGroup oracle_lookup(const FinAbGroup& b, const OracleTable& table, int phi_depth,
                         const Z2Functional& phi) {
    std::vector<FinAbGroup> matches;
    for (const auto& [e, realized] : table.candidates)
        if (realized.count(phi_depth)) matches.push_back(e);
    std::sort(matches.begin(), matches.end(),
              [](const FinAbGroup& x, const FinAbGroup& y) { return x.torsion() < y.torsion(); });
    matches.erase(std::unique(matches.begin(), matches.end()), matches.end());
    if (matches.size() != 1) {
        std::ostringstream msg;
        msg << "extension oracle: " << matches.size() << " candidate groups realize bits [";
        for (std::size_t i = 0; i < phi.bits.size(); ++i) msg << (i ? "," : "") << phi.bits[i];
        msg << "] over " << b.to_string();
        throw std::runtime_error(msg.str());
    }
    return matches[0];
}

}  // namespace

FinAbGroup brute_force_extension_oracle(const FinAbGroup& b, const Z2Functional& phi) {
    if (phi.base != b || !phi.well_formed())
        throw std::invalid_argument("extension oracle: functional does not match base group");
    if (!b.is_finite() || b.order() > 256)
        throw std::invalid_argument("extension oracle: base group must be finite of order <= 256");
    OracleTable table = build_oracle_table(b);
    return oracle_lookup(b, table, functional_depth(b, phi), phi);
}

std::vector<FinAbGroup> abelian_two_groups_up_to(const Int& max_order) {
    std::vector<FinAbGroup> out;
    for (Int n = 2; n <= max_order; n *= 2)
        for (const auto& g : abelian_groups_of_order(n)) {
            std::vector<Int> orders(g.orders.begin(), g.orders.end());
            out.push_back(FinAbGroup::from_orders(orders));
        }
    return out;
}

std::size_t extension_oracle_sweep(const Int& max_order) {
    if (max_order > 256)
        throw std::invalid_argument("extension_oracle_sweep: max order is 256");
    std::size_t cases = 0;
    for (const auto& b : abelian_two_groups_up_to(max_order)) {
        OracleTable table = build_oracle_table(b);
        const std::size_t nbits = b.even_factor_indices().size();
        for (std::size_t mask = 0; mask < (std::size_t(1) << nbits); ++mask) {
            Z2Functional phi{b, {}};
            for (std::size_t i = 0; i < nbits; ++i) phi.bits.push_back((mask >> i) & 1);
            FinAbGroup fast = classify_extension(b, phi);
            FinAbGroup slow = oracle_lookup(b, table, functional_depth(b, phi), phi);
            if (fast != slow) {
                std::ostringstream msg;
                msg << "extension mismatch over " << b.to_string() << " bits [";
                for (std::size_t i = 0; i < nbits; ++i) msg << (i ? "," : "") << phi.bits[i];
                msg << "]: recipe " << fast.to_string() << " vs oracle " << slow.to_string();
                throw std::runtime_error(msg.str());
            }
            ++cases;
        }
    }
    return cases;
}

}  // namespace cohomotopy
