#pragma once

#include "cohomotopy/abelian.hpp"

namespace cohomotopy {

/// Homomorphism Tor2(base) -> Z_2, recorded as one bit per even
/// invariant factor of base (the value on the canonical generator
/// c_i = (d_i/2) g_i).  Tor2 is elementary abelian on the c_i, so the
/// bits extend uniquely.
struct Z2Functional {
    FinAbGroup base;
    std::vector<int> bits;

    static Z2Functional zero(const FinAbGroup& b) {
        return {b, std::vector<int>(b.even_factor_indices().size(), 0)};
    }
    bool is_zero() const {
        for (int b : bits)
            if (b) return false;
        return true;
    }
    bool well_formed() const { return bits.size() == base.even_factor_indices().size(); }
};

/// Value of the functional on a 2-torsion element.  Throws on elements
/// of order > 2.
int eval_functional(const Z2Functional& phi, const GroupElement& x);

/// Isomorphism type of the central extension 0 -> Z_2 -> E -> B -> 0
/// classified by phi.  If phi = 0 the extension splits.  Otherwise the
/// 2-power summand of maximal exponent among those where phi is 1 gets
/// doubled and no Z_2 is adjoined; equivalently E is presented by
/// <g_i, z | 2z = 0, d_i g_i = phi(c_i) z>.
FinAbGroup classify_extension(const FinAbGroup& b, const Z2Functional& phi);

/// Independent test oracle.  Enumerates every abelian group E of order
/// 2|B| and every order-2 element z of E, forms the quotient E/<z> by
/// explicit cosets, matches it against B by order statistics, and reads
/// off the functional b -> (2 lift(b) == z).  Returns the unique E
/// realizing phi; throws if no E or several non-isomorphic E match.
FinAbGroup brute_force_extension_oracle(const FinAbGroup& b, const Z2Functional& phi);

/// Enumerate all abelian 2-groups of order <= max_order (order >= 2),
/// in increasing order; used by the oracle sweep.
std::vector<FinAbGroup> abelian_two_groups_up_to(const Int& max_order);

/// Oracle agreement sweep over all abelian 2-groups of order <= max_order
/// and all functionals.  Returns the number of cases checked; throws on
/// the first disagreement.
std::size_t extension_oracle_sweep(const Int& max_order);

}  // namespace cohomotopy
