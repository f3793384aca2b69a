#pragma once

#include "cohomotopy/manifold.hpp"

namespace cohomotopy {

enum class Parity { odd, even };

/// I = odd, II = spin, III = even but not spin; III splits by whether a
/// twisted 2-dimensional class was found.  A III2 verdict is a bounded
/// certificate and carries the search radius it holds for.
struct TypeTag {
    enum Kind { I, II, III1, III2 } kind = I;
    int radius = 0;  // meaningful for III2

    std::string to_string() const;
    bool operator==(const TypeTag& o) const {
        return kind == o.kind && (kind != III2 || radius == o.radius);
    }
};

/// Presentation of the framed-link group over h1: lifts of the torsion
/// generators, lifts of the free generators, and (when the manifold is
/// even) one extra generator u of order 2 twisted into the torsion
/// relations by the characteristic bits.
struct F1Presentation {
    FinAbGroup h1;
    bool has_u = false;
    PresentedGroup presentation;

    std::size_t num_generators() const { return presentation.num_generators; }
    /// Coordinatewise lift of an h1 element to a word (u-coordinate 0).
    std::vector<Int> lift(const GroupElement& x) const;
};

struct Pi2Row {
    GroupElement alpha;
    FinAbGroup fiber;
    bool twisted = false;
};

/// Everything the tool knows about [X, S^n] for all n.  pi2 enumerates
/// the torsor fibers over the self-intersection-zero classes inside the
/// recorded bound; the fibers have no canonical basepoint except over 0.
struct CohomotopyReport {
    Parity parity = Parity::even;
    bool spin = false;
    TypeTag type;
    FinAbGroup pi1;  // Z^{b_1}
    FinAbGroup pi3;
    FinAbGroup pi4;  // Z
    std::vector<Pi2Row> pi2;
    int bound = 0;
    int radius = 0;
};

Parity parity(const ManifoldData& x);
bool is_spin(const ManifoldData& x);

/// The group of framed links: h1 itself when odd, the extension of h1
/// classified by w when even.
FinAbGroup f1_group(const ManifoldData& x);

F1Presentation f1_presentation(const ManifoldData& x);

/// Intersection with alpha as a homomorphism H_3 = Z^{h3_rank} -> h1.
GroupHom i_alpha(const ManifoldData& x, const GroupElement& alpha);

Int self_intersection(const ManifoldData& x, const GroupElement& alpha);

/// All classes of self-intersection zero whose free coordinates lie in
/// [-bound, bound], every torsion combination included; ordered
/// lexicographically by (free coords, torsion coords) and closed under
/// negation.
std::vector<GroupElement> h2_zero_classes(const ManifoldData& x, int bound);

/// alpha . tau twisted for some tau; exact (the set {alpha . tau} is a
/// subgroup, so only its generators need testing).
bool is_twisted_2class(const ManifoldData& x, const GroupElement& alpha);

TypeTag manifold_type(const ManifoldData& x, int radius);

/// The fiber group over alpha: the framed-link group modulo the doubled
/// lifts of alpha . tau_j (doubling kills the lift ambiguity).
FinAbGroup fiber_group(const ManifoldData& x, const GroupElement& alpha);

CohomotopyReport cohomotopy_report(const ManifoldData& x, int bound, int radius);

}  // namespace cohomotopy
