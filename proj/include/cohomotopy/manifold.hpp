#pragma once

#include "cohomotopy/extension.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace cohomotopy {

/// Homological data of a smooth closed oriented connected 4-manifold:
/// everything the fiber and type computations consume.
///
/// Generator conventions, used consistently for coordinates, q and mu:
/// torsion generators first (invariant-factor order), then free
/// generators.  q lives on the free generators of h2 only; torsion
/// classes pair to zero in Z.  H_3 is free of rank h3_rank.
struct ManifoldData {
    std::string name;  // catalog tag or a caller-supplied label
    FinAbGroup h1;
    FinAbGroup h2;
    std::size_t h3_rank = 0;
    IntMat q;  // symmetric, free generators of h2
    /// mu[g][j] = pairing of h2 generator g with the j-th H_3 generator,
    /// a class in h1; extended bilinearly elsewhere.
    std::vector<std::vector<GroupElement>> mu;
    /// Characteristic functional on Tor2(h1); meaningful when q is even.
    Z2Functional w;

    GroupElement pair_h3(const GroupElement& alpha, std::size_t j) const;
};

struct Violation {
    std::string message;
    bool duality;  // downgradable to a warning under permissive parsing
};

std::vector<Violation> validate(const ManifoldData& x);

/// Closed oriented 3-manifold data for the product-with-circle
/// construction.  H_2(Y) is free of rank b1(Y).
struct ThreeManifoldData {
    std::string name;
    FinAbGroup h1y;
    /// pairing22[i][j] = intersection of the i-th and j-th H_2(Y)
    /// generators, in H_1(Y); antisymmetric.
    std::vector<std::vector<GroupElement>> pairing22;
    /// pairing21(i, l) = intersection number of the i-th H_2(Y)
    /// generator with the l-th free H_1(Y) generator.
    IntMat pairing21;
};

std::vector<Violation> validate(const ThreeManifoldData& y);

// --- constructors -------------------------------------------------------

/// Boundary of S^1 x B^4 with one 2-handle attached along a circle of
/// linking number n with the dotted circle, framed k.  H_1 = H_2 = Z_n
/// (duality from H_2 = Z_n and b_1 = b_3 = 0), no third homology.  For
/// even n the k = 1 version carries the nonzero characteristic bit.
/// k = 1 requires even n: for odd n the two framings give the same
/// manifold.
ManifoldData e_nk(const Int& n, int k);

ManifoldData product_with_circle(const ThreeManifoldData& y);

ManifoldData connected_sum(const ManifoldData& a, const ManifoldData& b);

/// Simply connected 4-manifold with the given unimodular symmetric
/// intersection form.
ManifoldData simply_connected(const IntMat& q);

/// Surgery on E_{2,1} # (T^2 x S^2) along C # J: the standard example of
/// an even non-spin manifold with twisted 2-dimensional classes.
ManifoldData surgered_example();

// --- 3-manifold building blocks -----------------------------------------

ThreeManifoldData lens_space_y(const Int& p, const Int& q);
ThreeManifoldData s2xs1_y();
ThreeManifoldData three_torus_y();

// --- catalog -------------------------------------------------------------

/// Names resolvable by catalog_get: fixed entries plus the parametrized
/// families e_N_K and lens:p,q.
std::vector<std::string> catalog_names();

/// Resolve a catalog name ("t4", "e_2_1", "lens:4,1", ...).  Nullopt for
/// unknown names.
std::optional<ManifoldData> catalog_get(const std::string& name);

}  // namespace cohomotopy
