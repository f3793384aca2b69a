#pragma once

#include "cohomotopy/smith.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cohomotopy {

/// Finitely generated abelian group in invariant-factor normal form:
/// Z_{d1} + ... + Z_{dt} + Z^free_rank with 2 <= d1 | d2 | ... | dt.
/// Equality of groups is equality of the normal form.
class FinAbGroup {
public:
    FinAbGroup() : free_rank_(0) {}
    FinAbGroup(std::vector<Int> torsion, std::size_t free_rank);

    static FinAbGroup trivial() { return FinAbGroup(); }
    static FinAbGroup free(std::size_t rank) { return FinAbGroup({}, rank); }
    static FinAbGroup cyclic(const Int& d);

    /// Canonical group with the given cyclic orders (any order, 0 = Z,
    /// 1 = trivial); renormalized to the invariant-factor chain.
    static FinAbGroup from_orders(const std::vector<Int>& orders);

    const std::vector<Int>& torsion() const { return torsion_; }
    std::size_t free_rank() const { return free_rank_; }
    std::size_t torsion_rank() const { return torsion_.size(); }
    std::size_t num_generators() const { return torsion_.size() + free_rank_; }

    bool is_trivial() const { return torsion_.empty() && free_rank_ == 0; }
    bool is_finite() const { return free_rank_ == 0; }
    Int order() const;  // throws if infinite

    /// Multiset of prime-power cyclic orders (derived view; the 2-part
    /// drives the extension module).  Sorted ascending.
    std::vector<Int> primary_orders() const;

    /// Indices of the even invariant factors (they form a suffix).
    std::vector<std::size_t> even_factor_indices() const;

    bool operator==(const FinAbGroup& o) const {
        return free_rank_ == o.free_rank_ && torsion_ == o.torsion_;
    }
    bool operator!=(const FinAbGroup& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    std::vector<Int> torsion_;
    std::size_t free_rank_;
};

/// Element of a FinAbGroup: torsion coordinates first (reduced into
/// [0, d_i)), then free coordinates.
class GroupElement {
public:
    GroupElement(FinAbGroup group, std::vector<Int> coords);

    static GroupElement zero(const FinAbGroup& g);
    static GroupElement generator(const FinAbGroup& g, std::size_t i);

    const FinAbGroup& group() const { return group_; }
    const std::vector<Int>& coords() const { return coords_; }

    bool is_zero() const;
    /// x has order dividing 2.
    bool is_two_torsion() const;

    GroupElement operator+(const GroupElement& o) const;
    GroupElement operator-() const;
    GroupElement operator*(const Int& n) const;
    bool operator==(const GroupElement& o) const {
        return group_ == o.group_ && coords_ == o.coords_;
    }
    bool operator!=(const GroupElement& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    FinAbGroup group_;
    std::vector<Int> coords_;
};

/// Homomorphism between FinAbGroups, given by generator images.
class GroupHom {
public:
    GroupHom(FinAbGroup source, FinAbGroup target, std::vector<GroupElement> images);

    static GroupHom zero(const FinAbGroup& source, const FinAbGroup& target);

    const FinAbGroup& source() const { return source_; }
    const FinAbGroup& target() const { return target_; }
    const std::vector<GroupElement>& images() const { return images_; }

    /// d_i * images[i] = 0 for every torsion generator of order d_i.
    bool is_well_defined() const;

    GroupElement apply(const GroupElement& x) const;
    /// Same hom with every image doubled.
    GroupHom doubled() const;

private:
    FinAbGroup source_;
    FinAbGroup target_;
    std::vector<GroupElement> images_;
};

/// Abstract presentation: num_generators free generators modulo the rows
/// of the relation matrix.
struct PresentedGroup {
    std::size_t num_generators = 0;
    IntMat relations;  // rows are relations over the generators
};

/// Result of normalizing a presentation: the canonical group together
/// with the surjection from the free group on the abstract generators.
struct NormalizedPresentation {
    FinAbGroup group;
    /// generator_images[j] = class of abstract generator j.
    std::vector<GroupElement> generator_images;
    /// generator_preimages[k] = a word in the abstract generators that
    /// maps onto the k-th canonical generator of group.
    std::vector<std::vector<Int>> generator_preimages;

    GroupElement map(const std::vector<Int>& word) const;
};

NormalizedPresentation normalize_presentation(const PresentedGroup& p);

/// Subgroup of a FinAbGroup spanned by a list of elements.
struct Subgroup {
    FinAbGroup ambient;
    std::vector<GroupElement> generators;

    static Subgroup trivial(const FinAbGroup& g) { return {g, {}}; }
    static Subgroup whole(const FinAbGroup& g);
};

struct CokernelResult {
    FinAbGroup group;
    GroupHom projection;  // target(f) ->> cokernel
};

CokernelResult cokernel(const GroupHom& f);

Subgroup image_subgroup(const GroupHom& f);

/// Membership with an integer-combination witness over the generators.
std::optional<std::vector<Int>> subgroup_witness(const Subgroup& s, const GroupElement& x);
bool subgroup_contains(const Subgroup& s, const GroupElement& x);

/// Subgroup of elements of order at most 2, generated by (d_i/2) g_i for
/// each even invariant factor.
Subgroup tor2(const FinAbGroup& g);

Subgroup intersect_subgroups(const Subgroup& s, const Subgroup& t);

}  // namespace cohomotopy
