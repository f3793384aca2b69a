#include "cohomotopy/classify.hpp"

#include <sstream>

namespace cohomotopy {

std::string TypeTag::to_string() const {
    switch (kind) {
        case I: return "I";
        case II: return "II";
        case III1: return "III1";
        case III2: {
            std::ostringstream ss;
            ss << "III2(radius " << radius << ")";
            return ss.str();
        }
    }
    return "?";
}

namespace {

// Structural violations break the algebra and are always fatal; duality
// violations are the CLI's --permissive concern, not a precondition here.
void require_valid(const ManifoldData& x, const char* who) {
    for (const auto& v : validate(x))
        if (!v.duality)
            throw std::invalid_argument(std::string(who) + ": invalid manifold data: " + v.message);
}

void require_zero_class(const ManifoldData& x, const GroupElement& alpha, const char* who) {
    Int s = self_intersection(x, alpha);
    if (s != 0) {
        std::ostringstream msg;
        msg << who << ": class " << alpha.to_string() << " has self-intersection " << s;
        throw std::invalid_argument(msg.str());
    }
}

}  // namespace

Parity parity(const ManifoldData& x) {
    // Q(v,v) = sum v_i^2 q_ii mod 2, so odd iff some diagonal entry is odd.
    for (std::size_t i = 0; i < x.q.rows(); ++i)
        if (x.q(i, i) % 2 != 0) return Parity::odd;
    return Parity::even;
}

bool is_spin(const ManifoldData& x) {
    return parity(x) == Parity::even && x.w.is_zero();
}

FinAbGroup f1_group(const ManifoldData& x) {
    require_valid(x, "f1_group");
    if (parity(x) == Parity::odd) return x.h1;
    return classify_extension(x.h1, x.w);
}

std::vector<Int> F1Presentation::lift(const GroupElement& x) const {
    if (x.group() != h1) throw std::invalid_argument("F1Presentation::lift: element not in h1");
    std::vector<Int> word(x.coords().begin(), x.coords().end());
    if (has_u) word.push_back(0);
    return word;
}

F1Presentation f1_presentation(const ManifoldData& x) {
    require_valid(x, "f1_presentation");
    F1Presentation pres;
    pres.h1 = x.h1;
    pres.has_u = parity(x) == Parity::even;

    const std::size_t t = x.h1.torsion_rank();
    const std::size_t n = x.h1.num_generators() + (pres.has_u ? 1 : 0);
    const std::size_t u = n - 1;  // u slot when present

    pres.presentation.num_generators = n;
    pres.presentation.relations = IntMat(t + (pres.has_u ? 1 : 0), n);
    const auto even = x.h1.even_factor_indices();
    for (std::size_t i = 0; i < t; ++i) {
        pres.presentation.relations(i, i) = x.h1.torsion()[i];
        if (pres.has_u && x.h1.torsion()[i] % 2 == 0) {
            std::size_t p = 0;
            while (even[p] != i) ++p;
            pres.presentation.relations(i, u) = -Int(x.w.bits[p]);
        }
    }
    if (pres.has_u) pres.presentation.relations(t, u) = 2;
    return pres;
}

GroupHom i_alpha(const ManifoldData& x, const GroupElement& alpha) {
    require_valid(x, "i_alpha");
    FinAbGroup h3 = FinAbGroup::free(x.h3_rank);
    std::vector<GroupElement> images;
    images.reserve(x.h3_rank);
    for (std::size_t j = 0; j < x.h3_rank; ++j) images.push_back(x.pair_h3(alpha, j));
    return GroupHom(h3, x.h1, std::move(images));
}

Int self_intersection(const ManifoldData& x, const GroupElement& alpha) {
    if (alpha.group() != x.h2) throw std::invalid_argument("self_intersection: class not in H_2");
    const std::size_t t = x.h2.torsion_rank();
    Int acc = 0;
    for (std::size_t i = 0; i < x.h2.free_rank(); ++i) {
        const Int& ai = alpha.coords()[t + i];
        if (ai == 0) continue;
        for (std::size_t j = 0; j < x.h2.free_rank(); ++j) acc += ai * alpha.coords()[t + j] * x.q(i, j);
    }
    return acc;
}

std::vector<GroupElement> h2_zero_classes(const ManifoldData& x, int bound) {
    require_valid(x, "h2_zero_classes");
    if (bound < 1) throw std::invalid_argument("h2_zero_classes: bound must be positive");
    const std::size_t t = x.h2.torsion_rank();
    const std::size_t f = x.h2.free_rank();

    std::vector<GroupElement> out;
    std::vector<Int> free_coords(f, -bound);
    bool more = true;
    while (more) {
        std::vector<Int> coords(t + f);
        for (std::size_t i = 0; i < f; ++i) coords[t + i] = free_coords[i];
        GroupElement probe(x.h2, coords);
        if (self_intersection(x, probe) == 0) {
            // every torsion combination, lexicographic
            std::vector<Int> tors(t, 0);
            bool tmore = true;
            while (tmore) {
                std::vector<Int> c = coords;
                for (std::size_t i = 0; i < t; ++i) c[i] = tors[i];
                out.emplace_back(x.h2, c);
                tmore = false;
                for (std::size_t i = t; i-- > 0;) {
                    if (++tors[i] < x.h2.torsion()[i]) {
                        tmore = true;
                        break;
                    }
                    tors[i] = 0;
                }
            }
        }
        more = false;
        for (std::size_t i = f; i-- > 0;) {
            if (++free_coords[i] <= bound) {
                more = true;
                break;
            }
            free_coords[i] = -bound;
        }
    }
    return out;
}

bool is_twisted_2class(const ManifoldData& x, const GroupElement& alpha) {
    require_valid(x, "is_twisted_2class");
    require_zero_class(x, alpha, "is_twisted_2class");
    if (parity(x) == Parity::odd) return false;
    Subgroup s = intersect_subgroups(image_subgroup(i_alpha(x, alpha)), tor2(x.h1));
    for (const auto& g : s.generators)
        if (eval_functional(x.w, g) == 1) return true;
    return false;
}

TypeTag manifold_type(const ManifoldData& x, int radius) {
    require_valid(x, "manifold_type");
    if (radius < 1) throw std::invalid_argument("manifold_type: radius must be positive");
    if (parity(x) == Parity::odd) return {TypeTag::I, 0};
    if (is_spin(x)) return {TypeTag::II, 0};
    for (const auto& alpha : h2_zero_classes(x, radius))
        if (is_twisted_2class(x, alpha)) return {TypeTag::III1, 0};
    return {TypeTag::III2, radius};
}

FinAbGroup fiber_group(const ManifoldData& x, const GroupElement& alpha) {
    require_valid(x, "fiber_group");
    require_zero_class(x, alpha, "fiber_group");

    F1Presentation pres = f1_presentation(x);
    IntMat rels(pres.presentation.relations.rows() + x.h3_rank, pres.num_generators());
    for (std::size_t i = 0; i < pres.presentation.relations.rows(); ++i)
        for (std::size_t j = 0; j < pres.num_generators(); ++j)
            rels(i, j) = pres.presentation.relations(i, j);
    for (std::size_t j = 0; j < x.h3_rank; ++j) {
        std::vector<Int> word = pres.lift(x.pair_h3(alpha, j));
        for (std::size_t k = 0; k < word.size(); ++k)
            rels(pres.presentation.relations.rows() + j, k) = 2 * word[k];
    }
    return normalize_presentation({pres.num_generators(), rels}).group;
}

CohomotopyReport cohomotopy_report(const ManifoldData& x, int bound, int radius) {
    require_valid(x, "cohomotopy_report");
    CohomotopyReport r;
    r.parity = parity(x);
    r.spin = is_spin(x);
    r.type = manifold_type(x, radius);
    r.pi1 = FinAbGroup::free(x.h1.free_rank());
    r.pi3 = f1_group(x);
    r.pi4 = FinAbGroup::free(1);
    r.bound = bound;
    r.radius = radius;
    for (const auto& alpha : h2_zero_classes(x, bound))
        r.pi2.push_back({alpha, fiber_group(x, alpha), is_twisted_2class(x, alpha)});
    return r;
}

}  // namespace cohomotopy
