#include "cohomotopy/manifold.hpp"

#include <sstream>

namespace cohomotopy {

GroupElement ManifoldData::pair_h3(const GroupElement& alpha, std::size_t j) const {
    if (alpha.group() != h2) throw std::invalid_argument("pair_h3: class not in H_2");
    if (j >= h3_rank) throw std::invalid_argument("pair_h3: H_3 generator out of range");
    GroupElement out = GroupElement::zero(h1);
    for (std::size_t g = 0; g < h2.num_generators(); ++g)
        if (alpha.coords()[g] != 0) out = out + mu[g][j] * alpha.coords()[g];
    return out;
}

std::vector<Violation> validate(const ManifoldData& x) {
    std::vector<Violation> v;
    const std::size_t b2 = x.h2.free_rank();

    if (x.q.rows() != b2 || x.q.cols() != b2)
        v.push_back({"q has wrong dimensions (must be square over the free generators of h2)", false});
    else if (!x.q.is_symmetric())
        v.push_back({"q not symmetric", false});
    else if (b2 > 0 && abs(determinant(x.q)) != 1)
        v.push_back({"q not unimodular", true});

    if (x.h3_rank != x.h1.free_rank()) v.push_back({"b3 != b1", true});
    if (x.h2.torsion() != x.h1.torsion()) v.push_back({"torsion(h2) != torsion(h1)", true});

    if (x.mu.size() != x.h2.num_generators()) {
        v.push_back({"mu has wrong shape (one row per h2 generator required)", false});
    } else {
        for (std::size_t g = 0; g < x.mu.size(); ++g) {
            if (x.mu[g].size() != x.h3_rank) {
                v.push_back({"mu has wrong shape (one value per H_3 generator required)", false});
                break;
            }
            for (std::size_t j = 0; j < x.mu[g].size(); ++j) {
                if (x.mu[g][j].group() != x.h1) {
                    v.push_back({"mu value outside h1", false});
                    break;
                }
                if (g < x.h2.torsion_rank() && !(x.mu[g][j] * x.h2.torsion()[g]).is_zero()) {
                    std::ostringstream msg;
                    msg << "mu not well-defined at torsion generator " << g;
                    v.push_back({msg.str(), false});
                }
            }
        }
    }

    if (x.w.base != x.h1 || !x.w.well_formed())
        v.push_back({"w bit count does not match the even invariant factors of h1", false});

    return v;
}

std::vector<Violation> validate(const ThreeManifoldData& y) {
    std::vector<Violation> v;
    const std::size_t b1 = y.h1y.free_rank();

    if (y.pairing22.size() != b1) {
        v.push_back({"pairing22 has wrong shape", false});
    } else {
        for (std::size_t i = 0; i < b1; ++i) {
            if (y.pairing22[i].size() != b1) {
                v.push_back({"pairing22 has wrong shape", false});
                break;
            }
            for (std::size_t j = 0; j < b1; ++j) {
                if (y.pairing22[i][j].group() != y.h1y) {
                    v.push_back({"pairing22 value outside h1", false});
                    break;
                }
                if (y.pairing22[i][j] != -y.pairing22[j][i]) {
                    v.push_back({"pairing22 not antisymmetric", false});
                    i = b1;
                    break;
                }
            }
        }
    }

    if (y.pairing21.rows() != b1 || y.pairing21.cols() != b1)
        v.push_back({"pairing21 has wrong dimensions", false});
    else if (b1 > 0 && abs(determinant(y.pairing21)) != 1)
        v.push_back({"pairing21 not unimodular", true});

    return v;
}

namespace {

// Only structural violations are fatal preconditions; duality violations
// are surfaced through validate() and the CLI's permissive switch.
void require_valid(const ManifoldData& x, const char* who) {
    for (const auto& v : validate(x)) {
        if (v.duality) continue;
        std::ostringstream msg;
        msg << who << ": invalid manifold data: " << v.message;
        throw std::invalid_argument(msg.str());
    }
}

}  // namespace

ManifoldData e_nk(const Int& n, int k) {
    if (n < 2) throw std::invalid_argument("e_nk: n must be >= 2");
    if (k != 0 && k != 1) throw std::invalid_argument("e_nk: k must be 0 or 1");
    if (k == 1 && n % 2 != 0)
        throw std::invalid_argument("e_nk: k = 1 requires even n (odd n admits only one framing class)");

    ManifoldData x;
    std::ostringstream name;
    name << "e_" << n << "_" << k;
    x.name = name.str();
    x.h1 = FinAbGroup::cyclic(n);
    x.h2 = FinAbGroup::cyclic(n);
    x.h3_rank = 0;
    x.q = IntMat(0, 0);
    x.mu.assign(x.h2.num_generators(), {});
    x.w = Z2Functional::zero(x.h1);
    if (n % 2 == 0) x.w.bits[0] = k;
    return x;
}

ManifoldData product_with_circle(const ThreeManifoldData& y) {
    auto violations = validate(y);
    if (!violations.empty())
        throw std::invalid_argument("product_with_circle: invalid 3-manifold data: " +
                                    violations.front().message);

    const std::size_t t = y.h1y.torsion_rank();
    const std::size_t b1 = y.h1y.free_rank();

    ManifoldData x;
    x.name = y.name + " x S1";
    x.h1 = FinAbGroup(y.h1y.torsion(), b1 + 1);
    // h2 = H_2(Y) + H_1(Y): free generators are the b1 surface classes
    // followed by the b1 free curve classes; torsion curve classes first.
    x.h2 = FinAbGroup(y.h1y.torsion(), 2 * b1);
    x.h3_rank = 1 + b1;

    // embed an H_1(Y) class, putting nothing in the circle slot
    auto embed = [&](const GroupElement& e) {
        std::vector<Int> c = e.coords();
        c.push_back(0);
        return GroupElement(x.h1, std::move(c));
    };
    auto circle_slot = [&](const Int& m) {
        std::vector<Int> c(x.h1.num_generators());
        c.back() = m;
        return GroupElement(x.h1, std::move(c));
    };

    x.q = IntMat(2 * b1, 2 * b1);
    for (std::size_t i = 0; i < b1; ++i)
        for (std::size_t l = 0; l < b1; ++l) {
            x.q(i, b1 + l) = y.pairing21(i, l);
            x.q(b1 + l, i) = y.pairing21(i, l);
        }

    const GroupElement zero = GroupElement::zero(x.h1);
    x.mu.assign(x.h2.num_generators(), std::vector<GroupElement>(x.h3_rank, zero));
    // torsion generators: curve classes with [Y]-pairing equal to themselves
    for (std::size_t s = 0; s < t; ++s)
        x.mu[s][0] = embed(GroupElement::generator(y.h1y, s));
    for (std::size_t i = 0; i < b1; ++i) {
        // surface class beta_i against delta_j x S^1
        for (std::size_t j = 0; j < b1; ++j) x.mu[t + i][1 + j] = embed(y.pairing22[j][i]);
        // free curve class gamma_l
        std::size_t l = i;
        x.mu[t + b1 + l][0] = embed(GroupElement::generator(y.h1y, t + l));
        for (std::size_t j = 0; j < b1; ++j)
            x.mu[t + b1 + l][1 + j] = circle_slot(y.pairing21(j, l));
    }

    x.w = Z2Functional::zero(x.h1);
    return x;
}

ManifoldData connected_sum(const ManifoldData& a, const ManifoldData& b) {
    require_valid(a, "connected_sum");
    require_valid(b, "connected_sum");

    // Renormalize the direct sums through presentations; the preimage
    // words say what each canonical generator is in (a, b) coordinates.
    auto direct_sum = [](const FinAbGroup& g, const FinAbGroup& h) {
        const std::size_t n = g.num_generators() + h.num_generators();
        PresentedGroup p{n, IntMat(g.torsion_rank() + h.torsion_rank(), n)};
        std::size_t row = 0;
        for (std::size_t i = 0; i < g.torsion_rank(); ++i, ++row) p.relations(row, i) = g.torsion()[i];
        for (std::size_t i = 0; i < h.torsion_rank(); ++i, ++row)
            p.relations(row, g.num_generators() + i) = h.torsion()[i];
        return normalize_presentation(p);
    };
    NormalizedPresentation h1n = direct_sum(a.h1, b.h1);
    NormalizedPresentation h2n = direct_sum(a.h2, b.h2);

    ManifoldData x;
    x.name = a.name + " # " + b.name;
    x.h1 = h1n.group;
    x.h2 = h2n.group;
    x.h3_rank = a.h3_rank + b.h3_rank;

    const std::size_t na1 = a.h1.num_generators();
    const std::size_t na2 = a.h2.num_generators();
    auto split_h1 = [&](const std::vector<Int>& word) {
        std::vector<Int> ca(word.begin(), word.begin() + na1);
        std::vector<Int> cb(word.begin() + na1, word.end());
        return std::pair{GroupElement(a.h1, ca), GroupElement(b.h1, cb)};
    };
    auto into_h1 = [&](const GroupElement& ea, const GroupElement& eb) {
        std::vector<Int> word;
        word.insert(word.end(), ea.coords().begin(), ea.coords().end());
        word.insert(word.end(), eb.coords().begin(), eb.coords().end());
        return h1n.map(word);
    };

    // q on the new free generators, extended through the free coordinates
    // of their preimage words (block off-diagonals vanish).
    const std::size_t b2 = x.h2.free_rank();
    const std::size_t t2 = x.h2.torsion_rank();
    auto q_raw = [&](std::size_t i, std::size_t j) -> Int {
        // raw slot layout: [tors(a), free(a), tors(b), free(b)]
        bool ia = i < na2, ja = j < na2;
        if (ia != ja) return 0;
        if (ia) {
            std::size_t ta = a.h2.torsion_rank();
            if (i < ta || j < ta) return 0;
            return a.q(i - ta, j - ta);
        }
        std::size_t tb = b.h2.torsion_rank();
        std::size_t ib = i - na2, jb = j - na2;
        if (ib < tb || jb < tb) return 0;
        return b.q(ib - tb, jb - tb);
    };
    x.q = IntMat(b2, b2);
    for (std::size_t k = 0; k < b2; ++k)
        for (std::size_t l = 0; l < b2; ++l) {
            const auto& wk = h2n.generator_preimages[t2 + k];
            const auto& wl = h2n.generator_preimages[t2 + l];
            Int acc = 0;
            for (std::size_t i = 0; i < wk.size(); ++i) {
                if (wk[i] == 0) continue;
                for (std::size_t j = 0; j < wl.size(); ++j)
                    if (wl[j] != 0) acc += wk[i] * wl[j] * q_raw(i, j);
            }
            x.q(k, l) = acc;
        }

    // mu on the new generators: pair the preimage word against each H_3
    // generator of the corresponding summand, then map into the new h1.
    auto mu_raw = [&](std::size_t i, std::size_t j) {
        if (j < a.h3_rank)
            return i < na2 ? into_h1(a.mu[i][j], GroupElement::zero(b.h1))
                           : GroupElement::zero(x.h1);
        std::size_t jb = j - a.h3_rank;
        return i < na2 ? GroupElement::zero(x.h1)
                       : into_h1(GroupElement::zero(a.h1), b.mu[i - na2][jb]);
    };
    x.mu.assign(x.h2.num_generators(), std::vector<GroupElement>(x.h3_rank, GroupElement::zero(x.h1)));
    for (std::size_t g = 0; g < x.h2.num_generators(); ++g) {
        const auto& word = h2n.generator_preimages[g];
        for (std::size_t j = 0; j < x.h3_rank; ++j) {
            GroupElement acc = GroupElement::zero(x.h1);
            for (std::size_t i = 0; i < word.size(); ++i)
                if (word[i] != 0) acc = acc + mu_raw(i, j) * word[i];
            x.mu[g][j] = acc;
        }
    }

    // w is canonical on Tor2(h1(a) + h1(b)): evaluate the summand
    // functionals on the components of each new canonical Tor2 generator.
    x.w = Z2Functional::zero(x.h1);
    const auto even = x.h1.even_factor_indices();
    for (std::size_t p = 0; p < even.size(); ++p) {
        std::size_t i = even[p];
        Int half = x.h1.torsion()[i] / 2;
        std::vector<Int> word = h1n.generator_preimages[i];
        for (auto& c : word) c *= half;
        auto [ea, eb] = split_h1(word);
        x.w.bits[p] = eval_functional(a.w, ea) ^ eval_functional(b.w, eb);
    }
    return x;
}

ManifoldData simply_connected(const IntMat& q) {
    if (!q.is_symmetric()) throw std::invalid_argument("simply_connected: q must be symmetric");
    if (q.rows() > 0 && abs(determinant(q)) != 1)
        throw std::invalid_argument("simply_connected: q must be unimodular");

    ManifoldData x;
    x.name = "simply-connected";
    x.h1 = FinAbGroup::trivial();
    x.h2 = FinAbGroup::free(q.rows());
    x.h3_rank = 0;
    x.q = q;
    x.mu.assign(x.h2.num_generators(), {});
    x.w = Z2Functional::zero(x.h1);
    return x;
}

ManifoldData surgered_example() {
    ManifoldData x;
    x.name = "example3";
    x.h1 = FinAbGroup({2}, 1);   // kappa_1 (order 2), kappa_2
    x.h2 = FinAbGroup({2}, 2);   // alpha_1 (order 2), alpha_2, alpha_3
    x.h3_rank = 1;               // tau
    x.q = IntMat{{0, 1}, {1, 0}};  // only alpha_2 . alpha_3 = 1
    const GroupElement zero = GroupElement::zero(x.h1);
    x.mu.assign(3, std::vector<GroupElement>(1, zero));
    x.mu[1][0] = GroupElement(x.h1, {1, 0});  // alpha_2 . tau = kappa_1
    x.w = Z2Functional{x.h1, {1}};            // kappa_1 is twisted
    return x;
}

ThreeManifoldData lens_space_y(const Int& p, const Int& q) {
    if (p < 1) throw std::invalid_argument("lens_space_y: p must be >= 1");
    ThreeManifoldData y;
    std::ostringstream name;
    name << "L(" << p << "," << q << ")";
    y.name = name.str();
    y.h1y = FinAbGroup::cyclic(p);
    y.pairing21 = IntMat(0, 0);
    return y;
}

ThreeManifoldData s2xs1_y() {
    ThreeManifoldData y;
    y.name = "S2 x S1";
    y.h1y = FinAbGroup::free(1);
    y.pairing22 = {{GroupElement::zero(y.h1y)}};
    y.pairing21 = IntMat{{1}};
    return y;
}

ThreeManifoldData three_torus_y() {
    ThreeManifoldData y;
    y.name = "T3";
    y.h1y = FinAbGroup::free(3);
    auto gamma = [&](int i, int sign) {
        std::vector<Int> c(3);
        c[i] = sign;
        return GroupElement(y.h1y, std::move(c));
    };
    const GroupElement z = GroupElement::zero(y.h1y);
    // rows (0, g3, -g2), (-g3, 0, g1), (g2, -g1, 0) over the dual surface basis
    y.pairing22 = {{z, gamma(2, 1), gamma(1, -1)},
                   {gamma(2, -1), z, gamma(0, 1)},
                   {gamma(1, 1), gamma(0, -1), z}};
    y.pairing21 = IntMat::identity(3);
    return y;
}

}  // namespace cohomotopy
