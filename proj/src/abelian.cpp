#include "cohomotopy/abelian.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace cohomotopy {

namespace {

Int positive_mod(const Int& a, const Int& d) {
    Int r = a % d;
    if (r < 0) r += d;
    return r;
}

std::map<Int, unsigned> factorize(Int n) {
    std::map<Int, unsigned> f;
    if (n < 0) n = -n;
    for (Int p = 2; p * p <= n; ++p)
        while (n % p == 0) {
            ++f[p];
            n /= p;
        }
    if (n > 1) ++f[n];
    return f;
}

}  // namespace

FinAbGroup::FinAbGroup(std::vector<Int> torsion, std::size_t free_rank)
    : torsion_(std::move(torsion)), free_rank_(free_rank) {
    for (std::size_t i = 0; i < torsion_.size(); ++i) {
        if (torsion_[i] < 2)
            throw std::invalid_argument("FinAbGroup: invariant factors must be >= 2");
        if (i > 0 && torsion_[i] % torsion_[i - 1] != 0)
            throw std::invalid_argument("FinAbGroup: invariant factors must form a divisibility chain");
    }
}

FinAbGroup FinAbGroup::cyclic(const Int& d) {
    if (d == 0) return free(1);
    if (d == 1 || d == -1) return trivial();
    return FinAbGroup({abs(d)}, 0);
}

FinAbGroup FinAbGroup::from_orders(const std::vector<Int>& orders) {
    std::size_t free_rank = 0;
    // exponents per prime, one entry per cyclic piece it appears in
    std::map<Int, std::vector<unsigned>> primary;
    for (const Int& o : orders) {
        if (o == 0) {
            ++free_rank;
            continue;
        }
        for (const auto& [p, e] : factorize(o)) primary[p].push_back(e);
    }
    for (auto& [p, es] : primary) std::sort(es.begin(), es.end(), std::greater<>());
    std::vector<Int> factors;  // built largest first
    bool more = true;
    for (std::size_t k = 0; more; ++k) {
        more = false;
        Int d = 1;
        for (const auto& [p, es] : primary)
            if (k < es.size()) {
                Int pe = 1;
                for (unsigned i = 0; i < es[k]; ++i) pe *= p;
                d *= pe;
                more = true;
            }
        if (more) factors.push_back(d);
    }
    std::reverse(factors.begin(), factors.end());
    return FinAbGroup(std::move(factors), free_rank);
}

Int FinAbGroup::order() const {
    if (!is_finite()) throw std::invalid_argument("order: group is infinite");
    Int n = 1;
    for (const Int& d : torsion_) n *= d;
    return n;
}

std::vector<Int> FinAbGroup::primary_orders() const {
    std::vector<Int> out;
    for (const Int& d : torsion_)
        for (const auto& [p, e] : factorize(d)) {
            Int pe = 1;
            for (unsigned i = 0; i < e; ++i) pe *= p;
            out.push_back(pe);
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::size_t> FinAbGroup::even_factor_indices() const {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < torsion_.size(); ++i)
        if (torsion_[i] % 2 == 0) idx.push_back(i);
    return idx;
}

std::string FinAbGroup::to_string() const {
    if (is_trivial()) return "0";
    std::ostringstream ss;
    bool first = true;
    for (const Int& d : torsion_) {
        ss << (first ? "" : " + ") << "Z_" << d;
        first = false;
    }
    if (free_rank_ == 1)
        ss << (first ? "" : " + ") << "Z";
    else if (free_rank_ > 1)
        ss << (first ? "" : " + ") << "Z^" << free_rank_;
    return ss.str();
}

GroupElement::GroupElement(FinAbGroup group, std::vector<Int> coords)
    : group_(std::move(group)), coords_(std::move(coords)) {
    if (coords_.size() != group_.num_generators())
        throw std::invalid_argument("GroupElement: coordinate count mismatch");
    for (std::size_t i = 0; i < group_.torsion_rank(); ++i)
        coords_[i] = positive_mod(coords_[i], group_.torsion()[i]);
}

GroupElement GroupElement::zero(const FinAbGroup& g) {
    return GroupElement(g, std::vector<Int>(g.num_generators()));
}

GroupElement GroupElement::generator(const FinAbGroup& g, std::size_t i) {
    std::vector<Int> c(g.num_generators());
    c.at(i) = 1;
    return GroupElement(g, std::move(c));
}

bool GroupElement::is_zero() const {
    for (const Int& c : coords_)
        if (c != 0) return false;
    return true;
}

bool GroupElement::is_two_torsion() const { return (*this * 2).is_zero(); }

GroupElement GroupElement::operator+(const GroupElement& o) const {
    if (group_ != o.group_) throw std::invalid_argument("GroupElement: group mismatch");
    std::vector<Int> c(coords_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coords_[i] + o.coords_[i];
    return GroupElement(group_, std::move(c));
}

GroupElement GroupElement::operator-() const { return *this * Int(-1); }

GroupElement GroupElement::operator*(const Int& n) const {
    std::vector<Int> c(coords_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coords_[i] * n;
    return GroupElement(group_, std::move(c));
}

std::string GroupElement::to_string() const {
    std::ostringstream ss;
    ss << "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) ss << (i ? "," : "") << coords_[i];
    ss << ")";
    return ss.str();
}

GroupHom::GroupHom(FinAbGroup source, FinAbGroup target, std::vector<GroupElement> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    if (images_.size() != source_.num_generators())
        throw std::invalid_argument("GroupHom: one image per source generator required");
    for (const auto& im : images_)
        if (im.group() != target_) throw std::invalid_argument("GroupHom: image in wrong group");
}

GroupHom GroupHom::zero(const FinAbGroup& source, const FinAbGroup& target) {
    return GroupHom(source, target,
                    std::vector<GroupElement>(source.num_generators(), GroupElement::zero(target)));
}

bool GroupHom::is_well_defined() const {
    for (std::size_t i = 0; i < source_.torsion_rank(); ++i)
        if (!(images_[i] * source_.torsion()[i]).is_zero()) return false;
    return true;
}

GroupElement GroupHom::apply(const GroupElement& x) const {
    if (x.group() != source_) throw std::invalid_argument("GroupHom: element not in source");
    GroupElement y = GroupElement::zero(target_);
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (x.coords()[i] != 0) y = y + images_[i] * x.coords()[i];
    return y;
}

GroupHom GroupHom::doubled() const {
    std::vector<GroupElement> im;
    im.reserve(images_.size());
    for (const auto& g : images_) im.push_back(g * 2);
    return GroupHom(source_, target_, std::move(im));
}

GroupElement NormalizedPresentation::map(const std::vector<Int>& word) const {
    if (word.size() != generator_images.size())
        throw std::invalid_argument("NormalizedPresentation: word length mismatch");
    GroupElement y = GroupElement::zero(group);
    for (std::size_t i = 0; i < word.size(); ++i)
        if (word[i] != 0) y = y + generator_images[i] * word[i];
    return y;
}

NormalizedPresentation normalize_presentation(const PresentedGroup& p) {
    const std::size_t n = p.num_generators;
    if (p.relations.rows() > 0 && p.relations.cols() != n)
        throw std::invalid_argument("normalize_presentation: relation width must equal generator count");

    // Z^n / <rows of R> = coker(R^T).  Diagonalize A = R^T; the new
    // coordinates are y = U x with y_i taken mod D(i,i).
    IntMat a = p.relations.transposed();
    if (a.rows() == 0) a = IntMat(n, 0);
    SmithResult snf = smith_normal_form(a);

    const std::size_t ndiag = std::min(a.rows(), a.cols());
    std::vector<Int> slot_order(n, 0);
    for (std::size_t i = 0; i < ndiag; ++i) slot_order[i] = snf.D(i, i);

    std::vector<std::size_t> torsion_slots, free_slots;
    std::vector<Int> torsion;
    for (std::size_t i = 0; i < n; ++i) {
        if (slot_order[i] == 1) continue;  // trivial generator, dropped
        if (slot_order[i] == 0) {
            free_slots.push_back(i);
        } else {
            torsion_slots.push_back(i);
            torsion.push_back(slot_order[i]);
        }
    }
    FinAbGroup group(torsion, free_slots.size());

    NormalizedPresentation out;
    out.group = group;
    out.generator_images.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Int> coords;
        coords.reserve(group.num_generators());
        for (std::size_t s : torsion_slots) coords.push_back(snf.U(s, j));
        for (std::size_t s : free_slots) coords.push_back(snf.U(s, j));
        out.generator_images.emplace_back(group, std::move(coords));
    }
    // Uinv column s is a word mapping to the unit vector in slot s.
    std::vector<std::size_t> kept = torsion_slots;
    kept.insert(kept.end(), free_slots.begin(), free_slots.end());
    for (std::size_t s : kept) {
        std::vector<Int> word(n);
        for (std::size_t i = 0; i < n; ++i) word[i] = snf.Uinv(i, s);
        out.generator_preimages.push_back(std::move(word));
    }
    return out;
}

Subgroup Subgroup::whole(const FinAbGroup& g) {
    Subgroup s{g, {}};
    for (std::size_t i = 0; i < g.num_generators(); ++i)
        s.generators.push_back(GroupElement::generator(g, i));
    return s;
}

CokernelResult cokernel(const GroupHom& f) {
    if (!f.is_well_defined()) throw std::invalid_argument("cokernel: hom is not well-defined");
    const FinAbGroup& t = f.target();
    const std::size_t n = t.num_generators();

    PresentedGroup pres;
    pres.num_generators = n;
    pres.relations = IntMat(t.torsion_rank() + f.images().size(), n);
    for (std::size_t i = 0; i < t.torsion_rank(); ++i)
        pres.relations(i, i) = t.torsion()[i];
    for (std::size_t j = 0; j < f.images().size(); ++j)
        for (std::size_t k = 0; k < n; ++k)
            pres.relations(t.torsion_rank() + j, k) = f.images()[j].coords()[k];

    NormalizedPresentation norm = normalize_presentation(pres);
    GroupHom proj(t, norm.group, norm.generator_images);
    return {norm.group, proj};
}

Subgroup image_subgroup(const GroupHom& f) {
    if (!f.is_well_defined()) throw std::invalid_argument("image_subgroup: hom is not well-defined");
    return {f.target(), f.images()};
}

std::optional<std::vector<Int>> subgroup_witness(const Subgroup& s, const GroupElement& x) {
    if (x.group() != s.ambient) throw std::invalid_argument("subgroup_witness: ambient group mismatch");
    const FinAbGroup& g = s.ambient;
    const std::size_t n = g.num_generators();
    const std::size_t ngen = s.generators.size();

    // Solve A y = x over Z, where A's columns are the subgroup generators
    // followed by the torsion relations d_i e_i.
    IntMat a(n, ngen + g.torsion_rank());
    for (std::size_t j = 0; j < ngen; ++j) {
        if (s.generators[j].group() != g)
            throw std::invalid_argument("subgroup_witness: generator in wrong group");
        for (std::size_t i = 0; i < n; ++i) a(i, j) = s.generators[j].coords()[i];
    }
    for (std::size_t i = 0; i < g.torsion_rank(); ++i) a(i, ngen + i) = g.torsion()[i];

    SmithResult snf = smith_normal_form(a);
    const std::size_t m = a.cols();
    std::vector<Int> c(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) c[i] += snf.U(i, k) * x.coords()[k];
    }
    std::vector<Int> w(m);
    const std::size_t ndiag = std::min(n, m);
    for (std::size_t i = 0; i < n; ++i) {
        if (i < ndiag && snf.D(i, i) != 0) {
            if (c[i] % snf.D(i, i) != 0) return std::nullopt;
            w[i] = c[i] / snf.D(i, i);
        } else if (c[i] != 0) {
            return std::nullopt;
        }
    }
    std::vector<Int> y(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k < m; ++k) y[i] += snf.V(i, k) * w[k];
    return std::vector<Int>(y.begin(), y.begin() + ngen);
}

bool subgroup_contains(const Subgroup& s, const GroupElement& x) {
    return subgroup_witness(s, x).has_value();
}

Subgroup tor2(const FinAbGroup& g) {
    Subgroup s{g, {}};
    for (std::size_t i : g.even_factor_indices()) {
        std::vector<Int> c(g.num_generators());
        c[i] = g.torsion()[i] / 2;
        s.generators.emplace_back(g, std::move(c));
    }
    return s;
}

Subgroup intersect_subgroups(const Subgroup& s, const Subgroup& t) {
    if (s.ambient != t.ambient)
        throw std::invalid_argument("intersect_subgroups: ambient groups differ");
    const FinAbGroup& g = s.ambient;
    const std::size_t n = g.num_generators();
    const std::size_t tr = g.torsion_rank();

    // Lattices upstairs: cols(A) span the preimage of S in Z^n, cols(B)
    // that of T; their intersection maps onto S cap T.
    const std::size_t sa = s.generators.size() + tr;
    const std::size_t sb = t.generators.size() + tr;
    IntMat c(n, sa + sb);
    for (std::size_t j = 0; j < s.generators.size(); ++j)
        for (std::size_t i = 0; i < n; ++i) c(i, j) = s.generators[j].coords()[i];
    for (std::size_t i = 0; i < tr; ++i) c(i, s.generators.size() + i) = g.torsion()[i];
    for (std::size_t j = 0; j < t.generators.size(); ++j)
        for (std::size_t i = 0; i < n; ++i) c(i, sa + j) = -t.generators[j].coords()[i];
    for (std::size_t i = 0; i < tr; ++i) c(i, sa + t.generators.size() + i) = -g.torsion()[i];

    SmithResult snf = smith_normal_form(c);
    const std::size_t m = c.cols();
    const std::size_t ndiag = std::min(n, m);

    Subgroup out{g, {}};
    for (std::size_t j = 0; j < m; ++j) {
        bool in_kernel = j >= ndiag || snf.D(j, j) == 0;
        if (!in_kernel) continue;
        // x = A * (first sa entries of V column j)
        std::vector<Int> coords(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < sa; ++k) coords[i] += c(i, k) * snf.V(k, j);
        GroupElement e(g, std::move(coords));
        if (!e.is_zero()) out.generators.push_back(e);
    }
    return out;
}

}  // namespace cohomotopy
