#include "functor.hpp"

#include <stdexcept>

namespace lgt {

Morphism make_morphism(const SpacetimeObject& source, const SpacetimeObject& target,
                       const std::vector<int>& offsets) {
    if (source.group.k != target.group.k || source.group.l != target.group.l ||
        source.group.h != target.group.h)
        throw std::invalid_argument("ConfigError: group signatures differ across morphism");
    Morphism f;
    f.source = &source;
    f.target = &target;
    f.embedding = embed(*source.cx, *target.cx, offsets);
    // F0 must pull back to F0
    for (int a = 0; a < source.group.components(); ++a) {
        DVec back = f.embedding.pull(2, target.F0.comp[a]);
        if (back != source.F0.comp[a])
            throw std::invalid_argument("ConfigError: F0 does not pull back along morphism");
    }
    f.causally_compatible = is_causally_compatible(f.embedding);
    if (!f.causally_compatible)
        throw std::invalid_argument("NotCausallyCompatible: embedding fails cone test");
    return f;
}

Observable pushforward(const Morphism& f, const Observable& o) {
    Observable out;
    out.c = o.c;
    out.alpha = f.embedding.push(o.alpha);
    return out;
}

DVec push_flat(const Morphism& f, const DVec& v) {
    Observable o = unflatten(*f.source, v);
    return flatten(*f.target, pushforward(f, o));
}

DVec push_chain(const Morphism& f, int k, const DVec& sigma) {
    return f.embedding.push(k, sigma);
}

int PhspMap::kernel_dim() const { return static_cast<int>(kernel(matrix).dim()); }

bool PhspMap::preserves_tau() const {
    int ns = static_cast<int>(src->coset_reps.size());
    RatMatrix mt = matrix.transpose();
    for (int i = 0; i < ns; ++i)
        for (int j = 0; j < ns; ++j) {
            Rat acc(0);
            for (auto& [a, va] : mt.row[i])
                for (auto& [b, vb] : dst->gram.row[a])
                    acc += va * vb * matrix.get(b, j);
            if (acc != src->gram.get(i, j)) return false;
        }
    return true;
}

PhspMap phsp_map(const Morphism& f, const PhaseSpace& src, const PhaseSpace& dst) {
    PhspMap m;
    m.src = &src;
    m.dst = &dst;
    int ns = static_cast<int>(src.coset_reps.size());
    int nd = static_cast<int>(dst.coset_reps.size());
    m.matrix = RatMatrix(nd, ns);
    // expressing f_*(rep) in [dst reps | dst quotient]: quotient coordinates
    // are discarded (they are the coset ambiguity)
    std::vector<DVec> basis = dst.coset_reps;
    for (auto& q : dst.quotient.basis) basis.push_back(q);
    CoordinateSolver solver(basis, flat_dim(*f.target));
    for (int j = 0; j < ns; ++j) {
        DVec img = push_flat(f, src.coset_reps[j]);
        auto x = solver.coords(img);
        if (!x) throw std::runtime_error("phsp_map: image not in the target phase space");
        for (int i = 0; i < nd; ++i) m.matrix.add(i, j, (*x)[i]);
    }
    // well-definedness: the source quotient must be carried into the target
    // quotient, otherwise the induced map depends on the choice of reps
    for (auto& q : src.quotient.basis) {
        auto x = solver.coords(push_flat(f, q));
        if (!x) throw std::runtime_error("phsp_map: quotient image not in the target phase space");
        for (int i = 0; i < nd; ++i)
            if ((*x)[i] != 0) throw std::runtime_error("phsp_map: quotient not preserved");
    }
    return m;
}

CausalityReport check_causality(const Morphism& f1, const Morphism& f2,
                                const PhaseSpace& ps1, const PhaseSpace& ps2) {
    CausalityReport rep;
    const SpacetimeObject& tgt = *f1.target;
    // image vertex sets
    auto verts = [&](const Morphism& f) {
        std::vector<Vertex> out;
        for (Cell c : f.source->cx->cells(0)) {
            Vertex v{};
            for (int i = 0; i < f.source->cx->dim(); ++i) v[i] = cell_index(c, i);
            Vertex tv = v;
            for (int i = 0; i < f.source->cx->dim(); ++i) {
                int n = f.target->cx->factors()[i].size;
                tv[i] = f.source->cx->factors()[i].kind == FactorKind::CYCLE
                            ? (v[i] + f.embedding.offsets[i]) % n
                            : v[i] + f.embedding.offsets[i];
            }
            out.push_back(tv);
        }
        return out;
    };
    rep.spacelike = spacelike_separated(*tgt.cx, verts(f1), verts(f2));
    if (!rep.spacelike) throw std::invalid_argument("NotDisjoint: images are causally related");
    auto hinv = tgt.group.h_inverse();
    rep.all_zero = true;
    for (auto& v1 : ps1.coset_reps) {
        Observable a = unflatten(tgt, push_flat(f1, v1));
        Cochain Aprop = propagator(*tgt.ops, a.alpha);
        for (auto& v2 : ps2.coset_reps) {
            Observable b = unflatten(tgt, push_flat(f2, v2));
            ++rep.checked;
            if (tgt.ops->pairing(b.alpha, Aprop, &hinv) != 0) rep.all_zero = false;
        }
    }
    return rep;
}

CCRElement CCRAlgebra::unit() const {
    CCRElement e;
    e.alg = this;
    e.terms[{}] = CRat(Rat(1));
    return e;
}

CCRElement CCRAlgebra::generator(int i) const {
    CCRElement e;
    e.alg = this;
    e.terms[{i}] = CRat(Rat(1));
    return e;
}

CCRElement CCRAlgebra::scale(const CCRElement& a, const CRat& c) const {
    CCRElement out;
    out.alg = this;
    if (c.zero()) return out;
    for (auto& [m, v] : a.terms) {
        CRat w = v * c;
        if (!w.zero()) out.terms[m] = w;
    }
    return out;
}

CCRElement CCRAlgebra::add(const CCRElement& a, const CCRElement& b) const {
    CCRElement out = a;
    out.alg = this;
    for (auto& [m, v] : b.terms) {
        auto it = out.terms.find(m);
        if (it == out.terms.end()) {
            out.terms[m] = v;
        } else {
            it->second = it->second + v;
            if (it->second.zero()) out.terms.erase(it);
        }
    }
    return out;
}

CCRElement CCRAlgebra::mul_generator(const CCRElement& w, int i) const {
    // multiply each monomial on the right by e_i, restoring normal order via
    // m·e_i = (m'·e_i)·e_j + iτ(j,i)·m' when the last letter j exceeds i
    CCRElement out;
    out.alg = this;
    auto accumulate = [&](std::vector<int> m, const CRat& c) {
        if (c.zero()) return;
        auto it = out.terms.find(m);
        if (it == out.terms.end()) {
            out.terms[std::move(m)] = c;
        } else {
            it->second = it->second + c;
            if (it->second.zero()) out.terms.erase(it);
        }
    };
    for (auto& [mono, coeff] : w.terms) {
        if (mono.empty() || mono.back() <= i) {
            std::vector<int> m = mono;
            m.push_back(i);
            accumulate(std::move(m), coeff);
            continue;
        }
        int j = mono.back();
        std::vector<int> shorter(mono.begin(), mono.end() - 1);
        CCRElement tmp;
        tmp.alg = this;
        tmp.terms[shorter] = coeff;
        CCRElement left = mul_generator(tmp, i);
        for (auto& [lm, lc] : left.terms) {
            std::vector<int> full = lm;
            full.push_back(j);  // j ≥ every entry of lm, stays normal-ordered
            accumulate(std::move(full), lc);
        }
        accumulate(std::move(shorter), coeff * CRat(Rat(0), tau(j, i)));
    }
    return out;
}

CCRElement CCRAlgebra::multiply(const CCRElement& a, const CCRElement& b) const {
    CCRElement out;
    out.alg = this;
    for (auto& [mb, cb] : b.terms) {
        CCRElement acc = scale(a, cb);
        for (int g : mb) acc = mul_generator(acc, g);
        out = add(out, acc);
    }
    return out;
}

CCRElement CCRAlgebra::star(const CCRElement& a) const {
    CCRElement out;
    out.alg = this;
    for (auto& [m, c] : a.terms) {
        // generators are hermitian; reversing and conjugating re-normal-orders
        CCRElement term;
        term.alg = this;
        term.terms[{}] = c.conj();
        for (auto it = m.rbegin(); it != m.rend(); ++it) term = mul_generator(term, *it);
        out = add(out, term);
    }
    return out;
}

CCRElement CCRAlgebra::commutator(const CCRElement& a, const CCRElement& b) const {
    return add(multiply(a, b), scale(multiply(b, a), CRat(Rat(-1))));
}

CCRElement ccr_map(const PhspMap& m, const CCRAlgebra& src, const CCRAlgebra& dst,
                   const CCRElement& a) {
    CCRElement out;
    out.alg = &dst;
    for (auto& [mono, c] : a.terms) {
        CCRElement term;
        term.alg = &dst;
        term.terms[{}] = c;
        for (int g : mono) {
            CCRElement img;
            img.alg = &dst;
            for (int i = 0; i < m.matrix.rows; ++i) {
                Rat v = m.matrix.get(i, g);
                if (v != 0) img = dst.add(img, dst.scale(dst.generator(i), CRat(v)));
            }
            term = dst.multiply(term, img);
        }
        out = dst.add(out, term);
    }
    return out;
}

}  // namespace lgt
