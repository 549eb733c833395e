// Category layer: morphisms of spacetime objects, the pushforward f_*, the
// PhSp / PhSp0 functor maps, the theorem check suites and the CCR algebra.
#pragma once

#include <complex>
#include <map>

#include "phasespace.hpp"

namespace lgt {

struct Morphism {
    SubcomplexEmbedding embedding;
    const SpacetimeObject* source = nullptr;
    const SpacetimeObject* target = nullptr;
    bool causally_compatible = false;
};

// validates group signatures, F0 pullback and causal compatibility
Morphism make_morphism(const SpacetimeObject& source, const SpacetimeObject& target,
                       const std::vector<int>& offsets);

Observable pushforward(const Morphism& f, const Observable& o);
DVec push_flat(const Morphism& f, const DVec& v);     // flattened observable transport
DVec push_chain(const Morphism& f, int k, const DVec& sigma);

// matrix of PhSp(f) w.r.t. the coset bases (cols = source reps, rows = target
// reps); throws if some image fails to land in the target phase space
struct PhspMap {
    const PhaseSpace* src = nullptr;
    const PhaseSpace* dst = nullptr;
    RatMatrix matrix;
    int kernel_dim() const;
    bool preserves_tau() const;  // M^T Gram_dst M == Gram_src
};

PhspMap phsp_map(const Morphism& f, const PhaseSpace& src, const PhaseSpace& dst);

// Thm. classcausal: all cross Gram entries between the two images vanish
struct CausalityReport {
    bool spacelike = false;
    bool all_zero = false;
    int checked = 0;
};
CausalityReport check_causality(const Morphism& f1, const Morphism& f2,
                                const PhaseSpace& ps1, const PhaseSpace& ps2);

// ---- CCR layer: normal-form algebra over complex rationals --------------

struct CRat {
    Rat re, im;
    CRat(Rat r = Rat(0), Rat i = Rat(0)) : re(std::move(r)), im(std::move(i)) {}
    bool operator==(const CRat& o) const { return re == o.re && im == o.im; }
    CRat operator+(const CRat& o) const { return {re + o.re, im + o.im}; }
    CRat operator*(const CRat& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    CRat conj() const { return {re, -im}; }
    bool zero() const { return re == 0 && im == 0; }
};

// element of CCR(E, τ): normal form = sorted monomials in generator indices
class CCRAlgebra;

struct CCRElement {
    const CCRAlgebra* alg = nullptr;
    std::map<std::vector<int>, CRat> terms;  // monomial (non-decreasing) -> coeff

    bool operator==(const CCRElement& o) const { return terms == o.terms; }
};

class CCRAlgebra {
  public:
    explicit CCRAlgebra(const PhaseSpace& ps) : ps_(&ps) {}

    int generators() const { return static_cast<int>(ps_->coset_reps.size()); }
    Rat tau(int i, int j) const { return ps_->gram.get(i, j); }

    CCRElement unit() const;
    CCRElement generator(int i) const;
    CCRElement scale(const CCRElement& a, const CRat& c) const;
    CCRElement add(const CCRElement& a, const CCRElement& b) const;
    CCRElement multiply(const CCRElement& a, const CCRElement& b) const;
    CCRElement star(const CCRElement& a) const;
    CCRElement commutator(const CCRElement& a, const CCRElement& b) const;

  private:
    // w * (generator i), normal-ordered
    CCRElement mul_generator(const CCRElement& w, int i) const;
    const PhaseSpace* ps_;
};

// unital star-homomorphism CCR(E1) -> CCR(E2) induced by a PhspMap
CCRElement ccr_map(const PhspMap& m, const CCRAlgebra& src, const CCRAlgebra& dst,
                   const CCRElement& a);

}  // namespace lgt
