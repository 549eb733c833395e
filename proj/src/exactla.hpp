// Exact sparse linear algebra over Q (GMP rationals): echelon forms,
// kernels, quotients, span arithmetic and integer Smith normal form.
// Everything downstream computes over this; no floating point anywhere.
#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lgt {

using Rat = mpq_class;
using Int = mpz_class;

// sparse row/column vector: (index, value) sorted by index, no zeros stored
using SpVec = std::vector<std::pair<int, Rat>>;
using DVec = std::vector<Rat>;

SpVec sparsify(const DVec& v);
DVec densify(const SpVec& v, int dim);
bool is_zero(const DVec& v);

// y += c * x
void axpy(SpVec& y, const Rat& c, const SpVec& x);

struct RatMatrix {
    int rows = 0, cols = 0;
    std::vector<SpVec> row;  // row[i] sorted by column

    RatMatrix() = default;
    RatMatrix(int r, int c) : rows(r), cols(c), row(r) {}

    void add(int r, int c, const Rat& v);  // accumulate, dropping zeros
    Rat get(int r, int c) const;
    size_t nnz() const;
    RatMatrix transpose() const;
    DVec apply(const DVec& x) const;          // this * x
    DVec apply_transpose(const DVec& x) const;
    RatMatrix mul(const RatMatrix& other) const;
    bool integral() const;
};

// Incremental row echelon form. Feed vectors; each either reduces to zero
// (already in the span) or becomes a new pivot row. Supports membership
// tests, rank, kernel extraction via recorded elimination coefficients.
class Echelon {
  public:
    explicit Echelon(int dim) : dim_(dim) {}

    // returns true if v was independent (a pivot was added)
    bool add(const SpVec& v);
    bool add(const DVec& v) { return add(sparsify(v)); }

    // reduce v against the pivot rows; result has no support on pivot cols
    SpVec residue(const SpVec& v) const;
    bool contains(const SpVec& v) const { return residue(v).empty(); }
    bool contains(const DVec& v) const { return contains(sparsify(v)); }

    int rank() const { return static_cast<int>(pivot_rows_.size()); }
    int dim() const { return dim_; }
    const std::map<int, int>& pivots() const { return pivot_of_col_; }
    const std::vector<SpVec>& pivot_rows() const { return pivot_rows_; }

  private:
    int dim_;
    std::vector<SpVec> pivot_rows_;    // leading coefficient 1
    std::map<int, int> pivot_of_col_;  // leading col -> index into pivot_rows_
};

struct Subspace {
    int ambient_dim = 0;
    std::vector<DVec> basis;  // independent

    int dim() const { return static_cast<int>(basis.size()); }
};

// basis of { x : A x = 0 }
Subspace kernel(const RatMatrix& A);
// basis of the column space
Subspace column_space(const RatMatrix& A);
// span of a set of (possibly dependent) vectors
Subspace span_of(const std::vector<DVec>& vecs, int ambient_dim);

int rank(const RatMatrix& A);
bool in_span(const DVec& v, const Subspace& s);
bool span_equal(const Subspace& a, const Subspace& b);
bool is_subspace_of(const Subspace& small, const Subspace& big);
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);

// columns extending a basis of `small` to one of `big`; throws if small ⊄ big
Subspace quotient_basis(const Subspace& big, const Subspace& small);

// one solution of A x = b, if any
std::optional<DVec> solve(const RatMatrix& A, const DVec& b);

// coordinates of v in terms of the given basis vectors, if v lies in their span
std::optional<DVec> coordinates_in(const DVec& v, const std::vector<DVec>& basis);

// Amortized version of coordinates_in: one echelon of [b_i | e_i] rows,
// queried many times. Spanning sets may be dependent; returned coordinates
// are then one valid choice.
class CoordinateSolver {
  public:
    CoordinateSolver(const std::vector<DVec>& vecs, int ambient);
    std::optional<DVec> coords(const DVec& v) const;

  private:
    int ambient_, n_;
    Echelon ech_;
};

struct SNFResult {
    std::vector<Int> diag;  // d1 | d2 | ... (nonnegative, divisor chain)
    // left * A * right = diag (left rows x rows, right cols x cols, unimodular)
    std::vector<std::vector<Int>> left, right;
};

// Smith normal form of an integral matrix; throws std::invalid_argument on
// non-integer entries. Dense gcd elimination, min-|pivot| selection.
SNFResult smith_normal_form(const RatMatrix& A);

std::string rat_str(const Rat& r);

}  // namespace lgt
