#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "exactla.hpp"

using namespace lgt;

namespace {

std::uint64_t rng_state = 0x243f6a8885a308d3ull;
std::uint64_t rnd() {
    rng_state ^= rng_state >> 12;
    rng_state ^= rng_state << 25;
    rng_state ^= rng_state >> 27;
    return rng_state * 0x2545f4914f6cdd1dull;
}
Rat rnd_rat() { return Rat(static_cast<long>(rnd() % 19) - 9, static_cast<long>(rnd() % 4) + 1); }

// independent rank oracle for small matrices: size of the largest minor with
// nonzero determinant (Laplace expansion)
Rat det(std::vector<std::vector<Rat>> m) {
    int n = static_cast<int>(m.size());
    Rat out(1);
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int r = c; r < n; ++r)
            if (m[r][c] != 0) {
                p = r;
                break;
            }
        if (p < 0) return Rat(0);
        if (p != c) {
            std::swap(m[p], m[c]);
            out = -out;
        }
        out *= m[c][c];
        for (int r = c + 1; r < n; ++r) {
            Rat f = m[r][c] / m[c][c];
            for (int k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return out;
}

int rank_by_minors(const RatMatrix& A) {
    int best = 0;
    int n = A.rows, m = A.cols;
    for (int sz = 1; sz <= std::min(n, m); ++sz) {
        bool found = false;
        std::vector<int> rs(sz), cs(sz);
        // enumerate all row/column index subsets of the given size
        std::function<bool(int, int)> pick_cols = [&](int start, int at) {
            if (at == sz) {
                std::vector<std::vector<Rat>> sub(sz, std::vector<Rat>(sz));
                for (int i = 0; i < sz; ++i)
                    for (int j = 0; j < sz; ++j) sub[i][j] = A.get(rs[i], cs[j]);
                return det(sub) != 0;
            }
            for (int c = start; c < m; ++c) {
                cs[at] = c;
                if (pick_cols(c + 1, at + 1)) return true;
            }
            return false;
        };
        std::function<bool(int, int)> pick_rows = [&](int start, int at) {
            if (at == sz) return pick_cols(0, 0);
            for (int r = start; r < n; ++r) {
                rs[at] = r;
                if (pick_rows(r + 1, at + 1)) return true;
            }
            return false;
        };
        if (pick_rows(0, 0)) {
            best = sz;
            found = true;
        }
        if (!found) break;
    }
    return best;
}

}  // namespace

TEST_CASE("echelon: identity 3x3 has pivots 0,1,2") {
    Echelon e(3);
    for (int i = 0; i < 3; ++i) {
        DVec v(3, Rat(0));
        v[i] = 1;
        CHECK(e.add(v));
    }
    CHECK(e.rank() == 3);
    REQUIRE(e.pivots().size() == 3);
    int want = 0;
    for (auto& [col, r] : e.pivots()) CHECK(col == want++);
}

TEST_CASE("echelon: dependent rows [[1,2],[2,4]] give rank 1") {
    RatMatrix A(2, 2);
    A.add(0, 0, 1);
    A.add(0, 1, 2);
    A.add(1, 0, 2);
    A.add(1, 1, 4);
    CHECK(rank(A) == 1);
}

TEST_CASE("rank agrees with the minor-expansion oracle on random 6x6 matrices") {
    for (int trial = 0; trial < 5; ++trial) {
        RatMatrix A(6, 6);
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j)
                if (rnd() % 3) A.add(i, j, rnd_rat());
        CHECK(rank(A) == rank_by_minors(A));
    }
}

TEST_CASE("kernel: zero 2x3 matrix has a 3-dimensional kernel") {
    RatMatrix A(2, 3);
    CHECK(kernel(A).dim() == 3);
}

TEST_CASE("kernel: [[1,1]] is spanned by (1,-1)") {
    RatMatrix A(1, 2);
    A.add(0, 0, 1);
    A.add(0, 1, 1);
    Subspace k = kernel(A);
    REQUIRE(k.dim() == 1);
    Subspace want{2, {DVec{Rat(1), Rat(-1)}}};
    CHECK(span_equal(k, want));
}

TEST_CASE("kernel: boundary of the 4-cycle graph has cycle space of dim 1") {
    // edges i -> i+1 mod 4; brute-force enumeration of the cycle space gives 1
    RatMatrix B(4, 4);
    for (int e = 0; e < 4; ++e) {
        B.add((e + 1) % 4, e, 1);
        B.add(e, e, -1);
    }
    CHECK(kernel(B).dim() == 1);
}

TEST_CASE("quotient_basis: Q^2 over span{(1,0)} is one-dimensional") {
    Subspace big{2, {DVec{Rat(1), Rat(0)}, DVec{Rat(0), Rat(1)}}};
    Subspace small{2, {DVec{Rat(1), Rat(0)}}};
    CHECK(quotient_basis(big, small).dim() == 1);
    CHECK(quotient_basis(big, big).dim() == 0);
}

TEST_CASE("quotient_basis: dim(big) = dim(small) + dim(quotient) on random nested pairs") {
    for (int trial = 0; trial < 5; ++trial) {
        int n = 7;
        std::vector<DVec> gen;
        for (int i = 0; i < 5; ++i) {
            DVec v(n, Rat(0));
            for (int j = 0; j < n; ++j) v[j] = rnd_rat();
            gen.push_back(v);
        }
        Subspace big = span_of(gen, n);
        Subspace small = span_of({gen[0], gen[1]}, n);
        CHECK(big.dim() == small.dim() + quotient_basis(big, small).dim());
    }
}

TEST_CASE("smith normal form: diag(2,3) has divisor chain (1,6)") {
    RatMatrix A(2, 2);
    A.add(0, 0, 2);
    A.add(1, 1, 3);
    SNFResult s = smith_normal_form(A);
    REQUIRE(s.diag.size() == 2);
    CHECK(s.diag[0] == 1);
    CHECK(s.diag[1] == 6);
}

TEST_CASE("smith normal form: zero matrix stays zero") {
    RatMatrix A(2, 3);
    SNFResult s = smith_normal_form(A);
    for (auto& d : s.diag) CHECK(d == 0);
}

TEST_CASE("smith normal form: [[2,4],[6,8]] has chain (2,4)") {
    RatMatrix A(2, 2);
    A.add(0, 0, 2);
    A.add(0, 1, 4);
    A.add(1, 0, 6);
    A.add(1, 1, 8);
    SNFResult s = smith_normal_form(A);
    REQUIRE(s.diag.size() == 2);
    CHECK(s.diag[0] == 2);
    CHECK(s.diag[1] == 4);
}

TEST_CASE("smith normal form rejects non-integral input") {
    RatMatrix A(1, 1);
    A.add(0, 0, Rat(1, 2));
    CHECK_THROWS_AS(smith_normal_form(A), std::invalid_argument);
}

TEST_CASE("coordinate solver matches coordinates_in on a dependent spanning set") {
    std::vector<DVec> basis = {DVec{Rat(1), Rat(0), Rat(1)}, DVec{Rat(0), Rat(1), Rat(1)},
                               DVec{Rat(1), Rat(1), Rat(2)}};
    CoordinateSolver cs(basis, 3);
    DVec v{Rat(2), Rat(3), Rat(5)};
    auto c = cs.coords(v);
    REQUIRE(c.has_value());
    DVec rebuilt(3, Rat(0));
    for (size_t i = 0; i < basis.size(); ++i)
        for (int j = 0; j < 3; ++j) rebuilt[j] += (*c)[i] * basis[i][j];
    CHECK(rebuilt == v);
    CHECK_FALSE(cs.coords(DVec{Rat(1), Rat(0), Rat(0)}).has_value());
}

TEST_CASE("solve finds a particular solution when one exists") {
    RatMatrix A(2, 3);
    A.add(0, 0, 1);
    A.add(0, 2, 1);
    A.add(1, 1, 2);
    auto x = solve(A, DVec{Rat(3), Rat(4)});
    REQUIRE(x.has_value());
    CHECK(A.apply(*x) == DVec{Rat(3), Rat(4)});
    A.add(1, 1, -2);  // zero out the second row
    CHECK_FALSE(solve(A, DVec{Rat(0), Rat(1)}).has_value());
}
