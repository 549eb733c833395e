// Cubical product complexes: factors CYCLE(N) / PATH(N) / TIME(T), cells in
// every degree, integer boundary/coboundary matrices, margin bookkeeping and
// sub-lattice embeddings (including causal-cone complements).
#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "exactla.hpp"

namespace lgt {

enum class FactorKind { CYCLE, PATH, TIME };

struct Factor {
    FactorKind kind;
    int size;  // vertex count (TIME(T) has T slabs of vertices)

    int edge_count() const { return kind == FactorKind::CYCLE ? size : size - 1; }
};

// A product cell: per factor either a vertex or an edge of that factor.
// Packed one byte per factor: bit 7 = edge flag, low 7 bits = index.
using Cell = std::uint64_t;

inline Cell cell_set(Cell c, int factor, bool edge, int idx) {
    Cell b = (edge ? 0x80u : 0u) | static_cast<unsigned>(idx);
    c &= ~(Cell(0xff) << (8 * factor));
    return c | (b << (8 * factor));
}
inline bool cell_is_edge(Cell c, int factor) { return (c >> (8 * factor)) & 0x80; }
inline int cell_index(Cell c, int factor) { return (c >> (8 * factor)) & 0x7f; }

using Vertex = std::array<int, 4>;  // per-factor vertex indices (unused = 0)

enum class SupportMode { FULL, COMPACT, TIMELIKE_COMPACT };

constexpr int DEPTH_INF = 1 << 20;

class CubicalComplex {
  public:
    // removed: vertices deleted together with every cell touching them
    // (used by the cone-complement construction)
    CubicalComplex(std::vector<Factor> factors, int margin_width,
                   std::set<Vertex> removed = {});

    int dim() const { return static_cast<int>(factors_.size()); }
    int margin_width() const { return margin_width_; }
    const std::vector<Factor>& factors() const { return factors_; }
    int num_cells(int k) const { return static_cast<int>(cells_[k].size()); }
    const std::vector<Cell>& cells(int k) const { return cells_[k]; }
    int cell_id(int k, Cell c) const;  // -1 if absent
    const std::set<Vertex>& removed() const { return removed_; }

    // integer boundary matrix ∂_k : C_k -> C_{k-1}
    const RatMatrix& boundary(int k) const;
    // exterior derivative d_k = ∂_{k+1}^T : Ω^k -> Ω^{k+1}
    const RatMatrix& d(int k) const;

    std::vector<Vertex> vertices_of(int k, Cell c) const;
    int euler_characteristic() const;

    // vertex depth: min over PATH/TIME factors of the distance to the factor
    // boundary (DEPTH_INF if all factors are CYCLE); on cone complements,
    // refined so vertices adjacent to a removed vertex have depth 0 and
    // depth ≤ 1 + any neighbor's depth.
    int vertex_depth(const Vertex& v) const;
    int cell_max_depth(int k, int id) const;  // max over the cell's vertices
    // same but only counting TIME factors in the per-vertex minimum
    int cell_max_temporal_depth(int k, int id) const;

    bool is_margin(int k, int id, int width) const { return cell_max_depth(k, id) < width; }

    // indices of the cells a mode's cochains may be supported on
    std::vector<int> support_cells(int k, SupportMode mode, int width) const;
    Subspace relative_subspace(int k, SupportMode mode, int width) const;

    // time bookkeeping (first TIME factor; exactly one per spacetime complex)
    int time_factor() const;
    int time_level(int k, int id) const;       // 2t (vertex slab) or 2t+1 (edge slab)
    int time_depth(int k, int id) const;       // distance to the time window edge
    int time_shifted(int k, int id, int dt) const;  // cell id one slab over, -1 at the edge

    // parent lookup for subcomplexes carved out of a full block
    const CubicalComplex* parent() const { return parent_; }
    const std::vector<std::vector<int>>& parent_cell_map() const { return parent_map_; }
    void set_parent(const CubicalComplex* p);

    std::string describe() const;

  private:
    void build_cells();
    void build_depths() const;

    std::vector<Factor> factors_;
    int margin_width_;
    std::set<Vertex> removed_;
    std::vector<std::vector<Cell>> cells_;
    std::vector<std::unordered_map<Cell, int>> index_;
    mutable std::vector<RatMatrix> boundary_, d_;
    mutable std::vector<bool> boundary_done_, d_done_;
    mutable std::unordered_map<std::uint64_t, int> vdepth_;
    mutable bool depths_done_ = false;
    const CubicalComplex* parent_ = nullptr;
    std::vector<std::vector<int>> parent_map_;
};

// A single-component k-cochain is a dense vector over the k-cells; the
// multi-component case (dim g = k+l) stacks one vector per component.
struct Cochain {
    const CubicalComplex* cx = nullptr;
    int degree = 0;
    std::vector<DVec> comp;  // comp[a][cell]

    Cochain() = default;
    Cochain(const CubicalComplex& c, int k, int ncomp)
        : cx(&c), degree(k), comp(ncomp, DVec(c.num_cells(k), Rat(0))) {}
    int components() const { return static_cast<int>(comp.size()); }
    bool zero() const;
};

Cochain d(const Cochain& c);

struct SubcomplexEmbedding {
    const CubicalComplex* source = nullptr;
    const CubicalComplex* target = nullptr;
    std::vector<int> offsets;                  // per factor
    std::vector<std::vector<int>> cell_map;    // per degree: source id -> target id
    // orientation signs are all +1 for translations; kept for the contract
    std::vector<std::vector<int>> sign;

    DVec push(int k, const DVec& v) const;     // extend by zero
    DVec pull(int k, const DVec& v) const;     // restrict to the image
    Cochain push(const Cochain& c) const;
    Cochain pull(int k, const Cochain& c) const;
};

// translate `source` into `target` by per-factor offsets
SubcomplexEmbedding embed(const CubicalComplex& source, const CubicalComplex& target,
                          const std::vector<int>& offsets);

// carve J(p) out of `block`: returns the cone-complement complex (parented to
// block) — pair it with embed(…, block, zero offsets) for the morphism
std::unique_ptr<CubicalComplex> remove_cone(const CubicalComplex& block, const Vertex& p);

}  // namespace lgt
