#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "agr/report.hpp"

namespace agr {

/// Coefficient field for exact homology: the rationals or a prime field F_p.
class Field {
public:
    static Field rationals() { return Field(0); }
    static Field prime(int p); // throws not_prime unless p is prime

    bool is_rationals() const { return p_ == 0; }
    int characteristic() const { return p_; }
    std::string name() const { return p_ == 0 ? "Q" : "F" + std::to_string(p_); }

    bool operator==(const Field&) const = default;

private:
    explicit Field(int p) : p_(p) {}
    int p_;
};

/// An abstract simplicial complex on vertex set {1..n}, stored by its
/// maximal faces. Every vertex must occur in some facet (no ghost
/// vertices: they would silently corrupt the vertex count the graded
/// classifier relies on).
class SimplicialComplex {
public:
    static SimplicialComplex from_facets(int n_vertices, const std::vector<std::vector<int>>& facets);

    int n_vertices() const { return n_; }
    /// Maximal faces, each sorted, the list sorted lexicographically.
    const std::vector<std::vector<int>>& facets() const { return facets_; }
    int dim() const { return dim_; }
    bool pure() const { return pure_; }

    /// (f_{-1}, f_0, ..., f_dim) with f_{-1} = 1 for the empty face.
    std::vector<Int> f_vector() const;

    /// Facets as vertex bitmasks (bit v-1 for vertex v).
    const std::vector<std::uint32_t>& facet_masks() const { return masks_; }

private:
    SimplicialComplex() = default;
    int n_ = 0;
    int dim_ = -1;
    bool pure_ = true;
    std::vector<std::vector<int>> facets_;
    std::vector<std::uint32_t> masks_;
};

/// Numerator F(lambda) of the Hilbert series F(lambda)/(1-lambda)^d,
/// trailing zeros stripped.
struct HilbertNumerator {
    std::vector<Int> coeffs; ///< h_0 .. h_s with h_s != 0
    Int krull_dim = 0;

    Int degree() const { return static_cast<Int>(coeffs.size()) - 1; }
    Int a_invariant() const { return degree() - krull_dim; }
    Int multiplicity() const;

    bool operator==(const HilbertNumerator&) const = default;
};

/// h-vector of the Stanley-Reisner ring of c, computed from the f-vector;
/// krull_dim = dim c + 1 and the coefficient sum counts the top-dimensional
/// facets.
HilbertNumerator h_vector(const SimplicialComplex& c);

/// Reduced Betti numbers (beta_{-1}, beta_0, ..., beta_dim) over the given
/// field, by exact ranks of the boundary matrices.
std::vector<Int> homology_ranks(const SimplicialComplex& c, const Field& k);

/// Reisner's criterion: the link of every face (the empty face included)
/// has vanishing reduced homology below its dimension.
bool is_cohen_macaulay(const SimplicialComplex& c, const Field& k);

/// Core-sphere criterion: after stripping cone vertices, every link must
/// have the reduced homology of a sphere of its dimension.
bool is_gorenstein_sr(const SimplicialComplex& c, const Field& k);

/// Graded classification of k[Delta] over the given field.
ClassificationReport classify_sr(const SimplicialComplex& c, const Field& k);

} // namespace agr
