#ifndef CDIM_SIMPLICIAL_COMPLEX_HPP
#define CDIM_SIMPLICIAL_COMPLEX_HPP

#include <iosfwd>
#include <optional>
#include <vector>

#include "cdim/ideal.hpp"

namespace cdim {

/// Vertices are 1-based and strictly increasing within a simplex.
using Simplex = std::vector<int>;

/// Downward-closed family of simplices on vertices {1..n}, materialized up
/// to a dimension cap. Layers above the cap are unknown, not empty.
class SimplicialComplex {
public:
    SimplicialComplex(int n_vertices, int dim_cap);

    int n_vertices() const { return n_vertices_; }
    int dim_cap() const { return dim_cap_; }

    /// Simplices of one dimension, sorted lexicographically. dim in [0, cap].
    const std::vector<Simplex>& layer(int dim) const;
    std::size_t count(int dim) const { return layer(dim).size(); }
    bool contains(const Simplex& simplex) const;
    void insert(Simplex simplex);

    bool empty() const;
    int max_nonempty_dimension() const; // -1 when empty
    std::size_t total_count() const;

    bool is_downward_closed() const;
    /// True iff every (skeleton_dim)-dimensional tuple on {1..n} is present.
    bool has_full_skeleton(int skeleton_dim) const;

    /// Same complex rematerialized to a higher cap (the added layers are
    /// genuinely empty only when the original cap covered every simplex).
    SimplicialComplex with_cap(int new_cap) const;

    /// One simplex per line, comma-separated vertices, dimensions ascending.
    void serialize(std::ostream& out) const;
    /// Accepts `#` comments and blank lines; closes the input under faces.
    static SimplicialComplex deserialize(std::istream& in);

private:
    int n_vertices_;
    int dim_cap_;
    std::vector<std::vector<Simplex>> layers_;
};

/// All (k)-element subsets of {1..n} in lexicographic order.
std::vector<Simplex> enumerate_subsets(int n, int k);

/// Tuple-sum complex: a tuple {j_0..j_s} is a simplex exactly when
/// I_{j_0}+...+I_{j_s} (+ base, when given) is not m-primary. Once a
/// tuple-sum is m-primary no superset is tested.
SimplicialComplex build_delta(const std::vector<Ideal>& primes, const std::optional<Ideal>& base,
                              int dim_cap);

SimplicialComplex full_simplex(int n);
SimplicialComplex sphere_boundary(int n);
/// The six-vertex triangulation of the real projective plane: ten triangles,
/// all fifteen edges, six vertices.
SimplicialComplex rp2_six_vertex();
SimplicialComplex from_facets(int n_vertices, const std::vector<Simplex>& facets);

struct NonSimplexLayer {
    int s = 0;
    std::vector<Simplex> tuples; // (s+1)-subsets absent from the complex
};

/// Exact complements of the requested simplex layers (the Lambda sets).
std::vector<NonSimplexLayer> non_simplex_layers(const SimplicialComplex& complex,
                                                const std::vector<int>& s_values);

} // namespace cdim

#endif
