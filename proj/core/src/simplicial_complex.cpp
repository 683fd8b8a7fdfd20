#include "cdim/simplicial_complex.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "parallel.hpp"

namespace cdim {

SimplicialComplex::SimplicialComplex(int n_vertices, int dim_cap)
    : n_vertices_(n_vertices), dim_cap_(dim_cap) {
    if (n_vertices < 0) throw UsageError("negative vertex count");
    if (dim_cap < 0) throw UsageError("negative dimension cap");
    layers_.resize(static_cast<std::size_t>(dim_cap) + 1);
}

const std::vector<Simplex>& SimplicialComplex::layer(int dim) const {
    if (dim < 0 || dim > dim_cap_)
        throw UsageError("dimension " + std::to_string(dim) + " outside the materialized cap " +
                         std::to_string(dim_cap_));
    return layers_[static_cast<std::size_t>(dim)];
}

bool SimplicialComplex::contains(const Simplex& simplex) const {
    const int dim = static_cast<int>(simplex.size()) - 1;
    if (dim < 0 || dim > dim_cap_) return false;
    const auto& l = layers_[static_cast<std::size_t>(dim)];
    return std::binary_search(l.begin(), l.end(), simplex);
}

void SimplicialComplex::insert(Simplex simplex) {
    if (simplex.empty()) throw UsageError("cannot insert the empty simplex");
    for (std::size_t i = 0; i < simplex.size(); ++i) {
        if (simplex[i] < 1 || simplex[i] > n_vertices_)
            throw UsageError("vertex out of range: " + std::to_string(simplex[i]));
        if (i > 0 && simplex[i - 1] >= simplex[i])
            throw UsageError("simplex vertices must be strictly increasing");
    }
    const int dim = static_cast<int>(simplex.size()) - 1;
    if (dim > dim_cap_) throw UsageError("simplex dimension exceeds the cap");
    auto& l = layers_[static_cast<std::size_t>(dim)];
    auto it = std::lower_bound(l.begin(), l.end(), simplex);
    if (it == l.end() || *it != simplex) l.insert(it, std::move(simplex));
}

bool SimplicialComplex::empty() const { return total_count() == 0; }

int SimplicialComplex::max_nonempty_dimension() const {
    for (int d = dim_cap_; d >= 0; --d)
        if (!layers_[static_cast<std::size_t>(d)].empty()) return d;
    return -1;
}

std::size_t SimplicialComplex::total_count() const {
    std::size_t n = 0;
    for (const auto& l : layers_) n += l.size();
    return n;
}

bool SimplicialComplex::is_downward_closed() const {
    for (int d = 1; d <= dim_cap_; ++d) {
        for (const Simplex& s : layers_[static_cast<std::size_t>(d)]) {
            Simplex face;
            face.reserve(s.size() - 1);
            for (std::size_t omit = 0; omit < s.size(); ++omit) {
                face.clear();
                for (std::size_t i = 0; i < s.size(); ++i)
                    if (i != omit) face.push_back(s[i]);
                if (!contains(face)) return false;
            }
        }
    }
    return true;
}

bool SimplicialComplex::has_full_skeleton(int skeleton_dim) const {
    if (skeleton_dim < 0) return true;
    if (skeleton_dim > dim_cap_) throw UsageError("skeleton dimension above the cap");
    for (int d = 0; d <= skeleton_dim; ++d) {
        const std::size_t expect = enumerate_subsets(n_vertices_, d + 1).size();
        if (count(d) != expect) return false;
    }
    return true;
}

SimplicialComplex SimplicialComplex::with_cap(int new_cap) const {
    if (new_cap < dim_cap_) throw UsageError("with_cap cannot drop materialized layers");
    SimplicialComplex out(n_vertices_, new_cap);
    for (int d = 0; d <= dim_cap_; ++d)
        out.layers_[static_cast<std::size_t>(d)] = layers_[static_cast<std::size_t>(d)];
    return out;
}

void SimplicialComplex::serialize(std::ostream& out) const {
    for (int d = 0; d <= dim_cap_; ++d) {
        for (const Simplex& s : layers_[static_cast<std::size_t>(d)]) {
            for (std::size_t i = 0; i < s.size(); ++i) {
                if (i) out << ',';
                out << s[i];
            }
            out << '\n';
        }
    }
}

SimplicialComplex SimplicialComplex::deserialize(std::istream& in) {
    std::vector<Simplex> simplices;
    int n = 0;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string body = line.substr(0, line.find('#'));
        std::string token;
        Simplex s;
        std::istringstream ls(body);
        bool any = false;
        while (std::getline(ls, token, ',')) {
            std::size_t pos = token.find_first_not_of(" \t\r");
            if (pos == std::string::npos) {
                if (any)
                    throw ParseError(line_no, 1, "empty vertex field in simplex line");
                continue;
            }
            any = true;
            try {
                std::size_t used = 0;
                int v = std::stoi(token, &used);
                while (used < token.size() &&
                       (token[used] == ' ' || token[used] == '\t' || token[used] == '\r'))
                    ++used;
                if (used != token.size()) throw std::invalid_argument("trailing junk");
                if (v < 1) throw std::invalid_argument("non-positive vertex");
                s.push_back(v);
                n = std::max(n, v);
            } catch (const std::exception&) {
                throw ParseError(line_no, 1, "bad vertex token '" + token + "'");
            }
        }
        if (s.empty()) continue;
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        simplices.push_back(std::move(s));
    }
    SimplicialComplex complex(n, std::max(n - 1, 0));
    // Close under faces so facet-only files load as full complexes.
    for (const Simplex& s : simplices) {
        const std::size_t k = s.size();
        for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << k); ++mask) {
            Simplex face;
            for (std::size_t i = 0; i < k; ++i)
                if (mask & (std::uint64_t(1) << i)) face.push_back(s[i]);
            complex.insert(std::move(face));
        }
    }
    return complex;
}

std::vector<Simplex> enumerate_subsets(int n, int k) {
    std::vector<Simplex> out;
    if (k < 0 || k > n) return out;
    if (k == 0) {
        out.push_back({});
        return out;
    }
    Simplex current(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) current[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
        out.push_back(current);
        int i = k - 1;
        while (i >= 0 && current[static_cast<std::size_t>(i)] == n - (k - 1 - i)) --i;
        if (i < 0) break;
        ++current[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            current[static_cast<std::size_t>(j)] = current[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

SimplicialComplex build_delta(const std::vector<Ideal>& primes, const std::optional<Ideal>& base,
                              int dim_cap) {
    if (primes.empty()) throw UsageError("build_delta needs at least one ideal");
    const int n = static_cast<int>(primes.size());
    for (const Ideal& ideal : primes)
        if (ideal.basis().is_unit_ideal())
            throw HypothesisError(HypothesisKind::UnitIdeal, "a listed prime is the unit ideal");
    if (base && base->basis().is_unit_ideal())
        throw HypothesisError(HypothesisKind::UnitIdeal, "the base ideal is the unit ideal");

    SimplicialComplex delta(n, dim_cap);
    auto tuple_not_primary = [&](const Simplex& tuple) {
        std::vector<Ideal> parts;
        parts.reserve(tuple.size() + 1);
        for (int v : tuple) parts.push_back(primes[static_cast<std::size_t>(v - 1)]);
        if (base) parts.push_back(*base);
        return !is_m_primary(ideal_sum(parts));
    };

    for (int s = 0; s <= dim_cap; ++s) {
        // Only tuples whose facets all survived can avoid an m-primary sum.
        std::vector<Simplex> candidates;
        for (Simplex& tuple : enumerate_subsets(n, s + 1)) {
            bool facets_present = true;
            if (s > 0) {
                Simplex face;
                for (std::size_t omit = 0; omit < tuple.size() && facets_present; ++omit) {
                    face.clear();
                    for (std::size_t i = 0; i < tuple.size(); ++i)
                        if (i != omit) face.push_back(tuple[i]);
                    facets_present = delta.contains(face);
                }
            }
            if (facets_present) candidates.push_back(std::move(tuple));
        }
        std::vector<char> present(candidates.size(), 0);
        internal::parallel_for(candidates.size(), [&](std::size_t i) {
            present[i] = tuple_not_primary(candidates[i]) ? 1 : 0;
        });
        for (std::size_t i = 0; i < candidates.size(); ++i)
            if (present[i]) delta.insert(std::move(candidates[i]));
    }

    if (!delta.is_downward_closed())
        throw InternalError("build_delta produced a non-closed complex");
    return delta;
}

SimplicialComplex full_simplex(int n) {
    if (n < 1) throw UsageError("full_simplex needs n >= 1");
    SimplicialComplex complex(n, n - 1);
    for (int k = 1; k <= n; ++k)
        for (Simplex& s : enumerate_subsets(n, k)) complex.insert(std::move(s));
    return complex;
}

SimplicialComplex sphere_boundary(int n) {
    if (n < 1) throw UsageError("sphere_boundary needs n >= 1");
    SimplicialComplex complex(n, n - 1);
    for (int k = 1; k <= n - 1; ++k)
        for (Simplex& s : enumerate_subsets(n, k)) complex.insert(std::move(s));
    return complex;
}

SimplicialComplex rp2_six_vertex() {
    return from_facets(6, {{1, 2, 4},
                           {1, 2, 5},
                           {1, 3, 5},
                           {1, 3, 6},
                           {1, 4, 6},
                           {2, 3, 4},
                           {2, 3, 6},
                           {3, 4, 5},
                           {4, 5, 6},
                           {2, 5, 6}});
}

SimplicialComplex from_facets(int n_vertices, const std::vector<Simplex>& facets) {
    if (n_vertices < 1) throw UsageError("from_facets needs n >= 1");
    SimplicialComplex complex(n_vertices, n_vertices - 1);
    for (const Simplex& facet : facets) {
        if (facet.empty()) throw UsageError("malformed facet: empty");
        for (std::size_t i = 0; i < facet.size(); ++i) {
            if (facet[i] < 1 || facet[i] > n_vertices)
                throw UsageError("malformed facet: vertex out of range");
            if (i > 0 && facet[i - 1] >= facet[i])
                throw UsageError("malformed facet: vertices must be strictly increasing");
        }
        const std::size_t k = facet.size();
        for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << k); ++mask) {
            Simplex face;
            for (std::size_t i = 0; i < k; ++i)
                if (mask & (std::uint64_t(1) << i)) face.push_back(facet[i]);
            complex.insert(std::move(face));
        }
    }
    return complex;
}

std::vector<NonSimplexLayer> non_simplex_layers(const SimplicialComplex& complex,
                                                const std::vector<int>& s_values) {
    std::vector<NonSimplexLayer> out;
    for (int s : s_values) {
        if (s < 0 || s > complex.dim_cap())
            throw UsageError("non-simplex layer " + std::to_string(s) +
                             " outside the materialized cap " + std::to_string(complex.dim_cap()));
        NonSimplexLayer layer;
        layer.s = s;
        for (Simplex& tuple : enumerate_subsets(complex.n_vertices(), s + 1))
            if (!complex.contains(tuple)) layer.tuples.push_back(std::move(tuple));
        out.push_back(std::move(layer));
    }
    return out;
}

} // namespace cdim
