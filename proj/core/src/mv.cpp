#include "cdim/mv.hpp"

namespace cdim {

PhiMap phi_map(const SimplicialComplex& complex, int t) {
    if (t < 0) throw UsageError("phi_map needs t >= 0");
    if (t + 1 > complex.dim_cap())
        throw UsageError("phi_map at t = " + std::to_string(t) + " needs dim_cap >= " +
                         std::to_string(t + 1) + ", complex has " +
                         std::to_string(complex.dim_cap()));
    PhiMap phi;
    phi.t = t;
    auto layers = non_simplex_layers(complex, {t, t + 1});
    phi.target_index = std::move(layers[0].tuples);
    phi.source_index = std::move(layers[1].tuples);
    phi.matrix = non_simplex_incidence(complex, t + 1);
    return phi;
}

int phi_cokernel_dim(const PhiMap& phi, const FieldSpec& field) {
    return static_cast<int>(phi.target_index.size()) - matrix_rank(phi.matrix, field);
}

namespace {

int floor_div(int a, int b) {
    int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

} // namespace

int bound_faltings(int d, int c) {
    if (d < 0 || c < 1) throw UsageError("bound_faltings needs d >= 0, c >= 1");
    return d - floor_div(d - 1, c);
}

int bound_sum(int d, int c, int p) {
    if (d < 1 || c < 1 || p < 0) throw UsageError("bound_sum needs d, c >= 1, p >= 0");
    return bound_faltings(d, c) + p;
}

int bound_hl(int d, int c) {
    if (d < 2 || c < 1) throw UsageError("bound_hl needs d >= 2, c >= 1");
    return d - 1 - floor_div(d - 2, c);
}

int bound_main(int d, int c, int p) {
    if (c < 1 || p < 0) throw UsageError("bound_main needs c >= 1, p >= 0");
    if (d <= (p + 1) * c)
        throw HypothesisError(HypothesisKind::ParameterConstraint,
                              "bound_main needs d > (p+1)c, got d = " + std::to_string(d) +
                                  ", (p+1)c = " + std::to_string((p + 1) * c));
    return bound_hl(d, c) + p;
}

} // namespace cdim
