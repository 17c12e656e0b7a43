#include "g2c/random_gen.hpp"

namespace g2c {

Rational random_rational(Rng& rng, bool nonzero) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    int p = num(rng);
    while (nonzero && p == 0) p = num(rng);
    return Rational(p, den(rng));
}

Scalar random_scalar(Rng& rng, bool nonzero, bool with_imag) {
    std::uniform_int_distribution<int> coin(0, 1);
    Rational im = (with_imag && coin(rng)) ? random_rational(rng) : Rational(0);
    Rational re = random_rational(rng);
    Scalar s(re, im);
    while (nonzero && s.is_zero()) s = Scalar(random_rational(rng, true), im);
    return s;
}

Octonion random_octonion(Rng& rng) {
    // small coordinates: octonion identities are multilinear, so small
    // witnesses are as strong as large ones and much cheaper exactly
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 2);
    std::array<Scalar, 8> c;
    for (auto& x : c) x = Scalar(Rational(num(rng), den(rng)));
    return Octonion(c);
}

AdmissibleMap random_edge_values(Rng& rng, EdgeSet support, bool with_imag) {
    AdmissibleMap m;
    for (int e = 0; e < kNumEdges; ++e)
        if (support & (1u << e)) {
            auto [i, j] = edge_points(e);
            m.set(i, j, random_scalar(rng, true, with_imag));
        }
    return m;
}

AdmissibleMap random_admissible(Rng& rng, EdgeSet nice_support, bool with_imag) {
    AdmissibleMap eta = AdmissibleMap::ones(nice_support);
    return act_normalization(eta, random_normalization(rng, with_imag));
}

NormalizationMap random_normalization(Rng& rng, bool with_imag) {
    std::array<Scalar, 7> vals;
    for (auto& v : vals) v = random_scalar(rng, true, with_imag);
    return NormalizationMap(vals);
}

const Collineation& random_collineation(Rng& rng) {
    const auto& group = all_collineations();
    std::uniform_int_distribution<std::size_t> pick(0, group.size() - 1);
    return group[pick(rng)];
}

}  // namespace g2c
