#include "g2c/contractions.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "g2c/nice_sets.hpp"

namespace g2c {

AdmissibleMap AdmissibleMap::ones(EdgeSet support) {
    AdmissibleMap m;
    for (int e = 0; e < kNumEdges; ++e)
        if (support & (1u << e)) m.v_[e] = Scalar(1);
    return m;
}

AdmissibleMap AdmissibleMap::from_values(EdgeSet support, const std::vector<Scalar>& values) {
    AdmissibleMap m;
    std::size_t n = 0;
    for (int e = 0; e < kNumEdges; ++e)
        if (support & (1u << e)) {
            if (n >= values.size()) throw std::invalid_argument("AdmissibleMap: too few values");
            if (values[n].is_zero()) throw std::invalid_argument("AdmissibleMap: zero value on support");
            m.v_[e] = values[n++];
        }
    if (n != values.size()) throw std::invalid_argument("AdmissibleMap: too many values");
    return m;
}

EdgeSet AdmissibleMap::support() const {
    EdgeSet s = 0;
    for (int e = 0; e < kNumEdges; ++e)
        if (!v_[e].is_zero()) s |= 1u << e;
    return s;
}

std::vector<Scalar> AdmissibleMap::values_on(EdgeSet t) const {
    std::vector<Scalar> out;
    for (int e = 0; e < kNumEdges; ++e)
        if (t & (1u << e)) out.push_back(v_[e]);
    return out;
}

Scalar eta_ternary(const AdmissibleMap& eta, int i, int j, int k) {
    if (!is_generating_triplet(i, j, k)) throw std::invalid_argument("eta_ternary: not generative");
    return eta.at(i, star(j, k)) * eta.at(j, k);
}

ConditionBResult check_conditions_b(const AdmissibleMap& eta) {
    for (const auto& t : generating_triplets()) {
        Scalar a = eta_ternary(eta, t[0], t[1], t[2]);
        Scalar b = eta_ternary(eta, t[1], t[2], t[0]);
        Scalar c = eta_ternary(eta, t[2], t[0], t[1]);
        if (a != b) return {false, {t[0], t[1], t[2]}};
        if (b != c) return {false, {t[1], t[2], t[0]}};
    }
    return {true, {0, 0, 0}};
}

bool ContractionMap::is_admissible() const {
    for (int g = 0; g < 8; ++g)
        if (!v[g][g].is_zero() || !v[0][g].is_zero() || !v[g][0].is_zero()) return false;
    return true;
}

bool ContractionMap::is_symmetric() const {
    for (int g = 0; g < 8; ++g)
        for (int h = g + 1; h < 8; ++h)
            if (v[g][h] != v[h][g]) return false;
    return true;
}

ContractionMap contraction_from_edges(const AdmissibleMap& eta) {
    ContractionMap eps;
    for (int i = 1; i <= 7; ++i)
        for (int j = 1; j <= 7; ++j)
            if (i != j) eps.v[i][j] = eta.at(i, j);
    return eps;
}

AdmissibleMap phi(const ContractionMap& eps) {
    if (!eps.is_admissible()) throw std::invalid_argument("phi: map is not admissible");
    if (!eps.is_symmetric()) throw std::invalid_argument("phi: map is not symmetric");
    AdmissibleMap eta;
    for (int i = 1; i <= 7; ++i)
        for (int j = i + 1; j <= 7; ++j) eta.set(i, j, eps.at(i, j));
    auto b = check_conditions_b(eta);
    if (!b.ok) throw std::invalid_argument("phi: map is not a graded contraction (fails (b2))");
    return eta;
}

ContractionMap phi_inv(const AdmissibleMap& eta) {
    auto b = check_conditions_b(eta);
    if (!b.ok) throw std::invalid_argument("phi_inv: map is not in A");
    return contraction_from_edges(eta);
}

ContractionMap admissible_reduce(const ContractionMap& eps) {
    ContractionMap out = eps;
    for (int g = 0; g < 8; ++g) {
        out.v[g][g] = Scalar(0);
        out.v[0][g] = Scalar(0);
        out.v[g][0] = Scalar(0);
    }
    // The reduction never changes the contracted bracket of g2: the
    // zeroed slots only multiply brackets that already vanish.
    const GradedLieAlgebra& g2 = build_g2().algebra();
    auto scale = [&g2](const ContractionMap& e) {
        return g2.scaled([&](int i, int j) { return e.at(g2.grade(i), g2.grade(j)); });
    };
    if (!scale(eps).same_table(scale(out)))
        throw std::logic_error("admissible_reduce: bracket changed");
    return out;
}

GradedLieAlgebra contract(const GradedLieAlgebra& L, const ContractionMap& eps) {
    for (int i = 0; i < L.dim(); ++i)
        for (int j = i + 1; j < L.dim(); ++j) {
            if (L.bracket(i, j).empty()) continue;
            if (eps.at(L.grade(i), L.grade(j)) != eps.at(L.grade(j), L.grade(i)))
                throw std::invalid_argument("contract: epsilon not nearly symmetric");
        }
    GradedLieAlgebra out = L.scaled([&](int i, int j) { return eps.at(L.grade(i), L.grade(j)); });
    out.require_jacobi();
    return out;
}

AdmissibleMap act_collineation(const AdmissibleMap& eta, const Collineation& sigma) {
    AdmissibleMap out;
    for (int i = 1; i <= 7; ++i)
        for (int j = i + 1; j <= 7; ++j) out.set(i, j, eta.at(sigma(i), sigma(j)));
    return out;
}

NormalizationMap::NormalizationMap() { a.fill(Scalar(1)); }

NormalizationMap::NormalizationMap(const std::array<Scalar, 7>& values) {
    a[0] = Scalar(1);
    for (int t = 0; t < 7; ++t) {
        if (values[t].is_zero()) throw std::invalid_argument("NormalizationMap: zero value");
        a[t + 1] = values[t];
    }
}

Scalar NormalizationMap::edge_factor(int i, int j) const { return a[i] * a[j] / a[star(i, j)]; }

AdmissibleMap act_normalization(const AdmissibleMap& eta, const NormalizationMap& alpha) {
    for (int i = 1; i <= 7; ++i)
        if (alpha[i].is_zero()) throw std::invalid_argument("act_normalization: zero alpha value");
    AdmissibleMap out;
    for (int i = 1; i <= 7; ++i)
        for (int j = i + 1; j <= 7; ++j) out.set(i, j, eta.at(i, j) * alpha.edge_factor(i, j));
    return out;
}

// --- WValue ----------------------------------------------------------

WValue WValue::operator*(const WValue& o) const {
    WValue r = approx(approx_ * o.approx_);
    if (exact_ && o.exact_) r.exact_ = *exact_ * *o.exact_;
    return r;
}

WValue WValue::operator/(const WValue& o) const {
    WValue r = approx(approx_ / o.approx_);
    if (exact_ && o.exact_) r.exact_ = *exact_ / *o.exact_;
    return r;
}

WValue WValue::inverse() const { return WValue(Scalar(1)) / *this; }

WValue WValue::sqrt() const {
    if (exact_) {
        if (auto s = sqrt_exact(*exact_)) return WValue(*s);
    }
    return approx(std::sqrt(approx_));
}

// --- normal_form -----------------------------------------------------

namespace {

using WAlpha = std::array<WValue, 8>;  // indices 1..7

WAlpha walpha_ones() {
    WAlpha a;
    a.fill(WValue(Scalar(1)));
    return a;
}

WAlpha walpha_mul(const WAlpha& a, const WAlpha& b) {
    WAlpha r;
    for (int i = 0; i < 8; ++i) r[i] = a[i] * b[i];
    return r;
}

// eta^alpha over WValues, defined on the support edges only.
std::array<WValue, kNumEdges> apply_walpha(const std::array<WValue, kNumEdges>& eta, EdgeSet support,
                                           const WAlpha& a) {
    std::array<WValue, kNumEdges> out = eta;
    for (int e = 0; e < kNumEdges; ++e) {
        if (!(support & (1u << e))) continue;
        auto [i, j] = edge_points(e);
        out[e] = eta[e] * a[i] * a[j] / a[star(i, j)];
    }
    return out;
}

bool wvalue_close(const WValue& a, const Scalar& target, bool& needed_float) {
    if (a.is_exact()) return a.exact() == target;
    needed_float = true;
    return std::abs(a.value() - target.to_complex()) <= 1e-9;
}

int sign_of(const WValue& v) {
    if (v.is_exact()) return v.exact().re() >= 0 ? 1 : -1;
    return v.value().real() >= 0 ? 1 : -1;
}

WAlpha sign_alpha(const std::array<int, 7>& signs) {
    WAlpha a = walpha_ones();
    for (int t = 0; t < 7; ++t) a[t + 1] = WValue(Scalar(signs[t]));
    return a;
}

}  // namespace

std::optional<AdmissibleMap> NormalForm::canonical_eta() const {
    EdgeSet T = class_representative(class_id);
    AdmissibleMap m = AdmissibleMap::ones(T);
    if (class_id == 14) {
        m.set(1, 6, params[0]);
    } else if (class_id == 17) {
        auto lam = sqrt_exact(params[0]);
        if (!lam) return std::nullopt;
        m.set(1, 3, *lam);
        m.set(1, 6, *lam);
    } else if (class_id == 20) {
        auto lam = sqrt_exact(params[0]);
        auto mu = sqrt_exact(params[1]);
        if (!lam || !mu) return std::nullopt;
        m.set(1, 3, *lam);
        m.set(1, 6, *lam);
        m.set(1, 4, *mu);
        m.set(1, 7, *mu);
    }
    return m;
}

std::string NormalForm::display_tuple() const {
    auto show = [](const WValue& v) {
        if (v.is_exact()) return v.exact().str();
        std::ostringstream out;
        out << "~" << v.value().real();
        if (v.value().imag() != 0) out << (v.value().imag() > 0 ? "+" : "") << v.value().imag() << "i";
        return out.str();
    };
    WValue lam = params.empty() ? WValue(Scalar(1)) : WValue(params[0]);
    if (class_id == 17 || class_id == 20) lam = lam.sqrt();
    WValue mu = (params.size() > 1) ? WValue(params[1]).sqrt() : WValue(Scalar(1));
    std::string s = "(";
    bool first = true;
    for (auto [i, j] : edge_list(class_representative(class_id))) {
        if (!first) s += ",";
        first = false;
        if (class_id == 14 && i == 1 && j == 6)
            s += params[0].str();
        else if ((class_id == 17 || class_id == 20) && i == 1 && (j == 3 || j == 6))
            s += show(lam);
        else if (class_id == 20 && i == 1 && (j == 4 || j == 7))
            s += show(mu);
        else
            s += "1";
    }
    return s + ")";
}

std::string NormalForm::str() const {
    std::string s = "T" + std::to_string(class_id) + " " + display_tuple();
    if (class_id == 14) s += " lambda=" + params[0].str();
    if (class_id == 17) s += " lambda^2=" + params[0].str();
    if (class_id == 20) s += " lambda^2=" + params[0].str() + " mu^2=" + params[1].str();
    if (float_witness) s += " (float witness)";
    return s;
}

NormalForm normal_form(const AdmissibleMap& eta) {
    auto b = check_conditions_b(eta);
    if (!b.ok) throw std::invalid_argument("normal_form: map is not in A");
    EdgeSet T = eta.support();
    int id = 0;
    for (int c = 1; c <= 24; ++c)
        if (class_representative(c) == T) {
            id = c;
            break;
        }
    if (id == 0)
        throw std::invalid_argument("normal_form: support is not canonical; apply canonical_rep first");

    auto w = [&](int i, int j) { return WValue(eta.at(i, j)); };
    auto sq = [&](int i, int j) { return WValue(eta.at(i, j)).sqrt(); };

    NormalForm nf;
    nf.class_id = id;
    WAlpha a = walpha_ones();

    switch (id) {
        case 1:
            break;
        case 2:
            a[5] = w(1, 2);
            break;
        case 3:
            a[5] = w(1, 2);
            a[6] = w(1, 3);
            break;
        case 4:
            a[1] = a[2] = (sq(1, 2) * sq(1, 5)).inverse();
            a[5] = w(1, 5).inverse();
            break;
        case 5:
            a[1] = w(1, 2).inverse();
            a[6] = w(6, 7).inverse();
            break;
        case 6:
            a[1] = (sq(1, 2) * sq(1, 5)).inverse();
            a[2] = (sq(1, 2) * sq(2, 5)).inverse();
            a[5] = (sq(1, 5) * sq(2, 5)).inverse();
            break;
        case 7:
            a[2] = w(2, 5).inverse();
            a[3] = w(3, 6).inverse();
            a[4] = w(4, 7).inverse();
            break;
        case 8:
            a[5] = w(1, 2);
            a[6] = w(1, 3);
            a[7] = w(1, 4);
            break;
        case 9:
            a[1] = (sq(1, 2) * sq(1, 5)).inverse();
            a[2] = sq(1, 5);
            a[3] = sq(1, 2) * sq(1, 5);
            a[5] = sq(1, 2);
            a[6] = w(1, 3);
            break;
        case 10:
            a[5] = w(1, 2);
            a[6] = w(1, 3);
            a[4] = w(1, 7);
            break;
        case 11:
            a[3] = w(1, 6);
            a[4] = w(2, 6);
            a[5] = w(1, 2);
            break;
        case 12:
            a[2] = w(1, 2).inverse();
            a[3] = w(1, 6);
            a[7] = w(6, 7).inverse();
            break;
        case 13:
            a[1] = (sq(1, 2) * sq(1, 5)).inverse();
            a[2] = sq(1, 5);
            a[3] = a[4] = sq(1, 2) * sq(1, 5);
            a[5] = sq(1, 2);
            a[6] = w(1, 3);
            a[7] = w(1, 4);
            break;
        case 14:
            a[1] = (sq(1, 2) * sq(1, 5)).inverse();
            a[2] = sq(1, 5);
            a[3] = sq(1, 2) * sq(1, 5) / w(1, 3);
            a[5] = sq(1, 2);
            nf.params = {eta.at(1, 3) * eta.at(1, 6) / (eta.at(1, 2) * eta.at(1, 5))};
            break;
        case 15:
            a[3] = w(1, 6);
            a[4] = w(2, 6);
            a[5] = w(1, 2);
            a[7] = w(2, 6) / w(1, 7);
            break;
        case 16:
            a[1] = sq(6, 7) / (sq(1, 2) * sq(1, 6) * sq(2, 7));
            a[2] = a[3] = w(1, 6);
            a[5] = sq(1, 2) * sq(1, 6) * sq(6, 7) / sq(2, 7);
            a[6] = sq(1, 2) * sq(1, 6) * sq(2, 7) / sq(6, 7);
            a[7] = w(2, 7).inverse();
            break;
        case 17:
            a[1] = a[7] = (sq(1, 2) * sq(1, 5)).inverse();
            a[2] = sq(1, 5);
            a[3] = sq(1, 6) / sq(1, 3);
            a[4] = w(1, 4).inverse();
            a[5] = sq(1, 2);
            nf.params = {eta.at(1, 3) * eta.at(1, 6) / (eta.at(1, 2) * eta.at(1, 5))};
            break;
        case 18:
            a[1] = sq(2, 6) * sq(2, 7);
            a[2] = sq(1, 6) * sq(1, 7);
            a[3] = w(1, 6) * sq(2, 6) * sq(2, 7);
            a[4] = w(2, 6) * sq(1, 6) * sq(1, 7);
            a[5] = w(1, 2) * sq(1, 6) * sq(1, 7) * sq(2, 6) * sq(2, 7);
            a[7] = sq(1, 6) * sq(2, 6) / (sq(1, 7) * sq(2, 7));
            break;
        case 19:
            a[1] = (sq(3, 4) * sq(3, 7) * sq(4, 6) * sq(6, 7)).inverse();
            a[2] = (sq(3, 4) * sq(3, 6) * sq(4, 7) * sq(6, 7)).inverse();
            a[3] = (sq(3, 4) * sq(3, 6) * sq(3, 7)).inverse();
            a[4] = (sq(3, 4) * sq(4, 6) * sq(4, 7)).inverse();
            a[5] = (sq(3, 6) * sq(3, 7) * sq(4, 6) * sq(4, 7)).inverse();
            a[6] = (sq(3, 6) * sq(4, 6) * sq(6, 7)).inverse();
            a[7] = (sq(3, 7) * sq(4, 7) * sq(6, 7)).inverse();
            break;
        case 20:
            a[1] = (sq(1, 2) * sq(1, 5)).inverse();
            a[2] = sq(1, 5);
            a[3] = sq(1, 6) / sq(1, 3);
            a[4] = sq(1, 7) / sq(1, 4);
            a[5] = sq(1, 2);
            nf.params = {eta.at(1, 3) * eta.at(1, 6) / (eta.at(1, 2) * eta.at(1, 5)),
                         eta.at(1, 4) * eta.at(1, 7) / (eta.at(1, 2) * eta.at(1, 5))};
            break;
        case 21:
            a[1] = a[4] = a[6] = w(1, 2).inverse();
            a[2] = a[5] = w(2, 6).inverse();
            a[3] = w(1, 3).inverse();
            a[7] = w(1, 7).inverse();
            break;
        case 22:
        case 23:
        case 24: {
            // Admissibility pins the point-1 cross ratios to 1 for these
            // supports; anything else means the input left A.
            Scalar r1 = eta.at(1, 3) * eta.at(1, 6) / (eta.at(1, 2) * eta.at(1, 5));
            Scalar r2 = eta.at(1, 4) * eta.at(1, 7) / (eta.at(1, 2) * eta.at(1, 5));
            if (!r1.is_one() || !r2.is_one())
                throw std::logic_error("normal_form: point-1 ratios not 1 on a big support");
            WAlpha beta = walpha_ones();
            beta[1] = (sq(1, 2) * sq(1, 5)).inverse();
            beta[2] = sq(1, 5);
            beta[3] = sq(1, 3).inverse();
            beta[4] = sq(1, 4).inverse();
            beta[5] = sq(1, 2);
            beta[6] = sq(1, 6).inverse();
            beta[7] = sq(1, 7).inverse();
            std::array<WValue, kNumEdges> weta;
            for (int e = 0; e < kNumEdges; ++e) weta[e] = WValue(eta.at_edge(e));
            std::array<WValue, kNumEdges> w1 = apply_walpha(weta, T, beta);
            WValue l1 = w1[edge_index(1, 3)];
            WValue l2 = w1[edge_index(1, 4)];
            if (id == 22) {
                WValue mu = w1[edge_index(2, 3)];
                WAlpha gamma = walpha_ones();
                gamma[3] = gamma[6] = mu.inverse();
                a = walpha_mul(beta, gamma);
                if (sign_of(l1) < 0) a = walpha_mul(a, sign_alpha({1, 1, -1, -1, 1, 1, -1}));
                if (sign_of(l2) < 0) a = walpha_mul(a, sign_alpha({1, 1, 1, -1, 1, 1, 1}));
            } else {
                WValue lam = w1[edge_index(2, 3)];
                WValue mu = w1[edge_index(2, 4)];
                WAlpha gamma = walpha_ones();
                gamma[1] = l1 * l2;
                gamma[2] = (l1.sqrt() * l2.sqrt() * lam.sqrt() * mu.sqrt()).inverse();
                gamma[3] = (l1.sqrt() * lam.sqrt()).inverse();
                gamma[4] = (l2.sqrt() * mu.sqrt()).inverse();
                gamma[5] = l1 * l2 * gamma[2];
                gamma[6] = l2 * gamma[3];
                gamma[7] = l1 * gamma[4];
                a = walpha_mul(beta, gamma);
                if (id == 24) {
                    std::array<WValue, kNumEdges> w2 = apply_walpha(weta, T, a);
                    WValue t = w2[edge_index(3, 4)].sqrt().inverse();
                    WAlpha delta = walpha_ones();
                    delta[3] = delta[4] = delta[6] = delta[7] = t;
                    a = walpha_mul(a, delta);
                }
            }
            break;
        }
        default:
            throw std::logic_error("normal_form: unhandled class");
    }
    nf.alpha = a;

    // Verify the witness against the canonical target: ones everywhere
    // except the parameter positions, which must carry one shared value
    // per parameter whose square is the stored exact datum.
    std::array<WValue, kNumEdges> weta;
    for (int e = 0; e < kNumEdges; ++e) weta[e] = WValue(eta.at_edge(e));
    std::array<WValue, kNumEdges> result = apply_walpha(weta, T, nf.alpha);
    bool needed_float = false;
    for (int i = 1; i <= 7; ++i)
        if (!nf.alpha[i].is_exact()) needed_float = true;

    auto fail = [] { throw std::logic_error("normal_form: witness verification failed"); };
    auto check_equal = [&](const WValue& x, const WValue& y) {
        if (x.is_exact() && y.is_exact()) {
            if (x.exact() != y.exact()) fail();
        } else {
            needed_float = true;
            if (std::abs(x.value() - y.value()) > 1e-9) fail();
        }
    };
    EdgeSet param_edges = 0;
    if (id == 14) param_edges = edge_bit(1, 6);
    if (id == 17) param_edges = edge_bit(1, 3) | edge_bit(1, 6);
    if (id == 20) param_edges = edge_bit(1, 3) | edge_bit(1, 6) | edge_bit(1, 4) | edge_bit(1, 7);
    for (int e = 0; e < kNumEdges; ++e) {
        if (!(T & (1u << e)) || (param_edges & (1u << e))) continue;
        if (!wvalue_close(result[e], Scalar(1), needed_float)) fail();
    }
    if (id == 14) {
        if (!wvalue_close(result[edge_index(1, 6)], nf.params[0], needed_float)) fail();
    } else if (id == 17) {
        const WValue& lam = result[edge_index(1, 3)];
        check_equal(lam, result[edge_index(1, 6)]);
        if (!wvalue_close(lam * lam, nf.params[0], needed_float)) fail();
    } else if (id == 20) {
        const WValue& lam = result[edge_index(1, 3)];
        const WValue& mu = result[edge_index(1, 4)];
        check_equal(lam, result[edge_index(1, 6)]);
        check_equal(mu, result[edge_index(1, 7)]);
        if (!wvalue_close(lam * lam, nf.params[0], needed_float)) fail();
        if (!wvalue_close(mu * mu, nf.params[1], needed_float)) fail();
    }
    nf.float_witness = needed_float;
    return nf;
}

std::string EquivClassLabel::str() const {
    std::string s = "class T" + std::to_string(class_id);
    if (class_id == 14 && !params.empty()) s += " lambda~" + params[0].str();
    if (class_id == 17 && !params.empty()) s += " lambda^2~" + params[0].str();
    if (class_id == 20 && params.size() == 2)
        s += " (lambda^2,mu^2)~(" + params[0].str() + "," + params[1].str() + ")";
    return s;
}

EquivClassLabel equivalence_label(const AdmissibleMap& eta) {
    auto [id, sigma] = canonical_rep(eta.support());
    AdmissibleMap canon = act_collineation(eta, sigma);
    NormalForm nf = normal_form(canon);
    EquivClassLabel label;
    label.class_id = (id == 10) ? 8 : id;
    if (id == 14) {
        Scalar lam = nf.params[0];
        Scalar inv = lam.inverse();
        label.params = {scalar_less(lam, inv) ? lam : inv};
    } else if (id == 17) {
        Scalar s = nf.params[0];
        Scalar inv = s.inverse();
        label.params = {scalar_less(s, inv) ? s : inv};
    } else if (id == 20) {
        Scalar s = nf.params[0], t = nf.params[1];
        std::vector<std::pair<Scalar, Scalar>> cands = {
            {s, t}, {s.inverse(), t / s}, {s / t, t.inverse()}};
        for (auto& c : cands)
            if (scalar_less(c.second, c.first)) std::swap(c.first, c.second);
        auto best = cands[0];
        for (const auto& c : cands) {
            if (scalar_less(c.first, best.first) ||
                (c.first == best.first && scalar_less(c.second, best.second)))
                best = c;
        }
        label.params = {best.first, best.second};
    }
    return label;
}

Matrix build_theta(const G2System& sys, int i, int j, const Scalar& ratio) {
    if (i < 1 || i > 7 || j < 1 || j > 7 || i == j)
        throw std::invalid_argument("build_theta: need distinct indices in 1..7");
    if (ratio.is_zero()) throw std::invalid_argument("build_theta: ratio must be nonzero");

    std::array<int, 3> line = {i, j, star(i, j)};
    std::sort(line.begin(), line.end());
    int k = 1;
    while (k == line[0] || k == line[1] || k == line[2]) ++k;
    ComponentBasis ci = component_basis(i, line, k);
    ComponentBasis cj = component_basis(j, line, k);

    // local coordinates of a degree-t canonical basis vector in {E, F}
    auto local = [](const ComponentBasis& cb, const Matrix& m) {
        std::vector<Vec> cols;
        auto flat = [](const Matrix& x) {
            Vec v;
            for (std::size_t r = 0; r < x.rows(); ++r)
                for (std::size_t c = 0; c < x.cols(); ++c) v.push_back(x.at(r, c));
            return v;
        };
        cols.push_back(flat(cb.E));
        cols.push_back(flat(cb.F));
        auto sol = solve(Matrix::from_cols(cols), flat(m));
        if (!sol) throw std::logic_error("build_theta: basis change failed");
        return *sol;
    };

    Matrix theta = Matrix::identity(14);
    auto place = [&](int src_comp, const ComponentBasis& cb_src, const ComponentBasis& cb_dst,
                     const Scalar& factor) {
        for (int t : {G2System::x_index(src_comp), G2System::y_index(src_comp)}) {
            Vec loc = local(cb_src, sys.basis_matrix(t));
            Matrix img = cb_dst.E * (factor * loc[0]) + cb_dst.F * (factor * loc[1]);
            Vec coords = sys.coords(img);
            for (int r = 0; r < 14; ++r) theta.at(r, t) = coords[r];
        }
    };
    place(i, ci, cj, -ratio);    // x_i -> -ratio x_j (in line-adapted terms)
    place(j, cj, ci, Scalar(1));  // x_j -> x_i
    return theta;
}

}  // namespace g2c
