#include "g2c/fano.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace g2c {

namespace {
// group_bits values for indices 1..7
constexpr int kBits[8] = {0, 0b100, 0b010, 0b001, 0b111, 0b110, 0b101, 0b011};
constexpr int kIndexOfBits[8] = {0, 3, 2, 7, 1, 6, 5, 4};
}  // namespace

int group_bits(int i) {
    if (i < 0 || i > 7) throw std::out_of_range("group_bits: index out of range");
    return kBits[i];
}

int index_of_bits(int bits) {
    if (bits < 0 || bits > 7) throw std::out_of_range("index_of_bits: out of range");
    return kIndexOfBits[bits];
}

int star(int i, int j) {
    if (i < 1 || i > 7 || j < 1 || j > 7) throw std::out_of_range("star: index out of range");
    if (i == j) throw std::invalid_argument("star: arguments must be distinct");
    return kIndexOfBits[kBits[i] ^ kBits[j]];
}

int star0(int i, int j) {
    if (i < 0 || i > 7 || j < 0 || j > 7) throw std::out_of_range("star0: index out of range");
    return kIndexOfBits[kBits[i] ^ kBits[j]];
}

const std::vector<std::array<int, 3>>& fano_lines() {
    static const std::vector<std::array<int, 3>> lines = [] {
        std::vector<std::array<int, 3>> out;
        for (int i = 1; i <= 7; ++i)
            for (int j = i + 1; j <= 7; ++j) {
                int k = star(i, j);
                if (k > j) out.push_back({i, j, k});
            }
        std::sort(out.begin(), out.end());
        return out;
    }();
    return lines;
}

std::vector<std::array<int, 3>> lines_through(int i) {
    std::vector<std::array<int, 3>> out;
    for (const auto& l : fano_lines())
        if (l[0] == i || l[1] == i || l[2] == i) out.push_back(l);
    return out;
}

bool is_generating_triplet(int i, int j, int k) {
    if (i < 1 || i > 7 || j < 1 || j > 7 || k < 1 || k > 7)
        throw std::out_of_range("is_generating_triplet: index out of range");
    if (i == j || j == k || i == k)
        throw std::invalid_argument("is_generating_triplet: indices must be distinct");
    return star(i, j) != k;
}

const std::vector<std::array<int, 3>>& generating_triplets() {
    static const std::vector<std::array<int, 3>> trips = [] {
        std::vector<std::array<int, 3>> out;
        for (int i = 1; i <= 7; ++i)
            for (int j = i + 1; j <= 7; ++j)
                for (int k = j + 1; k <= 7; ++k)
                    if (star(i, j) != k) out.push_back({i, j, k});
        return out;
    }();
    return trips;
}

Collineation::Collineation() {
    std::iota(p_.begin(), p_.end(), 0);
}

Collineation::Collineation(const std::array<int, 7>& images) {
    p_[0] = 0;
    std::array<bool, 8> seen{};
    for (int t = 0; t < 7; ++t) {
        int v = images[t];
        if (v < 1 || v > 7 || seen[v]) throw std::invalid_argument("Collineation: not a permutation of 1..7");
        seen[v] = true;
        p_[t + 1] = v;
    }
    for (int i = 1; i <= 7; ++i)
        for (int j = i + 1; j <= 7; ++j)
            if (p_[star(i, j)] != star(p_[i], p_[j]))
                throw std::invalid_argument("Collineation: permutation does not preserve lines");
}

Collineation Collineation::compose(const Collineation& inner) const {
    Collineation r;
    for (int i = 1; i <= 7; ++i) r.p_[i] = p_[inner.p_[i]];
    return r;
}

Collineation Collineation::inverse() const {
    Collineation r;
    for (int i = 1; i <= 7; ++i) r.p_[p_[i]] = i;
    return r;
}

std::array<int, 7> Collineation::images() const {
    std::array<int, 7> out{};
    for (int i = 1; i <= 7; ++i) out[i - 1] = p_[i];
    return out;
}

std::string Collineation::str() const {
    std::string s = "[";
    for (int i = 1; i <= 7; ++i) {
        s += std::to_string(p_[i]);
        if (i < 7) s += ",";
    }
    return s + "]";
}

const std::vector<Collineation>& all_collineations() {
    static const std::vector<Collineation> group = [] {
        std::vector<Collineation> out;
        std::array<int, 7> perm = {1, 2, 3, 4, 5, 6, 7};
        do {
            bool ok = true;
            for (int i = 1; i <= 7 && ok; ++i)
                for (int j = i + 1; j <= 7 && ok; ++j)
                    if (perm[star(i, j) - 1] != star(perm[i - 1], perm[j - 1])) ok = false;
            if (ok) out.emplace_back(perm);
        } while (std::next_permutation(perm.begin(), perm.end()));
        return out;
    }();
    return group;
}

Collineation collineation_from_triplets(const std::array<int, 3>& src, const std::array<int, 3>& dst) {
    if (!is_generating_triplet(src[0], src[1], src[2]) || !is_generating_triplet(dst[0], dst[1], dst[2]))
        throw std::invalid_argument("collineation_from_triplets: triplets must be generating");
    // The values on a generating triplet force the rest by *-compatibility.
    std::array<int, 7> images{};
    auto set = [&](int from, int to) { images[from - 1] = to; };
    set(src[0], dst[0]);
    set(src[1], dst[1]);
    set(src[2], dst[2]);
    set(star(src[0], src[1]), star(dst[0], dst[1]));
    set(star(src[0], src[2]), star(dst[0], dst[2]));
    set(star(src[1], src[2]), star(dst[1], dst[2]));
    set(star(src[0], star(src[1], src[2])), star(dst[0], star(dst[1], dst[2])));
    return Collineation(images);
}

namespace {
struct EdgeTables {
    int index[8][8];
    std::pair<int, int> points[kNumEdges];
    EdgeTables() {
        int e = 0;
        for (int i = 1; i <= 7; ++i)
            for (int j = i + 1; j <= 7; ++j) {
                index[i][j] = index[j][i] = e;
                points[e] = {i, j};
                ++e;
            }
    }
};
const EdgeTables& edge_tables() {
    static const EdgeTables t;
    return t;
}
}  // namespace

int edge_index(int i, int j) {
    if (i < 1 || i > 7 || j < 1 || j > 7) throw std::out_of_range("edge_index: index out of range");
    if (i == j) throw std::invalid_argument("edge_index: not an edge");
    return edge_tables().index[i][j];
}

std::pair<int, int> edge_points(int e) {
    if (e < 0 || e >= kNumEdges) throw std::out_of_range("edge_points: out of range");
    return edge_tables().points[e];
}

EdgeSet edge_bit(int i, int j) { return 1u << edge_index(i, j); }

EdgeSet act_on_edges(const Collineation& sigma, EdgeSet t) {
    EdgeSet out = 0;
    for (int e = 0; e < kNumEdges; ++e)
        if (t & (1u << e)) {
            auto [i, j] = edge_points(e);
            out |= edge_bit(sigma(i), sigma(j));
        }
    return out;
}

std::vector<std::pair<int, int>> edge_list(EdgeSet t) {
    std::vector<std::pair<int, int>> out;
    for (int e = 0; e < kNumEdges; ++e)
        if (t & (1u << e)) out.push_back(edge_points(e));
    return out;
}

std::string edge_set_str(EdgeSet t) {
    std::string s = "{";
    bool first = true;
    for (auto [i, j] : edge_list(t)) {
        if (!first) s += ",";
        first = false;
        s += "{" + std::to_string(i) + "," + std::to_string(j) + "}";
    }
    return s + "}";
}

}  // namespace g2c
