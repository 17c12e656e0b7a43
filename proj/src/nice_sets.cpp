#include "g2c/nice_sets.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <thread>

namespace g2c {

EdgeSet p_set(int i, int j, int k) {
    if (!is_generating_triplet(i, j, k)) throw std::invalid_argument("p_set: triplet must be generating");
    return edge_bit(i, j) | edge_bit(j, k) | edge_bit(k, i) | edge_bit(i, star(j, k)) |
           edge_bit(j, star(k, i)) | edge_bit(k, star(i, j));
}

namespace {

struct Implication {
    EdgeSet need;      // hypothesis pair {i,j}, {i*j,k}
    EdgeSet required;  // P_{{i,j,k}}
};

// One implication per generating triplet and per choice of which element
// plays the role of k: 28 * 3 = 84.
const std::vector<Implication>& implications() {
    static const std::vector<Implication> table = [] {
        std::vector<Implication> out;
        for (const auto& t : generating_triplets()) {
            EdgeSet p = p_set(t[0], t[1], t[2]);
            for (int role = 0; role < 3; ++role) {
                int k = t[role], i = t[(role + 1) % 3], j = t[(role + 2) % 3];
                out.push_back({edge_bit(i, j) | edge_bit(star(i, j), k), p});
            }
        }
        return out;
    }();
    return table;
}

}  // namespace

bool is_nice(EdgeSet t) {
    for (const auto& imp : implications())
        if ((t & imp.need) == imp.need && (t & imp.required) != imp.required) return false;
    return true;
}

EdgeSet special_set(SpecialSet kind, const std::vector<int>& params) {
    auto need = [&](std::size_t n) {
        if (params.size() != n) throw std::invalid_argument("special_set: wrong parameter count");
    };
    switch (kind) {
        case SpecialSet::LineEdges: {
            need(2);
            int i = params[0], j = params[1], k = star(i, j);
            return edge_bit(i, j) | edge_bit(i, k) | edge_bit(j, k);
        }
        case SpecialSet::LineComplement: {
            need(2);
            int k = star(params[0], params[1]);
            EdgeSet line_pts = 0;
            for (int p : {params[0], params[1], k}) line_pts |= 1u << p;
            EdgeSet out = 0;
            for (int e = 0; e < kNumEdges; ++e) {
                auto [a, b] = edge_points(e);
                if (!(line_pts & (1u << a)) && !(line_pts & (1u << b))) out |= 1u << e;
            }
            return out;
        }
        case SpecialSet::Point: {
            need(1);
            int i = params[0];
            if (i < 1 || i > 7) throw std::invalid_argument("special_set: point out of range");
            EdgeSet out = 0;
            for (int l = 1; l <= 7; ++l)
                if (l != i) out |= edge_bit(i, l);
            return out;
        }
        case SpecialSet::Coline: {
            need(1);
            int i = params[0];
            if (i < 1 || i > 7) throw std::invalid_argument("special_set: point out of range");
            EdgeSet out = 0;
            for (int e = 0; e < kNumEdges; ++e) {
                auto [a, b] = edge_points(e);
                if (star(a, b) == i) out |= 1u << e;
            }
            return out;
        }
        case SpecialSet::TripleP: {
            need(3);
            return p_set(params[0], params[1], params[2]);
        }
        case SpecialSet::TripleT: {
            need(3);
            int i = params[0], j = params[1], k = params[2];
            if (!is_generating_triplet(i, j, k))
                throw std::invalid_argument("special_set: triplet must be generating");
            return p_set(i, j, k) | p_set(i, j, star(i, k)) | p_set(i, k, star(i, j)) |
                   p_set(i, star(i, j), star(i, k));
        }
    }
    throw std::invalid_argument("special_set: unknown kind");
}

std::vector<EdgeSet> enumerate_all_nice(int jobs) {
    const auto& table = implications();
    auto scan = [&table](EdgeSet lo, EdgeSet hi, std::vector<EdgeSet>& out) {
        for (EdgeSet t = lo; t < hi; ++t) {
            bool ok = true;
            for (const auto& imp : table)
                if ((t & imp.need) == imp.need && (t & imp.required) != imp.required) {
                    ok = false;
                    break;
                }
            if (ok) out.push_back(t);
        }
    };
    const EdgeSet total = kFullEdgeSet + 1;
    if (jobs <= 1) {
        std::vector<EdgeSet> out;
        scan(0, total, out);
        return out;
    }
    std::vector<std::vector<EdgeSet>> parts(jobs);
    std::vector<std::thread> threads;
    for (int w = 0; w < jobs; ++w) {
        EdgeSet lo = static_cast<EdgeSet>((static_cast<std::uint64_t>(total) * w) / jobs);
        EdgeSet hi = static_cast<EdgeSet>((static_cast<std::uint64_t>(total) * (w + 1)) / jobs);
        threads.emplace_back(scan, lo, hi, std::ref(parts[w]));
    }
    for (auto& th : threads) th.join();
    std::vector<EdgeSet> out;
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

EdgeSet class_representative(int id) {
    auto E = [](int i, int j) { return edge_bit(i, j); };
    switch (id) {
        case 1: return 0;
        case 2: return E(1, 2);
        case 3: return E(1, 2) | E(1, 3);
        case 4: return E(1, 2) | E(1, 5);
        case 5: return E(1, 2) | E(6, 7);
        case 6: return special_set(SpecialSet::LineEdges, {1, 2});
        case 7: return special_set(SpecialSet::Coline, {1});
        case 8: return E(1, 2) | E(1, 3) | E(1, 4);
        case 9: return E(1, 2) | E(1, 3) | E(1, 5);
        case 10: return E(1, 2) | E(1, 3) | E(1, 7);
        case 11: return E(1, 2) | E(1, 6) | E(2, 6);
        case 12: return E(1, 2) | E(1, 6) | E(6, 7);
        case 13: return E(1, 2) | E(1, 3) | E(1, 4) | E(1, 5);
        case 14: return E(1, 2) | E(1, 3) | E(1, 5) | E(1, 6);
        case 15: return E(1, 2) | E(1, 6) | E(1, 7) | E(2, 6);
        case 16: return E(1, 2) | E(1, 6) | E(2, 7) | E(6, 7);
        case 17: return E(1, 2) | E(1, 3) | E(1, 4) | E(1, 5) | E(1, 6);
        case 18: return E(1, 2) | E(1, 6) | E(1, 7) | E(2, 6) | E(2, 7);
        case 19: return special_set(SpecialSet::LineComplement, {1, 2});
        case 20: return special_set(SpecialSet::Point, {1});
        case 21: return special_set(SpecialSet::TripleP, {1, 2, 3});
        case 22: return special_set(SpecialSet::TripleT, {1, 2, 3});
        case 23: return kFullEdgeSet & ~special_set(SpecialSet::LineComplement, {1, 2});
        case 24: return kFullEdgeSet;
    }
    throw std::out_of_range("class_representative: id must be 1..24");
}

int stabilizer_order(EdgeSet t) {
    int count = 0;
    for (const auto& sigma : all_collineations())
        if (act_on_edges(sigma, t) == t) ++count;
    return count;
}

std::vector<NiceClass> classify_orbits(const std::vector<EdgeSet>& all_nice) {
    std::map<EdgeSet, int> orbit_of;  // member -> class index (into classes)
    std::vector<NiceClass> classes;
    for (EdgeSet t : all_nice) {
        if (orbit_of.count(t)) continue;
        NiceClass cls;
        cls.id = 0;
        std::vector<EdgeSet> orbit;
        for (const auto& sigma : all_collineations()) {
            EdgeSet img = act_on_edges(sigma, t);
            if (!orbit_of.count(img)) {
                orbit_of[img] = static_cast<int>(classes.size());
                orbit.push_back(img);
            }
        }
        std::sort(orbit.begin(), orbit.end());
        cls.orbit = std::move(orbit);
        cls.orbit_size = static_cast<int>(cls.orbit.size());
        classes.push_back(std::move(cls));
    }
    if (classes.size() != 24)
        throw std::runtime_error("classify_orbits: expected 24 orbits, found " +
                                 std::to_string(classes.size()));
    // Attach the published ids by direct orbit membership of each
    // representative; every orbit must be hit exactly once.
    std::vector<NiceClass> ordered(24, NiceClass{});
    std::vector<bool> used(24, false);
    for (int id = 1; id <= 24; ++id) {
        EdgeSet rep = class_representative(id);
        auto it = orbit_of.find(rep);
        if (it == orbit_of.end()) throw std::runtime_error("classify_orbits: representative not nice");
        if (used[it->second]) throw std::runtime_error("classify_orbits: two representatives share an orbit");
        used[it->second] = true;
        NiceClass cls = classes[it->second];
        cls.id = id;
        cls.representative = rep;
        cls.stabilizer_order = stabilizer_order(rep);
        if (cls.stabilizer_order * cls.orbit_size != 168)
            throw std::runtime_error("classify_orbits: orbit-stabilizer mismatch");
        ordered[id - 1] = std::move(cls);
    }
    return ordered;
}

std::pair<int, Collineation> canonical_rep(EdgeSet t) {
    if (!is_nice(t)) throw std::invalid_argument("canonical_rep: set is not nice");
    int card = 0;
    for (int e = 0; e < kNumEdges; ++e)
        if (t & (1u << e)) ++card;
    for (int id = 1; id <= 24; ++id) {
        EdgeSet rep = class_representative(id);
        int rep_card = 0;
        for (int e = 0; e < kNumEdges; ++e)
            if (rep & (1u << e)) ++rep_card;
        if (rep_card != card) continue;
        for (const auto& sigma : all_collineations())
            if (act_on_edges(sigma, rep) == t) return {id, sigma};
    }
    throw std::logic_error("canonical_rep: nice set not in any published orbit");
}

}  // namespace g2c
