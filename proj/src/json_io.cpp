#include "g2c/json_io.hpp"

#include <map>
#include <sstream>

#include "g2c/g2.hpp"

namespace g2c {

Json eta_to_json(const AdmissibleMap& eta) {
    Json arr = Json::array();
    for (auto [i, j] : edge_list(eta.support())) {
        Json entry;
        entry["edge"] = std::to_string(i) + "," + std::to_string(j);
        entry["value"] = eta.at(i, j).str();
        arr.push_back(entry);
    }
    return arr;
}

AdmissibleMap eta_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("eta_from_json: expected an array of entries");
    AdmissibleMap eta;
    for (const auto& entry : j) {
        std::string edge = entry.at("edge").get<std::string>();
        auto comma = edge.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("eta_from_json: bad edge '" + edge + "'");
        int a = std::stoi(edge.substr(0, comma));
        int b = std::stoi(edge.substr(comma + 1));
        eta.set(a, b, Scalar::parse(entry.at("value").get<std::string>()));
    }
    return eta;
}

Json octonion_to_json(const Octonion& x) {
    Json arr = Json::array();
    for (int i = 0; i < 8; ++i) arr.push_back(x[i].str());
    return arr;
}

Octonion octonion_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 8)
        throw std::invalid_argument("octonion_from_json: expected a length-8 array");
    std::array<Scalar, 8> c;
    for (int i = 0; i < 8; ++i) c[i] = Scalar::parse(j[i].get<std::string>());
    return Octonion(c);
}

Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
        rows.push_back(row);
    }
    return rows;
}

Matrix matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix_from_json: expected rows");
    Matrix m(j.size(), j[0].size());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (j[r].size() != m.cols()) throw std::invalid_argument("matrix_from_json: ragged rows");
        for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = Scalar::parse(j[r][c].get<std::string>());
    }
    return m;
}

Json collineation_to_json(const Collineation& sigma) {
    Json arr = Json::array();
    for (int v : sigma.images()) arr.push_back(v);
    return arr;
}

Collineation collineation_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 7)
        throw std::invalid_argument("collineation_from_json: expected a length-7 array");
    std::array<int, 7> images{};
    for (int t = 0; t < 7; ++t) images[t] = j[t].get<int>();
    return Collineation(images);
}

Json profile_to_json(const InvariantProfile& p) {
    Json j;
    j["dim_center"] = p.dim_center;
    j["dim_derived"] = p.dim_derived;
    if (p.nilindex)
        j["nilindex"] = *p.nilindex;
    else
        j["nilindex"] = nullptr;
    if (p.solvindex)
        j["solvindex"] = *p.solvindex;
    else
        j["solvindex"] = nullptr;
    j["is_abelian"] = p.is_abelian;
    j["is_nilpotent"] = p.is_nilpotent;
    j["is_solvable"] = p.is_solvable;
    j["is_semisimple"] = p.is_semisimple;
    j["is_reductive"] = p.is_reductive;
    j["is_simple"] = p.is_simple;
    j["dim_radical"] = p.dim_radical;
    j["levi_dim"] = p.levi_dim;
    return j;
}

Json label_to_json(const EquivClassLabel& label) {
    Json j;
    j["class"] = label.class_id;
    Json params = Json::array();
    for (const auto& p : label.params) params.push_back(p.str());
    j["params"] = params;
    if (label.class_id == 17) j["params_are"] = "lambda^2";
    if (label.class_id == 20) j["params_are"] = "lambda^2,mu^2";
    if (label.class_id == 14) j["params_are"] = "lambda";
    return j;
}

Json g2_table_json() {
    const auto& L = build_g2().algebra();
    Json j;
    Json basis = Json::array();
    for (int t = 0; t < L.dim(); ++t) {
        Json b;
        b["index"] = t;
        b["name"] = L.name(t);
        b["grade"] = L.grade(t);
        basis.push_back(b);
    }
    j["basis"] = basis;
    Json entries = Json::array();
    for (int a = 0; a < L.dim(); ++a)
        for (int b = 0; b < L.dim(); ++b)
            for (const auto& [k, v] : L.bracket(a, b))
                entries.push_back(Json::array({a, b, k, v.str()}));
    j["entries"] = entries;
    return j;
}

std::string g2_table_csv() {
    const auto& L = build_g2().algebra();
    std::ostringstream out;
    out << "i,j,k,value\n";
    for (int a = 0; a < L.dim(); ++a)
        for (int b = 0; b < L.dim(); ++b)
            for (const auto& [k, v] : L.bracket(a, b))
                out << a << "," << b << "," << k << "," << v.str() << "\n";
    return out.str();
}

Json edge_set_to_json(EdgeSet t) {
    Json edges = Json::array();
    for (auto [i, j] : edge_list(t)) edges.push_back(std::to_string(i) + "," + std::to_string(j));
    Json j;
    j["mask"] = t;
    j["edges"] = edges;
    return j;
}

Json nice_enumeration_json(const std::vector<EdgeSet>& all_nice, const std::vector<NiceClass>& classes) {
    std::map<EdgeSet, const NiceClass*> class_of;
    for (const auto& c : classes)
        for (EdgeSet m : c.orbit) class_of[m] = &c;
    Json j;
    j["total"] = all_nice.size();
    Json sets = Json::array();
    for (EdgeSet t : all_nice) {
        Json s = edge_set_to_json(t);
        s["cardinality"] = edge_list(t).size();
        auto it = class_of.find(t);
        if (it == class_of.end()) throw std::logic_error("nice_enumeration_json: set not classified");
        s["class"] = it->second->id;
        s["orbit_size"] = it->second->orbit_size;
        s["stabilizer_order"] = it->second->stabilizer_order;
        sets.push_back(s);
    }
    j["sets"] = sets;
    return j;
}

Json nice_classes_json(const std::vector<NiceClass>& classes) {
    Json arr = Json::array();
    for (const auto& c : classes) {
        Json j;
        j["id"] = c.id;
        j["representative"] = edge_set_to_json(c.representative);
        j["cardinality"] = edge_list(c.representative).size();
        j["orbit_size"] = c.orbit_size;
        j["stabilizer_order"] = c.stabilizer_order;
        arr.push_back(j);
    }
    return arr;
}

}  // namespace g2c
