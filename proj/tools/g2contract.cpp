// Command-line front end: structure tables, nice-set enumeration and
// classification, contraction building and labelling, invariant
// profiles, and the golden verification suite.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "g2c/json_io.hpp"
#include "g2c/random_gen.hpp"
#include "g2c/verify.hpp"

namespace {

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        if (!content.empty() && content.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << content;
}

g2c::Json read_json_input(const std::string& path) {
    if (path.empty() || path == "-") {
        g2c::Json j;
        std::cin >> j;
        return j;
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    g2c::Json j;
    in >> j;
    return j;
}

int parse_class_id(const std::string& name) {
    std::string s = name;
    if (!s.empty() && (s[0] == 'T' || s[0] == 't')) s = s.substr(1);
    int id = std::stoi(s);
    if (id < 1 || id > 24) throw CLI::ValidationError("--support", "class id must be T1..T24");
    return id;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact graded-contraction toolkit for the derivation algebra of the octonions"};
    app.require_subcommand(1);

    // ---- g2 table
    auto* g2cmd = app.add_subcommand("g2", "structure of the base algebra");
    g2cmd->require_subcommand(1);
    auto* table = g2cmd->add_subcommand("table", "dump the nonzero structure constants");
    std::string table_format = "json", table_out;
    table->add_option("--format", table_format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    table->add_option("--out", table_out, "output file (default stdout)");
    table->callback([&] {
        if (table_format == "csv")
            write_output(table_out, g2c::g2_table_csv());
        else
            write_output(table_out, g2c::g2_table_json().dump(2));
    });

    // ---- nice enumerate / classify
    auto* nice = app.add_subcommand("nice", "nice subsets of the 21 edges");
    nice->require_subcommand(1);
    auto* enumerate = nice->add_subcommand("enumerate", "scan all 2^21 subsets");
    std::string enum_out, enum_format = "json";
    int enum_jobs = 1;
    enumerate->add_option("--out", enum_out, "output file (default stdout)");
    enumerate->add_option("--format", enum_format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    enumerate->add_option("--jobs", enum_jobs, "worker threads")->check(CLI::PositiveNumber);
    enumerate->callback([&] {
        auto all = g2c::enumerate_all_nice(enum_jobs);
        auto classes = g2c::classify_orbits(all);
        if (enum_format == "csv") {
            std::ostringstream out;
            out << "mask,cardinality,class,orbit_size,stabilizer_order\n";
            g2c::Json j = g2c::nice_enumeration_json(all, classes);
            for (const auto& s : j["sets"])
                out << s["mask"] << "," << s["cardinality"] << "," << s["class"] << ","
                    << s["orbit_size"] << "," << s["stabilizer_order"] << "\n";
            write_output(enum_out, out.str());
        } else {
            write_output(enum_out, g2c::nice_enumeration_json(all, classes).dump(2));
        }
    });
    auto* classify = nice->add_subcommand("classify", "collineation orbits of the nice sets");
    bool orbit_table = false;
    std::string classify_out, classify_format = "json";
    int classify_jobs = 1;
    classify->add_flag("--orbit-table", orbit_table, "print the grouped stabilizer/orbit table");
    classify->add_option("--format", classify_format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    classify->add_option("--out", classify_out, "output file (default stdout)");
    classify->add_option("--jobs", classify_jobs, "worker threads")->check(CLI::PositiveNumber);
    classify->callback([&] {
        auto classes = g2c::classify_orbits(g2c::enumerate_all_nice(classify_jobs));
        if (classify_format == "csv" && !orbit_table) {
            std::ostringstream out;
            out << "class,cardinality,orbit_size,stabilizer_order,representative\n";
            for (const auto& c : classes)
                out << "T" << c.id << "," << g2c::edge_list(c.representative).size() << ","
                    << c.orbit_size << "," << c.stabilizer_order << ","
                    << "\"" << g2c::edge_set_str(c.representative) << "\"\n";
            write_output(classify_out, out.str());
            return;
        }
        if (orbit_table) {
            // group classes sharing (stabilizer, orbit) as in the published table
            std::map<std::pair<int, int>, std::vector<int>> groups;
            for (const auto& c : classes)
                groups[{c.stabilizer_order, c.orbit_size}].push_back(c.id);
            std::ostringstream out;
            out << "classes                    |stab|  |orbit|\n";
            long total = 0;
            for (const auto& [key, ids] : groups) {
                std::string names;
                for (std::size_t t = 0; t < ids.size(); ++t)
                    names += (t ? "," : "") + std::string("T") + std::to_string(ids[t]);
                out << names << std::string(names.size() < 27 ? 27 - names.size() : 1, ' ')
                    << key.first << "       " << key.second << "\n";
                total += static_cast<long>(key.second) * static_cast<long>(ids.size());
            }
            out << "total nice sets: " << total << "\n";
            write_output(classify_out, out.str());
        } else {
            write_output(classify_out, g2c::nice_classes_json(classes).dump(2));
        }
    });

    // ---- contract build / label
    auto* con = app.add_subcommand("contract", "admissible maps and their classes");
    con->require_subcommand(1);
    auto* build = con->add_subcommand("build", "emit an eta map on a published support");
    std::string support_name, values_csv, build_out;
    bool build_ones = false;
    build->add_option("--support", support_name, "support class, e.g. T14")->required();
    build->add_option("--values", values_csv, "comma-separated values in lexicographic edge order");
    build->add_flag("--ones", build_ones, "use the all-ones map on the support");
    build->add_option("--out", build_out, "output file (default stdout)");
    build->callback([&] {
        int id = parse_class_id(support_name);
        g2c::EdgeSet T = g2c::class_representative(id);
        g2c::AdmissibleMap eta;
        if (build_ones || values_csv.empty()) {
            eta = g2c::AdmissibleMap::ones(T);
        } else {
            std::vector<g2c::Scalar> vals;
            std::stringstream ss(values_csv);
            std::string tok;
            while (std::getline(ss, tok, ',')) vals.push_back(g2c::Scalar::parse(tok));
            eta = g2c::AdmissibleMap::from_values(T, vals);
        }
        if (!g2c::in_A(eta)) throw std::runtime_error("values do not define an admissible contraction");
        write_output(build_out, g2c::eta_to_json(eta).dump(2));
    });
    auto* label = con->add_subcommand("label", "equivalence class of eta maps");
    std::string label_in, label_out;
    label->add_option("--in", label_in, "eta JSON file (default stdin)");
    label->add_option("--out", label_out, "output file (default stdout)");
    label->callback([&] {
        g2c::Json j = read_json_input(label_in);
        // accept a single eta or an array of etas
        bool batch = j.is_array() && (j.empty() || j.front().is_array());
        g2c::Json out = g2c::Json::array();
        if (batch) {
            for (const auto& one : j) out.push_back(g2c::label_to_json(g2c::equivalence_label(g2c::eta_from_json(one))));
        } else {
            out = g2c::label_to_json(g2c::equivalence_label(g2c::eta_from_json(j)));
        }
        write_output(label_out, out.dump(2));
    });

    // ---- invariants
    auto* inv = app.add_subcommand("invariants", "invariant profile of a contracted algebra");
    std::string inv_in, inv_out;
    bool inv_sweep = false;
    inv->add_option("--in", inv_in, "eta JSON file (default stdin)");
    inv->add_option("--out", inv_out, "output file (default stdout)");
    inv->add_flag("--sweep", inv_sweep, "profile all 24 canonical contractions and family samples");
    inv->callback([&] {
        auto profile_of = [](const g2c::AdmissibleMap& eta) {
            auto algebra = g2c::contract(g2c::build_g2().algebra(), g2c::contraction_from_edges(eta));
            auto p = g2c::profile(algebra);
            g2c::Json j = g2c::profile_to_json(p);
            j["summary"] = p.str();
            return j;
        };
        if (inv_sweep) {
            g2c::Json all;
            for (int id = 1; id <= 24; ++id)
                all["T" + std::to_string(id)] =
                    profile_of(g2c::AdmissibleMap::ones(g2c::class_representative(id)));
            auto S = [](long n, long d = 1) { return g2c::Scalar(n, d); };
            all["T14(lambda=2)"] = profile_of(g2c::AdmissibleMap::from_values(
                g2c::class_representative(14), {S(1), S(1), S(1), S(2)}));
            all["T17(lambda=2)"] = profile_of(g2c::AdmissibleMap::from_values(
                g2c::class_representative(17), {S(1), S(2), S(1), S(1), S(2)}));
            all["T20(lambda=2,mu=3)"] = profile_of(g2c::AdmissibleMap::from_values(
                g2c::class_representative(20), {S(1), S(2), S(3), S(1), S(2), S(3)}));
            write_output(inv_out, all.dump(2));
            return;
        }
        g2c::AdmissibleMap eta = g2c::eta_from_json(read_json_input(inv_in));
        write_output(inv_out, profile_of(eta).dump(2));
    });

    // ---- verify-paper
    auto* verify = app.add_subcommand("verify-paper", "run every published-value check");
    std::uint64_t seed = 20240901;
    int verify_jobs = 1;
    std::string verify_json;
    verify->add_option("--seed", seed, "seed for the randomized suites");
    verify->add_option("--jobs", verify_jobs, "worker threads for the subset scan")->check(CLI::PositiveNumber);
    verify->add_option("--json", verify_json, "also write the full report as JSON");
    bool verify_failed = false;
    verify->callback([&] {
        auto report = g2c::run_verification(seed, verify_jobs);
        std::cout << report.text();
        std::cerr << "timings: " << report.timing_text();
        if (!verify_json.empty()) write_output(verify_json, report.json().dump(2));
        verify_failed = report.failed() > 0;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return verify_failed ? 1 : 0;
}
