#include "gmstab/betti_tables.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace gms {

namespace {

GradedBettiTable circle_table() { return GradedBettiTable({1, 1}); }

void validate_table(const GradedBettiTable& t, const std::string& what) {
    if (t.dim(0) != 1)
        throw std::invalid_argument("fibre tables: " + what + " must have b_0 = 1");
    for (int b : t.betti)
        if (b < 0) throw std::invalid_argument("fibre tables: " + what + " has a negative entry");
}

}  // namespace

FibreTables shipped_fibre_tables(const std::vector<long>& charges_needed, const FieldSpec& field) {
    FibreTables out;
    out.field = field;
    for (long k : charges_needed) {
        if (k < 1) throw std::invalid_argument("fibre tables: charges must be positive");
        if (!field.is_rationals() && k != 1)
            throw std::invalid_argument(
                "fibre tables: no shipped table for charge " + std::to_string(k) + " over " +
                field.name() + "; supply one with --fibres");
        out.charges.emplace(k, circle_table());
    }
    return out;
}

FibreTables parse_fibre_tables(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("fibre tables: invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("charges") || !doc["charges"].is_object())
        throw std::invalid_argument("fibre tables: expected an object with a \"charges\" object");

    FibreTables out;
    for (auto it = doc["charges"].begin(); it != doc["charges"].end(); ++it) {
        long charge;
        try {
            size_t used = 0;
            charge = std::stol(it.key(), &used);
            if (used != it.key().size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw std::invalid_argument("fibre tables: charge key \"" + it.key() +
                                        "\" is not an integer");
        }
        if (!it.value().is_array())
            throw std::invalid_argument("fibre tables: table for charge " + it.key() +
                                        " must be an array");
        std::vector<int> betti = it.value().get<std::vector<int>>();
        GradedBettiTable t(std::move(betti));
        validate_table(t, "charge " + it.key() + " table");
        out.charges.emplace(charge, std::move(t));
    }
    if (doc.contains("y")) {
        if (!doc["y"].is_array())
            throw std::invalid_argument("fibre tables: \"y\" must be an array");
        out.y = GradedBettiTable(doc["y"].get<std::vector<int>>());
    }
    validate_table(out.y, "y table");
    if (doc.contains("field")) {
        if (!doc["field"].is_string())
            throw std::invalid_argument("fibre tables: \"field\" must be a string");
        out.field = FieldSpec::parse(doc["field"].get<std::string>());
    }
    return out;
}

FibreTables load_fibre_tables_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("fibre tables: cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_fibre_tables(ss.str());
}

const GradedBettiTable& fibre_table_for(const FibreTables& tables, long charge) {
    auto it = tables.charges.find(charge);
    if (it == tables.charges.end())
        throw std::invalid_argument("fibre tables: no table for charge " + std::to_string(charge));
    return it->second;
}

}  // namespace gms
