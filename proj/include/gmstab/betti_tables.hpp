#pragma once

#include <map>
#include <string>
#include <vector>

#include "gmstab/field.hpp"
#include "gmstab/sigma_module.hpp"

namespace gms {

// Homology dimensions of the bundle fibres, per point charge, plus the fixed
// extra factor and the field the numbers are valid over.
struct FibreTables {
    std::map<long, GradedBettiTable> charges;
    GradedBettiTable y = GradedBettiTable({1});
    FieldSpec field = FieldSpec::rationals();
};

// Built-in tables: every monopole moduli space has the rational homology of a
// circle, so over the rationals every charge gets (1, 1).  The charge-1 space
// is itself a product of a circle with a Euclidean factor, so charge 1 is
// available over every field.  Anything else in positive characteristic must
// be user-supplied.  Throws when a requested charge has no shipped table.
FibreTables shipped_fibre_tables(const std::vector<long>& charges_needed, const FieldSpec& field);

// Parses the JSON document {"charges": {"1": [1,1], ...}, "y": [1], "field": "q"};
// "y" defaults to [1] and "field" to "q".  Every table needs b_0 = 1.
FibreTables parse_fibre_tables(const std::string& json_text);

FibreTables load_fibre_tables_file(const std::string& path);

// The table lookup used by report builders; throws with the offending charge
// in the message when missing, and rejects tables over the wrong field.
const GradedBettiTable& fibre_table_for(const FibreTables& tables, long charge);

}  // namespace gms
