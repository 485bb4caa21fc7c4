#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "frcodes/catalog.hpp"
#include "frcodes/code.hpp"
#include "frcodes/repair.hpp"

namespace fr {

/// Compact single-line JSON: {"n":..,"theta":..,"d":..,"rho":..,
/// "nodes":[[..],..],"provenance":".."} with node sets ascending and nodes
/// in index order. No trailing newline.
std::string code_to_json(const FrCode& code);

/// Parses code_to_json output (field order irrelevant). Throws
/// InvalidArgumentError on malformed JSON or an invalid code.
FrCode code_from_json(const std::string& text);

/// {"failed":..,"assignments":[[packet,helper],..],"helpers":..,
/// "packets":..,"bandwidth":..}
std::string repair_to_json(const RepairPlan& plan, const RepairReport& report);

/// One JSON object per line. Valid entries carry the code fields plus
/// "valid" and, when present, "canonical_digest"; failed entries carry
/// "error" instead of "nodes".
std::string catalog_entry_to_json(const CatalogEntry& entry);
void write_catalog(std::ostream& out, const std::vector<CatalogEntry>& entries);

/// CSV with header n,admissible,constructed,classes. `classes` may be -1
/// for "not computed", emitted as an empty field.
struct CountRowWithClasses {
    CountRow counts;
    int classes = -1;
};
std::string count_table_to_csv(const std::vector<CountRowWithClasses>& rows);

}  // namespace fr
