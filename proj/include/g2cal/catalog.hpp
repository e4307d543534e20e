#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "g2cal/g2.hpp"
#include "g2cal/stable.hpp"

namespace g2cal {

class CatalogError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A built-in frame model with its attached structure and the torsion
/// classes it is expected to exhibit. Entries carry a 6-dimensional
/// structure, a warped 7-slot structure, or both; every stated expectation
/// is re-verified when the entry is constructed.
struct CatalogEntry {
  std::string name;
  std::string note;
  std::optional<SU3Structure> su3;
  std::optional<G2Structure> g2;
  /// Expected nonvanishing torsion components of the 6-dimensional
  /// structure (meaningful only when su3 is set).
  std::set<std::string> expected_classes;
  bool expect_half_flat = false;
  /// Whether the 7-slot structure's phi and *phi are symbolically closed.
  bool expect_closed = false;
};

/// Names of all built-in entries, in a fixed order.
const std::vector<std::string>& catalog_names();

/// Builds and validates the named entry. Throws CatalogError for unknown
/// names (the message lists the available ones) or if a stated expectation
/// fails to verify.
CatalogEntry get_example(const std::string& name);

/// Renders the entry in the structure-file grammar; parse_model round-trips
/// it exactly.
std::string export_entry(const CatalogEntry& e);

}  // namespace g2cal
