#ifndef LRT_CATALOG_HPP
#define LRT_CATALOG_HPP

// Built-in example instances.

#include <string>
#include <vector>

#include "lrt/triple.hpp"

namespace lrt {

// Names: "abelian(n)" for n >= 2, "so3", "heis", "sl2-borel", "sl2-ef",
// "dual-numbers", "heis-deltazero".  Throws std::invalid_argument on an
// unknown name.
TripleData catalog_get(const std::string& name);

// The canonical catalog listing (abelian represented by abelian(3)).
std::vector<std::string> catalog_names();

// The valid entries used by the property-based acceptance runs.
std::vector<std::string> catalog_valid_names();

// A rank-3-Q variant of heis used by operator-level mutation tests
// (not part of the published catalog listing).
TripleData make_heis3();

}  // namespace lrt

#endif  // LRT_CATALOG_HPP
