#ifndef GLSLAB_CATALOG_HPP_
#define GLSLAB_CATALOG_HPP_

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "glslab/periodic_field.hpp"

namespace glslab {

using ParameterMap = std::map<std::string, double>;

/// A catalog function name with explicit parameters, e.g. "logsing(s=0.5)".
struct CatalogSpec {
  std::string name;
  ParameterMap params;

  /// Canonical text form, parameters in key order; parse_catalog_spec(label()) round-trips.
  std::string label() const;
  bool operator==(const CatalogSpec&) const = default;
};

/// Parses "name" or "name(key=value, ...)". Throws std::invalid_argument on malformed text.
CatalogSpec parse_catalog_spec(std::string_view text);

/// Names known to the catalog, in listing order.
const std::vector<std::string>& catalog_names();

/// Parameters of `name` with defaults filled in. Throws on unknown names or keys.
ParameterMap catalog_parameters(std::string_view name, const ParameterMap& params);

/// True for the families with a point singularity at x = 0 (singular, logsing).
bool catalog_is_singular(std::string_view name);

/// Midpoint grid for singular families, offset-0 grid otherwise.
PeriodicGrid catalog_grid(std::string_view name, std::size_t n);

/// Samples of the named function. Singular families carry their exact singular part.
/// Throws std::invalid_argument for unknown names, out-of-range parameters, or a singular
/// family on a grid with offset 0.
PeriodicFunction sample_catalog(std::string_view name, const ParameterMap& params, const PeriodicGrid& grid);
PeriodicFunction sample_catalog(const CatalogSpec& spec, const PeriodicGrid& grid);

/// Largest p for which the quadrature of the function is trusted (0.9/gamma for singular).
double reliable_p_max(const CatalogSpec& spec);

/// Human-readable listing of the catalog with parameters and L_p growth rates.
std::string list_catalog();

}  // namespace glslab

#endif  // GLSLAB_CATALOG_HPP_
