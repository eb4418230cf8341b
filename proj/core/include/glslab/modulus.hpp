#ifndef GLSLAB_MODULUS_HPP_
#define GLSLAB_MODULUS_HPP_

#include <span>
#include <string>
#include <variant>
#include <vector>

#include "glslab/periodic_field.hpp"
#include "glslab/psi_space.hpp"

namespace glslab {

struct LpNormSpec {
  double p = 2.0;
};
struct SupNormSpec {};
struct GlsNormSpec {
  PsiFunction psi;
  PGrid grid;
};

/// Norm selector shared by the modulus and the ratio reports.
using NormSpec = std::variant<LpNormSpec, SupNormSpec, GlsNormSpec>;

double evaluate_norm(const PeriodicFunction& f, const NormSpec& norm);
std::string norm_tag(const NormSpec& norm);

struct ModulusValue {
  double value = 0.0;
  double band = 0.0;  // largest change between neighbouring probed shifts
  double argmax_shift = 0.0;
};

/// sup over |h| <= delta of ||U_h f - f||, probed on 128 shifts symmetric about 0
/// plus every grid-aligned shift. Throws std::invalid_argument unless 0 <= delta <= 2 pi.
ModulusValue modulus_detail(const PeriodicFunction& f, double delta, const NormSpec& norm);
double modulus(const PeriodicFunction& f, double delta, const NormSpec& norm);

struct ModulusProfile {
  std::vector<double> deltas;
  std::vector<double> values;
  std::vector<double> bands;
  std::string norm;
};

/// Modulus at each delta. Values are made nondecreasing by reusing the shifts of smaller deltas.
ModulusProfile modulus_profile(const PeriodicFunction& f, std::span<const double> deltas, const NormSpec& norm);

}  // namespace glslab

#endif  // GLSLAB_MODULUS_HPP_
