#ifndef MOEAD_SCALARIZATION_HPP_
#define MOEAD_SCALARIZATION_HPP_

#include <memory>
#include <string>

#include "moead/core.hpp"

namespace moead {

/// Reference points available to a scalarization: the running ideal estimate
/// (componentwise minimum over all evaluated points) and the nadir estimate
/// (componentwise maximum over the current population and candidates).
/// Holds references; construct at the call site.
struct ReferencePoints {
  const Vec& ideal;
  const Vec& nadir;
};

// Scalar kernels. Each maps one objective vector, one weight row and the
// relevant reference point to a single utility value (lower is better).

double ws_value(const Vec& y, const Vec& lambda, const Vec& z);
double wt_value(const Vec& y, const Vec& lambda, const Vec& z);
double awt_value(const Vec& y, const Vec& lambda, const Vec& z, double eps);
double pbi_value(const Vec& y, const Vec& lambda, const Vec& z, double theta);
double ipbi_value(const Vec& y, const Vec& lambda, const Vec& nadir, double theta);

// Matrix forms: utility of row i of Y for the subproblem defined by row i of
// lambda. Shapes must agree.

Vec scalarize_ws(const Mat& y, const Mat& lambda, const Vec& z);
Vec scalarize_wt(const Mat& y, const Mat& lambda, const Vec& z);
Vec scalarize_awt(const Mat& y, const Mat& lambda, const Vec& z, double eps = 1e-4);
Vec scalarize_pbi(const Mat& y, const Mat& lambda, const Vec& z, double theta);
Vec scalarize_ipbi(const Mat& y, const Mat& lambda, const Vec& nadir, double theta);

/// Updates the reference estimates: the ideal point is the running
/// componentwise minimum (monotone), the nadir the componentwise maximum over
/// the rows passed for this iteration. Throws on non-finite objectives.
void update_reference_points(const Mat& y_iteration, Vec& z_hat, Vec& z_tilde);

/// Componentwise affine rescaling of objectives to [0, 1] between the
/// current estimates. Coordinates with a degenerate range map to 0.
Mat scale_objectives(const Mat& y, const Vec& z_hat, const Vec& z_tilde);

/// Polymorphic scalarization component, used by the engine and registry.
class Scalarization {
 public:
  virtual ~Scalarization() = default;
  virtual double value(const Vec& y, const Vec& lambda, const ReferencePoints& ref) const = 0;
};

}  // namespace moead

#endif  // MOEAD_SCALARIZATION_HPP_
