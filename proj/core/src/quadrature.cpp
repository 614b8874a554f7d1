#include "nevlab/quadrature.hpp"

#include <array>
#include <cmath>
#include <vector>

namespace nevlab {

namespace {

// Nodes on [0,1] mirrored about 0; index 0 is the centre.
constexpr std::array<double, 8> kKronrodNodes = {
    0.000000000000000000000000000000000, 0.207784955007898467600689403773245,
    0.405845151377397166906606412076961, 0.586087235467691130294144845693013,
    0.741531185599394439863864773280788, 0.864864423359769072789712788640926,
    0.949107912342758524526189684047851, 0.991455371120812639206854697526329};
constexpr std::array<double, 8> kKronrodWeights = {
    0.209482141084727828012999174891714, 0.204432940075298892414161999234649,
    0.190350578064785409913256402421014, 0.169004726639267902826583426598550,
    0.140653259715525918745189590510238, 0.104790010322250183839876322541518,
    0.063092092629978553290700663189204, 0.022935322010529224963732008058970};
// Gauss weights for the even-indexed Kronrod nodes, which are the 7 Gauss nodes.
constexpr std::array<double, 4> kGaussWeights = {
    0.417959183673469387755102040816327, 0.381830050505118944950369775488975,
    0.279705391489276667901467771423780, 0.129484966168869693270611432679082};

struct Panel {
  double a;
  double b;
  int depth;
};

void gauss_kronrod(const std::function<std::complex<double>(double)>& f, double a, double b,
                   std::complex<double>& kronrod, std::complex<double>& gauss) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const std::complex<double> fc = f(centre);
  kronrod = kKronrodWeights[0] * fc;
  gauss = kGaussWeights[0] * fc;
  for (std::size_t k = 1; k < kKronrodNodes.size(); ++k) {
    const double dx = half * kKronrodNodes[k];
    const std::complex<double> sum = f(centre - dx) + f(centre + dx);
    kronrod += kKronrodWeights[k] * sum;
    if (k % 2 == 0) gauss += kGaussWeights[k / 2] * sum;
  }
  kronrod *= half;
  gauss *= half;
}

}  // namespace

QuadratureResult integrate(const std::function<std::complex<double>(double)>& f, double a, double b,
                           double panel_tolerance, int max_depth) {
  QuadratureResult result{};
  std::vector<Panel> stack{{a, b, 0}};
  while (!stack.empty()) {
    const Panel p = stack.back();
    stack.pop_back();
    std::complex<double> k;
    std::complex<double> g;
    gauss_kronrod(f, p.a, p.b, k, g);
    const double err = std::abs(k - g);
    if (err <= panel_tolerance || p.depth >= max_depth) {
      result.value += k;
      result.error_estimate += err;
      ++result.panels;
      continue;
    }
    const double mid = 0.5 * (p.a + p.b);
    stack.push_back({mid, p.b, p.depth + 1});
    stack.push_back({p.a, mid, p.depth + 1});
  }
  return result;
}

}  // namespace nevlab
