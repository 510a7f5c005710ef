#include "covdepth/simplex.hpp"

#include <algorithm>
#include <cmath>

namespace covdepth {

SimplexResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                          std::vector<double> start, const SimplexOptions& opts) {
  const size_t d = start.size();
  const double alpha = 1.0, gamma = 2.0, rho = 0.5, sigma = 0.5;

  std::vector<std::vector<double>> pts(d + 1, start);
  for (size_t i = 0; i < d; ++i)
    pts[i + 1][i] += (start[i] != 0 ? opts.initial_step * std::abs(start[i])
                                    : opts.initial_step);
  std::vector<double> vals(d + 1);
  for (size_t i = 0; i <= d; ++i) vals[i] = f(pts[i]);

  int iter = 0;
  for (; iter < opts.max_iter; ++iter) {
    std::vector<size_t> order(d + 1);
    for (size_t i = 0; i <= d; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return vals[a] < vals[b]; });
    size_t best = order[0], worst = order[d], second_worst = order[d - 1];
    if (std::abs(vals[worst] - vals[best]) <= opts.tol) break;

    std::vector<double> centroid(d, 0.0);
    for (size_t i = 0; i <= d; ++i)
      if (i != worst)
        for (size_t j = 0; j < d; ++j) centroid[j] += pts[i][j] / d;

    auto blend = [&](double coef) {
      std::vector<double> p(d);
      for (size_t j = 0; j < d; ++j)
        p[j] = centroid[j] + coef * (centroid[j] - pts[worst][j]);
      return p;
    };

    std::vector<double> refl = blend(alpha);
    double frefl = f(refl);
    if (frefl < vals[best]) {
      std::vector<double> exp_pt = blend(gamma);
      double fexp = f(exp_pt);
      if (fexp < frefl) {
        pts[worst] = std::move(exp_pt);
        vals[worst] = fexp;
      } else {
        pts[worst] = std::move(refl);
        vals[worst] = frefl;
      }
    } else if (frefl < vals[second_worst]) {
      pts[worst] = std::move(refl);
      vals[worst] = frefl;
    } else {
      std::vector<double> contr = blend(-rho);
      double fcontr = f(contr);
      if (fcontr < vals[worst]) {
        pts[worst] = std::move(contr);
        vals[worst] = fcontr;
      } else {
        for (size_t i = 0; i <= d; ++i) {
          if (i == best) continue;
          for (size_t j = 0; j < d; ++j)
            pts[i][j] = pts[best][j] + sigma * (pts[i][j] - pts[best][j]);
          vals[i] = f(pts[i]);
        }
      }
    }
  }

  size_t best = 0;
  for (size_t i = 1; i <= d; ++i)
    if (vals[i] < vals[best]) best = i;
  return SimplexResult{pts[best], vals[best], iter};
}

}  // namespace covdepth
