#include "nmir/numeric_check.hpp"

#include <algorithm>
#include <cmath>

#include "nmir/errors.hpp"

namespace nmir {

double finite_diff_check(const std::function<double(const ParamStore&)>& f, ParamStore& ps,
                         double step) {
    if (step <= 0.0) throw ConfigError("finite_diff_check: step must be positive");
    double worst = 0.0;
    for (int i = 0; i < ps.size(); ++i) {
        Tensor& p = ps.value(i);
        const Tensor& g = ps.grad(i);
        for (long j = 0; j < p.numel(); ++j) {
            const double saved = p.data[j];
            p.data[j] = saved + step;
            const double up = f(ps);
            p.data[j] = saved - step;
            const double down = f(ps);
            p.data[j] = saved;
            const double numeric = (up - down) / (2.0 * step);
            const double analytic = g.data[j];
            const double scale =
                std::max({std::fabs(analytic), std::fabs(numeric), 1.0});
            worst = std::max(worst, std::fabs(analytic - numeric) / scale);
        }
    }
    return worst;
}

}  // namespace nmir
