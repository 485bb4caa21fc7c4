#include "frcodes/params.hpp"

namespace fr {

bool params_consistent(int n, int d, int rho, int theta) {
    if (n <= 0 || d <= 0 || rho <= 0 || theta <= 0) return false;
    if (static_cast<long long>(n) * d != static_cast<long long>(rho) * theta)
        return false;
    return d <= theta && rho <= n;
}

bool params_consistent(const FrParams& p) {
    return params_consistent(p.n, p.d, p.rho, p.theta);
}

bool dss_consistent(const DssParams& dss, const FrParams& code) {
    return dss.beta == 1 && dss.alpha == code.d && dss.k >= 1 && dss.k < code.n;
}

}  // namespace fr
