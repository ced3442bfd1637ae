#ifndef DELPOTTS_THRESHOLDS_HPP
#define DELPOTTS_THRESHOLDS_HPP

#include "delpotts/potentials.hpp"

#include <string>
#include <vector>

namespace delpotts::thresholds {

// Critical probability for site percolation on Z^2; not known in closed
// form, injected as an externally sourced constant (or estimated by the
// site_bond module).
inline constexpr double kDefaultPcSite = 0.592746;

inline double epsilon_of(double pc_site) { return 0.5 * (1.0 - pc_site); }

// Circumradius envelope of pseudo-periodic configurations: for every
// triangle, ell*L(rho) <= delta(tau) <= ell*U(rho).
double L_of_rho(double rho);  // (1-6 rho)/sqrt(3)
double U_of_rho(double rho);  // (1+6 rho)^3 / (sqrt(3) (1-6 rho)^2)

// Displacement bound under which pseudo-periodic configurations satisfy
// both hardcore constraints for every ell in (r/L, R/U).
double rho0(double r, double R, double alpha0);

// Strong non-rigidity activity bound.
double z0_prime(double beta, double rho, double ell);

// Activity bound for the sub-cell occupation estimate.
double z0_doubleprime(double ell, int q, double r, double R, double alpha0,
                      double pc_site = kDefaultPcSite);

// Type-interaction bound for the open-cell probability estimate.
double beta0_prime(double ell, int q, double R, double r, double alpha0,
                   double pc_site = kDefaultPcSite);

// Packing bound on the number of particles in a cell.
double m_pack(double ell, double r, double alpha0);

// Open probability of the dominated Bernoulli triangle process.
double p_hat(double beta, int q, double R);

// Uniform summability bound c_Gamma.
double c_gamma_bound(double beta, double ell, double rho);

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    bool empty = true;
    double midpoint() const { return 0.5 * (lo + hi); }
};

// I0 = ((64/sqrt(3))(r v R sin alpha0), sqrt(3) R) intersect (r/L, R/U).
Interval ell_interval(double r, double R, double alpha0, double rho);

// Supremum of rho for which I0 is nonempty, by bisection to 1e-9.
double rho0_prime(double r, double R, double alpha0);

struct ThresholdReport {
    double rho = 0.0;
    double ell = 0.0;
    double pc_site = 0.0;
    double epsilon = 0.0;
    double rho0 = 0.0;
    double rho0_prime = 0.0;
    double L_rho = 0.0;
    double U_rho = 0.0;
    Interval ell_interval;
    double z0_prime = 0.0;
    double z0_doubleprime = 0.0;
    double beta0_prime = 0.0;
    double m_pack = 0.0;
    double p_hat = 0.0;
    double c_gamma_bound = 0.0;
};

ThresholdReport report(const ModelParams& p, double rho, double ell,
                       double pc_site = kDefaultPcSite);
std::string to_text(const ThresholdReport& rep);

// The phase-transition regime of the main theorem; each entry names a
// condition and whether the given parameters satisfy it.
struct RegimeCheck {
    struct Item {
        std::string name;
        bool ok;
    };
    std::vector<Item> items;
    bool all_ok() const {
        for (const auto& i : items) if (!i.ok) return false;
        return true;
    }
};
RegimeCheck check_regime(const ModelParams& p, double rho, double ell,
                         double pc_site = kDefaultPcSite);

} // namespace delpotts::thresholds

#endif
