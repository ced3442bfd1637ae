#include "delpotts/thresholds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace delpotts::thresholds {

namespace {
constexpr double kSqrt3 = std::numbers::sqrt3;

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}
} // namespace

double L_of_rho(double rho) {
    require(rho >= 0.0 && rho < 1.0 / 6.0, "L_of_rho: rho must lie in [0, 1/6)");
    return (1.0 - 6.0 * rho) / kSqrt3;
}

double U_of_rho(double rho) {
    require(rho >= 0.0 && rho < 1.0 / 6.0, "U_of_rho: rho must lie in [0, 1/6)");
    const double a = 1.0 + 6.0 * rho, b = 1.0 - 6.0 * rho;
    return a * a * a / (kSqrt3 * b * b);
}

double rho0(double r, double R, double alpha0) {
    require(r > 0.0 && r <= R, "rho0: need 0 < r <= R");
    require(alpha0 > 0.0 && alpha0 < std::numbers::pi / 3.0,
            "rho0: alpha0 must lie in (0, pi/3)");
    const double cr = std::cbrt(r), cR = std::cbrt(R);
    const double first = (cR - cr) / (6.0 * (cR + cr));
    const double ca = std::cos(alpha0);
    const double root = 1.0 - std::sqrt(0.5 + ca);
    const double second = root * root / (2.0 * ca - 1.0);
    return std::min(first, second);
}

double z0_prime(double beta, double rho, double ell) {
    require(beta >= 0.0, "z0_prime: beta must be nonnegative");
    require(rho > 0.0 && rho < 1.0 / 6.0, "z0_prime: rho must lie in (0, 1/6)");
    require(ell > 0.0, "z0_prime: ell must be positive");
    const double denom = ell * ell
        * std::sqrt(3.0 * (1.0 - 2.0 * rho) * std::pow(1.0 - 6.0 * rho, 3));
    const double inner = 1.0 + beta / denom;
    return inner * inner / (std::numbers::pi * rho * rho * ell * ell);
}

double z0_doubleprime(double ell, int q, double r, double R, double alpha0,
                      double pc_site) {
    require(q >= 1, "z0_doubleprime: q must be at least 1");
    require(pc_site > 0.0 && pc_site < 1.0, "z0_doubleprime: pc_site in (0,1)");
    const double hard = std::max(r, R * std::sin(alpha0));
    const double d = ell / 8.0 - (8.0 / kSqrt3) * hard;
    require(d > 0.0, "z0_doubleprime: ell/8 must exceed (8/sqrt 3)(r v R sin alpha0)");
    const double eps = epsilon_of(pc_site);
    const double qpow = std::pow(double(q), 2.0 * std::numbers::pi / alpha0 - 1.0);
    return 64.0 * qpow / (eps * d * d);
}

double beta0_prime(double ell, int q, double R, double r, double alpha0,
                   double pc_site) {
    require(q >= 1, "beta0_prime: q must be at least 1");
    require(pc_site > 0.0 && pc_site < 1.0, "beta0_prime: pc_site in (0,1)");
    const double m = m_pack(ell, r, alpha0);
    require(m >= 1.0, "beta0_prime: packing bound below 1");
    const double eps = epsilon_of(pc_site);
    const double denom = std::pow(1.0 - eps, -1.0 / m) - 1.0;
    require(denom > 0.0, "beta0_prime: nonpositive denominator");
    return (3.0 * kSqrt3 / 4.0) * double(q) * double(q) * R * R / denom;
}

double m_pack(double ell, double r, double alpha0) {
    const double s = ell / (r * std::sin(alpha0)) + 2.0;
    return s * s;
}

double p_hat(double beta, int q, double R) {
    require(beta > 0.0, "p_hat: beta must be positive");
    return 1.0 / ((3.0 * kSqrt3 / (4.0 * beta)) * double(q) * double(q) * R * R + 1.0);
}

double c_gamma_bound(double beta, double ell, double rho) {
    require(beta >= 0.0, "c_gamma_bound: beta must be nonnegative");
    require(ell > 0.0, "c_gamma_bound: ell must be positive");
    require(rho >= 0.0 && rho < 1.0 / 6.0, "c_gamma_bound: rho must lie in [0, 1/6)");
    const double denom = ell * ell
        * std::sqrt(3.0 * (1.0 - 2.0 * rho) * std::pow(1.0 - 6.0 * rho, 3));
    return 2.0 * std::log1p(beta / denom);
}

Interval ell_interval(double r, double R, double alpha0, double rho) {
    require(rho >= 0.0 && rho < 1.0 / 6.0, "ell_interval: rho must lie in [0, 1/6)");
    const double lo = std::max((64.0 / kSqrt3) * std::max(r, R * std::sin(alpha0)),
                               r / L_of_rho(rho));
    const double hi = std::min(kSqrt3 * R, R / U_of_rho(rho));
    Interval out;
    if (lo < hi) {
        out.lo = lo;
        out.hi = hi;
        out.empty = false;
    }
    return out;
}

double rho0_prime(double r, double R, double alpha0) {
    auto nonempty = [&](double rho) { return !ell_interval(r, R, alpha0, rho).empty; };
    if (!nonempty(0.0)) return 0.0;
    double lo = 0.0, hi = 1.0 / 6.0 - 1e-12;
    if (nonempty(hi)) return hi;
    while (hi - lo > 1e-9) {
        const double mid = 0.5 * (lo + hi);
        (nonempty(mid) ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

ThresholdReport report(const ModelParams& p, double rho, double ell, double pc_site) {
    ThresholdReport rep;
    rep.rho = rho;
    rep.ell = ell;
    rep.pc_site = pc_site;
    rep.epsilon = epsilon_of(pc_site);
    rep.rho0 = rho0(p.r, p.R, p.alpha0);
    rep.rho0_prime = rho0_prime(p.r, p.R, p.alpha0);
    rep.L_rho = L_of_rho(rho);
    rep.U_rho = U_of_rho(rho);
    rep.ell_interval = ell_interval(p.r, p.R, p.alpha0, rho);
    rep.z0_prime = z0_prime(p.beta, rho, ell);
    try {
        rep.z0_doubleprime = z0_doubleprime(ell, p.q, p.r, p.R, p.alpha0, pc_site);
    } catch (const std::invalid_argument&) {
        rep.z0_doubleprime = std::numeric_limits<double>::infinity();
    }
    rep.beta0_prime = beta0_prime(ell, p.q, p.R, p.r, p.alpha0, pc_site);
    rep.m_pack = m_pack(ell, p.r, p.alpha0);
    rep.p_hat = p.beta > 0.0 ? p_hat(p.beta, p.q, p.R) : 0.0;
    rep.c_gamma_bound = c_gamma_bound(p.beta, ell, rho);
    return rep;
}

std::string to_text(const ThresholdReport& rep) {
    std::ostringstream os;
    os.precision(12);
    os << "rho = " << rep.rho << "\n"
       << "ell = " << rep.ell << "\n"
       << "pc_site = " << rep.pc_site << "\n"
       << "epsilon = " << rep.epsilon << "\n"
       << "rho0 = " << rep.rho0 << "\n"
       << "rho0_prime = " << rep.rho0_prime << "\n"
       << "L_rho = " << rep.L_rho << "\n"
       << "U_rho = " << rep.U_rho << "\n";
    if (rep.ell_interval.empty) {
        os << "ell_interval = empty\n";
    } else {
        os << "ell_interval_lo = " << rep.ell_interval.lo << "\n"
           << "ell_interval_hi = " << rep.ell_interval.hi << "\n";
    }
    os << "z0_prime = " << rep.z0_prime << "\n"
       << "z0_doubleprime = " << rep.z0_doubleprime << "\n"
       << "beta0_prime = " << rep.beta0_prime << "\n"
       << "m_pack = " << rep.m_pack << "\n"
       << "p_hat = " << rep.p_hat << "\n"
       << "c_gamma_bound = " << rep.c_gamma_bound << "\n";
    return os.str();
}

RegimeCheck check_regime(const ModelParams& p, double rho, double ell, double pc_site) {
    RegimeCheck chk;
    chk.items.push_back({"alpha0 < asin(3/64)", p.alpha0 < std::asin(3.0 / 64.0)});
    chk.items.push_back({"64 r < 3 R", 64.0 * p.r < 3.0 * p.R});
    chk.items.push_back({"rho < rho0_prime", rho < rho0_prime(p.r, p.R, p.alpha0)});
    const Interval i0 = ell_interval(p.r, p.R, p.alpha0, rho);
    chk.items.push_back({"ell in I0", !i0.empty && ell > i0.lo && ell < i0.hi});
    double b0 = std::numeric_limits<double>::infinity();
    double zpp = std::numeric_limits<double>::infinity();
    try { b0 = beta0_prime(ell, p.q, p.R, p.r, p.alpha0, pc_site); } catch (...) {}
    try { zpp = z0_doubleprime(ell, p.q, p.r, p.R, p.alpha0, pc_site); } catch (...) {}
    chk.items.push_back({"beta > beta0_prime", p.beta > b0});
    double zp = std::numeric_limits<double>::infinity();
    if (rho > 0.0 && rho < 1.0 / 6.0)
        zp = z0_prime(p.beta, rho, ell);
    chk.items.push_back({"z > z0'' v (1/q) z0'",
                         p.z > std::max(zpp, zp / double(p.q))});
    return chk;
}

} // namespace delpotts::thresholds
