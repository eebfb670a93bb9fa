#ifndef ZETALOGIC_ZETA_HPP
#define ZETALOGIC_ZETA_HPP

#include <complex>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace zetalogic {

using Complex = std::complex<double>;
using Rational = boost::multiprecision::cpp_rational;

// ── Results ─────────────────────────────────────────────────────────────────

enum class SeriesStatus : unsigned char {
    Converged, Diverged, Oscillating, Pole, OutOfDomain
};

std::string_view to_string(SeriesStatus s);

struct SeriesResult {
    Complex value{0.0, 0.0};
    double error_bound = std::numeric_limits<double>::infinity();  // absolute
    std::uint64_t terms_used = 0;
    SeriesStatus status = SeriesStatus::OutOfDomain;
    std::string note;  // domain rule, pole marker, trivial-zero marker
};

// ── Exact Bernoulli numbers ─────────────────────────────────────────────────

// B_k for even k in [0, 120], via the defining recurrence
// sum_{j=0}^{k} C(k+1, j) B_j = 0 over exact rationals (B_1 = -1/2
// convention internally; only even indices are exposed).
// Throws DomainError for odd or out-of-range k.
Rational bernoulli_number(int k);

// ── Series evaluations ──────────────────────────────────────────────────────

// Partial sum of n^{-s} for n = 1..n_terms, in ascending order with
// compensated accumulation. Divergent requests still return the literal
// partial sum (status Diverged); error_bound is the integral tail bound
// n_terms^{1-sigma} / (sigma - 1) when sigma > 1, infinite otherwise.
SeriesResult dirichlet_partial(Complex s, std::uint64_t n_terms);

// Converged iff p > 1 (p <= 0 included in Diverged).
SeriesStatus classify_pseries(double p);

// Requires re(s) == 1 exactly (throws DomainError otherwise):
// Pole at s = 1, Oscillating elsewhere on the line.
SeriesStatus classify_line(Complex s);

// (sum n^{-sigma} cos(-t ln n), sum n^{-sigma} sin(-t ln n)); recombines to
// dirichlet_partial(s, n_terms).
std::pair<double, double> trig_components(Complex s, std::uint64_t n_terms);

// Product over primes p <= prime_bound of (1 - p^{-s})^{-1}.
// sigma <= 1 yields status OutOfDomain.
SeriesResult euler_product_partial(Complex s, std::uint64_t prime_bound);

// Alternating-series route: sum (-1)^{n+1} n^{-s} / (1 - 2^{1-s}) for
// sigma > 0, s != 1. Direct summation with a rigorous alternating-tail
// bound when that needs few enough terms; otherwise a binomially weighted
// acceleration of the same series with a calibrated bound. Points where
// |1 - 2^{1-s}| < 1e-9 other than s = 1 are OutOfDomain (spurious zeros of
// the prefactor at s = 1 + 2*pi*i*k/ln 2).
SeriesResult eta_zeta(Complex s, double tol);

struct EmParams {
    int bernoulli_terms = 5;  // m: correction terms T_1..T_m
    int cutoff = 20;          // n: direct-sum cutoff
};

// Sum-plus-correction evaluation with explicit remainder bound
//   value = sum_{j<n} j^{-s} + n^{-s}/2 + n^{1-s}/(s-1) + sum_{k<=m} T_k,n(s)
//   T_k,n(s) = B_2k/(2k)! * n^{1-s-2k} * prod_{j=0}^{2k-2} (s+j)
//   error  <= |(s+2m+1)/(sigma+2m+1)| * |T_{m+1,n}(s)|  (+ rounding floor)
// valid for sigma > -(2m+1); s = 1 is a Pole, violations are OutOfDomain.
SeriesResult em_zeta(Complex s, EmParams params);

// Lanczos-approximation Gamma with reflection for re(s) < 0.5.
// Throws DomainError at nonpositive integers.
Complex gamma(Complex s);

struct IntegralCheck {
    double integral;          // quadrature of x^{s-1}/(e^x - 1) over (0, inf)
    double gamma_times_zeta;  // gamma(s) * zeta(s) reference value
    double difference;        // absolute difference
};

// Checks the integral identity for real s > 1 (throws DomainError
// otherwise). The [0,1] piece uses the x^{s-2} * (x/(e^x-1)) expansion; the
// [1,T] piece uses adaptive Gauss-Kronrod bisection; T is chosen so the
// dropped exponential tail is below quad_tol/10.
IntegralCheck bose_integral_check(double s, double quad_tol);

// Reflection route for sigma < 0:
//   value = 2^s pi^{s-1} sin(pi s / 2) gamma(1-s) zeta(1-s)
// with zeta(1-s) from em_zeta. Negative even integers (within 1e-12)
// return exactly 0 with a trivial-zero note. sigma >= 0 is OutOfDomain.
SeriesResult functional_eq_zeta(Complex s);

// ── Region maps ─────────────────────────────────────────────────────────────

enum class ZetaMethod : unsigned char {
    Dirichlet, EulerProduct, Eta, EulerMaclaurin
};

std::string_view to_string(ZetaMethod m);
const ZetaMethod* method_from_name(std::string_view name);

struct GridSpec {
    double re_min, re_max;
    int re_count;
    double im_min, im_max;
    int im_count;

    double re_at(int i) const;
    double im_at(int j) const;
};

struct RegionMap {
    GridSpec grid;
    ZetaMethod method;
    int em_bernoulli_terms;             // m used for the EulerMaclaurin rule
    std::vector<SeriesStatus> statuses;  // row-major: [j * re_count + i]
};

// Per-point status from the method's domain rules (no summation):
// Dirichlet converges on sigma > 1, the eta route on sigma > 0, the
// Euler-Maclaurin route on sigma > -(2m+1). Grids above 10^6 points or
// non-positive counts are rejected (DomainError).
RegionMap region_map(const GridSpec& grid, ZetaMethod method,
                     int em_bernoulli_terms = 5);

// CSV with header "re,im,status", one row per grid point, row-major.
std::string to_csv(const RegionMap& map);

// ── Serialization ───────────────────────────────────────────────────────────

// JSON: {s:[re,im], method, value:[re,im], error_bound, terms, status}
std::string to_text(const SeriesResult& r, Complex s, std::string_view method);
std::string to_json(const SeriesResult& r, Complex s, std::string_view method);

}  // namespace zetalogic

#endif  // ZETALOGIC_ZETA_HPP
