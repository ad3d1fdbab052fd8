#ifndef HSK_MULTIPLIER_HPP
#define HSK_MULTIPLIER_HPP

#include <vector>

#include "hsk/exactcore.hpp"
#include "hsk/norms.hpp"
#include "hsk/schwarzian.hpp"

namespace hsk {

// Multiplier-norm problem for a Koebe higher Schwarzian symbol from
// A^2_alpha to A^2_{alpha+2p+2q}.
struct MultiplierProblem {
    KoebeClosedForm symbol;
    Rational alpha;
    int p;
    int q;

    double beta() const { return alpha.get_d() + 2.0 * (p + q); }
};

MultiplierProblem koebe_problem(const Rational &alpha, int p, int q);

struct RayleighResult {
    double value;    // sqrt of the best Rayleigh quotient; a true lower bound
    double residual; // ||S y - lambda y|| / lambda at exit
    long iterations;
    bool converged;
};

// Maximizes ||g_r phi||_beta / ||phi||_alpha over polynomials phi of
// degree <= N, with the symbol truncated at K coefficients, by power
// iteration on the symmetrized coefficient-space operator.
RayleighResult rayleigh_lower_bound(const MultiplierProblem &problem, int degree,
                                    int symbol_truncation, double r,
                                    long max_iterations = 100000,
                                    double deadline_seconds = -1.0);

struct CertifiedLower {
    double value; // true lower bound for ||g|| via the dilation lemma
    double slack; // tail mass sum_{k>K} g_k r^k that was subtracted
    RayleighResult rayleigh;
};

CertifiedLower certified_lower_bound(const MultiplierProblem &problem, double r, int degree,
                                     int symbol_truncation, long max_iterations = 100000,
                                     double deadline_seconds = -1.0);

// Tail mass sum_{k>K} g_k r^k of the (positive-coefficient) symbol series;
// computed from the closed-form value at r minus the truncated sum.
double symbol_tail_mass(const KoebeClosedForm &symbol, double r, int truncation);
// Smallest truncation whose tail mass at r is below the target.
int symbol_truncation_for(const KoebeClosedForm &symbol, double r, double target,
                          int at_least);

// The paper's lower-bound quotient
//   ||S_kappa^{[p,q]}(sqrt(r) z)(1-rz^2)^{-lambda}||^2_{alpha+2p+2q}
//   / ||(1-rz^2)^{-lambda}||^2_alpha,
// requiring the proof window alpha+2 < 2 lambda < alpha+3.
double test_family_quotient(int p, int q, double alpha, double lambda, double r,
                            double tol = 1e-10);

// [(p+q-1)!]^2 g0_mult_norm_sq(alpha, alpha+2p+2q); exact, and identical
// to sharp_constant by the pointwise domination |S| <= (p+q-1)! |g_0|.
Rational domination_upper_bound(int p, int q, const Rational &alpha);

// Verifies |S_kappa^{[p,q]}(z)| |1-z^2|^{p+q} <= (p+q-1)! + 1e-12 on a
// polar grid of the open disk.
bool pointwise_domination_check(int p, int q, const GridSpec &grid);

struct SchedulePoint {
    double r;
    int degree;
    int truncation;
    double lambda; // nonzero only for test-family points
    double value;
    double slack;
    double seconds;
    bool converged;
};

struct BoundReport {
    double lower = 0.0;
    double upper = 0.0;
    Rational target_sq; // exact N_{alpha,p,q}
    double target = 0.0;
    double gap = 0.0; // (upper - lower)/upper
    bool budget_exhausted = false;
    std::vector<SchedulePoint> trace;
};

// Two-sided certification: exact upper bound from the domination route,
// best certified numeric lower bound from the (r, N) and (lambda, r)
// schedules that fit the wall-clock budget.
BoundReport sandwich(const MultiplierProblem &problem, double budget_seconds);

} // namespace hsk

#endif
