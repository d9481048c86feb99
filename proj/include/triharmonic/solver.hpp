#ifndef TRIHARMONIC_SOLVER_HPP
#define TRIHARMONIC_SOLVER_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include <Eigen/Dense>

#include "affine.hpp"
#include "algebra.hpp"
#include "errors.hpp"
#include "harmonic.hpp"
#include "parallel.hpp"
#include "random.hpp"

namespace triharmonic {

struct SolverConfig {
    int restarts = 50;        // total number of starts (deterministic guesses first)
    int max_iterations = 200; // Levenberg-Marquardt iteration cap per start
    double tolerance = 1e-10; // certification gate on the residual max-norm
    std::uint64_t seed = 0;   // seeds the random starting points
    // Starting points consumed before random ones; each entry must match the
    // unknown count of the solve (6 for parameters, 9 for matrix entries).
    std::vector<std::vector<double>> initial_guesses;
};

struct ParamCandidate {
    AlgebraParams<double> params;
    double residual = 0.0;
    int restart_index = 0;
    int iterations = 0;
};

struct MatrixCandidate {
    AffineMap<double> phi;
    double residual = 0.0;
    int restart_index = 0;
    int iterations = 0;
};

namespace detail {

/// Damped Gauss-Newton (Levenberg-Marquardt) on a 3-equation system with N
/// unknowns and analytic Jacobian. Returns the iteration count; the point is
/// updated in place.
template <int N, class ResidualFn, class JacobianFn>
int levenberg_marquardt(Eigen::Matrix<double, N, 1>& x, const ResidualFn& residual,
                        const JacobianFn& jacobian, int max_iterations, double tolerance) {
    double lambda = 1e-3;
    Eigen::Matrix<double, 3, 1> r = residual(x);
    double cost = r.squaredNorm();
    int iter = 0;
    for (; iter < max_iterations; ++iter) {
        if (r.template lpNorm<Eigen::Infinity>() < 0.01 * tolerance) break;
        const Eigen::Matrix<double, 3, N> J = jacobian(x);
        const Eigen::Matrix<double, N, N> JtJ = J.transpose() * J;
        const Eigen::Matrix<double, N, 1> g = J.transpose() * r;
        bool stepped = false;
        while (lambda < 1e14) {
            Eigen::Matrix<double, N, N> H = JtJ;
            H.diagonal().array() += lambda;
            const Eigen::Matrix<double, N, 1> delta = H.ldlt().solve(-g);
            const Eigen::Matrix<double, N, 1> xn = x + delta;
            const Eigen::Matrix<double, 3, 1> rn = residual(xn);
            if (rn.squaredNorm() < cost) {
                x = xn;
                r = rn;
                cost = rn.squaredNorm();
                lambda = std::max(lambda * 0.1, 1e-12);
                stepped = true;
                break;
            }
            lambda *= 10.0;
        }
        if (!stepped) break; // stuck: damping exhausted
    }
    return iter;
}

/// Deterministic start list: explicit guesses first, then uniform draws in
/// [-2,2]^N until cfg.restarts starts exist (guesses count toward the total).
template <int N>
std::vector<Eigen::Matrix<double, N, 1>> make_starts(const SolverConfig& cfg) {
    if (cfg.restarts < 1) throw BadInput("solver: restarts must be >= 1");
    if (!(cfg.tolerance > 0.0)) throw BadInput("solver: tolerance must be positive");
    std::vector<Eigen::Matrix<double, N, 1>> starts;
    for (const auto& g : cfg.initial_guesses) {
        if (g.size() != static_cast<std::size_t>(N))
            throw BadInput("solver: initial guess has wrong dimension");
        Eigen::Matrix<double, N, 1> x;
        for (int i = 0; i < N; ++i) x[i] = g[i];
        starts.push_back(x);
    }
    Rng rng(cfg.seed);
    const std::size_t total =
        std::max<std::size_t>(static_cast<std::size_t>(cfg.restarts), starts.size());
    while (starts.size() < total) {
        Eigen::Matrix<double, N, 1> x;
        for (int i = 0; i < N; ++i) x[i] = rng.uniform_real(-2.0, 2.0);
        starts.push_back(x);
    }
    return starts;
}

inline double param_distance(const AlgebraParams<double>& a, const AlgebraParams<double>& b) {
    double d = 0.0;
    for (int i = 0; i < 6; ++i) d = std::max(d, std::abs(a.p[i] - b.p[i]));
    return d;
}

inline double matrix_distance(const Mat3<double>& a, const Mat3<double>& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) d = std::max(d, std::abs(a(i, j) - b(i, j)));
    return d;
}

} // namespace detail

/// Given the pre-twist, solve the three harmonicity equations (with the
/// dependent constants eliminated) for the six free parameters. Multistart
/// damped Newton least-squares; every candidate is re-certified against
/// harmonicity_residual and near-duplicates are merged. An empty list means
/// no start produced a certified solution (the system may be inconsistent,
/// e.g. orthonormal rows).
inline std::vector<ParamCandidate> solve_params(const AffineMap<double>& phi,
                                                const SolverConfig& cfg) {
    bool all_zero = true;
    for (std::size_t i = 0; i < 3 && all_zero; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            if (phi.A(i, j) != 0.0) { all_zero = false; break; }
    if (all_zero) throw BadInput("solve_params: pre-twist matrix must be nonzero");

    const RowGram<double> g = row_gram(phi.A);
    const double n1 = g.n1, n2 = g.n2, n3 = g.n3, d12 = g.d12, d13 = g.d13, d23 = g.d23;

    const auto residual = [&](const Eigen::Matrix<double, 6, 1>& x) {
        const AlgebraParams<double> P{x[0], x[1], x[2], x[3], x[4], x[5]};
        Eigen::Matrix<double, 3, 1> r;
        r[0] = n1 + n2 * P.p7() + 2.0 * d23 * P.p8() + n3 * P.p9();
        r[1] = n2 * x[0] + 2.0 * d23 * x[2] + n3 * x[4] + 2.0 * d12;
        r[2] = n2 * x[1] + 2.0 * d23 * x[3] + n3 * x[5] + 2.0 * d13;
        return r;
    };
    const auto jacobian = [&](const Eigen::Matrix<double, 6, 1>& x) {
        const double p1 = x[0], p2 = x[1], p3 = x[2], p4 = x[3], p5 = x[4], p6 = x[5];
        const double g7[6] = {-p4, p3 - p6, p2, -p1 + 2.0 * p4, 0.0, -p2};
        const double g8[6] = {0.0, p5, -p4, -p3, p2, 0.0};
        const double g9[6] = {-p5, 0.0, 2.0 * p3 - p6, p5, -p1 + p4, -p3};
        Eigen::Matrix<double, 3, 6> J;
        for (int j = 0; j < 6; ++j) {
            J(0, j) = n2 * g7[j] + 2.0 * d23 * g8[j] + n3 * g9[j];
        }
        J.row(1) << n2, 0.0, 2.0 * d23, 0.0, n3, 0.0;
        J.row(2) << 0.0, n2, 0.0, 2.0 * d23, 0.0, n3;
        return J;
    };

    const auto starts = detail::make_starts<6>(cfg);
    std::vector<ParamCandidate> slots(starts.size());
    std::vector<char> ok(starts.size(), 0);
    parallel_for(starts.size(), [&](std::size_t i) {
        Eigen::Matrix<double, 6, 1> x = starts[i];
        const int iters =
            detail::levenberg_marquardt<6>(x, residual, jacobian, cfg.max_iterations, cfg.tolerance);
        const AlgebraParams<double> P{x[0], x[1], x[2], x[3], x[4], x[5]};
        const double res = max_abs(harmonicity_residual(phi, P));
        if (res < cfg.tolerance) {
            slots[i] = ParamCandidate{P, res, static_cast<int>(i), iters};
            ok[i] = 1;
        }
    });

    std::vector<ParamCandidate> certified;
    for (std::size_t i = 0; i < slots.size(); ++i)
        if (ok[i]) certified.push_back(slots[i]);
    std::sort(certified.begin(), certified.end(), [](const ParamCandidate& a, const ParamCandidate& b) {
        if (a.residual != b.residual) return a.residual < b.residual;
        for (int i = 0; i < 6; ++i)
            if (a.params.p[i] != b.params.p[i]) return a.params.p[i] < b.params.p[i];
        return a.restart_index < b.restart_index;
    });
    std::vector<ParamCandidate> merged;
    for (const auto& c : certified) {
        bool dup = false;
        for (const auto& kept : merged)
            if (detail::param_distance(c.params, kept.params) <= 10.0 * cfg.tolerance) {
                dup = true;
                break;
            }
        if (!dup) merged.push_back(c);
    }
    return merged;
}

/// Given the algebra, solve for a harmonic pre-twist matrix (nine unknowns,
/// offset fixed to zero). The residual is homogeneous of degree two in A, so
/// candidates are reported at Frobenius norm one (first significant entry
/// positive) and near-zero or row-degenerate matrices are excluded.
inline std::vector<MatrixCandidate> solve_matrix(const AlgebraParams<double>& P,
                                                 const SolverConfig& cfg) {
    const auto unpack = [](const Eigen::Matrix<double, 9, 1>& x) {
        Mat3<double> A;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) A(i, j) = x[3 * i + j];
        return A;
    };
    const auto residual = [&](const Eigen::Matrix<double, 9, 1>& x) {
        AffineMap<double> m;
        m.A = unpack(x);
        const Element<double> r = harmonicity_residual(m, P);
        return Eigen::Matrix<double, 3, 1>(r[0], r[1], r[2]);
    };
    const auto jacobian = [&](const Eigen::Matrix<double, 9, 1>& x) {
        const Mat3<double> A = unpack(x);
        Eigen::Matrix<double, 3, 9> J;
        for (std::size_t j = 0; j < 3; ++j) {
            const Mat3<double> R = rep_of(A.col(j), P);
            for (std::size_t m = 0; m < 3; ++m)
                for (std::size_t i = 0; i < 3; ++i)
                    J(static_cast<int>(m), static_cast<int>(3 * i + j)) = 2.0 * R(m, i);
        }
        return J;
    };

    const auto starts = detail::make_starts<9>(cfg);
    std::vector<MatrixCandidate> slots(starts.size());
    std::vector<char> ok(starts.size(), 0);
    parallel_for(starts.size(), [&](std::size_t i) {
        Eigen::Matrix<double, 9, 1> x = starts[i];
        const int iters =
            detail::levenberg_marquardt<9>(x, residual, jacobian, cfg.max_iterations, cfg.tolerance);
        Mat3<double> A = unpack(x);
        const double fro = std::sqrt(frobenius_norm2(A));
        if (fro < 1e-6) return; // trivial zero solution
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t c = 0; c < 3; ++c) A(r, c) /= fro;
        // Sign convention: first entry of significant magnitude is positive.
        double lead = 0.0;
        for (std::size_t r = 0; r < 3 && lead == 0.0; ++r)
            for (std::size_t c = 0; c < 3; ++c)
                if (std::abs(A(r, c)) > 1e-9) { lead = A(r, c); break; }
        if (lead < 0.0)
            for (std::size_t r = 0; r < 3; ++r)
                for (std::size_t c = 0; c < 3; ++c) A(r, c) = -A(r, c);
        double min_row = std::numeric_limits<double>::infinity();
        for (std::size_t r = 0; r < 3; ++r) min_row = std::min(min_row, std::sqrt(to_double(norm2(A[r]))));
        if (min_row < 0.1) return; // degenerate row excluded by contract
        AffineMap<double> m;
        m.A = A;
        const double res = max_abs(harmonicity_residual(m, P));
        if (res < cfg.tolerance) {
            slots[i] = MatrixCandidate{m, res, static_cast<int>(i), iters};
            ok[i] = 1;
        }
    });

    std::vector<MatrixCandidate> certified;
    for (std::size_t i = 0; i < slots.size(); ++i)
        if (ok[i]) certified.push_back(slots[i]);
    std::sort(certified.begin(), certified.end(),
              [](const MatrixCandidate& a, const MatrixCandidate& b) {
                  if (a.residual != b.residual) return a.residual < b.residual;
                  for (std::size_t i = 0; i < 3; ++i)
                      for (std::size_t j = 0; j < 3; ++j)
                          if (a.phi.A(i, j) != b.phi.A(i, j)) return a.phi.A(i, j) < b.phi.A(i, j);
                  return a.restart_index < b.restart_index;
              });
    std::vector<MatrixCandidate> merged;
    for (const auto& c : certified) {
        bool dup = false;
        for (const auto& kept : merged)
            if (detail::matrix_distance(c.phi.A, kept.phi.A) <= 10.0 * cfg.tolerance) {
                dup = true;
                break;
            }
        if (!dup) merged.push_back(c);
    }
    return merged;
}

struct JointCandidate {
    AffineMap<double> phi;
    AlgebraParams<double> params;
    double residual = 0.0;
    int restart_index = 0;
};

/// The fifteen-variable joint problem (both A and p unknown), exposed as a
/// thin alternation of the two single-sided solvers rather than a dedicated
/// quartic solver: each sweep refines p for the current A, then A for the
/// refreshed p, starting from seeded random pairs.
inline std::vector<JointCandidate> solve_joint(const SolverConfig& cfg, int sweeps = 3) {
    Rng rng(cfg.seed);
    std::vector<JointCandidate> out;
    for (int restart = 0; restart < cfg.restarts; ++restart) {
        AffineMap<double> phi;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) phi.A(i, j) = rng.uniform_real(-2.0, 2.0);
        std::vector<double> p(6);
        for (auto& v : p) v = rng.uniform_real(-2.0, 2.0);
        AlgebraParams<double> P{p[0], p[1], p[2], p[3], p[4], p[5]};
        bool alive = true;
        for (int s = 0; s < sweeps && alive; ++s) {
            SolverConfig inner;
            inner.restarts = 1;
            inner.max_iterations = cfg.max_iterations;
            inner.tolerance = cfg.tolerance;
            inner.seed = cfg.seed + static_cast<std::uint64_t>(restart) * 1000 + s;
            inner.initial_guesses = {{P.p[0], P.p[1], P.p[2], P.p[3], P.p[4], P.p[5]}};
            try {
                const auto pc = solve_params(phi, inner);
                if (!pc.empty()) P = pc.front().params;
            } catch (const BadInput&) {
                alive = false;
                break;
            }
            std::vector<double> flat(9);
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 3; ++j) flat[3 * i + j] = phi.A(i, j);
            inner.initial_guesses = {flat};
            const auto mc = solve_matrix(P, inner);
            if (!mc.empty()) phi = mc.front().phi;
        }
        if (!alive) continue;
        const double res = max_abs(harmonicity_residual(phi, P));
        if (res < cfg.tolerance) out.push_back(JointCandidate{phi, P, res, restart});
    }
    return out;
}

// Snap a double candidate to exact rationals (coarse-to-fine continued-fraction
// caps, then the exact dyadic value) and re-check harmonicity in exact
// arithmetic against a rational pre-twist.
struct RationalizedParams {
    AlgebraParams<Rational> params;
    double residual = std::numeric_limits<double>::infinity();
    bool pass = false;
};

inline RationalizedParams rationalize_params(const AlgebraParams<double>& P,
                                             const AffineMap<Rational>& m,
                                             double tol = 1e-10) {
    RationalizedParams best;
    const auto consider = [&](const AlgebraParams<Rational>& cand) {
        const double res = max_abs(harmonicity_residual(m, cand));
        if (res < best.residual) {
            best.params = cand;
            best.residual = res;
        }
    };
    for (std::uint64_t cap = 1000; cap <= 1000000000000000ULL; cap *= 1000) {
        AlgebraParams<Rational> cand;
        for (std::size_t i = 0; i < 6; ++i) cand.p[i] = rationalize(P.p[i], cap);
        consider(cand);
        if (best.residual == 0.0) break;
    }
    if (best.residual > 0.0) {
        AlgebraParams<Rational> cand;
        for (std::size_t i = 0; i < 6; ++i) cand.p[i] = rational_from_double(P.p[i]);
        consider(cand);
    }
    best.pass = best.residual < tol;
    return best;
}

} // namespace triharmonic

#endif // TRIHARMONIC_SOLVER_HPP
