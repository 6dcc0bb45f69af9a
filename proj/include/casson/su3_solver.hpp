#pragma once

// Flat SU(3) moduli of a Brieskorn sphere by numerical enumeration.
// Each generator's conjugacy class is pinned by a rotation assignment
// (eigenvalue fractions of a turn); representations are minima of
// f(x1,x2,x3) = ||x1 x2 x3 - C||_F^2 over the class product, found by
// random-restart gradient descent in the unitary parametrization
// x_i = u_i d_i u_i^* with QR retraction.
//
// Assignments come in two kinds. Scalar assignments give the central
// generator a scalar image e^{2 pi i m/3} I, which by Schur covers
// every irreducible representation. Block assignments cover the
// reducible nonabelian stratum, where the central generator maps to
// diag(+-1, +-1, 1): frames are restricted to U(2)x{1} and the
// product target is the matching diagonal. Converged solutions are
// clustered by trace characters (identical orbits reached through
// different assignments merge) and classified by commutant dimension.

#include "casson/rational.hpp"
#include "casson/rng.hpp"
#include "casson/seifert.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <map>
#include <string>
#include <thread>
#include <vector>

namespace casson {

using Matrix3c = Eigen::Matrix3cd;
using complexd = std::complex<double>;

struct RotationAssignment {
    bool block = false; // true: frames restricted to U(2)x{1}
    int central_m = 0;  // scalar: h -> e^{2 pi i m/3} I; block: h -> diag((-1)^m,(-1)^m,1)
    std::array<std::array<Rational, 3>, 3> turns; // eigenvalue fractions per generator
    std::array<Rational, 3> target_turns;         // product target diag(e^{2 pi i t_j})

    std::string key() const {
        std::string k = block ? "B|" : "S|";
        for (const auto& g : turns) {
            auto sorted = g;
            std::sort(sorted.begin(), sorted.end());
            for (const auto& t : sorted) { k += t.str(); k += ','; }
            k += ';';
        }
        for (const auto& t : target_turns) { k += t.str(); k += ','; }
        return k;
    }
};

struct SolverConfig {
    double residual_tol = 1e-18;      // accept threshold on squared Frobenius residual
    double cluster_tol = 1e-6;        // character-vector distance separating clusters
    double unitarity_tol = 1e-12;     // bound on ||x^* x - I||_F of accepted generators
    double nullity_tol = 1e-6;        // eigenvalue cutoff for commutant dimension
    double suspicious_residual = 1e-8; // stalls below this are flagged as near misses
    int restarts = 200;
    int max_iterations = 5000;
    int threads = 0;                  // 0: hardware count, capped by TAU_ENGINE_THREADS
    std::uint64_t seed = 1;
};

struct RepCluster {
    std::array<Matrix3c, 3> generators;   // canonical representative
    double residual = 0.0;
    std::array<complexd, 8> character;    // tr of x1,x2,x3,x1x2,x1x3,x2x3,x1x2x3,[x1,x2]
    int commutant_dim = 0;
    int multiplicity = 0;
    double spread = 0.0;                  // max character distance member-to-representative
};

struct SolveDiagnostics {
    std::int64_t restarts = 0;
    std::int64_t converged = 0;
    std::int64_t stalled = 0;
    std::int64_t near_misses = 0;   // stalled with residual below suspicious_residual
    double worst_accepted_residual = 0.0;
    double best_rejected_residual = std::numeric_limits<double>::infinity();

    void absorb(const SolveDiagnostics& o) {
        restarts += o.restarts;
        converged += o.converged;
        stalled += o.stalled;
        near_misses += o.near_misses;
        worst_accepted_residual = std::max(worst_accepted_residual, o.worst_accepted_residual);
        best_rejected_residual = std::min(best_rejected_residual, o.best_rejected_residual);
    }
};

// All class assignments compatible with the central relations.
// Scalar kind: generator i takes eigenvalues exp(2 pi i(3k - m b_i)/(3 a_i))
// with the k-multiset summing to m*b_i mod a_i (determinant one), and
// the product target is exp(-2 pi i m b0/3) I. Block kind: generator i
// takes eigenvalues {exp(i pi l_i/a_i), exp(-i pi l_i/a_i), 1} with
// l_i = c*b_i mod 2, 0 < l_i < a_i, and the product target is
// diag((-1)^{c b0}, (-1)^{c b0}, 1). Deduplicated by exact fraction
// data, sorted by key for a stable order.
inline std::vector<RotationAssignment> su3_candidates(const SeifertPresentation& p) {
    std::map<std::string, RotationAssignment> dedup;

    for (int m = 0; m < 3; ++m) {
        std::array<std::vector<std::array<Rational, 3>>, 3> per_gen;
        for (int i = 0; i < 3; ++i) {
            std::int64_t ai = p.a[i];
            std::int64_t target = (((m * p.b[i]) % ai) + ai) % ai;
            for (std::int64_t k1 = 0; k1 < ai; ++k1)
                for (std::int64_t k2 = k1; k2 < ai; ++k2)
                    for (std::int64_t k3 = k2; k3 < ai; ++k3) {
                        if ((k1 + k2 + k3) % ai != target) continue;
                        std::array<Rational, 3> turns;
                        std::array<std::int64_t, 3> ks{k1, k2, k3};
                        for (int j = 0; j < 3; ++j) {
                            std::int64_t num = 3 * ks[j] - m * p.b[i];
                            std::int64_t den = 3 * ai;
                            num = ((num % den) + den) % den;
                            turns[j] = Rational(num, den);
                        }
                        std::sort(turns.begin(), turns.end());
                        per_gen[i].push_back(turns);
                    }
        }
        std::int64_t cnum = ((-m * p.b0) % 3 + 3) % 3;
        Rational central_turn(cnum, 3);
        for (const auto& t1 : per_gen[0])
            for (const auto& t2 : per_gen[1])
                for (const auto& t3 : per_gen[2]) {
                    RotationAssignment ra;
                    ra.central_m = m;
                    ra.turns = {t1, t2, t3};
                    ra.target_turns = {central_turn, central_turn, central_turn};
                    dedup.emplace(ra.key(), ra);
                }
    }

    for (int c = 0; c <= 1; ++c) {
        std::array<std::vector<std::array<Rational, 3>>, 3> per_gen;
        bool feasible = true;
        for (int i = 0; i < 3; ++i) {
            std::int64_t ai = p.a[i];
            for (std::int64_t l = 1; l < ai; ++l) {
                if ((((l - c * p.b[i]) % 2) + 2) % 2 != 0) continue;
                // SU(2) pair in slots 0,1; the fixed vector in slot 2.
                per_gen[i].push_back({Rational(l, 2 * ai), Rational(2 * ai - l, 2 * ai), Rational(0)});
            }
            feasible = feasible && !per_gen[i].empty();
        }
        if (!feasible) continue;
        Rational eps = (c * p.b0) % 2 == 0 ? Rational(0) : Rational(1, 2);
        for (const auto& t1 : per_gen[0])
            for (const auto& t2 : per_gen[1])
                for (const auto& t3 : per_gen[2]) {
                    RotationAssignment ra;
                    ra.block = true;
                    ra.central_m = c;
                    ra.turns = {t1, t2, t3};
                    ra.target_turns = {eps, eps, Rational(0)};
                    dedup.emplace(ra.key(), ra);
                }
    }

    std::vector<RotationAssignment> out;
    out.reserve(dedup.size());
    for (auto& [k, ra] : dedup)
        out.push_back(std::move(ra));
    return out;
}

namespace detail {

inline complexd unit_phase(const Rational& turn) {
    double angle = 6.283185307179586476925287 * turn.to_double();
    return {std::cos(angle), std::sin(angle)};
}

// Q factor of a QR decomposition with the R diagonal rotated positive,
// which makes the factorization (and hence the retraction) unique.
inline Matrix3c qr_unitary(const Matrix3c& a) {
    Eigen::HouseholderQR<Matrix3c> qr(a);
    Matrix3c q = qr.householderQ();
    Matrix3c r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < 3; ++i) {
        double mag = std::abs(r(i, i));
        if (mag > 1e-300)
            q.col(i) *= r(i, i) / mag;
    }
    return q;
}

inline Matrix3c random_unitary(Rng& rng, bool block) {
    Matrix3c g = Matrix3c::Zero();
    int n = block ? 2 : 3;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            g(i, j) = complexd(rng.gauss(), rng.gauss());
    if (block) g(2, 2) = 1.0;
    return qr_unitary(g);
}

inline void project_block(Matrix3c& m) {
    m(0, 2) = m(1, 2) = m(2, 0) = m(2, 1) = 0.0;
}

struct TripleState {
    std::array<Matrix3c, 3> u;
    std::array<Matrix3c, 3> x;   // u_i d_i u_i^*
    double f = 0.0;
};

inline void rebuild(TripleState& s, const std::array<Matrix3c, 3>& d, const Matrix3c& target) {
    for (int i = 0; i < 3; ++i)
        s.x[i] = s.u[i] * d[i] * s.u[i].adjoint();
    s.f = (s.x[0] * s.x[1] * s.x[2] - target).squaredNorm();
}

inline std::array<complexd, 8> character_vector(const std::array<Matrix3c, 3>& x) {
    Matrix3c x12 = x[0] * x[1];
    Matrix3c x13 = x[0] * x[2];
    Matrix3c x23 = x[1] * x[2];
    Matrix3c x123 = x12 * x[2];
    Matrix3c comm = x12 * x[0].adjoint() * x[1].adjoint();
    return {x[0].trace(), x[1].trace(), x[2].trace(), x12.trace(),
            x13.trace(), x23.trace(), x123.trace(), comm.trace()};
}

inline double character_distance(const std::array<complexd, 8>& a, const std::array<complexd, 8>& b) {
    double s = 0.0;
    for (int i = 0; i < 8; ++i)
        s += std::norm(a[i] - b[i]);
    return std::sqrt(s);
}

// Complex dimension of {M : x_i M = M x_i for all i}, the nullity of
// the positive semidefinite 9x9 form sum_i ||x_i M - M x_i||^2.
inline int commutant_dimension(const std::array<Matrix3c, 3>& x, double tol) {
    Eigen::Matrix<complexd, 9, 9> q = Eigen::Matrix<complexd, 9, 9>::Zero();
    Matrix3c id = Matrix3c::Identity();
    for (const auto& xi : x) {
        Eigen::Matrix<complexd, 9, 9> l;
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                for (int c = 0; c < 3; ++c)
                    for (int e = 0; e < 3; ++e)
                        l(3 * b + a, 3 * e + c) = xi(a, c) * id(b, e) - id(a, c) * xi(e, b);
        q += l.adjoint() * l;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix<complexd, 9, 9>> es(q);
    int dim = 0;
    for (int i = 0; i < 9; ++i)
        if (es.eigenvalues()[i] < tol) ++dim;
    return dim;
}

// Conjugate the triple to canonical position: x1 diagonal with
// eigenvalues sorted by principal argument, residual torus phases
// fixed by rotating the first row of x2 to be real nonnegative.
inline std::array<Matrix3c, 3> canonical_representative(const std::array<Matrix3c, 3>& x) {
    Eigen::ComplexSchur<Matrix3c> schur(x[0]);
    Matrix3c qmat = schur.matrixU();
    std::array<int, 3> order{0, 1, 2};
    std::array<double, 3> args;
    for (int i = 0; i < 3; ++i) {
        double a = std::arg(schur.matrixT()(i, i));
        if (a < 0) a += 6.283185307179586476925287;
        args[i] = a;
    }
    std::sort(order.begin(), order.end(), [&](int i, int j) { return args[i] < args[j]; });
    Matrix3c perm = Matrix3c::Zero();
    for (int i = 0; i < 3; ++i)
        perm(order[i], i) = 1.0;
    qmat = qmat * perm;

    std::array<Matrix3c, 3> y;
    for (int i = 0; i < 3; ++i)
        y[i] = qmat.adjoint() * x[i] * qmat;

    Matrix3c phase = Matrix3c::Identity();
    for (int j = 1; j < 3; ++j) {
        complexd e = y[1](0, j);
        if (std::abs(e) > 1e-12)
            phase(j, j) = std::conj(e) / std::abs(e);
    }
    for (int i = 0; i < 3; ++i)
        y[i] = phase.adjoint() * y[i] * phase;
    return y;
}

inline double unitarity_defect(const std::array<Matrix3c, 3>& x) {
    double worst = 0.0;
    for (const auto& xi : x)
        worst = std::max(worst, (xi.adjoint() * xi - Matrix3c::Identity()).norm());
    return worst;
}

} // namespace detail

// Canonical text key of a character vector: the 16 real components
// rounded to 6 decimals (the cluster tolerance scale), stable across
// runs for a fixed build.
inline std::string character_key(const std::array<complexd, 8>& character) {
    std::string key;
    char buf[32];
    for (const auto& c : character) {
        for (double v : {c.real(), c.imag()}) {
            double r = std::round(v * 1e6) / 1e6;
            if (r == 0.0) r = 0.0; // normalize -0
            std::snprintf(buf, sizeof buf, "%.6f", r);
            key += buf;
            key += ',';
        }
    }
    key.pop_back();
    return key;
}

// Minimize f over the class product from cfg.restarts random starts;
// returns the clusters of accepted minima. A restart that bottoms out
// above the acceptance threshold is counted as stalled (and as a near
// miss if it got suspiciously close).
inline std::vector<RepCluster> solve_triple(const RotationAssignment& ra, const SolverConfig& cfg,
                                            SolveDiagnostics* diag_out = nullptr,
                                            std::uint64_t assignment_index = 0) {
    using namespace detail;
    std::array<Matrix3c, 3> d;
    for (int i = 0; i < 3; ++i) {
        d[i] = Matrix3c::Zero();
        for (int j = 0; j < 3; ++j)
            d[i](j, j) = unit_phase(ra.turns[i][j]);
    }
    Matrix3c target = Matrix3c::Zero();
    for (int j = 0; j < 3; ++j)
        target(j, j) = unit_phase(ra.target_turns[j]);
    Matrix3c target_adj = target.adjoint();

    SolveDiagnostics diag;
    std::vector<RepCluster> clusters;

    for (int restart = 0; restart < cfg.restarts; ++restart) {
        ++diag.restarts;
        Rng rng(mix_seed(cfg.seed, assignment_index, std::uint64_t(restart)));
        TripleState s;
        for (int i = 0; i < 3; ++i)
            s.u[i] = random_unitary(rng, ra.block);
        rebuild(s, d, target);

        double t = 0.2;
        bool converged = s.f < cfg.residual_tol;
        int slow_steps = 0;
        for (int iter = 0; iter < cfg.max_iterations && !converged; ++iter) {
            Matrix3c m1 = s.x[1] * s.x[2] * target_adj;
            Matrix3c m2 = s.x[2] * target_adj * s.x[0];
            Matrix3c m3 = target_adj * s.x[0] * s.x[1];
            std::array<Matrix3c, 3> dir;
            double grad2 = 0.0;
            const Matrix3c* products[3] = {&m1, &m2, &m3};
            for (int i = 0; i < 3; ++i) {
                Matrix3c mi = s.u[i].adjoint() * (*products[i]) * s.u[i];
                Matrix3c bi = -2.0 * (d[i] * mi - mi * d[i]);
                dir[i] = 0.5 * (bi - bi.adjoint());
                if (ra.block) project_block(dir[i]);
                grad2 += dir[i].squaredNorm();
            }
            if (grad2 < 1e-26) break; // critical point

            bool improved = false;
            double f_before = s.f;
            for (int halving = 0; halving < 60 && !improved; ++halving) {
                TripleState trial;
                for (int i = 0; i < 3; ++i)
                    trial.u[i] = qr_unitary(s.u[i] + t * (s.u[i] * dir[i]));
                rebuild(trial, d, target);
                if (trial.f < s.f) {
                    s = trial;
                    t = std::min(t * 1.3, 2.0);
                    improved = true;
                } else {
                    t *= 0.5;
                    if (t < 1e-18) break;
                }
            }
            if (!improved) break; // no descent at any step size
            if (s.f < cfg.residual_tol) { converged = true; break; }
            slow_steps = (f_before - s.f < 1e-6 * f_before) ? slow_steps + 1 : 0;
            if (slow_steps > 25) break; // bottoming out above tolerance
        }

        if (!converged) {
            ++diag.stalled;
            if (s.f < cfg.suspicious_residual) ++diag.near_misses;
            diag.best_rejected_residual = std::min(diag.best_rejected_residual, s.f);
            continue;
        }

        // Polish the frame and re-measure before accepting.
        for (int i = 0; i < 3; ++i)
            s.u[i] = qr_unitary(s.u[i]);
        rebuild(s, d, target);
        if (s.f >= cfg.residual_tol || unitarity_defect(s.x) > cfg.unitarity_tol) {
            ++diag.stalled;
            if (s.f < cfg.suspicious_residual) ++diag.near_misses;
            diag.best_rejected_residual = std::min(diag.best_rejected_residual, s.f);
            continue;
        }
        ++diag.converged;
        diag.worst_accepted_residual = std::max(diag.worst_accepted_residual, s.f);

        std::array<complexd, 8> chi = character_vector(s.x);
        bool placed = false;
        for (auto& cl : clusters) {
            double dist = character_distance(chi, cl.character);
            if (dist < cfg.cluster_tol) {
                ++cl.multiplicity;
                cl.spread = std::max(cl.spread, dist);
                if (s.f < cl.residual) {
                    cl.residual = s.f;
                    cl.generators = canonical_representative(s.x);
                }
                placed = true;
                break;
            }
        }
        if (!placed) {
            RepCluster cl;
            cl.generators = canonical_representative(s.x);
            cl.residual = s.f;
            cl.character = chi;
            cl.commutant_dim = commutant_dimension(s.x, cfg.nullity_tol);
            cl.multiplicity = 1;
            clusters.push_back(std::move(cl));
        }
    }

    if (diag_out) diag_out->absorb(diag);
    return clusters;
}

struct Su3Census {
    SeifertPresentation presentation;
    std::size_t assignment_count = 0;
    std::vector<RepCluster> irreducible;          // commutant dimension 1
    std::vector<RepCluster> reducible_nonabelian; // commutant dimension 2
    std::size_t abelian_clusters = 0;             // commutant dimension >= 3, discarded
    SolveDiagnostics diagnostics;
    std::vector<std::string> errors;
};

inline int resolve_thread_count(const SolverConfig& cfg) {
    int n = cfg.threads;
    if (n <= 0) {
        unsigned hw = std::thread::hardware_concurrency();
        n = hw == 0 ? 1 : int(hw);
    }
    if (const char* cap = std::getenv("TAU_ENGINE_THREADS")) {
        int c = std::atoi(cap);
        if (c > 0 && c < n) n = c;
    }
    return n < 1 ? 1 : n;
}

// Aggregate solve_triple over every candidate assignment and classify
// the clusters. Assignments are independent tasks; results are merged
// in assignment order so the census does not depend on scheduling.
inline Su3Census enumerate_su3(const SeifertPresentation& p, const SolverConfig& cfg) {
    using namespace detail;
    Su3Census census;
    census.presentation = p;

    std::vector<RotationAssignment> assignments = su3_candidates(p);
    census.assignment_count = assignments.size();

    std::vector<std::vector<RepCluster>> found(assignments.size());
    std::vector<SolveDiagnostics> diags(assignments.size());

    int threads = resolve_thread_count(cfg);
    if (threads <= 1 || assignments.size() <= 1) {
        for (std::size_t i = 0; i < assignments.size(); ++i)
            found[i] = solve_triple(assignments[i], cfg, &diags[i], i);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= assignments.size()) return;
                found[i] = solve_triple(assignments[i], cfg, &diags[i], i);
            }
        };
        std::vector<std::thread> pool;
        for (int i = 0; i < threads; ++i)
            pool.emplace_back(worker);
        for (auto& th : pool)
            th.join();
    }

    std::vector<RepCluster> merged;
    for (std::size_t i = 0; i < assignments.size(); ++i) {
        census.diagnostics.absorb(diags[i]);
        for (auto& cl : found[i]) {
            bool placed = false;
            for (auto& existing : merged) {
                double dist = character_distance(cl.character, existing.character);
                if (dist < cfg.cluster_tol) {
                    existing.multiplicity += cl.multiplicity;
                    existing.spread = std::max({existing.spread, cl.spread, dist});
                    if (cl.residual < existing.residual) {
                        existing.residual = cl.residual;
                        existing.generators = cl.generators;
                    }
                    placed = true;
                    break;
                }
            }
            if (!placed) merged.push_back(std::move(cl));
        }
    }

    std::stable_sort(merged.begin(), merged.end(), [](const RepCluster& a, const RepCluster& b) {
        return character_key(a.character) < character_key(b.character);
    });

    for (std::size_t i = 0; i < merged.size(); ++i) {
        if (merged[i].spread > cfg.cluster_tol)
            census.errors.push_back("cluster " + std::to_string(i) +
                                    " has character spread above cluster_tol; "
                                    "possible positive-dimensional solution family");
        for (std::size_t j = i + 1; j < merged.size(); ++j) {
            double dist = character_distance(merged[i].character, merged[j].character);
            if (dist <= 50.0 * cfg.cluster_tol)
                census.errors.push_back("clusters " + std::to_string(i) + " and " + std::to_string(j) +
                                        " are separated by less than 50x cluster_tol; "
                                        "possible positive-dimensional solution family");
        }
    }

    for (auto& cl : merged) {
        if (cl.commutant_dim <= 1)
            census.irreducible.push_back(std::move(cl));
        else if (cl.commutant_dim == 2)
            census.reducible_nonabelian.push_back(std::move(cl));
        else
            ++census.abelian_clusters;
    }
    return census;
}

} // namespace casson
