#pragma once

// Brute-force character theory of SL(2,5), the order-120 fundamental
// group of Sigma(2,3,5). Everything here is derived from the group's
// multiplication table alone: conjugacy classes, the class-algebra
// character table with irreducible degrees, and a witness realizing a
// Seifert presentation inside the group. This gives an exact oracle
// for the numerically enumerated flat moduli, on a code path fully
// independent of the solver.

#include "casson/seifert.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace testsupport {

struct FiniteGroup {
    std::vector<std::array<int, 4>> elements; // row-major 2x2 over F_5, det = 1
    std::vector<std::vector<int>> mult;
    std::vector<int> inverse;
    std::vector<int> class_of;
    std::vector<std::vector<int>> classes;
    int identity = 0;

    int power(int g, std::int64_t e) const {
        int base = e >= 0 ? g : inverse[g];
        std::int64_t n = e >= 0 ? e : -e;
        int acc = identity;
        for (std::int64_t i = 0; i < n; ++i)
            acc = mult[acc][base];
        return acc;
    }

    int order_of(int g) const {
        int acc = g, n = 1;
        while (acc != identity) {
            acc = mult[acc][g];
            ++n;
        }
        return n;
    }

    bool generates(std::vector<int> gens) const {
        std::vector<char> seen(elements.size(), 0);
        seen[std::size_t(identity)] = 1;
        std::vector<int> frontier{identity};
        for (int g : gens)
            if (!seen[std::size_t(g)]) {
                seen[std::size_t(g)] = 1;
                frontier.push_back(g);
            }
        std::size_t count = frontier.size();
        while (!frontier.empty()) {
            int g = frontier.back();
            frontier.pop_back();
            for (int x : gens) {
                int p = mult[g][x];
                if (!seen[std::size_t(p)]) {
                    seen[std::size_t(p)] = 1;
                    frontier.push_back(p);
                    ++count;
                }
            }
        }
        return count == elements.size();
    }
};

inline FiniteGroup binary_icosahedral() {
    FiniteGroup G;
    std::map<std::array<int, 4>, int> index;
    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b)
            for (int c = 0; c < 5; ++c)
                for (int d = 0; d < 5; ++d) {
                    int det = ((a * d - b * c) % 5 + 5) % 5;
                    if (det != 1) continue;
                    index.emplace(std::array<int, 4>{a, b, c, d}, int(G.elements.size()));
                    G.elements.push_back({a, b, c, d});
                }
    if (G.elements.size() != 120)
        throw std::logic_error("binary_icosahedral: wrong order");

    const std::size_t n = G.elements.size();
    G.mult.assign(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto& x = G.elements[i];
            const auto& y = G.elements[j];
            std::array<int, 4> p{(x[0] * y[0] + x[1] * y[2]) % 5, (x[0] * y[1] + x[1] * y[3]) % 5,
                                 (x[2] * y[0] + x[3] * y[2]) % 5, (x[2] * y[1] + x[3] * y[3]) % 5};
            G.mult[i][j] = index.at(p);
        }
    G.identity = index.at({1, 0, 0, 1});
    G.inverse.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& x = G.elements[i];
        std::array<int, 4> inv{x[3], (5 - x[1]) % 5, (5 - x[2]) % 5, x[0]};
        G.inverse[i] = index.at(inv);
    }

    G.class_of.assign(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        if (G.class_of[i] != -1) continue;
        int cls = int(G.classes.size());
        std::vector<int> members;
        for (std::size_t g = 0; g < n; ++g) {
            int conj = G.mult[G.mult[int(g)][int(i)]][G.inverse[g]];
            if (G.class_of[std::size_t(conj)] == -1) {
                G.class_of[std::size_t(conj)] = cls;
                members.push_back(conj);
            }
        }
        G.classes.push_back(std::move(members));
    }
    return G;
}

struct CharacterTable {
    std::vector<int> degrees;                            // chi(1) per irreducible, ascending
    std::vector<std::vector<std::complex<double>>> chi;  // chi[r][k]: row r at class k
    std::vector<std::size_t> class_sizes;
    int identity_class = 0;
};

// Characters from the class-algebra structure constants: the columns
// of the character table are the joint eigenvectors of the class-sum
// multiplication matrices, with chi(1) recovered from the row
// orthogonality relation.
inline CharacterTable character_table(const FiniteGroup& G) {
    const std::size_t nc = G.classes.size();
    const double order = double(G.elements.size());

    std::vector<Eigen::MatrixXd> M(nc, Eigen::MatrixXd::Zero(Eigen::Index(nc), Eigen::Index(nc)));
    for (std::size_t i = 0; i < nc; ++i)
        for (std::size_t j = 0; j < nc; ++j) {
            std::vector<double> cnt(nc, 0.0);
            for (int g : G.classes[i])
                for (int h : G.classes[j])
                    cnt[std::size_t(G.class_of[std::size_t(G.mult[g][h])])] += 1.0;
            for (std::size_t k = 0; k < nc; ++k)
                M[i](Eigen::Index(k), Eigen::Index(j)) = cnt[k] / double(G.classes[k].size());
        }

    static constexpr double primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    Eigen::MatrixXd combo = Eigen::MatrixXd::Zero(Eigen::Index(nc), Eigen::Index(nc));
    for (std::size_t i = 0; i < nc; ++i)
        combo += std::sqrt(primes[i]) * M[i];

    Eigen::EigenSolver<Eigen::MatrixXd> es(combo);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("character_table: eigensolver failed");

    CharacterTable table;
    table.identity_class = G.class_of[std::size_t(G.identity)];
    for (std::size_t k = 0; k < nc; ++k)
        table.class_sizes.push_back(G.classes[k].size());

    std::vector<std::pair<int, std::vector<std::complex<double>>>> rows;
    for (std::size_t r = 0; r < nc; ++r) {
        Eigen::VectorXcd v = es.eigenvectors().col(Eigen::Index(r));
        Eigen::Index s = 0;
        v.cwiseAbs().maxCoeff(&s);
        std::vector<std::complex<double>> omega(nc);
        double inv_norm = 0.0;
        for (std::size_t i = 0; i < nc; ++i) {
            omega[i] = (M[i] * v)(s) / v(s);
            inv_norm += std::norm(omega[i]) / double(G.classes[i].size());
        }
        double deg2 = order / inv_norm;
        int deg = int(std::lround(std::sqrt(deg2)));
        if (std::abs(deg2 - double(deg) * double(deg)) > 1e-6)
            throw std::runtime_error("character_table: non-integral degree");
        std::vector<std::complex<double>> chi(nc);
        for (std::size_t i = 0; i < nc; ++i)
            chi[i] = omega[i] * double(deg) / double(G.classes[i].size());
        rows.emplace_back(deg, std::move(chi));
    }
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        for (std::size_t i = 0; i < a.second.size(); ++i) {
            double ra = a.second[i].real(), rb = b.second[i].real();
            if (std::abs(ra - rb) > 1e-9) return ra < rb;
        }
        return false;
    });

    int deg2_sum = 0;
    for (auto& [deg, chi] : rows) {
        deg2_sum += deg * deg;
        table.degrees.push_back(deg);
        table.chi.push_back(std::move(chi));
    }
    if (deg2_sum != int(order))
        throw std::runtime_error("character_table: degrees fail sum-of-squares");
    return table;
}

struct Witness {
    bool found = false;
    int x1 = 0, x2 = 0, x3 = 0, h = 0;
};

// Realize the Seifert presentation in the group: a central h and
// generators with x_i^{a_i} = h^{-b_i}, x1 x2 x3 = h^{-b0}, whose
// images generate the whole group.
inline Witness find_presentation_witness(const FiniteGroup& G, const casson::SeifertPresentation& p) {
    const int n = int(G.elements.size());
    for (int h = 0; h < n; ++h) {
        bool central = true;
        for (int g = 0; g < n && central; ++g)
            central = G.mult[h][g] == G.mult[g][h];
        if (!central) continue;
        int t1 = G.power(h, -p.b[0]);
        int t2 = G.power(h, -p.b[1]);
        int t3 = G.power(h, -p.b[2]);
        int t0 = G.power(h, -p.b0);
        for (int x1 = 0; x1 < n; ++x1) {
            if (G.power(x1, p.a[0]) != t1) continue;
            for (int x2 = 0; x2 < n; ++x2) {
                if (G.power(x2, p.a[1]) != t2) continue;
                int x3 = G.mult[G.inverse[std::size_t(G.mult[x1][x2])]][t0];
                if (G.power(x3, p.a[2]) != t3) continue;
                if (!G.generates({x1, x2, x3})) continue;
                return {true, x1, x2, x3, h};
            }
        }
    }
    return {};
}

} // namespace testsupport
