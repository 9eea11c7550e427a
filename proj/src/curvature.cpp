#include "fib/curvature.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace fib {

std::string Angle::str() const {
    if (coeff.is_zero()) return "0";
    return coeff.str() + " pi";
}

Angle curvature(const std::vector<int>& degrees, bool allow_raw) {
    if (degrees.empty()) throw std::invalid_argument("curvature of empty degree sequence");
    Rational sum(0);
    for (int d : degrees) {
        if (d < 1 || (!allow_raw && d < 3))
            throw std::invalid_argument("vertex degree " + std::to_string(d) + " out of range");
        sum += Rational(1, d);
    }
    int m = static_cast<int>(degrees.size());
    return Angle(Rational(2 - m) + Rational(2) * sum);
}

Angle curvature_closed_form(int k, int m2, int m3) {
    if (k < 0 || m2 < 0 || m3 < 0) throw std::invalid_argument("negative argument");
    if (m2 + m3 > 8 + k) throw std::invalid_argument("m2 + m3 exceeds 8 + k");
    return Angle(Rational(-(20 + 10 * (std::int64_t)k + 5 * m2 + 8 * m3), 30));
}

Angle surplus(Angle c) { return c - Angle(2, 15); }

Angle vertex_deficit(int d) {
    if (d < 3) throw std::invalid_argument("vertex degree below 3");
    return Angle(Rational(2) * (Rational(1, d) - Rational(1, 3)));
}

Angle dagger_bound(int n2) {
    if (n2 < 0) throw std::invalid_argument("negative n2");
    return Angle(Rational(2) - Rational(n2, 5));
}

Angle delta0_bound(std::int64_t k) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    return Angle(Rational(2 - k) + Rational(k) * Rational(2, 3) + Rational(k) * Rational(1, 3));
}

Angle type_a_bound(std::int64_t k) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    return Angle(Rational(2 - k) + Rational(k) * Rational(2, 3) + Rational(k) * Rational(2, 15));
}

int SphericalComplex::num_vertices() const {
    int mx = -1;
    for (const auto& f : faces)
        for (int v : f) {
            if (v < 0) throw std::invalid_argument("negative vertex index");
            mx = std::max(mx, v);
        }
    return mx + 1;
}

std::vector<int> SphericalComplex::vertex_degrees() const {
    std::vector<int> deg(num_vertices(), 0);
    for (const auto& f : faces)
        for (int v : f) deg[v]++;
    return deg;
}

int SphericalComplex::euler_characteristic() const {
    int corners = 0;
    for (const auto& f : faces) corners += static_cast<int>(f.size());
    if (corners % 2 != 0) throw std::invalid_argument("odd corner count; not a closed complex");
    int v = num_vertices();
    int e = corners / 2;
    int fc = static_cast<int>(faces.size());
    return v - e + fc;
}

void SphericalComplex::validate() const {
    for (const auto& f : faces)
        if (f.size() < 3) throw std::invalid_argument("face with fewer than 3 corners");
    for (int d : vertex_degrees())
        if (d < 3) throw std::invalid_argument("vertex of degree below 3");
    if (euler_characteristic() != 2) throw std::invalid_argument("Euler characteristic is not 2");
}

Angle total_curvature(const SphericalComplex& k) {
    k.validate();
    std::vector<int> deg = k.vertex_degrees();
    Angle total = Angle::zero();
    for (const auto& f : k.faces) {
        std::vector<int> corner_degrees;
        corner_degrees.reserve(f.size());
        for (int v : f) corner_degrees.push_back(deg[v]);
        total = total + curvature(corner_degrees);
    }
    return total;
}

SphericalComplex tetrahedron() {
    return {{{0, 1, 2}, {0, 3, 1}, {1, 3, 2}, {2, 3, 0}}};
}

SphericalComplex cube() {
    return {{{0, 1, 2, 3},
             {0, 4, 5, 1},
             {1, 5, 6, 2},
             {2, 6, 7, 3},
             {3, 7, 4, 0},
             {7, 6, 5, 4}}};
}

SphericalComplex octahedron() {
    return {{{0, 1, 2},
             {0, 2, 3},
             {0, 3, 4},
             {0, 4, 1},
             {5, 2, 1},
             {5, 3, 2},
             {5, 4, 3},
             {5, 1, 4}}};
}

SphericalComplex icosahedron() {
    return {{{0, 1, 2},  {0, 2, 3},  {0, 3, 4},  {0, 4, 5},  {0, 5, 1},
             {1, 6, 2},  {2, 6, 7},  {2, 7, 3},  {3, 7, 8},  {3, 8, 4},
             {4, 8, 9},  {4, 9, 5},  {5, 9, 10}, {5, 10, 1}, {1, 10, 6},
             {11, 7, 6}, {11, 8, 7}, {11, 9, 8}, {11, 10, 9}, {11, 6, 10}}};
}

SphericalComplex dodecahedron() {
    // dual of the icosahedron: one face per icosahedron vertex, walked in
    // rotational order
    SphericalComplex ico = icosahedron();
    int n = ico.num_vertices();
    // neighbour faces of each vertex, ordered by walking shared edges
    std::vector<std::vector<int>> out(n);
    int fcount = static_cast<int>(ico.faces.size());
    for (int v = 0; v < n; v++) {
        // map: for each incident face, the vertex following v in that face
        std::map<int, std::pair<int, int>> next_in_face;  // face -> (after v, before v)
        std::vector<int> incident;
        for (int fi = 0; fi < fcount; fi++) {
            const auto& f = ico.faces[fi];
            for (size_t i = 0; i < f.size(); i++) {
                if (f[i] == v) {
                    int after = f[(i + 1) % f.size()];
                    int before = f[(i + f.size() - 1) % f.size()];
                    next_in_face[fi] = {after, before};
                    incident.push_back(fi);
                }
            }
        }
        std::vector<int> ring;
        int cur = incident[0];
        for (size_t step = 0; step < incident.size(); step++) {
            ring.push_back(cur);
            int want = next_in_face[cur].first;  // neighbour face shares edge (v, want)
            for (int fj : incident)
                if (fj != cur && next_in_face[fj].second == want) {
                    cur = fj;
                    break;
                }
        }
        out[v] = ring;
    }
    return {out};
}

SphericalComplex randomized_complex(const SphericalComplex& base, int steps, std::uint64_t seed) {
    SphericalComplex k = base;
    std::mt19937_64 rng(seed);
    for (int s = 0; s < steps; s++) {
        size_t fi = rng() % k.faces.size();
        std::vector<int> f = k.faces[fi];
        int m = static_cast<int>(f.size());
        bool stellate = (m < 4) || (rng() % 2 == 0);
        if (stellate) {
            // new vertex joined to every corner: dV=1, dE=m, dF=m-1
            int w = k.num_vertices();
            k.faces.erase(k.faces.begin() + fi);
            for (int i = 0; i < m; i++) k.faces.push_back({f[i], f[(i + 1) % m], w});
        } else {
            // chord across the face: dV=0, dE=1, dF=1
            int i = static_cast<int>(rng() % m);
            int j = (i + 2 + static_cast<int>(rng() % (m - 3))) % m;
            if (i > j) std::swap(i, j);
            std::vector<int> f1(f.begin() + i, f.begin() + j + 1);
            std::vector<int> f2(f.begin() + j, f.end());
            f2.insert(f2.end(), f.begin(), f.begin() + i + 1);
            k.faces.erase(k.faces.begin() + fi);
            k.faces.push_back(f1);
            k.faces.push_back(f2);
        }
    }
    return k;
}

}  // namespace fib
