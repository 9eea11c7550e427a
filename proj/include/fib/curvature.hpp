#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fib/rational.hpp"

namespace fib {

// An exact angle q*pi. All curvature bookkeeping lives in this type; there is
// deliberately no conversion to floating point.
struct Angle {
    Rational coeff;  // angle = coeff * pi

    Angle() = default;
    explicit Angle(Rational q) : coeff(q) {}
    Angle(std::int64_t num, std::int64_t den) : coeff(num, den) {}

    static Angle zero() { return Angle(Rational(0)); }
    static Angle pi(std::int64_t num = 1, std::int64_t den = 1) { return Angle(Rational(num, den)); }
    // multiples of pi/30, the common currency of the case ledgers
    static Angle thirtieths(std::int64_t k) { return Angle(Rational(k, 30)); }

    friend Angle operator+(Angle a, Angle b) { return Angle(a.coeff + b.coeff); }
    friend Angle operator-(Angle a, Angle b) { return Angle(a.coeff - b.coeff); }
    Angle operator-() const { return Angle(-coeff); }
    friend Angle operator*(Rational k, Angle a) { return Angle(k * a.coeff); }

    friend bool operator==(Angle a, Angle b) { return a.coeff == b.coeff; }
    friend bool operator!=(Angle a, Angle b) { return !(a == b); }
    friend bool operator<(Angle a, Angle b) { return a.coeff < b.coeff; }
    friend bool operator<=(Angle a, Angle b) { return a.coeff <= b.coeff; }
    friend bool operator>(Angle a, Angle b) { return a.coeff > b.coeff; }
    friend bool operator>=(Angle a, Angle b) { return a.coeff >= b.coeff; }

    int sign() const { return coeff.sign(); }

    // "2/3 pi", "-1/21 pi", "0"
    std::string str() const;
};

// c(d_1,...,d_m) = (2-m)pi + 2pi * sum 1/d_i.  Degrees below 3 are rejected
// unless allow_raw is set (the degree-2 arithmetic of the Delta_0 bound needs
// them).
Angle curvature(const std::vector<int>& degrees, bool allow_raw = false);

// -(20 + 10k + 5*m2 + 8*m3)pi/30 for an (8+k)-gon with m2 vertices of degree
// 4, m3 of degree 5 and the rest of degree 3.
Angle curvature_closed_form(int k, int m2, int m3);

Angle surplus(Angle c);           // c - 2pi/15
Angle vertex_deficit(int d);      // 2pi(1/d - 1/3)
Angle dagger_bound(int n2);       // pi(2 - n2/5)
Angle delta0_bound(std::int64_t k);  // (2-k)pi + k*2pi/3 + k*pi/3, identically 2pi
Angle type_a_bound(std::int64_t k);  // (2-k)pi + k*2pi/3 + k*2pi/15; <= 0 iff k >= 10

// A closed surface complex given by its faces as cyclic vertex lists.
// Vertex degrees are derived (each face corner at v counts once).
struct SphericalComplex {
    std::vector<std::vector<int>> faces;

    int num_vertices() const;
    std::vector<int> vertex_degrees() const;
    // V - E + F with E = (total corners)/2; throws if corner total is odd.
    int euler_characteristic() const;
    void validate() const;  // degrees >= 3, chi == 2
};

// Sum of face curvatures; equals 4pi on every valid complex.
Angle total_curvature(const SphericalComplex& k);

SphericalComplex tetrahedron();
SphericalComplex cube();
SphericalComplex octahedron();
SphericalComplex dodecahedron();
SphericalComplex icosahedron();

// chi-preserving random refinements (face stellation, chord insertion),
// `steps` of them, seeded deterministically.
SphericalComplex randomized_complex(const SphericalComplex& base, int steps, std::uint64_t seed);

}  // namespace fib
