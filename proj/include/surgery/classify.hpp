#pragma once

#include "surgery/cyclic.hpp"
#include "surgery/rationals.hpp"

#include <array>

namespace surgery {

// bP_8 = Theta_7 = Z_28.
CyclicGroup bp8();

// The structure [Sigma # N_v, f_v] on S^3 x S^4, where N_v is the 3-sphere
// bundle over S^4 with trivial Euler class and p_1 = 48v.
struct S3S4Invariant {
    CyclicElement sigma;  // [Sigma] in bP_8
    BigInt v;

    S3S4Invariant(const BigInt& sigma_value, const BigInt& v_value);
};

// Equality in S^Diff(S^3 x S^4): v_0 = v_1 and [Sigma_0] - [Sigma_1] in 32 v_0 . bP_8.
bool s3s4_structure_equal(const S3S4Invariant& a, const S3S4Invariant& b);

// Diffeomorphism of the underlying manifolds: v_0 = +-v_1 and
// [Sigma_0] - [Sigma_1] in 2 v_0 . bP_8.
bool s3s4_diffeomorphic(const S3S4Invariant& a, const S3S4Invariant& b);

// Inertia group of N_v: the subgroup <2v> of bP_8, of order 14 / gcd(14, v).
CyclicSubgroup s3s4_inertia_group(const BigInt& v);

// Wall's invariants of a 3-connected 8-manifold with H_4 = Z^2(x, y):
// intersection form, stable tangential invariant and signature.
struct WallTriple {
    std::array<std::array<int, 2>, 2> intersection_form;
    BigInt s_alpha_x;
    BigInt s_alpha_y;
    int signature;

    // S alpha^2, evaluated with the inverse of the intersection form.
    BigInt s_alpha_squared() const;
};

// Plumbing of two D^4-bundles over S^4 with p_1 = 48u and 48v.
WallTriple wall_triple_of_plumbing(const BigInt& u, const BigInt& v);

// mu(W) = (sigma(W) - S alpha(W)^2) / (8 * 28) in Q/Z, reduced to [0, 1).
Rational plumbing_mu_invariant(const BigInt& u, const BigInt& v);

// Class of the homotopy sphere bounding W_{u,v} in bP_8 = Z_28, labelled by
// (sigma - S alpha^2)/8 mod 28 = -4uv mod 28.
CyclicElement plumbing_boundary_class(const BigInt& u, const BigInt& v);

bool s4s4_boundary_is_standard(const BigInt& u, const BigInt& v);

// N_{u,v,phi} = W_{u,v} glued to a disc along phi, phi in Theta_8 = Z_2.
// Requires 7 | uv, i.e. a standard boundary sphere.
struct S4S4Manifold {
    BigInt u;
    BigInt v;
    int phi;

    S4S4Manifold(const BigInt& u_value, const BigInt& v_value, int phi_value);
};

// Unordered pairs {u_0, v_0} and {e u_1, e v_1} agree for some sign e.
bool s4s4_almost_diffeomorphic(const S4S4Manifold& a, const S4S4Manifold& b);

// Inertia groups are trivial, so the twist phi is a diffeomorphism invariant.
bool s4s4_diffeomorphic(const S4S4Manifold& a, const S4S4Manifold& b);

}  // namespace surgery
