#include "surgery/classify.hpp"

#include "surgery/bp.hpp"
#include "surgery/errors.hpp"

namespace surgery {

CyclicGroup bp8() {
    static const CyclicGroup group = bp_group_4k(8);
    return group;
}

S3S4Invariant::S3S4Invariant(const BigInt& sigma_value, const BigInt& v_value)
    : sigma(bp8(), sigma_value), v(v_value) {}

bool s3s4_structure_equal(const S3S4Invariant& a, const S3S4Invariant& b) {
    if (a.v != b.v) return false;
    return in_subgroup(a.sigma - b.sigma, CyclicSubgroup(bp8(), 32 * a.v));
}

bool s3s4_diffeomorphic(const S3S4Invariant& a, const S3S4Invariant& b) {
    if (a.v != b.v && a.v != -b.v) return false;
    return in_subgroup(a.sigma - b.sigma, s3s4_inertia_group(a.v));
}

CyclicSubgroup s3s4_inertia_group(const BigInt& v) { return CyclicSubgroup(bp8(), 2 * v); }

BigInt WallTriple::s_alpha_squared() const {
    // Dual basis via the adjugate of the 2x2 form; for the hyperbolic form
    // the inverse is the form itself.
    const auto& m = intersection_form;
    const int det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    if (det != 1 && det != -1) throw DomainError("WallTriple: intersection form is not unimodular");
    const BigInt& a = s_alpha_x;
    const BigInt& b = s_alpha_y;
    const BigInt adj = m[1][1] * a * a - (m[0][1] + m[1][0]) * a * b + m[0][0] * b * b;
    return adj * det;
}

WallTriple wall_triple_of_plumbing(const BigInt& u, const BigInt& v) {
    return WallTriple{{{{0, 1}, {1, 0}}}, 24 * u, 24 * v, 0};
}

Rational plumbing_mu_invariant(const BigInt& u, const BigInt& v) {
    const WallTriple w = wall_triple_of_plumbing(u, v);
    const Rational mu(BigInt(w.signature) - w.s_alpha_squared(), BigInt(8 * 28));
    const BigInt num = boost::multiprecision::numerator(mu);
    const BigInt den = boost::multiprecision::denominator(mu);
    return Rational(mod_floor(num, den), den);
}

CyclicElement plumbing_boundary_class(const BigInt& u, const BigInt& v) {
    const WallTriple w = wall_triple_of_plumbing(u, v);
    const BigInt numer = BigInt(w.signature) - w.s_alpha_squared();
    // S alpha takes values in 24Z, so the numerator is divisible by 8.
    return CyclicElement(bp8(), numer / 8);
}

bool s4s4_boundary_is_standard(const BigInt& u, const BigInt& v) {
    return plumbing_boundary_class(u, v).is_zero();
}

S4S4Manifold::S4S4Manifold(const BigInt& u_value, const BigInt& v_value, int phi_value)
    : u(u_value), v(v_value), phi(((phi_value % 2) + 2) % 2) {
    if (!s4s4_boundary_is_standard(u, v)) {
        throw DomainError("S4S4Manifold: 7 must divide uv (got u = " + to_string(u) + ", v = " + to_string(v) +
                          "); otherwise the boundary of W_{u,v} is an exotic sphere");
    }
}

bool s4s4_almost_diffeomorphic(const S4S4Manifold& a, const S4S4Manifold& b) {
    for (int e : {1, -1}) {
        const BigInt u1 = e * b.u;
        const BigInt v1 = e * b.v;
        if ((a.u == u1 && a.v == v1) || (a.u == v1 && a.v == u1)) return true;
    }
    return false;
}

bool s4s4_diffeomorphic(const S4S4Manifold& a, const S4S4Manifold& b) {
    return s4s4_almost_diffeomorphic(a, b) && a.phi == b.phi;
}

}  // namespace surgery
