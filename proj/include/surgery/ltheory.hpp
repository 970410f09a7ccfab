#pragma once

#include "surgery/rationals.hpp"

#include <optional>
#include <string>

namespace surgery {

enum class GroupKind { Z, Zero, Z2 };

std::string to_string(GroupKind kind);

// The Wall group L_i(e) of the trivial group: Z, 0, Z_2, 0 for i = 0, 1, 2, 3 mod 4.
struct LGroupKind {
    int dim;
    GroupKind kind;
    friend bool operator==(const LGroupKind&, const LGroupKind&) = default;
};

// The symmetric group L^i(e): Z, Z_2, 0, 0 for i = 0, 1, 2, 3 mod 4.
struct SymmetricLGroupKind {
    int dim;
    GroupKind kind;
    friend bool operator==(const SymmetricLGroupKind&, const SymmetricLGroupKind&) = default;
};

LGroupKind l_group(int i);
SymmetricLGroupKind symmetric_l_group(int i);

// An element of L_dim(e), written as a multiple of the fixed generator z_dim.
// The value is reduced to {0, 1} for Z_2 groups and forced to 0 for zero groups.
class LClass {
public:
    LClass(int dim, const BigInt& value);
    static LClass zero(int dim) { return LClass(dim, 0); }

    int dim() const { return dim_; }
    const BigInt& value() const { return value_; }
    GroupKind kind() const { return l_group(dim_).kind; }
    bool is_zero() const { return value_ == 0; }

    LClass operator+(const LClass& other) const;

    friend bool operator==(const LClass&, const LClass&) = default;

private:
    int dim_;
    BigInt value_;
};

// A class in pi_dim(G/O) seen through the splitting pi_4k(G/O) = Theta_4k x Z.
// phi is the Z-coordinate and must vanish unless dim = 0 mod 4. The torsion
// label is carried for display only and is never consumed by a formula.
class NormalClassDiff {
public:
    NormalClassDiff(int dim, const BigInt& phi, std::optional<std::string> torsion_label = {});

    int dim() const { return dim_; }
    const BigInt& phi() const { return phi_; }
    const std::optional<std::string>& torsion_label() const { return torsion_label_; }

private:
    int dim_;
    BigInt phi_;
    std::optional<std::string> torsion_label_;
};

// The product L_p(e) x L_q(e) -> L_{p+q}(e): multiplication by 8 when
// p = q = 0 mod 4, zero otherwise.
LClass pairing(int p, int q, const LClass& x, const LClass& y);

// Topological surgery obstruction on S^p x S^q: (x, y, z) -> xy + z.
LClass theta_top(int p, int q, const LClass& x, const LClass& y, const LClass& z);

// The forgetful map pi_i(G/O) -> pi_i(G/Top) = L_i(e). In dimension 4k the
// generator maps to t_4k z_4k. Dimensions 2 mod 4 (Kervaire invariant) are
// not modelled and map to zero, as do odd dimensions.
LClass forgetful_F(const NormalClassDiff& u);

// Smooth surgery obstruction on S^p x S^q: (u, v, w) -> F(u)F(v) + F(w).
LClass theta_diff(int p, int q, const NormalClassDiff& u, const NormalClassDiff& v,
                  const NormalClassDiff& w);

}  // namespace surgery
