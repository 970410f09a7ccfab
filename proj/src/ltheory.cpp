#include "surgery/ltheory.hpp"

#include "surgery/bp.hpp"
#include "surgery/errors.hpp"

#include <utility>

namespace surgery {

namespace {

int residue4(int i) { return ((i % 4) + 4) % 4; }

void require_dim(const char* where, const char* name, int got, int expected) {
    if (got != expected) {
        throw DomainError(std::string(where) + ": " + name + " has dimension " + std::to_string(got) +
                          ", expected " + std::to_string(expected));
    }
}

void require_product_range(const char* where, int p, int q) {
    if (p < 2 || q < 2 || p + q < 5) {
        throw DomainError(std::string(where) + ": need p, q >= 2 and p + q >= 5, got (" +
                          std::to_string(p) + ", " + std::to_string(q) + ")");
    }
}

}  // namespace

std::string to_string(GroupKind kind) {
    switch (kind) {
        case GroupKind::Z: return "Z";
        case GroupKind::Z2: return "Z2";
        case GroupKind::Zero: return "0";
    }
    return "?";
}

LGroupKind l_group(int i) {
    if (i < 0) throw DomainError("l_group: dimension must be >= 0, got " + std::to_string(i));
    static constexpr GroupKind kinds[4] = {GroupKind::Z, GroupKind::Zero, GroupKind::Z2, GroupKind::Zero};
    return {i, kinds[residue4(i)]};
}

SymmetricLGroupKind symmetric_l_group(int i) {
    if (i < 0) throw DomainError("symmetric_l_group: dimension must be >= 0, got " + std::to_string(i));
    static constexpr GroupKind kinds[4] = {GroupKind::Z, GroupKind::Z2, GroupKind::Zero, GroupKind::Zero};
    return {i, kinds[residue4(i)]};
}

LClass::LClass(int dim, const BigInt& value) : dim_(dim) {
    switch (l_group(dim).kind) {
        case GroupKind::Z: value_ = value; break;
        case GroupKind::Z2: value_ = mod_floor(value, 2); break;
        case GroupKind::Zero: value_ = 0; break;
    }
}

LClass LClass::operator+(const LClass& other) const {
    require_dim("LClass::operator+", "rhs", other.dim_, dim_);
    return LClass(dim_, value_ + other.value_);
}

NormalClassDiff::NormalClassDiff(int dim, const BigInt& phi, std::optional<std::string> torsion_label)
    : dim_(dim), phi_(phi), torsion_label_(std::move(torsion_label)) {
    if (dim < 1) throw DomainError("NormalClassDiff: dimension must be >= 1");
    if (residue4(dim) != 0 && phi != 0) {
        throw DomainError("NormalClassDiff: phi must be 0 in dimension " + std::to_string(dim) +
                          " (no free part unless dim = 0 mod 4)");
    }
}

LClass pairing(int p, int q, const LClass& x, const LClass& y) {
    require_dim("pairing", "x", x.dim(), p);
    require_dim("pairing", "y", y.dim(), q);
    if (residue4(p) == 0 && residue4(q) == 0) {
        return LClass(p + q, 8 * x.value() * y.value());
    }
    return LClass::zero(p + q);
}

LClass theta_top(int p, int q, const LClass& x, const LClass& y, const LClass& z) {
    require_product_range("theta_top", p, q);
    require_dim("theta_top", "z", z.dim(), p + q);
    return pairing(p, q, x, y) + z;
}

LClass forgetful_F(const NormalClassDiff& u) {
    if (residue4(u.dim()) == 0) {
        return LClass(u.dim(), t(u.dim()) * u.phi());
    }
    return LClass::zero(u.dim());
}

LClass theta_diff(int p, int q, const NormalClassDiff& u, const NormalClassDiff& v,
                  const NormalClassDiff& w) {
    require_dim("theta_diff", "u", u.dim(), p);
    require_dim("theta_diff", "v", v.dim(), q);
    require_dim("theta_diff", "w", w.dim(), p + q);
    return theta_top(p, q, forgetful_F(u), forgetful_F(v), forgetful_F(w));
}

}  // namespace surgery
