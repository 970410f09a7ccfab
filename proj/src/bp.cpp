#include "surgery/bp.hpp"

#include "surgery/errors.hpp"

namespace surgery {

namespace {

void require_product_range(const char* where, int p, int q) {
    if (p < 2 || q < 2 || p + q < 5) {
        throw DomainError(std::string(where) + ": need p, q >= 2 and p + q >= 5, got (" +
                          std::to_string(p) + ", " + std::to_string(q) + ")");
    }
}

}  // namespace

BigInt levine_bp_order(int k) {
    if (k < 1) throw DomainError("levine_bp_order: k must be >= 1");
    const BigInt a_k = (k % 2 == 0) ? 1 : 2;
    const BigInt odd_part = pow2(static_cast<unsigned>(2 * k - 1)) - 1;
    return a_k * pow2(static_cast<unsigned>(2 * k - 2)) * odd_part * num_b_over_4k(k);
}

BigInt t(int i) {
    if (i < 1) throw DomainError("t: index must be >= 1, got " + std::to_string(i));
    if (i % 4 != 0) return 0;
    if (i == 4) return 2;
    return levine_bp_order(i / 4);
}

KnownGroup bp_order(int m, const GroupTable& table) {
    if (m < 5) throw DomainError("bp_order: dimension must be >= 5, got " + std::to_string(m));
    if (m % 2 == 1) return KnownGroup::trivial();
    if (m % 4 == 0) return KnownGroup::finite(t(m));
    const auto it = table.bp().find(m);
    return it == table.bp().end() ? KnownGroup::unknown() : it->second;
}

CyclicGroup bp_group_4k(int m) {
    if (m < 8 || m % 4 != 0) throw DomainError("bp_group_4k: need m = 4k >= 8, got " + std::to_string(m));
    return CyclicGroup(t(m));
}

CyclicGroup residual_group(int p, int q) {
    require_product_range("residual_group", p, q);
    const BigInt g = 8 * t(p) * t(q);
    if (g == 0) return CyclicGroup(1);
    return subgroup_generated(t(p + q), g).as_group();
}

bool image_F_is_subgroup(int p, int q) {
    if (p < 4 || q < 4 || p % 4 != 0 || q % 4 != 0) {
        throw DomainError("image_F_is_subgroup: need p = 4j, q = 4k with j, k >= 1, got (" +
                          std::to_string(p) + ", " + std::to_string(q) + ")");
    }
    return residual_group(p, q).is_trivial();
}

}  // namespace surgery
