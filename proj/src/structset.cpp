#include "surgery/structset.hpp"

#include "surgery/bp.hpp"
#include "surgery/errors.hpp"

namespace surgery {

namespace {

bool is_stabilizer_shape(const NormalizedPair& n) {
    return n.p >= 3 && (n.p + 1) % 4 == 0 && n.q >= 4 && n.q % 4 == 0;
}

BigInt bp_4k_or_one(int m) { return (m % 4 == 0 && m >= 8) ? t(m) : BigInt(1); }

}  // namespace

NormalizedPair normalize_pair(int p, int q) {
    if (p < 2 || q < 2 || p + q < 5) {
        throw DomainError("need p, q >= 2 and p + q >= 5, got (" + std::to_string(p) + ", " +
                          std::to_string(q) + ")");
    }
    if ((p + q) % 2 == 1 && q % 2 == 1) return {q, p, true};
    return {p, q, false};
}

std::string to_string(ActionCase c) {
    switch (c) {
        case ActionCase::FreeEverywhere: return "free";
        case ActionCase::StabilizerCase4jMinus1_4k: return "stabilizers";
    }
    return "?";
}

CyclicSubgroup StabilizerRule::operator()(const BigInt& d) const {
    return subgroup_generated(ambient_order, multiplier * d);
}

StructureSetPresentation present(int p, int q, const GroupTable& table) {
    const NormalizedPair n = normalize_pair(p, q);
    const int dim = n.p + n.q;

    StructureSetPresentation out{
        .input_p = p,
        .input_q = q,
        .p = n.p,
        .q = n.q,
        .swapped = n.swapped,
        .theta_group = theta_order(dim, table),
        .bp_next = bp_order(dim + 1, table),
        .theta_over_bp = KnownGroup::unknown(),
        .pi_p = pi_go(n.p, table),
        .pi_q = pi_go(n.q, table),
        .del_multiplier = 8 * t(n.p) * t(n.q),
        .del_target_order = bp_4k_or_one(dim),
        .residual = residual_group(n.p, n.q),
        .action_case = ActionCase::FreeEverywhere,
        .stabilizer_rule = std::nullopt,
    };

    const auto th = out.theta_group.finite_order();
    const auto b = out.bp_next.finite_order();
    if (th && b && *th % *b == 0) {
        const BigInt quotient = *th / *b;
        out.theta_over_bp = quotient == 1 ? KnownGroup::trivial() : KnownGroup::finite(quotient);
    }
    if (is_stabilizer_shape(n)) {
        out.action_case = ActionCase::StabilizerCase4jMinus1_4k;
        out.stabilizer_rule = StabilizerRule{t(dim + 1), 8 * t(n.p + 1) * t(n.q)};
    }
    return out;
}

CyclicElement del_map(int p, int q, const BigInt& phi_u, const BigInt& phi_v) {
    const NormalizedPair n = normalize_pair(p, q);
    const CyclicGroup target(bp_4k_or_one(n.p + n.q));
    return CyclicElement(target, 8 * t(n.p) * t(n.q) * phi_u * phi_v);
}

CyclicSubgroup stabilizer(int p, int q, const BigInt& d) {
    const NormalizedPair n = normalize_pair(p, q);
    const int m = n.p + n.q + 1;
    if (!is_stabilizer_shape(n)) return subgroup_generated(bp_4k_or_one(m), 0);
    return StabilizerRule{t(m), 8 * t(n.p + 1) * t(n.q)}(d);
}

KnownGroup eta_fiber_size(int p, int q, const BigInt& d, const GroupTable& table) {
    const NormalizedPair n = normalize_pair(p, q);
    const auto th = theta_order(n.p + n.q, table).finite_order();
    if (!th) return KnownGroup::unknown();
    const BigInt stab = stabilizer(n.p, n.q, d).order();
    if (*th % stab != 0) return KnownGroup::unknown();
    return KnownGroup::finite(*th / stab);
}

TopStructureSet top_structure_set(int p, int q) {
    const NormalizedPair n = normalize_pair(p, q);
    const LGroupKind a = l_group(n.p);
    const LGroupKind b = l_group(n.q);
    return {a, b, true, a.kind == GroupKind::Zero && b.kind == GroupKind::Zero};
}

GroupStructureVerdict group_structure_possible(int p, int q) {
    const NormalizedPair n = normalize_pair(p, q);
    if (is_stabilizer_shape(n)) {
        // The base point (d = 0) has trivial stabilizer; d = 1 has the largest one.
        if (!stabilizer(n.p, n.q, 1).is_trivial()) {
            return {false, "non-constant stabilizers"};
        }
        return {true, "stabilizers are all trivial"};
    }
    if (!residual_group(n.p, n.q).is_trivial()) {
        return {false, "image not a subgroup"};
    }
    return {true, "free action and image of eta is a subgroup"};
}

KnownGroup forgetful_fiber(int p, int q, const BigInt& top_invariant, const GroupTable& table) {
    const NormalizedPair n = normalize_pair(p, q);
    if (n.p != 3 || n.q != 4) {
        throw DomainError("forgetful_fiber: only S^3 x S^4 is supported, got (" + std::to_string(p) + ", " +
                          std::to_string(q) + ")");
    }
    if (mod_floor(top_invariant, 2) != 0) {
        throw DomainError("forgetful_fiber: topological normal invariant " + to_string(top_invariant) +
                          " is odd; the image of pi_4(G/O) -> pi_4(G/Top) is 2Z (Rochlin)");
    }
    return eta_fiber_size(n.p, n.q, top_invariant / 2, table);
}

}  // namespace surgery
