#pragma once

#include "surgery/cyclic.hpp"
#include "surgery/ltheory.hpp"
#include "surgery/tables.hpp"

#include <optional>
#include <string>

namespace surgery {

// (p, q) after the symmetry convention: when p + q is odd, q is the even factor.
struct NormalizedPair {
    int p;
    int q;
    bool swapped;
};

// Throws DomainError unless p, q >= 2 and p + q >= 5.
NormalizedPair normalize_pair(int p, int q);

enum class ActionCase { FreeEverywhere, StabilizerCase4jMinus1_4k };

std::string to_string(ActionCase c);

// d |-> 8 d t_4j t_4k . bP_4(j+k), the stabilizer of a structure with d-invariant d.
struct StabilizerRule {
    BigInt ambient_order;  // |bP_4(j+k)|
    BigInt multiplier;     // 8 t_4j t_4k

    CyclicSubgroup operator()(const BigInt& d) const;
};

// Everything the exact sequences say about S^Diff(S^p x S^q):
//
//   0 -> bP_{p+q+1} -> S^Diff -> Theta_{p+q}/bP_{p+q+1} x pi_p(G/O) x pi_q(G/O)
//     -> 8 t_p t_q . bP_{p+q} -> 0
//
// Group data that the table does not know stays Unknown.
struct StructureSetPresentation {
    int input_p;
    int input_q;
    int p;
    int q;
    bool swapped;

    KnownGroup theta_group;    // Theta_{p+q}
    KnownGroup bp_next;        // bP_{p+q+1}
    KnownGroup theta_over_bp;  // Theta_{p+q} / bP_{p+q+1}
    KnownGroup pi_p;           // pi_p(G/O)
    KnownGroup pi_q;           // pi_q(G/O)

    BigInt del_multiplier;    // 8 t_p t_q
    BigInt del_target_order;  // |bP_{p+q}| when p + q = 0 mod 4, else 1
    CyclicGroup residual;     // 8 t_p t_q . bP_{p+q}

    ActionCase action_case;
    std::optional<StabilizerRule> stabilizer_rule;
};

StructureSetPresentation present(int p, int q, const GroupTable& table);

// The boundary map pi_p(G/O) x pi_q(G/O) -> bP_{p+q} on free coordinates:
// (phi_u, phi_v) |-> 8 t_p t_q phi_u phi_v. A pair lifts to a smooth
// structure iff the result is zero. Lands in the trivial group unless
// p + q = 0 mod 4.
CyclicElement del_map(int p, int q, const BigInt& phi_u, const BigInt& phi_v);

// Stabilizer in bP_{p+q+1} of a structure with d-invariant d. Trivial unless
// (p, q) = (4j-1, 4k). For other shapes the ambient is bP_{p+q+1} when that is
// some bP_4m, and the trivial group otherwise.
CyclicSubgroup stabilizer(int p, int q, const BigInt& d);

// Size of a fibre of i^* o eta^Diff, on which Theta_{p+q} acts transitively:
// |Theta_{p+q}| / |stabilizer|. Unknown when Theta_{p+q} is.
KnownGroup eta_fiber_size(int p, int q, const BigInt& d, const GroupTable& table);

struct TopStructureSet {
    LGroupKind first;   // L_p(e)
    LGroupKind second;  // L_q(e)
    bool is_group;      // Siebenmann group structure; i^* o eta^Top is an isomorphism
    bool is_singleton;
};

TopStructureSet top_structure_set(int p, int q);

struct GroupStructureVerdict {
    bool possible;
    std::string reason;
};

// Whether L_{p+q+1}(e) -> S^Diff(S^p x S^q) -> N^Diff(S^p x S^q) can be made an
// exact sequence of groups.
GroupStructureVerdict group_structure_possible(int p, int q);

// Size of the fibre of S^Diff(S^3 x S^4) -> S^Top(S^3 x S^4) = Z over the
// topological normal invariant x. x must be even (Rochlin); only (3, 4) is
// supported.
KnownGroup forgetful_fiber(int p, int q, const BigInt& top_invariant, const GroupTable& table);

}  // namespace surgery
