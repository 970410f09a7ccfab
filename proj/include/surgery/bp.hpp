#pragma once

#include "surgery/cyclic.hpp"
#include "surgery/rationals.hpp"
#include "surgery/tables.hpp"

namespace surgery {

/// The integer t_i: the order of the cokernel of pi_i(G/O) -> pi_i(G/Top).
///
/// t_i = 0 for i != 0 mod 4, t_4 = 2, and t_4k = |bP_4k| for k >= 2, given by
/// Levine's formula a_k 2^(2k-2) (2^(2k-1) - 1) Num(B_k / 4k) with
/// a_k = (3 - (-1)^k) / 2. (The formula at k = 1 also happens to give 2.)
/// First values: 2, 28, 992, 8128, 261632.
BigInt t(int i);

// Levine's closed formula for |bP_4k|, k >= 1, without the t_4 special case.
BigInt levine_bp_order(int k);

// |bP_m| for m >= 5: t(m) when m = 0 mod 4, trivial for odd m, and a table
// lookup for m = 2 mod 4.
KnownGroup bp_order(int m, const GroupTable& table);

// |bP_m| for m = 4k >= 8 as a cyclic group.
CyclicGroup bp_group_4k(int m);

// The subgroup 8 t_p t_q . bP_{p+q} as an abstract cyclic group. Trivial
// unless p = q = 0 mod 4.
CyclicGroup residual_group(int p, int q);

// Whether the image of the forgetful map on S^4j x S^4k is a subgroup,
// i.e. whether residual_group(4j, 4k) is trivial.
bool image_F_is_subgroup(int p, int q);

}  // namespace surgery
