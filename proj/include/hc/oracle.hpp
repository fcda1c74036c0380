#ifndef HC_ORACLE_HPP
#define HC_ORACLE_HPP

#include "hc/numeric.hpp"

namespace hc {

/// Brute-force double Hurwitz numbers: count tuples (sigma0, tau_1..tau_r)
/// with sigma0 of cycle type the positive parts of x, tau_i transpositions,
/// and tau_r...tau_1 sigma0 of cycle type the negative parts. sigma0 is fixed
/// to one class representative and the count scaled by its class size.
/// Normalization: prod_k m_k(x_0)! * prod_k m_k(x_inf)! * count / d!
/// (marked-preimage convention). Guarded to d <= 6, r <= 6.
Rat oracle_connected(int r, const Profile& x);
Rat oracle_disconnected(int r, const Profile& x);

/// Raw tuple count with sigma0 ranging over the whole conjugacy class;
/// test hook for the fixed-representative optimization. Tight guard.
Int oracle_count_full_class(int r, const Profile& x, bool transitive_only);

} // namespace hc

#endif
