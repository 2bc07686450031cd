// Total girth classification of Gamma_R(X^s Y^t, X^u Y^v): every exponent
// tuple gets exactly one case label, a girth in {4,6,8}, and (where parity is
// mixed) a normalized form with an explicit transform chain.
#pragma once

#include <vector>

#include "adg/core.hpp"

namespace adg {

/// Decide the girth class of the pair. Case labels:
///   P1        girth 4: each monomial has an even exponent
///   P2a..P2c  girth 6: both monomials of uniform parity, not all even
///   P2d..P2g  girth 6: exactly one even exponent, inequality side
///   P3a..P3d  girth 8: exactly one even exponent, equality side
GirthResult classify(const MonomialPair& p, int max_exp = kMaxExponentDefault);

/// For a tuple with exactly one even exponent, move that exponent into the
/// last slot using I4 (swap the monomials) then I1 (swap X and Y), recording
/// the chain. Result exponents are (2j+1, 2k+1, 2m+1, 2n).
NormalizedForm normalize_mixed(const MonomialPair& p);

/// Parameters (k,n), n > k, of the canonical girth-eight form
/// (X Y^{2k+1}, X Y^{2n}) the pair is isomorphic to.
CanonicalGirth8 canonical_girth8(const MonomialPair& p);

/// Full step chain from the original pair to the canonical girth-eight form:
/// the normalization chain followed by the odd-root step when m > 0.
std::vector<IsoStep> canonical_chain_girth8(const MonomialPair& p);

}  // namespace adg
