#pragma once

// The auxiliary partner language of a paddable base language L:
//   aux(L) = { xx : x in L }  union  { z : weight(z) odd }
// together with the functions that make it many-one equivalent to L and
// paddable: self-concatenation, the base representative, and the derived
// padding pair. These are the raw material for the isomorphism engine.

#include "roughp/language.hpp"
#include "roughp/strings.hpp"

namespace roughp {

// Holds only the decide-free operations of the base language.
struct AuxContext {
    PaddingOps base;

    explicit AuxContext(PaddingOps ops) : base(std::move(ops)) {}
    explicit AuxContext(const PaddableLanguage& lang) : base(PaddingOps::from(lang)) {}

    unsigned k() const noexcept { return base.k; }
};

// x -> xx; reduces L to aux(L).
SymString self_concat(const SymString& x);

// The base-language representative of z: the half of a symmetric z, w0 for
// an asymmetric even-weight z, w1 for odd weight. Membership-preserving in
// both directions, so it also reduces aux(L) to L.
SymString base_rep(const AuxContext& ctx, const SymString& z);

// Padding pair for aux(L): pad doubles base.pad(base_rep(z), y); dec
// decodes through the representative.
SymString pad_aux(const AuxContext& ctx, const SymString& z, const SymString& y);
SymString dec_aux(const AuxContext& ctx, const SymString& z);

// Direct membership in aux(L). Verification oracle only: it calls the base
// decider, which nothing on the isomorphism or heuristic path may do.
bool member_aux(const PaddableLanguage& base, const SymString& z);

}  // namespace roughp
