#include "roughp/aux_lang.hpp"

namespace roughp {

SymString self_concat(const SymString& x) { return x + x; }

SymString base_rep(const AuxContext& ctx, const SymString& z) {
    // A symmetric string always has even weight, so the three cases are
    // exhaustive and consistent.
    if (is_symmetric(z)) return first_half(z);
    if (weight(z) % 2 == 0) return ctx.base.w0;
    return ctx.base.w1;
}

SymString pad_aux(const AuxContext& ctx, const SymString& z, const SymString& y) {
    const SymString q = ctx.base.pad(base_rep(ctx, z), y);
    return q + q;
}

SymString dec_aux(const AuxContext& ctx, const SymString& z) {
    return ctx.base.dec(base_rep(ctx, z));
}

bool member_aux(const PaddableLanguage& base, const SymString& z) {
    if (weight(z) % 2 == 1) return true;
    if (!is_symmetric(z)) return false;
    return base.decide(first_half(z));
}

}  // namespace roughp
