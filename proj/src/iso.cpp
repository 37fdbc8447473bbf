#include "roughp/iso.hpp"

namespace roughp {

const char* to_string(ChainStep step) {
    switch (step) {
        case ChainStep::BaseEmbedInv: return "base_embed_inv";
        case ChainStep::AuxEmbedInv: return "aux_embed_inv";
    }
    return "?";
}

const char* to_string(TerminalRule rule) {
    switch (rule) {
        case TerminalRule::ApplyAuxEmbed: return "apply aux_embed";
        case TerminalRule::ApplyBaseEmbedInv: return "apply base_embed_inv";
        case TerminalRule::ApplyBaseEmbed: return "apply base_embed";
        case TerminalRule::ApplyAuxEmbedInv: return "apply aux_embed_inv";
    }
    return "?";
}

IsoEngine::IsoEngine(PaddingOps base, uint64_t max_chain)
    : ctx_(std::move(base)), max_chain_(max_chain) {}

SymString IsoEngine::aux_embed(const SymString& x) const {
    // pad_aux(xx, x) = q q with q = base.pad(x, x), since base_rep(xx) = x.
    return pad_aux(ctx_, self_concat(x), x);
}

std::optional<SymString> IsoEngine::aux_embed_inv(const SymString& z) const {
    const SymString candidate = dec_aux(ctx_, z);
    if (aux_embed(candidate) == z) return candidate;
    return std::nullopt;
}

SymString IsoEngine::base_embed(const SymString& z) const {
    return ctx_.base.pad(base_rep(ctx_, z), z);
}

std::optional<SymString> IsoEngine::base_embed_inv(const SymString& x) const {
    const SymString candidate = ctx_.base.dec(x);
    if (base_embed(candidate) == x) return candidate;
    return std::nullopt;
}

// Ancestor chain from `start`. Walking the L side (from_base), the attempts
// alternate base_embed_inv, aux_embed_inv, ...; a failure on a
// base_embed_inv attempt means phi(start) = aux_embed(start), a failure on
// an aux_embed_inv attempt means phi(start) = base_embed_inv(start), which
// exists because the first attempt succeeded. Walking the aux side is the
// mirror image.
SymString IsoEngine::run_chain(const SymString& start, bool from_base, ChainTrace* trace) const {
    if (trace) {
        trace->start = start;
        trace->steps.clear();
    }
    const uint64_t limit = std::min<uint64_t>(max_chain_, start.size() + 1);

    SymString current = start;
    std::optional<SymString> first_ancestor;
    bool first_kind = true;  // next attempt uses the side we started from
    uint64_t steps = 0;
    while (true) {
        const bool use_base_inv = from_base ? first_kind : !first_kind;
        std::optional<SymString> next =
            use_base_inv ? base_embed_inv(current) : aux_embed_inv(current);
        if (!next) {
            if (first_kind) {
                const SymString result = from_base ? aux_embed(start) : base_embed(start);
                if (trace) {
                    trace->rule = from_base ? TerminalRule::ApplyAuxEmbed
                                            : TerminalRule::ApplyBaseEmbed;
                    trace->result = result;
                }
                return result;
            }
            const SymString result = *first_ancestor;
            if (trace) {
                trace->rule = from_base ? TerminalRule::ApplyBaseEmbedInv
                                        : TerminalRule::ApplyAuxEmbedInv;
                trace->result = result;
            }
            return result;
        }
        if (next->size() >= current.size() || ++steps > limit) {
            throw ChainGuardError("ancestor chain for \"" + start.text() + "\" over " +
                                  ctx_.base.name +
                                  " failed to shrink; the plugin violates the pad length "
                                  "contract");
        }
        if (steps == 1) first_ancestor = next;
        if (trace) {
            trace->steps.emplace_back(
                use_base_inv ? ChainStep::BaseEmbedInv : ChainStep::AuxEmbedInv, *next);
        }
        current = std::move(*next);
        first_kind = !first_kind;
    }
}

SymString IsoEngine::phi(const SymString& x) const { return run_chain(x, true, nullptr); }

SymString IsoEngine::alpha(const SymString& z) const { return run_chain(z, false, nullptr); }

ChainTrace IsoEngine::phi_trace(const SymString& x) const {
    ChainTrace trace;
    run_chain(x, true, &trace);
    return trace;
}

ChainTrace IsoEngine::alpha_trace(const SymString& z) const {
    ChainTrace trace;
    run_chain(z, false, &trace);
    return trace;
}

}  // namespace roughp
