#pragma once

// Builds the polynomial-time isomorphism between a paddable base language L
// and its auxiliary partner aux(L), by the classic back-and-forth rule over
// two length-increasing invertible embeddings:
//
//   aux_embed(x)  = pad_aux(xx, x)          L-side  -> aux-side
//   base_embed(z) = base.pad(base_rep(z), z) aux-side -> L-side
//
// Both carry membership across, both are inverted exactly by decode-and-
// recheck. phi maps the L side onto the aux side; alpha is its inverse. The
// applicable map at a point is decided by tracing the point's ancestor
// chain backwards until an inversion fails; chains shrink strictly, so they
// end within |input| steps.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "roughp/aux_lang.hpp"
#include "roughp/language.hpp"
#include "roughp/strings.hpp"

namespace roughp {

inline constexpr uint64_t kDefaultMaxChain = uint64_t{1} << 20;

enum class ChainStep { BaseEmbedInv, AuxEmbedInv };
enum class TerminalRule { ApplyAuxEmbed, ApplyBaseEmbedInv, ApplyBaseEmbed, ApplyAuxEmbedInv };

const char* to_string(ChainStep step);
const char* to_string(TerminalRule rule);

struct ChainTrace {
    SymString start;
    std::vector<std::pair<ChainStep, SymString>> steps;  // strictly shortening
    TerminalRule rule = TerminalRule::ApplyAuxEmbed;
    SymString result;
};

class IsoEngine {
public:
    explicit IsoEngine(PaddingOps base, uint64_t max_chain = kDefaultMaxChain);
    explicit IsoEngine(const PaddableLanguage& lang, uint64_t max_chain = kDefaultMaxChain)
        : IsoEngine(PaddingOps::from(lang), max_chain) {}

    const AuxContext& ctx() const noexcept { return ctx_; }
    unsigned k() const noexcept { return ctx_.k(); }
    const std::string& language_name() const noexcept { return ctx_.base.name; }

    // The two embeddings and their exact partial inverses.
    SymString aux_embed(const SymString& x) const;
    std::optional<SymString> aux_embed_inv(const SymString& z) const;
    SymString base_embed(const SymString& z) const;
    std::optional<SymString> base_embed_inv(const SymString& x) const;

    // The isomorphism: x in L iff phi(x) in aux(L); alpha = phi^{-1}.
    SymString phi(const SymString& x) const;
    SymString alpha(const SymString& z) const;
    ChainTrace phi_trace(const SymString& x) const;
    ChainTrace alpha_trace(const SymString& z) const;

private:
    SymString run_chain(const SymString& start, bool from_base, ChainTrace* trace) const;

    AuxContext ctx_;
    uint64_t max_chain_;
};

}  // namespace roughp
