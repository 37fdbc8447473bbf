#include <doctest.h>

#include "roughp/aux_lang.hpp"
#include "roughp/predicates.hpp"

using namespace roughp;

namespace {

SymString s2(const char* text) { return SymString::parse(2, text); }

struct Fixture {
    PaddableLanguage lang = wrap_core(parity_odd_predicate());
    AuxContext ctx{lang};
};

// Direct transcription of the auxiliary language's definition, evaluated
// without going through base_rep.
bool aux_member_direct(const PaddableLanguage& base, const SymString& z) {
    if (weight(z) % 2 == 1) return true;
    return is_symmetric(z) && base.decide(first_half(z));
}

}  // namespace

TEST_CASE("self_concat doubles the string") {
    CHECK(self_concat(s2("01")) == s2("0101"));
    CHECK(self_concat(SymString::lambda(2)).empty());
    CHECK(self_concat(SymString::parse(3, "2")) == SymString::parse(3, "22"));
}

TEST_CASE("base_rep picks the half, w0 or w1") {
    Fixture f;
    CHECK(base_rep(f.ctx, s2("0101")) == s2("01"));
    CHECK(base_rep(f.ctx, s2("011")) == f.lang.w0);  // weight 2, asymmetric
    CHECK(base_rep(f.ctx, s2("1")) == f.lang.w1);    // odd weight
    CHECK(base_rep(f.ctx, SymString::lambda(2)).empty());  // lambda = lambda lambda
}

TEST_CASE("base_rep preserves membership in both directions") {
    Fixture f;
    for_each_in_ball(2, 8, kDefaultEnumBudget, [&](const SymString& z) {
        CHECK(member_aux(f.lang, z) == f.lang.decide(base_rep(f.ctx, z)));
    });
}

TEST_CASE("self_concat reduces the base language to the auxiliary one") {
    Fixture f;
    for_each_in_ball(2, 8, kDefaultEnumBudget, [&](const SymString& x) {
        CHECK(f.lang.decide(x) == member_aux(f.lang, self_concat(x)));
    });
}

TEST_CASE("pad_aux hand traces") {
    Fixture f;
    CHECK(pad_aux(f.ctx, s2("1"), s2("0")) == s2("0001100011"));
    CHECK(pad_aux(f.ctx, SymString::lambda(2), SymString::lambda(2)) == s2("0101"));
    // Output is always a doubled pad image: symmetric with even weight.
    for_each_in_ball(2, 3, kDefaultEnumBudget, [&](const SymString& z) {
        for_each_in_ball(2, 3, kDefaultEnumBudget, [&](const SymString& y) {
            const SymString padded = pad_aux(f.ctx, z, y);
            CHECK(is_symmetric(padded));
            CHECK(weight(padded) % 2 == 0);
        });
    });
}

TEST_CASE("dec_aux inverts pad_aux on its image") {
    Fixture f;
    CHECK(dec_aux(f.ctx, s2("0001100011")) == s2("0"));
    CHECK(dec_aux(f.ctx, s2("1")).empty());  // rep w1="1" carries no block
    for_each_in_ball(2, 4, kDefaultEnumBudget, [&](const SymString& z) {
        for_each_in_ball(2, 4, kDefaultEnumBudget, [&](const SymString& y) {
            CHECK(dec_aux(f.ctx, pad_aux(f.ctx, z, y)) == y);
        });
    });
}

TEST_CASE("pad_aux length relations at small sizes") {
    Fixture f;
    for_each_in_ball(2, 4, kDefaultEnumBudget, [&](const SymString& z) {
        for_each_in_ball(2, 4, kDefaultEnumBudget, [&](const SymString& y) {
            const SymString padded = pad_aux(f.ctx, z, y);
            const SymString rep = base_rep(f.ctx, z);
            CHECK(padded.size() > 2 * (rep.size() + y.size()));
            CHECK(padded.size() >= 2 * y.size() + 2);
            // In this regime the output also dominates the input.
            CHECK(padded.size() > z.size());
        });
    });
}

TEST_CASE("pad_aux preserves auxiliary membership") {
    Fixture f;
    for_each_in_ball(2, 4, kDefaultEnumBudget, [&](const SymString& z) {
        for_each_in_ball(2, 3, kDefaultEnumBudget, [&](const SymString& y) {
            CHECK(member_aux(f.lang, pad_aux(f.ctx, z, y)) == member_aux(f.lang, z));
        });
    });
}

TEST_CASE("member_aux matches the direct definition") {
    Fixture f;
    CHECK(member_aux(f.lang, s2("1")));
    CHECK_FALSE(member_aux(f.lang, s2("0101")));  // half "01" strips to lambda
    CHECK(member_aux(f.lang, self_concat(f.lang.w1)));
    for_each_in_ball(2, 9, kDefaultEnumBudget, [&](const SymString& z) {
        CHECK(member_aux(f.lang, z) == aux_member_direct(f.lang, z));
    });
}

TEST_CASE("aux machinery works over a ternary base") {
    const PaddableLanguage lang3 = wrap_core(parity_odd_predicate(3));
    const AuxContext ctx3(lang3);
    for_each_in_ball(3, 5, kDefaultEnumBudget, [&](const SymString& z) {
        CHECK(member_aux(lang3, z) == lang3.decide(base_rep(ctx3, z)));
    });
    for_each_in_ball(3, 3, kDefaultEnumBudget, [&](const SymString& z) {
        for_each_in_ball(3, 2, kDefaultEnumBudget, [&](const SymString& y) {
            CHECK(dec_aux(ctx3, pad_aux(ctx3, z, y)) == y);
            CHECK(member_aux(lang3, pad_aux(ctx3, z, y)) == member_aux(lang3, z));
        });
    });
}
