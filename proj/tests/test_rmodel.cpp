#include <gtest/gtest.h>

#include "hwzeta/rmodel/functors.hpp"
#include "hwzeta/rmodel/io.hpp"
#include "hwzeta/rmodel/validate.hpp"
#include "hwzeta/varieties/constructors.hpp"

using namespace hwzeta;

namespace {

Rational R(long n, long d = 1) { return Rational(Integer(n), Integer(d)); }

const BaseField F5(5, 1);

CrysComplex p1() { return projective_space(1, F5); }

CrysComplex crys(const std::string& text) { return std::get<CrysComplex>(parse_complex(text)); }

SlotComplex slots(const std::string& text) { return std::get<SlotComplex>(parse_complex(text)); }

bool has_message(const std::vector<Diagnostic>& ds, const std::string& rule, const std::string& msg) {
    for (const auto& d : ds)
        if (d.rule == rule && d.message == msg) return true;
    return false;
}

}  // namespace

TEST(Validate, NonRealizableSlope) {
    SlotComplex c{BaseField(5, 2), {TypeISlot{0, 0, Polynomial({1, -5})}}};
    auto ds = validate(c);
    ASSERT_EQ(ds.size(), 1u);
    EXPECT_EQ(ds[0].rule, "realizability");
    EXPECT_EQ(ds[0].message, "non-realizable slope 1/2 with multiplicity 1");
    EXPECT_EQ(ds[0].location, "slot 0 (I at 0,0)");
}

TEST(Validate, SlopeOneOutsideTypeIWindow) {
    SlotComplex c{F5, {TypeISlot{0, 0, Polynomial({1, -5})}}};
    EXPECT_TRUE(has_message(validate(c), "slope-range", "slope 1 outside [0,1)"));
}

TEST(Validate, ProjectiveLineIsClean) {
    EXPECT_TRUE(validate(p1()).empty());
    SlotComplex c{F5, {TypeISlot{0, 0, Polynomial({1, -1})}, TypeISlot{1, 1, Polynomial({1, -1})}}};
    EXPECT_TRUE(validate(c).empty());
}

TEST(Validate, OtherRules) {
    SlotComplex c{F5, {TypeISlot{0, 0, Polynomial({2, 1})}, TypeIISlot{0, 2, 0, 0}, TorsionSlot{1, 1, 0}}};
    auto ds = validate(c);
    ASSERT_EQ(ds.size(), 3u);
    EXPECT_EQ(ds[0].rule, "normalization");
    EXPECT_EQ(ds[1].rule, "domino-count");
    EXPECT_EQ(ds[2].rule, "torsion-length");

    CrysComplex bad(F5);
    bad.set_poly(1, Polynomial({1, 0, 0, 5}));  // slope 1/3, multiplicity 3: fine
    EXPECT_TRUE(validate(bad).empty());
    bad.set_poly(2, Polynomial({1, 0, 5}) * Polynomial({1, 0, 0, 5}));  // 1/2 x2, 1/3 x3: fine
    EXPECT_TRUE(validate(bad).empty());
    bad.set_poly(3, Polynomial({1, 0, 25}));  // slope 1 x2: fine, no window at sM level
    EXPECT_TRUE(validate(bad).empty());
    bad.set_poly(4, Polynomial({1, 5}));  // fine, slope 1
    bad.set_poly(5, Polynomial({1, 0, 0, 25}));  // slope 2/3 x3: fine
    EXPECT_TRUE(validate(bad).empty());
    bad.set_poly(6, Polynomial({1, 1, 5}));  // slopes 0, 1
    bad.add_domino(0, 0, -1);
    ds = validate(bad);
    ASSERT_EQ(ds.size(), 1u);
    EXPECT_EQ(ds[0].location, "domino 0,0");
    EXPECT_THROW(require_valid(bad), ValidationError);
}

TEST(ToCrys, ProjectiveLineFromSlots) {
    SlotComplex c{F5, {TypeISlot{0, 0, Polynomial({1, -1})}, TypeISlot{1, 1, Polynomial({1, -1})}}};
    EXPECT_EQ(to_crys(c), p1());
}

TEST(ToCrys, TorsionOnlyIsEmpty) {
    EXPECT_TRUE(to_crys(SlotComplex{F5, {TorsionSlot{2, 3, 4}}}).empty());
}

TEST(ToCrys, ColumnZeroUntwisted) {
    const CrysComplex c = to_crys(SlotComplex{F5, {TypeISlot{0, 1, Polynomial({1, 0, 5})}}});
    EXPECT_EQ(c.poly(1), Polynomial({1, 0, 5}));
    EXPECT_EQ(c.polys().size(), 1u);
}

TEST(ToCrys, DominoesAndMultiplication) {
    SlotComplex c{F5,
                  {TypeIISlot{0, 2, 7, 1}, TypeIISlot{0, 2, 0, 2}, TypeISlot{0, 1, Polynomial({1, -1})},
                   TypeISlot{1, 0, Polynomial({1, -2})}}};
    const CrysComplex x = to_crys(c);
    EXPECT_EQ(x.domino(0, 2), 3);
    EXPECT_EQ(x.poly(1), Polynomial({1, -1}) * Polynomial({1, -10}));
}

TEST(ToCrys, InvalidInputThrows) {
    EXPECT_THROW(to_crys(SlotComplex{F5, {TypeISlot{0, 0, Polynomial({1, -5})}}}), ValidationError);
}

TEST(Shift, SpecExamples) {
    EXPECT_EQ(shift(p1(), 0, 0), p1());
    const CrysComplex s = shift(p1(), 1, 0);
    EXPECT_EQ(s.poly(-1), Polynomial({1, R(-1, 5)}));
    EXPECT_EQ(s.poly(1), Polynomial({1, -1}));
    EXPECT_EQ(s.polys().size(), 2u);

    CrysComplex d(F5);
    d.add_domino(0, 2, 1);
    const CrysComplex sd = shift(d, 1, 0);
    EXPECT_EQ(sd.domino(-1, 2), 1);
    EXPECT_EQ(sd.dominoes().size(), 1u);
}

TEST(TateTwist, SpecExamples) {
    EXPECT_EQ(tate_twist(p1(), 0), p1());
    const CrysComplex t = tate_twist(p1(), 1);
    EXPECT_EQ(t.poly(0), Polynomial({1, R(-1, 5)}));
    EXPECT_EQ(t.poly(2), Polynomial({1, -1}));
    EXPECT_EQ(tate_twist(t, -1), p1());
}

TEST(TateTwist, Composition) {
    CrysComplex c = projective_space(2, BaseField(3, 2));
    c.add_domino(1, 3, 2);
    for (int r = -3; r <= 3; ++r)
        for (int s = -3; s <= 3; ++s) EXPECT_EQ(tate_twist(c, r + s), tate_twist(tate_twist(c, r), s));
    for (int m = -2; m <= 2; ++m)
        for (int n = -2; n <= 2; ++n) EXPECT_EQ(shift(shift(c, m, n), 2, -1), shift(c, m + 2, n - 1));
}

TEST(Parse, CanonicalProjectiveLine) {
    const char* text =
        "complex\n"
        "p 5\n"
        "a 1\n"
        "H 0 1 -1\n"
        "H 2 1 -5\n";
    EXPECT_EQ(crys(text), p1());
    EXPECT_EQ(serialize(p1()), text);
}

TEST(Parse, SpecFormatSample) {
    const CrysComplex c = crys(
        "complex\n"
        "p 5\n"
        "a 1\n"
        "H 0 1 -1          # P_0(t)\n"
        "H 1 1 3 5         # P_1(t) = 1 + 3t + 5t^2\n"
        "H 2 1 -5\n"
        "domino 0 2 1      # T^{0,2} = 1\n");
    EXPECT_EQ(c.poly(1), Polynomial({1, 3, 5}));
    EXPECT_EQ(c.domino(0, 2), 1);
}

TEST(Parse, NotPrime) {
    try {
        parse_complex("complex\np 4\n");
        FAIL();
    } catch (const SemanticError& e) {
        EXPECT_NE(std::string(e.what()).find("p not prime: 4"), std::string::npos);
        EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
    }
}

TEST(Parse, SyntaxErrorsCarryPosition) {
    try {
        parse_complex("complex\np 5\nH 1 1 x\n");
        FAIL();
    } catch (const SyntaxError& e) {
        EXPECT_EQ(e.line(), 3u);
        EXPECT_EQ(e.column(), 7u);
    }
    EXPECT_THROW(parse_complex(""), SyntaxError);
    EXPECT_THROW(parse_complex("# only a comment\n"), SyntaxError);
    EXPECT_THROW(parse_complex("cmplx\np 5\n"), SyntaxError);
    EXPECT_THROW(parse_complex("complex\np 5\nfrob 1\n"), SyntaxError);
    EXPECT_THROW(parse_complex("complex\np 5\ndomino 1 2\n"), SyntaxError);
    EXPECT_THROW(parse_complex("complex\np 5\nslot X 1 2\n"), SyntaxError);
    EXPECT_THROW(parse_complex("complex\np 5\nslot II 0 2 0\n"), SyntaxError);
    EXPECT_THROW(parse_complex("complex\np 5\nH 1\n"), SyntaxError);
    EXPECT_THROW(parse_complex("complex\np 5\nH 1 1 1/0\n"), SyntaxError);
}

TEST(Parse, SemanticErrors) {
    EXPECT_THROW(parse_complex("complex\n"), SemanticError);
    EXPECT_THROW(parse_complex("complex\np 5\np 5\n"), SemanticError);
    EXPECT_THROW(parse_complex("complex\np 5\na 0\n"), SemanticError);
    EXPECT_THROW(parse_complex("complex\np 5\nH 1 1 1\nH 1 1 2\n"), SemanticError);
    EXPECT_THROW(parse_complex("complex\np 5\nH 1 1 1\nslot T 0 0 1\n"), SemanticError);
}

TEST(Parse, DefaultsAndDuplicates) {
    const CrysComplex c = crys("complex\np 7\ndomino 0 2 1\ndomino 0 2 2\nH 3 1\n");
    EXPECT_EQ(c.base(), BaseField(7, 1));
    EXPECT_EQ(c.domino(0, 2), 3);
    EXPECT_TRUE(c.polys().empty());
}

TEST(Parse, SlotForm) {
    const SlotComplex s = slots(
        "complex\np 5\na 1\n"
        "slot T 1 1 3\n"
        "slot II 0 2 0 1\n"
        "slot I 1 1 1 -1\n"
        "slot I 0 0 1 -1\n");
    ASSERT_EQ(s.slots.size(), 4u);
    EXPECT_EQ(serialize(s),
              "complex\np 5\na 1\n"
              "slot I 0 0 1 -1\n"
              "slot II 0 2 0 1\n"
              "slot I 1 1 1 -1\n"
              "slot T 1 1 3\n");
}

TEST(Serialize, RoundTripIsCanonical) {
    const std::string messy =
        "  complex  \n\n"
        "a 1 # comment\n"
        "p 5\n"
        "domino 1 0 2\n"
        "H 2 2/2 -10/2 0\n"
        "H 0 1 -1\n"
        "domino 0 2 1\n";
    const std::string canon = serialize(parse_complex(messy));
    EXPECT_EQ(canon,
              "complex\np 5\na 1\n"
              "H 0 1 -1\n"
              "H 2 1 -5\n"
              "domino 0 2 1\n"
              "domino 1 0 2\n");
    EXPECT_EQ(serialize(parse_complex(canon)), canon);
}

TEST(Serialize, NotesBecomeComments) {
    CrysComplex c = p1();
    c.add_note("hello");
    const std::string s = serialize(c);
    EXPECT_NE(s.find("# hello\n"), std::string::npos);
    EXPECT_EQ(crys(s), p1());
}
