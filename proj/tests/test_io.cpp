#include "cutfacet/error.hpp"
#include "cutfacet/families.hpp"
#include "cutfacet/io.hpp"

#include <gtest/gtest.h>

using namespace cutfacet;

namespace {

ErrorCode parse_code(std::string_view text)
{
    try {
        parse_inequality(text);
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode{};
}

} // namespace

TEST(Io, ParseCutForm)
{
    const auto ineq = parse_inequality("# triangle\ncutform 3\nrhs 0\nterm 1 2 1\nterm 3 1 -1   # reversed\nterm 2 3 -1\n");
    EXPECT_EQ(ineq, triangle(3, 1, 2, 3));
}

TEST(Io, RoundTripFamilies)
{
    for (const auto& ineq : {gr7(), gr8(), build_imm22(3), imm22_cut_form(4), build_I(g6_pair())}) {
        const auto text = serialize_inequality(ineq);
        const auto back = parse_inequality(text);
        EXPECT_EQ(back, ineq);
        EXPECT_EQ(serialize_inequality(back), text);
    }
}

TEST(Io, CorformHeader)
{
    const auto text = serialize_inequality(build_imm22(2));
    EXPECT_EQ(text.substr(0, 12), "corform 2 2\n");
}

TEST(Io, SparseCutFormListsEdges)
{
    const auto text = serialize_inequality(imm22_cut_form(2));
    EXPECT_NE(text.find("\nedge "), std::string::npos);
}

TEST(Io, CorgraphGeneral)
{
    const auto ineq = parse_inequality("corgraph 3\nedge 1 2\nedge 2 3\nrhs 1\nnterm 2 1\nterm 1 2 -1\n");
    EXPECT_EQ(ineq.form(), Form::Correlation);
    EXPECT_EQ(ineq.ambient_dim(), 5U);
    EXPECT_EQ(parse_inequality(serialize_inequality(ineq)), ineq);
}

TEST(Io, Errors)
{
    EXPECT_EQ(parse_code(""), ErrorCode::ParseError);
    EXPECT_EQ(parse_code("cutform\n"), ErrorCode::ParseError);
    EXPECT_EQ(parse_code("cutform 3\nterm 1 2 x\n"), ErrorCode::ParseError);
    EXPECT_EQ(parse_code("cutform 3\nterm 1 4 1\n"), ErrorCode::ParseError);
    EXPECT_EQ(parse_code("cutform 3\nterm 1 2 1\nterm 2 1 1\n"), ErrorCode::ParseError);
    EXPECT_EQ(parse_code("cutform 3\nnterm 1 1\n"), ErrorCode::ParseError);
    EXPECT_EQ(parse_code("cutform 3\nrhs 1\nrhs 2\n"), ErrorCode::ParseError);
    EXPECT_EQ(parse_code("cutform 3\nedge 1 2\nterm 1 3 1\n"), ErrorCode::ParseError);
    EXPECT_EQ(parse_code("polytope 3\n"), ErrorCode::ParseError);
    EXPECT_EQ(parse_code("corform 2 2\nedge 1 3\n"), ErrorCode::ParseError);
    EXPECT_EQ(parse_code("cutform 3\nbogus 1\n"), ErrorCode::ParseError);
}

TEST(Io, ErrorMentionsLine)
{
    try {
        parse_inequality("cutform 3\n\n# x\nterm 1 5 2\n");
        FAIL();
    } catch (const Error& e) {
        EXPECT_NE(std::string(e.what()).find("line 4"), std::string::npos);
    }
}

TEST(Io, InstanceRoundTrip)
{
    const auto p = g6_pair();
    Instance inst{p, Cycle4(p, {2, 3, 4, 5})};
    const auto text = serialize_instance(inst);
    const auto back = parse_instance(text);
    EXPECT_EQ(back.pair, p);
    ASSERT_TRUE(back.cycle);
    EXPECT_EQ(*back.cycle, *inst.cycle);
    EXPECT_EQ(serialize_instance(back), text);
}

TEST(Io, InstanceErrors)
{
    EXPECT_THROW(parse_instance("gedge 1 2\n"), Error);
    EXPECT_THROW(parse_instance("nodes 3\ngedge 1 2\n"), Error);  // missing cross edges
    EXPECT_THROW(parse_instance("nodes 2\ngedge 1 2\ncycle 1 2 1 2\n"), Error);
    try {
        parse_instance("nodes 3\ngedge 1 2\ngedge 1 3\ngedge 2 3\nhedge 1 2\n");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::EdgeCountMismatch);
    }
}
