#include <lcmbinom/oeis.hpp>
#include <lcmbinom/render.hpp>

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>
#include <string>

using lcmbinom::errc;
using lcmbinom::Format;
using lcmbinom::Quantity;
using lcmbinom::RenderOptions;

namespace {

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string line_of(const std::string& text, std::size_t index)
{
    std::istringstream is(text);
    std::string line;
    for (std::size_t i = 0; i <= index; ++i) std::getline(is, line);
    return line;
}

const std::string golden_path = std::string(LCMBINOM_TEST_DATA_DIR) + "/triangle_rows0_12_highlight.txt";
const std::string snapshot_path = std::string(LCMBINOM_DATA_DIR) + "/b093430.txt";

} // namespace

TEST(RenderTriangle, GoldenRows0To12)
{
    RenderOptions opts;
    opts.rows = 13;
    opts.highlight = true;
    EXPECT_EQ(lcmbinom::render_triangle(opts), read_file(golden_path));
}

TEST(RenderTriangle, Examples)
{
    RenderOptions opts;
    opts.rows = 7;
    opts.highlight = true;
    EXPECT_EQ(line_of(lcmbinom::render_triangle(opts), 6), "1 6 15 *10* *5* *1* 1");
    opts.rows = 13;
    EXPECT_EQ(line_of(lcmbinom::render_triangle(opts), 12), "1 12 66 *110* *165* *66* *462* *66* *33* *11* *11* *1* 1");
    opts.rows = 1;
    EXPECT_EQ(lcmbinom::render_triangle(opts), "1\n");
}

TEST(RenderTriangle, OtherQuantities)
{
    RenderOptions opts;
    opts.rows = 7;
    opts.what = Quantity::binomial;
    EXPECT_EQ(line_of(lcmbinom::render_triangle(opts), 6), "1 6 15 20 15 6 1");
    opts.what = Quantity::ratio;
    EXPECT_EQ(line_of(lcmbinom::render_triangle(opts), 6), "1 1 1 2 3 6 1");
}

TEST(RenderTriangle, AnsiMarker)
{
    RenderOptions opts;
    opts.rows = 5;
    opts.highlight = true;
    opts.ansi = true;
    EXPECT_EQ(line_of(lcmbinom::render_triangle(opts), 4), "1 4 6 \x1b[32m2\x1b[0m 1");
}

TEST(RenderTriangle, Errors)
{
    RenderOptions opts;
    opts.format = Format::bfile;
    opts.what = Quantity::ratio;
    try {
        lcmbinom::render_triangle(opts);
        FAIL();
    } catch (const lcmbinom::error& e) {
        EXPECT_EQ(e.code(), errc::invalid_format);
    }
    EXPECT_THROW(lcmbinom::parse_format("yaml"), lcmbinom::error);
    opts = {};
    opts.rows = 0;
    EXPECT_THROW(lcmbinom::render_triangle(opts), lcmbinom::error);
}

TEST(Csv, RoundTrip)
{
    RenderOptions opts;
    opts.rows = 40;
    opts.format = Format::csv;
    const std::string text = lcmbinom::render_triangle(opts);
    EXPECT_EQ(line_of(text, 0), "n,k,lcm_binom,binom,ratio,differs");
    EXPECT_EQ(line_of(text, 1 + 13), "4,3,2,4,2,true");
    EXPECT_EQ(lcmbinom::parse_csv(text), lcmbinom::triangle_entries(40));
}

TEST(Csv, RejectsMalformed)
{
    EXPECT_THROW(lcmbinom::parse_csv("n,k\n"), lcmbinom::error);
    EXPECT_THROW(lcmbinom::parse_csv("n,k,lcm_binom,binom,ratio,differs\n1,1,1,1,1,maybe\n"), lcmbinom::error);
    EXPECT_THROW(lcmbinom::parse_csv("n,k,lcm_binom,binom,ratio,differs\n1,-1,1,1,1,false\n"), lcmbinom::error);
}

TEST(Json, SchemaAndBigValues)
{
    const auto arr = lcmbinom::to_json(lcmbinom::triangle_entries(101));
    ASSERT_EQ(arr.size(), 101u * 102u / 2u);
    const auto& cell = arr.at(100 * 101 / 2 + 50); // (100, 50)
    EXPECT_EQ(cell.at("n"), 100);
    EXPECT_EQ(cell.at("k"), 50);
    EXPECT_EQ(cell.at("lcm_binom"), "22497377864108980962");
    EXPECT_EQ(cell.at("binom"), "100891344545564193334812497256");
    EXPECT_EQ(cell.at("differs"), true);
    EXPECT_TRUE(cell.at("ratio").is_string());
}

TEST(Bfile, Export)
{
    const std::string text = lcmbinom::export_bfile(13);
    const auto snap = lcmbinom::parse_bfile(text, "self");
    ASSERT_EQ(snap.terms.size(), 91u);
    const int first[] = {1, 1, 1, 1, 2, 1};
    for (int i = 0; i < 6; ++i) EXPECT_EQ(snap.terms[i].value, first[i]);
    // (4, 3) sits at flat position 4*5/2 + 3.
    EXPECT_EQ(snap.terms[13].value, 2);
    EXPECT_EQ(line_of(text, 0), "0 1");
    EXPECT_EQ(line_of(lcmbinom::export_bfile(2, 1), 0), "1 1");
}

TEST(Bfile, SelfCheckHasNoMismatches)
{
    const auto report = lcmbinom::oeis_check(lcmbinom::parse_bfile(lcmbinom::export_bfile(30), "self"));
    EXPECT_TRUE(report.ok());
    EXPECT_EQ(report.verified, 465u);
}

TEST(Bfile, ParseErrors)
{
    auto code = [](const std::string& text) {
        try {
            lcmbinom::parse_bfile(text, "x");
        } catch (const lcmbinom::error& e) {
            return e.code();
        }
        return errc::invalid_format;
    };
    EXPECT_EQ(code("0 1\n1  1\n"), errc::malformed_bfile);
    EXPECT_EQ(code("0 1 2\n"), errc::malformed_bfile);
    EXPECT_EQ(code("0 x\n"), errc::malformed_bfile);
    EXPECT_EQ(code("0 1\n2 1\n"), errc::malformed_bfile);
    EXPECT_EQ(code("0 -1\n"), errc::malformed_bfile);
    EXPECT_EQ(lcmbinom::parse_bfile("# only a comment\n#another\n", "x").terms.size(), 0u);
    EXPECT_EQ(lcmbinom::parse_bfile("5 1\r\n6 1\r\n", "x").first_index(), 5u);
}

TEST(OeisCheck, BundledSnapshot)
{
    const auto snap = lcmbinom::load_bfile(snapshot_path, "A093430");
    ASSERT_GE(snap.terms.size(), 91u);
    const auto report = lcmbinom::oeis_check(snap);
    EXPECT_TRUE(report.ok()) << lcmbinom::format_report(report);
    EXPECT_EQ(report.verified, snap.terms.size());
    EXPECT_FALSE(report.ordering_note.has_value());
}

TEST(OeisCheck, EmptySnapshot)
{
    const auto report = lcmbinom::oeis_check(lcmbinom::OeisSnapshot{"empty", {}});
    EXPECT_EQ(report.verified, 0u);
    EXPECT_TRUE(report.mismatches.empty());
}

TEST(OeisCheck, CorruptedValueIsReported)
{
    auto snap = lcmbinom::load_bfile(snapshot_path, "A093430");
    snap.terms[40].value += 1;
    const auto report = lcmbinom::oeis_check(snap);
    ASSERT_EQ(report.mismatches.size(), 1u);
    EXPECT_EQ(report.mismatches[0].index, snap.terms[40].index);
    EXPECT_EQ(report.verified, snap.terms.size() - 1);
    EXPECT_FALSE(report.ordering_note.has_value());
}

TEST(OeisCheck, OrderingDiscrepancyIsReported)
{
    // Same triangle without column 0, rows from 1: offsets disagree everywhere.
    lcmbinom::OeisSnapshot snap{"shifted", {}};
    std::uint64_t index = 1;
    for (std::uint64_t n = 1; n <= 12; ++n) {
        for (std::uint64_t k = 1; k <= n; ++k) snap.terms.push_back({index++, lcmbinom::lcm_binomial(n, k)});
    }
    const auto report = lcmbinom::oeis_check(snap);
    EXPECT_FALSE(report.ok());
    ASSERT_TRUE(report.ordering_note.has_value());
    EXPECT_NE(report.ordering_note->find("k = 1..n"), std::string::npos);
}
