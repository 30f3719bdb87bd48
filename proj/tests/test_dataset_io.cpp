#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "gacfit/dataset_io.hpp"
#include "gacfit/error.hpp"

using namespace gacfit;

namespace {

struct Failure {
    ErrorCode code;
    std::optional<std::size_t> line;
};

Failure failure(std::string_view text)
{
    try {
        parse_csv(text);
    } catch (const Error& e) {
        return {e.code(), e.line()};
    }
    FAIL("parse unexpectedly succeeded: " << text);
    return {ErrorCode::InvalidArgument, std::nullopt};
}

} // namespace

TEST_CASE("basic rows with a header")
{
    const Dataset ds = parse_csv("x,y\n1,2\n3,4\n");
    CHECK(ds.points == std::vector<Point2>{{1, 2}, {3, 4}});
}

TEST_CASE("comments, blank lines, whitespace and CRLF")
{
    const Dataset ds = parse_csv("# sample\r\n\r\n  x , y \r\n 1.5 ,\t-2e1\r\n#mid\n+3,  .25\n\n");
    CHECK(ds.points == std::vector<Point2>{{1.5, -20}, {3, 0.25}});
}

TEST_CASE("the reference table as text")
{
    const Dataset ds = parse_csv("-3,3\n-3,4\n-2,6\n-3,7\n-6,8\n-7,8\n-9,7\n-10,4\n-9,2\n-7,1\n");
    CHECK(ds.points == builtin_table3().points);
}

TEST_CASE("malformed rows report their line")
{
    Failure f = failure("1,abc\n");
    CHECK(f.code == ErrorCode::MalformedLine);
    CHECK(f.line == 1u);
    f = failure("x,y\n1,2\n\n3\n");
    CHECK(f.code == ErrorCode::MalformedLine);
    CHECK(f.line == 4u);
    CHECK(failure("1,2,3\n").code == ErrorCode::MalformedLine);
    CHECK(failure(",2\n").code == ErrorCode::MalformedLine);
    CHECK(failure("1 2\n").code == ErrorCode::MalformedLine);
    // A header is only accepted before the first data row.
    f = failure("1,2\nx,y\n");
    CHECK(f.code == ErrorCode::MalformedLine);
    CHECK(f.line == 2u);
}

TEST_CASE("non-finite values")
{
    Failure f = failure("1,2\nnan,3\n");
    CHECK(f.code == ErrorCode::NonFiniteValue);
    CHECK(f.line == 2u);
    CHECK(failure("inf,1\n").code == ErrorCode::NonFiniteValue);
    CHECK(failure("1,-infinity\n").code == ErrorCode::NonFiniteValue);
    CHECK(failure("1e999,0\n").code == ErrorCode::NonFiniteValue);
}

TEST_CASE("empty inputs")
{
    CHECK(failure("").code == ErrorCode::EmptyDataset);
    CHECK(failure("x,y\n# nothing\n\n").code == ErrorCode::EmptyDataset);
}

TEST_CASE("builtin reference dataset")
{
    const Dataset& ds = builtin_table3();
    CHECK(ds.points.size() == 10);
    CHECK(ds.points.front() == Point2{-3, 3});
    CHECK(ds.points.back() == Point2{-7, 1});
    CHECK(ds.source == "builtin:table3");
    CHECK(&builtin_table3() == &ds);
}

TEST_CASE("writer output and round trip")
{
    const Dataset ds{{{0.1, -2.5}, {1e-300, 12345678.901234567}}, "t", "mem"};
    const std::string text = serialize_csv(ds);
    CHECK(text.rfind("x,y\n0.10000000000000001,-2.5\n", 0) == 0);
    CHECK(parse_csv(text).points == ds.points);
}

TEST_CASE("loading files")
{
    CHECK(load_dataset("builtin:table3").points == builtin_table3().points);
    const auto path = std::filesystem::temp_directory_path() / "gacfit_io_test.csv";
    {
        std::ofstream f(path);
        f << "x,y\n1,2\n3,4\n";
    }
    const Dataset ds = load_dataset(path.string());
    CHECK(ds.points.size() == 2);
    CHECK(ds.source == path.string());
    std::filesystem::remove(path);
    try {
        load_dataset((std::filesystem::temp_directory_path() / "gacfit_missing" / "none.csv").string());
        FAIL("expected IoError");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::IoError);
    }
}
