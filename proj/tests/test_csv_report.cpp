#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>

#include "sandwich/covariance.hpp"
#include "sandwich/csv.hpp"
#include "sandwich/dgp.hpp"
#include "sandwich/errors.hpp"
#include "sandwich/ols.hpp"
#include "sandwich/rng.hpp"

using namespace sandwich;

TEST_CASE("doubles survive a write/read round trip exactly") {
    CsvTable table;
    table.columns = {"a", "b", "c"};
    table.rows = {{0.1, 1.0 / 3.0, -1e-300},
                  {1.2345678901234567e+18, 2e-308, 0.20615528128088303},
                  {-0.0, 42.0, 3.141592653589793}};

    std::stringstream io;
    write_csv(io, table);
    const CsvTable back = read_csv(io);

    REQUIRE(back.columns == table.columns);
    REQUIRE(back.rows.size() == table.rows.size());
    for (size_t i = 0; i < table.rows.size(); ++i) {
        for (size_t j = 0; j < table.rows[i].size(); ++j) {
            CHECK(back.rows[i][j] == table.rows[i][j]);
        }
    }
}

TEST_CASE("parse errors name the line and column") {
    std::stringstream in("y,x\n1,2\n3,oops\n");
    try {
        read_csv(in);
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("line 3") != std::string::npos);
        CHECK(msg.find("column 2") != std::string::npos);
        CHECK(msg.find("oops") != std::string::npos);
    }
}

TEST_CASE("structural CSV errors") {
    std::stringstream ragged("y,x\n1,2,9\n");
    CHECK_THROWS_AS(read_csv(ragged), ValidationError);

    std::stringstream empty("");
    CHECK_THROWS_AS(read_csv(empty), ValidationError);

    std::stringstream missing_cell("y,x\n1,\n");
    CHECK_THROWS_AS(read_csv(missing_cell), ValidationError);

    std::stringstream inf_cell("y,x\n1,inf\n2,0\n");
    CHECK_THROWS_AS(read_csv(inf_cell), ValidationError);
}

TEST_CASE("windows line endings and blank lines are tolerated") {
    std::stringstream in("y,x\r\n1,0\r\n\r\n2,1\r\n");
    const CsvTable t = read_csv(in);
    CHECK(t.columns == std::vector<std::string>{"y", "x"});
    REQUIRE(t.rows.size() == 2);
    CHECK(t.rows[1][1] == 1.0);
}

TEST_CASE("dataset_from_table resolves the binary column by name or index") {
    CsvTable table;
    table.columns = {"outcome", "treated", "dose"};
    table.rows = {{3, 1, 0.1}, {5, 1, 0.9}, {2, 0, 0.4}, {4, 0, 0.7}};

    const Dataset by_name = dataset_from_table(table, "treated");
    REQUIRE(by_name.binary_column.has_value());
    CHECK(*by_name.binary_column == 1);  // after the prepended intercept
    CHECK(*by_name.m == 2);
    CHECK(by_name.p() == 3);

    const Dataset by_index = dataset_from_table(table, "0");
    CHECK(by_index.binary_column == by_name.binary_column);

    CHECK_THROWS_AS(dataset_from_table(table, "zzz"), ValidationError);

    const Dataset plain = dataset_from_table(table);
    CHECK(!plain.binary_column.has_value());
    CHECK(plain.x(0, 0) == 1.0);

    const Dataset bare = dataset_from_table(table, "", false);
    CHECK(bare.p() == 2);
    CHECK(bare.x(0, 0) == 1.0);  // first predictor, not an intercept
}

TEST_CASE("fit results survive CSV persistence to 1e-12") {
    DgpSpec spec;
    spec.n = 200;
    spec.m = 40;
    RngStream stream(55, 0);
    const Dataset d = generate_dataset(spec, stream);

    CsvTable table;
    table.columns = {"y", "x"};
    for (Index i = 0; i < d.n(); ++i) {
        table.rows.push_back({d.y[i], d.x(i, 1)});
    }
    std::stringstream io;
    write_csv(io, table);
    const Dataset back = dataset_from_table(read_csv(io), "x");

    const FitResult f1 = ols_fit(d);
    const FitResult f2 = ols_fit(back);
    CHECK((f1.beta - f2.beta).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(std::abs(hc_cov(f1).se(1) - hc_cov(f2).se(1)) < 1e-12);
    CHECK(std::abs(classical_cov(f1).se(1) - classical_cov(f2).se(1)) < 1e-12);
}
