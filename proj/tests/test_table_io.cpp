#include <filesystem>

#include "doctest.h"
#include "lmov/table_io.hpp"

using namespace lmov;

namespace {

const std::filesystem::path kFixtures = LMOV_FIXTURE_DIR;

template <class Error>
Error parse_error(std::string_view text) {
  try {
    parse_wtable(text);
  } catch (const Error& e) {
    return e;
  }
  FAIL("expected a parse failure");
  throw std::logic_error("unreachable");
}

}  // namespace

TEST_CASE("W tables round trip byte for byte") {
  for (int d = 1; d <= 4; ++d) {
    const WTable w = unknot_table(d);
    const std::string text = write_wtable(w);
    const WTable back = parse_wtable(text);
    CHECK(back.entries == w.entries);
    CHECK(back.name == w.name);
    CHECK(write_wtable(back) == text);
  }
  for (const char* name : {"unknot_d3.tbl", "trefoil_d1.tbl", "bad_integrality_d1.tbl"}) {
    const std::string text = read_text(kFixtures / name);
    CHECK(write_wtable(parse_wtable(text)) == text);
    CHECK(TableFile::parse(text).serialize() == text);
  }
}

TEST_CASE("the unknot fixture is the generated table") {
  CHECK(read_wtable(kFixtures / "unknot_d3.tbl").entries == unknot_table(3).entries);
}

TEST_CASE("malformed files") {
  const std::string head = "lmov-table 1\nkind W\nname x\ncomponents 1\ndegree 1\n---\n";
  CHECK_THROWS_AS(parse_wtable(head), MissingDegrees);
  CHECK_THROWS_AS(parse_wtable("lmov-table 2\nkind W\n---\n"), VersionError);

  const auto dup = parse_error<DuplicateKey>(head + "1\t0\n1\t0,0:+1/1\n");
  CHECK(dup.line == 8);

  const auto bad_value = parse_error<ParseError>(head + "1\t1,1:+1/0\n");
  CHECK(bad_value.line == 7);
  CHECK(bad_value.column == 3);

  const auto bad_key = parse_error<ParseError>(head + "1|1\t0\n");
  CHECK(bad_key.line == 7);

  CHECK_THROWS_AS(parse_wtable("hello\n"), ParseError);
  CHECK_THROWS_AS(parse_wtable("lmov-table 1\nkind W\n"), ParseError);
  CHECK_THROWS_AS(parse_wtable("lmov-table 1\nkind P\ncomponents 1\ndegree 1\n---\n"), ParseError);
  CHECK_THROWS_AS(parse_wtable(head + "1\n"), ParseError);
}

TEST_CASE("integer and checked-n tables") {
  const PipelineResult r = run_pipeline(unknot_table(3));
  const std::string n_text = write_integer_table("N", "unknot", 1, 3, r.big_n.rows);
  CHECK(parse_integer_rows(TableFile::parse(n_text)) ==
        std::map<PartitionVector, IntegerRow>{{PartitionVector{Partition{1}}, r.big_n.rows.at(PartitionVector{Partition{1}})}});
  const std::string c_text = write_checkn_table("unknot", *r.checkn);
  const CheckNTable back = parse_checkn_table(c_text);
  CHECK(back.rows == r.checkn->rows);
  CHECK(write_checkn_table("unknot", back) == c_text);
}

TEST_CASE("product files") {
  const PipelineResult r = run_pipeline(unknot_table(2));
  const ProductRep p = build_product(*r.checkn, Truncation{2, 9}, ProductMode::q_inverse);
  const std::string text = write_product(p, "unknot");
  CHECK(text.find("mode qinv\n") != std::string::npos);
  const ProductRep back = parse_product(text);
  CHECK(back.factors == p.factors);
  CHECK(back.trunc == p.trunc);
  CHECK(back.mode == p.mode);
  CHECK(write_product(back, "unknot") == text);
}

TEST_CASE("reports are deterministic") {
  const WTable w = unknot_table(2);
  const PipelineResult a = run_pipeline(w), b = run_pipeline(w);
  CHECK(render_pipeline_report("u", a) == render_pipeline_report("u", b));
  const std::string report = render_pipeline_report("u", a);
  CHECK(report.rfind("lmov-report 1\nkind pipeline\n", 0) == 0);
  CHECK(report.find("status ok\n") != std::string::npos);
  CHECK(report.find("[checkn]\n1\t0\t-1\t+1/1\n1\t0\t1\t-1/1\n") != std::string::npos);
  CHECK(TableFile::parse(report).get("status") == "ok");

  const RoundTripReport v = roundtrip_verify(w, Truncation{2, 4});
  CHECK(render_roundtrip_report("u", v).find("status ok\n") != std::string::npos);
  const SymmetryReport s = symmetry_checks(w, a, Truncation{2, 4});
  CHECK(render_symmetry_report("u", s).find("rank-level\tholds") != std::string::npos);
}
