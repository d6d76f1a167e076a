// Command-line driver: table generation, the invariant pipeline, round-trip
// verification, symmetry checks and product export.

#include <algorithm>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "lmov/pipeline.hpp"
#include "lmov/product.hpp"
#include "lmov/table_io.hpp"

namespace {

enum Exit : int { kOk = 0, kIoError = 1, kUsage = 2, kIntegrality = 3, kMismatch = 4, kSymmetry = 5 };

void emit(const std::string& text, const std::string& out) {
  if (out.empty())
    std::cout << text;
  else
    lmov::write_text(out, text);
}

lmov::WTable load(const std::string& path, std::optional<int> degree) {
  lmov::WTable w = lmov::read_wtable(path);
  return degree ? w.truncated(*degree) : w;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Integer invariants of colored HOMFLY tables and their infinite-product form"};
  app.require_subcommand(1);

  lmov::Truncation defaults;
  try {
    defaults = lmov::default_truncation();
  } catch (const std::exception& e) {
    std::cerr << "lmov: " << e.what() << '\n';
    return kUsage;
  }

  std::string in, out, mode_text = "q";
  int degree = defaults.degree;
  int q_order = defaults.q_order;
  std::optional<int> table_degree;
  bool literal = false;

  auto* gen = app.add_subcommand("gen-unknot", "Write the unknot table (quantum dimensions)");
  gen->add_option("--degree", degree, "Largest |A|")->required()->check(CLI::PositiveNumber);
  gen->add_option("--out", out, "Output file (stdout if omitted)");

  auto* pipe = app.add_subcommand("pipeline", "Run W -> Z -> F -> f -> P -> N -> n -> checked-n");
  pipe->add_option("--in", in, "W table")->required();
  pipe->add_option("--degree", table_degree, "Truncate the table to this degree")->check(CLI::PositiveNumber);
  pipe->add_flag("--literal-Tinv", literal, "Use T^{-1}(q^rho) instead of T(q^rho) for P");
  pipe->add_option("--out", out, "Report file (stdout if omitted)");

  auto* verify = app.add_subcommand("verify", "Compare the expanded product with the partition function");
  verify->add_option("--in", in, "W table")->required();
  verify->add_option("--degree", degree, "x-degree D")->check(CLI::PositiveNumber);
  verify->add_option("--q-order", q_order, "q-order Nq")->check(CLI::NonNegativeNumber);
  verify->add_option("--mode", mode_text, "Expansion branch")->check(CLI::IsMember({"q", "qinv"}));
  verify->add_option("--out", out, "Report file (stdout if omitted)");

  auto* sym = app.add_subcommand("symmetries", "Check q <-> 1/q, rank-level duality and the N / checked-n symmetries");
  sym->add_option("--in", in, "W table")->required();
  sym->add_option("--degree", table_degree, "Truncate the table to this degree")->check(CLI::PositiveNumber);
  sym->add_option("--q-order", q_order, "q-order Nq for the q <-> 1/q comparison")->check(CLI::NonNegativeNumber);
  sym->add_option("--out", out, "Report file (stdout if omitted)");

  auto* prod = app.add_subcommand("product", "Write the infinite-product representation");
  prod->add_option("--in", in, "W table")->required();
  prod->add_option("--out", out, "Product file (stdout if omitted)");
  prod->add_option("--degree", table_degree, "Truncate the table to this degree")->check(CLI::PositiveNumber);
  prod->add_option("--q-order", q_order, "q-order Nq recorded with the product")->check(CLI::NonNegativeNumber);
  prod->add_option("--mode", mode_text, "Expansion branch")->check(CLI::IsMember({"q", "qinv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*gen) {
      emit(lmov::write_wtable(lmov::unknot_table(degree)), out);
      return kOk;
    }
    if (*pipe) {
      const lmov::WTable w = load(in, table_degree);
      const auto result =
          lmov::run_pipeline(w, literal ? lmov::PConvention::literal_tinv : lmov::PConvention::qrho);
      emit(lmov::render_pipeline_report(w.name, result), out);
      if (!result.integrality.all_passed()) {
        std::cerr << "lmov: integrality failed for";
        for (const auto& key : result.integrality.failing_keys()) std::cerr << ' ' << key.to_string();
        std::cerr << '\n';
        return kIntegrality;
      }
      return kOk;
    }
    if (*verify) {
      const lmov::WTable w = lmov::read_wtable(in);
      // Without --degree, never ask for more than the table holds.
      if (verify->count("--degree") == 0) degree = std::min(degree, w.max_degree);
      const lmov::Truncation trunc{degree, q_order};
      const auto report = lmov::roundtrip_verify(w, trunc, lmov::parse_mode(mode_text));
      emit(lmov::render_roundtrip_report(w.name, report), out);
      if (!report.integrality_passed) return kIntegrality;
      return report.passed() ? kOk : kMismatch;
    }
    if (*sym) {
      const lmov::WTable w = load(in, table_degree);
      const auto result = lmov::run_pipeline(w);
      const auto report = lmov::symmetry_checks(w, result, lmov::Truncation{w.max_degree, q_order});
      emit(lmov::render_symmetry_report(w.name, report), out);
      return report.all_hold() ? kOk : kSymmetry;
    }
    if (*prod) {
      const lmov::WTable w = load(in, table_degree);
      const auto result = lmov::run_pipeline(w);
      if (!result.checkn) {
        std::cerr << "lmov: integrality failed; no product representation\n";
        return kIntegrality;
      }
      const auto product =
          lmov::build_product(*result.checkn, lmov::Truncation{w.max_degree, q_order}, lmov::parse_mode(mode_text));
      emit(lmov::write_product(product, w.name), out);
      return kOk;
    }
  } catch (const lmov::ParseError& e) {
    std::cerr << "lmov: " << in << ": " << e.what() << '\n';
    return kIoError;
  } catch (const lmov::VersionError& e) {
    std::cerr << "lmov: " << in << ": " << e.what() << '\n';
    return kIoError;
  } catch (const std::exception& e) {
    std::cerr << "lmov: " << e.what() << '\n';
    return kIoError;
  }
  return kUsage;
}
