#include "lmov/table_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace lmov {

namespace {

constexpr std::string_view kSeparator = "---";

int to_int(std::string_view text, int line, int column) {
  int out = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
    throw ParseError(line, column, "expected an integer, got '" + std::string(text) + "'");
  return out;
}

/// Runs `fn` and rethrows anything but our own errors as a ParseError at the field.
template <class Fn>
auto at_field(const TableFile::Record& r, std::size_t i, Fn&& fn) {
  try {
    return fn(r.fields.at(i));
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(r.line, r.column(i), e.what());
  }
}

void require_fields(const TableFile::Record& r, std::size_t n) {
  if (r.fields.size() != n)
    throw ParseError(r.line, 1,
                     "expected " + std::to_string(n) + " tab-separated fields, got " + std::to_string(r.fields.size()));
}

void require_kind(const TableFile& file, std::string_view kind) {
  const std::string& k = file.get("kind");
  if (k != kind) throw ParseError(2, 1, "expected a '" + std::string(kind) + "' table, got '" + k + "'");
}

PartitionVector parse_key(const TableFile::Record& r, int components) {
  PartitionVector key = at_field(r, 0, [](const std::string& s) { return PartitionVector::parse(s); });
  if (key.components() != components)
    throw ParseError(r.line, 1, "key " + key.to_string() + " has " + std::to_string(key.components()) +
                                    " components, table has " + std::to_string(components));
  return key;
}

std::string integer_text(const Integer& n) { return n.get_str(); }

class Writer {
 public:
  explicit Writer(std::string_view magic) { out_ << magic << ' ' << kFormatVersion << '\n'; }
  Writer& field(std::string_view name, const std::string& value) {
    out_ << name << ' ' << value << '\n';
    return *this;
  }
  Writer& field(std::string_view name, std::int64_t value) { return field(name, std::to_string(value)); }
  void body() { out_ << kSeparator << '\n'; }
  void section(std::string_view name) { out_ << '[' << name << "]\n"; }
  template <class... Ts>
  void record(const Ts&... fields) {
    std::size_t i = 0;
    ((out_ << (i++ == 0 ? "" : "\t") << fields), ...);
    out_ << '\n';
  }
  std::string str() const { return out_.str(); }

 private:
  std::ostringstream out_;
};

void write_entries(Writer& w, const std::map<PartitionVector, RatFunc>& entries) {
  for (const auto& [key, value] : entries) w.record(key.to_string(), value.to_string());
}

void write_integer_rows(Writer& w, const std::map<PartitionVector, IntegerRow>& rows) {
  for (const auto& [key, row] : rows)
    for (const auto& [gq, value] : row) w.record(key.to_string(), gq.g, gq.two_q, integer_text(value));
}

void write_rational_rows(Writer& w, const std::map<PartitionVector, RationalRow>& rows) {
  for (const auto& [key, row] : rows)
    for (const auto& [gq, value] : row) w.record(key.to_string(), gq.g, gq.two_q, format_rational(value));
}

template <class Value, class ParseValue>
std::map<PartitionVector, std::map<GenusCharge, Value>> parse_charge_rows(const TableFile& file,
                                                                          ParseValue&& parse_value) {
  const int components = file.get_int("components");
  std::map<PartitionVector, std::map<GenusCharge, Value>> rows;
  for (const auto& r : file.records) {
    require_fields(r, 4);
    const PartitionVector key = parse_key(r, components);
    const GenusCharge gq{to_int(r.fields[1], r.line, r.column(1)), to_int(r.fields[2], r.line, r.column(2))};
    const Value value = at_field(r, 3, parse_value);
    if (!rows[key].emplace(gq, value).second)
      throw DuplicateKey(r.line, 1, "duplicate entry " + key.to_string() + " g=" + std::to_string(gq.g) +
                                        " 2Q=" + std::to_string(gq.two_q));
  }
  return rows;
}

}  // namespace

int TableFile::Record::column(std::size_t i) const {
  int col = 1;
  for (std::size_t j = 0; j < i && j < fields.size(); ++j) col += static_cast<int>(fields[j].size()) + 1;
  return col;
}

const std::string* TableFile::find(std::string_view field) const {
  for (const auto& [name, value] : header)
    if (name == field) return &value;
  return nullptr;
}

const std::string& TableFile::get(std::string_view field) const {
  if (const std::string* v = find(field)) return *v;
  throw ParseError(1, 1, "header field '" + std::string(field) + "' is missing");
}

int TableFile::get_int(std::string_view field) const {
  int line = 2;
  for (const auto& [name, value] : header) {
    if (name == field) return to_int(value, line, static_cast<int>(name.size()) + 2);
    ++line;
  }
  throw ParseError(1, 1, "header field '" + std::string(field) + "' is missing");
}

std::string TableFile::serialize() const {
  Writer w(magic);
  for (const auto& [name, value] : header) w.field(name, value);
  w.body();
  std::string out = w.str();
  for (const auto& r : records) {
    for (std::size_t i = 0; i < r.fields.size(); ++i) {
      if (i) out += '\t';
      out += r.fields[i];
    }
    out += '\n';
  }
  return out;
}

TableFile TableFile::parse(std::string_view text) {
  TableFile file;
  std::vector<std::string_view> lines;
  for (std::size_t start = 0; start < text.size();) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  if (lines.empty()) throw ParseError(1, 1, "empty file");

  const std::string_view first = lines[0];
  const auto space = first.find(' ');
  const std::string_view magic = first.substr(0, space);
  if (magic != "lmov-table" && magic != "lmov-report")
    throw ParseError(1, 1, "not an lmov file (expected 'lmov-table <version>')");
  if (space == std::string_view::npos) throw ParseError(1, static_cast<int>(first.size()) + 1, "missing version");
  const int version = to_int(first.substr(space + 1), 1, static_cast<int>(space) + 2);
  if (version != kFormatVersion)
    throw VersionError("format version " + std::to_string(version) + " is not supported (this build reads " +
                       std::to_string(kFormatVersion) + ")");
  file.magic = std::string(magic);

  std::size_t i = 1;
  bool separated = false;
  for (; i < lines.size(); ++i) {
    const std::string_view line = lines[i];
    if (line == kSeparator) {
      separated = true;
      ++i;
      break;
    }
    const auto sp = line.find(' ');
    if (sp == std::string_view::npos || sp == 0)
      throw ParseError(static_cast<int>(i) + 1, 1, "header lines look like 'field value'");
    const std::string name(line.substr(0, sp));
    if (file.find(name)) throw DuplicateKey(static_cast<int>(i) + 1, 1, "header field '" + name + "' repeated");
    file.header.emplace_back(name, std::string(line.substr(sp + 1)));
  }
  if (!separated) throw ParseError(static_cast<int>(lines.size()), 1, "missing '---' line after the header");

  for (; i < lines.size(); ++i) {
    const std::string_view line = lines[i];
    if (line.empty() || line.front() == '#') continue;
    Record r;
    r.line = static_cast<int>(i) + 1;
    for (std::size_t start = 0;;) {
      const std::size_t tab = line.find('\t', start);
      r.fields.emplace_back(line.substr(start, tab == std::string_view::npos ? std::string_view::npos : tab - start));
      if (tab == std::string_view::npos) break;
      start = tab + 1;
    }
    file.records.push_back(std::move(r));
  }
  return file;
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("error while writing " + path.string());
}

std::string to_string(PConvention c) { return c == PConvention::qrho ? "qrho" : "literal-tinv"; }

PConvention parse_convention(std::string_view text) {
  if (text == "qrho") return PConvention::qrho;
  if (text == "literal-tinv") return PConvention::literal_tinv;
  throw std::invalid_argument("unknown convention '" + std::string(text) + "'");
}

std::string write_wtable(const WTable& t) {
  Writer w("lmov-table");
  w.field("kind", "W").field("name", t.name).field("components", t.components).field("degree", t.max_degree);
  w.field("framing", t.framing);
  w.body();
  write_entries(w, t.entries);
  return w.str();
}

std::map<PartitionVector, RatFunc> parse_stage_entries(const TableFile& file) {
  const int components = file.get_int("components");
  std::map<PartitionVector, RatFunc> entries;
  for (const auto& r : file.records) {
    require_fields(r, 2);
    PartitionVector key = parse_key(r, components);
    RatFunc value = at_field(r, 1, [](const std::string& s) { return RatFunc::parse(s); });
    if (!entries.emplace(std::move(key), std::move(value)).second)
      throw DuplicateKey(r.line, 1, "duplicate key " + r.fields[0]);
  }
  return entries;
}

WTable parse_wtable(std::string_view text) {
  const TableFile file = TableFile::parse(text);
  require_kind(file, "W");
  WTable w;
  w.name = file.get("name");
  w.components = file.get_int("components");
  w.max_degree = file.get_int("degree");
  if (const std::string* f = file.find("framing")) w.framing = *f;
  w.entries = parse_stage_entries(file);
  w.validate();
  return w;
}

WTable read_wtable(const std::filesystem::path& path) { return parse_wtable(read_text(path)); }

std::string write_stage_table(std::string_view kind, std::string_view name, int components, int max_degree,
                              const std::map<PartitionVector, RatFunc>& entries, PConvention convention) {
  Writer w("lmov-table");
  w.field("kind", std::string(kind)).field("name", std::string(name)).field("components", components);
  w.field("degree", max_degree).field("convention", to_string(convention));
  w.body();
  write_entries(w, entries);
  return w.str();
}

std::string write_integer_table(std::string_view kind, std::string_view name, int components, int max_degree,
                                const std::map<PartitionVector, IntegerRow>& rows, PConvention convention) {
  Writer w("lmov-table");
  w.field("kind", std::string(kind)).field("name", std::string(name)).field("components", components);
  w.field("degree", max_degree).field("convention", to_string(convention));
  w.body();
  write_integer_rows(w, rows);
  return w.str();
}

std::map<PartitionVector, IntegerRow> parse_integer_rows(const TableFile& file) {
  return parse_charge_rows<Integer>(file, [](const std::string& s) {
    Integer n;
    if (s.empty() || n.set_str(s, 10) != 0) throw std::invalid_argument("expected an integer, got '" + s + "'");
    return n;
  });
}

std::string write_checkn_table(std::string_view name, const CheckNTable& cn, PConvention convention) {
  Writer w("lmov-table");
  w.field("kind", "checkn").field("name", std::string(name)).field("components", cn.components);
  w.field("degree", cn.max_degree).field("convention", to_string(convention));
  w.body();
  write_rational_rows(w, cn.rows);
  return w.str();
}

CheckNTable parse_checkn_table(std::string_view text) {
  const TableFile file = TableFile::parse(text);
  require_kind(file, "checkn");
  CheckNTable cn;
  cn.components = file.get_int("components");
  cn.max_degree = file.get_int("degree");
  for (const auto& key : enumerate_vectors(cn.components, cn.max_degree)) cn.rows[key];
  for (auto& [key, row] : parse_charge_rows<Rational>(file, [](const std::string& s) { return parse_rational(s); })) {
    if (!cn.rows.count(key)) throw ParseError(1, 1, "key " + key.to_string() + " is above the table degree");
    cn.rows[key] = std::move(row);
  }
  for (const auto& [key, row] : cn.rows) {
    CheckNBounds b;
    for (const auto& [gq, value] : row) {
      b.g_max = std::max(b.g_max, gq.g);
      b.two_q_abs_max = std::max(b.two_q_abs_max, std::abs(gq.two_q));
    }
    cn.bounds[key] = b;
  }
  return cn;
}

std::string write_product(const ProductRep& p, std::string_view name) {
  Writer w("lmov-table");
  w.field("kind", "product").field("name", std::string(name)).field("components", p.components);
  w.field("degree", p.trunc.degree).field("q-order", p.trunc.q_order).field("mode", to_string(p.mode));
  w.body();
  for (const auto& f : p.factors) w.record(f.mu.to_string(), f.g, f.two_q, format_rational(f.checkn));
  return w.str();
}

ProductRep parse_product(std::string_view text) {
  const TableFile file = TableFile::parse(text);
  require_kind(file, "product");
  ProductRep p;
  p.components = file.get_int("components");
  p.trunc.degree = file.get_int("degree");
  p.trunc.q_order = file.get_int("q-order");
  try {
    p.mode = parse_mode(file.get("mode"));
  } catch (const std::invalid_argument& e) {
    throw ParseError(1, 1, e.what());
  }
  for (const auto& [key, row] : parse_charge_rows<Rational>(file, [](const std::string& s) { return parse_rational(s); }))
    for (const auto& [gq, value] : row) p.factors.push_back({key, gq.g, gq.two_q, value});
  std::sort(p.factors.begin(), p.factors.end());
  return p;
}

std::string render_pipeline_report(std::string_view name, const PipelineResult& r) {
  const bool ok = r.integrality.all_passed();
  Writer w("lmov-report");
  w.field("kind", "pipeline").field("name", std::string(name)).field("components", r.z.components);
  w.field("degree", r.z.max_degree).field("convention", to_string(r.convention));
  w.field("status", ok ? "ok" : "integrality-failed");
  w.field("failing", static_cast<std::int64_t>(r.integrality.failing_keys().size()));
  w.body();
  w.section("Z");
  write_entries(w, r.z.entries);
  w.section("F");
  write_entries(w, r.f_energy.entries);
  w.section("f");
  write_entries(w, r.f.schur);
  w.section("P");
  write_entries(w, r.p.entries);
  w.section("integrality");
  for (const auto& row : r.integrality.rows) w.record(row.key.to_string(), to_string(row.failure), row.witness.to_string());
  w.section("N");
  write_integer_rows(w, r.big_n.rows);
  w.section("n");
  write_integer_rows(w, r.small_n.rows);
  if (r.checkn) {
    w.section("checkn");
    write_rational_rows(w, r.checkn->rows);
    w.section("checkn-bounds");
    for (const auto& [key, b] : r.checkn->bounds) w.record(key.to_string(), b.g_max, b.two_q_abs_max);
  }
  return w.str();
}

std::string render_roundtrip_report(std::string_view name, const RoundTripReport& r) {
  const char* status = !r.integrality_passed ? "integrality-failed" : r.residuals.empty() ? "ok" : "mismatch";
  Writer w("lmov-report");
  w.field("kind", "verify").field("name", std::string(name));
  w.field("degree", r.trunc.degree).field("q-order", r.trunc.q_order).field("mode", to_string(r.mode));
  w.field("status", status).field("factors", static_cast<std::int64_t>(r.factor_count));
  w.field("residuals", static_cast<std::int64_t>(r.residuals.size()));
  w.field("max-discrepancy", format_rational(r.max_discrepancy()));
  w.body();
  w.section("failing");
  for (const auto& key : r.failing_keys) w.record(key.to_string());
  w.section("residuals");
  for (const auto& res : r.residuals)
    w.record(res.key.to_string(), res.u_power, res.v_power, format_rational(res.difference));
  return w.str();
}

std::string render_symmetry_report(std::string_view name, const SymmetryReport& r) {
  Writer w("lmov-report");
  w.field("kind", "symmetries").field("name", std::string(name));
  w.field("status", r.all_hold() ? "ok" : "failed");
  w.body();
  w.section("checks");
  for (const auto& c : r.checks)
    w.record(c.name, c.holds ? "holds" : "fails", static_cast<std::int64_t>(c.checked), c.witness.empty() ? "-" : c.witness);
  return w.str();
}

}  // namespace lmov
