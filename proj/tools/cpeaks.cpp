// Command-line front end for the circular-peak library.
//
// Exit codes: 0 success, 1 invalid input or resource cap, 2 verification failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cpeaks/chains.hpp"
#include "cpeaks/complex.hpp"
#include "cpeaks/hilbert.hpp"
#include "cpeaks/hvector.hpp"
#include "cpeaks/peak_sets.hpp"
#include "cpeaks/perm.hpp"
#include "cpeaks/printed_forms.hpp"
#include "cpeaks/verify.hpp"

namespace {

using cpeaks::Integer;
using cpeaks::Rational;
using Json = nlohmann::ordered_json;

// Sets travel through uint32 masks, so their ambient size stays below 32.
constexpr int kSetAmbientCap = 31;
constexpr int kSeriesOrderCap = 60;
constexpr int kHilbertOrderCap = 200;

enum class Format { Json, Csv };

struct Options {
  std::optional<int> n, i, dim, order, max_n;
  std::optional<std::string> set, upper, word, perm;
  std::string algebra = "A";
  std::string which = "P";
  std::string suite = "all";
  std::string format = "json";
};

using Row = std::vector<std::string>;

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void print_csv(const Row& header, const std::vector<Row>& rows) {
  const auto line = [](const Row& r) {
    std::string out;
    for (std::size_t k = 0; k < r.size(); ++k) out += (k ? "," : "") + csv_field(r[k]);
    return out;
  };
  std::cout << line(header) << '\n';
  for (const auto& r : rows) std::cout << line(r) << '\n';
}

void print_json(const Json& j) { std::cout << j.dump(2) << '\n'; }

template <class T>
std::string str(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

Json exact_array(const std::vector<Integer>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(str(x));
  return a;
}

Json coeff_array(const cpeaks::Poly& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(str(c));
  return a;
}

std::string joined(const cpeaks::ValueSet& s) {
  std::string out;
  for (int v : s) out += (out.empty() ? "" : ",") + std::to_string(v);
  return out;
}

// Strictly ascending comma-separated integers; the empty string is the empty set.
cpeaks::ValueSet parse_int_list(const std::string& text, const std::string& flag, bool ascending) {
  cpeaks::ValueSet out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw cpeaks::FormatError(flag + ": '" + item + "' is not an integer");
    if (ascending && !out.empty() && v <= out.back()) {
      throw cpeaks::FormatError(flag + " must list strictly ascending integers");
    }
    out.push_back(v);
  }
  if (!text.empty() && text.back() == ',') throw cpeaks::FormatError(flag + ": trailing comma");
  return out;
}

int require(const std::optional<int>& v, const std::string& flag) {
  if (!v) throw cpeaks::DomainError(flag + " is required");
  return *v;
}

const std::string& require(const std::optional<std::string>& v, const std::string& flag) {
  if (!v) throw cpeaks::DomainError(flag + " is required");
  return *v;
}

void require_set_ambient(int n) {
  if (n < 1 || n > kSetAmbientCap) {
    throw cpeaks::DomainError("--n must lie in [1, " + std::to_string(kSetAmbientCap) + "] for set arguments");
  }
}

cpeaks::PeakSet parse_set(int n, const std::optional<std::string>& text, const std::string& flag) {
  require_set_ambient(n);
  return cpeaks::PeakSet(n, parse_int_list(require(text, flag), flag, true));
}

Json set_json(const cpeaks::ValueSet& s) {
  Json a = Json::array();
  for (int v : s) a.push_back(v);
  return a;
}

// ---------------------------------------------------------------------------

int cmd_stats(const Options& o, Format f) {
  const auto values = parse_int_list(require(o.perm, "--perm"), "--perm", false);
  const cpeaks::Permutation sigma(values);
  const auto st = cpeaks::peak_statistics(sigma);
  if (f == Format::Csv) {
    print_csv({"perm", "cp", "cdes"}, {{joined(values), joined(st.cp), joined(st.cdes)}});
  } else {
    print_json({{"perm", set_json(values)}, {"cp", set_json(st.cp)}, {"cdes", set_json(st.cdes)}});
  }
  return 0;
}

int cmd_enum_cp(const Options& o, Format f) {
  const int n = require(o.n, "--n");
  require_set_ambient(n);
  const auto s = cpeaks::PeakSet(n, parse_int_list(require(o.set, "--set"), "--set", true)).elements();
  const auto perms = cpeaks::enumerate_cp_class(n, s);
  if (f == Format::Csv) {
    std::vector<Row> rows;
    for (const auto& p : perms) rows.push_back({p.to_string()});
    print_csv({"permutation"}, rows);
  } else {
    Json list = Json::array();
    for (const auto& p : perms) list.push_back(p.to_string());
    print_json({{"n", n}, {"set", set_json(s)}, {"count", std::to_string(perms.size())}, {"permutations", list}});
  }
  return 0;
}

int cmd_witness(const Options& o, Format f) {
  const int n = require(o.n, "--n");
  const cpeaks::PeakSet s = parse_set(n, o.set, "--set");
  const auto sigma = cpeaks::witness(s);
  const auto cp = cpeaks::circular_peak_set(sigma);
  if (f == Format::Csv) {
    print_csv({"n", "set", "witness", "cp"}, {{std::to_string(n), s.to_string(), sigma.to_string(), joined(cp)}});
  } else {
    print_json({{"n", n}, {"set", set_json(s.elements())}, {"witness", sigma.to_string()}, {"cp", set_json(cp)}});
  }
  return 0;
}

int cmd_dyck(const Options& o, Format f) {
  if (o.set.has_value() == o.word.has_value()) throw cpeaks::DomainError("give exactly one of --set and --word");
  cpeaks::PeakSet s = cpeaks::PeakSet::empty(1);
  std::string word;
  int n = 0;
  if (o.word) {
    n = o.n.value_or(static_cast<int>(o.word->size()) + 1);
    require_set_ambient(n);
    s = cpeaks::from_dyck(n, cpeaks::DyckPrefix(*o.word));
    word = *o.word;
  } else {
    n = require(o.n, "--n");
    s = parse_set(n, o.set, "--set");
    word = cpeaks::to_dyck(s).letters();
  }
  const cpeaks::DyckPrefix w(word);
  if (f == Format::Csv) {
    print_csv({"n", "set", "word", "height"}, {{std::to_string(n), s.to_string(), word, std::to_string(w.height())}});
  } else {
    print_json({{"n", n}, {"set", set_json(s.elements())}, {"word", word}, {"height", w.height()}});
  }
  return 0;
}

int cmd_faces(const Options& o, Format f) {
  const int n = require(o.n, "--n");
  cpeaks::detail::require_poset_cap(n);
  if (o.dim) {
    const auto fs = cpeaks::faces(n, *o.dim);
    if (f == Format::Csv) {
      std::vector<Row> rows;
      for (const auto& s : fs) rows.push_back({std::to_string(*o.dim), s.to_string()});
      print_csv({"dim", "face"}, rows);
    } else {
      Json list = Json::array();
      for (const auto& s : fs) list.push_back(set_json(s.elements()));
      print_json({{"n", n}, {"dim", *o.dim}, {"count", std::to_string(fs.size())}, {"faces", list}});
    }
    return 0;
  }
  // Whole complex: faces with their upward covers (the Hasse diagram).
  const cpeaks::FacePoset poset(n);
  std::vector<std::vector<std::size_t>> up(poset.size());
  for (const auto& [a, b] : poset.covers()) up[a].push_back(b);
  if (f == Format::Csv) {
    std::vector<Row> rows;
    for (std::size_t k = 0; k < poset.size(); ++k) {
      std::string covers;
      for (auto b : up[k]) covers += (covers.empty() ? "" : " ") + poset.face(b).to_string();
      rows.push_back({std::to_string(poset.face(k).size() - 1), poset.face(k).to_string(), covers});
    }
    print_csv({"dim", "face", "covered_by"}, rows);
  } else {
    Json list = Json::array();
    for (std::size_t k = 0; k < poset.size(); ++k) {
      Json covers = Json::array();
      for (auto b : up[k]) covers.push_back(set_json(poset.face(b).elements()));
      list.push_back({{"face", set_json(poset.face(k).elements())},
                      {"dim", poset.face(k).size() - 1},
                      {"covered_by", covers}});
    }
    print_json({{"n", n}, {"dimension", cpeaks::complex_dimension(n)}, {"faces", list}});
  }
  return 0;
}

int cmd_fvector(const Options& o, Format f) {
  const int n = require(o.n, "--n");
  const auto table = cpeaks::face_table(n);
  if (f == Format::Csv) {
    std::vector<Row> rows;
    for (std::size_t k = 0; k < table.f.size(); ++k) {
      rows.push_back({std::to_string(n), std::to_string(static_cast<int>(k) - 1), str(table.f[k])});
    }
    print_csv({"n", "i", "p"}, rows);
  } else {
    print_json({{"n", n}, {"f", exact_array(table.f)}, {"polynomial", cpeaks::f_polynomial(n).to_string()}});
  }
  return 0;
}

int cmd_hvector(const Options& o, Format f) {
  const int n = require(o.n, "--n");
  const auto v = cpeaks::h_vector(n);
  if (f == Format::Csv) {
    std::vector<Row> rows;
    for (std::size_t k = 0; k < v.h.size(); ++k) rows.push_back({std::to_string(n), std::to_string(k), str(v.h[k])});
    print_csv({"n", "i", "h"}, rows);
  } else {
    print_json({{"n", n}, {"h", exact_array(v.h)}, {"polynomial", cpeaks::h_polynomial(n).to_string()}});
  }
  return 0;
}

// Shared by zeta and chains: value per i, with the brute-force count when the
// poset is small enough to enumerate.
struct OracleRow {
  int i;
  std::string value;
  std::optional<std::string> oracle;
};

int print_oracle_rows(int n, const std::vector<OracleRow>& rows, Format f, Json extra) {
  if (f == Format::Csv) {
    std::vector<Row> out;
    for (const auto& r : rows) {
      const std::string match = r.oracle ? (*r.oracle == r.value ? "true" : "false") : "";
      out.push_back({std::to_string(n), std::to_string(r.i), r.value, r.oracle.value_or(""), match});
    }
    print_csv({"n", "i", "value", "oracle_value", "match"}, out);
  } else {
    Json list = Json::array();
    for (const auto& r : rows) {
      Json j{{"i", r.i}, {"value", r.value}};
      j["oracle_value"] = r.oracle ? Json(*r.oracle) : Json(nullptr);
      j["match"] = r.oracle ? Json(*r.oracle == r.value) : Json(nullptr);
      list.push_back(j);
    }
    extra["values"] = list;
    print_json(extra);
  }
  bool ok = true;
  for (const auto& r : rows) ok = ok && (!r.oracle || *r.oracle == r.value);
  return ok ? 0 : 2;
}

int cmd_zeta(const Options& o, Format f) {
  const int n = require(o.n, "--n");
  cpeaks::detail::require_ambient(n);
  int lo = 2, hi = 6;
  if (o.i) lo = hi = *o.i;
  if (lo < 2) throw cpeaks::DomainError("--i must be at least 2");
  std::vector<OracleRow> rows;
  for (int i = lo; i <= hi; ++i) {
    OracleRow r{i, str(cpeaks::zeta(n, i)), std::nullopt};
    if (n <= cpeaks::kPosetCap) r.oracle = str(cpeaks::multichain_oracle(n, i - 1));
    rows.push_back(r);
  }
  return print_oracle_rows(n, rows, f, {{"n", n}, {"polynomial", cpeaks::zeta_polynomial(n).to_string()}});
}

int cmd_chains(const Options& o, Format f) {
  const int n = require(o.n, "--n");
  cpeaks::detail::require_ambient(n);
  int lo = 1, hi = cpeaks::max_peak_count(n) + 1;
  if (o.i) lo = hi = *o.i;
  if (lo < 1) throw cpeaks::DomainError("--i must be at least 1");
  std::vector<OracleRow> rows;
  for (int i = lo; i <= hi; ++i) {
    OracleRow r{i, str(cpeaks::chain_count(n, i)), std::nullopt};
    if (n <= cpeaks::kPosetCap) r.oracle = str(cpeaks::chain_oracle(n, i));
    rows.push_back(r);
  }
  return print_oracle_rows(n, rows, f, {{"n", n}});
}

int cmd_moebius(const Options& o, Format f) {
  const int n = require(o.n, "--n");
  cpeaks::detail::require_ambient(n);
  const cpeaks::PeakSet s = parse_set(n, o.set, "--set");
  const cpeaks::PeakSet t = parse_set(n, o.upper, "--upper");
  const int mu = cpeaks::moebius(s, t);
  const Integer oracle = cpeaks::moebius_recursive_oracle(s, t);
  const bool match = oracle == mu;
  if (f == Format::Csv) {
    print_csv({"n", "lower", "upper", "mu", "oracle", "match"},
              {{std::to_string(n), s.to_string(), t.to_string(), std::to_string(mu), str(oracle), match ? "true" : "false"}});
  } else {
    print_json({{"n", n},
                {"lower", set_json(s.elements())},
                {"upper", set_json(t.elements())},
                {"mu", std::to_string(mu)},
                {"oracle", str(oracle)},
                {"match", match}});
  }
  return match ? 0 : 2;
}

int cmd_euler(const Options& o, Format f) {
  const int n = require(o.n, "--n");
  const Rational chi = cpeaks::euler_characteristic(n);
  const Rational closed = cpeaks::euler_characteristic_closed_form(n);
  const bool match = chi == closed;
  if (f == Format::Csv) {
    print_csv({"n", "chi", "closed_form", "match"}, {{std::to_string(n), str(chi), str(closed), match ? "true" : "false"}});
  } else {
    print_json({{"n", n}, {"chi", str(chi)}, {"closed_form", str(closed)}, {"match", match}});
  }
  return match ? 0 : 2;
}

int cmd_hilbert(const Options& o, Format f) {
  const int n = require(o.n, "--n");
  cpeaks::detail::require_ambient(n);
  cpeaks::Algebra alg;
  if (o.algebra == "A") {
    alg = cpeaks::Algebra::A;
  } else if (o.algebra == "B") {
    alg = cpeaks::Algebra::B;
  } else {
    throw cpeaks::DomainError("--algebra must be A or B");
  }
  const int order = o.order.value_or(alg == cpeaks::Algebra::A ? 12 : cpeaks::max_peak_count(n) + 1);
  if (order < 0 || order > kHilbertOrderCap) {
    throw cpeaks::DomainError("--order must lie in [0, " + std::to_string(kHilbertOrderCap) + "]");
  }
  const auto g = cpeaks::graded_dimensions(n, alg, order);
  if (f == Format::Csv) {
    std::vector<Row> rows;
    for (std::size_t k = 0; k < g.dims.size(); ++k) {
      rows.push_back({std::to_string(n), o.algebra, std::to_string(k), str(g.dims[k])});
    }
    print_csv({"n", "algebra", "degree", "dim"}, rows);
    return 0;
  }
  Json j{{"n", n}, {"algebra", o.algebra}, {"order", order}, {"dims", exact_array(g.dims)}};
  if (alg == cpeaks::Algebra::A) {
    const auto form = cpeaks::numerator_a(n);
    j["hilbert_polynomial"] = cpeaks::hilbert_polynomial_a(n).to_string();
    j["numerator"] = coeff_array(form.numerator);
    j["denominator_exponent"] = form.denominator_exponent;
  } else {
    j["series"] = coeff_array(cpeaks::hilbert_series_b(n));
  }
  print_json(j);
  return 0;
}

int cmd_series(const Options& o, Format f) {
  const bool is_p = o.which == "P";
  if (!is_p && o.which != "H") throw cpeaks::DomainError("--which must be P or H");
  const int order = o.order.value_or(12);
  if (order < 3 || order > kSeriesOrderCap) {
    throw cpeaks::DomainError("--order must lie in [3, " + std::to_string(kSeriesOrderCap) + "]");
  }
  const cpeaks::BiSeries s = is_p ? cpeaks::f_generating_series(order) : cpeaks::h_generating_series(order);
  const auto report = is_p ? cpeaks::f_series_report(order) : cpeaks::h_series_report(order);
  if (f == Format::Csv) {
    std::vector<Row> rows;
    for (int n = 3; n <= order; ++n) {
      for (int k = 0; k <= s[n].degree(); ++k) rows.push_back({std::to_string(n), std::to_string(k), str(s[n].coeff(k))});
    }
    print_csv({"n", "k", "coefficient"}, rows);
    return 0;
  }
  Json coeffs = Json::array();
  for (int n = 3; n <= order; ++n) {
    coeffs.push_back({{"n", n}, {"polynomial", s[n].to_string()}, {"coefficients", coeff_array(s[n])}});
  }
  Json forms = Json::array();
  for (const auto& c : report) {
    Json r{{"form", c.label}, {"matches", c.matches()}, {"polynomial_expansion", c.polynomial_detail}};
    r["first_mismatch_n"] = c.first_mismatch_n == 0 ? Json(nullptr) : Json(c.first_mismatch_n);
    r["mismatch"] = c.mismatch_detail;
    forms.push_back(r);
  }
  print_json({{"which", o.which}, {"order", order}, {"series", coeffs}, {"closed_forms", forms}});
  return 0;
}

int cmd_verify(const Options& o, Format f) {
  const int max_n = o.max_n.value_or(16);
  const auto results = cpeaks::verify::run_suite(o.suite, max_n);
  const bool ok = cpeaks::verify::all_passed(results);
  if (f == Format::Csv) {
    std::vector<Row> rows;
    for (const auto& r : results) rows.push_back({r.suite, r.name, cpeaks::verify::to_string(r.status), r.detail});
    print_csv({"suite", "check", "status", "detail"}, rows);
  } else {
    Json list = Json::array();
    for (const auto& r : results) {
      list.push_back({{"suite", r.suite}, {"check", r.name}, {"status", cpeaks::verify::to_string(r.status)},
                      {"detail", r.detail}});
    }
    print_json({{"suite", o.suite}, {"max_n", max_n}, {"passed", ok}, {"checks", list}});
  }
  return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Circular peak sets of permutations, the complex P_n and its algebras"};
  app.require_subcommand(1);
  Options o;

  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "json (default) or csv")->check(CLI::IsMember({"json", "csv"}));
  };
  const auto sub = [&](const std::string& name, const std::string& help) {
    CLI::App* s = app.add_subcommand(name, help);
    add_format(s);
    return s;
  };

  auto* stats = sub("stats", "circular peak and descent sets of a permutation");
  stats->add_option("--perm", o.perm, "one-line notation, comma-separated")->required();

  auto* enum_cp = sub("enum-cp", "all permutations with a given peak set (n <= 10)");
  enum_cp->add_option("--n", o.n)->required();
  enum_cp->add_option("--set", o.set, "ascending comma-separated values")->required();

  auto* witness = sub("witness", "one permutation with the given peak set");
  witness->add_option("--n", o.n)->required();
  witness->add_option("--set", o.set)->required();

  auto* dyck = sub("dyck", "peak set to left factor of a Dyck path, or back with --word");
  dyck->add_option("--n", o.n);
  dyck->add_option("--set", o.set);
  dyck->add_option("--word", o.word, "word over U and D");

  auto* faces = sub("faces", "faces of P_n (n <= 14), all with covers or one dimension");
  faces->add_option("--n", o.n)->required();
  faces->add_option("--dim", o.dim);

  auto* fvector = sub("fvector", "face numbers p_{n,i}");
  fvector->add_option("--n", o.n)->required();

  auto* hvector = sub("hvector", "h-vector of P_n");
  hvector->add_option("--n", o.n)->required();

  auto* zeta = sub("zeta", "zeta polynomial values with the multichain count");
  zeta->add_option("--n", o.n)->required();
  zeta->add_option("--i", o.i);

  auto* chains = sub("chains", "number of chains with i faces, with the brute-force count");
  chains->add_option("--n", o.n)->required();
  chains->add_option("--i", o.i);

  auto* moebius = sub("moebius", "Moebius function on an interval [--set, --upper]");
  moebius->add_option("--n", o.n)->required();
  moebius->add_option("--set", o.set, "lower face")->required();
  moebius->add_option("--upper", o.upper, "upper face")->required();

  auto* euler = sub("euler", "reduced Euler characteristic");
  euler->add_option("--n", o.n)->required();

  auto* hilbert = sub("hilbert", "graded dimensions of the algebras A and B");
  hilbert->add_option("--n", o.n)->required();
  hilbert->add_option("--algebra", o.algebra, "A or B");
  hilbert->add_option("--order", o.order, "highest degree listed");

  auto* series = sub("series", "generating function coefficients for P or H");
  series->add_option("--which", o.which, "P or H");
  series->add_option("--order", o.order, "highest power of y");

  auto* verify = sub("verify", "run the verification suites");
  verify->add_option("--suite", o.suite, "perm, peaks, complex, chains, hvector, series, hilbert or all");
  verify->add_option("--max-n", o.max_n, "largest n given to brute-force oracles");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  const Format f = o.format == "csv" ? Format::Csv : Format::Json;
  try {
    if (stats->parsed()) return cmd_stats(o, f);
    if (enum_cp->parsed()) return cmd_enum_cp(o, f);
    if (witness->parsed()) return cmd_witness(o, f);
    if (dyck->parsed()) return cmd_dyck(o, f);
    if (faces->parsed()) return cmd_faces(o, f);
    if (fvector->parsed()) return cmd_fvector(o, f);
    if (hvector->parsed()) return cmd_hvector(o, f);
    if (zeta->parsed()) return cmd_zeta(o, f);
    if (chains->parsed()) return cmd_chains(o, f);
    if (moebius->parsed()) return cmd_moebius(o, f);
    if (euler->parsed()) return cmd_euler(o, f);
    if (hilbert->parsed()) return cmd_hilbert(o, f);
    if (series->parsed()) return cmd_series(o, f);
    if (verify->parsed()) return cmd_verify(o, f);
  } catch (const cpeaks::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
