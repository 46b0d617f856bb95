// k3bps: tables, series and verification suites from the command line.
//
// Every rational is printed as "p/q" (or "n"); series print as ordered
// {"k/N": "p/q"} maps plus their truncation.  Output order is fixed.

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "k3bps/bpsconvert.hpp"
#include "k3bps/kawaiyoshioka.hpp"
#include "k3bps/kkv.hpp"
#include "k3bps/lattice.hpp"
#include "k3bps/multicover.hpp"
#include "k3bps/nlnumbers.hpp"

using json = nlohmann::ordered_json;
using namespace k3bps;

namespace {

enum class Format { Json, Csv };

struct RunConfig {
  long hmax = 6;
  int gmax = 4;
  long mmax = 3;
  long dmax = 3;
  long q_order = 10;
  long y_order = 10;
  long lambda_order = 12;
  Format format = Format::Json;
  std::string out;
  std::string gram;
  long h = 1;
  std::vector<long> degrees;
  std::string suite = "all";
};

// A command result: records for csv, a json document for json.
struct Output {
  json doc;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

std::string csv_cell(const json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : " ") + csv_cell(x);
    return s;
  }
  return v.dump();
}

// json records -> csv rows with the keys of the first record as header
void add_records(Output& o, const json& records) {
  if (records.empty()) return;
  if (o.columns.empty())
    for (const auto& [k, v] : records.front().items()) o.columns.push_back(k);
  for (const auto& rec : records) {
    std::vector<std::string> row;
    for (const auto& c : o.columns) row.push_back(rec.contains(c) ? csv_cell(rec[c]) : "");
    o.rows.push_back(std::move(row));
  }
}

json series_json(const FracSeries& s) {
  const auto t = to_text(s);
  json terms = json::object();
  for (const auto& [e, c] : t.terms) terms[e] = c;
  json out;
  out["grid"] = t.grid;
  out["truncation"] = t.truncation ? json(*t.truncation) : json(nullptr);
  out["terms"] = terms;
  return out;
}

json series_records(const FracSeries& s, json base = json::object()) {
  json out = json::array();
  for (const auto& [e, c] : to_text(s).terms) {
    json r = base;
    r["exponent"] = e;
    r["coefficient"] = c;
    out.push_back(r);
  }
  return out;
}

void write(const RunConfig& cfg, const Output& o) {
  std::ostringstream text;
  if (cfg.format == Format::Json) {
    text << o.doc.dump(2) << "\n";
  } else {
    for (std::size_t i = 0; i < o.columns.size(); ++i) text << (i ? "," : "") << o.columns[i];
    text << "\n";
    for (const auto& row : o.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) text << (i ? "," : "") << row[i];
      text << "\n";
    }
  }
  if (cfg.out.empty()) {
    std::cout << text.str();
  } else {
    std::ofstream f(cfg.out);
    if (!f) throw std::runtime_error("cannot write " + cfg.out);
    f << text.str();
  }
}

Output kkv_table(const RunConfig& cfg) {
  const auto r = extract_r_table(cfg.hmax);
  json recs = json::array();
  for (const auto& [key, v] : r.entries()) recs.push_back({{"g", key.first}, {"h", key.second}, {"r", to_string(v)}});
  Output o;
  o.doc = recs;
  add_records(o, recs);
  return o;
}

Output yau_zaslow_cmd(const RunConfig& cfg) {
  const auto s = yau_zaslow(cfg.q_order);
  Output o;
  o.doc = series_json(s);
  add_records(o, series_records(s));
  return o;
}

Output ky_cmd(const RunConfig& cfg) {
  const auto t = ky_table(cfg.q_order, cfg.y_order);
  json recs = json::array();
  for (const auto& [key, v] : t.entries())
    recs.push_back({{"h", key.second}, {"n", key.first}, {"euler", to_string(v)}});
  Output o;
  o.doc = recs;
  add_records(o, recs);
  return o;
}

Output i_series_cmd(const RunConfig& cfg) {
  Output o;
  o.doc = json::array();
  json recs = json::array();
  for (long h = 0; h <= cfg.hmax; ++h) {
    const auto s = i_series(h, cfg.y_order);
    o.doc.push_back({{"h", h}, {"series", series_json(s)}});
    for (auto& r : series_records(s, {{"h", h}})) recs.push_back(r);
  }
  add_records(o, recs);
  return o;
}

Output rtilde_cmd(const RunConfig& cfg) {
  Output o;
  o.doc = json::array();
  json recs = json::array();
  for (long m = 1; m <= cfg.mmax; ++m) {
    const auto s = rtilde_multiple(static_cast<int>(m), cfg.h, cfg.q_order).series;
    o.doc.push_back({{"m", m}, {"h", cfg.h}, {"series", series_json(s)}});
    for (auto& r : series_records(s, {{"m", m}, {"h", cfg.h}})) recs.push_back(r);
  }
  add_records(o, recs);
  return o;
}

Output quartic_theta_cmd(const RunConfig& cfg) {
  const auto s = theta_quartic(8 * cfg.q_order);
  Output o;
  o.doc = series_json(s);
  add_records(o, series_records(s));
  return o;
}

Output quartic_bps_cmd(const RunConfig& cfg) {
  const long top = (cfg.dmax * cfg.dmax + 8) / 8;
  const auto r = extract_r_table(top);
  const auto p = quartic_provider();
  json nl = json::array(), bps = json::array();
  for (long d = 1; d <= cfg.dmax; ++d)
    for (long h = 0; quartic_discriminant(h, d) >= 0; ++h)
      nl.push_back({{"m", nullptr}, {"h", h}, {"d", {d}}, {"value", to_string(nl_quartic(h, d))}});
  for (int g = 0; g <= cfg.gmax; ++g)
    for (long d = 1; d <= cfg.dmax; ++d)
      bps.push_back({{"g", g}, {"d", {d}}, {"n", to_string(gwnl_forward(r, p, g, {d}))}});
  Output o;
  o.doc = {{"nl", nl}, {"bps", bps}};
  add_records(o, bps);
  return o;
}

Output dictionary_cmd(const RunConfig& cfg, bool& ok) {
  json recs = json::array();
  for (int g = 0; g <= cfg.gmax; ++g)
    for (long d = 1; d <= cfg.dmax; ++d) {
      const bool pass = dictionary_check(g, static_cast<int>(d), cfg.lambda_order);
      ok = ok && pass;
      recs.push_back({{"g", g}, {"d", d}, {"lambda_order", cfg.lambda_order}, {"pass", pass}});
    }
  Output o;
  o.doc = recs;
  add_records(o, recs);
  return o;
}

EvenLattice read_gram(const std::string& path) {
  if (path.empty()) throw Error(ErrorCode::InvalidArgument, "--gram FILE is required");
  std::ifstream f(path);
  if (!f) throw Error(ErrorCode::InvalidArgument, "cannot read " + path);
  const auto j = nlohmann::json::parse(f);
  const auto rank = j.at("rank").get<std::size_t>();
  ZMatrix gram;
  for (const auto& row : j.at("gram")) {
    ZVector r;
    for (const auto& c : row) r.emplace_back(c.get<long>());
    gram.push_back(std::move(r));
  }
  if (gram.size() != rank) throw Error(ErrorCode::InvalidArgument, "rank does not match the gram matrix");
  return EvenLattice(std::move(gram));
}

ZVector degree_vector(const RunConfig& cfg) {
  ZVector d;
  for (long x : cfg.degrees) d.emplace_back(x);
  return d;
}

json int_array(const std::vector<Integer>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

Output lattice_disc(const RunConfig& cfg) {
  const auto L = read_gram(cfg.gram);
  const auto g = discriminant_group(L);
  json classes = json::array();
  for (const auto& c : g.classes) classes.push_back(c.to_string());
  Output o;
  o.doc = {{"rank", L.rank()},
           {"discriminant", to_string(lattice_discriminant(L))},
           {"group_order", to_string(g.order)},
           {"invariant_factors", int_array(g.invariant_factors)},
           {"classes", classes}};
  add_records(o, json::array({o.doc}));
  return o;
}

Output lattice_coset(const RunConfig& cfg) {
  const auto L = read_gram(cfg.gram);
  const auto d = degree_vector(cfg);
  const auto c = coset_of_degrees(L, d);
  const auto v = vector_of_degrees(L, d);
  Output o;
  o.doc = {{"d", cfg.degrees},
           {"coset", c.to_string()},
           {"vector", v ? int_array(*v) : json(nullptr)},
           {"extended_discriminant", to_string(extended_discriminant(L, cfg.h, d))}};
  add_records(o, json::array({o.doc}));
  return o;
}

Output lattice_multiplicity(const RunConfig& cfg) {
  const auto L = read_gram(cfg.gram);
  const auto d = degree_vector(cfg);
  json recs = json::array();
  for (const auto& [t, n] : nl_types(L, cfg.h, d))
    recs.push_back({{"disc", to_string(t.disc)}, {"coset", t.coset.to_string()}, {"count", to_string(n)}});
  Output o;
  o.doc = recs;
  add_records(o, recs);
  return o;
}

// --- verification suites ---------------------------------------------------

struct Check {
  std::string suite, name;
  bool pass;
  std::string detail;
};

std::string mismatch_text(const FracSeries& a, const FracSeries& b) {
  const auto e = first_mismatch(a, b);
  if (!e) return "";
  return "first mismatch at exponent " + to_string(*e) + ": " + to_string(a.coeff(*e)) + " vs " +
         to_string(b.coeff(*e));
}

void verify_kkv(std::vector<Check>& out) {
  const auto r = extract_r_table(4);
  const long golden[5][5] = {
      {1, 24, 324, 3200, 25650}, {0, -2, -54, -800, -8550}, {0, 0, 3, 88, 1401}, {0, 0, 0, -4, -126}, {0, 0, 0, 0, 5}};
  for (int g = 0; g <= 4; ++g)
    for (long h = g; h <= 4; ++h) {
      const bool pass = r.at(g, h) == golden[g][h];
      out.push_back({"kkv", "r(" + std::to_string(g) + "," + std::to_string(h) + ")", pass,
                     pass ? "" : "got " + to_string(r.at(g, h)) + ", expected " + std::to_string(golden[g][h])});
    }
}

void verify_ky(std::vector<Check>& out, const RunConfig& cfg) {
  const auto r = extract_r_table(cfg.hmax);
  for (long h = 0; h <= cfg.hmax; ++h) {
    const long w = cross_check_window(h);
    const bool pass = kkv_cross_check(h, r, w);
    std::string detail;
    if (!pass) {
      const auto rt = pairs_table_from_bps(r, h, 1);
      detail = mismatch_text(i_series(h, w), pairs_from_bps(rt, h, 1, w).by_m.at(1));
    }
    out.push_back({"ky", "row h=" + std::to_string(h), pass, detail});
  }
}

void verify_dictionary(std::vector<Check>& out) {
  for (int g = 0; g <= 4; ++g)
    for (int d = 1; d <= 3; ++d)
      out.push_back({"dictionary", "g=" + std::to_string(g) + " d=" + std::to_string(d), dictionary_check(g, d, 12),
                     ""});
}

void verify_multicover(std::vector<Check>& out, const RunConfig& cfg) {
  for (auto [m, h] : std::vector<std::pair<int, long>>{{2, 1}, {2, 2}, {3, 1}})
    out.push_back({"multicover", "divisibility m=" + std::to_string(m) + " h=" + std::to_string(h),
                   divisibility_independence_check(m, h, cfg.q_order), ""});
  const auto r = extract_r_table(10);
  for (long h : {1L, 2L})
    out.push_back({"multicover", "pairs/GW h=" + std::to_string(h), theorem2_check(r, h, 3, 10), ""});
  for (long h = 0; h <= cfg.hmax; ++h) {
    bool pass = true;
    std::string detail;
    try {
      const auto w = rationality_witness(h, cross_check_window(h));
      pass = w.degree_bound <= h;
      if (!pass) detail = "degree " + std::to_string(w.degree_bound);
    } catch (const Error& e) {
      pass = false;
      detail = e.what();
    }
    out.push_back({"multicover", "rationality h=" + std::to_string(h), pass, detail});
  }
}

void verify_recursion(std::vector<Check>& out, const RunConfig& cfg) {
  for (int m = 1; m <= 4; ++m)
    out.push_back({"recursion", "multiple-cover inputs m=" + std::to_string(m), recursion_check(m, 1, cfg.q_order), ""});
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> c(-9, 9);
  int passed = 0;
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<FracSeries> rt;
    for (int k = 1; k <= 4; ++k) {
      std::map<long, Rational> t;
      for (long e = -1; e < 6; ++e) t[e] = Rational(c(rng));
      rt.emplace_back(1, std::move(t), 6);
    }
    passed += recursion_check(rt) ? 1 : 0;
  }
  out.push_back({"recursion", "synthetic inputs", passed == 20, std::to_string(passed) + "/20"});
}

void verify_nl(std::vector<Check>& out) {
  const auto theta = theta_quartic(17);
  const std::pair<Rational, long> shown[] = {
      {Rational(0), -1}, {Rational(1), 108}, {make_rational(9, 8), 320}, {Rational(2), 76950}};
  for (const auto& [e, v] : shown) {
    const bool pass = theta.coeff(e) == v;
    out.push_back({"nl", "theta[" + to_string(e) + "]", pass, pass ? "" : "got " + to_string(theta.coeff(e))});
  }
  bool sym = true;
  for (long h = 0; h <= 4; ++h)
    for (long d = 1; d <= 6; ++d) sym = sym && nl_quartic(h, d) == nl_quartic(h, -d);
  out.push_back({"nl", "quartic NL symmetric in d", sym, ""});
  const auto p = pi3_provider({});
  bool lead = true;
  for (long m = 1; m <= 3; ++m)
    for (long s = 1; s <= 3; ++s) {
      const long h = m * m * (s - 1) + 1;
      lead = lead && nl_number(p, m, h, pi3_degrees(m, s)) == -2 && nl_number(p, m + 1, h, pi3_degrees(m, s)) == 0;
    }
  out.push_back({"nl", "pi3 degenerate NL numbers", lead, ""});
  // Forward/inverse on a synthetic lower-triangular table.
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> v(-9, 9);
  NLTable table;
  RefinedBPSTable r;
  for (long h = 1; h <= 6; ++h)
    for (long m = 1; m <= 2; ++m) {
      if ((h - 1) % (m * m) != 0) continue;
      for (int g = 0; g <= 2; ++g) r.set(g, m, h, Rational(v(rng)));
      const auto d = pi3_degrees(m, (h - 1) / (m * m) + 1);
      for (long hp = 0; hp < h; ++hp)
        for (long mp = 1; mp <= m; ++mp)
          if (m % mp == 0) table[{mp, hp, d}] = Rational(v(rng));
    }
  const auto prov = pi3_provider(table);
  FiberBPSTable n;
  for (long h = 1; h <= 6; ++h)
    for (long m = 1; m <= 2; ++m) {
      if ((h - 1) % (m * m) != 0) continue;
      const auto d = pi3_degrees(m, (h - 1) / (m * m) + 1);
      for (int g = 0; g <= 2; ++g) n[{g, d}] = to_integer(gwnl_forward(r, prov, g, d));
    }
  const auto back = gwnl_invert(n, prov, 2, 2, 6);
  bool same = true;
  for (const auto& [key, val] : r.entries()) {
    const auto& [g, m, h] = key;
    same = same && back.at(g, m, h) == val;
  }
  out.push_back({"nl", "GW/NL inversion roundtrip", same, ""});
}

Output verify_cmd(const RunConfig& cfg, bool& ok) {
  std::vector<Check> checks;
  const std::string& s = cfg.suite;
  const bool all = s == "all";
  if (all || s == "kkv") verify_kkv(checks);
  if (all || s == "ky") verify_ky(checks, cfg);
  if (all || s == "dictionary") verify_dictionary(checks);
  if (all || s == "multicover") verify_multicover(checks, cfg);
  if (all || s == "recursion") verify_recursion(checks, cfg);
  if (all || s == "nl") verify_nl(checks);
  json recs = json::array();
  for (const auto& c : checks) {
    ok = ok && c.pass;
    recs.push_back({{"suite", c.suite}, {"check", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  }
  Output o;
  o.doc = recs;
  add_records(o, recs);
  return o;
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--hmax", cfg.hmax, "largest h")->check(CLI::NonNegativeNumber);
  sub->add_option("--gmax", cfg.gmax, "largest genus")->check(CLI::NonNegativeNumber);
  sub->add_option("--mmax", cfg.mmax, "largest multiple")->check(CLI::PositiveNumber);
  sub->add_option("--dmax", cfg.dmax, "largest degree")->check(CLI::PositiveNumber);
  sub->add_option("--q-order", cfg.q_order, "q truncation exponent")->check(CLI::PositiveNumber);
  sub->add_option("--y-order", cfg.y_order, "y truncation exponent")->check(CLI::PositiveNumber);
  sub->add_option("--lambda-order", cfg.lambda_order, "lambda expansion order (inclusive)")
      ->check(CLI::PositiveNumber);
  sub->add_option_function<std::string>(
         "--format", [&cfg](const std::string& v) { cfg.format = v == "csv" ? Format::Csv : Format::Json; },
         "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--out", cfg.out, "write to FILE instead of standard output");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"K3 BPS tables, series and checks"};
  app.set_help_flag("--help", "print help");  // -h would clash with --h
  app.require_subcommand(1);
  RunConfig cfg;
  std::function<Output(bool&)> run;

  auto simple = [&](const char* name, const char* help, auto fn) {
    auto* sub = app.add_subcommand(name, help);
    add_common(sub, cfg);
    sub->callback([&run, &cfg, fn] { run = [&cfg, fn](bool&) { return fn(cfg); }; });
    return sub;
  };
  simple("kkv-table", "r_{g,h} for h <= hmax", kkv_table);
  simple("yau-zaslow", "prod (1-q^n)^{-24}", yau_zaslow_cmd);
  simple("ky", "Euler characteristics of stable-pair spaces", ky_cmd);
  simple("i-series", "signed residue series t*I_h for h <= hmax", i_series_cmd);
  auto* rt = simple("rtilde", "multiple-cover series R~ for m <= mmax", rtilde_cmd);
  rt->add_option("--h", cfg.h, "class label h of the primitive class");
  simple("quartic-theta", "Theta on the q^{1/8} grid through q-order", quartic_theta_cmd);
  simple("quartic-bps", "NL numbers and n_{g,d} of the quartic pencil", quartic_bps_cmd);

  auto* dict = app.add_subcommand("dictionary-check", "sine basis against the q basis");
  add_common(dict, cfg);
  dict->callback([&] { run = [&cfg](bool& ok) { return dictionary_cmd(cfg, ok); }; });

  auto* lat = app.add_subcommand("lattice", "discriminants, cosets and refined multiplicities");
  lat->require_subcommand(1);
  auto lattice_sub = [&](const char* name, const char* help, auto fn) {
    auto* sub = lat->add_subcommand(name, help);
    add_common(sub, cfg);
    sub->add_option("--gram", cfg.gram, "JSON file {\"rank\": r, \"gram\": [[...]]}")->required();
    sub->add_option("--h", cfg.h, "h");
    sub->add_option("--degrees", cfg.degrees, "degrees d_1 .. d_r")->delimiter(',');
    sub->callback([&run, &cfg, fn] { run = [&cfg, fn](bool&) { return fn(cfg); }; });
  };
  lattice_sub("disc", "discriminant and discriminant group", lattice_disc);
  lattice_sub("coset", "coset and lattice vector of a degree vector", lattice_coset);
  lattice_sub("multiplicity", "types and multiplicities for (h, d)", lattice_multiplicity);

  auto* ver = app.add_subcommand("verify", "run a verification suite");
  add_common(ver, cfg);
  ver->add_option("suite", cfg.suite, "kkv, ky, dictionary, multicover, recursion, nl or all")
      ->check(CLI::IsMember({"kkv", "ky", "dictionary", "multicover", "recursion", "nl", "all"}));
  ver->callback([&] { run = [&cfg](bool& ok) { return verify_cmd(cfg, ok); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    bool ok = true;
    const Output o = run(ok);
    write(cfg, o);
    return ok ? 0 : 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
