#include "cevian/cli.hpp"

#include <fstream>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cevian/figures.hpp"
#include "cevian/oracle.hpp"
#include "cevian/search.hpp"

namespace cevian {
namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kDegenerate = 2;
constexpr int kDisagreement = 3;

std::vector<Param> parse_params(const std::vector<std::string>& texts) {
  std::vector<Param> out;
  out.reserve(texts.size());
  for (const std::string& text : texts) out.push_back(Param::parse(text));
  return out;
}

ordered_json fraction_record(const RatioResult& r) {
  return ordered_json{{"numerator", r.value.get_num().get_str()},
                      {"denominator", r.value.get_den().get_str()},
                      {"degenerate", r.degenerate_numerator}};
}

ordered_json point_record(const HPoint& p) {
  return ordered_json{{"X", p.X.get_str()}, {"Y", p.Y.get_str()}, {"W", p.W.get_str()}};
}

void emit_json(std::ostream& out, const std::string& command,
               const ordered_json& inputs, const ordered_json& result,
               const ordered_json& degenerate) {
  ordered_json doc{{"command", command},
                   {"inputs", inputs},
                   {"result", result},
                   {"degenerate", degenerate}};
  out << doc.dump() << "\n";
}

int report_degeneracy(const DegeneracyError& e, const std::string& command,
                      const ordered_json& inputs, bool json, std::ostream& out,
                      std::ostream& err) {
  if (json) {
    emit_json(out, command, inputs, nullptr, e.what());
  }
  err << e.what() << "\n";
  return kDegenerate;
}

int cmd_ratio(const std::vector<std::string>& texts, const std::string& mode,
              bool json, std::ostream& out, std::ostream& err) {
  size_t expected = mode == "general" ? 6 : 3;
  if (texts.size() != expected) {
    err << "ratio with --mode " << mode << " takes " << expected
        << " parameters, got " << texts.size() << "\n";
    return kUsage;
  }
  std::vector<Param> p = parse_params(texts);
  ordered_json inputs(texts);
  try {
    RatioResult r = mode == "routh"    ? routh_ratio(p[0], p[1], p[2])
                    : mode == "cevial" ? cevial_ratio(p[0], p[1], p[2])
                                       : generalized_ratio(RouthConfig{p[0], p[1], p[2],
                                                                       p[3], p[4], p[5]});
    if (json) {
      emit_json(out, "ratio", inputs, fraction_record(r), false);
    } else {
      out << to_string(r.value) << "\n";
    }
    return kOk;
  } catch (const DegeneracyError& e) {
    return report_degeneracy(e, "ratio", inputs, json, out, err);
  }
}

int cmd_points(const std::vector<std::string>& texts, bool json, std::ostream& out,
               std::ostream& err) {
  if (texts.size() != 6) {
    err << "points takes 6 parameters, got " << texts.size() << "\n";
    return kUsage;
  }
  std::vector<Param> p = parse_params(texts);
  RouthConfig cfg{p[0], p[1], p[2], p[3], p[4], p[5]};
  ordered_json inputs(texts);
  try {
    auto [hp, hq, hr] = generalized_routh_points(Triangle::canonical(), cfg);
    if (json) {
      ordered_json result{{"P", point_record(hp)}, {"Q", point_record(hq)},
                          {"R", point_record(hr)}};
      emit_json(out, "points", inputs, result, false);
    } else {
      const std::pair<const char*, const HPoint&> rows[] = {
          {"P", hp}, {"Q", hq}, {"R", hr}};
      for (const auto& [name, pt] : rows) {
        Vec2 a = pt.affine();
        out << name << " = (" << to_string(a.x) << ", " << to_string(a.y) << ")\n";
      }
    }
    return kOk;
  } catch (const DegeneracyError& e) {
    return report_degeneracy(e, "points", inputs, json, out, err);
  }
}

int cmd_check(std::uint64_t seed, std::size_t count, bool json, std::ostream& out,
              std::ostream& err) {
  std::vector<RouthConfig> corpus = config_corpus(seed, count);
  Triangle host = Triangle::canonical();
  std::size_t disagreements = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    VerificationReport report = verify_config(host, corpus[i]);
    if (!report.agree && disagreements++ == 0) {
      err << "disagreement on config " << i << " (x=" << corpus[i].x.str()
          << " y=" << corpus[i].y.str() << " z=" << corpus[i].z.str()
          << " u=" << corpus[i].u.str() << " v=" << corpus[i].v.str()
          << " w=" << corpus[i].w.str() << ")\n";
    }
  }
  if (json) {
    ordered_json inputs{std::to_string(seed), std::to_string(count)};
    ordered_json result{{"checked", std::to_string(corpus.size())},
                        {"disagreements", std::to_string(disagreements)}};
    emit_json(out, "check", inputs, result, false);
  } else {
    out << "checked " << corpus.size() << " configs: "
        << (disagreements == 0 ? "all agree"
                               : std::to_string(disagreements) + " disagreements")
        << "\n";
  }
  return disagreements == 0 ? kOk : kDisagreement;
}

std::string param_list(const std::vector<Param>& ps) {
  std::string out = "(";
  for (size_t i = 0; i < ps.size(); ++i) {
    if (i) out += ",";
    out += ps[i].str();
  }
  return out + ")";
}

ordered_json hit_record(const SearchHit& hit) {
  ordered_json coeffs = ordered_json::array();
  for (const Param& p : hit.coefficients) coeffs.push_back(p.str());
  ordered_json rec{{"coefficients", coeffs},
                   {"ratio", to_string(hit.ratio)},
                   {"orbit_representative", hit.orbit_representative}};
  if (hit.trivial) rec["trivial"] = true;
  return rec;
}

void print_grouped(const std::map<Rational, std::vector<SearchHit>>& groups,
                   std::ostream& out) {
  for (const auto& [ratio, hits] : groups) {
    out << to_string(ratio) << ":";
    for (const SearchHit& hit : hits) out << " " << param_list(hit.coefficients);
    out << "\n";
  }
}

ordered_json grouped_json(const std::map<Rational, std::vector<SearchHit>>& groups) {
  ordered_json result = ordered_json::array();
  for (const auto& [ratio, hits] : groups) {
    ordered_json entry{{"ratio", to_string(ratio)}, {"hits", ordered_json::array()}};
    for (const SearchHit& hit : hits) entry["hits"].push_back(hit_record(hit));
    result.push_back(entry);
  }
  return result;
}

int cmd_search(const std::string& family, const std::string& range_text,
               bool reciprocals, bool json, std::ostream& out, std::ostream& err) {
  if (family == "equal-int") {
    size_t dots = range_text.find("..");
    long lo = 0, hi = 0;
    try {
      if (dots == std::string::npos) throw std::invalid_argument(range_text);
      lo = std::stol(range_text.substr(0, dots));
      hi = std::stol(range_text.substr(dots + 2));
    } catch (const std::exception&) {
      err << "--range expects A..B with integer bounds, got \"" << range_text << "\"\n";
      return kUsage;
    }
    if (lo > hi) {
      err << "--range expects A <= B\n";
      return kUsage;
    }
    std::vector<SearchHit> hits = scan_equal_integer(lo, hi);
    if (json) {
      ordered_json result = ordered_json::array();
      for (const SearchHit& hit : hits) result.push_back(hit_record(hit));
      emit_json(out, "search", ordered_json{family, range_text}, result, false);
    } else {
      for (const SearchHit& hit : hits) {
        out << "n=" << hit.coefficients[0].str() << " ratio=" << to_string(hit.ratio)
            << (hit.trivial ? " (trivial)" : "") << "\n";
      }
      out << hits.size() << " hit(s) in [" << lo << ", " << hi << "]\n";
    }
    return kOk;
  }
  if (family == "digit-triples") {
    auto groups = scan_digit_triples();
    if (json) {
      emit_json(out, "search", ordered_json{family}, grouped_json(groups), false);
    } else {
      print_grouped(groups, out);
    }
    return kOk;
  }
  if (family == "pairs") {
    auto groups = scan_generalized_pairs(reciprocals);
    ordered_json inputs{family, reciprocals ? "with-reciprocals" : "digits-only"};
    if (json) {
      emit_json(out, "search", inputs, grouped_json(groups), false);
    } else {
      print_grouped(groups, out);
    }
    return kOk;
  }
  err << "--family must be one of equal-int, digit-triples, pairs\n";
  return kUsage;
}

int cmd_figure(const std::vector<std::string>& texts, const std::string& svg_out,
               std::ostream& out, std::ostream& err) {
  if (texts.size() != 6) {
    err << "figure takes 6 parameters, got " << texts.size() << "\n";
    return kUsage;
  }
  std::vector<Param> p = parse_params(texts);
  FigureSpec spec{Triangle::canonical(),
                  RouthConfig{p[0], p[1], p[2], p[3], p[4], p[5]},
                  FigureOptions{}};
  std::string svg = emit_svg(spec);
  if (svg_out.empty()) {
    out << svg;
  } else {
    std::ofstream file(svg_out, std::ios::binary);
    if (!file) {
      err << "cannot open " << svg_out << " for writing\n";
      return kUsage;
    }
    file << svg;
    out << "svg written to " << svg_out << "\n";
  }
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact cevian geometry toolkit"};
  app.name("cevian-lab");
  app.require_subcommand(1);

  std::vector<std::string> params;
  std::string mode = "general";
  std::string family, svg_path;
  std::string range_text = "1..10000";
  bool json = false, reciprocals = false;
  std::uint64_t seed = 20240901;
  std::size_t count = 1000;

  CLI::App* ratio = app.add_subcommand("ratio", "signed area ratio of the inner triangle");
  ratio->add_option("params", params, "cevian parameters (x y z u v w, or x y z with --mode)");
  ratio->add_option("--mode", mode)->check(CLI::IsMember({"routh", "cevial", "general"}));
  ratio->add_flag("--json", json);

  CLI::App* points = app.add_subcommand("points", "intersection points P, Q, R");
  points->add_option("params", params, "cevian parameters x y z u v w");
  points->add_flag("--json", json);

  CLI::App* check = app.add_subcommand("check", "closed form vs coordinate oracle");
  check->add_option("--seed", seed);
  check->add_option("--count", count);
  check->add_flag("--json", json);

  CLI::App* search = app.add_subcommand("search", "coefficient scans");
  search->add_option("--family", family)->required();
  search->add_option("--range", range_text);
  search->add_flag("--reciprocals", reciprocals);
  search->add_flag("--json", json);

  CLI::App* figure = app.add_subcommand("figure", "SVG rendering of a configuration");
  figure->add_option("params", params, "cevian parameters x y z u v w");
  figure->add_option("--svg-out", svg_path);

  std::vector<const char*> argv;
  argv.push_back("cevian-lab");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return kUsage;
  }

  try {
    if (ratio->parsed()) return cmd_ratio(params, mode, json, out, err);
    if (points->parsed()) return cmd_points(params, json, out, err);
    if (check->parsed()) return cmd_check(seed, count, json, out, err);
    if (search->parsed()) return cmd_search(family, range_text, reciprocals, json, out, err);
    if (figure->parsed()) return cmd_figure(params, svg_path, out, err);
  } catch (const ParseError& e) {
    err << e.what() << "\n";
    return kUsage;
  } catch (const DegeneracyError& e) {
    err << e.what() << "\n";
    return kDegenerate;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return kDegenerate;
  }
  return kUsage;
}

}  // namespace cevian
