// paff — exact piecewise-affine circle map toolkit.
//
// Subcommands:
//   verify      check the tower identities for one or more beta values
//   lemma1      build a logarithmic-length word for a rotation power and
//               check it against the rotation on the arc (0, a)
//   distortion  emit the word-length growth table (CSV, optional SVG/JSON)
//   expand      print the expanded rotation identity and its exponent data
//
// Exit codes: 0 success/verified, 1 verification failed, 2 bad input,
// 3 I/O failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <paff/distortion.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;
using namespace paff;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitIoError = 3;

std::string svg_chart(const std::vector<DistortionRow>& rows) {
  const double width = 640, height = 400, margin = 60;
  double max_x = 1, max_y = 1;
  for (const auto& r : rows) {
    max_x = std::max(max_x, std::log2(static_cast<double>(r.n)));
    max_y = std::max(max_y, static_cast<double>(r.word_len));
  }
  auto px = [&](double x) { return margin + x / max_x * (width - 2 * margin); };
  auto py = [&](double y) { return height - margin - y / max_y * (height - 2 * margin); };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << height << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<line x1=\"" << margin << "\" y1=\"" << height - margin << "\" x2=\""
      << width - margin << "\" y2=\"" << height - margin << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << margin << "\" y1=\"" << margin << "\" x2=\"" << margin << "\" y2=\""
      << height - margin << "\" stroke=\"black\"/>\n";
  out << "<text x=\"" << width / 2 << "\" y=\"" << height - margin / 3
      << "\" text-anchor=\"middle\" font-size=\"12\">log2(n)</text>\n";
  out << "<text x=\"" << margin / 3 << "\" y=\"" << height / 2 << "\" font-size=\"12\" "
      << "transform=\"rotate(-90 " << margin / 3 << " " << height / 2
      << ")\" text-anchor=\"middle\">word length</text>\n";
  out << "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"2\" points=\"";
  for (const auto& r : rows)
    out << px(std::log2(static_cast<double>(r.n))) << ","
        << py(static_cast<double>(r.word_len)) << " ";
  out << "\"/>\n";
  for (const auto& r : rows) {
    double x = px(std::log2(static_cast<double>(r.n)));
    double y = py(static_cast<double>(r.word_len));
    out << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"3\" fill=\"steelblue\"/>\n";
    out << "<text x=\"" << x << "\" y=\"" << y - 8 << "\" font-size=\"11\" "
        << "text-anchor=\"middle\">n=" << r.n << " (" << r.word_len << ")</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

int cmd_verify(const std::vector<std::string>& beta_args, const QuadIrr& alpha, bool as_json) {
  bool all_ok = true;
  json out = json::array();
  for (const auto& text : beta_args) {
    AlphaVal beta(parse_rational(text));
    TowerReport report = verify_tower(beta, alpha);
    all_ok = all_ok && report.overall;
    if (as_json) {
      json checks;
      for (const auto& [name, ok] : report.checks) checks[name] = ok;
      out.push_back({{"beta", text}, {"checks", checks}, {"overall", report.overall}});
    } else {
      std::cout << "beta: " << text << "\n";
      for (const auto& [name, ok] : report.checks)
        std::cout << name << ": " << (ok ? "true" : "false") << "\n";
      std::cout << "overall: " << (report.overall ? "true" : "false") << "\n\n";
    }
  }
  if (as_json) std::cout << out.dump(2) << "\n";
  return all_ok ? kExitOk : kExitVerificationFailed;
}

int cmd_lemma1(long long n, const std::string& a_text, long m, const QuadIrr& alpha,
               bool dump) {
  RotationWordCtx ctx(AlphaVal::alpha_times(1), parse_rational(a_text), m,
                      RotationWordCtx::Names{"T_alpha", "h", "r"}, alpha);
  Assignment env;
  ctx.add_to(env);
  Word w = ctx.h_word(n);
  PAHomeo got = evaluate(w, env, alpha);
  AlphaVal target = floor_frac(AlphaVal::alpha_times(Rational(static_cast<long>(n))), alpha).frac;
  PAHomeo want = PAHomeo::rotation(target, alpha);
  bool agrees = agrees_on(got, want, CirclePoint{}, CirclePoint{AlphaVal(ctx.threshold())}, alpha);

  std::cout << "n: " << n << "\n";
  std::cout << "a: " << rational_to_string(ctx.threshold()) << "\n";
  std::cout << "m: " << ctx.steps() << "\n";
  std::cout << "word_length: " << word_length(w) << "\n";
  std::cout << "length_bound: " << ctx.length_bound(n) << "\n";
  std::cout << "frac_n_gamma: " << to_decimal(target, alpha, 12) << "\n";
  std::cout << "agrees_on_interval: " << (agrees ? "true" : "false") << "\n";
  if (dump) {
    std::cout << "word: " << word_to_text(w) << "\n";
    std::cout << "map:\n" << to_string(got);
  }
  return agrees ? kExitOk : kExitVerificationFailed;
}

int cmd_distortion(int count, const QuadIrr& alpha, const std::string& csv_path,
                   const std::string& svg_path, const std::string& json_path) {
  auto rows = distortion_table(alpha, count);

  auto open_out = [](const std::string& path, std::ofstream& file) -> bool {
    file.open(path, std::ios::binary);
    return file.good();
  };

  if (csv_path.empty()) {
    write_csv(rows, alpha, std::cout);
  } else {
    std::ofstream file;
    if (!open_out(csv_path, file)) {
      std::cerr << "error: cannot write '" << csv_path << "'\n";
      return kExitIoError;
    }
    write_csv(rows, alpha, file);
    if (!file.good()) return kExitIoError;
  }
  if (!svg_path.empty()) {
    std::ofstream file;
    if (!open_out(svg_path, file)) {
      std::cerr << "error: cannot write '" << svg_path << "'\n";
      return kExitIoError;
    }
    file << svg_chart(rows);
    if (!file.good()) return kExitIoError;
  }
  if (!json_path.empty()) {
    json out = json::array();
    for (const auto& r : rows) {
      out.push_back({{"n", r.n},
                     {"frac_n_alpha", to_decimal(r.frac_n_alpha, alpha, 12)},
                     {"target_power", r.target_power},
                     {"word_len", r.word_len},
                     {"ratio_log", r.ratio_log},
                     {"ratio_linear", to_decimal(AlphaVal(r.ratio_linear), alpha, 12)},
                     {"verified", r.verified}});
    }
    std::ofstream file;
    if (!open_out(json_path, file)) {
      std::cerr << "error: cannot write '" << json_path << "'\n";
      return kExitIoError;
    }
    file << out.dump(2) << "\n";
    if (!file.good()) return kExitIoError;
  }

  for (const auto& r : rows)
    if (!r.verified) return kExitVerificationFailed;
  return kExitOk;
}

int cmd_expand(bool as_json) {
  IdentityEquation eq = identity_equation();
  long net_lhs = net_exponent(eq.lhs, "x");
  long net_rhs = net_exponent(eq.rhs, "x");

  if (as_json) {
    json k_list = json::array();
    json g_list = json::array();
    for (const auto& [ki, gi] : eq.factors) {
      k_list.push_back(ki);
      g_list.push_back(gi.exp > 0 ? gi.gen : gi.gen + "^-1");
    }
    json out = {{"lhs", word_to_text(eq.lhs)},
                {"rhs", word_to_text(eq.rhs)},
                {"k_list", k_list},
                {"g_list", g_list},
                {"l", eq.factors.size()},
                {"k", eq.k},
                {"m", eq.m},
                {"net_x_lhs", net_lhs},
                {"net_x_rhs", net_rhs}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "lhs: " << word_to_text(eq.lhs) << "\n";
    std::cout << "rhs: " << word_to_text(eq.rhs) << "\n";
    std::cout << "k_list:";
    for (const auto& [ki, gi] : eq.factors) std::cout << " " << ki;
    std::cout << "\n";
    std::cout << "l: " << eq.factors.size() << "\n";
    std::cout << "k: " << eq.k << "\n";
    std::cout << "m: " << eq.m << "\n";
    std::cout << "net_x_lhs: " << net_lhs << "\n";
    std::cout << "net_x_rhs: " << net_rhs << "\n";
  }
  return (net_lhs == 8 && net_rhs == 2 && eq.m == -6) ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact arithmetic for piecewise-affine circle homeomorphisms: certified "
               "short words for powers of irrational rotations"};
  app.require_subcommand(1);

  std::string alpha_text = "quad:-1,1,2";
  app.add_option("--alpha", alpha_text, "Quadratic irrational as quad:P,Q,D for (P+sqrt(D))/Q")
      ->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Check the tower identities for given beta");
  std::vector<std::string> beta_args;
  bool verify_json = false;
  verify->add_option("--beta", beta_args, "Exact rational beta in (0, 1/1000); repeatable")
      ->required();
  verify->add_flag("--json", verify_json, "Emit the report as JSON");

  auto* lemma1 = app.add_subcommand(
      "lemma1", "Build the word h_n agreeing with the n-th rotation power off an interval");
  long long l1_n = 0;
  std::string l1_a = "9/10";
  long l1_m = 21;
  bool l1_dump = false;
  lemma1->add_option("--n", l1_n, "Rotation power n >= 0")->required();
  lemma1->add_option("--a", l1_a, "Triviality threshold a as an exact rational")
      ->capture_default_str();
  lemma1->add_option("--m", l1_m, "Step count m (needs a + 2/m < 1)")->capture_default_str();
  lemma1->add_flag("--dump", l1_dump, "Also print the word and the evaluated map");

  auto* distortion = app.add_subcommand(
      "distortion", "Emit the word-length growth table along the orbit subsequence");
  int d_count = 0;
  std::string d_csv, d_svg, d_json;
  distortion->add_option("--count", d_count, "Number of rows (>= 1)")->required();
  distortion->add_option("--csv", d_csv, "CSV output path (default: stdout)");
  distortion->add_option("--svg", d_svg, "Optional SVG chart path");
  distortion->add_option("--json", d_json, "Optional JSON output path");

  auto* expand = app.add_subcommand("expand", "Print the expanded rotation identity");
  bool expand_json = false;
  expand->add_flag("--json", expand_json, "Emit the equation as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  try {
    QuadIrr alpha = QuadIrr::parse(alpha_text);
    if (verify->parsed()) return cmd_verify(beta_args, alpha, verify_json);
    if (lemma1->parsed()) return cmd_lemma1(l1_n, l1_a, l1_m, alpha, l1_dump);
    if (distortion->parsed()) {
      if (d_count < 1) {
        std::cerr << "error: --count must be >= 1\n";
        return kExitBadInput;
      }
      return cmd_distortion(d_count, alpha, d_csv, d_svg, d_json);
    }
    if (expand->parsed()) return cmd_expand(expand_json);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIoError;
  }
  return kExitBadInput;
}
