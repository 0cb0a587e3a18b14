#include "braidss/braidss.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

enum ExitCode { kOk = 0, kVerifyFailed = 1, kUsage = 2 };

struct Options {
  int k = 3;
  int d_max = 6;
  int d = 0;
  int n = 0;
  int letters = 2;
  std::string format = "json";
  std::string report_format = "text";
  std::string out;
  std::optional<std::uint64_t> hall_seed;
};

void write_output(const Options& o, const std::string& text) {
  std::string body = text;
  if (body.empty() || body.back() != '\n') body.push_back('\n');
  if (o.out.empty()) {
    std::cout << body << std::flush;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw braidss::ArgumentError("cannot open " + o.out + " for writing");
  f << body;
  if (!f.flush()) throw braidss::ArgumentError("failed writing " + o.out);
}

template <class T>
std::string render(const T& value, const std::string& format) {
  if (format == "csv") return braidss::to_csv(value);
  if (format == "latex") return braidss::to_latex(value);
  return braidss::to_json(value).dump(2);
}

braidss::PageOptions page_options(const Options& o) { return {o.hall_seed, braidss::default_threads()}; }

int cmd_page(const Options& o, int which) {
  braidss::Page page = which == 1 ? braidss::e1_page(o.k, o.d_max, page_options(o)) : braidss::e2_page(o.k, o.d_max, page_options(o));
  write_output(o, render(page, o.format));
  return kOk;
}

int cmd_boundary(const Options& o) {
  write_output(o, render(braidss::compute_boundary(o.d, o.n, page_options(o)), o.format));
  return kOk;
}

int cmd_hall(const Options& o) {
  if (o.letters < 1) throw braidss::ArgumentError("--letters must be at least 1");
  if (o.d_max < 1) throw braidss::ArgumentError("--dmax must be at least 1");
  write_output(o, render(braidss::generate_hall_set(braidss::Alphabet::letters(o.letters), o.d_max, o.hall_seed), o.format));
  return kOk;
}

int cmd_verify(const Options& o) {
  braidss::VerifyConfig config{o.k, o.d_max, o.hall_seed, braidss::default_threads()};
  std::vector<braidss::CheckResult> results = braidss::run_verification(config);
  bool ok = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
  std::string text;
  if (o.report_format == "json") {
    braidss::Json j = braidss::Json::array();
    for (const auto& r : results) j.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    text = braidss::Json{{"passed", ok}, {"checks", j}}.dump(2);
  } else if (o.report_format == "csv") {
    text = "name,passed,detail\n";
    for (const auto& r : results) text += braidss::detail::csv_field(r.name) + "," + (r.passed ? "true" : "false") + "," + braidss::detail::csv_field(r.detail) + "\n";
  } else {
    for (const auto& r : results) text += std::string(r.passed ? "PASS " : "FAIL ") + r.name + ": " + r.detail + "\n";
    text += ok ? "all checks passed\n" : "verification FAILED\n";
  }
  write_output(o, text);
  return ok ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact E1/E2 pages for the rational homotopy spectral sequence of long knots (odd k)", "braidss"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> formats{"json", "csv", "latex"};

  auto common = [&](CLI::App* sub, bool page_flags) {
    if (sub->get_name() == "verify")
      sub->add_option("--format", o.report_format, "Report format")->check(CLI::IsMember({"text", "json", "csv"}))->capture_default_str();
    else
      sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats))->capture_default_str();
    sub->add_option("--out", o.out, "Write to this path instead of standard output");
    sub->add_option("--hall-seed", o.hall_seed, "Perturb the Hall order with this seed");
    if (page_flags) {
      sub->add_option("--k", o.k, "Odd codimension parameter k >= 3")->capture_default_str();
      sub->add_option("--dmax", o.d_max, "Largest bracket degree")->capture_default_str();
    }
  };

  CLI::App* e1 = app.add_subcommand("e1", "Compute the E1 page and its d1 matrices");
  common(e1, true);
  CLI::App* e2 = app.add_subcommand("e2", "Compute the E2 page");
  common(e2, true);
  CLI::App* boundary = app.add_subcommand("boundary", "Dump the labelled d1 matrix M(d,n) -> M(d,n+1)");
  common(boundary, false);
  boundary->add_option("--k", o.k, "Odd codimension parameter k >= 3")->capture_default_str();
  boundary->add_option("--d", o.d, "Bracket degree")->required();
  boundary->add_option("--n", o.n, "Number of strands of the source")->required();
  CLI::App* verify = app.add_subcommand("verify", "Run the invariant suite");
  common(verify, true);
  CLI::App* hall = app.add_subcommand("hall", "Dump a Hall set on the first letters of the alphabet");
  common(hall, false);
  hall->add_option("--letters", o.letters, "Alphabet size (1-26)")->capture_default_str();
  hall->add_option("--dmax", o.d_max, "Largest degree")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  try {
    if (e1->parsed()) return cmd_page(o, 1);
    if (e2->parsed()) return cmd_page(o, 2);
    if (boundary->parsed()) {
      braidss::require_odd_k(o.k);
      return cmd_boundary(o);
    }
    if (hall->parsed()) return cmd_hall(o);
    if (verify->parsed()) return cmd_verify(o);
  } catch (const braidss::ArgumentError& e) {
    std::cerr << "braidss: " << e.what() << "\n";
    return kUsage;
  } catch (const braidss::ParseError& e) {
    std::cerr << "braidss: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "braidss: " << e.what() << "\n";
    return kVerifyFailed;
  }
  return kUsage;
}
