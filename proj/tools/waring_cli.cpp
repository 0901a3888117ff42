#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "waring/waring.hpp"

namespace {

using waring::BinaryForm;
using waring::Rational;
using waring::RwdResult;

// Bad option values (malformed numbers, wrong list shapes) are usage
// errors, distinct from domain errors raised by the library.
struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<Rational> parse_rational_list(const std::string& text,
                                          const std::string& what) {
  std::vector<Rational> out;
  if (text.empty()) return out;
  for (const auto& piece : split(text, ',')) {
    try {
      out.push_back(Rational::parse(piece));
    } catch (const waring::error& e) {
      throw usage_error("bad " + what + ": " + e.what());
    }
  }
  return out;
}

struct FormInput {
  std::string poly;
  std::string coeffs;
  std::string convention;

  BinaryForm resolve() const {
    if (!poly.empty() && !coeffs.empty())
      throw usage_error("give either --poly or --coeffs, not both");
    if (!poly.empty()) return waring::parse_poly(poly);
    if (coeffs.empty()) throw usage_error("an input form is required (--poly or --coeffs)");
    std::vector<Rational> c = parse_rational_list(coeffs, "--coeffs");
    if (c.size() < 2) throw usage_error("--coeffs needs at least two entries");
    if (convention == "raw") return waring::from_raw_coeffs(c);
    if (convention == "cvec") return BinaryForm(c.size() - 1, c);
    throw usage_error("--convention must be 'raw' or 'cvec'");
  }
};

struct OutputOpts {
  bool json = false;
  bool no_verify = false;
  std::string out_file;

  void emit(const std::string& text) const {
    if (out_file.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream f(out_file);
    if (!f) throw waring::error("cannot open output file " + out_file);
    f << text;
  }
};

nlohmann::ordered_json result_json(const RwdResult& r) {
  nlohmann::ordered_json j;
  j["degree"] = r.decomposition.degree();
  j["parity"] = r.params.parity == waring::Parity::odd ? "odd" : "even";
  j["delta"] = r.params.delta;
  nlohmann::ordered_json params = nlohmann::ordered_json::array();
  for (const auto& v : r.params.s) params.push_back(v.str());
  j["params"] = std::move(params);
  j["R"] = {r.r_pair.first.str(), r.r_pair.second.str()};
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& t : r.decomposition.terms()) {
    nlohmann::ordered_json jt;
    jt["lambda"] = t.lambda.str();
    jt["form"] = {t.form.alpha().str(), t.form.beta().str()};
    terms.push_back(std::move(jt));
  }
  j["terms"] = std::move(terms);
  j["effective_length"] = waring::effective_length(r.decomposition);
  j["verified"] = r.verified;
  nlohmann::ordered_json bounds = nlohmann::ordered_json::object();
  for (const auto& [name, v] : r.params.trace.bounds) bounds[name] = v.str();
  j["trace"] = {{"m", r.params.trace.m.str()},
                {"bounds", std::move(bounds)},
                {"escalations", r.params.trace.escalations}};
  return j;
}

std::string result_text(const RwdResult& r, bool no_verify) {
  std::ostringstream os;
  const auto& wd = r.decomposition;
  os << "degree: " << wd.degree() << " ("
     << (r.params.parity == waring::Parity::odd ? "odd" : "even") << ")\n";
  os << "delta: " << r.params.delta << "\n";
  os << "params:";
  for (const auto& v : r.params.s) os << ' ' << v.str();
  os << "\n";
  os << "R: (" << r.r_pair.first.str() << ", " << r.r_pair.second.str() << ")\n";
  os << "decomposition:\n";
  for (const auto& t : wd.terms()) {
    os << "  " << (t.lambda.sign() < 0 ? "- " : "+ ")
       << t.lambda.abs().str() << " * (" << waring::to_string(t.form) << ")^"
       << wd.degree() << "\n";
  }
  os << "effective length: " << waring::effective_length(wd) << "\n";
  if (no_verify)
    os << "verified: skipped\n";
  else
    os << "verified: " << (r.verified ? "yes" : "no") << "\n";
  os << "trace: m = " << r.params.trace.m.str()
     << ", escalations = " << r.params.trace.escalations << "\n";
  return os.str();
}

void emit_result(const RwdResult& r, const OutputOpts& out) {
  if (!out.no_verify && !r.verified)
    throw waring::error("re-expansion did not reproduce the input form");
  if (out.json)
    out.emit(result_json(r).dump(2) + "\n");
  else
    out.emit(result_text(r, out.no_verify));
}

void attach_common(CLI::App* cmd, FormInput& in, OutputOpts& out) {
  cmd->add_option("--poly", in.poly, "Polynomial text, e.g. \"3*x^2*y + y^3\"");
  cmd->add_option("--coeffs", in.coeffs, "Comma-separated coefficients c0,...,cd");
  cmd->add_option("--convention", in.convention,
                  "Interpretation of --coeffs: raw (plain monomial"
                  " coefficients) or cvec (scaled basis)");
  cmd->add_flag("--json", out.json, "Emit JSON instead of text");
  cmd->add_flag("--no-verify", out.no_verify, "Skip the re-expansion check");
  cmd->add_option("--out", out.out_file, "Write output to a file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Waring decompositions of real binary forms"};
  app.require_subcommand(1);

  FormInput in;
  OutputOpts out;
  std::string params_text, grid_text;

  CLI::App* cmd_decompose =
      app.add_subcommand("decompose", "Decompose with automatic parameter selection");
  attach_common(cmd_decompose, in, out);

  CLI::App* cmd_family = app.add_subcommand(
      "family", "Sample the parametric family of decompositions at a grid point");
  attach_common(cmd_family, in, out);
  cmd_family->add_option("--params", params_text, "Grid point r1,...,rnu")->required();

  CLI::App* cmd_check = app.add_subcommand(
      "check", "Report admissibility of a grid point or parameter vector");
  attach_common(cmd_check, in, out);
  cmd_check->add_option("--params", params_text,
                        "Grid point r1,...,rnu or full vector with the final slot")
      ->required();

  CLI::App* cmd_search = app.add_subcommand(
      "search", "Scan a grid for the shortest decomposition it yields");
  attach_common(cmd_search, in, out);
  cmd_search->add_option("--grid", grid_text, "Semicolon-separated grid points")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    BinaryForm p = in.resolve();
    const std::size_t nu = waring::nu_of(p.degree());

    if (cmd_decompose->parsed()) {
      emit_result(waring::decompose(p), out);
    } else if (cmd_family->parsed()) {
      waring::ParametricFamily fam = waring::parametric_family(p);
      std::vector<Rational> point = parse_rational_list(params_text, "--params");
      emit_result(fam.sample(point), out);
    } else if (cmd_search->parsed()) {
      std::vector<std::vector<Rational>> grid;
      for (const auto& piece : split(grid_text, ';'))
        grid.push_back(parse_rational_list(piece, "--grid"));
      emit_result(waring::search_shorter(p, grid), out);
    } else if (cmd_check->parsed()) {
      std::vector<Rational> given = parse_rational_list(params_text, "--params");
      if (given.size() != nu && given.size() != nu + 1)
        throw usage_error("--params must have nu or nu+1 entries for check");
      std::vector<Rational> point(given.begin(),
                                  given.begin() + static_cast<std::ptrdiff_t>(nu));
      waring::SuitabilityReport g = waring::in_G(p, point);
      std::optional<waring::SuitabilityReport> lax, strict;
      if (given.size() == nu + 1) {
        lax = waring::is_suitable(p, given, false);
        strict = waring::is_suitable(p, given, true);
      }
      if (out.json) {
        nlohmann::ordered_json j;
        j["degree"] = p.degree();
        j["in_G"] = g.ok;
        j["in_G_violations"] = g.violations;
        if (lax) {
          j["suitable"] = lax->ok;
          j["suitable_violations"] = lax->violations;
          j["suitable_strict"] = strict->ok;
          j["suitable_strict_violations"] = strict->violations;
        }
        out.emit(j.dump(2) + "\n");
      } else {
        std::ostringstream os;
        os << "point:";
        for (const auto& v : point) os << ' ' << v.str();
        os << "\n";
        os << "in G: " << (g.ok ? "yes" : "no") << "\n";
        for (const auto& v : g.violations) os << "  - " << v << "\n";
        if (lax) {
          os << "suitable: " << (lax->ok ? "yes" : "no") << "\n";
          for (const auto& v : lax->violations) os << "  - " << v << "\n";
          os << "suitable (strict): " << (strict->ok ? "yes" : "no") << "\n";
          for (const auto& v : strict->violations) os << "  - " << v << "\n";
        }
        out.emit(os.str());
      }
    }
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const waring::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const waring::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
