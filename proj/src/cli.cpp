#include "motivic/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "motivic/errors.hpp"
#include "motivic/exactalg.hpp"
#include "motivic/hk.hpp"
#include "motivic/io.hpp"
#include "motivic/milnor.hpp"
#include "motivic/polytope.hpp"

namespace motivic::cli {

namespace {

using io::Json;

// A command result: the JSON document plus "key = value" lines for --text.
struct Output {
  Json json = Json::object();
  std::vector<std::pair<std::string, std::string>> text;
  int status = ok;

  void put(const std::string& key, Json value, std::string text_value) {
    json[key] = std::move(value);
    text.emplace_back(key, std::move(text_value));
  }
  void put_bool(const std::string& key, bool v) {
    put(key, v, v ? "true" : "false");
    if (!v) status = check_failed;
  }
  void put_int(const std::string& key, const BigInt& v) { put(key, io::to_json(v), v.get_str()); }
};

std::string render(const Output& out, bool text) {
  if (!text) return io::dump(out.json) + "\n";
  std::string s;
  for (const auto& [k, v] : out.text) s += k + " = " + v + "\n";
  return s;
}

std::string read_document(const std::string& path, const std::function<std::string()>& read_stdin) {
  if (path.empty() || path == "-") return read_stdin();
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string zeta_factor_text(const FactoredZeta& z) {
  if (z.factors.empty()) return "1";
  std::string s;
  for (const auto& [n, e] : z.factors) {
    if (!s.empty()) s += "*";
    s += "(1-t" + (n == 1 ? std::string() : "^" + std::to_string(n)) + ")";
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

BigInt parse_int_arg(const std::string& s) {
  const Rational r = Rational::parse(s);
  if (!r.is_integer()) throw ParseError("expected an integer, got '" + s + "'");
  return r.numerator();
}

Result error_result(const char* kind, const std::string& message, int status, bool text) {
  if (text) return {status, std::string("error (") + kind + "): " + message + "\n"};
  Json j = {{"error", {{"kind", kind}, {"message", message}}}};
  return {status, io::dump(j) + "\n"};
}

}  // namespace

Result run(const std::vector<std::string>& args, const std::function<std::string()>& read_stdin) {
  CLI::App app{"Exact Grothendieck-ring calculator", "motivic"};
  app.require_subcommand(1);
  app.fallthrough();
  bool text = false;
  auto* json_flag = app.add_flag("--json", "JSON output (default)");
  auto* text_flag = app.add_flag("--text", text, "Plain text output");
  json_flag->excludes(text_flag);

  std::string path;
  auto* eu_cmd = app.add_subcommand("eu", "o-minimal Euler characteristic of a formula document");
  eu_cmd->add_option("input", path, "Formula JSON (default: stdin)");
  auto* euc_cmd = app.add_subcommand("euc", "Bounded Euler characteristic of a formula document");
  euc_cmd->add_option("input", path, "Formula JSON (default: stdin)");
  bool report = false;
  euc_cmd->add_flag("--report", report, "Also print the box radius and guard value");

  auto* milnor_cmd = app.add_subcommand("milnor", "Motivic Milnor fiber from resolution data");
  milnor_cmd->add_option("input", path, "Resolution JSON (default: stdin)");
  bool want_chi = false, want_zeta = false, want_epoly = false, want_class = false;
  milnor_cmd->add_flag("--chi", want_chi, "Euler characteristic");
  milnor_cmd->add_flag("--zeta", want_zeta, "Monodromy zeta function");
  milnor_cmd->add_flag("--epoly", want_epoly, "E-polynomial");
  milnor_cmd->add_flag("--class", want_class, "Class in the Grothendieck ring (default)");

  auto* zeta_cmd = app.add_subcommand("zeta", "Monodromy zeta function and its degree check");
  zeta_cmd->add_option("input", path, "Resolution JSON (default: stdin)");

  auto* hk_cmd = app.add_subcommand("hk-check", "Check that E and E_c kill the I_sp generator");
  hk_cmd->add_option("input", path, "Optional RV class JSON to realize");

  std::size_t max_size = 5;
  long max_dim = 6;
  bool serial = false;
  auto* duality_cmd = app.add_subcommand("duality-check", "Exhaustive stratum and tube duality checks");
  auto* tube_cmd = app.add_subcommand("tube-check", "Exhaustive tube duality check");
  for (auto* cmd : {duality_cmd, tube_cmd}) {
    cmd->add_option("--max-size", max_size, "Largest |J|")->check(CLI::Range(1, 12));
    cmd->add_option("--max-dim", max_dim, "Largest ambient dimension d")->check(CLI::NonNegativeNumber);
    cmd->add_flag("--serial", serial, "Use the serial reference path");
  }

  std::vector<std::string> lattice_args;
  auto* lattice_cmd = app.add_subcommand("lattice-check", "Normalization lattice restriction check: N a_1 ... a_d");
  lattice_cmd->add_option("values", lattice_args, "N followed by a_1 ... a_d (d >= 2)")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    return {ok, app.help()};
  } catch (const CLI::CallForAllHelp&) {
    return {ok, app.help("", CLI::AppFormatMode::All)};
  } catch (const CLI::ParseError& e) {
    return error_result("usage", e.what(), invalid_input, text);
  }

  try {
    Output out;
    if (eu_cmd->parsed()) {
      const auto f = io::formula_from_json(io::parse_json(read_document(path, read_stdin)));
      out.put_int("eu", eu(f));
    } else if (euc_cmd->parsed()) {
      const auto f = io::formula_from_json(io::parse_json(read_document(path, read_stdin)));
      const auto r = eu_c_report(f);
      out.put_int("eu_c", r.value);
      if (report) {
        out.put_int("box_radius", r.box_radius);
        out.put_int("guard_value", r.guard_value);
      }
    } else if (milnor_cmd->parsed()) {
      const auto r = io::resolution_from_json(io::parse_json(read_document(path, read_stdin)));
      if (!want_chi && !want_zeta && !want_epoly) want_class = true;
      if (want_chi) out.put_int("chi", milnor_chi(r));
      if (want_class) {
        const auto c = milnor_class(r);
        out.put("class", io::to_json(c), c.str());
      }
      if (want_epoly) {
        const auto e = milnor_epoly(r);
        out.put("epoly", e.str(), e.str());
      }
      if (want_zeta) {
        const auto z = acampo_zeta(r);
        out.put("zeta", io::to_json(z, true), z.expanded());
      }
    } else if (zeta_cmd->parsed()) {
      const auto r = io::resolution_from_json(io::parse_json(read_document(path, read_stdin)));
      const auto z = acampo_zeta(r);
      out.put("factors", io::to_json(z)["factors"], zeta_factor_text(z));
      out.put("expanded", z.expanded(), z.expanded());
      out.put_int("degree", z.degree());
      out.put_bool("degree_check", zeta_degree_check(r));
    } else if (hk_cmd->parsed()) {
      if (!path.empty()) {
        const auto c = io::rvclass_from_json(io::parse_json(read_document(path, read_stdin)));
        const auto e = realize_e(c);
        const auto ec = realize_ec(c);
        out.put("E", io::to_json(e), e.str());
        out.put("E_c", io::to_json(ec), ec.str());
      }
      out.put_bool("isp_killed", verify_isp());
    } else if (duality_cmd->parsed() || tube_cmd->parsed()) {
      const bool stratum = duality_cmd->parsed();
      const auto rep = sweep(max_size, max_dim, stratum, true, serial ? Exec::serial : Exec::parallel);
      out.put_int("configs", rep.configs);
      if (stratum) {
        out.put_int("stratum_checks", rep.stratum_checks);
        out.put_bool("stratum_duality", rep.stratum_failures == 0);
      }
      out.put_int("tube_checks", rep.tube_checks);
      out.put_bool("tube_duality", rep.tube_failures == 0);
    } else if (lattice_cmd->parsed()) {
      if (lattice_args.size() < 3) throw ValidationError("lattice-check needs N and at least two entries a_i");
      const BigInt n = parse_int_arg(lattice_args[0]);
      std::vector<BigInt> a;
      for (std::size_t i = 1; i < lattice_args.size(); ++i) a.push_back(parse_int_arg(lattice_args[i]));
      BigInt n_prime;
      mpz_gcd(n_prime.get_mpz_t(), n.get_mpz_t(), a[0].get_mpz_t());
      const auto lhs = restrict_first_zero(cover_lattice(n, a));
      const auto rhs = cover_lattice(n_prime, std::span<const BigInt>(a).subspan(1));
      out.put_bool("equal", lattice_equal(lhs, rhs));
      out.put_int("N_prime", n_prime);
      out.put_int("components", component_count(n, a));
    }
    return {out.status, render(out, text)};
  } catch (const ParseError& e) {
    return error_result("parse", e.what(), invalid_input, text);
  } catch (const ValidationError& e) {
    return error_result("validation", e.what(), invalid_input, text);
  } catch (const BoundError& e) {
    return error_result("bound", e.what(), bound_exceeded, text);
  } catch (const StabilizationError& e) {
    return error_result("stabilization", e.what(), internal_error, text);
  } catch (const std::exception& e) {
    return error_result("internal", e.what(), internal_error, text);
  }
}

}  // namespace motivic::cli
