// jetdiff — command-line front end: jet decompositions, exact Euler
// characteristics, and the reproduction report.
#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>

#include "jetdiff/bounds.hpp"
#include "jetdiff/jets.hpp"
#include "jetdiff/json_io.hpp"
#include "jetdiff/report.hpp"

namespace {

using namespace jetdiff;
using chow::AtomKind;
using chow::BundleExpr;
using chow::TwistExp;
using chow::VarietySpec;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---- bundle expression parsing ------------------------------------------

struct BundleParser {
  std::string src;
  size_t pos = 0;

  explicit BundleParser(std::string s) : src(std::move(s)) {}

  [[noreturn]] void fail(const std::string& what) {
    throw UsageError("bundle parse error at position " + std::to_string(pos) +
                     ": " + what);
  }
  void skip_ws() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos])))
      ++pos;
  }
  bool eat(const std::string& tok) {
    skip_ws();
    if (src.compare(pos, tok.size(), tok) == 0) {
      pos += tok.size();
      return true;
    }
    return false;
  }
  long parse_int() {
    skip_ws();
    size_t start = pos;
    if (pos < src.size() && (src[pos] == '-' || src[pos] == '+')) ++pos;
    while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos])))
      ++pos;
    if (pos == start) fail("expected an integer");
    return std::stol(src.substr(start, pos - start));
  }
  std::string parse_word() {
    skip_ws();
    size_t start = pos;
    while (pos < src.size() &&
           (std::isalnum(static_cast<unsigned char>(src[pos])) ||
            src[pos] == '-' || src[pos] == '_'))
      ++pos;
    if (pos == start) fail("expected a name");
    return src.substr(start, pos - start);
  }

  AtomKind parse_atom(const std::string& word) {
    if (word == "cotangent") return AtomKind::CotangentX;
    if (word == "tangent") return AtomKind::TangentX;
    if (word == "ambient-cotangent") return AtomKind::AmbientCotangentRestricted;
    if (word == "ambient-tangent") return AtomKind::AmbientTangentRestricted;
    if (word == "log-cotangent") return AtomKind::LogCotangent;
    if (word == "log-tangent") return AtomKind::LogTangent;
    fail("unknown atom '" + word + "'");
  }

  BundleExpr parse_factor() {
    skip_ws();
    if (eat("O")) {
      if (!eat("(")) fail("expected '(' after O");
      long t = parse_int();
      if (!eat(")")) fail("expected ')'");
      return BundleExpr::line(TwistExp(t));
    }
    std::string word = parse_word();
    if (word == "schur") {
      if (!eat("(")) fail("expected '(' after schur");
      std::vector<long> entries;
      entries.push_back(parse_int());
      while (eat(",")) entries.push_back(parse_int());
      if (!eat(")")) fail("expected ')'");
      if (!eat(":")) fail("expected ':' and an atom after schur(...)");
      AtomKind atom = parse_atom(parse_word());
      return BundleExpr::schur(combinat::SchurWeight(entries), atom);
    }
    return BundleExpr::atom(parse_atom(word));
  }

  BundleExpr parse() {
    BundleExpr e = parse_factor();
    skip_ws();
    while (pos < src.size()) {
      if (eat("\xe2\x8a\x97") || eat("*")) {  // tensor sign or ASCII fallback
        skip_ws();
        if (!eat("O")) fail("expected O(t) after tensor");
        if (!eat("(")) fail("expected '('");
        long t = parse_int();
        if (!eat(")")) fail("expected ')'");
        e = BundleExpr::twist(e, TwistExp(t));
        skip_ws();
        continue;
      }
      fail("unexpected trailing input");
    }
    return e;
  }
};

VarietySpec parse_variety(const std::string& text, std::optional<long> dflag) {
  std::string head = text;
  std::optional<long> degree = dflag;
  int n = 0;
  auto colon = text.find(':');
  std::string params;
  if (colon != std::string::npos) {
    head = text.substr(0, colon);
    params = text.substr(colon + 1);
  }
  std::optional<int> n_param;
  {
    std::istringstream ps(params);
    std::string item;
    while (std::getline(ps, item, ',')) {
      auto eq = item.find('=');
      if (eq == std::string::npos)
        throw UsageError("bad variety parameter '" + item + "'");
      std::string key = item.substr(0, eq);
      long value = std::stol(item.substr(eq + 1));
      if (key == "n")
        n_param = static_cast<int>(value);
      else if (key == "d")
        degree = value;
      else
        throw UsageError("unknown variety parameter '" + key + "'");
    }
  }
  if (head == "p3" || head == "p4") {
    if (degree)
      throw UsageError("projective space takes no degree; drop --d / d=");
    return VarietySpec::projective_space(head == "p3" ? 3 : 4);
  }
  if (head == "hypersurface") {
    n = n_param.value_or(4);
    return VarietySpec::hypersurface(n, degree);
  }
  if (head == "logpair") {
    n = n_param.value_or(3);
    if (n != 3) throw UsageError("log pairs live in P^3");
    return VarietySpec::log_pair(degree);
  }
  throw UsageError("unknown variety '" + head +
                   "' (use p3, p4, hypersurface:n=4, logpair:n=3)");
}

// ---- rendering ------------------------------------------------------------

std::string poly_csv(const Poly& p) {
  auto vars = poly_vars(p);
  std::ostringstream os;
  for (int v : vars) os << var_name(v) << "_exp,";
  os << "num,den\n";
  for (const auto& [m, c] : p.terms()) {
    for (int v : vars) os << static_cast<int>(m[v]) << ",";
    os << c.get_num().get_str() << "," << c.get_den().get_str() << "\n";
  }
  return os.str();
}

int cmd_decompose(int order, long m, const std::string& format) {
  jets::JetDecomposition dec =
      order == 3 ? jets::decompose_gr3(m) : jets::decompose_gr2(m);
  if (format == "json") {
    ojson j;
    j["order"] = order;
    j["m"] = m;
    j["pieces"] = ojson::array();
    for (const auto& piece : dec.pieces) {
      ojson pj;
      pj["gamma"] = piece.gamma;
      pj["lambda"] = {piece.lambda.part(0), piece.lambda.part(1),
                      piece.lambda.part(2)};
      pj["rank"] = combinat::schur_rank(piece.lambda, 3).get_str();
      pj["g"] = rat_to_json(bounds::g_weight(piece.lambda));
      j["pieces"].push_back(pj);
    }
    std::cout << j.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "gamma,l1,l2,l3,rank,g\n";
    for (const auto& piece : dec.pieces)
      std::cout << piece.gamma << "," << piece.lambda.part(0) << ","
                << piece.lambda.part(1) << "," << piece.lambda.part(2) << ","
                << combinat::schur_rank(piece.lambda, 3).get_str() << ","
                << to_string(bounds::g_weight(piece.lambda)) << "\n";
  } else {
    std::cout << "Gr E_{" << order << "," << m << "}: " << dec.pieces.size()
              << " pieces\n";
    for (const auto& piece : dec.pieces)
      std::cout << "  gamma=" << piece.gamma << "  lambda=("
                << piece.lambda.part(0) << "," << piece.lambda.part(1) << ","
                << piece.lambda.part(2) << ")  rank="
                << combinat::schur_rank(piece.lambda, 3).get_str()
                << "  g=" << to_string(bounds::g_weight(piece.lambda)) << "\n";
  }
  return 0;
}

int cmd_chi(const std::string& variety, const std::string& bundle,
            std::optional<long> dflag, const std::string& format) {
  VarietySpec v = parse_variety(variety, dflag);
  BundleExpr e = BundleParser(bundle).parse();
  Poly chi = chow::euler_characteristic(v, e);
  if (format == "json") {
    ojson j;
    j["variety"] = v.key();
    j["bundle"] = e.key();
    j["chi"] = poly_to_json(chi);
    std::cout << j.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << poly_csv(chi);
  } else {
    std::cout << "chi(" << v.key() << ", " << e.key() << ") = " << chi.str()
              << "\n";
  }
  return 0;
}

int cmd_report(const std::vector<std::string>& claims, unsigned jobs,
               const std::string& format) {
  auto entries = report::build_report(claims, jobs);
  bool mismatch = false;
  if (format == "json") {
    ojson j = ojson::array();
    for (const auto& entry : entries) {
      ojson ej;
      ej["claim"] = entry.claim_id;
      ej["expected"] = entry.expected;
      ej["computed"] = entry.computed;
      ej["status"] = report::status_name(entry.status);
      j.push_back(ej);
    }
    std::cout << j.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "claim,expected,computed,status\n";
    for (const auto& entry : entries)
      std::cout << "\"" << entry.claim_id << "\",\"" << entry.expected
                << "\",\"" << entry.computed << "\","
                << report::status_name(entry.status) << "\n";
  } else {
    for (const auto& entry : entries) {
      std::cout << entry.claim_id << ": " << report::status_name(entry.status)
                << "\n    computed: " << entry.computed << "\n";
      if (!entry.expected.empty())
        std::cout << "    expected: " << entry.expected << "\n";
    }
  }
  for (const auto& entry : entries)
    if (entry.status == report::Status::Mismatch) mismatch = true;
  return mismatch ? 3 : 0;
}

std::string default_cache_dir() {
  if (const char* env = std::getenv("JETDIFF_CACHE_DIR")) return env;
  if (const char* home = std::getenv("HOME"))
    return std::string(home) + "/.cache/jetdiff";
  return ".jetdiff-cache";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "jetdiff — exact Schur-functor / Riemann-Roch computations for jet "
      "differentials on hypersurfaces"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string cache_dir = default_cache_dir();
  unsigned jobs = 1;
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--cache-dir", cache_dir,
                 "result cache directory (JETDIFF_CACHE_DIR; empty disables)")
      ->capture_default_str();
  app.add_option("--jobs", jobs, "worker threads for partition sums")
      ->capture_default_str();

  auto* dec = app.add_subcommand("decompose",
                                 "graded pieces of the jet bundle E_{k,m}");
  dec->fallthrough();
  int order = 3;
  long mval = 0;
  dec->add_option("--order", order, "jet order")->check(CLI::IsMember({2, 3}));
  dec->add_option("--m", mval, "weighted degree m (>= 1)")->required();

  auto* chi = app.add_subcommand("chi", "Euler characteristic of a bundle");
  chi->fallthrough();
  std::string variety = "hypersurface:n=4";
  std::string bundle;
  std::optional<long> dflag;
  bool log_flag = false;
  auto* variety_opt =
      chi->add_option("--variety", variety,
                      "p3 | p4 | hypersurface:n=4[,d=7] | logpair:n=3[,d=7]")
          ->capture_default_str();
  chi->add_option("--bundle", bundle,
                  "bundle expression, e.g. \"schur(2,1,0):cotangent * O(3)\" "
                  "or \"O(2)\" (atoms: cotangent, tangent, ambient-cotangent, "
                  "ambient-tangent, log-cotangent, log-tangent)")
      ->required();
  chi->add_option("--d", dflag, "numeric hypersurface degree");
  chi->add_flag("--log", log_flag, "shorthand for --variety logpair:n=3");

  auto* rep = app.add_subcommand(
      "report", "recompute and check every reproduced constant");
  rep->fallthrough();
  std::string claims_csv;
  rep->add_option("--claims", claims_csv,
                  "comma-separated claim ids or aliases (quartic, thresholds)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    chow::set_chi_cache_dir(cache_dir.empty()
                                ? std::optional<std::string>{}
                                : std::optional<std::string>{cache_dir});
    if (dec->parsed()) return cmd_decompose(order, mval, format);
    if (chi->parsed()) {
      if (log_flag) {
        if (variety_opt->count() && variety.rfind("logpair", 0) != 0)
          throw UsageError("--log conflicts with --variety " + variety);
        if (!variety_opt->count()) variety = "logpair:n=3";
      }
      return cmd_chi(variety, bundle, dflag, format);
    }
    if (rep->parsed()) {
      std::vector<std::string> claims;
      std::istringstream cs(claims_csv);
      std::string token;
      while (std::getline(cs, token, ','))
        if (!token.empty()) claims.push_back(token);
      return cmd_report(claims, jobs, format);
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "computation error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
