#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dumont/families.hpp"
#include "dumont/perm.hpp"
#include "dumont/sequences.hpp"
#include "dumont/series.hpp"
#include "dumont/structure.hpp"
#include "dumont/theorems.hpp"
#include "dumont/wilf.hpp"

namespace {

using nlohmann::json;
using namespace dumont;

constexpr int kExitUsage = 2;
constexpr int kExitLimit = 3;
constexpr int kExitVerifyFail = 4;
constexpr int kExitDomain = 5;

DumontKind parse_kind(const std::string& s) {
  if (s == "1") return DumontKind::First;
  if (s == "2") return DumontKind::Second;
  if (s == "dl1") return DumontKind::DumontLikeFirst;
  if (s == "dl2") return DumontKind::DumontLikeSecond;
  throw CLI::ValidationError("--kind", "must be one of 1, 2, dl1, dl2");
}

GenerationLimits limits_from_env() {
  GenerationLimits limits;
  if (const char* env = std::getenv("DUMONT_MAX_N")) {
    try {
      limits.max_n = std::stoi(env);
    } catch (...) {
      throw Error("DUMONT_MAX_N must be an integer");
    }
  }
  return limits;
}

std::pair<int, int> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) {
    const int n = std::stoi(s);
    return {n, n};
  }
  return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
}

std::string perm_out(const Permutation& p) {
  return p.empty() ? "(empty)" : p.str();
}

PatternSet read_avoid(const std::string& avoid, const std::string& avoid_file) {
  if (!avoid.empty() && !avoid_file.empty())
    throw CLI::ValidationError("--avoid", "use either --avoid or --avoid-file");
  if (!avoid.empty()) return PatternSet::parse(avoid);
  if (!avoid_file.empty()) {
    std::FILE* f = std::fopen(avoid_file.c_str(), "r");
    if (!f) throw Error("cannot open " + avoid_file);
    std::string text;
    char buf[4096];
    size_t got;
    while ((got = std::fread(buf, 1, sizeof buf, f)) > 0) text.append(buf, got);
    std::fclose(f);
    // whitespace separated long form
    std::vector<Permutation> pats;
    std::string token;
    for (char c : text + " ") {
      if (std::isspace(static_cast<unsigned char>(c))) {
        if (!token.empty()) pats.push_back(Permutation::parse(token));
        token.clear();
      } else {
        token += c;
      }
    }
    return PatternSet(std::move(pats));
  }
  return PatternSet{};
}

struct VerifyPrinter {
  std::string format;
  json all = json::array();
  bool any_fail = false;

  void add(const VerificationReport& rep) {
    any_fail = any_fail || !rep.overall;
    if (format == "json") {
      all.push_back(report_to_json(rep));
      return;
    }
    if (format == "csv") {
      for (const auto& row : rep.rows)
        std::cout << row.n << ",\"" << row.observed << "\",\"" << row.expected
                  << "\"," << (row.pass ? "true" : "false") << "\n";
      return;
    }
    std::cout << "theorem " << theorem_name(rep.theorem)
              << (rep.conjecture ? " [conjecture]" : "") << ": "
              << (rep.overall ? "PASS" : "FAIL") << "\n";
    for (const auto& row : rep.rows) {
      std::cout << "  n=" << row.n << " observed=" << row.observed
                << " expected=" << row.expected
                << (row.pass ? "" : "  <-- FAIL") << "\n";
    }
  }

  void finish(bool single) {
    if (format == "json") {
      if (single && all.size() == 1)
        std::cout << all[0].dump() << "\n";
      else
        std::cout << all.dump() << "\n";
    }
  }
};

int run(int argc, char** argv) {
  CLI::App app{"Dumont permutation pattern-avoidance toolkit"};
  app.require_subcommand(1);
  const GenerationLimits limits = limits_from_env();

  // ---- enumerate ----
  auto* cmd_enum = app.add_subcommand("enumerate",
                                      "list members of a Dumont family");
  std::string en_kind = "1", en_avoid, en_avoid_file, en_format = "plain";
  int en_n = 0;
  cmd_enum->add_option("--kind", en_kind, "family kind: 1, 2, dl1, dl2");
  cmd_enum->add_option("--n", en_n, "half-length n (length is 2n)")->required();
  cmd_enum->add_option("--avoid", en_avoid, "comma-separated patterns");
  cmd_enum->add_option("--avoid-file", en_avoid_file, "pattern file");
  cmd_enum->add_option("--format", en_format)
      ->check(CLI::IsMember({"plain", "json", "csv"}));

  // ---- count ----
  auto* cmd_count = app.add_subcommand("count", "count pattern avoiders");
  std::string co_kind = "1", co_avoid, co_avoid_file, co_n = "0..5",
              co_format = "plain";
  int co_parallel = 1;
  cmd_count->add_option("--kind", co_kind);
  cmd_count->add_option("--avoid", co_avoid);
  cmd_count->add_option("--avoid-file", co_avoid_file);
  cmd_count->add_option("--n", co_n, "single n or range a..b");
  cmd_count->add_option("--format", co_format)
      ->check(CLI::IsMember({"plain", "json", "csv"}));
  cmd_count->add_option("--parallel", co_parallel, "worker threads");

  // ---- verify ----
  auto* cmd_verify = app.add_subcommand("verify", "verify paper claims");
  std::string ve_theorem = "all", ve_format = "json";
  std::optional<int> ve_nmax;
  int ve_parallel = 1;
  cmd_verify->add_option("--theorem", ve_theorem, "theorem tag or 'all'");
  cmd_verify->add_option("--n-max", ve_nmax, "largest n to check");
  cmd_verify->add_option("--format", ve_format)
      ->check(CLI::IsMember({"plain", "json", "csv"}));
  cmd_verify->add_option("--parallel", ve_parallel);

  // ---- sequence ----
  auto* cmd_seq = app.add_subcommand("sequence", "reference sequences");
  std::string se_id, se_format = "plain";
  int se_terms = 0;
  cmd_seq->add_option("--id", se_id, "sequence or generating function id")
      ->required();
  cmd_seq->add_option("--terms", se_terms)->required();
  cmd_seq->add_option("--format", se_format)
      ->check(CLI::IsMember({"plain", "json", "csv"}));

  // ---- bijection ----
  auto* cmd_bij = app.add_subcommand("bijection", "structure bijections");
  std::string bi_name, bi_perm, bi_path, bi_comp, bi_format = "plain";
  bool bi_inverse = false;
  cmd_bij->add_option("name", bi_name, "d2-231-composition or d2-3142-dyck")
      ->required();
  cmd_bij->add_option("--perm", bi_perm);
  cmd_bij->add_option("--path", bi_path);
  cmd_bij->add_option("--comp", bi_comp, "composition like 1+3");
  cmd_bij->add_flag("--inverse", bi_inverse);
  cmd_bij->add_option("--format", bi_format)
      ->check(CLI::IsMember({"plain", "json", "csv"}));

  // ---- wilf ----
  auto* cmd_wilf = app.add_subcommand("wilf", "group patterns by fingerprint");
  std::string wi_kind = "1", wi_format = "plain";
  int wi_len = 3, wi_nmax = 4, wi_parallel = 1;
  cmd_wilf->add_option("--kind", wi_kind);
  cmd_wilf->add_option("--length", wi_len, "pattern length, 3 or 4");
  cmd_wilf->add_option("--n-max", wi_nmax);
  cmd_wilf->add_option("--format", wi_format)
      ->check(CLI::IsMember({"plain", "json", "csv"}));
  cmd_wilf->add_option("--parallel", wi_parallel);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (cmd_enum->parsed()) {
    const auto kind = parse_kind(en_kind);
    const auto set = read_avoid(en_avoid, en_avoid_file);
    const auto all = generate(kind, en_n, limits);
    if (en_format == "json") {
      json arr = json::array();
      for (const auto& p : all)
        if (avoids_all(p, set)) arr.push_back(perm_out(p));
      std::cout << arr.dump() << "\n";
    } else {
      for (const auto& p : all)
        if (avoids_all(p, set)) std::cout << perm_out(p) << "\n";
    }
    return 0;
  }

  if (cmd_count->parsed()) {
    const auto kind = parse_kind(co_kind);
    const auto set = read_avoid(co_avoid, co_avoid_file);
    const auto [lo, hi] = parse_range(co_n);
    if (lo < 0 || hi < lo) throw CLI::ValidationError("--n", "bad range");
    json arr = json::array();
    for (int n = lo; n <= hi; ++n) {
      const auto c = count_avoiders(kind, set, n, limits, co_parallel);
      if (co_format == "json")
        arr.push_back({{"n", n}, {"count", c}});
      else if (co_format == "csv")
        std::cout << n << "," << c << "\n";
      else
        std::cout << n << " " << c << "\n";
    }
    if (co_format == "json") std::cout << arr.dump() << "\n";
    return 0;
  }

  if (cmd_verify->parsed()) {
    VerifyPrinter printer{ve_format};
    const bool all = ve_theorem == "all";
    std::vector<TheoremId> tags;
    if (all)
      tags = all_theorems();
    else
      tags.push_back(theorem_from_string(ve_theorem));
    // In 'all' mode without an explicit bound, the generating-function pair
    // tags drop to n_max 4 (each row repeats two full exhaustive counts).
    const int base_nmax = ve_nmax.value_or(5);
    for (TheoremId tag : tags) {
      int nm = base_nmax;
      if (all && !ve_nmax.has_value() &&
          (tag == TheoremId::D1_2413_3142 || tag == TheoremId::D1_1423_4132 ||
           tag == TheoremId::D1_2413_4132_EQ_1423_3142))
        nm = std::min(nm, 4);
      printer.add(verify_theorem(tag, nm, limits, ve_parallel));
    }
    printer.finish(!all);
    return printer.any_fail ? kExitVerifyFail : 0;
  }

  if (cmd_seq->parsed()) {
    if (se_terms < 1) throw CLI::ValidationError("--terms", "must be >= 1");
    std::vector<std::string> values;
    if (se_id == "catalan") {
      for (int n = 0; n < se_terms; ++n) values.push_back(catalan(n).str());
    } else if (se_id == "little-schroeder") {
      for (int n = 1; n <= se_terms; ++n)
        values.push_back(little_schroeder(n).str());
    } else if (se_id == "powers-of-two") {
      BigInt v = 1;
      for (int n = 0; n < se_terms; ++n, v *= 2) values.push_back(v.str());
    } else if (se_id == "rec-2341-1423") {
      for (int n = 0; n < se_terms; ++n)
        values.push_back(rec_2341_1423(n).str());
    } else if (se_id == "gen-catalan2") {
      for (int n = 0; n < se_terms; ++n)
        values.push_back(gen_catalan2(n).str());
    } else if (se_id == "genocchi") {
      const auto table = genocchi_table(se_terms);
      for (const auto& g : table.values) values.push_back(g.str());
    } else if (se_id == "ballot") {
      for (int n = 1; n <= se_terms; ++n) {
        std::string row;
        for (int k = 0; k < n; ++k) {
          if (k) row += " ";
          row += ballot(n, k).str();
        }
        values.push_back(row);
      }
    } else if (se_id.rfind("gf-", 0) == 0) {
      const GfId id = gf_from_string(se_id.substr(3));
      for (const auto& c : gf_coefficients(id, se_terms))
        values.push_back(rational_str(c));
    } else {
      throw UnknownSeries("unknown sequence id '" + se_id + "'");
    }
    if (se_format == "json") {
      json arr = json::array();
      for (const auto& v : values) arr.push_back(v);
      std::cout << arr.dump() << "\n";
    } else if (se_format == "csv") {
      for (size_t i = 0; i < values.size(); ++i)
        std::cout << i << "," << values[i] << "\n";
    } else {
      for (const auto& v : values) std::cout << v << "\n";
    }
    return 0;
  }

  if (cmd_bij->parsed()) {
    std::string result;
    if (bi_name == "d2-231-composition") {
      if (!bi_inverse) {
        if (bi_perm.empty())
          throw CLI::ValidationError("--perm", "required for this direction");
        result = d2_231_to_composition(Permutation::parse(bi_perm)).str();
      } else {
        std::string src = !bi_comp.empty() ? bi_comp : bi_perm;
        if (src.empty())
          throw CLI::ValidationError("--comp", "composition input required");
        std::vector<int> parts;
        std::string tok;
        for (char c : src + "+") {
          if (c == '+') {
            if (tok.empty()) throw InvalidComposition("empty part");
            parts.push_back(std::stoi(tok));
            tok.clear();
          } else {
            tok += c;
          }
        }
        result = perm_out(composition_to_d2_231(WeakComposition::of(parts)));
      }
    } else if (bi_name == "d2-3142-dyck") {
      if (!bi_inverse) {
        if (bi_perm.empty())
          throw CLI::ValidationError("--perm", "required for this direction");
        result = d2_3142_to_dyck(Permutation::parse(bi_perm)).word();
      } else {
        if (bi_path.empty())
          throw CLI::ValidationError("--path", "required for --inverse");
        result = perm_out(dyck_to_d2_3142(DyckPath(bi_path)));
      }
    } else {
      throw CLI::ValidationError("name", "unknown bijection '" + bi_name + "'");
    }
    if (bi_format == "json")
      std::cout << json{{"result", result}}.dump() << "\n";
    else
      std::cout << result << "\n";
    return 0;
  }

  if (cmd_wilf->parsed()) {
    const auto kind = parse_kind(wi_kind);
    const auto table = wilf_classes(kind, wi_len, wi_nmax, limits, wi_parallel);
    if (wi_format == "json") {
      json arr = json::array();
      for (const auto& cls : table.classes) {
        json members = json::array();
        for (const auto& m : cls.members) members.push_back(m.str());
        arr.push_back({{"fingerprint", cls.fingerprint}, {"members", members}});
      }
      std::cout << arr.dump() << "\n";
    } else {
      for (const auto& cls : table.classes) {
        std::string fp;
        for (size_t i = 0; i < cls.fingerprint.size(); ++i) {
          if (i) fp += ",";
          fp += std::to_string(cls.fingerprint[i]);
        }
        std::string ms;
        for (size_t i = 0; i < cls.members.size(); ++i) {
          if (i) ms += " ";
          ms += cls.members[i].str();
        }
        if (wi_format == "csv")
          std::cout << "\"" << fp << "\",\"" << ms << "\"\n";
        else
          std::cout << fp << "  :  " << ms << "\n";
      }
    }
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const LimitExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitLimit;
  } catch (const UnknownTheorem& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UnknownSeries& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UnknownFamily& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
