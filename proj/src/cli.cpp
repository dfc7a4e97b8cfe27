#include "nonconsec/cli.hpp"

#include <cctype>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "nonconsec/bijections.hpp"
#include "nonconsec/counting.hpp"
#include "nonconsec/oracle.hpp"
#include "nonconsec/perm.hpp"
#include "nonconsec/series.hpp"

namespace nonconsec {

namespace {

using nlohmann::json;

constexpr const char* kVersion = "1.0.0";

// Unsupported flag/method combinations and malformed arguments; exits with 2.
class usage_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GlobalOpts {
  bool json_output = false;
  bool quiet = false;
  int ceiling = kDefaultOracleCeiling;
  std::string out_file;
};

json make_record(const std::string& command, json params, json result,
                 std::vector<std::string> methods) {
  return json{{"command", command},
              {"methods", methods},
              {"params", std::move(params)},
              {"result", std::move(result)},
              {"version", kVersion}};
}

void emit(const GlobalOpts& g, std::ostream& out, const json& record, const std::string& plain) {
  if (!g.quiet) {
    if (g.json_output)
      out << record.dump(2) << "\n";
    else
      out << plain;
  }
  if (!g.out_file.empty()) {
    std::ofstream f(g.out_file);
    if (!f) throw invalid_input("cannot open output file '" + g.out_file + "'");
    f << record.dump(2) << "\n";
  }
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  if (text.find_first_not_of(" \t") == std::string::npos) return out;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stoi(token, &used));
      while (used < token.size() && std::isspace(static_cast<unsigned char>(token[used]))) ++used;
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw usage_error("not an integer list: '" + text + "'");
    }
  }
  return out;
}

std::string join_counts(const std::vector<BigCount>& values) {
  std::string s;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) s += ' ';
    s += values[i].str();
  }
  return s;
}

// ---------------------------------------------------------------------------
// count

BigCount compute_count(const std::string& pattern, int n, const std::string& method,
                       int ceiling) {
  const bool formula_like = method == "formula" || method == "recurrence";
  if (pattern == "21") {
    if (method == "oracle") return count_avoiders_bruteforce(n, Pattern::parse("21"), ceiling);
    if (formula_like) return fibonacci(n + 1);
    throw usage_error("no generating-function method for pattern 21");
  }
  if (pattern == "321") {
    if (method == "oracle") return count_avoiders_bruteforce(n, Pattern::parse("321"), ceiling);
    if (method == "recurrence") return n == 0 ? BigCount(1) : a_sequence_recurrence(n)[static_cast<size_t>(n)];
    if (method == "gf") return n == 0 ? BigCount(1) : gf_321_coefficients(n)[static_cast<size_t>(n)];
    throw usage_error("pattern 321 has no closed formula; use recurrence, gf or oracle");
  }
  if (pattern == "132") {
    if (method == "oracle") return count_avoiders_bruteforce(n, Pattern::parse("132"), ceiling);
    if (formula_like) return count_132_formula(n);
    if (method == "gf") {
      const auto composed = gf_132_coefficients(n, Gf132Method::composition);
      const auto closed = gf_132_coefficients(n, Gf132Method::closed_form);
      if (composed != closed)
        throw internal_error("the two 132 generating-function routes disagree at order " +
                             std::to_string(n));
      return composed[static_cast<size_t>(n)];
    }
  }
  throw usage_error("unsupported pattern/method combination");
}

void run_count(const GlobalOpts& g, std::ostream& out, const std::string& pattern, int n,
               const std::string& method) {
  const BigCount value = compute_count(pattern, n, method, g.ceiling);
  json params{{"pattern", pattern}, {"n", n}, {"method", method}};
  json result{{"count", value.str()}};
  emit(g, out, make_record("count", params, result, {method}), value.str() + "\n");
}

// ---------------------------------------------------------------------------
// enumerate

void run_enumerate(const GlobalOpts& g, std::ostream& out, const std::string& label_text,
                   const std::string& format) {
  ClassLabel label;
  try {
    label = ClassLabel::parse(label_text);
  } catch (const invalid_input& e) {
    // Malformed label text is a usage problem; an out-of-range n or k
    // surfaces later from enumerate_class as a domain error.
    throw usage_error(e.what());
  }
  const auto members = enumerate_class(label, g.ceiling);
  std::string plain;
  json names = json::array();
  for (const auto& p : members) {
    plain += p.str() + "\n";
    names.push_back(p.str());
  }
  GlobalOpts eff = g;
  eff.json_output = g.json_output || format == "json";
  json params{{"class", label.str()}, {"format", eff.json_output ? "json" : "plain"}};
  json result{{"count", std::to_string(members.size())}, {"members", names}};
  emit(eff, out, make_record("enumerate", params, result, {"oracle"}), plain);
}

// ---------------------------------------------------------------------------
// verify

struct IdentityResult {
  std::string name;
  std::string detail;
  bool pass = true;
};

void mismatch(IdentityResult& id, const std::string& text) {
  id.pass = false;
  if (!id.detail.empty()) id.detail += "; ";
  id.detail += text;
}

std::vector<IdentityResult> verify_21(int max_n, int ceiling) {
  std::vector<IdentityResult> ids;
  const Pattern p21 = Pattern::parse("21");

  IdentityResult counts{"oracle avoider count equals F(n+1)", "", true};
  std::vector<BigCount> agreed;
  for (int n = 0; n <= max_n; ++n) {
    const BigCount oracle = count_avoiders_bruteforce(n, p21, ceiling);
    const BigCount fib = fibonacci(n + 1);
    if (oracle != fib)
      mismatch(counts, "n=" + std::to_string(n) + ": oracle=" + oracle.str() +
                           " fibonacci=" + fib.str());
    else
      agreed.push_back(oracle);
  }
  if (counts.pass) counts.detail = "n=0.." + std::to_string(max_n) + ": " + join_counts(agreed);
  ids.push_back(counts);

  IdentityResult bij{"gap-2 subsets of [1,n-1] biject onto the avoiders (swap21)", "", true};
  for (int n = 0; n <= max_n; ++n) {
    const auto sets = ScatteredSet::enumerate(1, n - 1, 2);
    std::set<Permutation> image;
    bool roundtrips = true;
    for (const auto& s : sets) {
      const Permutation p = scattered_to_perm(n, s);
      image.insert(p);
      if (perm_to_scattered(p) != s) roundtrips = false;
    }
    std::set<Permutation> avoiders;
    for (const auto& p : enumerate_sn(n, ceiling))
      if (avoids_nonconsecutive(p, p21)) avoiders.insert(p);
    if (!roundtrips || image.size() != sets.size() || image != avoiders)
      mismatch(bij, "n=" + std::to_string(n) + ": image size " + std::to_string(image.size()) +
                        " vs " + std::to_string(avoiders.size()) + " avoiders");
  }
  if (bij.pass) bij.detail = "n=0.." + std::to_string(max_n);
  ids.push_back(bij);
  return ids;
}

std::vector<IdentityResult> verify_321(int max_n, int ceiling) {
  std::vector<IdentityResult> ids;
  const int seq_max = std::max(max_n, 1);
  const auto aseq = a_sequence_recurrence(seq_max);
  const auto gf = gf_321_coefficients(seq_max);
  const auto dseq = d_sequence(seq_max);
  std::vector<Classes321> sweeps;
  for (int n = 0; n <= max_n; ++n) sweeps.push_back(sweep_321_classes(n, ceiling));

  IdentityResult counts{"a_n agrees across oracle, recurrence and generating function", "", true};
  std::vector<BigCount> agreed;
  for (int n = 0; n <= max_n; ++n) {
    const BigCount& oracle = sweeps[static_cast<size_t>(n)].a;
    const BigCount rec = n == 0 ? BigCount(1) : aseq[static_cast<size_t>(n)];
    const BigCount fromgf = n == 0 ? BigCount(1) : gf[static_cast<size_t>(n)];
    if (oracle != rec || rec != fromgf)
      mismatch(counts, "n=" + std::to_string(n) + ": oracle=" + oracle.str() +
                           " recurrence=" + rec.str() + " gf=" + fromgf.str());
    else
      agreed.push_back(rec);
  }
  if (counts.pass) counts.detail = "n=0.." + std::to_string(max_n) + ": " + join_counts(agreed);
  ids.push_back(counts);

  IdentityResult partition{"|A_n| = |B_n| + |D_n|", "", true};
  for (int n = 0; n <= max_n; ++n) {
    const auto& s = sweeps[static_cast<size_t>(n)];
    if (s.a != s.b + s.d)
      mismatch(partition, "n=" + std::to_string(n) + ": " + s.a.str() + " != " + s.b.str() +
                              " + " + s.d.str());
  }
  if (partition.pass) partition.detail = "n=0.." + std::to_string(max_n);
  ids.push_back(partition);

  IdentityResult bd{"|B_n| = |D_{n-2}|", "", true};
  for (int n = 3; n <= max_n; ++n) {
    const BigCount& b = sweeps[static_cast<size_t>(n)].b;
    const BigCount& d = sweeps[static_cast<size_t>(n) - 2].d;
    if (b != d)
      mismatch(bd, "n=" + std::to_string(n) + ": |B|=" + b.str() + " |D|=" + d.str());
  }
  if (bd.pass) bd.detail = "n=3.." + std::to_string(max_n);
  ids.push_back(bd);

  IdentityResult product{"|A_{n,k}| = C_k * d_{n-k-1}", "", true};
  for (int n = 3; n <= max_n; ++n)
    for (int k = 1; k <= n - 2; ++k) {
      const BigCount& lhs = sweeps[static_cast<size_t>(n)].a_k[static_cast<size_t>(k)];
      const BigCount rhs = catalan(k) * dseq[static_cast<size_t>(n - k - 1)];
      if (lhs != rhs)
        mismatch(product, "n=" + std::to_string(n) + ",k=" + std::to_string(k) + ": " +
                              lhs.str() + " != " + rhs.str());
    }
  if (product.pass) product.detail = "n=3.." + std::to_string(max_n) + ", 1<=k<=n-2";
  ids.push_back(product);

  IdentityResult decomp{"|A_n| = C_n + sum_k |A_{n,k}|", "", true};
  for (int n = 0; n <= max_n; ++n) {
    const auto& s = sweeps[static_cast<size_t>(n)];
    BigCount sum = catalan(n);
    for (const auto& v : s.a_k) sum += v;
    if (s.a != sum)
      mismatch(decomp, "n=" + std::to_string(n) + ": " + s.a.str() + " != " + sum.str());
  }
  if (decomp.pass) decomp.detail = "n=0.." + std::to_string(max_n);
  ids.push_back(decomp);

  IdentityResult first{"|A_{n,1}| = |B_n| (first 321 at position 1)", "", true};
  for (int n = 3; n <= max_n; ++n) {
    const auto& s = sweeps[static_cast<size_t>(n)];
    if (s.a_k[1] != s.b)
      mismatch(first, "n=" + std::to_string(n) + ": " + s.a_k[1].str() + " != " + s.b.str());
  }
  if (first.pass) first.detail = "n=3.." + std::to_string(max_n);
  ids.push_back(first);
  return ids;
}

std::vector<IdentityResult> verify_132(int max_n, int ceiling) {
  std::vector<IdentityResult> ids;
  std::vector<Classes132> sweeps;
  for (int n = 0; n <= max_n; ++n) sweeps.push_back(sweep_132_classes(n, ceiling));
  const auto composed = gf_132_coefficients(max_n, Gf132Method::composition);
  const auto closed = gf_132_coefficients(max_n, Gf132Method::closed_form);

  IdentityResult counts{"e_n agrees across oracle, Theorem-3 sum and both generating functions",
                        "", true};
  std::vector<BigCount> agreed;
  for (int n = 0; n <= max_n; ++n) {
    const BigCount& oracle = sweeps[static_cast<size_t>(n)].e;
    const BigCount formula = count_132_formula(n);
    const BigCount& comp = composed[static_cast<size_t>(n)];
    const BigCount& clos = closed[static_cast<size_t>(n)];
    if (oracle != formula || formula != comp || comp != clos)
      mismatch(counts, "n=" + std::to_string(n) + ": oracle=" + oracle.str() + " formula=" +
                           formula.str() + " gf=" + comp.str() + "/" + clos.str());
    else
      agreed.push_back(formula);
  }
  if (counts.pass) counts.detail = "n=0.." + std::to_string(max_n) + ": " + join_counts(agreed);
  ids.push_back(counts);

  IdentityResult product{"|E_{n,k}| = binom(n-2k,k) * C_{n-2k}", "", true};
  for (int n = 0; n <= max_n; ++n)
    for (int k = 0; k <= n / 3; ++k) {
      const BigCount& lhs = sweeps[static_cast<size_t>(n)].e_k[static_cast<size_t>(k)];
      const BigCount rhs = binomial(n - 2 * k, k) * catalan(n - 2 * k);
      if (lhs != rhs)
        mismatch(product, "n=" + std::to_string(n) + ",k=" + std::to_string(k) + ": " +
                              lhs.str() + " != " + rhs.str());
    }
  if (product.pass) product.detail = "n=0.." + std::to_string(max_n) + ", 0<=k<=n/3";
  ids.push_back(product);

  IdentityResult total{"|E_n| = sum_k |E_{n,k}|", "", true};
  for (int n = 0; n <= max_n; ++n) {
    const auto& s = sweeps[static_cast<size_t>(n)];
    BigCount sum = 0;
    for (const auto& v : s.e_k) sum += v;
    if (s.e != sum)
      mismatch(total, "n=" + std::to_string(n) + ": " + s.e.str() + " != " + sum.str());
  }
  if (total.pass) total.detail = "n=0.." + std::to_string(max_n);
  ids.push_back(total);
  return ids;
}

int run_verify(const GlobalOpts& g, std::ostream& out, const std::string& pattern, int max_n) {
  if (max_n > g.ceiling)
    throw invalid_input("max-n=" + std::to_string(max_n) + " exceeds the oracle ceiling " +
                        std::to_string(g.ceiling));
  std::vector<IdentityResult> ids;
  std::vector<std::string> methods;
  if (pattern == "21") {
    ids = verify_21(max_n, g.ceiling);
    methods = {"oracle", "formula"};
  } else if (pattern == "321") {
    ids = verify_321(max_n, g.ceiling);
    methods = {"oracle", "recurrence", "gf"};
  } else {
    ids = verify_132(max_n, g.ceiling);
    methods = {"oracle", "formula", "gf"};
  }

  bool all_pass = true;
  std::string plain;
  json jids = json::array();
  for (const auto& id : ids) {
    all_pass = all_pass && id.pass;
    plain += std::string(id.pass ? "PASS  " : "FAIL  ") + id.name + "  [" + id.detail + "]\n";
    jids.push_back(json{{"name", id.name}, {"detail", id.detail}, {"pass", id.pass}});
  }
  plain += all_pass ? "all identities pass\n" : "verification FAILED\n";

  json params{{"pattern", pattern}, {"max_n", max_n}};
  json result{{"all_pass", all_pass}, {"identities", jids}};
  emit(g, out, make_record("verify", params, result, methods), plain);
  return all_pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// bijection

struct BijectionArgs {
  std::string perm;
  std::string sigma;
  std::string tau;
  std::string set_text;
  int n = -1;
  bool have_n = false;
  bool have_set = false;
  bool have_perm = false;
  bool roundtrip = false;
};

void run_bijection(const GlobalOpts& g, std::ostream& out, const std::string& name,
                   const BijectionArgs& args) {
  json params{{"name", name}, {"roundtrip", args.roundtrip}};
  json result;
  std::string plain;

  auto require = [&](bool ok, const std::string& what) {
    if (!ok) throw usage_error("bijection " + name + " requires " + what);
  };
  auto confirm_roundtrip = [&](bool ok) {
    if (!ok) throw internal_error("round trip failed to recover the input");
    result["roundtrip"] = "ok";
    plain += "roundtrip ok\n";
  };

  if (name == "swap21") {
    require(args.have_set != args.have_perm, "exactly one of --set (with --n) or --perm");
    if (args.have_set) {
      require(args.have_n, "--n alongside --set");
      ScatteredSet s(1, args.n - 1, 2, parse_int_list(args.set_text));
      const Permutation p = scattered_to_perm(args.n, s);
      result["perm"] = p.str();
      params["n"] = args.n;
      params["set"] = s.elements();
      plain = p.str() + "\n";
      if (args.roundtrip) confirm_roundtrip(perm_to_scattered(p) == s);
    } else {
      const Permutation p = Permutation::parse(args.perm);
      const ScatteredSet s = perm_to_scattered(p);
      result["set"] = s.elements();
      params["perm"] = p.str();
      plain = s.str() + "\n";
      if (args.roundtrip) confirm_roundtrip(scattered_to_perm(p.size(), s) == p);
    }
  } else if (name == "b-to-d" || name == "d-to-b") {
    require(!args.perm.empty(), "--perm");
    const Permutation p = Permutation::parse(args.perm);
    params["perm"] = p.str();
    const Permutation image = name == "b-to-d" ? b_to_d(p) : d_to_b(p);
    result["perm"] = image.str();
    plain = image.str() + "\n";
    if (args.roundtrip)
      confirm_roundtrip((name == "b-to-d" ? d_to_b(image) : b_to_d(image)) == p);
  } else if (name == "split321") {
    require(!args.perm.empty(), "--perm");
    const Permutation p = Permutation::parse(args.perm);
    params["perm"] = p.str();
    const SplitPair pair = split_321(p);
    result["sigma"] = pair.sigma.str();
    result["tau"] = pair.tau.str();
    plain = "sigma " + pair.sigma.str() + "; tau " + pair.tau.str() + "\n";
    if (args.roundtrip) confirm_roundtrip(unsplit_321(pair.sigma, pair.tau) == p);
  } else if (name == "unsplit321") {
    require(!args.sigma.empty() && !args.tau.empty(), "--sigma and --tau");
    const Permutation sigma = Permutation::parse(args.sigma);
    const Permutation tau = Permutation::parse(args.tau);
    params["sigma"] = sigma.str();
    params["tau"] = tau.str();
    const Permutation p = unsplit_321(sigma, tau);
    result["perm"] = p.str();
    plain = p.str() + "\n";
    if (args.roundtrip) confirm_roundtrip(split_321(p) == SplitPair{sigma, tau});
  } else if (name == "decompose132") {
    require(!args.perm.empty(), "--perm");
    const Permutation p = Permutation::parse(args.perm);
    params["perm"] = p.str();
    const Decomposition132 dec = decompose_132(p);
    result["positions"] = dec.middles.elements();
    result["remainder"] = dec.remainder.str();
    plain = "positions " + dec.middles.str() + "; remainder " + dec.remainder.str() + "\n";
    if (args.roundtrip)
      confirm_roundtrip(compose_132(p.size(), dec.middles, dec.remainder) == p);
  } else if (name == "compose132") {
    require(args.have_n, "--n");
    require(args.have_set, "--set");
    const ScatteredSet s(2, args.n - 1, 3, parse_int_list(args.set_text));
    const Permutation q = Permutation::parse(args.perm);
    params["n"] = args.n;
    params["set"] = s.elements();
    params["perm"] = q.str();
    const Permutation p = compose_132(args.n, s, q);
    result["perm"] = p.str();
    plain = p.str() + "\n";
    if (args.roundtrip) confirm_roundtrip(decompose_132(p) == Decomposition132{s, q});
  } else {
    throw usage_error("unknown bijection '" + name + "'");
  }

  emit(g, out, make_record("bijection", params, result, {"bijection"}), plain);
}

// ---------------------------------------------------------------------------
// series

void run_series(const GlobalOpts& g, std::ostream& out, const std::string& which, int terms) {
  if (terms < 1) throw invalid_input("--terms must be at least 1");
  std::vector<BigCount> values;
  int start_index = 0;
  if (which == "catalan") {
    for (int i = 0; i < terms; ++i) values.push_back(catalan(i));
  } else if (which == "D321") {
    const auto d = gf_d_coefficients(terms);
    values.assign(d.begin() + 1, d.end());
    start_index = 1;
  } else if (which == "A321") {
    const auto a = gf_321_coefficients(terms);
    values.assign(a.begin() + 1, a.end());
    start_index = 1;
  } else if (which == "GF132-composed") {
    values = gf_132_coefficients(terms - 1, Gf132Method::composition);
  } else if (which == "GF132-closed") {
    values = gf_132_coefficients(terms - 1, Gf132Method::closed_form);
  } else {
    throw usage_error("unknown series '" + which + "'");
  }

  json coeffs = json::array();
  for (const auto& v : values) coeffs.push_back(v.str());
  json params{{"which", which}, {"terms", terms}};
  json result{{"coefficients", coeffs}, {"start_index", start_index}};
  emit(g, out, make_record("series", params, result, {"gf"}), join_counts(values) + "\n");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact counts, classes, series and bijections for permutations avoiding a "
               "nonconsecutive 21, 321 or 132"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  GlobalOpts g;
  app.add_flag("--json", g.json_output, "emit the JSON record instead of plain text");
  app.add_flag("--quiet", g.quiet, "suppress stdout (exit status still reports the outcome)");
  app.add_option("--oracle-ceiling", g.ceiling,
                 "largest n the exhaustive oracle accepts (default 10)");
  app.add_option("--out", g.out_file, "also write the JSON record to this file");

  int exit_code = 0;

  auto* count_cmd = app.add_subcommand("count", "count avoiders of a nonconsecutive pattern");
  std::string count_pattern, count_method = "oracle";
  int count_n = 0;
  count_cmd->add_option("--pattern", count_pattern, "pattern: 21, 321 or 132")
      ->required()
      ->check(CLI::IsMember({"21", "321", "132"}));
  count_cmd->add_option("--n", count_n, "permutation length")->required();
  count_cmd->add_option("--method", count_method, "oracle, formula, recurrence or gf")
      ->check(CLI::IsMember({"oracle", "formula", "recurrence", "gf"}));
  count_cmd->callback([&] {
    if (count_n < 0) throw invalid_input("--n must be nonnegative");
    run_count(g, out, count_pattern, count_n, count_method);
  });

  auto* enum_cmd = app.add_subcommand("enumerate", "list the members of a permutation class");
  std::string enum_label, enum_format = "plain";
  enum_cmd->add_option("class", enum_label, "class label, e.g. A(5), B(3), A(5,2), E(10,2)")
      ->required();
  enum_cmd->add_option("--format", enum_format, "plain or json")
      ->check(CLI::IsMember({"plain", "json"}));
  enum_cmd->callback([&] { run_enumerate(g, out, enum_label, enum_format); });

  auto* verify_cmd =
      app.add_subcommand("verify", "cross-check every counting identity for a pattern");
  std::string verify_pattern;
  int verify_max_n = 8;
  verify_cmd->add_option("--pattern", verify_pattern, "pattern: 21, 321 or 132")
      ->required()
      ->check(CLI::IsMember({"21", "321", "132"}));
  verify_cmd->add_option("--max-n", verify_max_n, "largest n to check (default 8)");
  verify_cmd->callback([&] {
    if (verify_max_n < 0) throw invalid_input("--max-n must be nonnegative");
    exit_code = run_verify(g, out, verify_pattern, verify_max_n);
  });

  auto* bij_cmd = app.add_subcommand("bijection", "apply one of the structural maps");
  std::string bij_name;
  BijectionArgs bij_args;
  bij_cmd
      ->add_option("name", bij_name,
                   "swap21, b-to-d, d-to-b, split321, unsplit321, decompose132 or compose132")
      ->required()
      ->check(CLI::IsMember({"swap21", "b-to-d", "d-to-b", "split321", "unsplit321",
                             "decompose132", "compose132"}));
  bij_cmd->add_option("--perm", bij_args.perm, "permutation in one-line notation");
  bij_cmd->add_option("--sigma", bij_args.sigma, "sigma component (unsplit321)");
  bij_cmd->add_option("--tau", bij_args.tau, "tau component (unsplit321)");
  bij_cmd->add_option("--set", bij_args.set_text, "scattered-set elements, e.g. 4,8");
  bij_cmd->add_option("--n", bij_args.n, "target length n");
  bij_cmd->add_flag("--roundtrip", bij_args.roundtrip, "apply the inverse and confirm identity");
  bij_cmd->callback([&] {
    bij_args.have_n = bij_cmd->count("--n") > 0;
    bij_args.have_set = bij_cmd->count("--set") > 0;
    bij_args.have_perm = bij_cmd->count("--perm") > 0;
    run_bijection(g, out, bij_name, bij_args);
  });

  auto* series_cmd = app.add_subcommand("series", "expand a generating function exactly");
  std::string series_which;
  int series_terms = 10;
  series_cmd
      ->add_option("which", series_which,
                   "catalan, D321, A321, GF132-composed or GF132-closed")
      ->required()
      ->check(CLI::IsMember({"catalan", "D321", "A321", "GF132-composed", "GF132-closed"}));
  series_cmd->add_option("--terms", series_terms, "number of coefficients to print");
  series_cmd->callback([&] { run_series(g, out, series_which, series_terms); });

  std::vector<const char*> argv;
  argv.push_back("nonconsec");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::CallForVersion& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  } catch (const usage_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const internal_error& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const invalid_input& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
  return exit_code;
}

}  // namespace nonconsec
