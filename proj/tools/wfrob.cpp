// Command-line front end. Every command prints one JSON object on stdout.
//
// Exit status: 0 on success, 1 on a domain error (JSON {"error","detail"}),
// 2 on a usage error. `verify` exits 1 if any row fails.

#include "wfrob/blocks.hpp"
#include "wfrob/graded_ring.hpp"
#include "wfrob/ktheory.hpp"
#include "wfrob/rep_dims.hpp"
#include "wfrob/steinberg.hpp"
#include "wfrob/subdivisor.hpp"
#include "wfrob/summand.hpp"
#include "wfrob/weight_order.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <charconv>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

using json = nlohmann::json;
using namespace wfrob;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string type;
  std::int64_t p = 0;
  std::string lambda, mu, cls, point, ring;
  std::int64_t d = 0;
  bool expand = false;
  bool pretty = false;
  std::uint64_t limit = 1'000'000;
};

Weight parse_weight(const RootSystem &rs, const std::string &text,
                    const char *flag) {
  if (text.empty())
    throw UsageError(std::string("missing ") + flag);
  Weight w;
  try {
    w = Weight::parse(text);
  } catch (const std::invalid_argument &e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
  if (w.rank() != rs.rank())
    throw UsageError(std::string(flag) + " has " + std::to_string(w.rank()) +
                     " coordinates but " + rs.name() + " has rank " +
                     std::to_string(rs.rank()));
  return w;
}

RootSystem parse_type(const std::string &name) {
  if (name.empty())
    throw UsageError("missing --type");
  try {
    return RootSystem::parse(name);
  } catch (const DomainError &) {
    throw;
  } catch (const std::exception &e) {
    throw UsageError(std::string("--type: ") + e.what());
  }
}

std::int64_t need_prime(const Common &c) {
  if (c.p == 0)
    throw UsageError("missing -p/--prime");
  return c.p;
}

std::uint64_t dp_state_limit() {
  const char *env = std::getenv("WF_DP_STATE_LIMIT");
  if (!env || !*env)
    return kDefaultStateLimit;
  std::uint64_t v = 0;
  const std::string_view s(env);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || v == 0)
    throw UsageError("WF_DP_STATE_LIMIT must be a positive integer");
  return v;
}

json weights_json(const std::vector<Weight> &ws) {
  json out = json::array();
  for (const auto &w : ws)
    out.push_back(w.to_string());
  return out;
}

json character_json(const CharacterPair &chi) {
  return {{"left", chi.left.to_string()}, {"right", chi.right.to_string()}};
}

// ---------------------------------------------------------------------------

json cmd_summand_check(const Common &c) {
  const auto rs = parse_type(c.type);
  const auto p = need_prime(c);
  const auto lambda = parse_weight(rs, c.lambda, "--lambda");
  const auto mu = parse_weight(rs, c.mu, "--mu");
  const auto v = check_summand(rs, lambda, mu, p);
  json out{{"necessary", v.necessary}, {"sufficient", v.sufficient}};
  if (v.witness)
    out["witness"] = {{"a", v.witness->a}, {"b", v.witness->b}};
  return out;
}

json cmd_summand_enumerate(const Common &c) {
  const auto rs = parse_type(c.type);
  const auto p = need_prime(c);
  const auto lambda = parse_weight(rs, c.lambda, "--lambda");
  return {{"candidates", weights_json(enumerate_candidate_mu(rs, lambda, p))},
          {"guaranteed", weights_json(enumerate_guaranteed_mu(rs, lambda, p))}};
}

json cmd_count(const Common &c) {
  const auto rs = parse_type(c.type);
  const auto p = need_prime(c);
  const auto cls = parse_weight(rs, c.cls, "--class");
  const auto r = count_subdivisors(rs, cls, p, dp_state_limit());
  if (r.cap_binds)
    std::cerr << "warning: the exponent cap p-1 binds for class " << cls.to_string()
              << " at p=" << p << "; the count depends on p\n";
  return {{"count", r.count.str()}};
}

json cmd_ranks(const Common &c) {
  const auto rs = parse_type(c.type);
  const auto p = need_prime(c);
  const auto report = rank_report(rs, p);
  json ranks = json::array();
  for (const auto &r : report.rank_set)
    ranks.push_back(r.str());
  json classes = json::array();
  for (const auto &info : report.classes)
    classes.push_back({{"rep", info.linkage.representative.to_string()},
                       {"a", info.linkage.a_lambda},
                       {"orbit", weights_json(info.linkage.orbit)},
                       {"d", info.d}});
  return {{"rank_set", ranks}, {"per_class", classes}};
}

json cmd_blocks(const Common &c) {
  const auto rs = parse_type(c.type);
  const auto p = need_prime(c);
  const auto lambda = reduce_restricted(parse_weight(rs, c.lambda, "--lambda"), p);
  const auto cls = linkage_class(rs, lambda, p);
  const auto sig = alcove_signature(rs, lambda, p);
  json out{{"lambda", lambda.to_string()},
           {"a", cls.a_lambda},
           {"orbit", weights_json(cls.orbit)},
           {"signature", sig},
           {"separation", separation_count(sig)},
           {"block_dim", block_dimension(rs, lambda, p).str()}};
  try {
    out["d"] = d_lambda(rs, lambda, p);
  } catch (const DomainError &e) {
    out["d"] = nullptr;
    out["d_unavailable"] = e.code();
  }
  return out;
}

json cmd_dims(const Common &c) {
  const auto rs = parse_type(c.type);
  const auto lambda = parse_weight(rs, c.lambda, "--lambda");
  json out;
  out["weyl_dim"] = lambda.is_dominant() ? json(weyl_dimension(rs, lambda).str()) : json(nullptr);
  out["filtration_dim"] = filtration_dimension(rs, lambda).str();
  if (c.p != 0)
    out["steinberg_dim"] = steinberg_dimension(rs, c.p).str();
  return out;
}

json cmd_steinberg(const Common &c) {
  const auto rs = parse_type(c.type);
  const auto p = need_prime(c);
  const auto lambda = parse_weight(rs, c.lambda, "--lambda");
  return {{"mu", steinberg_block_weight(rs, lambda, p).to_string()}};
}

json cmd_kclass(const Common &c) {
  const auto rs = parse_type(c.type);
  const auto p = need_prime(c);
  const auto lambda = parse_weight(rs, c.lambda, "--lambda");
  if (c.point.empty())
    throw UsageError("missing --point y,w");
  Weight pt;
  try {
    pt = Weight::parse(c.point);
  } catch (const std::invalid_argument &e) {
    throw UsageError(std::string("--point: ") + e.what());
  }
  const auto n = static_cast<std::int64_t>(rs.weyl_elements().size());
  if (pt.rank() != 2 || pt[0] < 0 || pt[1] < 0 || pt[0] >= n || pt[1] >= n)
    throw UsageError("--point must be two Weyl group indices in [0, " +
                     std::to_string(n - 1) + "]");
  const auto cls = localized_class(rs, lambda, p, static_cast<std::size_t>(pt[0]),
                                   static_cast<std::size_t>(pt[1]));
  json tangent = json::array();
  for (const auto &chi : cls.tangent)
    tangent.push_back(character_json(chi));
  json out{{"point", {pt[0], pt[1]}},
           {"base", character_json(cls.base)},
           {"tangent", tangent},
           {"p", p},
           {"augmentation", cls.augmentation().str()}};
  if (c.expand) {
    std::map<CharacterPair, std::uint64_t> mult;
    for (const auto &chi : expand_class(cls, c.limit))
      ++mult[chi];
    json terms = json::array();
    for (const auto &[chi, k] : mult) {
      json t = character_json(chi);
      t["multiplicity"] = k;
      terms.push_back(t);
    }
    out["expansion"] = terms;
  }
  return out;
}

json cmd_chern(const Common &c) {
  const auto p = need_prime(c);
  const std::string &r = c.ring;
  if (r.rfind("Pm:", 0) != 0)
    throw UsageError("--ring must look like Pm:<m>");
  std::size_t m = 0;
  auto [ptr, ec] = std::from_chars(r.data() + 3, r.data() + r.size(), m);
  if (ec != std::errc() || ptr != r.data() + r.size() || m == 0)
    throw UsageError("--ring must look like Pm:<m> with m >= 1");
  const auto pm = GradedRing::projective_space(m);
  const auto out = chern_pushforward(pm, line_bundle_chern(pm, c.d),
                                     todd_projective_space(pm), p, static_cast<int>(m));
  json basis = json::array(), coeffs = json::array();
  for (std::size_t i = 0; i < pm.size(); ++i) {
    basis.push_back(pm.label(i));
    coeffs.push_back(to_string(out.coeffs[i]));
  }
  return {{"ring", "P^" + std::to_string(m)}, {"basis", basis}, {"coefficients", coeffs}};
}

// Published values, checked where the statement applies.
json cmd_verify() {
  json rows = json::array();
  auto row = [&](const std::string &name, const std::string &expected,
                 const std::string &got) {
    rows.push_back({{"name", name}, {"expected", expected}, {"got", got},
                    {"pass", expected == got}});
  };
  auto set_str = [](const std::set<BigInt> &s) {
    std::string out;
    for (const auto &x : s)
      out += (out.empty() ? "" : ",") + x.str();
    return out;
  };
  const auto a1 = RootSystem::parse("A1");
  const auto a2 = RootSystem::parse("A2");
  const auto a3 = RootSystem::parse("A3");
  const auto b2 = RootSystem::parse("B2");
  const auto g2 = RootSystem::parse("G2");

  // Subdivisor counts, at primes where no exponent cap binds.
  row("S(6,6) A2 p=11", "460", count_subdivisors(a2, Weight{6, 6}, 11).count.str());
  row("S(20,22) A2 p=37", "37290", count_subdivisors(a2, Weight{20, 22}, 37).count.str());
  row("S(20,21,22) A3 p=43", "14828077",
      count_subdivisors(a3, Weight{20, 21, 22}, 43).count.str());

  // PSL3 candidate bounds and lattice points.
  for (std::int64_t p : {11, 13}) {
    std::size_t lo = 1000, hi = 0, glo = 1000, ghi = 0;
    for (const auto &lambda : restricted_weights(a2, p)) {
      const auto n = enumerate_candidate_mu(a2, lambda, p).size();
      const auto g = enumerate_guaranteed_mu(a2, lambda, p).size();
      lo = std::min(lo, n);
      hi = std::max(hi, n);
      glo = std::min(glo, g);
      ghi = std::max(ghi, g);
    }
    const auto ps = std::to_string(p);
    row("candidate range A2 p=" + ps, "21..27", std::to_string(lo) + ".." + std::to_string(hi));
    row("guaranteed range A2 p=" + ps, "14..19", std::to_string(glo) + ".." + std::to_string(ghi));
  }
  for (std::int64_t p : {5, 11})
    row("PSL3 lattice points p=" + std::to_string(p),
        std::to_string(psl3_lattice_point_formula(p)),
        std::to_string(psl3_lattice_point_count(p)));

  // Canonical classes.
  row("K_X A1", "-4", canonical_class(a1).to_string());
  row("K_X A2", "-3,-3", canonical_class(a2).to_string());

  // Rank sets. A2 is the attained set; the other lists are the products
  // over the stated a-values and the full d table.
  row("rank set A2 p=7", "1,3,6,12,24", set_str(rank_set(a2, 7)));
  row("rank list B2 (a in 1,2,4,8)",
      "1,2,3,4,6,8,9,12,16,18,24,32,36,48,64,72,96,128",
      set_str(rank_envelope(b2, std::set<std::int64_t>{1, 2, 4, 8})));
  row("rank list A3 (a in 1,4,6,12,24)",
      "1,2,3,4,6,8,9,11,12,16,18,22,24,33,36,44,48,54,66,72,88,96,108,121,132,144,198,216,"
      "264,288,396,432,484,528,726,792,864,1452,1584,2904",
      set_str(rank_envelope(a3, std::set<std::int64_t>{1, 4, 6, 12, 24})));
  row("rank list G2 size (a in 1,2,3,4,6,12)", "149",
      std::to_string(rank_envelope(g2, std::set<std::int64_t>{1, 2, 3, 4, 6, 12}).size()));

  // Steinberg block.
  row("Steinberg A2 lambda=0 p=5", "-1,-1", steinberg_block_weight(a2, Weight{0, 0}, 5).to_string());
  row("Steinberg A3 lambda=0 p=5", "-2,0,-2",
      steinberg_block_weight(a3, Weight{0, 0, 0}, 5).to_string());
  row("Steinberg A2 lambda=(p-1)rho p=7", "0,0",
      steinberg_block_weight(a2, Weight{6, 6}, 7).to_string());

  // Small facts.
  row("d_lambda B2 p=3 lambda=0", "4", std::to_string(d_lambda(b2, Weight{0, 0}, 3)));
  row("d_lambda G2 bottom alcove", "29", std::to_string(d_lambda(g2, Weight{0, 0}, 13)));
  row("dim St A1 p=5", "5", steinberg_dimension(a1, 5).str());
  row("Thomsen P^3 p=2 d=0 e=0", "1", thomsen_multiplicity(3, 0, 0, 2).str());

  std::size_t passed = 0;
  for (const auto &r : rows)
    passed += r["pass"].get<bool>();
  return {{"rows", rows}, {"passed", passed}, {"failed", rows.size() - passed}};
}

void print_pretty(const json &out) {
  if (out.contains("rows")) {
    for (const auto &r : out["rows"]) {
      std::cout << (r["pass"].get<bool>() ? "PASS  " : "FAIL  ") << std::left
                << std::setw(40) << r["name"].get<std::string>();
      const auto got = r["got"].get<std::string>();
      std::cout << (got.size() > 60 ? got.substr(0, 57) + "..." : got) << "\n";
    }
    std::cout << out["passed"] << " passed, " << out["failed"] << " failed\n";
    return;
  }
  if (out.contains("per_class")) {
    std::cout << "rank set: ";
    for (const auto &r : out["rank_set"])
      std::cout << r.get<std::string>() << " ";
    std::cout << "\n" << std::left << std::setw(12) << "rep" << std::setw(4) << "a"
              << "orbit (d)\n";
    for (const auto &cls : out["per_class"]) {
      std::cout << std::setw(12) << cls["rep"].get<std::string>() << std::setw(4)
                << cls["a"].get<std::int64_t>();
      for (std::size_t i = 0; i < cls["orbit"].size(); ++i)
        std::cout << cls["orbit"][i].get<std::string>() << "(" << cls["d"][i] << ") ";
      std::cout << "\n";
    }
    return;
  }
  std::cout << out.dump(2) << "\n";
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Frobenius pushforwards on wonderful compactifications"};
  app.require_subcommand(1);
  Common c;

  auto add_type = [&](CLI::App *sub) { sub->add_option("--type", c.type, "A1..A5, B2, G2"); };
  auto add_prime = [&](CLI::App *sub) { sub->add_option("-p,--prime", c.p, "prime"); };
  auto add_lambda = [&](CLI::App *sub) {
    sub->add_option("--lambda", c.lambda, "weight, comma-separated omega-coordinates");
  };
  auto add_pretty = [&](CLI::App *sub) { sub->add_flag("--pretty", c.pretty, "human-readable output"); };

  auto *summand = app.add_subcommand("summand", "direct-summand conditions");
  summand->require_subcommand(1);
  auto *check = summand->add_subcommand("check", "necessary and sufficient tests for O(mu)");
  auto *enumerate = summand->add_subcommand("enumerate", "candidate and guaranteed mu");
  for (auto *sub : {check, enumerate}) {
    add_type(sub);
    add_prime(sub);
    add_lambda(sub);
    add_pretty(sub);
  }
  check->add_option("--mu", c.mu, "weight");

  auto *count = app.add_subcommand("count-subdivisors", "effective subdivisors of (p-1)K~ in a class");
  add_type(count);
  add_prime(count);
  count->add_option("--class", c.cls, "Picard class in omega-coordinates");
  add_pretty(count);

  auto *ranks = app.add_subcommand("ranks", "rank set and linkage classes");
  add_type(ranks);
  add_prime(ranks);
  add_pretty(ranks);

  auto *blocks = app.add_subcommand("blocks", "linkage class, alcove and block data of a weight");
  add_type(blocks);
  add_prime(blocks);
  add_lambda(blocks);
  add_pretty(blocks);

  auto *dims = app.add_subcommand("dims", "Weyl, filtration and Steinberg dimensions");
  add_type(dims);
  add_prime(dims);
  add_lambda(dims);
  add_pretty(dims);

  auto *stein = app.add_subcommand("steinberg", "line bundle in the Steinberg block");
  add_type(stein);
  add_prime(stein);
  add_lambda(stein);
  add_pretty(stein);

  auto *kclass = app.add_subcommand("kclass", "localized K-class at a fixed point");
  add_type(kclass);
  add_prime(kclass);
  add_lambda(kclass);
  kclass->add_option("--point", c.point, "fixed point as Weyl indices y,w");
  kclass->add_flag("--expand", c.expand, "list every character");
  kclass->add_option("--limit", c.limit, "largest expansion allowed");
  add_pretty(kclass);

  auto *chern = app.add_subcommand("chern", "Chern character of Fr_* O(d) on P^m");
  chern->add_option("--ring", c.ring, "Pm:<m>")->required();
  add_prime(chern);
  chern->add_option("-d", c.d, "degree of the line bundle");
  add_pretty(chern);

  auto *verify = app.add_subcommand("verify", "check the bundled table of published values");
  add_pretty(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    if (e.get_exit_code() == 0)
      return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    json out;
    if (check->parsed())
      out = cmd_summand_check(c);
    else if (enumerate->parsed())
      out = cmd_summand_enumerate(c);
    else if (count->parsed())
      out = cmd_count(c);
    else if (ranks->parsed())
      out = cmd_ranks(c);
    else if (blocks->parsed())
      out = cmd_blocks(c);
    else if (dims->parsed())
      out = cmd_dims(c);
    else if (stein->parsed())
      out = cmd_steinberg(c);
    else if (kclass->parsed())
      out = cmd_kclass(c);
    else if (chern->parsed())
      out = cmd_chern(c);
    else if (verify->parsed())
      out = cmd_verify();

    if (c.pretty)
      print_pretty(out);
    else
      std::cout << out.dump() << "\n";
    if (verify->parsed() && out["failed"].get<std::size_t>() != 0)
      return 1;
    return 0;
  } catch (const UsageError &e) {
    std::cerr << "error: " << e.what() << "\n" << app.help();
    return 2;
  } catch (const DomainError &e) {
    std::cout << json{{"error", e.code()}, {"detail", e.what()}}.dump() << "\n";
    return 1;
  }
}
