// One line per acceptance criterion: PASS/FAIL, runtime and a short detail.
// Exit status is nonzero when any gating criterion fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "oracles.hpp"
#include "schurring/cli.hpp"

using namespace schurring;
using nlohmann::json;

namespace {

const std::filesystem::path kData = SCHURRING_DATA_DIR;

struct Outcome {
  bool pass = false;
  std::string detail;
  /// Report bytes, compared across runs by the determinism criterion.
  std::string bytes;
};

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;
  bool gating;
  std::function<Outcome(unsigned workers)> body;
};

std::pair<int, std::string> cli(RunConfig config) {
  std::ostringstream out, err;
  const int status = run(config, out, err);
  if (status != kExitOk) std::cerr << err.str();
  return {status, out.str()};
}

RunConfig partition_config(const std::string& command, const std::string& file, unsigned workers) {
  RunConfig c;
  c.command = command;
  c.partition_path = (kData / file).string();
  c.workers = workers;
  return c;
}

RunConfig field_config(const std::string& command, const std::string& field, unsigned workers) {
  RunConfig c;
  c.command = command;
  c.field = field;
  c.workers = workers;
  c.format = Format::json;
  return c;
}

Outcome wielandt(unsigned workers) {
  const auto [status, out] = cli(partition_config("schurian-test", "wielandt-q5.json", workers));
  const auto j = json::parse(out);
  Outcome o;
  o.pass = status == kExitOk && j["criterion_verdict"] == "predicts_nonschurian" &&
           j["oracle_verdict"] == "non_schurian";
  o.detail = "criterion " + j["criterion_verdict"].get<std::string>() + ", oracle " +
             j["oracle_verdict"].get<std::string>() + ", |Aut| " + j["aut_order"].get<std::string>();
  o.bytes = out;
  return o;
}

Outcome ring_identities(unsigned workers) {
  auto c = field_config("verify-schur-ring", "5^1", workers);
  const auto [status, out] = cli(c);
  const auto j = json::parse(out);
  Outcome o;
  o.pass = status == kExitOk && j["partitions"] == 203 && j["passed"] == 203;
  o.detail = std::to_string(j["passed"].get<std::size_t>()) + "/" + std::to_string(j["partitions"].get<std::size_t>()) +
             " partitions pass axioms and line identities";
  o.bytes = out;
  return o;
}

Outcome cross_check(const std::string& field, std::size_t expected_rows, std::size_t expected_condition,
                    unsigned workers) {
  const auto [status, out] = cli(field_config("cross-validate", field, workers));
  const auto j = json::parse(out);
  const auto& s = j["summary"];
  Outcome o;
  const std::size_t rows = j["rows"].size();
  const std::size_t predicted = s["predicted_nonschurian"];
  const std::size_t confirmed = s["predicts_nonschurian/non_schurian"];
  const std::size_t inconsistent = s["inconsistent"];
  o.pass = status == kExitOk && rows == expected_rows && predicted == expected_condition &&
           confirmed == expected_condition && inconsistent == 0;
  o.detail = std::to_string(rows) + " partitions, " + std::to_string(predicted) + " satisfy the condition, " +
             std::to_string(confirmed) + " oracle-non-schurian, " + std::to_string(inconsistent) + " inconsistent";
  o.bytes = out;
  return o;
}

Outcome excluded_orders(unsigned workers) {
  Outcome o;
  o.pass = true;
  for (const char* field : {"2^1", "3^1", "2^2"}) {
    const auto [status, out] = cli(field_config("census", field, workers));
    const auto j = json::parse(out);
    const std::size_t predicted = j["summary"]["predicted_nonschurian"];
    o.pass = o.pass && status == kExitOk && predicted == 0 &&
             j["rows"].size() == oracle::stirling_bell(parse_field_literal(field).q() + 1);
    o.detail += std::string(o.detail.empty() ? "" : ", ") + field + ": " + std::to_string(predicted);
    o.bytes += out;
  }
  return o;
}

Outcome fixing_maps(unsigned workers) {
  Outcome o;
  o.pass = true;
  for (const char* field : {"2^2", "5^1", "7^1", "2^3", "3^2"}) {
    auto c = field_config("invariant-slopes", field, workers);
    const auto [status, out] = cli(c);
    const auto j = json::parse(out);
    const auto f = parse_field_literal(field);
    const bool count_ok = j["maps_checked"] == oracle::gl_order(f.e(), f.p());
    o.pass = o.pass && status == kExitOk && j["all_passed"] == true && count_ok;
    o.detail += std::string(o.detail.empty() ? "" : ", ") + field + ": " +
                std::to_string(j["maps_checked"].get<std::size_t>()) + " maps";
    o.bytes += out;
  }
  const auto f9 = parse_field_literal("3^2");
  oracle::PolyField ref(3, 2, f9.spec().modulus);
  std::vector<Slope> want;
  for (std::uint32_t a = 0; a < 9; ++a)
    if (ref.pow(a, 3) == a) want.push_back(Slope::finite({a}));
  want.push_back(Slope::infinity());
  const auto got = invariant_slopes(f9, LinearMap2e::frobenius(f9));
  const bool frob = got == want;
  o.pass = o.pass && frob;
  o.detail += std::string(", Frobenius on GF(9) fixes ") + std::to_string(got.size()) + " slopes";
  for (Slope s : got) o.bytes += s.literal() + " ";
  return o;
}

Outcome schurian_positives(unsigned workers) {
  Outcome o;
  o.pass = true;
  std::size_t checked = 0;
  for (int q : {3, 4, 5, 7}) {
    for (const char* kind : {"one-class", "singletons"}) {
      const auto [status, out] =
          cli(partition_config("schurian-test", std::string(kind) + "-q" + std::to_string(q) + ".json", workers));
      const auto j = json::parse(out);
      o.pass = o.pass && status == kExitOk && j["oracle_verdict"] == "schurian";
      ++checked;
      o.bytes += out;
    }
  }
  o.detail = std::to_string(checked) + " fixtures oracle-schurian";
  return o;
}

Outcome field_suites(unsigned) {
  Outcome o;
  o.pass = true;
  std::size_t fields = 0;
  for (auto [p, e] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {11, 1},
                                                      {13, 1}, {2, 4}}) {
    const auto f = GaloisField::make(p, e);
    oracle::PolyField ref(p, e, f.spec().modulus);
    const auto q = f.q();
    const auto modulus = oracle::first_primitive(p, e);
    bool ok = modulus.first == f.spec().modulus && modulus.second == f.zeta().index && f.order(f.zeta()) == q - 1;
    for (std::uint32_t a = 0; a < q && ok; ++a) {
      const FieldElement x{a};
      ok = f.add(x, f.neg(x)) == f.zero() && f.mul(x, f.one()) == x && (a == 0 || f.mul(x, f.inv(x)) == f.one());
      const auto pa = f.regular_representation(x);
      for (std::uint32_t b = 0; b < q && ok; ++b) {
        const FieldElement y{b};
        ok = f.mul(x, y).index == ref.mul(a, b) && f.add(x, y).index == ref.add(a, b) && f.mul(x, y) == f.mul(y, x) &&
             f.add(x, y) == f.add(y, x);
        const auto pb = f.regular_representation(y);
        ok = ok && pa * pb == f.regular_representation(f.mul(x, y)) && pa + pb == f.regular_representation(f.add(x, y));
        for (std::uint32_t c = 0; c < q && ok; ++c) {
          const FieldElement z{c};
          ok = f.mul(f.mul(x, y), z) == f.mul(x, f.mul(y, z)) && f.add(f.add(x, y), z) == f.add(x, f.add(y, z)) &&
               f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z));
        }
      }
    }
    int divisors = 0;
    for (int d = 1; d <= e; ++d) divisors += e % d == 0;
    ok = ok && f.subfields().size() == static_cast<std::size_t>(divisors);
    o.pass = o.pass && ok;
    ++fields;
  }
  o.detail = std::to_string(fields) + " fields with q <= 16";
  return o;
}

Outcome stretch(unsigned workers) {
  Outcome o;
  o.pass = true;
  for (const char* field : {"2^3", "3^2"}) {
    const auto f = parse_field_literal(field);
    const auto table = cross_validate_table(f, Scope::filtered, {200, 12, workers});
    const auto confirmed = table.count(CriterionVerdict::predicts_nonschurian, OracleVerdict::non_schurian);
    o.pass = o.pass && confirmed == table.rows.size() && table.inconsistent() == 0 && !table.rows.empty();
    o.detail += std::string(o.detail.empty() ? "" : ", ") + field + ": " + std::to_string(confirmed) + "/" +
                std::to_string(table.rows.size()) + " non-schurian";
  }
  return o;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "Wielandt partition at q = 5", 5, true, wielandt},
      {2, "ring axioms and line identities, all q = 5 partitions", 30, true, ring_identities},
      {3, "criterion against oracle at q = 5", 60, true, [](unsigned w) { return cross_check("5^1", 203, 4, w); }},
      {4, "criterion against oracle at q = 7", 900, true, [](unsigned w) { return cross_check("7^1", 4140, 51, w); }},
      {5, "excluded orders 4, 9, 16", 5, true, excluded_orders},
      {6, "maps fixing the reference lines, q in {4,5,7,8,9}", 120, true, fixing_maps},
      {7, "one-class and singleton partitions are schurian", 60, true, schurian_positives},
      {8, "field axioms, regular representation, subfields", 60, true, field_suites},
  };

  bool all_pass = true;
  std::vector<std::string> first_bytes(criteria.size());
  auto timed = [](const std::function<Outcome()>& f, double& seconds) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o = f();
    seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return o;
  };
  auto report = [&](int id, const std::string& name, bool pass, double seconds, const std::string& detail,
                    bool gating) {
    std::printf("criterion %2d %s  %-52s %8.2fs  %s%s\n", id, pass ? "PASS" : "FAIL", name.c_str(), seconds,
                detail.c_str(), gating ? "" : " (non-gating)");
    std::fflush(stdout);
    if (gating && !pass) all_pass = false;
  };

  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    double seconds = 0;
    // Sequential first: the runtime budgets are stated for one worker.
    Outcome o = timed([&] { return c.body(1); }, seconds);
    const bool in_budget = seconds <= c.budget_seconds;
    first_bytes[i] = o.bytes;
    report(c.id, c.name, o.pass && in_budget, seconds,
           o.detail + (in_budget ? "" : " (over the " + std::to_string(int(c.budget_seconds)) + "s budget)"),
           c.gating);
  }

  {
    double seconds = 0;
    std::size_t compared = 0;
    Outcome o = timed(
        [&] {
          Outcome d;
          d.pass = true;
          for (std::size_t i = 0; i < 7; ++i) {
            for (unsigned workers : {1u, 4u}) {
              const auto again = criteria[i].body(workers).bytes;
              d.pass = d.pass && again == first_bytes[i] && !again.empty();
              ++compared;
            }
          }
          d.detail = std::to_string(compared) + " reruns byte-identical, workers 1 and 4";
          if (!d.pass) d.detail = "reports differ between runs";
          return d;
        },
        seconds);
    report(9, "determinism across runs and worker counts", o.pass, seconds, o.detail, true);
  }

  {
    double seconds = 0;
    Outcome o = timed([] { return stretch(0); }, seconds);
    report(10, "q = 8, 9 condition partitions are non-schurian", o.pass, seconds, o.detail, false);
  }

  std::printf("%s\n", all_pass ? "all gating criteria passed" : "some gating criteria FAILED");
  return all_pass ? 0 : 1;
}
