// Command-line front end: generate instances, run individual decisions,
// certify projections, re-check emitted certificates, and drive the full
// property-verification campaign with machine-readable reports.
//
// Exit codes: 0 = true / success, 1 = false / failures found, 2 = input or
// usage error.
#include <CLI11.hpp>

#include <atomic>
#include <tuple>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <thread>

#include "ordercone/band.hpp"
#include "ordercone/certcheck.hpp"
#include "ordercone/genlab.hpp"
#include "ordercone/json_io.hpp"
#include "ordercone/linalg.hpp"
#include "ordercone/rng.hpp"

namespace {

using namespace ordercone;

constexpr const char* kVersion = "0.1.0";

RVector parse_vector_arg(const std::string& text) {
  std::vector<Rational> entries;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string tok =
        text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    entries.push_back(parse_rational(tok));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return RVector(std::move(entries));
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  Json j;
  in >> j;
  return j;
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << bytes;
}

// ---------------------------------------------------------------------------
// gen

int cmd_gen(const std::string& kind, std::size_t n, std::size_t n1, std::size_t n2,
            std::size_t m, std::size_t k, std::uint64_t seed, const SamplerBounds& bounds,
            const std::string& out_path) {
  if (bounds.num_hi < bounds.num_lo || bounds.den_max < 1 || bounds.num_hi < 1)
    throw std::runtime_error("bad coefficient bounds");
  InstanceSpec inst = [&] {
    if (kind == "simplicial") return gen_simplicial(n, seed, bounds);
    if (kind == "direct-sum") return gen_direct_sum(n1, n2, seed, bounds);
    if (kind == "l1") return gen_l1_cone(m);
    if (kind == "random") return gen_random_cone(n, k, seed, bounds);
    throw std::runtime_error("unknown kind '" + kind + "'");
  }();
  const Json j = to_json(inst);
  const std::string bytes = canonical_dump(j) + "\n";
  write_file(out_path, bytes);
  std::cout << content_hash(j) << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// check

int cmd_check(const std::string& instance_path, const std::string& query,
              const std::vector<std::string>& vector_args, bool as_json) {
  const InstanceSpec inst = instance_from_json(read_json_file(instance_path));
  const ConeSpace& cone = inst.cone;

  auto need_vectors = [&](std::size_t count) {
    if (vector_args.size() != count)
      throw std::runtime_error("query '" + query + "' needs " + std::to_string(count) +
                               " vector argument(s)");
    std::vector<RVector> vs;
    for (const auto& a : vector_args) {
      RVector v = parse_vector_arg(a);
      if (v.dim() != cone.dim())
        throw std::runtime_error("vector dimension " + std::to_string(v.dim()) +
                                 " does not match the cone dimension " +
                                 std::to_string(cone.dim()));
      vs.push_back(std::move(v));
    }
    return vs;
  };

  bool result = false;
  Json verdict;
  if (query == "disjoint") {
    const auto vs = need_vectors(2);
    const auto v = is_disjoint(cone, vs[0], vs[1]);
    result = v.disjoint;
    verdict = to_json(v);
  } else if (query == "leq") {
    const auto vs = need_vectors(2);
    const auto v = leq(cone, vs[0], vs[1]);
    result = v.holds;
    verdict = to_json(v);
  } else if (query == "inf-zero") {
    const auto vs = need_vectors(2);
    const auto v = is_infimum_zero(cone, vs[0], vs[1]);
    result = v.zero_infimum;
    verdict = to_json(v);
  } else if (query == "order-projection") {
    if (!inst.projection) throw std::runtime_error("instance carries no projection");
    const auto v = is_order_projection(cone, *inst.projection);
    result = v.order_projection;
    verdict = to_json(v);
  } else {
    throw std::runtime_error("unknown query '" + query + "'");
  }

  if (as_json) {
    const Json out{{"query", query}, {"result", result}, {"verdict", verdict}};
    std::cout << canonical_dump(out) << "\n";
  } else {
    std::cout << query << ": " << (result ? "true" : "false") << "\n";
    if (verdict.contains("witness"))
      std::cout << "witness: " << verdict["witness"].dump() << "\n";
  }
  return result ? 0 : 1;
}

// ---------------------------------------------------------------------------
// recheck

int cmd_recheck(const std::string& cert_path, const std::string& type, bool as_json) {
  const Json j = read_json_file(cert_path);
  certcheck::RecheckReport rep;
  std::string resolved = type;
  if (resolved == "auto") {
    if (j.contains("checks")) resolved = "band";
    else if (j.contains("lp")) resolved = "lp";
    else if (j.contains("cone")) resolved = "disjointness";
    else if (j.contains("P")) resolved = "subset";
    else throw std::runtime_error("cannot infer certificate type");
  }
  if (resolved == "band") rep = certcheck::recheck_band_certificate(j);
  else if (resolved == "lp") rep = certcheck::recheck_lp_outcome(j);
  else if (resolved == "disjointness") rep = certcheck::recheck_disjointness(j);
  else if (resolved == "subset") rep = certcheck::recheck_subset(j);
  else throw std::runtime_error("unknown certificate type '" + type + "'");

  if (as_json) {
    std::cout << canonical_dump(Json{{"ok", rep.ok}, {"problems", rep.problems}}) << "\n";
  } else {
    std::cout << (rep.ok ? "certificate ok" : "certificate INVALID") << "\n";
    for (const auto& p : rep.problems) std::cout << "  " << p << "\n";
  }
  return rep.ok ? 0 : 1;
}

// ---------------------------------------------------------------------------
// verify-paper

struct PropCounter {
  std::size_t pass = 0, fail = 0, vacuous = 0;
  std::int64_t micros = 0;
};

struct CampaignResult {
  std::map<std::string, PropCounter> props;
  std::map<std::string, std::size_t> kind_counts;
  std::map<std::size_t, std::size_t> dim_counts;
  std::vector<Json> failures;

  void merge(const CampaignResult& o) {
    for (const auto& [name, c] : o.props) {
      auto& mine = props[name];
      mine.pass += c.pass;
      mine.fail += c.fail;
      mine.vacuous += c.vacuous;
      mine.micros += c.micros;
    }
    for (const auto& [k, n] : o.kind_counts) kind_counts[k] += n;
    for (const auto& [d, n] : o.dim_counts) dim_counts[d] += n;
    failures.insert(failures.end(), o.failures.begin(), o.failures.end());
  }
};

struct PropTimer {
  PropCounter& counter;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  ~PropTimer() {
    counter.micros += std::chrono::duration_cast<std::chrono::microseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  }
};

const char* const kPropositions[] = {
    "disjoint_iff_infimum_zero",
    "smaller_vectors_inherit_disjointness",
    "disjoint_sum_parts_positive",
    "projection_bands_directed",
    "order_projection_unique_for_range",
    "order_projections_are_band_projections",
    "complement_decomposition_is_projection_band",
};

struct CampaignConfig {
  std::size_t dim_lo = 2, dim_hi = 6;
  std::size_t trials = 50;
  std::uint64_t seed = 1;
  std::size_t probes = 64;
  bool sabotage_flip_disjoint = false;
};

// check_verdict is exactly what `check --json` prints for (query, vectors)
// on the dumped instance, so every failure replays; detail carries the
// proposition-specific evidence (certificates, implication verdicts).
void record_failure(CampaignResult& res, const std::string& prop, const InstanceSpec& inst,
                    const std::string& query, const std::vector<RVector>& vectors,
                    const Json& check_verdict, const Json& detail, std::uint64_t trial) {
  InstanceSpec dump = inst;
  dump.vectors = vectors;
  Json j{{"proposition", prop},
         {"trial", trial},
         {"query", query},
         {"instance", to_json(dump)},
         {"check_verdict", check_verdict},
         {"detail", detail}};
  j["hash"] = content_hash(j);
  res.failures.push_back(std::move(j));
}

void run_trial(const CampaignConfig& cfg, std::uint64_t trial, CampaignResult& res) {
  SplitMix64 rng(cfg.seed ^ (trial * 0x9e3779b97f4a7c15ULL + 0x5851f42d4c957f2dULL));
  const std::size_t span = cfg.dim_hi - cfg.dim_lo + 1;
  // cycle dimensions so every (kind, dim) combination appears once the
  // trial count reaches 4 * span
  const std::size_t dim = cfg.dim_lo + (trial / 4) % span;
  const std::uint64_t inst_seed = rng.next();

  const int kind = static_cast<int>(trial % 4);
  const InstanceSpec inst = [&]() -> InstanceSpec {
    switch (kind) {
      case 0: return gen_simplicial(dim, inst_seed);
      case 1: {
        const std::size_t n1 = 1 + rng.below(dim > 1 ? dim - 1 : 1);
        return gen_direct_sum(n1, dim - n1 > 0 ? dim - n1 : 1, inst_seed);
      }
      case 2:
        if (dim >= 3) return gen_l1_cone(dim - 1);
        return gen_simplicial(dim, inst_seed);
      default: return gen_random_cone(dim < 2 ? 2 : dim, dim + 2, inst_seed);
    }
  }();
  const ConeSpace& cone = inst.cone;
  ++res.kind_counts[inst.kind];
  ++res.dim_counts[cone.dim()];

  auto disjoint_result = [&](const RVector& a, const RVector& b) {
    DisjointnessVerdict v = is_disjoint(cone, a, b);
    bool reported = v.disjoint;
    if (cfg.sabotage_flip_disjoint) reported = !reported;
    return std::make_pair(reported, std::move(v));
  };

  // disjointness <-> zero infimum on positive pairs; inherited disjointness
  // for scaled-down positive vectors
  for (std::uint64_t p = 0; p < 6; ++p) {
    RVector x = gen_positive_vector(cone, rng.next());
    RVector y = gen_positive_vector(cone, rng.next());
    if (p % 2 == 0) x = cone.generators()[rng.below(cone.generators().size())];
    auto& c1 = res.props["disjoint_iff_infimum_zero"];
    bool dis;
    DisjointnessVerdict dis_verdict;
    {
      PropTimer timer{c1};
      std::tie(dis, dis_verdict) = disjoint_result(x, y);
      const auto inf_verdict = is_infimum_zero(cone, x, y);
      if (dis == inf_verdict.zero_infimum) {
        ++c1.pass;
      } else {
        ++c1.fail;
        record_failure(res, "disjoint_iff_infimum_zero", inst, "disjoint", {x, y},
                       to_json(dis_verdict), to_json(inf_verdict), trial);
      }
    }

    auto& c2 = res.props["smaller_vectors_inherit_disjointness"];
    PropTimer timer2{c2};
    if (dis && !x.is_zero()) {
      // 0 <= x1 <= x (down-scaling keeps the sandwich)
      const Rational f(1 + rng.below(3), 4);
      const RVector x1 = f * x;
      const auto [dis1, dis1_verdict] = disjoint_result(x1, y);
      if (dis1) {
        ++c2.pass;
      } else {
        ++c2.fail;
        record_failure(res, "smaller_vectors_inherit_disjointness", inst, "disjoint",
                       {x1, y}, to_json(dis1_verdict), to_json(dis_verdict), trial);
      }
    } else {
      ++c2.vacuous;
    }
  }

  if (!inst.projection) return;
  const ProjectionMatrix& proj = *inst.projection;

  // order projections are band projections (converse: certification;
  // forward: the rebuilt projection is an order projection), and projection
  // bands are directed
  auto& band_counter = res.props["order_projections_are_band_projections"];
  const auto band_t0 = std::chrono::steady_clock::now();
  const BandCertificate cert = certify_projection_band(cone, proj, cfg.probes, rng.next());
  band_counter.micros += std::chrono::duration_cast<std::chrono::microseconds>(
                             std::chrono::steady_clock::now() - band_t0)
                             .count();
  {
    auto& c = res.props["order_projections_are_band_projections"];
    PropTimer timer{c};
    bool ok = cert.valid();
    if (ok) {
      std::vector<RVector> all = cert.range_basis;
      all.insert(all.end(), cert.kernel_basis.begin(), cert.kernel_basis.end());
      RMatrix b(cone.dim(), cone.dim());
      for (std::size_t j = 0; j < all.size(); ++j)
        for (std::size_t i = 0; i < cone.dim(); ++i) b(i, j) = all[j][i];
      RMatrix d(cone.dim(), cone.dim());
      for (std::size_t j = 0; j < cert.range_basis.size(); ++j) d(j, j) = 1;
      const ProjectionMatrix rebuilt(b * d * *inverse(b));
      ok = is_order_projection(cone, rebuilt).order_projection;
    }
    if (ok) {
      ++c.pass;
    } else {
      ++c.fail;
      record_failure(res, "order_projections_are_band_projections", inst,
                     "order-projection", {},
                     to_json(is_order_projection(cone, proj)), to_json(cert), trial);
    }
  }
  {
    auto& c = res.props["projection_bands_directed"];
    PropTimer timer{c};
    const bool ok = cert.directedness_range.executed && cert.directedness_range.ok &&
                    cert.directedness_kernel.executed && cert.directedness_kernel.ok;
    if (ok) {
      ++c.pass;
    } else {
      ++c.fail;
      record_failure(res, "projection_bands_directed", inst, "order-projection", {},
                     to_json(is_order_projection(cone, proj)), to_json(cert), trial);
    }
  }

  // disjoint decompositions of positive vectors have positive parts
  {
    auto& c = res.props["disjoint_sum_parts_positive"];
    PropTimer timer{c};
    for (int variant = 0; variant < 3; ++variant) {
      RVector x(cone.dim());
      if (variant == 0) {
        x = gen_positive_vector(cone, rng.next());
      } else {
        x = gen_vector(cone, rng.next());
      }
      const RVector y = proj.matrix() * x;
      const RVector z = x - y;
      const auto verdict = check_sum_decomposition(cone, x, y, z);
      bool hypothesis = verdict.hypothesis;
      bool holds = verdict.holds;
      if (cfg.sabotage_flip_disjoint) {
        hypothesis = verdict.x_positive.holds && !verdict.yz_disjoint.disjoint;
        holds = !hypothesis || verdict.conclusion;
      }
      if (!hypothesis) {
        ++c.vacuous;
      } else if (holds) {
        ++c.pass;
      } else {
        ++c.fail;
        record_failure(res, "disjoint_sum_parts_positive", inst, "disjoint", {y, z},
                       to_json(verdict.yz_disjoint), to_json(verdict), trial);
      }
    }
  }

  // at most one order projection per range
  {
    auto& c = res.props["order_projection_unique_for_range"];
    PropTimer timer{c};
    const auto range = column_space_basis(proj.matrix());
    const auto kernel = kernel_basis(proj.matrix());
    RationalSampler s(rng.next());
    for (int alt = 0; alt < 3; ++alt) {
      std::vector<RVector> w;
      for (const auto& kv : kernel) {
        RVector shifted = kv;
        for (const auto& rv : range) shifted += (alt == 0 ? Rational(0) : s.draw()) * rv;
        w.push_back(shifted);
      }
      std::vector<RVector> all = range;
      all.insert(all.end(), w.begin(), w.end());
      if (rank_of_vectors(all) != cone.dim()) {
        ++c.vacuous;
        continue;
      }
      RMatrix b(cone.dim(), cone.dim());
      for (std::size_t j = 0; j < all.size(); ++j)
        for (std::size_t i = 0; i < cone.dim(); ++i) b(i, j) = all[j][i];
      RMatrix d(cone.dim(), cone.dim());
      for (std::size_t j = 0; j < range.size(); ++j) d(j, j) = 1;
      const ProjectionMatrix alt_p(b * d * *inverse(b));
      const auto v = uniqueness_check(cone, proj, alt_p);
      if (!v.applicable) {
        ++c.vacuous;
      } else if (v.holds) {
        ++c.pass;
      } else {
        ++c.fail;
        record_failure(res, "order_projection_unique_for_range", inst, "order-projection",
                       {}, to_json(is_order_projection(cone, proj)), to_json(v), trial);
      }
    }
  }

  // X = V + V^perp makes V a projection band
  {
    auto& c = res.props["complement_decomposition_is_projection_band"];
    PropTimer timer{c};
    const auto range = column_space_basis(proj.matrix());
    const auto kernel = kernel_basis(proj.matrix());
    const auto result = corollary_check(cone, range, kernel, cfg.probes, rng.next());
    if (result.ok()) {
      ++c.pass;
    } else {
      ++c.fail;
      record_failure(res, "complement_decomposition_is_projection_band", inst,
                     "order-projection", {}, to_json(is_order_projection(cone, proj)),
                     result.certificate ? to_json(*result.certificate) : Json{}, trial);
    }
  }
}

std::size_t resolve_threads(std::size_t trials) {
  std::size_t n = std::min<std::size_t>(std::thread::hardware_concurrency(), 8);
  if (const char* env = std::getenv("ORDERCONE_THREADS")) {
    const long parsed = std::strtol(env, nullptr, 10);
    if (parsed >= 1) n = static_cast<std::size_t>(parsed);
  }
  if (n < 1) n = 1;
  return std::min(n, trials ? trials : 1);
}

int cmd_verify_paper(const CampaignConfig& cfg, const std::string& out_path, bool as_json) {
  const auto start = std::chrono::steady_clock::now();
  CampaignResult total;
  for (const char* p : kPropositions) total.props[p];  // stable ordering

  const std::size_t threads = resolve_threads(cfg.trials);
  std::atomic<std::uint64_t> next{0};
  std::mutex merge_mutex;
  auto worker = [&] {
    CampaignResult local;
    for (;;) {
      const std::uint64_t t = next.fetch_add(1);
      if (t >= cfg.trials) break;
      run_trial(cfg, t, local);
    }
    std::lock_guard<std::mutex> lock(merge_mutex);
    total.merge(local);
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  std::sort(total.failures.begin(), total.failures.end(),
            [](const Json& a, const Json& b) {
              return a.at("hash").get<std::string>() < b.at("hash").get<std::string>();
            });
  const auto wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();

  std::size_t fail_total = 0;
  Json props, timings;
  for (const auto& [name, c] : total.props) {
    props[name] = Json{{"pass", c.pass}, {"fail", c.fail}, {"vacuous", c.vacuous}};
    timings[name] = c.micros / 1000;
    fail_total += c.fail;
  }
  timings["total"] = wall_ms;
  Json kind_counts, dim_counts;
  for (const auto& [k, n] : total.kind_counts) kind_counts[k] = n;
  for (const auto& [d, n] : total.dim_counts) dim_counts[std::to_string(d)] = n;
  const Json report{{"tool_version", kVersion},
                    {"instances_by_kind", kind_counts},
                    {"instances_by_dim", dim_counts},
                    {"seed", cfg.seed},
                    {"dims", Json::array({cfg.dim_lo, cfg.dim_hi})},
                    {"trials", cfg.trials},
                    {"probes", cfg.probes},
                    {"threads", threads},
                    {"sabotage", cfg.sabotage_flip_disjoint ? "flip-disjoint" : ""},
                    {"propositions", props},
                    {"failures", total.failures},
                    {"timings_ms", timings},
                    {"wall_ms", wall_ms}};
  if (!out_path.empty()) write_file(out_path, canonical_dump(report) + "\n");

  if (as_json) {
    std::cout << canonical_dump(report) << "\n";
  } else {
    std::cout << "verification campaign: dims " << cfg.dim_lo << ".." << cfg.dim_hi << ", "
              << cfg.trials << " trials, seed " << cfg.seed << "\n";
    for (const auto& [name, c] : total.props) {
      std::cout << (c.fail == 0 ? "PASS " : "FAIL ") << name << ": " << c.pass
                << " checked, " << c.fail << " failures, " << c.vacuous << " vacuous\n";
    }
    std::cout << (fail_total == 0 ? "all propositions verified" : "FAILURES FOUND") << " ("
              << wall_ms << " ms)\n";
  }
  return fail_total == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact order-theoretic toolkit for polyhedral cones: disjointness, "
               "bands, and order projections with re-checkable certificates"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a seeded instance file");
  std::string gen_kind;
  std::size_t gen_n = 3, gen_n1 = 2, gen_n2 = 2, gen_m = 2, gen_k = 5;
  std::uint64_t gen_seed = 1;
  std::string gen_out;
  gen->add_option("--kind", gen_kind, "simplicial | direct-sum | l1 | random")->required();
  gen->add_option("--n", gen_n, "dimension (simplicial, random)");
  gen->add_option("--n1", gen_n1, "first block dimension (direct-sum)");
  gen->add_option("--n2", gen_n2, "second block dimension (direct-sum)");
  gen->add_option("--m", gen_m, "l1 parameter: cone lives in dimension m+1");
  gen->add_option("--k", gen_k, "ray count (random)");
  gen->add_option("--seed", gen_seed, "64-bit seed");
  SamplerBounds gen_bounds;
  gen->add_option("--num-lo", gen_bounds.num_lo, "lowest coefficient numerator");
  gen->add_option("--num-hi", gen_bounds.num_hi, "highest coefficient numerator");
  gen->add_option("--den-max", gen_bounds.den_max, "largest coefficient denominator");
  gen->add_option("--out", gen_out, "output path for the instance JSON")->required();

  // check
  auto* check = app.add_subcommand("check", "run one decision against an instance file");
  std::string check_instance, check_query;
  std::vector<std::string> check_vectors;
  bool check_json = false;
  check->add_option("--instance", check_instance, "instance JSON path")->required();
  check->add_option("--query", check_query, "disjoint | leq | inf-zero | order-projection")
      ->required();
  check->add_option("vectors", check_vectors, "comma-separated rational vectors");
  check->add_flag("--json", check_json, "emit the verdict as JSON");

  // recheck
  auto* recheck = app.add_subcommand("recheck", "validate an emitted certificate "
                                                "without invoking any solver");
  std::string recheck_path, recheck_type = "auto";
  bool recheck_json = false;
  recheck->add_option("--cert", recheck_path, "certificate JSON path")->required();
  recheck->add_option("--type", recheck_type, "auto | band | lp | disjointness | subset");
  recheck->add_flag("--json", recheck_json, "emit the result as JSON");

  // verify-paper
  auto* verify = app.add_subcommand("verify-paper",
                                    "run the seeded verification campaign over all "
                                    "supported propositions");
  CampaignConfig cfg;
  std::string verify_dims = "2..6";
  std::string verify_out;
  std::string verify_sabotage;
  bool verify_json = false;
  verify->add_option("--dims", verify_dims, "dimension range, e.g. 2..5 or 3");
  verify->add_option("--trials", cfg.trials, "number of seeded trials")->check(CLI::PositiveNumber);
  verify->add_option("--seed", cfg.seed, "global campaign seed");
  verify->add_option("--probes", cfg.probes, "falsification probes per certificate");
  verify->add_option("--out", verify_out, "write the report JSON here");
  verify->add_flag("--json", verify_json, "print the report as JSON");
  verify->add_option("--sabotage", verify_sabotage,
                     "testing: inject a bug (flip-disjoint) to force failures")
      ->group("testing");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (gen->parsed())
      return cmd_gen(gen_kind, gen_n, gen_n1, gen_n2, gen_m, gen_k, gen_seed, gen_bounds,
                     gen_out);
    if (check->parsed()) return cmd_check(check_instance, check_query, check_vectors, check_json);
    if (recheck->parsed()) return cmd_recheck(recheck_path, recheck_type, recheck_json);
    if (verify->parsed()) {
      const auto sep = verify_dims.find("..");
      if (sep == std::string::npos) {
        cfg.dim_lo = cfg.dim_hi = std::stoul(verify_dims);
      } else {
        cfg.dim_lo = std::stoul(verify_dims.substr(0, sep));
        cfg.dim_hi = std::stoul(verify_dims.substr(sep + 2));
      }
      if (cfg.dim_lo < 1 || cfg.dim_hi < cfg.dim_lo)
        throw std::runtime_error("bad --dims range '" + verify_dims + "'");
      if (!verify_sabotage.empty()) {
        if (verify_sabotage != "flip-disjoint")
          throw std::runtime_error("unknown sabotage mode '" + verify_sabotage + "'");
        cfg.sabotage_flip_disjoint = true;
      }
      return cmd_verify_paper(cfg, verify_out, verify_json);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
