// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails. Runtime bounds are checked alongside correctness.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "strongprod/cli.hpp"
#include "strongprod/strongprod.hpp"
#include "support/oracle.hpp"

namespace sp = strongprod;
namespace spt = strongprod::testing;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

struct Criterion {
  const char* id;
  const char* name;
  double time_limit_s;
  std::function<Outcome()> body;
};

bool is_complete(const sp::Digraph& g) { return g.arc_count() == g.order() * (g.order() - 1); }

Outcome complete_digraph_criterion() {
  Outcome out;
  auto r = sp::average_distance_product(sp::graphs::complete(2), sp::graphs::complete(3), sp::Method::Counting);
  if (r.mu.num() != 1 || r.mu.den() != 1) out.fail("avgdist(K2, K3) mu != 1/1");

  std::mt19937_64 rng(0xac01);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    auto a = spt::from_ref(spt::random_strong_ref(rng, 2, 6));
    auto b = spt::from_ref(spt::random_strong_ref(rng, 2, 6));
    if (is_complete(a) && is_complete(b)) continue;
    ++checked;
    auto m = sp::average_distance_product(a, b, sp::Method::Counting).mu;
    if (!(m > sp::ExactRational(1, 1))) out.fail("non-complete pair with mu <= 1");
  }
  for (std::size_t n = 3; n <= 6; ++n) {
    auto m = sp::average_distance_product(sp::graphs::complete(n), sp::graphs::cycle(n), sp::Method::Counting).mu;
    if (!(m > sp::ExactRational(1, 1))) out.fail("K_n x C_n with mu <= 1");
  }
  out.detail += (out.detail.empty() ? "" : "; ") + std::to_string(checked) + " non-complete pairs";
  return out;
}

struct RandomPair {
  spt::RefGraph a, b;
};

// Shared by criteria 2, 5 and 6.
const std::vector<RandomPair>& binary_cases() {
  static const std::vector<RandomPair> cases = [] {
    std::mt19937_64 rng(0xac02);
    std::vector<RandomPair> out;
    for (int i = 0; i < 250; ++i) out.push_back({spt::random_strong_ref(rng, 2, 8), spt::random_strong_ref(rng, 2, 8)});
    return out;
  }();
  return cases;
}

Outcome binary_theorem() {
  Outcome out;
  std::size_t pairs = 0, mismatches = 0, eq = 0, gt = 0, lt = 0;
  for (const auto& [ra, rb] : binary_cases()) {
    const auto d1 = sp::floyd_warshall(spt::from_ref(ra));
    const auto d2 = sp::floyd_warshall(spt::from_ref(rb));
    const auto truth = spt::ref_distances(spt::ref_strong_product(ra, rb));
    const std::size_t v2 = rb.n;
    for (std::size_t x1 = 0; x1 < ra.n; ++x1)
      for (std::size_t x2 = 0; x2 < rb.n; ++x2)
        for (std::size_t y1 = 0; y1 < ra.n; ++y1)
          for (std::size_t y2 = 0; y2 < rb.n; ++y2) {
            ++pairs;
            const auto a = *d1(x1, y1), b = *d2(x2, y2);
            (a == b ? eq : a > b ? gt : lt)++;
            if (sp::product_distance(d1, d2, x1, y1, x2, y2) != truth[x1 * v2 + x2][y1 * v2 + y2]) ++mismatches;
          }
  }
  if (mismatches) out.fail(std::to_string(mismatches) + " mismatches");
  if (!eq || !gt || !lt) out.fail("a proof case (d1=d2, d1>d2, d1<d2) was not exercised");
  out.detail += (out.detail.empty() ? "" : "; ") + std::to_string(binary_cases().size()) + " factor pairs, " +
                std::to_string(pairs) + " vertex pairs (eq " + std::to_string(eq) + ", gt " + std::to_string(gt) +
                ", lt " + std::to_string(lt) + ")";
  return out;
}

Outcome ternary_theorem() {
  Outcome out;
  std::mt19937_64 rng(0xac03);
  std::size_t pairs = 0, mismatches = 0;
  const int triples = 60;
  for (int t = 0; t < triples; ++t) {
    std::vector<spt::RefGraph> rs{spt::random_strong_ref(rng, 2, 4), spt::random_strong_ref(rng, 2, 4),
                                  spt::random_strong_ref(rng, 2, 4)};
    std::vector<sp::DistanceMatrix> ds;
    std::vector<std::size_t> dims;
    for (const auto& r : rs) {
      ds.push_back(sp::floyd_warshall(spt::from_ref(r)));
      dims.push_back(r.n);
    }
    const auto truth = spt::ref_distances(spt::ref_strong_product(spt::ref_strong_product(rs[0], rs[1]), rs[2]));
    const std::size_t total = dims[0] * dims[1] * dims[2];
    for (std::size_t x = 0; x < total; ++x)
      for (std::size_t y = 0; y < total; ++y) {
        ++pairs;
        if (sp::product_distance_n(ds, sp::decode_label(x, dims), sp::decode_label(y, dims)) != truth[x][y])
          ++mismatches;
      }
  }
  if (mismatches) out.fail(std::to_string(mismatches) + " mismatches");
  out.detail += (out.detail.empty() ? "" : "; ") + std::to_string(triples) + " triples, " + std::to_string(pairs) +
                " vertex pairs";
  return out;
}

Outcome fixtures() {
  Outcome out;
  using sp::graphs::cycle;
  auto ref_of = [](const sp::Digraph& a, const sp::Digraph& b) {
    return spt::ref_metrics(spt::ref_strong_product(spt::to_ref(a), spt::to_ref(b)));
  };
  // Oracle first; the frozen constants must agree with it.
  auto o33 = ref_of(cycle(3), cycle(3));
  auto o23 = ref_of(cycle(2), cycle(3));
  if (o33.sigma != 117) out.fail("oracle sigma(C3xC3) != 117");
  if (o23.sigma != 42 || o23.diameter != 2) out.fail("oracle C2xC3 fixture differs");
  auto c222 = spt::ref_strong_product(spt::ref_strong_product(spt::to_ref(cycle(2)), spt::to_ref(cycle(2))),
                                      spt::to_ref(cycle(2)));
  if (c222.arcs.size() != 56) out.fail("oracle |E(C2xC2xC2)| != 56");

  for (auto method : {sp::Method::Naive, sp::Method::Counting, sp::Method::Oracle}) {
    auto r33 = sp::average_distance_product(cycle(3), cycle(3), method);
    if (r33.sigma != 117 || r33.mu != sp::ExactRational(13, 8)) out.fail("C3xC3 sigma/mu");
    auto r23 = sp::average_distance_product(cycle(2), cycle(3), method);
    if (r23.sigma != 42 || r23.mu != sp::ExactRational(7, 5) || r23.diameter != 2) out.fail("C2xC3 sigma/mu/diam");
  }
  const std::vector<sp::Digraph> three{cycle(2), cycle(2), cycle(2)};
  if (sp::strong_product_n(three).arc_count() != 56) out.fail("|E(C2xC2xC2)| != 56");
  out.detail += (out.detail.empty() ? "" : "; ") + std::string("sigma 117 & 42, mu 13/8 & 7/5, |E| 56");
  return out;
}

Outcome method_agreement() {
  Outcome out;
  std::size_t n = 0;
  for (const auto& [ra, rb] : binary_cases()) {
    auto a = spt::from_ref(ra), b = spt::from_ref(rb);
    const auto d1 = sp::floyd_warshall(a), d2 = sp::floyd_warshall(b);
    const auto naive = sp::sigma_naive(d1, d2);
    const auto counting = sp::sigma_counting(d1, d2);
    const auto oracle = sp::average_distance_oracle(a, b).sigma;
    const auto independent = spt::ref_metrics(spt::ref_strong_product(ra, rb)).sigma;
    if (naive != counting || counting != oracle || oracle != independent) out.fail("sigma disagreement");
    ++n;
  }
  out.detail += (out.detail.empty() ? "" : "; ") + std::to_string(n) + " cases";
  return out;
}

Outcome diameter_identity() {
  Outcome out;
  for (const auto& [ra, rb] : binary_cases()) {
    const auto da = sp::diameter(sp::floyd_warshall(spt::from_ref(ra)));
    const auto db = sp::diameter(sp::floyd_warshall(spt::from_ref(rb)));
    const auto product = spt::ref_metrics(spt::ref_strong_product(ra, rb)).diameter;
    if (static_cast<std::int64_t>(std::max(da, db)) != product) out.fail("diameter identity violated");
  }
  out.detail += (out.detail.empty() ? "" : "; ") + std::to_string(binary_cases().size()) + " cases";
  return out;
}

struct Timed {
  double seconds;
  int code;
  std::string out;
};

Timed timed_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "strongprod");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  auto t0 = std::chrono::steady_clock::now();
  int code = sp::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  auto t1 = std::chrono::steady_clock::now();
  return {std::chrono::duration<double>(t1 - t0).count(), code, out.str()};
}

Outcome scale_check() {
  Outcome out;
  std::mt19937_64 rng(0xac07);
  auto sparse_strong = [&] {
    for (;;) {
      auto g = spt::random_ref(rng, 100, 0.04);
      if (spt::ref_strongly_connected(g)) return g;
    }
  };
  const auto dir = std::filesystem::temp_directory_path() / ("strongprod_acceptance_" + std::to_string(rng()));
  std::filesystem::create_directories(dir);
  const auto fa = (dir / "a.txt").string(), fb = (dir / "b.txt").string();
  std::ofstream(fa) << sp::write_edge_list(spt::from_ref(sparse_strong()));
  std::ofstream(fb) << sp::write_edge_list(spt::from_ref(sparse_strong()));

  auto counting = timed_cli({"avgdist", fa, fb, "--method", "counting"});
  auto naive = timed_cli({"avgdist", fa, fb, "--method", "naive"});
  std::filesystem::remove_all(dir);

  if (counting.code != 0 || naive.code != 0) out.fail("non-zero exit");
  if (counting.seconds >= 1.0) out.fail("counting took " + std::to_string(counting.seconds) + " s");
  if (naive.seconds >= 60.0) out.fail("naive took " + std::to_string(naive.seconds) + " s");
  auto head = [](const std::string& s) { return s.substr(0, s.find("\"method\"")); };
  if (head(counting.out) != head(naive.out)) out.fail("counting and naive reports differ");
  char buf[128];
  std::snprintf(buf, sizeof buf, "counting %.3f s, naive %.3f s", counting.seconds, naive.seconds);
  out.detail += (out.detail.empty() ? "" : "; ") + std::string(buf);
  return out;
}

Outcome floyd_vs_bfs() {
  Outcome out;
  std::mt19937_64 rng(0xac08);
  std::uniform_int_distribution<std::size_t> order(1, 10);
  std::uniform_real_distribution<double> density(0.0, 0.6);
  std::size_t unreachable = 0;
  const int graphs = 600;
  for (int t = 0; t < graphs; ++t) {
    auto g = spt::from_ref(spt::random_ref(rng, order(rng), density(rng)));
    auto d = sp::floyd_warshall(g);
    for (std::size_t x = 0; x < g.order(); ++x) {
      auto row = d.row(x);
      auto bfs = sp::bfs_distances(g, x);
      if (!std::equal(row.begin(), row.end(), bfs.begin(), bfs.end())) out.fail("row mismatch");
      for (const auto& e : bfs) unreachable += !e;
    }
  }
  out.detail += (out.detail.empty() ? "" : "; ") + std::to_string(graphs) + " digraphs, " +
                std::to_string(unreachable) + " Unreachable entries";
  return out;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1", "complete-digraph criterion (mu = 1 iff complete)", 1.0, complete_digraph_criterion},
      {"AC2", "binary product distance = max of factor distances", 30.0, binary_theorem},
      {"AC3", "k-ary product distance = max of factor distances", 30.0, ternary_theorem},
      {"AC4", "fixture exactness", 0.0, fixtures},
      {"AC5", "naive = counting = oracle sigma", 0.0, method_agreement},
      {"AC6", "diam(product) = max(diam factors)", 0.0, diameter_identity},
      {"AC7", "scale: two 100-vertex factors", 0.0, scale_check},
      {"AC8", "Floyd-Warshall = BFS on random digraphs", 0.0, floyd_vs_bfs},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o = c.body();
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.time_limit_s > 0 && secs >= c.time_limit_s)
      o.fail("runtime " + std::to_string(secs) + " s over limit " + std::to_string(c.time_limit_s) + " s");
    std::printf("[%s] %s %s (%.3f s) %s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, secs, o.detail.c_str());
    failed += !o.ok;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
