// Wall-clock comparison of the OpenMP kernels against the serial reference.

#include "qhom/catalog.hpp"
#include "qhom/coloring.hpp"
#include "qhom/kernels.hpp"
#include "qhom/quandle.hpp"
#include "qhom/reference.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

namespace {

double best_ms(int reps, const std::function<void()>& f) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const std::chrono::duration<double, std::milli> dt = std::chrono::steady_clock::now() - t0;
    best = std::min(best, dt.count());
  }
  return best;
}

bool all_agree = true;

void row(const std::string& name, double serial, double parallel, bool agree) {
  all_agree = all_agree && agree;
  std::printf("%-34s %10.2f %10.2f %7.2fx  %s\n", name.c_str(), serial, parallel, serial / parallel,
              agree ? "agree" : "DISAGREE");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qhom serial vs OpenMP benchmark"};
  int reps = 3;
  std::size_t n = 61;
  std::string data;
  app.add_option("--reps", reps, "repetitions, best time is reported")->check(CLI::PositiveNumber);
  app.add_option("-n,--order", n, "order of the Alexander quandle used for table scans")
      ->check(CLI::Range(3, 257));
  app.add_option("--data", data, "data directory");
  CLI11_PARSE(app, argc, argv);

  using namespace qhom;
  const auto catalog = data.empty() ? Catalog::load() : Catalog::load(data);
  std::printf("threads: %d\n", kernels::thread_count());
  std::printf("%-34s %10s %10s %8s\n", "case", "serial ms", "omp ms", "speedup");

  const auto q = alexander_quandle(n, 2);
  {
    std::optional<std::array<Element, 3>> a, b;
    const auto s = best_ms(reps, [&] { a = reference::self_distributivity_violation(q.table()); });
    const auto p = best_ms(reps, [&] { b = kernels::self_distributivity_violation(q.table()); });
    row("self-distributivity, n=" + std::to_string(n), s, p, a == b);
  }
  {
    std::optional<std::array<Element, 4>> a, b;
    const auto s = best_ms(reps, [&] { a = reference::medial_violation(q.table()); });
    const auto p = best_ms(reps, [&] { b = kernels::medial_violation(q.table()); });
    row("medial scan, n=" + std::to_string(n), s, p, a == b);
  }

  for (const auto* link : {"L6a1", "L6a5"}) {
    const auto pres = quandle_presentation(catalog.link(link));
    const Structure target{alexander_quandle(n, n - 1)};
    std::vector<Coloring> a, b, c;
    const auto r = best_ms(reps, [&] { a = reference::colorings_serial(pres, target); });
    const auto s = best_ms(reps, [&] { b = enumerate_colorings(pres, target, {.parallel = false}).colorings; });
    const auto p = best_ms(reps, [&] { c = enumerate_colorings(pres, target, {.parallel = true}).colorings; });
    const auto label = std::string("colorings ") + link + ", R" + std::to_string(n);
    row(label + " (reference)", r, p, a == c);
    row(label + " (planned)", s, p, b == c);
  }
  return all_agree ? 0 : 1;
}
