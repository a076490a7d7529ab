// Compares the OpenMP audit kernels against their serial reference twins on
// mid-sized fixtures, checking agreement along the way.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>

#include "grouplogic/reference.hpp"

using namespace grouplogic;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

void row(const char* name, double serial_ms, double parallel_ms, bool match) {
  std::printf("%-34s %10.1f %12.1f %9.2fx   %s\n", name, serial_ms,
              parallel_ms, serial_ms / parallel_ms, match ? "match" : "DIFFER");
}

}  // namespace

int main() {
  std::printf("%-34s %10s %12s %10s\n", "kernel", "serial/ms", "parallel/ms",
              "speedup");

  {
    auto mg = normalized_haar(unit_groupoid(11), uniform_lambda(*unit_groupoid(11)));
    auto t0 = std::chrono::steady_clock::now();
    SorkinAudit serial = reference::sorkin_audit_serial(mg);
    double ts = ms_since(t0);
    t0 = std::chrono::steady_clock::now();
    SorkinAudit parallel = sorkin_audit(mg);
    double tp = ms_since(t0);
    bool match = serial.max_residual == parallel.max_residual &&
                 serial.triples == parallel.triples;
    row("sorkin audit units:11", ts, tp, match);
  }

  {
    auto g = pair_groupoid(10);
    auto t0 = std::chrono::steady_clock::now();
    RelationReport serial = reference::relation_report_serial(g);
    double ts = ms_since(t0);
    t0 = std::chrono::steady_clock::now();
    RelationReport parallel = relation_report(g);
    double tp = ms_since(t0);
    bool match = serial.symmetric == parallel.symmetric &&
                 serial.transitive == parallel.transitive;
    row("relation report pair:10", ts, tp, match);
  }

  {
    auto mg = normalized_haar(pair_groupoid(7), uniform_lambda(*pair_groupoid(7)));
    auto t0 = std::chrono::steady_clock::now();
    GramMatrix serial = reference::gram_serial(mg);
    double ts = ms_since(t0);
    t0 = std::chrono::steady_clock::now();
    GramMatrix parallel = gram(mg);
    double tp = ms_since(t0);
    double dev = 0.0;
    for (std::size_t i = 0; i < serial.entries.size(); ++i)
      dev = std::max(dev, std::abs(serial.entries[i] - parallel.entries[i]));
    row("gram assembly pair:7", ts, tp, dev == 0.0);
  }

  {
    auto mg = normalized_haar(pair_groupoid(3), uniform_lambda(*pair_groupoid(3)));
    auto t0 = std::chrono::steady_clock::now();
    SupportLawAudit serial = reference::support_law_audit_serial(mg);
    double ts = ms_since(t0);
    t0 = std::chrono::steady_clock::now();
    SupportLawAudit parallel = support_law_audit_exhaustive(mg);
    double tp = ms_since(t0);
    bool match = serial.violations == parallel.violations &&
                 serial.pairs_checked == parallel.pairs_checked;
    row("support law pair:3 (exhaustive)", ts, tp, match);
  }

  {
    auto mg = normalized_haar(pair_groupoid(4), uniform_lambda(*pair_groupoid(4)));
    auto t0 = std::chrono::steady_clock::now();
    SupportLawAudit one = support_law_audit_exhaustive(mg, 1);
    double ts = ms_since(t0);
    t0 = std::chrono::steady_clock::now();
    SupportLawAudit parallel = support_law_audit_exhaustive(mg, 0);
    double tp = ms_since(t0);
    bool match = one.violations == parallel.violations &&
                 one.pairs_checked == parallel.pairs_checked;
    row("support law pair:4 (kernel 1T/NT)", ts, tp, match);
  }

  return 0;
}
