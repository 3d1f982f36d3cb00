// Gate suite: one line of output per criterion, exit status 0 only when
// every selected criterion passes. Run with --criterion N for a single one.

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <exception>

namespace qell::gate {

bool tate_round_trip();        // 1
bool five_torsion_origin();    // 2
bool isogeny_quotients();      // 3
bool level_map_images();       // 4
bool level_map_identities();   // 5
bool cohomology_check();       // 6
bool differential_displays();  // 7
bool divisibility_tables();    // 8
bool chart_leading_terms();    // 9
bool property_suites();        // 10

}  // namespace qell::gate

namespace {

struct Criterion {
  int id;
  const char* name;
  bool (*run)();
};

const Criterion kCriteria[] = {
    {1, "tate normal form round trip", qell::gate::tate_round_trip},
    {2, "five torsion of the origin point", qell::gate::five_torsion_origin},
    {3, "isogeny quotient tables", qell::gate::isogeny_quotients},
    {4, "level map images", qell::gate::level_map_images},
    {5, "level map composition identities", qell::gate::level_map_identities},
    {6, "cohomology relations and ranks", qell::gate::cohomology_check},
    {7, "total differential displays", qell::gate::differential_displays},
    {8, "divisibility bound tables", qell::gate::divisibility_tables},
    {9, "chart leading terms", qell::gate::chart_leading_terms},
    {10, "randomized property suites", qell::gate::property_suites},
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: acceptance [--criterion N]\n");
      return 2;
    }
  }

  bool all_ok = true;
  for (const auto& c : kCriteria) {
    if (only && c.id != only) continue;
    bool ok = false;
    try {
      ok = c.run();
    } catch (const std::exception& e) {
      std::fprintf(stderr, "criterion %d raised: %s\n", c.id, e.what());
    }
    std::printf("criterion %2d (%s): %s\n", c.id, c.name,
                ok ? "PASS" : "FAIL");
    all_ok = all_ok && ok;
  }
  return all_ok ? 0 : 1;
}
