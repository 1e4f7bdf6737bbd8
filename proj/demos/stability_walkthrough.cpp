// Measures every stability inequality on a near-extremal graph, then breaks
// the structure on purpose and watches the report notice.

#include <cstdio>

#include <specturan/specturan.hpp>

using namespace specturan;

namespace {

void print_report(const char* title, const StabilityReport& rep) {
    std::printf("%s\n", title);
    std::printf("  sides %zu/%zu  cut %lld  within %lld  lambda %.4f  min perron %.4f\n",
                rep.partition.side_S.size(), rep.partition.side_T.size(), rep.partition.cut, rep.partition.within,
                rep.lambda, rep.min_perron_entry);
    std::printf("  heavy set %zu  low-degree set %zu  contains pattern: %s\n", rep.W.size(), rep.L.size(),
                rep.contains_forbidden ? "yes" : "no");
    for (const LemmaGap& gap : rep.gaps)
        std::printf("  %-24s lhs %-12.4f rhs %-12.4f %s\n", gap.name.c_str(), gap.lhs, gap.rhs,
                    gap.holds ? "holds" : "VIOLATED");
}

}  // namespace

int main() {
    FlowerSpec spec(1, {5});

    Graph good = extremal_family_member(1000, 1, 1);
    print_report("conjectured extremal graph, n=1000:", stability_report(good, spec, 0.1));

    // Move 30 vertices' worth of edges to one side: the bipartition degrades
    // and the near-extremal inequalities start failing.
    Graph skew = turan(1000, 2);
    for (int u = 0; u < 30; ++u)
        for (int v = u + 1; v < 30; ++v) skew.add_edge(u, v);
    for (int u = 0; u < 30; ++u)
        for (int v = 500; v < 970; ++v) skew.remove_edge(u, v);
    print_report("\nsame order, structure broken by hand:", stability_report(skew, spec, 0.1));
    return 0;
}
