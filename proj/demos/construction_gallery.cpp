// Builds one of each named construction and prints its vital signs.

#include <cstdio>

#include <specturan/specturan.hpp>

using namespace specturan;

namespace {

void show(const char* name, const Graph& g) {
    double lam = spectral_radius(g).lambda;
    std::printf("%-28s n=%-4d e=%-6lld lambda=%-10.4f %s\n", name, g.order(),
                static_cast<long long>(g.edge_count()), lam, to_graph6(g).c_str());
}

}  // namespace

int main() {
    show("flower s=2, cycles 5,7", flower(FlowerSpec(2, {7, 5})));
    show("three-fan", flower(FlowerSpec(3, {})));
    show("bouquet 2 x C5", cycle_bouquet(2, 5));
    show("turan T_3(12)", turan(12, 3));
    show("family n=24 s=1 k=1", extremal_family_member(24, 1, 1));
    show("family n=24 s=3 k=1 (3K3)", extremal_family_member(24, 3, 1, FamilyVariant::threeTriangles));
    show("fan-extremal n=25 k=3", fan_extremal(25, 3));
    show("split S_{18,4}", split_graph(18, 4));
    show("petersen", petersen());

    // The planted-clique family hits floor(n^2/4) + (s+k-1)^2 edges on the nose.
    std::printf("\nfamily edge counts, s=1 k=1:\n");
    for (int n = 10; n <= 26; n += 4) {
        Graph g = extremal_family_member(n, 1, 1);
        std::printf("  n=%-3d e=%-4lld = n^2/4 + 1 = %lld\n", n, static_cast<long long>(g.edge_count()),
                    static_cast<long long>(n) * n / 4 + 1);
    }
    return 0;
}
