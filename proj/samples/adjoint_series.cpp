// Prints the stable multiplicity of the adjoint-like K-type ((1),(1)) at node 1
// for a few cyclic quivers, next to its distinguished tuples.

#include <cyclic_quiver/cyclic_quiver.hpp>

#include <iostream>

using namespace cyclic_quiver;

int main()
{
    const int max_degree = 6;
    for (int k = 1; k <= 3; ++k) {
        std::vector<NodeType> nodes(static_cast<std::size_t>(k));
        nodes[0] = {Partition({1}), Partition({1})};
        KType nu(k, nodes);
        std::cout << "k = " << k << ": " << stable_multiplicity(nu, max_degree).to_string() << '\n';
        for (const auto& row : enumerate_distinguished(nu, max_degree))
            std::cout << "    degree " << row.profile.degree << ", lambda_min " << row.profile.lambda_min << '\n';
    }
}
