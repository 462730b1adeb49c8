// Prints the iteration averages over every bounded poset of size 3 to 9.
#include <iostream>

#include <irank/irank.hpp>

int main() {
    std::vector<irank::Poset> corpus;
    for (std::size_t size = 3; size <= 9; ++size) {
        for (auto& p : irank::enumerate_bounded_posets(size)) {
            corpus.push_back(std::move(p));
        }
    }
    const auto records = irank::run_iteration_experiment(corpus);

    std::cout << "size  count  chain   iterations\n";
    for (const auto& g : irank::aggregate_by(records, irank::GroupKey::size)) {
        std::cout << g.key << "     " << g.count << "  " << irank::format_decimal(g.final_chain_size, 3) << "  "
                  << irank::format_decimal(g.iterations, 3) << "\n";
    }
    std::cout << "\nheight  count  final height\n";
    for (const auto& g : irank::aggregate_by(records, irank::GroupKey::height)) {
        std::cout << g.key << "       " << g.count << "  " << irank::format_decimal(g.final_height, 3) << "\n";
    }
}
