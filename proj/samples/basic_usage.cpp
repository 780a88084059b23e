// small tour of the library

#include <iostream>

#include "permseq/permseq.hpp"

using namespace permseq;

int main() {
    auto b = parse_basis("1324,1342");
    auto t = count_table(b, 9, 6);
    std::cout << to_markdown(t) << "\n";

    for (auto& e : limit_report(count_table(parse_basis("1324,1243"), 12, 8)))
        std::cout << "k=" << e.k << " limit " << e.value << " from n=" << e.threshold << "\n";

    auto p = parse_permutation("34152");
    FCase c;
    auto img = f_map(p, FPriority::paper, &c);
    std::cout << to_string(p) << " -> " << to_string(img) << " (" << fcase_name(c) << ")\n";

    auto s = named_gf("1324,1342", 10);
    std::cout << "gf:";
    for (int k = 0; k <= 10; ++k) std::cout << " " << s[k];
    std::cout << "\n";
}
