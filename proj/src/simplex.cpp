#include "pclass/simplex.hpp"

#include <ostream>
#include <sstream>

namespace pclass {

std::string Simplex::str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Simplex& s) {
    os << '{';
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) os << ' ';
        os << s[i];
    }
    os << '}';
    return os;
}

int shuffle_sign(const Simplex& a, const Simplex& b) {
    // The inversions of the concatenation (a, b) of two sorted disjoint
    // lists are exactly the pairs (a_i, b_j) with b_j < a_i.
    long inversions = 0;
    std::size_t j = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        while (j < b.size() && b[j] < a[i]) ++j;
        inversions += static_cast<long>(j);
    }
    return (inversions % 2 == 0) ? 1 : -1;
}

}  // namespace pclass
