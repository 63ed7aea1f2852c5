#include "ps12/calculus.hpp"

namespace ps12 {

const std::array<int, 16>& cubic_sigma_order() {
    static const std::array<int, 16> sigma = {1, 2, 3, 4, 5, 12, 13, 14, 6, 11, 16, 7, 15, 10, 8, 9};
    return sigma;
}

}  // namespace ps12
