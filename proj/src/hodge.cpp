#include "fano/hodge.hpp"

#include <numeric>
#include <sstream>

namespace fano {

HodgeDiamond hodge_diamond(int h11, int h21) {
    if (h11 < 1)
        raise(Errc::invalid_argument, "h11 must be >= 1");
    if (h21 < 0)
        raise(Errc::invalid_argument, "h21 must be >= 0");
    return {h11, h21};
}

std::string HodgeDiamond::str() const {
    std::ostringstream os;
    auto row = [&](int pad, std::initializer_list<int> xs) {
        for (int i = 0; i < pad; ++i)
            os << "  ";
        bool first = true;
        for (int x : xs) {
            if (!first)
                os << "  ";
            os << x;
            first = false;
        }
        os << "\n";
    };
    row(3, {1});
    row(2, {0, 0});
    row(1, {0, h11, 0});
    row(0, {0, h21, h21, 0});
    row(1, {0, h11, 0});
    row(2, {0, 0});
    row(3, {1});
    return os.str();
}

PowerSeries milnor_series(const std::vector<int>& weights, int d, int order) {
    std::vector<int> numer;
    numer.reserve(weights.size());
    for (int a : weights) {
        if (d - a < 1)
            raise(Errc::invalid_argument,
                  "degree " + std::to_string(d) + " not above weight " + std::to_string(a));
        numer.push_back(d - a);
    }
    return expand_product_quotient(numer, weights, order);
}

int milnor_order(const std::vector<int>& weights, int d) {
    int sum_a = std::accumulate(weights.begin(), weights.end(), 0);
    return std::max(5 * d - 2 * sum_a, d);
}

int primitive_hodge(const std::vector<int>& weights, int d, int p) {
    if (p < 1 || p > 4)
        raise(Errc::invalid_argument, "p out of range");
    int sum_a = std::accumulate(weights.begin(), weights.end(), 0);
    int k = p * d - sum_a;
    if (k < 0)
        return 0;
    PowerSeries m = milnor_series(weights, d, std::max(k, 0));
    return static_cast<int>(m.coefficient(k).to_integer());
}

int h21_hypersurface(const std::vector<int>& weights, int d) {
    return primitive_hodge(weights, d, 2);
}

} // namespace fano
